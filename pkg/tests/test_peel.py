import pytest
from hypothesis import given, settings, strategies as st

from ecdual.ecgraph import Colour, EdgeColouredGraph, is_smooth
from ecdual.families import DualId, PathId, make_dual, make_path, predecessors
from ecdual.homsolver import find_homomorphism, random_graph, verify_homomorphism
from ecdual.peel import (
    ClosedAlternatingWalk,
    Mapped,
    NoMap,
    available_kernels,
    build_certificate,
    find_closed_alternating_walk,
    peel,
    solve,
    verify_certificate,
    verify_walk,
    wrap_path,
)

B, R = Colour.BLUE, Colour.RED


def alternating_cycle(length):
    blue = [(i, (i + 1) % length) for i in range(0, length, 2)]
    red = [(i, (i + 1) % length) for i in range(1, length, 2)]
    return EdgeColouredGraph(length, blue, red)


def small_graphs():
    pair = st.tuples(st.integers(0, 5), st.integers(0, 5))
    return st.builds(
        EdgeColouredGraph,
        st.just(6),
        st.sets(pair, max_size=12),
        st.sets(pair, max_size=12),
    )


class TestPeel:
    def test_f2_trace(self):
        trace = peel(make_path(PathId(2, "B")))
        assert trace.iterations == [({0}, {2}, set()), (set(), set(), {1})]
        assert trace.residue.n == 0
        assert trace.red_parent == {1: 2}
        assert trace.blue_parent == {1: 0}

    def test_smooth_graph_all_residue(self):
        G = alternating_cycle(4)
        trace = peel(G)
        assert trace.niter == 0 and trace.iterations == []
        assert trace.residue == G

    def test_single_isolated_vertex(self):
        trace = peel(EdgeColouredGraph(1))
        assert trace.iterations == [(set(), set(), {0})]

    def test_empty_graph(self):
        trace = peel(EdgeColouredGraph(0))
        assert trace.niter == 0 and trace.residue.n == 0

    def test_sets_partition_non_residue(self):
        G = random_graph(30, 0.05, 0.05, 11)
        trace = peel(G)
        seen = set(trace.residue_vertices)
        for B_i, R_i, I_i in trace.iterations:
            for s in (B_i, R_i, I_i):
                assert not (s & seen)
                seen |= s
        assert seen == set(range(G.n))

    def test_parent_invariant(self):
        G = random_graph(40, 0.06, 0.06, 5)
        trace = peel(G)
        its = trace.iterations
        for i in range(2, trace.niter + 1):
            B_i, R_i, I_i = its[i - 1]
            prev_B, prev_R, _ = its[i - 2]
            for v in B_i | I_i:
                assert trace.red_parent[v] in prev_R
            for v in R_i | I_i:
                assert trace.blue_parent[v] in prev_B

    def test_kernels_agree(self):
        if "c" not in available_kernels():
            pytest.skip("compiled kernel unavailable")
        for seed in range(20):
            G = random_graph(25, 0.08, 0.08, seed)
            tc, tp = peel(G, kernel="c"), peel(G, kernel="py")
            assert tc.iter_of == tp.iter_of
            assert tc.cls_of == tp.cls_of
            assert tc._blue_parent_raw == tp._blue_parent_raw
            assert tc._red_parent_raw == tp._red_parent_raw
            assert tc.ops == tp.ops

    def test_iteration_count_bound(self):
        G = make_path(PathId(20, "B"))
        assert peel(G).niter <= G.n


class TestWalkFinder:
    def test_alternating_4_cycle(self):
        G = alternating_cycle(4)
        walk = find_closed_alternating_walk(G)
        assert len(walk) == 4 and verify_walk(G, walk)

    def test_double_loop_vertex(self):
        G = EdgeColouredGraph(1, [(0, 0)], [(0, 0)])
        walk = find_closed_alternating_walk(G)
        assert walk.edges == ((0, 0, B), (0, 0, R))

    def test_parallel_pair(self):
        G = EdgeColouredGraph(2, [(0, 1)], [(0, 1)])
        walk = find_closed_alternating_walk(G)
        assert len(walk) == 2 and verify_walk(G, walk)

    def test_requires_smooth(self):
        with pytest.raises(ValueError):
            find_closed_alternating_walk(make_path(PathId(2, "B")))
        with pytest.raises(ValueError):
            find_closed_alternating_walk(EdgeColouredGraph(0))

    def test_stitch_case(self):
        # both back edges land with the wrong parity: a path of length 2
        # whose ends close via loops
        G = EdgeColouredGraph(
            3, [(0, 1), (2, 2)], [(1, 2), (0, 0)]
        )
        assert is_smooth(G)
        walk = find_closed_alternating_walk(G)
        assert verify_walk(G, walk)

    @settings(max_examples=200)
    @given(small_graphs())
    def test_any_smooth_graph_yields_walk(self, G):
        if G.n == 0 or not is_smooth(G):
            return
        walk = find_closed_alternating_walk(G)
        assert verify_walk(G, walk)


class TestVerifyWalk:
    def test_odd_length_rejected(self):
        G = alternating_cycle(4)
        walk = ClosedAlternatingWalk(((0, 1, B), (1, 2, R), (2, 3, B)))
        assert not verify_walk(G, walk)

    def test_consecutive_same_colour_rejected(self):
        G = EdgeColouredGraph(2, [(0, 1)], [(0, 1)])
        walk = ClosedAlternatingWalk(((0, 1, B), (1, 0, B)))
        assert not verify_walk(G, walk)

    def test_missing_edge_rejected(self):
        G = EdgeColouredGraph(2, [(0, 1)], [])
        walk = ClosedAlternatingWalk(((0, 1, B), (1, 0, R)))
        assert not verify_walk(G, walk)

    def test_disconnected_sequence_rejected(self):
        G = alternating_cycle(4)
        walk = ClosedAlternatingWalk(((0, 1, B), (3, 0, R)))
        assert not verify_walk(G, walk)


class TestSolve:
    def test_single_blue_edge(self):
        G = EdgeColouredGraph(2, [(0, 1)], [])
        result = solve(G)
        assert isinstance(result, Mapped)
        assert result.dual == DualId(1, "B")
        assert result.assignment == (0, 0)
        cert = result.certificate
        assert cert.kind == "single_odd"
        assert cert.maps[0].path == PathId(1, "B")
        assert verify_certificate(G, cert)
        # oracle agrees: G -> D_1^B but not D_1
        assert find_homomorphism(G, make_dual(DualId(1, "B"))) is not None
        assert find_homomorphism(G, make_dual(DualId(1))) is None

    def test_f2(self):
        G = make_path(PathId(2, "B"))
        result = solve(G)
        assert result.dual == DualId(3)
        assert result.assignment == (1, 0, -1)
        assert result.certificate.maps[0].image == (0, 1, 2)
        assert find_homomorphism(G, make_dual(DualId(2))) is None

    def test_smooth_input(self):
        G = EdgeColouredGraph(1, [(0, 0)], [(0, 0)])
        result = solve(G)
        assert isinstance(result, NoMap)
        assert len(result.walk) == 2 and verify_walk(G, result.walk)

    def test_f4_certificate_centred(self):
        G = make_path(PathId(4, "B"))
        result = solve(G)
        assert result.dual == DualId(5)
        assert result.assignment == (1, -2, 0, 2, -1)
        cert_map = result.certificate.maps[0]
        assert cert_map.path.k == 4
        assert cert_map.image[2] == 2  # centre vertex maps to itself
        assert verify_certificate(G, result.certificate)

    def test_f10_dual(self):
        result = solve(make_path(PathId(10, "B")))
        assert result.dual == DualId(11)
        assert verify_certificate(make_path(PathId(10, "B")), result.certificate)

    def test_edgeless_graph(self):
        G = EdgeColouredGraph(3)
        result = solve(G)
        assert result.dual == DualId(1)
        assert result.assignment == (0, 0, 0)
        assert result.certificate.kind == "single_even"
        assert result.certificate.maps[0].path is None
        assert verify_certificate(G, result.certificate)

    def test_empty_graph(self):
        result = solve(EdgeColouredGraph(0))
        assert result.dual == DualId(1)
        assert result.assignment == ()
        assert result.certificate.maps == ()

    def test_even_dual_pair_certificate(self):
        # blue edge and red edge sharing nothing: both B_1 and R_1 nonempty
        G = EdgeColouredGraph(4, [(0, 1)], [(2, 3)])
        result = solve(G)
        assert result.dual == DualId(2)
        cert = result.certificate
        assert cert.kind == "pair"
        assert {m.path for m in cert.maps} == {PathId(1, "R"), PathId(1, "B")}
        assert verify_certificate(G, cert)

    def test_disconnected_components_take_maximum_dual(self):
        # F_2 (needs D_3) next to a single blue edge (needs D_1^B)
        F2 = make_path(PathId(2, "B"))
        G = EdgeColouredGraph(5, list(F2.blue) + [(3, 4)], list(F2.red))
        result = solve(G)
        assert result.dual == DualId(3)
        assert verify_homomorphism(G, make_dual(DualId(3)), result.homomorphism())
        for pred in predecessors(result.dual):
            assert find_homomorphism(G, make_dual(pred)) is None

    def test_nomap_walk_in_original_indices(self):
        # path hanging off a smooth core: residue vertices are renumbered back
        cyc = alternating_cycle(4)
        G = EdgeColouredGraph(
            6, list(cyc.blue) + [(4, 5)], list(cyc.red) + [(0, 4)]
        )
        result = solve(G)
        assert isinstance(result, NoMap)
        assert verify_walk(G, result.walk)
        assert set().union(*[{u, v} for u, v, _ in result.walk.edges]) <= {0, 1, 2, 3}

    @settings(max_examples=150, deadline=None)
    @given(small_graphs())
    def test_solve_soundness_property(self, G):
        result = solve(G)
        if isinstance(result, Mapped):
            assert verify_homomorphism(
                G, make_dual(result.dual), result.homomorphism()
            )
            assert verify_certificate(G, result.certificate)
            for pred in predecessors(result.dual):
                assert find_homomorphism(G, make_dual(pred)) is None
        else:
            assert verify_walk(G, result.walk)

    def test_walk_wrapping(self):
        G = alternating_cycle(6)
        result = solve(G)
        for k in range(1, 2 * len(result.walk) + 1):
            for variant in ("B", "R"):
                pid = PathId(k, variant)
                image = wrap_path(result.walk, pid)
                assert verify_homomorphism(make_path(pid), G, image)


class TestBuildCertificate:
    def test_inconsistent_case_rejected(self):
        G = make_path(PathId(2, "B"))
        trace = peel(G)
        with pytest.raises(ValueError):
            build_certificate(G, trace, DualId(3, "B"))

    def test_residue_rejected(self):
        G = alternating_cycle(4)
        with pytest.raises(ValueError):
            build_certificate(G, peel(G), DualId(1))

    def test_lowest_index_tie_break(self):
        # two isolated vertices in the last round: certificate picks vertex 0
        G = EdgeColouredGraph(2)
        result = solve(G)
        assert result.certificate.maps[0].image == (0,)
