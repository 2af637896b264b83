"""The duality algorithm: iterative peeling, minimal-dual post-processing,
certificate construction, and closed-alternating-walk extraction.

Peeling repeatedly classifies the remaining vertices, deletes everything
that is not mixed, and records for each deleted vertex a parent whose
removal in the previous round stripped it of a colour.  If the process
stalls on a nonempty (hence smooth) residue, the residue yields a closed
alternating walk; otherwise the per-iteration indices assemble into a
homomorphism onto the minimal dual, and the parent chains into a
certificate that no smaller dual admits the graph.

The inner loop runs on a compiled kernel when the extension module built
from _peel_core.pyx is importable, and on the pure-Python twin in
_peel_py otherwise; both produce identical output including the
operation counter.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from .ecgraph import Colour, EdgeColouredGraph, induced_subgraph, is_smooth
from .families import DualId, PathId, make_path
from .homsolver import Homomorphism, verify_homomorphism
from ._peel_py import peel_csr as _python_kernel

try:
    from ._peel_core import peel_csr as _compiled_kernel
except ImportError:  # extension not built; fall back to pure Python
    _compiled_kernel = None

_BLUE_ONLY, _RED_ONLY, _ISOLATED = 0, 1, 2


def available_kernels() -> List[str]:
    return ["py"] if _compiled_kernel is None else ["c", "py"]


def default_kernel() -> str:
    return "py" if _compiled_kernel is None else "c"


def _resolve_kernel(name: Optional[str]):
    if name in (None, "auto"):
        name = default_kernel()
    if name == "py":
        return _python_kernel, "py"
    if name == "c":
        if _compiled_kernel is None:
            raise RuntimeError("compiled peel kernel is not available")
        return _compiled_kernel, "c"
    raise ValueError(f"unknown kernel {name!r}")


def _build_csr(G: EdgeColouredGraph):
    """Half-edge CSR: loops once, other edges in both endpoint slices.
    Adjacency is sorted (blue before red, then by edge) for determinism."""
    n = G.n
    srcs, dsts, cols = [], [], []
    for edges, code in ((G.blue, 0), (G.red, 1)):
        if not edges:
            continue
        e = np.fromiter(
            (x for pair in edges for x in pair), dtype=np.int64,
            count=2 * len(edges),
        ).reshape(-1, 2)
        e = e[np.lexsort((e[:, 1], e[:, 0]))]
        u, v = e[:, 0], e[:, 1]
        srcs.append(u)
        dsts.append(v)
        cols.append(np.full(len(u), code, dtype=np.int64))
        nonloop = u != v
        srcs.append(v[nonloop])
        dsts.append(u[nonloop])
        cols.append(np.full(int(nonloop.sum()), code, dtype=np.int64))
    if not srcs:
        return (
            np.zeros(n + 1, dtype=np.int64),
            np.zeros(0, dtype=np.int64),
            np.zeros(0, dtype=np.int64),
        )
    src = np.concatenate(srcs)
    dst = np.concatenate(dsts)
    col = np.concatenate(cols)
    order = np.argsort(src, kind="stable")
    src, dst, col = src[order], dst[order], col[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, np.ascontiguousarray(dst), np.ascontiguousarray(col)


class PeelTrace:
    """Full execution record of the peeling loop.

    iterations[i-1] holds the sets (B_i, R_i, I_i); the parent maps give,
    for each peeled vertex, a neighbour peeled in the previous iteration
    through a blue (resp. red) edge; residue is the smooth subgraph left
    behind when the loop stalls (empty otherwise).
    """

    def __init__(
        self,
        n: int,
        iter_of: Sequence[int],
        cls_of: Sequence[int],
        blue_parent_raw: Sequence[int],
        red_parent_raw: Sequence[int],
        niter: int,
        ops: int,
        residue: EdgeColouredGraph,
        residue_vertices: Tuple[int, ...],
        kernel: str,
    ):
        self.n = n
        self.iter_of = list(iter_of)
        self.cls_of = list(cls_of)
        self._blue_parent_raw = list(blue_parent_raw)
        self._red_parent_raw = list(red_parent_raw)
        self.niter = niter
        self.ops = ops
        self.residue = residue
        self.residue_vertices = residue_vertices
        self.kernel = kernel

    @cached_property
    def iterations(self) -> List[Tuple[Set[int], Set[int], Set[int]]]:
        out = [(set(), set(), set()) for _ in range(self.niter)]
        for v in range(self.n):
            i = self.iter_of[v]
            if i:
                out[i - 1][self.cls_of[v]].add(v)
        return out

    def iteration_sets(self, i: int) -> Tuple[Set[int], Set[int], Set[int]]:
        """(B_i, R_i, I_i) for one iteration, without materializing all."""
        if not 1 <= i <= self.niter:
            raise IndexError(f"iteration {i} out of range")
        out: Tuple[Set[int], Set[int], Set[int]] = (set(), set(), set())
        iter_of, cls_of = self.iter_of, self.cls_of
        for v in range(self.n):
            if iter_of[v] == i:
                out[cls_of[v]].add(v)
        return out

    @cached_property
    def blue_parent(self) -> Dict[int, int]:
        return {
            v: self._blue_parent_raw[v]
            for v in range(self.n)
            if self.iter_of[v] > 1
            and self.cls_of[v] in (_RED_ONLY, _ISOLATED)
        }

    @cached_property
    def red_parent(self) -> Dict[int, int]:
        return {
            v: self._red_parent_raw[v]
            for v in range(self.n)
            if self.iter_of[v] > 1
            and self.cls_of[v] in (_BLUE_ONLY, _ISOLATED)
        }


def peel(G: EdgeColouredGraph, kernel: Optional[str] = None) -> PeelTrace:
    """Run the peeling loop; linear in |V| + |E|."""
    kern, name = _resolve_kernel(kernel)
    indptr, nbr, col = _build_csr(G)
    iter_of, cls_of, bpar, rpar, niter, ops = kern(G.n, indptr, nbr, col)
    residue_vertices = tuple(v for v in range(G.n) if iter_of[v] == 0)
    if residue_vertices:
        residue = induced_subgraph(G, residue_vertices)
    else:
        residue = EdgeColouredGraph(0)
    return PeelTrace(
        G.n, iter_of, cls_of, bpar, rpar, niter, ops,
        residue, residue_vertices, name,
    )


@dataclass(frozen=True)
class ClosedAlternatingWalk:
    """Cyclic edge sequence of even length, colours alternating around the
    wrap; edges are oriented so each ends where the next begins."""

    edges: Tuple[Tuple[int, int, Colour], ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CertificateMap:
    """Homomorphism from a path family member into G; path is None for the
    degenerate single-vertex path used by the D_1 certificate."""

    path: Optional[PathId]
    image: Tuple[int, ...]


@dataclass(frozen=True)
class Certificate:
    kind: str  # "single_even", "single_odd" or "pair"
    maps: Tuple[CertificateMap, ...]


@dataclass(frozen=True)
class Mapped:
    dual: DualId
    assignment: Tuple[int, ...]  # vertex -> signed dual label
    certificate: Certificate
    trace: PeelTrace

    def homomorphism(self) -> Homomorphism:
        """The assignment as an index map into make_dual(self.dual)."""
        from .families import dual_labels

        index = {lab: i for i, lab in enumerate(dual_labels(self.dual.k))}
        target_n = len(index)
        return Homomorphism(
            len(self.assignment),
            target_n,
            tuple(index[s] for s in self.assignment),
        )


@dataclass(frozen=True)
class NoMap:
    walk: ClosedAlternatingWalk
    trace: PeelTrace


SolveResult = Union[Mapped, NoMap]


def _colour_adjacency(G: EdgeColouredGraph):
    adj = {Colour.BLUE: [[] for _ in range(G.n)],
           Colour.RED: [[] for _ in range(G.n)]}
    for colour in (Colour.BLUE, Colour.RED):
        rows = adj[colour]
        for u, v in sorted(G.edges(colour)):
            rows[u].append(v)
            if v != u:
                rows[v].append(u)
    for colour in (Colour.BLUE, Colour.RED):
        for row in adj[colour]:
            row.sort()
    return adj


def find_closed_alternating_walk(G: EdgeColouredGraph) -> ClosedAlternatingWalk:
    """Extract a closed alternating walk from a smooth, nonempty graph.

    Grows a maximal alternating path greedily (lowest start vertex, blue
    preferred for the first edge), then closes it: an opposite-colour
    edge from either end back into the path of the right parity yields an
    alternating cycle, and otherwise the two back edges stitch the whole
    path into a closed walk.
    """
    if G.n == 0:
        raise ValueError("graph is empty")
    if not is_smooth(G):
        raise ValueError("graph is not smooth")
    adj = _colour_adjacency(G)

    start = 0
    path = [start]
    on_path = {start}
    edge_cols: List[Colour] = []

    # first edge: prefer blue, then red, to a fresh vertex
    for c in (Colour.BLUE, Colour.RED):
        nxt = next((w for w in adj[c][start] if w not in on_path), None)
        if nxt is not None:
            path.append(nxt)
            on_path.add(nxt)
            edge_cols.append(c)
            break
    if not edge_cols:
        # only loops at the start vertex; smoothness gives one of each colour
        return ClosedAlternatingWalk(
            ((start, start, Colour.BLUE), (start, start, Colour.RED))
        )

    # extend forward, then backward, until maximal at both ends
    while True:
        c = edge_cols[-1].other
        nxt = next((w for w in adj[c][path[-1]] if w not in on_path), None)
        if nxt is None:
            break
        path.append(nxt)
        on_path.add(nxt)
        edge_cols.append(c)
    while True:
        c = edge_cols[0].other
        prv = next((w for w in adj[c][path[0]] if w not in on_path), None)
        if prv is None:
            break
        path.insert(0, prv)
        on_path.add(prv)
        edge_cols.insert(0, c)

    t = len(path) - 1
    pos = {v: i for i, v in enumerate(path)}

    def path_edge(m: int) -> Tuple[int, int, Colour]:
        return (path[m], path[m + 1], edge_cols[m])

    # back edge at the front
    c_front = edge_cols[0].other
    front = sorted(pos[w] for w in adj[c_front][path[0]])
    odd = [i for i in front if i % 2 == 1]
    if odd:
        i = odd[0]
        edges = [path_edge(m) for m in range(i)] + [(path[i], path[0], c_front)]
        return ClosedAlternatingWalk(tuple(edges))
    i = front[0]

    # back edge at the rear
    c_rear = edge_cols[-1].other
    rear = sorted(pos[w] for w in adj[c_rear][path[t]])
    opp = [j for j in rear if (j - t) % 2 == 1]
    if opp:
        j = opp[0]
        edges = [path_edge(m) for m in range(j, t)] + [(path[t], path[j], c_rear)]
        return ClosedAlternatingWalk(tuple(edges))
    j = rear[0]

    # stitch: front back edge, forward run, rear back edge, reverse run
    edges = [(path[0], path[i], c_front)]
    edges += [path_edge(m) for m in range(i, t)]
    edges.append((path[t], path[j], c_rear))
    edges += [
        (path[m + 1], path[m], edge_cols[m]) for m in range(j - 1, -1, -1)
    ]
    return ClosedAlternatingWalk(tuple(edges))


def verify_walk(G: EdgeColouredGraph, walk: ClosedAlternatingWalk) -> bool:
    """Check the closed-alternating-walk invariants against G."""
    edges = walk.edges
    L = len(edges)
    if L < 2 or L % 2 != 0:
        return False
    for m in range(L):
        u, v, c = edges[m]
        nu, _, nc = edges[(m + 1) % L]
        if v != nu or nc is c:
            return False
        pair = (u, v) if u <= v else (v, u)
        if pair not in G.edges(c):
            return False
    return True


def wrap_path(walk: ClosedAlternatingWalk, pid: PathId) -> Tuple[int, ...]:
    """Image of make_path(pid) wound around the walk (colour-aligned)."""
    from .families import path_edge_colour

    edges = walk.edges
    L = len(edges)
    offset = 0 if edges[0][2] is path_edge_colour(pid, 0) else 1
    return tuple(edges[(offset + t) % L][0] for t in range(pid.k + 1))


def _chain(trace: PeelTrace, u: int, first: Colour) -> List[int]:
    """Parent chain from u down to iteration 1: one vertex per earlier
    iteration, edge colours alternating starting with `first`."""
    chain = [u]
    cur = u
    parents = (trace._blue_parent_raw, trace._red_parent_raw)
    step = 0 if first is Colour.BLUE else 1
    for _ in range(trace.iter_of[u] - 1):
        cur = parents[step][cur]
        chain.append(cur)
        step ^= 1
    return chain


def _pick_edge(G: EdgeColouredGraph, colour: Colour, members: Set[int]):
    """Lowest canonical edge of the given colour inside `members`."""
    pool = [
        (u, v)
        for u, v in G.edges(colour)
        if u in members and v in members
    ]
    return min(pool)


def _splice_map(
    G: EdgeColouredGraph, trace: PeelTrace, colour: Colour, members: Set[int]
) -> CertificateMap:
    """Certificate map F_{2i-1}^c -> G: two opposite-colour parent chains
    spliced across a colour-c edge in the final iteration's c-only set."""
    i = trace.niter
    u, v = _pick_edge(G, colour, members)
    chain_u = _chain(trace, u, colour.other)
    chain_v = _chain(trace, v, colour.other)
    vertices = list(reversed(chain_u)) + chain_v
    variant = "B" if colour is Colour.BLUE else "R"
    return CertificateMap(PathId(2 * i - 1, variant), tuple(vertices))


def build_certificate(
    G: EdgeColouredGraph, trace: PeelTrace, case: DualId
) -> Certificate:
    """Certificate of minimality for the Step-3 branch named by `case`."""
    if trace.residue.n:
        raise ValueError("trace has a nonempty residue")
    i = trace.niter
    if i == 0:
        if case != DualId(1):
            raise ValueError(f"empty trace is inconsistent with case {case}")
        return Certificate("single_even", ())
    B_i, R_i, I_i = trace.iteration_sets(i)

    if case == DualId(2 * i - 1):
        if B_i or R_i:
            raise ValueError(f"case {case} requires empty B_i and R_i")
        u = min(I_i)
        if i == 1:
            return Certificate(
                "single_even", (CertificateMap(None, (u,)),)
            )
        blue_chain = _chain(trace, u, Colour.BLUE)
        red_chain = _chain(trace, u, Colour.RED)
        vertices = list(reversed(blue_chain)) + red_chain[1:]
        variant = "B" if i % 2 == 0 else "R"  # colour of the first edge
        return Certificate(
            "single_even",
            (CertificateMap(PathId(2 * i - 2, variant), tuple(vertices)),),
        )
    if case == DualId(2 * i - 1, "B"):
        if R_i or not B_i:
            raise ValueError(f"case {case} requires B_i nonempty, R_i empty")
        return Certificate(
            "single_odd", (_splice_map(G, trace, Colour.BLUE, B_i),)
        )
    if case == DualId(2 * i - 1, "R"):
        if B_i or not R_i:
            raise ValueError(f"case {case} requires R_i nonempty, B_i empty")
        return Certificate(
            "single_odd", (_splice_map(G, trace, Colour.RED, R_i),)
        )
    if case == DualId(2 * i):
        if not B_i or not R_i:
            raise ValueError(f"case {case} requires B_i and R_i nonempty")
        return Certificate(
            "pair",
            (
                _splice_map(G, trace, Colour.RED, R_i),
                _splice_map(G, trace, Colour.BLUE, B_i),
            ),
        )
    raise ValueError(f"case {case} is inconsistent with a {i}-iteration trace")


def verify_certificate(G: EdgeColouredGraph, cert: Certificate) -> bool:
    """Each contained map must verify against its stated path."""
    for m in cert.maps:
        if m.path is None:
            if len(m.image) != 1 or not 0 <= m.image[0] < G.n:
                return False
        elif not verify_homomorphism(make_path(m.path), G, m.image):
            return False
    return True


def solve(G: EdgeColouredGraph, kernel: Optional[str] = None) -> SolveResult:
    """Map G onto the minimal dual admitting it, with a certificate, or
    produce a closed alternating walk showing no dual admits it."""
    trace = peel(G, kernel)
    if trace.residue.n:
        sub = find_closed_alternating_walk(trace.residue)
        back = trace.residue_vertices
        edges = tuple((back[u], back[v], c) for u, v, c in sub.edges)
        return NoMap(ClosedAlternatingWalk(edges), trace)

    if G.n == 0:
        return Mapped(DualId(1), (), Certificate("single_even", ()), trace)

    i = trace.niter
    B_i, R_i, I_i = trace.iteration_sets(i)
    assignment = [
        trace.iter_of[v] if trace.cls_of[v] != _RED_ONLY else -trace.iter_of[v]
        for v in range(G.n)
    ]
    if not B_i and not R_i:
        dual = DualId(2 * i - 1)
        zero = I_i
    elif not R_i:
        dual = DualId(2 * i - 1, "B")
        zero = B_i | I_i
    elif not B_i:
        dual = DualId(2 * i - 1, "R")
        zero = R_i | I_i
    else:
        dual = DualId(2 * i)
        zero = set()
    for v in zero:
        assignment[v] = 0
    cert = build_certificate(G, trace, dual)
    return Mapped(dual, tuple(assignment), cert, trace)
