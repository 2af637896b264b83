"""Brute-force homomorphism oracle and related constructions.

This module is the verification backbone: a deliberately simple
backtracking search (no consistency propagation) whose answers are used
to check every structural claim elsewhere in the package.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .ecgraph import Colour, EdgeColouredGraph


@dataclass(frozen=True)
class Homomorphism:
    """A total vertex map G -> H, verifiable edge-by-edge per colour."""

    domain_size: int
    codomain_size: int
    image: tuple

    def __getitem__(self, v: int) -> int:
        return self.image[v]


@dataclass
class SearchStats:
    nodes: int = 0
    backtracks: int = 0
    elapsed: float = 0.0


def verify_homomorphism(
    G: EdgeColouredGraph,
    H: EdgeColouredGraph,
    phi: Union[Homomorphism, Sequence[int]],
) -> bool:
    """True iff phi maps every blue edge of G to a blue edge of H, same red."""
    image = phi.image if isinstance(phi, Homomorphism) else tuple(phi)
    if len(image) != G.n:
        raise ValueError(f"map covers {len(image)} of {G.n} vertices")
    for w in image:
        if not 0 <= w < H.n:
            return False
    for colour in (Colour.BLUE, Colour.RED):
        target = H.edges(colour)
        for u, v in G.edges(colour):
            a, b = image[u], image[v]
            if ((a, b) if a <= b else (b, a)) not in target:
                return False
    return True


def _adjacency_masks(H: EdgeColouredGraph):
    """Per colour, per vertex: bitmask of neighbours (loop -> own bit)."""
    masks = {}
    for colour in (Colour.BLUE, Colour.RED):
        m = [0] * H.n
        for u, v in H.edges(colour):
            m[u] |= 1 << v
            m[v] |= 1 << u
        masks[colour] = m
    return masks


def _search_order(G: EdgeColouredGraph) -> list:
    """BFS order, per component, started from its highest-degree vertex."""
    bcnt, rcnt = G.incident_counts()
    adj = [set() for _ in range(G.n)]
    for colour in (Colour.BLUE, Colour.RED):
        for u, v in G.edges(colour):
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
    seen = [False] * G.n
    order = []
    by_degree = sorted(range(G.n), key=lambda v: (-(bcnt[v] + rcnt[v]), v))
    for root in by_degree:
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def find_homomorphism(
    G: EdgeColouredGraph,
    H: EdgeColouredGraph,
    stats: Optional[SearchStats] = None,
) -> Optional[Homomorphism]:
    """Exhaustive backtracking search for a homomorphism G -> H.

    Candidate images of a vertex are pruned against all already-assigned
    neighbours; the result, when found, always passes verify_homomorphism.
    """
    t0 = time.perf_counter()
    if stats is None:
        stats = SearchStats()
    try:
        if G.n == 0:
            return Homomorphism(0, H.n, ())
        if H.n == 0:
            return None

        masks = _adjacency_masks(H)
        full = (1 << H.n) - 1
        loop_mask = {
            colour: sum(
                1 << u for u, v in H.edges(colour) if u == v
            )
            for colour in (Colour.BLUE, Colour.RED)
        }

        order = _search_order(G)
        pos = {v: i for i, v in enumerate(order)}
        # Per vertex: base mask from self-loops, plus constraints to
        # earlier-ordered neighbours.
        base = [full] * G.n
        earlier = [[] for _ in range(G.n)]
        for colour in (Colour.BLUE, Colour.RED):
            for u, v in G.edges(colour):
                if u == v:
                    base[u] &= loop_mask[colour]
                elif pos[u] < pos[v]:
                    earlier[v].append((u, masks[colour]))
                else:
                    earlier[u].append((v, masks[colour]))

        image = [-1] * G.n

        def assign(p: int) -> bool:
            if p == len(order):
                return True
            v = order[p]
            cand = base[v]
            for u, mask in earlier[v]:
                cand &= mask[image[u]]
            while cand:
                h = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                stats.nodes += 1
                image[v] = h
                if assign(p + 1):
                    return True
            image[v] = -1
            stats.backtracks += 1
            return False

        if assign(0):
            return Homomorphism(G.n, H.n, tuple(image))
        return None
    finally:
        stats.elapsed += time.perf_counter() - t0


def hom_equivalent(G: EdgeColouredGraph, H: EdgeColouredGraph) -> bool:
    """True iff homomorphisms exist in both directions (G ~ H)."""
    return (
        find_homomorphism(G, H) is not None
        and find_homomorphism(H, G) is not None
    )


def categorical_product(
    G: EdgeColouredGraph, H: EdgeColouredGraph
) -> EdgeColouredGraph:
    """Vertex pairs, with a colour-i edge iff both coordinates have one."""
    n = G.n * H.n

    def pair(u: int, a: int) -> int:
        return u * H.n + a

    blue, red = set(), set()
    for colour, out in ((Colour.BLUE, blue), (Colour.RED, red)):
        hedges = H.edges(colour)
        for u, v in G.edges(colour):
            for a, b in hedges:
                for p, q in ((pair(u, a), pair(v, b)), (pair(u, b), pair(v, a))):
                    out.add((p, q) if p <= q else (q, p))
    labels = [
        f"({G.label(u)},{H.label(a)})"
        for u in range(G.n)
        for a in range(H.n)
    ]
    return EdgeColouredGraph(n, blue, red, labels)


def enumerate_graphs(n: int) -> Iterator[EdgeColouredGraph]:
    """Every labelled 2-edge-coloured graph on n vertices, exactly once.

    Each vertex independently carries a subset of {blue loop, red loop}
    and each unordered pair a subset of {blue, red}; the universe has
    size 4**(n + n(n-1)/2), so n is capped at 4.
    """
    if n > 4:
        raise ValueError(f"n={n} too large for exhaustive enumeration")
    slots = [(v, v) for v in range(n)]
    slots += [(u, v) for u in range(n) for v in range(u + 1, n)]
    for choice in itertools.product(range(4), repeat=len(slots)):
        blue = [s for s, c in zip(slots, choice) if c & 1]
        red = [s for s, c in zip(slots, choice) if c & 2]
        yield EdgeColouredGraph(n, blue, red)


def random_graph(
    n: int, blue_p: float, red_p: float, seed: int
) -> EdgeColouredGraph:
    """Independent per-edge/per-loop coin flips; deterministic under seed."""
    for p in (blue_p, red_p):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"probability {p} outside [0, 1]")
    rng = random.Random(seed)
    blue, red = [], []
    for v in range(n):
        if rng.random() < blue_p:
            blue.append((v, v))
        if rng.random() < red_p:
            red.append((v, v))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < blue_p:
                blue.append((u, v))
            if rng.random() < red_p:
                red.append((u, v))
    return EdgeColouredGraph(n, blue, red)
