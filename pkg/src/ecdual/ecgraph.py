"""2-edge-coloured graphs: representation, vertex classification, text/DOT I/O.

A 2-edge-coloured graph is a vertex set together with two edge sets, blue
and red.  Loops are allowed, and two vertices may be joined by parallel
edges provided the colours differ.  Vertices are dense integer indices
``0..n-1``; optional string labels ride along for I/O only and are ignored
by equality.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx

Edge = Tuple[int, int]


class Colour(Enum):
    BLUE = "blue"
    RED = "red"

    @property
    def other(self) -> "Colour":
        return Colour.RED if self is Colour.BLUE else Colour.BLUE

    def __str__(self) -> str:
        return self.value


class VertexClass(Enum):
    MIXED = "mixed"
    BLUE_ONLY = "blue_only"
    RED_ONLY = "red_only"
    ISOLATED = "isolated"


class GraphFormatError(ValueError):
    """Malformed graph text; the message carries the offending line number."""


class EdgeColouredGraph:
    """Immutable 2-edge-coloured graph on vertices ``0..n-1``.

    Edges are stored as canonical unordered pairs ``(min, max)``, one
    frozenset per colour, so a same-colour pair can appear at most once
    while a blue/red parallel pair is representable.
    """

    __slots__ = ("n", "blue", "red", "labels", "_bcnt", "_rcnt")

    def __init__(
        self,
        n: int,
        blue_edges: Iterable[Edge] = (),
        red_edges: Iterable[Edge] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.blue = _canonical(n, blue_edges, "blue")
        self.red = _canonical(n, red_edges, "red")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
        self.labels = labels
        self._bcnt: Optional[list] = None
        self._rcnt: Optional[list] = None

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def edges(self, colour: Colour) -> frozenset:
        return self.blue if colour is Colour.BLUE else self.red

    def incident_counts(self) -> Tuple[list, list]:
        """Per-vertex counts of incident blue/red edges; a loop counts once."""
        if self._bcnt is None:
            bcnt = [0] * self.n
            rcnt = [0] * self.n
            for u, v in self.blue:
                bcnt[u] += 1
                if v != u:
                    bcnt[v] += 1
            for u, v in self.red:
                rcnt[u] += 1
                if v != u:
                    rcnt[v] += 1
            self._bcnt, self._rcnt = bcnt, rcnt
        return self._bcnt, self._rcnt

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColouredGraph):
            return NotImplemented
        return (self.n, self.blue, self.red) == (other.n, other.blue, other.red)

    def __hash__(self) -> int:
        return hash((self.n, self.blue, self.red))

    def __repr__(self) -> str:
        return (
            f"EdgeColouredGraph(n={self.n}, "
            f"blue={sorted(self.blue)}, red={sorted(self.red)})"
        )


def _canonical(n: int, edges: Iterable[Edge], colour: str) -> frozenset:
    out = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"{colour} edge ({u}, {v}) out of range for n={n}")
        out.add((u, v) if u <= v else (v, u))
    return frozenset(out)


def classify_vertex(G: EdgeColouredGraph, v: int) -> VertexClass:
    """Classify ``v`` as mixed, blue-only, red-only or isolated."""
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} out of range for n={G.n}")
    bcnt, rcnt = G.incident_counts()
    b, r = bcnt[v], rcnt[v]
    if b and r:
        return VertexClass.MIXED
    if b:
        return VertexClass.BLUE_ONLY
    if r:
        return VertexClass.RED_ONLY
    return VertexClass.ISOLATED


def is_smooth(G: EdgeColouredGraph) -> bool:
    """True iff every vertex is mixed.  The empty graph is smooth vacuously."""
    bcnt, rcnt = G.incident_counts()
    return all(b and r for b, r in zip(bcnt, rcnt))


def underlying_graph(G: EdgeColouredGraph) -> nx.Graph:
    """The uncoloured simple graph: colours dropped, parallel edges merged."""
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.blue)
    H.add_edges_from(G.red)
    return H


def induced_subgraph(
    G: EdgeColouredGraph, vertices: Sequence[int]
) -> EdgeColouredGraph:
    """Subgraph induced on ``vertices``; result vertex i is ``vertices[i]``."""
    pos = {v: i for i, v in enumerate(vertices)}
    blue = [
        (pos[u], pos[v]) for u, v in G.blue if u in pos and v in pos
    ]
    red = [
        (pos[u], pos[v]) for u, v in G.red if u in pos and v in pos
    ]
    labels = [G.label(v) for v in vertices]
    return EdgeColouredGraph(len(vertices), blue, red, labels)


_COLOUR_TOKENS = {"blue": Colour.BLUE, "red": Colour.RED}


def parse_graph(text: str) -> EdgeColouredGraph:
    """Parse the line-oriented text format.

    ``v <label>`` declares a vertex (required only for isolated vertices),
    ``e <label> <label> blue|red`` declares an edge, ``#`` starts a
    comment.  Raises GraphFormatError with a line number on bad input.
    """
    labels: list = []
    index: dict = {}
    edges = {Colour.BLUE: set(), Colour.RED: set()}

    def intern(name: str) -> int:
        if name not in index:
            index[name] = len(labels)
            labels.append(name)
        return index[name]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'v <label>'")
            intern(parts[1])
        elif parts[0] == "e":
            if len(parts) != 4:
                raise GraphFormatError(
                    f"line {lineno}: expected 'e <label> <label> blue|red'"
                )
            colour = _COLOUR_TOKENS.get(parts[3])
            if colour is None:
                raise GraphFormatError(
                    f"line {lineno}: unknown colour {parts[3]!r}"
                )
            u, v = intern(parts[1]), intern(parts[2])
            pair = (u, v) if u <= v else (v, u)
            if pair in edges[colour]:
                raise GraphFormatError(
                    f"line {lineno}: duplicate {colour} edge "
                    f"{parts[1]} {parts[2]}"
                )
            edges[colour].add(pair)
        else:
            raise GraphFormatError(
                f"line {lineno}: unknown directive {parts[0]!r}"
            )
    return EdgeColouredGraph(
        len(labels), edges[Colour.BLUE], edges[Colour.RED], labels
    )


def serialize_graph(G: EdgeColouredGraph) -> str:
    """Inverse of parse_graph (up to label-preserving vertex renumbering)."""
    lines = []
    for v in range(G.n):
        label = G.label(v)
        if not label or any(ch.isspace() for ch in label):
            raise ValueError(f"label {label!r} is not serializable")
        lines.append(f"v {label}")
    for colour in (Colour.BLUE, Colour.RED):
        for u, v in sorted(G.edges(colour)):
            lines.append(f"e {G.label(u)} {G.label(v)} {colour}")
    return "\n".join(lines) + "\n"


def emit_dot(
    G: EdgeColouredGraph, annotation: Optional[Sequence[object]] = None
) -> str:
    """Render as DOT: blue edges solid, red edges dashed.

    If ``annotation`` is given (one entry per vertex, e.g. a homomorphism
    image), each vertex label is suffixed with its entry.
    """
    if annotation is not None and len(annotation) != G.n:
        raise ValueError(
            f"annotation has {len(annotation)} entries for {G.n} vertices"
        )
    lines = ["graph G {"]
    for v in range(G.n):
        label = G.label(v)
        if annotation is not None:
            label = f"{label}->{annotation[v]}"
        lines.append(f'  {v} [label="{label}"];')
    for colour, style in ((Colour.BLUE, "solid"), (Colour.RED, "dashed")):
        for u, v in sorted(G.edges(colour)):
            lines.append(f"  {u} -- {v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
