"""Alternating-path duality for 2-edge-coloured graph homomorphisms."""

from .ecgraph import (
    Colour,
    EdgeColouredGraph,
    GraphFormatError,
    VertexClass,
    classify_vertex,
    emit_dot,
    is_smooth,
    parse_graph,
    serialize_graph,
    underlying_graph,
)
from .families import (
    DualId,
    PathId,
    embedding,
    make_dual,
    make_dual_recursive,
    make_path,
    predecessors,
)
from .homsolver import (
    Homomorphism,
    SearchStats,
    categorical_product,
    enumerate_graphs,
    find_homomorphism,
    hom_equivalent,
    random_graph,
    verify_homomorphism,
)
from .peel import (
    Certificate,
    CertificateMap,
    ClosedAlternatingWalk,
    Mapped,
    NoMap,
    PeelTrace,
    SolveResult,
    available_kernels,
    build_certificate,
    default_kernel,
    find_closed_alternating_walk,
    peel,
    solve,
    verify_certificate,
    verify_walk,
    wrap_path,
)

__version__ = "0.1.0"
