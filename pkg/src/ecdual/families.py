"""Alternating path families and their dual targets.

The paths F_k^B / F_k^R alternate blue and red; for odd k the variant
names the colour of the middle edge, for even k the two variants are
isomorphic and we canonically colour the first edge with the variant
colour.  The duals D_k live on signed labels -j..j (0 present for odd k)
with blue loops on positives, red loops on negatives, and an edge rs for
every |r| < |s| whose colour is decided by the sign of r (of s when
r = 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Union

from .ecgraph import Colour, EdgeColouredGraph
from .homsolver import Homomorphism, verify_homomorphism

_VARIANTS = ("B", "R")


@dataclass(frozen=True)
class PathId:
    k: int
    variant: str

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"path length must be >= 1, got {self.k}")
        if self.variant not in _VARIANTS:
            raise ValueError(f"variant must be B or R, got {self.variant!r}")

    @property
    def colour(self) -> Colour:
        return Colour.BLUE if self.variant == "B" else Colour.RED

    def __str__(self) -> str:
        return f"F_{self.k}" if self.k % 2 == 0 else f"F_{self.k}^{self.variant}"


@dataclass(frozen=True)
class DualId:
    k: int
    variant: Optional[str] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"dual index must be >= 1, got {self.k}")
        if self.variant is not None:
            if self.variant not in _VARIANTS:
                raise ValueError(
                    f"variant must be B, R or None, got {self.variant!r}"
                )
            if self.k % 2 == 0:
                raise ValueError(f"variant {self.variant} illegal for even k={self.k}")

    def __str__(self) -> str:
        return f"D_{self.k}" if self.variant is None else f"D_{self.k}^{self.variant}"


def dual_labels(k: int) -> List[int]:
    """Signed labels of V(D_k) in ascending order: 2j vertices for even k,
    2j+1 (including 0) for odd k, where j = k // 2."""
    j = k // 2
    labels = list(range(-j, 0))
    if k % 2 == 1:
        labels.append(0)
    labels += list(range(1, j + 1))
    return labels


def path_edge_colour(pid: PathId, t: int) -> Colour:
    """Colour of edge v_t v_{t+1} of make_path(pid)."""
    if not 0 <= t < pid.k:
        raise ValueError(f"edge index {t} out of range for k={pid.k}")
    anchor = pid.k // 2 if pid.k % 2 == 1 else 0
    return pid.colour if (t - anchor) % 2 == 0 else pid.colour.other


def make_path(pid: PathId) -> EdgeColouredGraph:
    """Alternating path v_0..v_k; odd k has the variant colour on the
    middle edge, even k on the first edge (canonical representative)."""
    blue, red = [], []
    for t in range(pid.k):
        (blue if path_edge_colour(pid, t) is Colour.BLUE else red).append(
            (t, t + 1)
        )
    labels = [f"v{t}" for t in range(pid.k + 1)]
    return EdgeColouredGraph(pid.k + 1, blue, red, labels)


def make_dual(did: DualId) -> EdgeColouredGraph:
    labels = dual_labels(did.k)
    index = {lab: i for i, lab in enumerate(labels)}
    blue, red = [], []
    for lab in labels:
        if lab > 0:
            blue.append((index[lab], index[lab]))
        elif lab < 0:
            red.append((index[lab], index[lab]))
    for s in labels:
        for r in labels:
            if abs(r) >= abs(s):
                continue
            positive = r > 0 or (r == 0 and s > 0)
            (blue if positive else red).append((index[r], index[s]))
    if did.variant == "B":
        blue.append((index[0], index[0]))
    elif did.variant == "R":
        red.append((index[0], index[0]))
    return EdgeColouredGraph(
        len(labels), blue, red, [str(lab) for lab in labels]
    )


def make_dual_recursive(k: int) -> EdgeColouredGraph:
    """D_k built by the recursion: start from D_1 or D_2 and repeatedly
    add the pair {-j, j} joined to everything of smaller magnitude."""
    if k < 1:
        raise ValueError(f"dual index must be >= 1, got {k}")
    labels = dual_labels(k)
    index = {lab: i for i, lab in enumerate(labels)}
    blue, red = [], []
    present: List[int] = []
    if k % 2 == 1:
        present.append(0)  # D_1: a single vertex, no edges
    else:
        present += [-1, 1]  # D_2: blue loop on 1, red loop on -1
        blue.append((index[1], index[1]))
        red.append((index[-1], index[-1]))
    j0 = 1 if k % 2 == 1 else 2
    for j in range(j0, k // 2 + 1):
        blue.append((index[j], index[j]))
        red.append((index[-j], index[-j]))
        for v in present:
            if v > 0:
                blue.append((index[v], index[j]))
                blue.append((index[v], index[-j]))
            elif v < 0:
                red.append((index[v], index[j]))
                red.append((index[v], index[-j]))
            else:
                blue.append((index[0], index[j]))
                red.append((index[0], index[-j]))
        present += [-j, j]
    return EdgeColouredGraph(
        len(labels), blue, red, [str(lab) for lab in labels]
    )


def predecessors(did: DualId) -> List[DualId]:
    """Immediate predecessors in the homomorphism order on the duals."""
    if did.variant is not None:
        return [DualId(did.k)]
    if did.k == 1:
        return []
    if did.k % 2 == 0:
        return [DualId(did.k - 1, "B"), DualId(did.k - 1, "R")]
    return [DualId(did.k - 1)]


def _dual_embedding(small: DualId, large: DualId) -> Homomorphism:
    GS, GL = make_dual(small), make_dual(large)
    small_labels = dual_labels(small.k)
    large_index = {lab: i for i, lab in enumerate(dual_labels(large.k))}
    if any(lab not in large_index for lab in small_labels if lab != 0):
        raise ValueError(f"{small} does not embed into {large}")
    jl = large.k // 2
    zero_images = []
    if large.k % 2 == 1:
        zero_images.append(0)
    if jl > small.k // 2:
        zero_images += [jl, -jl]
    candidates = zero_images if 0 in small_labels else [None]
    for z in candidates:
        image = tuple(
            large_index[z if lab == 0 else lab] for lab in small_labels
        )
        if verify_homomorphism(GS, GL, image):
            return Homomorphism(GS.n, GL.n, image)
    raise ValueError(f"{small} does not embed into {large}")


def _path_embedding(small: PathId, large: PathId) -> Homomorphism:
    if large.k != small.k + 1:
        raise ValueError(f"{small} does not embed into {large}")
    GS, GL = make_path(small), make_path(large)
    for shift in (0, 1):
        image = tuple(t + shift for t in range(small.k + 1))
        if verify_homomorphism(GS, GL, image):
            return Homomorphism(GS.n, GL.n, image)
    raise ValueError(f"{small} does not embed into {large}")


def embedding(
    small: Union[DualId, PathId], large: Union[DualId, PathId]
) -> Homomorphism:
    """Injective homomorphism witnessing an inclusion of the subgraph
    chain: identity on signed labels for duals (0 is re-routed to the new
    extreme vertex when the larger dual lacks it), an index shift for
    paths."""
    if isinstance(small, DualId) and isinstance(large, DualId):
        return _dual_embedding(small, large)
    if isinstance(small, PathId) and isinstance(large, PathId):
        return _path_embedding(small, large)
    raise TypeError("embedding requires two PathIds or two DualIds")
