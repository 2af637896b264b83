"""Batch verification campaigns tying the peeling algorithm to the oracle.

Each campaign returns a CampaignReport whose failures, if any, carry a
serialized counterexample that replays to the same failure.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .ecgraph import EdgeColouredGraph, serialize_graph
from .families import DualId, PathId, make_dual, make_path, predecessors
from .homsolver import enumerate_graphs, find_homomorphism, hom_equivalent, \
    categorical_product, random_graph, verify_homomorphism
from .peel import Mapped, NoMap, solve, verify_certificate, verify_walk, \
    wrap_path


@dataclass
class CampaignReport:
    name: str
    params: Dict[str, object]
    cases: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)
    wall_time: float = 0.0
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, description: str, G: Optional[EdgeColouredGraph] = None):
        self.failures.append(
            (description, serialize_graph(G) if G is not None else "")
        )

    def to_text(self) -> str:
        lines = [f"campaign {self.name}"]
        for key, value in self.params.items():
            lines.append(f"param {key}={value}")
        lines.append(f"cases {self.cases}")
        lines.append(f"failures {len(self.failures)}")
        lines.append(f"wall_time {self.wall_time:.3f}")
        for key, value in self.details.items():
            lines.append(f"detail {key}={value}")
        for description, graph in self.failures:
            lines.append(f"FAIL {description}")
            for gl in graph.splitlines():
                lines.append(f"  | {gl}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "campaign": self.name,
                "params": self.params,
                "cases": self.cases,
                "failures": [
                    {"description": d, "graph": g} for d, g in self.failures
                ],
                "wall_time": self.wall_time,
                "details": self.details,
                "passed": self.passed,
            },
            indent=2,
        )


def dual_chain(max_index: int) -> List[DualId]:
    """Linear extension of the homomorphism order on duals up to D_max."""
    out: List[DualId] = []
    for k in range(1, max_index + 1):
        out.append(DualId(k))
        if k % 2 == 1:
            out.append(DualId(k, "B"))
            out.append(DualId(k, "R"))
    return out


def minimal_dual_via_oracle(
    G: EdgeColouredGraph, max_index: int
) -> Optional[DualId]:
    """First (hence minimum) dual admitting G in the chain order."""
    for did in dual_chain(max_index):
        if find_homomorphism(G, make_dual(did)) is not None:
            return did
    return None


def _path_ids(k: int) -> List[PathId]:
    return [PathId(k, "B"), PathId(k, "R")]


def check_duality_exhaustive(n: int = 3, k: int = 6) -> CampaignReport:
    """Path/dual duality equivalences plus solve-vs-oracle agreement on
    every labelled graph with n vertices."""
    if n > 3:
        raise ValueError(f"n={n} is infeasible for the exhaustive campaign")
    report = CampaignReport("exhaustive", {"n": n, "k": k})
    t0 = time.perf_counter()
    duals = {did: make_dual(did) for did in dual_chain(max(k, 2 * n))}
    paths = {
        pid: make_path(pid) for kk in range(1, k + 1) for pid in _path_ids(kk)
    }
    for G in enumerate_graphs(n):
        report.cases += 1
        for kk in range(1, k + 1):
            f_hits = {
                pid.variant: find_homomorphism(paths[pid], G) is not None
                for pid in _path_ids(kk)
            }
            to_dk = find_homomorphism(G, duals[DualId(kk)]) is not None
            if to_dk != (not any(f_hits.values())):
                report.fail(f"duality (either variant) violated at k={kk}", G)
            if kk % 2 == 0 and to_dk != (not f_hits["B"]):
                report.fail(f"even-k duality violated at k={kk}", G)
            if kk % 2 == 1:
                to_b = find_homomorphism(G, duals[DualId(kk, "B")]) is not None
                to_r = find_homomorphism(G, duals[DualId(kk, "R")]) is not None
                if to_b != (not f_hits["R"]):
                    report.fail(f"blue-variant duality violated at k={kk}", G)
                if to_r != (not f_hits["B"]):
                    report.fail(f"red-variant duality violated at k={kk}", G)
        result = solve(G)
        oracle_min = minimal_dual_via_oracle(G, 2 * n)
        if isinstance(result, Mapped):
            if oracle_min != result.dual:
                report.fail(
                    f"solve chose {result.dual}, oracle minimum {oracle_min}", G
                )
            if not verify_homomorphism(
                G, make_dual(result.dual), result.homomorphism()
            ):
                report.fail(f"solve map into {result.dual} invalid", G)
            if not verify_certificate(G, result.certificate):
                report.fail(f"certificate for {result.dual} invalid", G)
        else:
            if oracle_min is not None:
                report.fail(
                    f"solve says no dual, oracle found {oracle_min}", G
                )
            if not verify_walk(G, result.walk):
                report.fail("closed alternating walk invalid", G)
    report.wall_time = time.perf_counter() - t0
    return report


def audit_random(
    count: int,
    n: int,
    probabilities: Tuple[float, float],
    seed: int,
    minimality_cap: int = 8,
) -> CampaignReport:
    """Certificate/walk audit over random graphs.

    Minimality is oracle-checked only up to `minimality_cap` vertices;
    beyond that the exponential predecessor search is skipped and only
    the (linear) map and certificate verifications run.
    """
    pb, pr = probabilities
    report = CampaignReport(
        "random-audit",
        {"count": count, "n": n, "pb": pb, "pr": pr, "seed": seed},
    )
    t0 = time.perf_counter()
    mapped = nomap = 0
    for case in range(count):
        G = random_graph(n, pb, pr, seed + case)
        report.cases += 1
        result = solve(G)
        if isinstance(result, Mapped):
            mapped += 1
            if not verify_homomorphism(
                G, make_dual(result.dual), result.homomorphism()
            ):
                report.fail(f"case {case}: map into {result.dual} invalid", G)
            if not verify_certificate(G, result.certificate):
                report.fail(f"case {case}: certificate invalid", G)
            if n <= minimality_cap:
                for pred in predecessors(result.dual):
                    if find_homomorphism(G, make_dual(pred)) is not None:
                        report.fail(
                            f"case {case}: {result.dual} not minimal, "
                            f"{pred} admits G",
                            G,
                        )
        else:
            nomap += 1
            if not verify_walk(G, result.walk):
                report.fail(f"case {case}: walk invalid", G)
            else:
                pid = PathId(2 * n, "B")
                image = wrap_path(result.walk, pid)
                if not verify_homomorphism(make_path(pid), G, image):
                    report.fail(
                        f"case {case}: wrapping F_{2 * n} around walk failed", G
                    )
    report.details["mapped"] = mapped
    report.details["nomap"] = nomap
    report.wall_time = time.perf_counter() - t0
    return report


def check_corollary5(max_k: int = 3) -> CampaignReport:
    """D_{2k-1} ~ D_{2k-1}^R x D_{2k-1}^B, both directions, for k <= max_k."""
    report = CampaignReport("corollary5", {"k": max_k})
    t0 = time.perf_counter()
    for k in range(1, max_k + 1):
        report.cases += 1
        odd = 2 * k - 1
        plain = make_dual(DualId(odd))
        product = categorical_product(
            make_dual(DualId(odd, "R")), make_dual(DualId(odd, "B"))
        )
        if not hom_equivalent(plain, product):
            report.fail(f"D_{odd} not hom-equivalent to D_{odd}^R x D_{odd}^B")
    report.wall_time = time.perf_counter() - t0
    return report


def bench_linear(
    sizes: Sequence[int], kernel: Optional[str] = None
) -> CampaignReport:
    """Solve alternating paths F_n and report wall time and the kernel's
    instrumented operation count per vertex."""
    report = CampaignReport(
        "bench-linear", {"sizes": list(sizes), "kernel": kernel or "auto"}
    )
    t0 = time.perf_counter()
    rows = []
    for m in sizes:
        G = make_path(PathId(m, "B"))
        t1 = time.perf_counter()
        result = solve(G, kernel=kernel)
        seconds = time.perf_counter() - t1
        report.cases += 1
        if not isinstance(result, Mapped):
            report.fail(f"solve(F_{m}) unexpectedly found no dual")
            continue
        ops = result.trace.ops
        rows.append(
            {
                "n": m,
                "dual": str(result.dual),
                "seconds": round(seconds, 6),
                "ops": ops,
                "ops_per_n": round(ops / m, 3),
            }
        )
    for prev, cur in zip(rows, rows[1:]):
        ratio = cur["ops_per_n"] / prev["ops_per_n"]
        if not 0.5 <= ratio <= 2.0:
            report.fail(
                f"ops growth not linear between n={prev['n']} and "
                f"n={cur['n']}: ops/n ratio {ratio:.2f}"
            )
    report.details["rows"] = rows
    report.wall_time = time.perf_counter() - t0
    return report
