"""`ecd` command line interface.

Exit codes: 0 on success (a homomorphism exists, a campaign passes),
3 for a negative answer (NOMAP, no homomorphism, failed campaign),
1 for input errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional

from .ecgraph import EdgeColouredGraph, GraphFormatError, parse_graph, \
    serialize_graph
from .families import DualId, PathId, make_dual, make_path
from .harness import audit_random, bench_linear, check_corollary5, \
    check_duality_exhaustive
from .homsolver import categorical_product, find_homomorphism, hom_equivalent
from .peel import Mapped, available_kernels, solve


def _load(path: str) -> EdgeColouredGraph:
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except (OSError, GraphFormatError) as exc:
        raise SystemExit(f"ecd: {path}: {exc}")


def _variant(token: Optional[str]) -> Optional[str]:
    if token is None:
        return None
    token = token.upper()
    if token not in ("B", "R"):
        raise SystemExit(f"ecd: variant must be B or R, got {token!r}")
    return token


def _cmd_family(args) -> int:
    try:
        if args.kind == "path":
            G = make_path(PathId(args.k, _variant(args.variant or "B")))
        else:
            G = make_dual(DualId(args.k, _variant(args.variant)))
    except ValueError as exc:
        raise SystemExit(f"ecd: {exc}")
    sys.stdout.write(serialize_graph(G))
    return 0


def _cmd_solve(args) -> int:
    G = _load(args.graph)
    result = solve(G, kernel=args.kernel)
    if isinstance(result, Mapped):
        print(f"MAP {result.dual}")
        for v, s in enumerate(result.assignment):
            print(f"g {G.label(v)} {s}")
        for m in result.certificate.maps:
            print(f"cert {m.path if m.path is not None else 'F_0'}")
            for t, v in enumerate(m.image):
                print(f"f v{t} {G.label(v)}")
        return 0
    print("NOMAP")
    for u, v, c in result.walk.edges:
        print(f"w {G.label(u)} {G.label(v)} {c}")
    return 3


def _cmd_hom(args) -> int:
    G, H = _load(args.G), _load(args.H)
    phi = find_homomorphism(G, H)
    if phi is None:
        print("NONE")
        return 3
    for v, h in enumerate(phi.image):
        print(f"phi {G.label(v)} {H.label(h)}")
    return 0


def _cmd_product(args) -> int:
    sys.stdout.write(
        serialize_graph(categorical_product(_load(args.G), _load(args.H)))
    )
    return 0


def _cmd_equiv(args) -> int:
    if hom_equivalent(_load(args.G), _load(args.H)):
        print("EQUIVALENT")
        return 0
    print("NOT-EQUIVALENT")
    return 3


def _emit_report(report, as_json: bool) -> int:
    sys.stdout.write(report.to_json() + "\n" if as_json else report.to_text())
    return 0 if report.passed else 3


def _cmd_check(args) -> int:
    if args.campaign == "exhaustive":
        report = check_duality_exhaustive(args.n, args.k)
    elif args.campaign == "random":
        report = audit_random(
            args.count, args.n, (args.pb, args.pr), args.seed
        )
    else:
        report = check_corollary5(args.k)
    return _emit_report(report, args.json)


def _cmd_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        raise SystemExit(f"ecd: bad sizes list {args.sizes!r}")
    kernels = available_kernels() if args.kernel == "both" else [args.kernel]
    status = 0
    for kernel in kernels:
        report = bench_linear(sizes, kernel=kernel)
        status = max(status, _emit_report(report, args.json))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecd",
        description="Alternating-path duality for 2-edge-coloured graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="emit a path or dual family member")
    fam.add_argument("kind", choices=["path", "dual"])
    fam.add_argument("k", type=int)
    fam.add_argument("variant", nargs="?", default=None)
    fam.set_defaults(func=_cmd_family)

    slv = sub.add_parser("solve", help="run the duality algorithm on a graph")
    slv.add_argument("graph")
    slv.add_argument("--kernel", choices=["auto", "c", "py"], default="auto")
    slv.set_defaults(func=_cmd_solve)

    hom = sub.add_parser("hom", help="search for a homomorphism G -> H")
    hom.add_argument("G")
    hom.add_argument("H")
    hom.set_defaults(func=_cmd_hom)

    prod = sub.add_parser("product", help="categorical product of two graphs")
    prod.add_argument("G")
    prod.add_argument("H")
    prod.set_defaults(func=_cmd_product)

    eqv = sub.add_parser("equiv", help="test homomorphic equivalence")
    eqv.add_argument("G")
    eqv.add_argument("H")
    eqv.set_defaults(func=_cmd_equiv)

    chk = sub.add_parser("check", help="run a verification campaign")
    chk_sub = chk.add_subparsers(dest="campaign", required=True)
    exh = chk_sub.add_parser("exhaustive")
    exh.add_argument("--n", type=int, default=3)
    exh.add_argument("--k", type=int, default=6)
    exh.add_argument("--json", action="store_true")
    exh.set_defaults(func=_cmd_check)
    rnd = chk_sub.add_parser("random")
    rnd.add_argument("--count", type=int, default=10000)
    rnd.add_argument("--n", type=int, default=50)
    rnd.add_argument("--pb", type=float, default=0.02)
    rnd.add_argument("--pr", type=float, default=0.02)
    rnd.add_argument("--seed", type=int, default=7)
    rnd.add_argument("--json", action="store_true")
    rnd.set_defaults(func=_cmd_check)
    cor = chk_sub.add_parser("corollary5")
    cor.add_argument("--k", type=int, default=3)
    cor.add_argument("--json", action="store_true")
    cor.set_defaults(func=_cmd_check)

    ben = sub.add_parser("bench", help="linear-scaling benchmark on paths F_n")
    ben.add_argument("--sizes", default="1000,10000,100000,1000000")
    ben.add_argument(
        "--kernel", choices=["auto", "c", "py", "both"], default="auto"
    )
    ben.add_argument("--json", action="store_true")
    ben.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 1
        raise


if __name__ == "__main__":
    sys.exit(main())
