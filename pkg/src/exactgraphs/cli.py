"""Command-line interface.

Exit codes: 0 success, 1 failed family prediction, 2 bad input (parse error
or invalid parameters), 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, edgelist
from .cut import DEFAULT_MAX_N, EnumerationCapError, max_cut
from .exactness import KINDS, certify_all
from .families import DEFAULT_CERTIFY_MAX_N, FAMILIES, PredictionError, certify_family
from .graph import Graph, GraphError, generate
from .report import (
    DEFAULT_TOL,
    analyze,
    certificate_dict,
    cut_dict,
    exact_line,
    format_text,
    to_json,
    wilf_dict,
    wilf_line,
)
from .wilf import wilf_solve

EXIT_OK, EXIT_PREDICTION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _kinds(value: str) -> tuple:
    value = value.upper()
    return KINDS if value == "ALL" else (value,)


def parse_graph_spec(spec: str) -> Graph:
    """``@path`` reads an edge-list file; ``name[:a[,b]]`` calls a generator."""
    if spec.startswith("@"):
        return edgelist.read(spec[1:])
    name, _, args = spec.partition(":")
    try:
        params = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise GraphError(f"bad generator parameters in {spec!r}") from None
    return generate(name.replace("-", "_"), *params)


def _common(p: argparse.ArgumentParser, max_n: int = DEFAULT_MAX_N):
    p.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
    p.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help=f"comparison tolerance per vertex; slack is tol*max(1,n) (default {DEFAULT_TOL})",
    )
    p.add_argument(
        "--max-n",
        type=int,
        default=max_n,
        help=f"enumeration cap on vertices (default {max_n})",
    )
    p.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactgraphs",
        description="Spectra, exact maximum cuts, exactness certificates and +-1 eigenvectors of graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for an edge-list file")
    p.add_argument("path")
    _common(p)
    p.add_argument("--figure", metavar="PNG", help="also write a figure of spectra and cut bounds")
    p.add_argument("--no-wilf", action="store_true", help="skip the +-1 eigenvector search")

    p = sub.add_parser("maxcut", help="exact maximum cut and spectral bounds")
    p.add_argument("path")
    _common(p)

    p = sub.add_parser("exact", help="A-, L- or Q-exactness certificates")
    p.add_argument("path")
    p.add_argument("--matrix", default="all", choices=["a", "l", "q", "all", "A", "L", "Q"])
    _common(p)

    p = sub.add_parser("wilf", help="all +-1 eigenvectors")
    p.add_argument("path")
    p.add_argument("--matrix", default="all", choices=["a", "l", "q", "all", "A", "L", "Q"])
    _common(p)

    p = sub.add_parser("family", help="build and certify a member of an exact family")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("--t", type=int, help="t for k2-tk2")
    p.add_argument("--h1", help="first component: generator spec like cycle:4, or @file")
    p.add_argument("--h2", help="second component (same syntax as --h1)")
    p.add_argument("--h", help="component for h-join-independent")
    p.add_argument("--out", help="write the edge list here and the certificate to OUT.cert.json")
    _common(p, DEFAULT_CERTIFY_MAX_N)
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_analyze(args) -> int:
    g = edgelist.read(args.path)
    report = analyze(
        g, tol_base=args.tol, threads=args.threads, max_n=args.max_n, wilf=not args.no_wilf
    )
    _emit(to_json(report) if args.json else format_text(report))
    if args.figure:
        from .plotting import plot_report

        plot_report(report, args.figure)
    return EXIT_OK


def cmd_maxcut(args) -> int:
    g = edgelist.read(args.path)
    res = max_cut(g, thread_count=args.threads, max_n=args.max_n)
    tol = args.tol * max(1, g.n)
    if args.json:
        out = cut_dict(res)
        out["bound_violations"] = res.bound_violations(tol)
        _emit(to_json(out))
    else:
        lines = [f"mcut = {res.mcut}", f"S = {sorted(res.witness.members)}"]
        lines += [f"bound {k} = {v:.12g}" for k, v in res.bounds.as_dict().items()]
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_exact(args) -> int:
    g = edgelist.read(args.path)
    certs = certify_all(g, thread_count=args.threads, max_n=args.max_n, tol=args.tol * max(1, g.n))
    kinds = _kinds(args.matrix)
    if args.json:
        _emit(to_json({k: certificate_dict(certs[k]) for k in kinds}))
    else:
        _emit("".join(exact_line(certificate_dict(certs[k])) + "\n" for k in kinds))
    return EXIT_OK


def cmd_wilf(args) -> int:
    g = edgelist.read(args.path)
    sols = wilf_solve(
        g, _kinds(args.matrix), thread_count=args.threads, max_n=args.max_n, tol=args.tol * max(1, g.n)
    )
    if args.json:
        _emit(to_json([wilf_dict(s) for s in sols]))
    else:
        _emit(f"{len(sols)} solutions\n" + "".join(wilf_line(wilf_dict(s)) + "\n" for s in sols))
    return EXIT_OK


def _family_args(args):
    if args.name == "k2-tk2":
        if args.t is None:
            raise GraphError("k2-tk2 needs --t")
        return (args.t,)
    if args.name == "h-join-independent":
        if not args.h:
            raise GraphError("h-join-independent needs --h")
        return (parse_graph_spec(args.h),)
    if not (args.h1 and args.h2):
        raise GraphError(f"{args.name} needs --h1 and --h2")
    return parse_graph_spec(args.h1), parse_graph_spec(args.h2)


def cmd_family(args) -> int:
    g, spec = FAMILIES[args.name](*_family_args(args))
    try:
        rep = certify_family(spec, g, max_n=args.max_n, thread_count=args.threads)
    except PredictionError as exc:
        print(f"prediction failed: {exc}", file=sys.stderr)
        return EXIT_PREDICTION
    cert = {
        "schema": 1,
        "family": spec.family,
        "parameters": spec.parameters,
        "predicted_exactness": sorted(spec.predicted_exactness),
        "refuted_exactness": sorted(spec.refuted_exactness),
        "predicted_eigenvalue": spec.predicted_eigenvalue,
        "exact_kinds": "".join(rep.exact_kinds),
        "graph": {"n": g.n, "m": g.m, "W": g.total_weight},
        "certificates": {k: certificate_dict(c) for k, c in rep.certificates.items()},
    }
    if args.out:
        edgelist.write(g, args.out)
        Path(args.out + ".cert.json").write_text(to_json(cert))
    if args.json:
        _emit(to_json(cert))
    else:
        head = f"{spec.family} {spec.parameters}: n={g.n} m={g.m}, exact in {''.join(rep.exact_kinds) or 'none'}\n"
        body = "".join(exact_line(certificate_dict(c)) + "\n" for c in rep.certificates.values())
        graph_text = "" if args.out else edgelist.dumps(g)
        _emit(head + body + graph_text)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "maxcut": cmd_maxcut,
    "exact": cmd_exact,
    "wilf": cmd_wilf,
    "family": cmd_family,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except edgelist.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationCapError as exc:
        print(f"error: {exc}; raise --max-n to override", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
