"""Assemble and serialize the full analysis report of a graph."""

from __future__ import annotations

import json
import math

import numpy as np

from . import __version__
from .cut import DEFAULT_MAX_N, CutResult, max_cut, spectral_bounds
from .exactness import KINDS, ExactnessCertificate, certify_all, exclusivity_check
from .graph import Graph, build_matrix, regularity
from .spectra import eig_tol, graph_spectrum, spreads
from .wilf import WilfSolution, wilf_solve

SCHEMA = 1
DEFAULT_TOL = 1e-7


def _num(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = float(x)
    if not math.isfinite(x):
        return None
    x = float(f"{x:.12g}")
    return 0.0 if x == 0 else x


def clean(obj):
    """Round every float to 12 significant digits, recursively."""
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [clean(v) for v in obj]
    if obj is None or isinstance(obj, str):
        return obj
    return _num(obj)


def to_json(obj) -> str:
    return json.dumps(clean(obj), sort_keys=True, indent=2) + "\n"


def partition_dict(p) -> dict:
    s, t = p.sides
    return {"S": list(s), "S_bar": list(t)}


def cut_dict(c: CutResult) -> dict:
    out = {"mcut": c.mcut, "mcoh": c.mcoh, "W": c.W, "witness": partition_dict(c.witness)}
    if c.bounds is not None:
        out["bounds"] = c.bounds.as_dict()
    return out


def certificate_dict(c: ExactnessCertificate) -> dict:
    out = {
        "kind": c.kind,
        "is_exact": c.is_exact,
        "decisive": c.decisive,
        "eigenvalue_name": c.eigenvalue_name,
        "eigenvalue_used": c.eigenvalue_used,
        "bound_value": c.bound_value,
        "residual": c.residual,
        "tolerance": c.tolerance,
        "mcut": c.mcut,
        "witness": partition_dict(c.witness),
        "structural_check": None,
    }
    if c.structural_check is not None:
        v = c.structural_check
        out["structural_check"] = {"satisfied": v.satisfied, "eigenvalue": v.eigenvalue}
    return out


def wilf_dict(s: WilfSolution) -> dict:
    return {
        "kind": s.matrix_kind,
        "eigenvalue": s.eigenvalue,
        "S": sorted(s.partition.members),
        "eigenvalue_index": s.eigenvalue_index,
        "multiplicity": s.multiplicity,
    }


def analyze(
    g: Graph,
    *,
    tol_base: float = DEFAULT_TOL,
    threads: int = 1,
    max_n: int = DEFAULT_MAX_N,
    wilf: bool = True,
) -> dict:
    """Run every analysis on ``g`` and return a JSON-ready report."""
    tol = tol_base * max(1, g.n)
    spectra = {k: graph_spectrum(g, k) for k in KINDS}
    cut = max_cut(g, thread_count=threads, max_n=max_n, with_bounds=False)
    bounds = spectral_bounds(g, spectra)
    cut = CutResult(cut.mcut, cut.witness, cut.mcoh, cut.W, bounds)
    certs = certify_all(g, cut=cut, spectra=spectra, tol=tol)
    excl = exclusivity_check(g, certificates=certs)
    sp = spreads(g, spectra)
    r = regularity(g)
    report = {
        "schema": SCHEMA,
        "version": __version__,
        "tolerances": {
            "cmp_base": tol_base,
            "cmp": tol,
            "strictness_margin": 10 * tol,
            "eig": max(eig_tol(build_matrix(g, k)) for k in KINDS),
            "eig_residuals": {k: spectra[k].residual for k in KINDS},
        },
        "graph": {
            "n": g.n,
            "m": g.m,
            "W": g.total_weight,
            "weights_are_integer": g.weights_are_integer,
            "regular": r is not None,
            "degree": r,
            "connected": g.is_connected(),
            "bipartite": g.is_bipartite(),
        },
        "spectra": {k: spectra[k].values for k in KINDS},
        "spreads": {
            "s_A": sp.s_A,
            "s_L": sp.s_L,
            "s_Q": sp.s_Q,
            "lhs": sp.lhs,
            "rhs": sp.rhs,
            "equality_within_tol": abs(sp.lhs - sp.rhs) <= tol,
        },
        "cut": cut_dict(cut),
        "bound_violations": cut.bound_violations(tol),
        "exactness": {k: certificate_dict(certs[k]) for k in KINDS},
        "exclusivity": {"exact_kinds": "".join(excl.exact_kinds), "violations": list(excl.violations)},
    }
    if wilf:
        report["wilf"] = [wilf_dict(s) for s in wilf_solve(g, thread_count=threads, max_n=max_n, tol=tol)]
    return report


def format_text(report: dict) -> str:
    """Human-readable summary; not schema-stable."""
    r = clean(report)
    gi = r["graph"]
    lines = [
        f"graph: n={gi['n']} m={gi['m']} W={gi['W']} regular={gi['regular']} "
        f"connected={gi['connected']} bipartite={gi['bipartite']}",
    ]
    for k in KINDS:
        lines.append(f"spectrum {k}: " + " ".join(str(x) for x in r["spectra"][k]))
    sp = r["spreads"]
    lines.append(
        f"spreads: s_A={sp['s_A']} s_L={sp['s_L']} s_Q={sp['s_Q']}  "
        f"2 s_A={sp['lhs']} <= s_L + s_Q={sp['rhs']} (equal: {sp['equality_within_tol']})"
    )
    c = r["cut"]
    lines.append(f"mcut = {c['mcut']}  (mcoh = {c['mcoh']}, W = {c['W']}), S = {c['witness']['S']}")
    for name, val in c["bounds"].items():
        lines.append(f"  bound {name:<13} {val}")
    for k in KINDS:
        lines.append(exact_line(r["exactness"][k]))
    if r["exclusivity"]["violations"]:
        lines.append("exclusivity violations: " + "; ".join(r["exclusivity"]["violations"]))
    if "wilf" in r:
        lines.append(f"+-1 eigenvectors: {len(r['wilf'])}")
        for s in r["wilf"]:
            lines.append(wilf_line(s))
    return "\n".join(lines) + "\n"


def exact_line(c: dict) -> str:
    c = clean(c)
    flag = "true" if c["is_exact"] else "false"
    return f"{c['kind']}-exact: {flag} ({c['eigenvalue_name']} = {c['eigenvalue_used']}, bound = {c['bound_value']})"


def wilf_line(s: dict) -> str:
    return (
        f"  {s['kind']} eigenvalue {s['eigenvalue']} (position {s['eigenvalue_index']}, "
        f"multiplicity {s['multiplicity']}): S = {s['S']}"
    )
