"""A-, L- and Q-exactness certificates and the +-1 eigenvector characterization.

A partition vector ``p_S`` is an eigenvector of

* ``Q`` iff both induced sides ``G[S]`` and ``G[S-bar]`` are ``r``-regular
  for one common ``r`` (eigenvalue ``2r``);
* ``L`` iff the graph of cut edges is ``r``-regular (eigenvalue ``2r``);
* ``A`` iff ``d_i(own side) - d_i(other side)`` is the same ``lambda`` at
  every vertex (eigenvalue ``lambda``).

:func:`structural_check` evaluates these degree conditions on explicitly
built subgraphs; :func:`direct_check` multiplies the matrix by ``p_S``.  The
two never share code beyond the graph itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cut import DEFAULT_MAX_N, CutResult, cut_weight, max_cut
from .graph import (
    Graph,
    GraphError,
    MatrixKind,
    Partition,
    build_matrix,
    cross_degree,
    cut_edge_subgraph,
    induced_subgraph,
    inside_subgraph,
    regularity,
)
from .spectra import Spectrum, cmp_tol, graph_spectrum

__all__ = [
    "KINDS",
    "ExactnessCertificate",
    "ExclusivityReport",
    "NotOptimalError",
    "StructuralVerdict",
    "SufficientConditions",
    "certify_all",
    "certify_exactness",
    "direct_check",
    "exclusivity_check",
    "structural_check",
    "sufficient_condition_check",
]

KINDS = ("A", "L", "Q")
_EIGEN_NAME = {"A": "lambda_n", "L": "mu_1", "Q": "q_n"}


class NotOptimalError(ValueError):
    """Partition passed as a maximum-cut witness is not optimal."""


def _kind(kind) -> str:
    k = MatrixKind(kind).value
    if k not in KINDS:
        raise ValueError(f"matrix kind must be one of {KINDS}, got {k!r}")
    return k


def _proper(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise GraphError(f"partition is on {p.n} vertices, graph has {g.n}")
    if not p.is_proper:
        raise ValueError("partition vector is constant; both sides must be nonempty")


def _all_equal(x, exact: bool, tol: float) -> bool:
    x = np.asarray(x)
    if exact:
        return bool(np.all(x == x[0]))
    return bool(np.all(np.abs(x - x[0]) <= tol))


@dataclass(frozen=True)
class StructuralVerdict:
    matrix_kind: str
    satisfied: bool
    eigenvalue: Optional[float]
    detail: dict = field(compare=False, default_factory=dict)


def structural_check(g: Graph, p: Partition, kind, tol: Optional[float] = None) -> StructuralVerdict:
    """Degree conditions under which ``p_S`` is an eigenvector of A, L or Q."""
    kind = _kind(kind)
    _proper(g, p)
    exact = g.weights_are_integer
    tol = cmp_tol(g.n) if tol is None else tol
    s, sbar = p.sides
    if kind == "Q":
        d_s = induced_subgraph(g, s).degrees()
        d_t = induced_subgraph(g, sbar).degrees()
        both = np.concatenate([d_s, d_t])
        ok = _all_equal(both, exact, tol)
        return StructuralVerdict(
            "Q", ok, 2 * both[0].item() if ok else None, {"S": d_s.tolist(), "S_bar": d_t.tolist()}
        )
    if kind == "L":
        d_c = cut_edge_subgraph(g, p).degrees()
        ok = _all_equal(d_c, exact, tol)
        return StructuralVerdict("L", ok, 2 * d_c[0].item() if ok else None, {"cut": d_c.tolist()})
    d = g.degrees()
    cross = np.array([cross_degree(g, p, i) for i in range(g.n)], dtype=d.dtype)
    own = d - cross
    diff = own - cross
    ok = _all_equal(diff, exact, tol)
    return StructuralVerdict(
        "A", ok, diff[0].item() if ok else None, {"own": own.tolist(), "cross": cross.tolist()}
    )


def direct_check(g: Graph, p: Partition, kind, tol: Optional[float] = None):
    """Return ``lambda`` if ``M p_S == lambda p_S`` componentwise, else ``None``."""
    kind = _kind(kind)
    _proper(g, p)
    m = build_matrix(g, kind)
    vec = p.vector
    v = m @ vec
    lam = v[0] * vec[0]
    if g.weights_are_integer:
        return int(lam) if np.array_equal(v, lam * vec) else None
    tol = cmp_tol(g.n) if tol is None else tol
    return float(lam) if np.all(np.abs(v - lam * vec) <= tol) else None


def definition_rhs(kind: str, n: int, w, mcut) -> float:
    """Value the extreme eigenvalue takes on an exact graph."""
    if kind == "L":
        return 4 * mcut / n
    if kind == "Q":
        return 4 * (w - mcut) / n
    return 2 * (w - 2 * mcut) / n


@dataclass(frozen=True)
class ExactnessCertificate:
    kind: str
    is_exact: bool
    eigenvalue_used: float
    bound_value: float
    residual: float
    tolerance: float
    mcut: float
    witness: Partition
    structural_check: Optional[StructuralVerdict] = None

    @property
    def decisive(self) -> bool:
        """False when the residual sits between the tolerance and ten times it."""
        return self.is_exact or self.residual > 10 * self.tolerance

    @property
    def eigenvalue_name(self) -> str:
        return _EIGEN_NAME[self.kind]


def _extreme(kind: str, sp: Spectrum) -> float:
    return sp.largest if kind == "L" else sp.smallest


def certify_exactness(
    g: Graph,
    kind,
    *,
    cut: Optional[CutResult] = None,
    spectrum: Optional[Spectrum] = None,
    tol: Optional[float] = None,
    thread_count: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> ExactnessCertificate:
    """Certify whether ``g`` is ``kind``-exact.

    The maximum cut is recomputed unless ``cut`` is supplied.
    """
    kind = _kind(kind)
    tol = cmp_tol(g.n) if tol is None else tol
    if cut is None:
        cut = max_cut(g, thread_count=thread_count, max_n=max_n, with_bounds=False)
    sp = spectrum or graph_spectrum(g, kind)
    eig = _extreme(kind, sp)
    rhs = definition_rhs(kind, g.n, g.total_weight, cut.mcut)
    residual = abs(eig - rhs)
    exact = residual <= tol
    verdict = None
    if exact and cut.witness.is_proper:
        verdict = structural_check(g, cut.witness, kind, tol)
    return ExactnessCertificate(
        kind=kind,
        is_exact=exact,
        eigenvalue_used=eig,
        bound_value=float(rhs),
        residual=float(residual),
        tolerance=tol,
        mcut=cut.mcut,
        witness=cut.witness,
        structural_check=verdict,
    )


def certify_all(
    g: Graph,
    *,
    cut: Optional[CutResult] = None,
    spectra: Optional[dict] = None,
    tol: Optional[float] = None,
    thread_count: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> dict:
    """Certificates for A, L and Q sharing a single max-cut computation."""
    if cut is None:
        cut = max_cut(g, thread_count=thread_count, max_n=max_n, with_bounds=False)
    spectra = spectra or {}
    return {
        k: certify_exactness(g, k, cut=cut, spectrum=spectra.get(k), tol=tol) for k in KINDS
    }


@dataclass(frozen=True)
class ExclusivityReport:
    certificates: dict
    exact_kinds: tuple
    is_regular: bool
    is_connected: bool
    violations: tuple

    @property
    def holds(self) -> bool:
        return not self.violations


def exclusivity_check(g: Graph, *, certificates: Optional[dict] = None, **kw) -> ExclusivityReport:
    """Exactness in two kinds forces regularity and exactness in the third.

    On regular graphs the three notions coincide, so the set of exact kinds
    is either empty or all three.  Failures are listed in ``violations``.
    """
    certs = certificates or certify_all(g, **kw)
    kinds = tuple(k for k in KINDS if certs[k].is_exact)
    regular = regularity(g) is not None
    violations = []
    if len(kinds) >= 2 and not regular:
        violations.append(f"exact in {''.join(kinds)} but not regular")
    if len(kinds) >= 2 and len(kinds) < 3:
        violations.append(f"exact in {''.join(kinds)} but not in all three kinds")
    if regular and len(kinds) not in (0, 3):
        violations.append(f"regular graph exact in {''.join(kinds)} only")
    return ExclusivityReport(certs, kinds, regular, g.is_connected(), tuple(violations))


@dataclass(frozen=True)
class SufficientConditions:
    l_sufficient: bool
    q_sufficient: bool
    cut_regularity: Optional[float]
    inside_regularity: Optional[float]
    l_rhs: Optional[float]  # mu_1(inside) + mu_2(cut graph)
    q_rhs: Optional[float]  # q_n(inside) + q_{n-1}(cut graph)


def sufficient_condition_check(
    g: Graph, p: Partition, tol: Optional[float] = None, cut: Optional[CutResult] = None
) -> SufficientConditions:
    """Spectral conditions on a maximum-cut witness implying L- or Q-exactness.

    L: the cut graph is ``r``-regular and ``2r >= mu_1(inside) + mu_2(cut graph)``.
    Q: the inside graph is ``r``-regular and ``2r <= q_n(inside) + q_{n-1}(cut graph)``.
    """
    if p.n != g.n:
        raise GraphError(f"partition is on {p.n} vertices, graph has {g.n}")
    if g.n < 2:
        raise ValueError("sufficient conditions need at least two vertices")
    tol = cmp_tol(g.n) if tol is None else tol
    cut = cut or max_cut(g, with_bounds=False)
    value = cut_weight(g, p)
    if (value != cut.mcut) if g.weights_are_integer else abs(value - cut.mcut) > tol:
        raise NotOptimalError(f"cut of the given partition is {value}, maximum is {cut.mcut}")
    crossing = cut_edge_subgraph(g, p)
    inside = inside_subgraph(g, p)
    r_cut, r_in = regularity(crossing), regularity(inside)
    l_ok = q_ok = False
    l_rhs = q_rhs = None
    if r_cut is not None:
        l_rhs = graph_spectrum(inside, "L").values[0] + graph_spectrum(crossing, "L").values[1]
        l_ok = 2 * r_cut >= l_rhs - tol
    if r_in is not None:
        q_rhs = graph_spectrum(inside, "Q").values[-1] + graph_spectrum(crossing, "Q").values[-2]
        q_ok = 2 * r_in <= q_rhs + tol
    return SufficientConditions(
        bool(l_ok),
        bool(q_ok),
        r_cut,
        r_in,
        None if l_rhs is None else float(l_rhs),
        None if q_rhs is None else float(q_rhs),
    )
