"""Infinite families of exact join graphs, with certification.

Each constructor checks the family hypothesis and returns the graph together
with a :class:`FamilySpec` recording what the construction predicts.
:func:`certify_family` then runs the full exactness pipeline and raises
:class:`PredictionError` if any prediction fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cut import EnumerationCapError
from .exactness import KINDS, certify_all
from .graph import Graph, GraphError, complete, complete_bipartite, cycle, join, matching, regularity
from .spectra import cmp_tol

__all__ = [
    "FAMILIES",
    "FamilyReport",
    "FamilySpec",
    "HypothesisError",
    "PredictionError",
    "certify_family",
    "make_a_exact_join",
    "make_k2_join_tk2",
    "make_regular_join",
    "make_same_order_join",
    "negative_fixture",
]

DEFAULT_CERTIFY_MAX_N = 20


class HypothesisError(GraphError):
    """Family parameters violate the family's hypothesis."""


class PredictionError(AssertionError):
    """A constructed family member did not certify as predicted."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameters: dict
    predicted_exactness: frozenset  # kinds asserted exact
    predicted_eigenvalue: Optional[float] = None  # for the single kind it names
    predicted_kind: Optional[str] = None
    refuted_exactness: frozenset = field(default_factory=frozenset)  # kinds asserted not exact


def _order_degree(h: Graph, name: str):
    r = regularity(h)
    if r is None:
        raise HypothesisError(f"{name} must be regular")
    return h.n, r


def make_k2_join_tk2(t: int):
    """``K2`` joined to ``t K2``: Q-exact with ``q_n = 2`` and neither L- nor A-exact."""
    if t < 2:
        raise HypothesisError(f"K2 join tK2 needs t > 1, got t={t}")
    g = join(complete(2), matching(t))
    spec = FamilySpec(
        "k2_join_tk2",
        {"t": t},
        frozenset("Q"),
        2,
        "Q",
        refuted_exactness=frozenset("AL"),
    )
    return g, spec


def make_same_order_join(h1: Graph, h2: Graph):
    """Join of two graphs of equal order ``n``: L-exact with ``mu_1 = 2n``."""
    if h1.n != h2.n:
        raise HypothesisError(f"|V(H1)| = |V(H2)| required, got {h1.n} and {h2.n}")
    if h1.n < 1:
        raise HypothesisError("components must be nonempty")
    return join(h1, h2), FamilySpec(
        "same_order_join", {"n": h1.n}, frozenset("L"), 2 * h1.n, "L"
    )


def make_regular_join(h1: Graph, h2: Graph):
    """Join of two ``r``-regular graphs with ``min(n1, n2) >= 2r``: Q-exact with ``q_n = 2r``."""
    n1, r1 = _order_degree(h1, "H1")
    n2, r2 = _order_degree(h2, "H2")
    if r1 != r2:
        raise HypothesisError(f"H1 and H2 must share the degree r, got {r1} and {r2}")
    if min(n1, n2) < 2 * r1:
        raise HypothesisError(f"min(n1, n2) >= 2r violated: min({n1}, {n2}) < {2 * r1}")
    return join(h1, h2), FamilySpec(
        "regular_join", {"n1": n1, "n2": n2, "r": r1}, frozenset("Q"), 2 * r1, "Q"
    )


def make_a_exact_join(h1: Graph, h2: Graph):
    """Join of an ``r1``-regular and an ``r2``-regular graph with ``n1 - r2 = n2 - r1 > max(r1, r2)``.

    A-exact, with least adjacency eigenvalue ``r1 - n2``.
    """
    n1, r1 = _order_degree(h1, "H1")
    n2, r2 = _order_degree(h2, "H2")
    if n1 - r2 != n2 - r1:
        raise HypothesisError(f"n1 - r2 = n2 - r1 violated: {n1 - r2} != {n2 - r1}")
    if not n1 - r2 > max(r1, r2):
        raise HypothesisError(f"n1 - r2 > max(r1, r2) violated: {n1 - r2} <= {max(r1, r2)}")
    return join(h1, h2), FamilySpec(
        "a_exact_join",
        {"n1": n1, "r1": r1, "n2": n2, "r2": r2},
        frozenset("A"),
        r1 - n2,
        "A",
    )


def make_h_join_independent(h: Graph):
    """``H`` joined to ``(n + r) K1`` for an ``r``-regular ``H`` on ``n`` vertices."""
    n, r = _order_degree(h, "H")
    g, spec = make_a_exact_join(h, Graph(n + r))
    return g, FamilySpec(
        "h_join_independent",
        {"n": n, "r": r},
        spec.predicted_exactness,
        spec.predicted_eigenvalue,
        "A",
    )


def negative_fixture(name: str, m: int = 4):
    """Joins known not to be Q-exact, built without hypothesis checks.

    ``"k33_join_k4"`` or ``"c3_join_cn"`` (with ``n = m >= 4``).
    """
    if name == "k33_join_k4":
        g = join(complete_bipartite(3, 3), complete(4))
        params = {}
    elif name == "c3_join_cn":
        if m < 4:
            raise HypothesisError("C3 join Cn fixture needs n >= 4")
        g = join(cycle(3), cycle(m))
        params = {"n": m}
    else:
        raise ValueError(f"unknown negative fixture {name!r}")
    return g, FamilySpec(name, params, frozenset(), refuted_exactness=frozenset("Q"))


FAMILIES = {
    "k2-tk2": make_k2_join_tk2,
    "same-order": make_same_order_join,
    "regular-join": make_regular_join,
    "a-exact": make_a_exact_join,
    "h-join-independent": make_h_join_independent,
}


@dataclass(frozen=True)
class FamilyReport:
    spec: FamilySpec
    certificates: dict
    exact_kinds: tuple


def certify_family(
    spec: FamilySpec, g: Graph, *, max_n: int = DEFAULT_CERTIFY_MAX_N, thread_count: int = 1
) -> FamilyReport:
    if g.n > max_n:
        raise EnumerationCapError(f"family member has n={g.n}, certification cap is {max_n}")
    certs = certify_all(g, thread_count=thread_count, max_n=max_n)
    exact = tuple(k for k in KINDS if certs[k].is_exact)
    problems = []
    for k in sorted(spec.predicted_exactness):
        if not certs[k].is_exact:
            problems.append(f"{spec.family}: predicted {k}-exact, residual {certs[k].residual:.3g}")
    for k in sorted(spec.refuted_exactness):
        if certs[k].is_exact:
            problems.append(f"{spec.family}: predicted not {k}-exact")
        elif not certs[k].decisive:
            problems.append(f"{spec.family}: {k} residual {certs[k].residual:.3g} is indecisive")
    if spec.predicted_kind is not None and spec.predicted_eigenvalue is not None:
        got = certs[spec.predicted_kind].eigenvalue_used
        if abs(got - spec.predicted_eigenvalue) > cmp_tol(g.n):
            problems.append(
                f"{spec.family}: predicted {certs[spec.predicted_kind].eigenvalue_name}="
                f"{spec.predicted_eigenvalue}, got {got}"
            )
    if problems:
        raise PredictionError("; ".join(problems))
    return FamilyReport(spec, certs, exact)
