"""Cuts, cohesion, exact maximum cut and spectral upper bounds.

Exhaustive search runs over the ``2**(n-1)`` partitions with vertex 0 fixed
in ``S``.  Partition index ``k`` puts vertex ``i >= 1`` in the complement
when bit ``i - 1`` of ``k`` is set.  The index space is cut into blocks that
share the low bits: the cut restricted to the low vertices is tabulated
once, and inside a block the remaining terms are one constant plus a
matrix-vector product, so each block costs a single BLAS call.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import Graph, GraphError, MatrixKind, Partition, build_matrix
from .spectra import Spectrum, cmp_tol, graph_spectrum

__all__ = [
    "DEFAULT_MAX_N",
    "CutResult",
    "EnumerationCapError",
    "SpectralBounds",
    "cohesion",
    "cut_weight",
    "lex_keys",
    "max_cut",
    "spectral_bounds",
]

DEFAULT_MAX_N = 28
LOW_BITS = 14


class EnumerationCapError(ValueError):
    """Graph too large for exhaustive enumeration."""


def _check(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise GraphError(f"partition is on {p.n} vertices, graph has {g.n}")


def cut_weight(g: Graph, p: Partition):
    _check(g, p)
    s = p.members
    return sum(w for u, v, w in g.edges if (u in s) != (v in s))


def cohesion(g: Graph, p: Partition):
    _check(g, p)
    s = p.members
    return sum(w for u, v, w in g.edges if (u in s) == (v in s))


@dataclass(frozen=True)
class SpectralBounds:
    laplacian: float  # (n/4) mu_1
    q_lower_form: float  # W - (n/4) q_n
    a_form: float  # W/2 - (n/4) lambda_n
    spread_A: float  # (n/4) s_A
    spread_Q: float  # (n/4) s_Q

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def spectral_bounds(g: Graph, spectra: Optional[dict] = None) -> SpectralBounds:
    """The five spectral upper bounds on the maximum cut of ``g``."""
    spectra = spectra or {}
    sp = {k: spectra.get(k) or graph_spectrum(g, k) for k in "ALQ"}
    n, w = g.n, float(g.total_weight)
    return SpectralBounds(
        laplacian=n / 4 * sp["L"].largest,
        q_lower_form=w - n / 4 * sp["Q"].smallest,
        a_form=w / 2 - n / 4 * sp["A"].smallest,
        spread_A=n / 4 * sp["A"].spread,
        spread_Q=n / 4 * sp["Q"].spread,
    )


@dataclass(frozen=True)
class CutResult:
    mcut: float
    witness: Partition
    mcoh: float
    W: float
    bounds: Optional[SpectralBounds] = None

    def bound_violations(self, tol: float) -> list:
        if self.bounds is None:
            return []
        return [k for k, b in self.bounds.as_dict().items() if self.mcut > b + tol]


def lex_keys(k: np.ndarray, n: int) -> np.ndarray:
    """Integer keys ordering partition indices like the sorted member lists of ``S``.

    Position ``i`` contributes 0 if ``S`` has no member ``>= i``, 1 if ``i``
    is in ``S`` and 2 otherwise; comparing these digits from vertex 1 upward
    is the same as comparing sorted member lists lexicographically.
    """
    k = np.asarray(k, dtype=np.int64)
    key = np.zeros_like(k)
    for i in range(1, n):
        rest = k >> (i - 1)
        ended = rest == (1 << (n - i)) - 1
        inside = (rest & 1) == 0
        digit = np.where(ended, 0, np.where(inside, 1, 2))
        key = key * 3 + digit
    return key


def _bit_table(bits: int) -> np.ndarray:
    idx = np.arange(1 << bits, dtype=np.int64)
    return ((idx[:, None] >> np.arange(bits)) & 1).astype(np.float64)


class _Enumerator:
    """Shared tables for block-wise evaluation of ``cut(k)`` over all ``k``."""

    def __init__(self, g: Graph):
        n = g.n
        self.n = n
        self.low = min(n - 1, LOW_BITS)
        self.high = n - 1 - self.low
        a = build_matrix(g, MatrixKind.ADJACENCY).astype(np.float64)
        lo = np.arange(0, self.low + 1)
        hi = np.arange(self.low + 1, n)
        # x_lo[k, j]: side bit of vertex j in the low group (vertex 0 fixed at 0)
        x_lo = np.zeros((1 << self.low, self.low + 1))
        x_lo[:, 1:] = _bit_table(self.low)
        a_ll = a[np.ix_(lo, lo)]
        # cut inside the low group: sum_{u<v} w (x_u + x_v - 2 x_u x_v)
        deg_ll = a_ll.sum(axis=1)
        self.cut_low = x_lo @ deg_ll - np.einsum("ki,ij,kj->k", x_lo, a_ll, x_lo)
        self.x_lo = x_lo
        self.a_lh = a[np.ix_(lo, hi)]
        self.a_hh = a[np.ix_(hi, hi)]

    @property
    def blocks(self) -> int:
        return 1 << self.high

    def values(self, b: int) -> np.ndarray:
        x_h = ((b >> np.arange(self.high)) & 1).astype(np.float64)
        cut_hh = x_h @ self.a_hh.sum(axis=1) - x_h @ self.a_hh @ x_h
        # cross edges: sum_u [x_u = 0] c1_u + [x_u = 1] c0_u
        c1 = self.a_lh @ x_h
        delta = self.a_lh @ (1.0 - 2.0 * x_h)
        return self.cut_low + (cut_hh + c1.sum()) + self.x_lo @ delta

    def indices(self, b: int, local: np.ndarray) -> np.ndarray:
        return (np.int64(b) << self.low) | local.astype(np.int64)


def _scan(en: _Enumerator, blocks: range, tol: float) -> list:
    out = []
    for b in blocks:
        vals = en.values(b)
        best = vals.max()
        local = np.flatnonzero(vals >= best - tol)
        keys = lex_keys(en.indices(b, local), en.n)
        j = int(np.argmin(keys))
        out.append((float(best), int(keys[j]), int(en.indices(b, local[j : j + 1])[0])))
    return out


def _chunks(total: int, parts: int) -> list:
    parts = max(1, min(parts, total))
    edges = [total * i // parts for i in range(parts + 1)]
    return [range(edges[i], edges[i + 1]) for i in range(parts)]


def max_cut(
    g: Graph,
    thread_count: int = 1,
    max_n: int = DEFAULT_MAX_N,
    with_bounds: bool = True,
    spectra: Optional[dict] = None,
) -> CutResult:
    """Exact maximum cut by exhaustive enumeration.

    The witness is the optimal ``S`` (containing vertex 0) with the
    lexicographically smallest sorted member list.  The result does not
    depend on ``thread_count``.
    """
    if thread_count < 1:
        raise ValueError("thread_count must be >= 1")
    if g.n < 1:
        raise GraphError("max_cut needs at least one vertex")
    if g.n > max_n:
        raise EnumerationCapError(
            f"n={g.n} exceeds the enumeration cap {max_n}; 2**{g.n - 1} partitions"
        )
    if g.weights_are_integer and g.total_weight >= 2**52:
        raise GraphError("integer weights too large for exact enumeration")
    tol = 0.0 if g.weights_are_integer else cmp_tol(g.n)
    en = _Enumerator(g)
    ranges = _chunks(en.blocks, thread_count)
    if len(ranges) == 1:
        results = _scan(en, ranges[0], tol)
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = pool.map(lambda r: _scan(en, r, tol), ranges)
            results = [x for part in parts for x in part]
    top = max(r[0] for r in results)
    _, k = min((r[1], r[2]) for r in results if r[0] >= top - tol)
    witness = Partition.from_index(g.n, k)
    mcut = cut_weight(g, witness)
    w = g.total_weight
    bounds = spectral_bounds(g, spectra) if with_bounds else None
    return CutResult(mcut=mcut, witness=witness, mcoh=w - mcut, W=w, bounds=bounds)

