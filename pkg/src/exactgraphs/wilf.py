"""Exhaustive search for +-1 eigenvectors of A, L and Q.

For a partition vector ``p`` write ``y_i = p_i (A p)_i``, the weight from
``i`` to its own side minus the weight to the other side.  Then ``p`` is an
eigenvector of

* A iff ``y`` is constant (eigenvalue ``y_i``),
* Q iff ``d + y`` is constant (twice the common inside degree),
* L iff ``d - y`` is constant (twice the common cut degree).

The search reuses the block layout of :mod:`exactgraphs.cut`: ``A x`` for
the low vertices is tabulated once and each block adds a constant vector.
No eigendecomposition happens inside the loop.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .cut import DEFAULT_MAX_N, LOW_BITS, EnumerationCapError, _bit_table, _chunks
from .exactness import KINDS
from .graph import Graph, GraphError, MatrixKind, Partition, build_matrix
from .spectra import cmp_tol, graph_spectrum

__all__ = ["WilfSolution", "wilf_decide", "wilf_solve"]


@dataclass(frozen=True)
class WilfSolution:
    matrix_kind: str
    eigenvalue: float
    partition: Partition
    eigenvalue_index: int  # 1-based position in the descending spectrum
    multiplicity: int

    def sort_key(self):
        return (KINDS.index(self.matrix_kind), self.eigenvalue, self.partition.sort_key())


class _Search:
    def __init__(self, g: Graph, kinds: tuple, tol: float):
        n = g.n
        self.n, self.kinds, self.tol = n, kinds, tol
        self.low = min(n - 1, LOW_BITS)
        self.high = n - 1 - self.low
        a = build_matrix(g, MatrixKind.ADJACENCY).astype(np.float64)
        self.d = a.sum(axis=1)
        lo = np.arange(self.low + 1)
        self.hi = np.arange(self.low + 1, n)
        x_lo = np.zeros((1 << self.low, self.low + 1))
        x_lo[:, 1:] = _bit_table(self.low)
        self.ax_lo = x_lo @ a[lo, :]
        self.p_lo = 1.0 - 2.0 * x_lo
        self.a_hi = a[:, self.hi]

    def scan(self, blocks: range) -> list:
        n, low = self.n, self.low
        found = []
        for b in blocks:
            x_h = ((b >> np.arange(self.high)) & 1).astype(np.float64)
            ax = self.ax_lo + self.a_hi @ x_h
            p = np.empty((self.ax_lo.shape[0], n))
            p[:, : low + 1] = self.p_lo
            p[:, low + 1 :] = 1.0 - 2.0 * x_h
            y = p * (self.d - 2.0 * ax)
            for kind in self.kinds:
                z = y if kind == "A" else (self.d + y if kind == "Q" else self.d - y)
                ok = np.all(np.abs(z - z[:, :1]) <= self.tol, axis=1)
                if b == 0:
                    ok[0] = False  # S = V
                for j in np.flatnonzero(ok):
                    k = (b << low) | int(j)
                    found.append((kind, float(z[j, 0]), k))
        return found


def wilf_solve(
    g: Graph,
    kinds: Iterable[str] = KINDS,
    *,
    thread_count: int = 1,
    max_n: int = DEFAULT_MAX_N,
    tol: Optional[float] = None,
) -> list:
    """All nonconstant +-1 eigenvectors of the requested matrices.

    Each bipartition is reported once, with ``S`` containing vertex 0.
    Solutions are sorted by kind, eigenvalue and member list.
    """
    kinds = tuple(sorted({MatrixKind(k).value for k in kinds}, key="ALQD".index))
    if "D" in kinds:
        raise ValueError("wilf_solve handles A, L and Q only")
    if g.n < 1:
        raise GraphError("wilf_solve needs at least one vertex")
    if g.n > max_n:
        raise EnumerationCapError(f"n={g.n} exceeds the enumeration cap {max_n}")
    if g.n == 1 or not kinds:
        return []
    tol = cmp_tol(g.n) if tol is None else tol
    search = _Search(g, kinds, 0.0 if g.weights_are_integer else tol)
    ranges = _chunks(1 << search.high, thread_count)
    if len(ranges) == 1:
        raw = search.scan(ranges[0])
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            raw = [x for part in pool.map(search.scan, ranges) for x in part]

    spectra = {k: graph_spectrum(g, k).values for k in kinds if any(r[0] == k for r in raw)}
    out = []
    for kind, lam, k in raw:
        if g.weights_are_integer:
            lam = int(round(lam))
        vals = spectra[kind]
        close = np.flatnonzero(np.abs(vals - lam) <= tol)
        if close.size == 0:
            raise RuntimeError(f"{kind} eigenvalue {lam} missing from the computed spectrum")
        out.append(
            WilfSolution(kind, lam, Partition.from_index(g.n, k), int(close[0]) + 1, int(close.size))
        )
    out.sort(key=WilfSolution.sort_key)
    return out


def wilf_decide(g: Graph, kind, **kw) -> bool:
    return bool(wilf_solve(g, [kind], **kw))
