"""Dense symmetric eigensolver and spectral relations between A, L and Q.

The solver is a cyclic Jacobi method in round-robin (Brent-Luk) ordering:
each sweep is split into rounds of disjoint index pairs, and the rotations
of one round commute, so a round is applied as a handful of vectorized
row/column updates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, MatrixKind, build_matrix, join, regularity

__all__ = [
    "ConvergenceError",
    "Spectrum",
    "SpreadReport",
    "WeylResult",
    "cmp_tol",
    "eig_tol",
    "eigen_sym",
    "graph_spectrum",
    "join_char_poly_roots",
    "join_spectrum_direct",
    "multiset_close",
    "spreads",
    "weyl_check",
]

MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


def cmp_tol(n: int) -> float:
    """Additive slack for comparing eigenvalue expressions on ``n`` vertices."""
    return 1e-7 * max(1, n)


def eig_tol(m: np.ndarray) -> float:
    return 1e-10 * max(1.0, float(np.linalg.norm(m)))


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray  # descending
    vectors: np.ndarray  # column k belongs to values[k]
    residual: float
    sweeps: int

    @property
    def largest(self) -> float:
        return float(self.values[0])

    @property
    def smallest(self) -> float:
        return float(self.values[-1])

    @property
    def spread(self) -> float:
        return float(self.values[0] - self.values[-1])


def _round_robin(n: int) -> list:
    """Rounds of disjoint pairs covering every pair once (circle method)."""
    m = n + (n % 2)
    ring = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(ring[k], ring[m - 1 - k]) for k in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
        ring = [ring[0], ring[-1]] + ring[1:-1]
    return rounds


def eigen_sym(m) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix by Jacobi rotations.

    Converges when the off-diagonal Frobenius norm drops below
    ``1e-12 * ||m||_F``; raises :class:`ConvergenceError` after 100 sweeps.
    """
    a = np.array(m, dtype=np.float64)
    n = a.shape[0]
    if a.ndim != 2 or n != a.shape[1] or n < 1:
        raise ValueError("eigen_sym needs a non-empty square matrix")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    v = np.eye(n)
    norm = np.linalg.norm(a)
    target = 1e-12 * norm
    rounds = _round_robin(n)

    def off(x):
        return np.linalg.norm(x - np.diag(np.diag(x)))

    sweeps = 0
    while off(a) > target:
        if sweeps == MAX_SWEEPS:
            raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
        sweeps += 1
        for p, q in rounds:
            if p.size == 0:
                continue
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            big = np.abs(theta) > 1e150
            theta_safe = np.where(big, 1.0, theta)
            t = np.sign(theta_safe) / (np.abs(theta_safe) + np.sqrt(theta_safe**2 + 1.0))
            t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = a[q, p] = 0.0
            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c

    vals = np.diag(a).copy()
    order = np.argsort(-vals, kind="stable")
    vals, v = vals[order], v[:, order]
    # deterministic sign: first entry of largest magnitude is positive
    pivot = np.argmax(np.abs(v) > np.abs(v).max(axis=0) - 1e-12, axis=0)
    v = v * np.where(v[pivot, np.arange(n)] < 0, -1.0, 1.0)
    m64 = np.asarray(m, dtype=np.float64)
    residual = float(np.max(np.abs(m64 @ v - v * vals))) if n else 0.0
    if residual > eig_tol(m64):
        raise ConvergenceError(f"eigen residual {residual:.3e} above tolerance")
    return Spectrum(vals, v, residual, sweeps)


def graph_spectrum(g: Graph, kind) -> Spectrum:
    return eigen_sym(build_matrix(g, kind))


def multiset_close(x, y, tol: float) -> bool:
    """Compare two eigenvalue multisets pointwise after sorting descending."""
    x = np.sort(np.asarray(x, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    return x.shape == y.shape and bool(np.all(np.abs(x - y) <= tol))


@dataclass(frozen=True)
class SpreadReport:
    s_A: float
    s_L: float
    s_Q: float
    is_regular: bool
    is_connected: bool
    equality_within_tol: bool

    @property
    def lhs(self) -> float:
        return 2 * self.s_A

    @property
    def rhs(self) -> float:
        return self.s_L + self.s_Q


def spreads(g: Graph, spectra: dict | None = None) -> SpreadReport:
    """Spreads of A, L and Q and the comparison ``2 s_A`` vs ``s_L + s_Q``.

    ``spectra`` may carry precomputed :class:`Spectrum` objects keyed by
    ``"A"``, ``"L"``, ``"Q"``.
    """
    spectra = spectra or {}
    sp = {k: spectra.get(k) or graph_spectrum(g, k) for k in "ALQ"}
    s_a = sp["A"].spread
    s_l = sp["L"].largest  # mu_n = 0
    s_q = sp["Q"].spread
    return SpreadReport(
        s_A=s_a,
        s_L=s_l,
        s_Q=s_q,
        is_regular=regularity(g) is not None,
        is_connected=g.is_connected(),
        equality_within_tol=abs(2 * s_a - (s_l + s_q)) <= cmp_tol(g.n),
    )


@dataclass(frozen=True)
class WeylResult:
    holds_upper: bool | None  # None when i + j < n + 1
    holds_lower: bool | None  # None when i + j > n + 1
    upper_slack: float | None  # lambda_{i+j-n}(A+B) - (lambda_i(A) + lambda_j(B))
    lower_slack: float | None  # (lambda_i(A) + lambda_j(B)) - lambda_{i+j-1}(A+B)


def weyl_check(a, b, i: int, j: int) -> WeylResult:
    """Check Weyl's inequalities for eigenvalue indices ``i, j`` (1-based, descending)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n = a.shape[0]
    if a.shape != b.shape:
        raise ValueError("matrices must have the same dimension")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices must lie in 1..{n}")
    la, lb, ls = (eigen_sym(x).values for x in (a, b, a + b))
    tol = cmp_tol(n)
    total = la[i - 1] + lb[j - 1]
    upper = lower = None
    hu = hl = None
    if i + j >= n + 1:
        upper = float(ls[i + j - n - 1] - total)
        hu = upper >= -tol
    if i + j <= n + 1:
        lower = float(total - ls[i + j - 2])
        hl = lower >= -tol
    return WeylResult(hu, hl, upper, lower)


def join_char_poly_roots(h1: Graph, h2: Graph) -> np.ndarray:
    """Adjacency spectrum of ``h1`` joined to ``h2`` for regular ``h1``, ``h2``.

    The spectrum of each part loses its degree eigenvalue, and the two roots
    of ``(x - r1)(x - r2) = n1 * n2`` are added.  When ``n1 + r1 == n2 + r2``
    these roots are ``r1 - n2`` and ``n1 + r1``.
    """
    r1, r2 = regularity(h1), regularity(h2)
    if r1 is None or r2 is None:
        raise GraphError("join_char_poly_roots needs two regular graphs")
    if not (h1.weights_are_integer and h2.weights_are_integer) or any(
        w != 1 for _, _, w in h1.edges + h2.edges
    ):
        raise GraphError("join_char_poly_roots needs unit weights")
    n1, n2 = h1.n, h2.n
    parts = []
    for h, r in ((h1, r1), (h2, r2)):
        vals = graph_spectrum(h, MatrixKind.ADJACENCY).values
        k = int(np.argmin(np.abs(vals - r)))
        parts.append(np.delete(vals, k))
    disc = np.sqrt((r1 - r2) ** 2 + 4.0 * n1 * n2)
    roots = np.array([(r1 + r2 + disc) / 2, (r1 + r2 - disc) / 2])
    out = np.concatenate(parts + [roots])
    return np.sort(out)[::-1]


def join_spectrum_direct(h1: Graph, h2: Graph) -> np.ndarray:
    return graph_spectrum(join(h1, h2), MatrixKind.ADJACENCY).values
