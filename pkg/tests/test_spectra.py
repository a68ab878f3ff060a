import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from exactgraphs import graph as G
from exactgraphs.graph import Graph, build_matrix, join, regularity
from exactgraphs.spectra import (
    ConvergenceError,
    eigen_sym,
    graph_spectrum,
    join_char_poly_roots,
    join_spectrum_direct,
    multiset_close,
    spreads,
    weyl_check,
)

from conftest import graphs, random_connected_graph

PHI = (1 + math.sqrt(5)) / 2

# Spectra below were read off factored characteristic polynomials (sympy).
KNOWN = [
    ("K2", G.complete(2), "A", [1, -1]),
    ("K2", G.complete(2), "L", [2, 0]),
    ("K2", G.complete(2), "Q", [2, 0]),
    ("K33", G.complete_bipartite(3, 3), "A", [3, 0, 0, 0, 0, -3]),
    ("K33", G.complete_bipartite(3, 3), "L", [6, 3, 3, 3, 3, 0]),
    ("K4", G.complete(4), "Q", [6, 2, 2, 2]),
    ("C4", G.cycle(4), "Q", [4, 2, 2, 0]),
    ("P3", G.path(3), "A", [math.sqrt(2), 0, -math.sqrt(2)]),
    ("P3", G.path(3), "Q", [3, 1, 0]),
    ("C5", G.cycle(5), "A", [2, 1 / PHI, 1 / PHI, -PHI, -PHI]),
    ("C5", G.cycle(5), "L", [(5 + math.sqrt(5)) / 2] * 2 + [(5 - math.sqrt(5)) / 2] * 2 + [0]),
    ("petersen", G.petersen(), "A", [3] + [1] * 5 + [-2] * 4),
    ("petersen", G.petersen(), "L", [5] * 4 + [2] * 5 + [0]),
    ("petersen", G.petersen(), "Q", [6] + [4] * 5 + [1] * 4),
]


@pytest.mark.parametrize("name,g,kind,expected", KNOWN, ids=[f"{k[0]}-{k[2]}" for k in KNOWN])
def test_known_spectra(name, g, kind, expected):
    sp = graph_spectrum(g, kind)
    assert np.allclose(sp.values, sorted(expected, reverse=True), atol=1e-10)


def test_values_are_descending_and_vectors_orthonormal():
    sp = graph_spectrum(G.petersen(), "Q")
    assert np.all(np.diff(sp.values) <= 0)
    assert np.allclose(sp.vectors.T @ sp.vectors, np.eye(10), atol=1e-10)


def test_single_vertex():
    sp = eigen_sym([[3.0]])
    assert sp.values.tolist() == [3.0]


def test_rejects_non_symmetric():
    with pytest.raises(ValueError):
        eigen_sym([[0, 1], [2, 0]])


def test_convergence_error_is_runtime_error():
    assert issubclass(ConvergenceError, RuntimeError)


@pytest.mark.parametrize("n", [2, 5, 12, 31, 40])
def test_random_symmetric_against_numpy(n):
    rng = np.random.default_rng(n)
    x = rng.normal(size=(n, n))
    m = x + x.T
    sp = eigen_sym(m)
    assert np.allclose(sp.values, np.linalg.eigvalsh(m)[::-1], atol=1e-9 * np.linalg.norm(m))
    assert np.allclose(m @ sp.vectors, sp.vectors * sp.values, atol=1e-9 * np.linalg.norm(m))


@settings(max_examples=25, deadline=None)
@given(graphs(min_n=2, max_n=6, weighted=True), st.sampled_from("ALQ"))
def test_against_characteristic_polynomial_roots(g, kind):
    m = build_matrix(g, kind)
    poly = sympy.Matrix(m.tolist()).charpoly()
    ref = sorted((float(r.evalf(30)) for r in poly.real_roots()), reverse=True)
    assert np.allclose(graph_spectrum(g, kind).values, ref, atol=1e-9)


class TestIdentities:
    @given(graphs(weighted=True))
    def test_traces(self, g):
        d = g.degrees()
        for kind, tr in (("A", 0), ("L", sum(d)), ("Q", sum(d))):
            assert sum(graph_spectrum(g, kind).values) == pytest.approx(tr, abs=1e-9)

    @given(graphs(weighted=True))
    def test_laplacian_kernel_and_psd(self, g):
        lv = graph_spectrum(g, "L").values
        qv = graph_spectrum(g, "Q").values
        assert abs(lv[-1]) < 1e-9
        assert qv[-1] > -1e-9

    @given(graphs(min_n=2))
    def test_bipartite_components_give_q_zero(self, g):
        # q_n = 0 exactly when some component is bipartite
        comps = _components(g)
        has_bip = any(G.induced_subgraph(g, c).is_bipartite() for c in comps)
        assert (abs(graph_spectrum(g, "Q").smallest) < 1e-9) == has_bip

    @given(graphs(min_n=2))
    def test_bipartite_l_and_q_cospectral(self, g):
        if g.is_bipartite():
            assert multiset_close(
                graph_spectrum(g, "L").values, graph_spectrum(g, "Q").values, 1e-9
            )

    @given(st.sampled_from([G.cycle(6), G.petersen(), G.complete(5), G.matching(3)]))
    def test_regular_shifts(self, g):
        r = regularity(g)
        a = graph_spectrum(g, "A").values
        assert np.allclose(graph_spectrum(g, "L").values, np.sort(r - a)[::-1], atol=1e-10)
        assert np.allclose(graph_spectrum(g, "Q").values, r + a, atol=1e-10)


def _components(g):
    seen, comps = set(), []
    for s in range(g.n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(comp)
    return comps


class TestSpreads:
    def test_k4_plus_c4_equality_without_regularity(self):
        g = G.disjoint_union(G.complete(4), G.cycle(4))
        rep = spreads(g)
        assert rep.equality_within_tol and not rep.is_regular
        assert rep.s_A == pytest.approx(5) and rep.s_L == pytest.approx(4)
        assert rep.s_Q == pytest.approx(6)

    def test_path_strict(self):
        rep = spreads(G.path(3))
        assert rep.lhs < rep.rhs - 1e-3

    def test_petersen(self):
        rep = spreads(G.petersen())
        assert (rep.s_A, rep.s_L, rep.s_Q) == pytest.approx((5, 5, 5))
        assert rep.equality_within_tol and rep.is_regular

    @given(graphs(min_n=2, weighted=True))
    def test_inequality(self, g):
        rep = spreads(g)
        assert rep.lhs <= rep.rhs + 1e-7 * g.n


class TestWeyl:
    @settings(max_examples=40)
    @given(st.integers(2, 7), st.data())
    def test_holds_for_random_pairs(self, n, data):
        rng = np.random.default_rng(data.draw(st.integers(0, 10**6)))
        a = rng.normal(size=(n, n))
        b = rng.normal(size=(n, n))
        i = data.draw(st.integers(1, n))
        j = data.draw(st.integers(1, n))
        res = weyl_check(a + a.T, b + b.T, i, j)
        assert res.holds_upper in (None, True)
        assert res.holds_lower in (None, True)
        assert (res.holds_upper is None) == (i + j < n + 1)
        assert (res.holds_lower is None) == (i + j > n + 1)

    def test_laplacian_plus_signless(self):
        # L + Q = 2D
        g = G.path(4)
        res = weyl_check(build_matrix(g, "L"), build_matrix(g, "Q"), 2, 3)
        assert res.holds_upper and res.holds_lower

    def test_index_range(self):
        with pytest.raises(ValueError):
            weyl_check(np.eye(2), np.eye(2), 0, 1)


class TestJoinSpectrum:
    def test_c4_join_empty6(self):
        roots = join_char_poly_roots(G.cycle(4), G.empty(6))
        assert np.allclose(roots, [6] + [0] * 7 + [-2, -4], atol=1e-10)

    def test_formula_with_unequal_n_plus_r(self):
        # n1 + r1 = 7 differs from n2 + r2 = 9: the roots are 2 +- sqrt(35), not -5 and 7
        h1, h2 = G.cycle(5), G.cycle(7)
        direct = join_spectrum_direct(h1, h2)
        assert multiset_close(join_char_poly_roots(h1, h2), direct, 1e-9)
        assert np.isclose(direct, 2 + math.sqrt(35)).sum() == 1
        assert np.isclose(direct, 2 - math.sqrt(35)).sum() == 1
        r1, n1, n2 = 2, 5, 7
        assert not np.any(np.isclose(direct, r1 - n2))
        assert not np.any(np.isclose(direct, n1 + r1))

    @pytest.mark.parametrize(
        "h1,h2",
        [
            (G.cycle(5), G.cycle(7)),
            (G.complete(3), G.empty(2)),
            (G.petersen(), G.complete(4)),
            (G.matching(3), G.cycle(4)),
        ],
    )
    def test_matches_direct(self, h1, h2):
        assert multiset_close(join_char_poly_roots(h1, h2), join_spectrum_direct(h1, h2), 1e-9)

    def test_requires_regular(self):
        with pytest.raises(G.GraphError):
            join_char_poly_roots(G.path(3), G.cycle(4))

    def test_requires_unit_weights(self):
        with pytest.raises(G.GraphError):
            join_char_poly_roots(Graph(2, ((0, 1, 2),)), G.cycle(4))


def test_connected_random_graphs_against_numpy(rng):
    for _ in range(30):
        g = random_connected_graph(rng, int(rng.integers(2, 13)))
        for kind in "ALQ":
            m = build_matrix(g, kind)
            assert np.allclose(graph_spectrum(g, kind).values, np.linalg.eigvalsh(m)[::-1], atol=1e-10)

