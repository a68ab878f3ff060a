"""Acceptance suite.

Each test appends one ``PASS``/``FAIL`` line to a shared log that is printed
in the terminal summary, then asserts.  Run on its own with
``pytest tests/test_acceptance.py -v``.
"""

import contextlib
import itertools
import json
import time

import networkx as nx
import numpy as np
import pytest

from exactgraphs import graph as G
from exactgraphs.cli import main
from exactgraphs.cut import cohesion, cut_weight, max_cut, spectral_bounds
from exactgraphs.edgelist import write
from exactgraphs.exactness import certify_all, direct_check, structural_check
from exactgraphs.families import (
    certify_family,
    make_a_exact_join,
    make_k2_join_tk2,
    make_regular_join,
    make_same_order_join,
    negative_fixture,
)
from exactgraphs.graph import Graph, build_matrix, join
from exactgraphs.spectra import join_char_poly_roots, join_spectrum_direct, spreads

from conftest import brute_mcut, proper_partitions, random_connected_graph, random_graph

pytestmark = pytest.mark.acceptance


@contextlib.contextmanager
def criterion(log, number, title):
    """Record PASS/FAIL for one criterion; ``detail`` may be filled in by the body."""
    detail = {}
    start = time.perf_counter()
    try:
        yield detail
    except BaseException as exc:
        log.append(f"FAIL  {number}. {title}: {type(exc).__name__}: {exc}"[:300])
        raise
    extra = ", ".join(f"{k}={v}" for k, v in detail.items())
    log.append(f"PASS  {number}. {title} ({extra}; {time.perf_counter() - start:.1f}s)")


def _networkx_graph(h):
    idx = {v: i for i, v in enumerate(h.nodes())}
    return Graph(len(idx), tuple((idx[u], idx[v]) for u, v in h.edges()))


def test_1_structural_equivalence_exhaustive(acceptance_log):
    with criterion(acceptance_log, 1, "structural <=> direct on all connected graphs, 4 <= n <= 7") as d:
        start = time.perf_counter()
        graphs = [
            _networkx_graph(h)
            for h in nx.graph_atlas_g()
            if 4 <= h.number_of_nodes() <= 7 and nx.is_connected(h)
        ]
        assert sum(g.n == 7 for g in graphs) == 853
        disagreements = checks = 0
        for g in graphs:
            for p in proper_partitions(g.n):
                for kind in "ALQ":
                    v = structural_check(g, p, kind)
                    lam = direct_check(g, p, kind)
                    checks += 1
                    if v.satisfied != (lam is not None) or v.eigenvalue != lam:
                        disagreements += 1
        elapsed = time.perf_counter() - start
        d.update(graphs=len(graphs), checks=checks, disagreements=disagreements)
        assert disagreements == 0
        assert elapsed < 60


def test_2_bound_suite(acceptance_log):
    with criterion(acceptance_log, 2, "spectral upper bounds hold against brute-force mcut") as d:
        rng = np.random.default_rng(2)
        violations = 0
        cases = [(None, 1000), ((1, 5), 200)]
        for weights, count in cases:
            for _ in range(count):
                g = random_graph(rng, int(rng.integers(2, 13)), 0.5, weights)
                mcut = brute_mcut(g)
                tol = 1e-7 * max(1, g.n)
                b = spectral_bounds(g)
                violations += sum(mcut > v + tol for v in b.as_dict().values())
        d.update(graphs=1200, violations=violations)
        assert violations == 0


def test_3_quadratic_form_identities(acceptance_log):
    with criterion(acceptance_log, 3, "p'Qp = sum w(p_i+p_j)^2 = 4 cohesion, p'Lp = 4 cut") as d:
        rng = np.random.default_rng(3)
        checked = failures = 0
        for _ in range(100):
            g = random_graph(rng, int(rng.integers(2, 9)), 0.5, (1, 5) if rng.random() < 0.5 else None)
            q, l = build_matrix(g, "Q"), build_matrix(g, "L")
            for p in proper_partitions(g.n):
                x = p.vector
                edge_sum = sum(w * (x[u] + x[v]) ** 2 for u, v, w in g.edges)
                ok = x @ q @ x == edge_sum == 4 * cohesion(g, p) and x @ l @ x == 4 * cut_weight(g, p)
                failures += not ok
                checked += 1
        d.update(partitions=checked, failures=failures)
        assert failures == 0


def test_4_spread_inequality(acceptance_log):
    with criterion(acceptance_log, 4, "2 s_A <= s_L + s_Q, equality exactly on regular graphs") as d:
        rng = np.random.default_rng(4)
        tol = 1e-7
        graphs = [random_connected_graph(rng, int(rng.integers(2, 11))) for _ in range(450)]
        # random regular connected graphs so the equality side is exercised
        while len(graphs) < 500:
            n = int(rng.integers(3, 11))
            r = int(rng.integers(2, n))
            if n * r % 2:
                continue
            h = nx.random_regular_graph(r, n, seed=int(rng.integers(1 << 30)))
            if nx.is_connected(h):
                graphs.append(_networkx_graph(h))
        bad = regular = 0
        for g in graphs:
            rep = spreads(g)
            regular += rep.is_regular
            equal = abs(rep.lhs - rep.rhs) <= tol
            if rep.lhs > rep.rhs + tol or equal != rep.is_regular:
                bad += 1
        k4c4 = spreads(G.disjoint_union(G.complete(4), G.cycle(4)))
        d.update(graphs=len(graphs), regular=regular, bad=bad)
        assert bad == 0
        assert abs(k4c4.lhs - k4c4.rhs) <= tol and not k4c4.is_regular


def test_5_family_regression(acceptance_log):
    with criterion(acceptance_log, 5, "exact-family regression") as d:
        start = time.perf_counter()
        for t in range(2, 9):
            g, spec = make_k2_join_tk2(t)
            rep = certify_family(spec, g)
            assert rep.exact_kinds == ("Q",), t
            assert abs(rep.certificates["Q"].eigenvalue_used - 2) <= 1e-7 * g.n

        rng = np.random.default_rng(5)
        for _ in range(50):
            n = int(rng.integers(1, 9))
            h1 = random_graph(rng, n, rng.uniform(0, 1))
            h2 = random_graph(rng, n, rng.uniform(0, 1))
            g, spec = make_same_order_join(h1, h2)
            assert certify_all(g)["L"].is_exact

        for m, n in itertools.product(range(4, 8), repeat=2):
            assert certify_all(join(G.cycle(m), G.cycle(n)))["Q"].is_exact, (m, n)
            g, spec = make_regular_join(G.cycle(m), G.cycle(n))
            certify_family(spec, g)

        for n in range(4, 8):
            g, spec = negative_fixture("c3_join_cn", n)
            assert not certify_family(spec, g).certificates["Q"].is_exact
        g, spec = negative_fixture("k33_join_k4")
        assert not certify_family(spec, g).certificates["Q"].is_exact

        g, spec = make_a_exact_join(G.cycle(4), G.empty(6))
        c = certify_family(spec, g).certificates["A"]
        assert c.is_exact and abs(c.eigenvalue_used + 4) <= 1e-7
        elapsed = time.perf_counter() - start
        d.update(k2_tk2="t=2..8", same_order=50, cycle_joins=16, negatives=5)
        assert elapsed < 300


def test_6_join_spectrum_formula(acceptance_log):
    with criterion(acceptance_log, 6, "join characteristic-polynomial roots match decomposition") as d:
        rng = np.random.default_rng(6)
        pairs = []
        while len(pairs) < 30:
            comps = []
            for _ in range(2):
                n = int(rng.integers(1, 10))
                r = int(rng.integers(0, n))
                if n * r % 2:
                    break
                comps.append(_networkx_graph(nx.random_regular_graph(r, n, seed=int(rng.integers(1 << 30)))))
            if len(comps) == 2:
                pairs.append(tuple(comps))
        worst = 0.0
        unequal = 0
        for h1, h2 in pairs:
            roots = np.sort(join_char_poly_roots(h1, h2))
            direct = np.sort(join_spectrum_direct(h1, h2))
            worst = max(worst, float(np.max(np.abs(roots - direct))))
            r1, r2 = G.regularity(h1), G.regularity(h2)
            unequal += h1.n + r1 != h2.n + r2
        d.update(pairs=len(pairs), unequal_n_plus_r=unequal, max_error=f"{worst:.1e}")
        assert worst <= 1e-6
        assert unequal > 0


def test_7_max_cut_closed_forms(acceptance_log):
    with criterion(acceptance_log, 7, "mcut(K_n) = floor(n/2) ceil(n/2), mcut(C_n) = n or n-1") as d:
        for n in range(3, 11):
            assert max_cut(G.complete(n), with_bounds=False).mcut == (n // 2) * ((n + 1) // 2)
        for n in range(4, 13):
            assert max_cut(G.cycle(n), with_bounds=False).mcut == (n if n % 2 == 0 else n - 1)
        d.update(complete="3..10", cycles="4..12")


def test_8_thread_determinism(acceptance_log, tmp_path, capsys):
    with criterion(acceptance_log, 8, "analyze --json identical for --threads 1 and 8") as d:
        rng = np.random.default_rng(8)
        sizes = [int(rng.integers(4, 13)) for _ in range(17)] + [16, 17, 18]
        differing = 0
        for i, n in enumerate(sizes):
            weights = (1, 5) if i % 3 == 0 else None
            path = tmp_path / f"g{i}.txt"
            write(random_graph(rng, n, 0.5, weights), path)
            outputs = []
            for threads in ("1", "8"):
                assert main(["analyze", str(path), "--json", "--threads", threads]) == 0
                outputs.append(capsys.readouterr().out)
            json.loads(outputs[0])
            differing += outputs[0] != outputs[1]
        d.update(inputs=len(sizes), differing=differing)
        assert differing == 0

