"""Acceptance suite: one test per acceptance criterion, one pass/fail line
each in the pytest report.

Criterion 1 pins the counts for the 4x3 and 5x3 rook graphs to the values
stated in the source material. Independent cross-checked enumeration
(factored, direct, and a from-scratch oracle) agrees on 8640 and 172800
instead, so those two assertions are expected to fail until the source
values are reconciled. See the project decision log for the full analysis.
"""

import time

from bchroma import graph as gr
from bchroma import coloring as col
from bchroma import constructions as cons
from bchroma import formulas
from bchroma import solver
from bchroma.operators import cartesian_product

import test_properties


def rook(n, m):
    return cartesian_product(gr.complete(n), gr.complete(m))


def test_criterion_1_exact_b_coloring_counts():
    t0 = time.time()
    c33 = solver.count_b_colorings(rook(3, 3), 3)
    assert time.time() - t0 < 1.0
    assert c33.count == 12

    t0 = time.time()
    c43 = solver.count_b_colorings(rook(4, 3), 5)
    assert time.time() - t0 < 30.0
    t0 = time.time()
    c53 = solver.count_b_colorings(rook(5, 3), 6)
    assert time.time() - t0 < 120.0
    assert (c43.count, c53.count) == (11384, 570240), (
        "stated counts 11384/570240 vs enumerated %d/%d"
        % (c43.count, c53.count))


def test_criterion_2_star_product_phi_and_certificates():
    for m in range(2, 6):
        for n in range(m, 6):
            g = cons.star_product(n, m)
            assert solver.b_chromatic_number(g).phi == m + 2, (n, m)
            cert = cons.color_star_product(n, m)
            assert cert.coloring.k == m + 2
            assert col.certificate_error(g, cert) is None, (n, m)


def test_criterion_3_line_and_total_graph_phi():
    for n, m in [(2, 2), (3, 2), (3, 3), (4, 3)]:
        g = cons.line_star_product(n, m)
        assert solver.b_chromatic_number(g).phi == m + n, (n, m)
    for n, m, want in [(5, 3, 12), (4, 3, 11)]:
        g = cons.total_star_product(n, m)
        assert solver.b_chromatic_number(g).phi == want, (n, m)
    # the 13-color case may exhaust the budget; the certificate then stands in
    g = cons.total_star_product(5, 4)
    try:
        assert solver.b_chromatic_number(g).phi == 13
    except solver.BudgetExceeded:
        cert = cons.color_total_star_product(5, 4)
        assert cert.coloring.k == 13
        assert col.certificate_error(g, cert) is None


def test_criterion_4_power_phi():
    for m in range(2, 5):
        for n in range(m, 5):
            g = cons.power_star_product(n, m, 2)
            want = m + n + 1 if n > m else 2 * n + 2
            assert solver.b_chromatic_number(g).phi == want, (n, m)
    # fourth power is past the diameter, hence complete: phi = (n+1)(m+1)
    for n, m in [(2, 2), (3, 2)]:
        g = cons.power_star_product(n, m, 4)
        assert len(g.edges) == g.n * (g.n - 1) // 2
        assert formulas.phi_star_product_power(n, m, 4).exact == (n + 1) * (m + 1)
    assert solver.b_chromatic_number(
        cons.power_star_product(2, 2, 4)).phi == 9


def test_criterion_5_rook_exact_values_and_grids():
    rep = solver.b_chromatic_number(rook(3, 3))
    assert rep.phi == 3
    assert rep.per_k_outcomes == {5: "exhausted", 4: "exhausted", 3: "found"}
    assert solver.b_chromatic_number(rook(4, 3)).phi == 5
    assert solver.b_chromatic_number(rook(5, 3)).phi == 6
    for n in (4, 5):
        assert cons.rook_grid_coloring(n).b_error() is None
    for n, k in ((3, 10), (4, 13), (5, 15)):
        g = cons.power_star_product(n, 3, 3)
        cert = cons.power3_rook_certificate(n)
        assert cert.coloring.k == k
        assert col.certificate_error(g, cert) is None, n


def test_criterion_6_m_degree_formulas_match_solver():
    t0 = time.time()
    builders = {
        "star_product": cons.star_product,
        "line_star_product": cons.line_star_product,
        "total_star_product": cons.total_star_product,
        "power2": lambda n, m: cons.power_star_product(n, m, 2),
        "power3": lambda n, m: cons.power_star_product(n, m, 3),
    }
    for family, build in builders.items():
        for m in range(3, 7):
            for n in range(m, 7):
                assert (formulas.m_degree_formula(family, n, m)
                        == solver.m_degree(build(n, m))), (family, n, m)
    assert time.time() - t0 < 10.0


def test_criterion_7_property_suites():
    test_properties.test_sandwich_bound_on_random_compositions()
    test_properties.test_product_phi_lower_bound()
    test_properties.test_power_edge_monotonicity_and_diameter_shortcut()
    test_properties.test_existence_agrees_with_naive_enumeration()


def _case1_expected_cells(fr):
    exp = {fr.hub: 1}
    for i in range(1, 6):
        exp[fr.hub_spoke_e(i)] = 1 + i
    for j in range(1, 4):
        exp[fr.hub_center_e(j)] = 6 + j
        exp[fr.center(j)] = 9 + j
    star_edges = {1: (12, 11, 2, 3, 4), 2: (12, 10, 4, 6, 2),
                  3: (11, 10, 3, 6, 2)}
    leaves = {1: (9, 5, 6, 8, 1), 2: (9, 3, 5, 7, 1), 3: (8, 4, 5, 7, 1)}
    for j in range(1, 4):
        for i in range(1, 6):
            exp[fr.star_e(i, j)] = star_edges[j][i - 1]
            exp[fr.leaf(i, j)] = leaves[j][i - 1]
            exp[fr.cross_e(i, j)] = 9 + j
    return exp


def _case2_expected_cells(fr):
    exp = {fr.hub: 1}
    for i in range(1, 6):
        exp[fr.hub_spoke_e(i)] = 1 + i
    centers = (7, 8, 10, 9)
    for j in range(1, 5):
        exp[fr.center(j)] = centers[j - 1]
    for j in range(1, 4):
        exp[fr.hub_center_e(j)] = 10 + j
    star_edges = {1: (8, 9, 10, 13, 12), 2: (11, 13, 7, 9, 10),
                  3: (7, 11, 12, 8, 9), 4: (8, 13, 11, 12, 10)}
    for j in range(1, 5):
        for i in range(1, 6):
            exp[fr.star_e(i, j)] = star_edges[j][i - 1]
            exp[fr.cross_e(i, j)] = centers[j - 1]
        if j < 4:
            for i in range(1, 6):
                exp[fr.leaf(i, j)] = 1 + i
    return exp


def test_criterion_8_worked_example_snapshots():
    fr = cons._TotalFrame(5, 3)
    colors = cons.color_total_star_product(5, 3).coloring.colors
    for v, want in _case1_expected_cells(fr).items():
        assert colors[v] == want, ("case1", fr.g.labels[v], colors[v], want)

    fr = cons._TotalFrame(5, 4)
    cert = cons.color_total_star_product(5, 4)
    colors = cert.coloring.colors
    assert cert.coloring.k == 13
    for v, want in _case2_expected_cells(fr).items():
        assert colors[v] == want, ("case2", fr.g.labels[v], colors[v], want)
    # the published drawing leaves the fourth outer star's leaf order
    # ambiguous; pin the color set and overall validity instead
    assert sorted(colors[fr.leaf(i, 4)] for i in range(1, 6)) == [2, 3, 4, 5, 6]
    assert col.certificate_error(fr.g, cert) is None
