import json

import pytest

from bchroma import formulas


def test_phi_result_exactness_and_containment():
    exact = formulas.phi_star_product(4, 3)
    assert exact.is_exact and exact.exact == 5
    assert exact.contains(5) and not exact.contains(6)
    bounds = formulas.phi_star_product_power(5, 4, 3)
    assert not bounds.is_exact
    assert bounds.lower == 15 and bounds.upper == 22
    with pytest.raises(ValueError):
        formulas.PhiResult(5, 4, "x")


def test_phi_star():
    assert formulas.phi_star(0).exact == 1
    assert formulas.phi_star(7).exact == 2


def test_phi_line_star_notes_the_off_by_one():
    res = formulas.phi_line_star(5)
    assert res.exact == 5
    assert "discrepancy" in res.note


def test_phi_star_product():
    assert formulas.phi_star_product(5, 2).exact == 4
    assert formulas.phi_star_product(2, 5).exact == 4  # arguments commute
    below = formulas.phi_star_product(4, 1)
    assert not below.preconditions_met and below.contains(2)


def test_phi_line_and_total():
    assert formulas.phi_line_star_product(4, 3).exact == 7
    assert formulas.phi_total_star_product(5, 3).exact == 12
    assert formulas.phi_total_star_product(5, 4).exact == 13
    assert formulas.phi_total_star_product(4, 3).exact == 11  # boundary
    with pytest.raises(ValueError):
        formulas.phi_total_star_product(4, 2)


def test_phi_star_power():
    assert formulas.phi_star_power(5, 1).exact == 2
    assert formulas.phi_star_power(5, 2).exact == 6
    assert formulas.phi_star_power(5, 9).exact == 6


def test_phi_star_product_power_cases():
    assert formulas.phi_star_product_power(4, 3, 1).exact == 5
    assert formulas.phi_star_product_power(4, 3, 2).exact == 8
    assert formulas.phi_star_product_power(3, 3, 2).exact == 8
    assert formulas.phi_star_product_power(7, 3, 3).exact == 18  # n >= m(m-1)
    assert formulas.phi_star_product_power(4, 3, 3).exact == 13  # table entry
    assert formulas.phi_star_product_power(3, 2, 4).exact == 12
    assert formulas.phi_star_product_power(2, 2, 4).exact == 9


def test_phi_rook_bounds():
    assert formulas.phi_rook_bounds(7, 3).exact == 7
    assert formulas.phi_rook_bounds(4, 3).exact == 5
    res = formulas.phi_rook_bounds(8, 4)
    assert res.lower == 8 and res.upper == 12


def test_m_degree_formula():
    assert formulas.m_degree_formula("star_product", 5, 3) == 5
    assert formulas.m_degree_formula("line_star_product", 5, 3) == 8
    assert formulas.m_degree_formula("total_star_product", 5, 3) == 12
    assert formulas.m_degree_formula("total_star_product", 4, 4) == 11
    assert formulas.m_degree_formula("power2", 4, 3) == 9
    assert formulas.m_degree_formula("power3", 4, 3) == 14
    with pytest.raises(ValueError):
        formulas.m_degree_formula("nope", 3, 3)
    with pytest.raises(ValueError):
        formulas.m_degree_formula("total_star_product", 4, 2)


def test_theorem_table_serializes():
    obj = json.loads(formulas.theorem_table_json())
    assert obj["schema"] == "bchroma/1"
    ids = {t["theorem_id"] for t in obj["theorems"]}
    assert {"star-product", "rook", "total-star-product"} <= ids
    for t in obj["theorems"]:
        assert t["results"]
