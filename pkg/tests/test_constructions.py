import pytest

from bchroma import coloring as col
from bchroma import constructions as cons
from bchroma import formulas


def test_star_product_certificates_validate():
    for m in range(2, 7):
        for n in range(m, 7):
            g = cons.star_product(n, m)
            cert = cons.color_star_product(n, m)
            assert cert.coloring.k == m + 2
            assert col.certificate_error(g, cert) is None, (n, m)


def test_star_product_coloring_preconditions():
    with pytest.raises(ValueError):
        cons.color_star_product(3, 1)
    with pytest.raises(ValueError):
        cons.color_star_product(2, 3)


def test_line_star_product_certificates_validate():
    for m in range(1, 7):
        for n in range(m, 7):
            g = cons.line_star_product(n, m)
            cert = cons.color_line_star_product(n, m)
            assert cert.coloring.k == n + m
            assert col.certificate_error(g, cert) is None, (n, m)


def test_total_star_product_certificates_validate():
    for m in range(3, 7):
        for n in range(m, 7):
            g = cons.total_star_product(n, m)
            cert = cons.color_total_star_product(n, m)
            want = 2 * m + n + 1 if n > 2 * (m - 1) else 2 * n + 3
            assert cert.coloring.k == want
            assert col.certificate_error(g, cert) is None, (n, m)


def test_total_star_product_boundary_case():
    # n = 2(m-1): both branch formulas agree, the construction still validates
    cert = cons.color_total_star_product(4, 3)
    assert cert.coloring.k == 11
    assert col.certificate_error(cons.total_star_product(4, 3), cert) is None


def test_power_certificates_validate():
    for p in range(1, 6):
        for m in range(1, 5):
            for n in range(m, 5):
                if p == 1 and m < 2:
                    continue
                g = cons.power_star_product(n, m, p)
                cert = cons.color_power_star_product(n, m, p)
                assert col.certificate_error(g, cert) is None, (n, m, p)
    g = cons.power_star_product(6, 3, 3)
    cert = cons.color_power_star_product(6, 3, 3)
    assert col.certificate_error(g, cert) is None


def test_power_certificate_k_matches_formula():
    for p in range(2, 6):
        for m in range(1, 5):
            for n in range(m, 5):
                cert = cons.color_power_star_product(n, m, p)
                res = formulas.phi_star_product_power(n, m, p)
                assert res.contains(cert.coloring.k), (n, m, p)
                if res.is_exact:
                    assert cert.coloring.k == res.exact, (n, m, p)


def test_rook_grid_colorings():
    for n in range(3, 9):
        grid = cons.rook_grid_coloring(n)
        assert grid.rows == n and grid.cols == 3
        assert grid.is_proper()
        assert grid.b_error() is None, n
    assert cons.rook_grid_coloring(3).color_count() == 3
    assert cons.rook_grid_coloring(4).color_count() == 5
    assert cons.rook_grid_coloring(5).color_count() == 6
    with pytest.raises(ValueError):
        cons.rook_grid_coloring(2)


def test_grid_text_and_json():
    grid = cons.rook_grid_coloring(4)
    text = grid.to_text()
    assert "(" in text and text.count("\n") == 4
    obj = grid.to_json_obj()
    assert obj["rows"] == 4 and len(obj["grid"]) == 4


def test_grid_b_error_reports_missing_color():
    grid = cons.GridColoring(2, 2, {(1, 1): 1, (1, 2): 2, (2, 1): 2,
                                    (2, 2): 3}, frozenset([(1, 1)]))
    assert grid.is_proper()
    assert "3" in grid.b_error()


def test_power3_rook_certificates():
    for n, k in ((3, 10), (4, 13), (5, 15)):
        g = cons.power_star_product(n, 3, 3)
        cert = cons.power3_rook_certificate(n)
        assert cert.coloring.k == k
        assert col.certificate_error(g, cert) is None, n


def test_embed_rook_rejects_bad_offset():
    grid = cons.rook_grid_coloring(3)
    with pytest.raises(ValueError):
        cons.embed_rook_into_power3(3, 3, grid, offset=2)
