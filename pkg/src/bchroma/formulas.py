"""Closed-form phi predictions and m-degree formulas: the theorem table as
data, queried by name and parameters."""

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class PhiResult:
    """Either an exact value (lower == upper) or a bound interval, tagged
    with the formula that produced it."""

    lower: int
    upper: int
    source: str
    preconditions_met: bool = True
    note: str = ""

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound above upper bound")

    @property
    def exact(self):
        return self.lower if self.lower == self.upper else None

    @property
    def is_exact(self):
        return self.lower == self.upper

    def contains(self, value):
        return self.lower <= value <= self.upper

    def to_json_obj(self):
        obj = {"source": self.source, "preconditions_met": self.preconditions_met}
        if self.is_exact:
            obj["exact"] = self.lower
        else:
            obj["lower"] = self.lower
            obj["upper"] = self.upper
        if self.note:
            obj["note"] = self.note
        return obj


def _exact(value, source, note=""):
    return PhiResult(value, value, source, True, note)


def phi_star(n):
    if n < 0:
        raise ValueError("needs n >= 0")
    if n == 0:
        return _exact(1, "star", "S_0 is the one-vertex graph")
    return _exact(2, "star")


def phi_line_star(n):
    """phi of the line graph of a star. L(S_n) is K_n (the n edges pairwise
    share the center), so the value is n; the source text states n-1, an
    off-by-one this table does not adopt."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return _exact(n, "line-star",
                  "source text says n-1, but L(S_n) = K_n forces n "
                  "(solver-confirmed); recorded discrepancy")


def phi_star_product(n, m):
    n, m = max(n, m), min(n, m)
    if m < 0:
        raise ValueError("needs n, m >= 0")
    if m < 2:
        return PhiResult(2, m + 2, "star-product", False,
                         "below m = 2 the formula is solver-arbitrated")
    return _exact(m + 2, "star-product")


def phi_line_star_product(n, m):
    n, m = max(n, m), min(n, m)
    if m < 1:
        raise ValueError("needs n, m >= 1")
    return _exact(n + m, "line-star-product")


def phi_total_star_product(n, m):
    n, m = max(n, m), min(n, m)
    if m < 3:
        raise ValueError("outside theorem hypothesis: needs n >= m >= 3")
    if n > 2 * (m - 1):
        return _exact(2 * m + n + 1, "total-star-product")
    return _exact(2 * n + 3, "total-star-product")


def phi_star_power(n, k):
    if n < 1 or k < 1:
        raise ValueError("needs n >= 1 and k >= 1")
    if k == 1:
        return _exact(2, "star-power")
    return _exact(n + 1, "star-power")


# Exact power-3 values published for m = 3 below the n >= m(m-1) threshold.
_POWER3_EXACT = {(3, 3): 10, (4, 3): 13, (5, 3): 15}


def phi_star_product_power(n, m, k):
    n, m = max(n, m), min(n, m)
    if m < 1 or k < 1:
        raise ValueError("needs n >= m >= 1 and k >= 1")
    if k == 1:
        return phi_star_product(n, m)
    if k == 2:
        if n > m:
            return _exact(m + n + 1, "star-product-power")
        return _exact(2 * n + 2, "star-product-power")
    if k == 3:
        if n >= m * (m - 1):
            return _exact(2 * n + m + 1, "star-product-power")
        if (n, m) in _POWER3_EXACT:
            return _exact(_POWER3_EXACT[(n, m)], "star-product-power",
                          "special-case table entry inside the general bounds")
        return PhiResult(2 * n + m + 1, m * m + n + 1, "star-product-power")
    return _exact(n * m + n + m + 1, "star-product-power")


# Published exact rook values for m = 3 below the n >= m(m-1) threshold.
_ROOK_EXACT = {(3, 3): 3, (4, 3): 5, (5, 3): 6}


def phi_rook_bounds(n, m):
    n, m = max(n, m), min(n, m)
    if m < 1:
        raise ValueError("needs n, m >= 1")
    if n >= m * (m - 1):
        return _exact(n, "rook")
    if (n, m) in _ROOK_EXACT:
        return _exact(_ROOK_EXACT[(n, m)], "rook", "special-case table entry")
    return PhiResult(n, m * (m - 1), "rook")


_MDEGREE_FAMILIES = {
    "star_product": (2, lambda n, m: m + 2),
    "line_star_product": (2, lambda n, m: m + n),
    "total_star_product": (3, lambda n, m: 2 * m + n + 1 if n > 2 * (m - 1)
                           else 2 * n + 3),
    "power2": (2, lambda n, m: m + n + 2),
    "power3": (2, lambda n, m: 2 * m + 2 * n),
}


def m_degree_formula(family, n, m):
    if family not in _MDEGREE_FAMILIES:
        raise ValueError("unknown family %r; choose from %s"
                         % (family, sorted(_MDEGREE_FAMILIES)))
    min_m, fn = _MDEGREE_FAMILIES[family]
    n, m = max(n, m), min(n, m)
    if m < min_m:
        raise ValueError("family %r needs n >= m >= %d" % (family, min_m))
    return fn(n, m)


def theorem_table():
    """The formula table as data: one entry per closed form."""
    entries = [
        {"theorem_id": "star", "hypothesis": "n >= 0",
         "formula_text": "phi(S_n) = 1 if n = 0 else 2",
         "results": {str(n): phi_star(n).to_json_obj() for n in range(0, 6)}},
        {"theorem_id": "line-star", "hypothesis": "n >= 1",
         "formula_text": "phi(L(S_n)) = n  [source text says n-1; "
                         "L(S_n) = K_n, discrepancy recorded]",
         "results": {str(n): phi_line_star(n).to_json_obj() for n in range(1, 6)}},
        {"theorem_id": "star-product", "hypothesis": "n >= m >= 2",
         "formula_text": "phi(S_n box S_m) = m + 2",
         "results": {"%d,%d" % (n, m): phi_star_product(n, m).to_json_obj()
                     for m in range(1, 5) for n in range(m, 6)}},
        {"theorem_id": "line-star-product", "hypothesis": "n, m >= 1",
         "formula_text": "phi(L(S_n box S_m)) = m + n",
         "results": {"%d,%d" % (n, m): phi_line_star_product(n, m).to_json_obj()
                     for m in range(1, 5) for n in range(m, 6)}},
        {"theorem_id": "total-star-product", "hypothesis": "n >= m >= 3",
         "formula_text": "phi(T(S_n box S_m)) = 2m+n+1 if n > 2(m-1) else 2n+3",
         "results": {"%d,%d" % (n, m): phi_total_star_product(n, m).to_json_obj()
                     for m in range(3, 5) for n in range(m, 7)}},
        {"theorem_id": "star-power", "hypothesis": "n >= 1, k >= 1",
         "formula_text": "phi(S_n^k) = 2 if k = 1 else n + 1",
         "results": {"%d,%d" % (n, k): phi_star_power(n, k).to_json_obj()
                     for n in range(1, 5) for k in range(1, 4)}},
        {"theorem_id": "star-product-power", "hypothesis": "n >= m >= 1, k >= 1",
         "formula_text": "phi((S_n box S_m)^k): m+2 / m+n+1 or 2n+2 / "
                         "[2n+m+1, m^2+n+1] / nm+n+m+1 for k = 1/2/3/>=4",
         "results": {"%d,%d,%d" % (n, m, k):
                     phi_star_product_power(n, m, k).to_json_obj()
                     for m in range(1, 4) for n in range(m, 6)
                     for k in range(1, 5)}},
        {"theorem_id": "rook", "hypothesis": "n >= m >= 1",
         "formula_text": "phi(K_n box K_m) = n if n >= m(m-1), "
                         "else within [n, m(m-1)]",
         "results": {"%d,%d" % (n, m): phi_rook_bounds(n, m).to_json_obj()
                     for m in range(1, 4) for n in range(m, 7)}},
    ]
    return entries


def theorem_table_json():
    return json.dumps({"schema": "bchroma/1", "theorems": theorem_table()},
                      indent=2)
