import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from waldbound.exact import (
    Poly,
    RootInterval,
    cauchy_bound,
    largest_real_root,
    poly_derivative,
    poly_eval,
    poly_gcd,
    simplest_between,
    square_free_part,
    sturm_count,
    to_decimal_string,
    to_rat,
)

from oracles import sign_scan_roots

CUBIC5 = Poly([5, -5, 0, F(1, 6)])  # t^3/6 - 5t + 5

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_poly_normalizes_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero()
    assert Poly().degree == -1


@pytest.mark.parametrize("p, k, expected", [
    (CUBIC5, 1, Poly([-5, 0, F(1, 2)])),
    (CUBIC5, 0, CUBIC5),
    (Poly.monomial(4, F(1, 24)), 2, Poly.monomial(2, F(1, 2))),
    (Poly([3]), 1, Poly()),
])
def test_poly_derivative(p, k, expected):
    assert poly_derivative(p, k) == expected


def test_poly_eval():
    assert poly_eval(Poly([-1, 1]), 1) == 0
    assert poly_eval(CUBIC5, 5) == F(5, 6)
    quartic = Poly([F(29, 36), F(-2, 3), 0, 0, F(1, 24)])
    assert poly_eval(quartic, F(4, 3)) > 0


def test_division_identity():
    a = Poly([1, -3, 0, 2, F(1, 5)])
    b = Poly([F(2, 3), 1, 1])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_and_square_free():
    p = Poly.from_roots([1, 1, 2, F(1, 3)])
    assert poly_gcd(p, poly_derivative(p)) == Poly([-1, 1])
    assert square_free_part(p) == Poly.from_roots([1, 2, F(1, 3)])


def test_format():
    assert str(Poly([-1, 1])) == "t - 1"
    assert str(CUBIC5) == "(1/6)*t^3 - 5*t + 5"
    assert str(Poly()) == "0"
    assert str(Poly([0, -2])) == "-2*t"


def test_json_round_trip():
    assert CUBIC5.to_json() == ["5", "-5", "0", "1/6"]
    assert Poly.from_json(["5", "-5", "0", "1/6"]) == CUBIC5
    with pytest.raises(ValueError):
        Poly.from_json("5")


@pytest.mark.parametrize("p, lo, hi, expected", [
    (Poly([-2, 0, 1]), 0, 2, 1),
    (CUBIC5, 0, 10, 2),
    (Poly([1, 0, 1]), -10, 10, 0),
])
def test_sturm_count_examples(p, lo, hi, expected):
    assert sturm_count(p, lo, hi) == expected


def test_sturm_count_matches_sign_scan():
    # roots near 1.05 and 4.88 are far apart; a 200-point grid separates them
    assert sign_scan_roots(CUBIC5.coeffs, 0, 10, 200) == sturm_count(CUBIC5, 0, 10) == 2
    assert sign_scan_roots(CUBIC5.coeffs, -10, 0, 200) == sturm_count(CUBIC5, -10, 0) == 1


def test_sturm_count_half_open():
    p = Poly.from_roots([1, 2, 3])
    assert sturm_count(p, 1, 3) == 2
    assert sturm_count(p, 0, 1) == 1
    assert sturm_count(p * p, 0, 4) == 3


def test_sturm_count_errors():
    with pytest.raises(ValueError, match="indeterminate root count"):
        sturm_count(Poly(), 0, 1)
    with pytest.raises(ValueError):
        sturm_count(CUBIC5, 1, 1)


def test_largest_root_examples():
    r = largest_real_root(Poly([-1, 0, F(1, 2)]), F(1, 10**6))
    assert r.hi - r.lo <= F(1, 10**6)
    assert r.lo ** 2 <= 2 <= r.hi ** 2
    assert largest_real_root(Poly([-1, 0, F(1, 2)])).decimal() == "1.414214"
    r = largest_real_root(CUBIC5, F(1, 10**6))
    assert abs(r.midpoint - F("4.88447")) < F(1, 10**5)
    assert largest_real_root(Poly([1, 0, 1])) is None


def test_largest_root_errors():
    with pytest.raises(ValueError):
        largest_real_root(Poly([3]))
    with pytest.raises(ValueError):
        largest_real_root(CUBIC5, 0)


def test_largest_root_is_certified():
    r = largest_real_root(CUBIC5)
    assert sturm_count(CUBIC5, r.lo, r.hi) == 1
    assert poly_eval(CUBIC5, r.lo) * poly_eval(CUBIC5, r.hi) < 0
    assert sturm_count(CUBIC5, r.hi, cauchy_bound(CUBIC5)) == 0


def test_rational_roots_snap_exactly():
    r = largest_real_root(Poly([-8, 0, F(1, 2)]))
    assert r.exact and r.lo == 4
    r = largest_real_root(Poly.from_roots([F(-1, 7), F(5, 3)]))
    assert r.exact and r.lo == F(5, 3)


def test_repeated_roots():
    p = Poly.from_roots([2, 2, 2, -1])
    r = largest_real_root(p)
    assert 2 in r


def test_simplest_between():
    assert simplest_between(F(3, 10), F(4, 10)) == F(1, 3)
    assert simplest_between(F(-5, 2), F(-2)) == -2
    assert simplest_between(F(-1), F(1)) == 0
    assert simplest_between(F(7, 5), F(7, 5)) == F(7, 5)


def test_decimal_rendering_half_even():
    assert to_decimal_string(F(1, 8), 2) == "0.12"
    assert to_decimal_string(F(3, 8), 2) == "0.38"
    assert to_decimal_string(F(64, 13)) == "4.923077"
    assert to_decimal_string(F(-1, 10**9)) == "0.000000"


def test_to_rat():
    assert to_rat("1/6") == F(1, 6)
    assert to_rat("1e-6") == F(1, 10**6)
    assert to_rat(0.5) == F(1, 2)
    with pytest.raises(TypeError):
        to_rat(True)


def test_root_interval_json():
    r = RootInterval(F(1), F(3, 2), F(1))
    assert RootInterval.from_json(r.to_json()) == r
    with pytest.raises(ValueError):
        RootInterval(F(2), F(1), F(1))


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=8, unique=True),
       st.fractions(min_value=F(1, 10), max_value=10, max_denominator=10),
       rationals, rationals)
def test_roots_of_products(roots, lead, a, b):
    p = Poly.from_roots(roots, lead)
    r = largest_real_root(p, F(1, 10**6))
    assert max(roots) in r
    lo, hi = min(a, b), max(a, b)
    if lo < hi:
        assert sturm_count(p, lo, hi) == sum(lo < x <= hi for x in roots)


@settings(max_examples=50, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6), st.lists(rationals, min_size=1, max_size=6),
       rationals, rationals)
def test_derivative_is_linear(pc, qc, a, b):
    p, q = Poly(pc), Poly(qc)
    lhs = poly_derivative(p.scale(a) + q.scale(b), 1)
    assert lhs == poly_derivative(p, 1).scale(a) + poly_derivative(q, 1).scale(b)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=2, max_size=6),
       st.fractions(min_value=F(1, 50), max_value=100, max_denominator=50))
def test_sturm_count_scale_invariant(pc, c):
    p = Poly(pc)
    if p.degree < 1:
        return
    assert sturm_count(p, -30, 30) == sturm_count(p.scale(c), -30, 30)


def test_rational_canonical_form_under_random_operations():
    rng = random.Random(7)
    x = F(1)
    for _ in range(1000):
        y = F(rng.randint(-50, 50), rng.randint(1, 50))
        op = rng.choice("+-*/")
        if op == "+":
            x = x + y
        elif op == "-":
            x = x - y
        elif op == "*":
            x = x * y if y else x
        elif y:
            x = x / y
        if abs(x.numerator) > 10**40:
            x = F(1, 3)
        assert x.denominator > 0
        assert math.gcd(abs(x.numerator), x.denominator) == 1
