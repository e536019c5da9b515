import cmath
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torsion_cosets import (
    LaurentPoly,
    UniPoly,
    cyclotomic_factor_orders,
    cyclotomic_poly,
    eval_is_zero_at_torsion,
    resultant,
    substitute_powers,
)
from torsion_cosets.errors import DegenerateElimination, ZeroPolynomial
from torsion_cosets.ntheory import divisors


@pytest.mark.parametrize(
    "K, coeffs",
    [(1, [-1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1]), (12, [1, 0, -1, 0, 1])],
)
def test_cyclotomic_examples(K, coeffs):
    assert cyclotomic_poly(K) == UniPoly(coeffs)


def test_cyclotomic_product_identity():
    for K in range(1, 201):
        lhs = prod((cyclotomic_poly(d) for d in divisors(K)), start=UniPoly([1]))
        assert lhs == UniPoly([-1] + [0] * (K - 1) + [1]), K


def test_unipoly_divmod_reconstructs():
    a = UniPoly([3, -1, 0, 5, 2])
    b = UniPoly([1, Fraction(1, 2), 1])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_eval_examples(poly):
    assert eval_is_zero_at_torsion(poly("x + y - 1"), (1, 5), 6)
    assert not eval_is_zero_at_torsion(poly("x + y - 1"), (1, 1), 6)
    for K in (1, 5, 12):
        for c in range(K):
            assert eval_is_zero_at_torsion(poly("x*y - 1"), (c, K - c), K)
    assert not eval_is_zero_at_torsion(LaurentPoly({(1,): 1, (0,): -1}, 1), (1,), 2)


def _float_eval(f, a, K):
    z = [cmath.exp(2j * cmath.pi * x / K) for x in a]
    return sum(float(c) * prod(zz**e for zz, e in zip(z, exp)) for exp, c in f.terms.items())


laurent2 = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.integers(-3, 3).filter(bool),
    min_size=1,
    max_size=5,
).map(lambda t: LaurentPoly(t, 2))


@settings(max_examples=300, deadline=None)
@given(laurent2, st.integers(1, 60), st.data())
def test_eval_matches_float_oracle(f, K, data):
    a = (data.draw(st.integers(0, K - 1)), data.draw(st.integers(0, K - 1)))
    assert eval_is_zero_at_torsion(f, a, K) == (abs(_float_eval(f, a, K)) < 1e-6)


def test_eval_rejects_bad_input(poly):
    with pytest.raises(ValueError):
        eval_is_zero_at_torsion(poly("x + y"), (1,), 3)
    with pytest.raises(ValueError):
        eval_is_zero_at_torsion(poly("x + y"), (1, 1), 0)


def test_substitute_examples(poly):
    assert substitute_powers(poly("x + y - 1"), (1, 1), 2) == poly("x^2 + y^2 - 1")
    assert substitute_powers(poly("x + y - 1"), (-1, -1), 2) == poly("-x^2 - y^2 - 1")
    assert substitute_powers(poly("x*y - 1"), (1, -1), 2) == poly("-x^2*y^2 - 1")
    assert substitute_powers(poly("x^-1 + y"), (-1, 1), 1) == poly("-x^-1 + y")


@given(laurent2, st.integers(1, 4), st.integers(1, 4))
def test_substitute_composes(f, e1, e2):
    once = substitute_powers(substitute_powers(f, (1, 1), e1), (1, 1), e2)
    assert once == substitute_powers(f, (1, 1), e1 * e2)


def test_resultant_examples(poly):
    f = poly("y + x - 1")
    assert resultant(f, poly("-y^2 - x^2 - 1"), 1) == UniPoly([-2, 2, -2])
    assert resultant(f, poly("y^2 + x^2 - 1"), 1) == UniPoly([0, -2, 2])
    assert resultant(poly("y - x"), poly("y - x"), 1).is_zero()


@pytest.mark.parametrize(
    "f, g, shared",
    [
        ("x + y - 1", "x*y - 1", False),
        ("x*y^2 - 1", "x^2*y^4 - 1", True),
        ("x^2*y + x - 3", "y^3 + 2", False),
        ("x*y - 1", "x^2*y^2 - 2*x*y + 1 + x*y - 1", True),
        ("x + y^-1", "x^2 - y^-2", True),
        ("x + y^-1", "x^2 + y^-2 + 1", False),
    ],
)
def test_resultant_vanishes_iff_common_factor(poly, f, g, shared):
    assert resultant(poly(f), poly(g), 1).is_zero() == shared


def test_resultant_errors(poly):
    with pytest.raises(DegenerateElimination):
        resultant(poly("x - 1"), poly("y - 1"), 1)
    with pytest.raises(ValueError):
        resultant(LaurentPoly({(1,): 1}, 1), poly("y"), 1)


def test_resultant_strips_torus_monomial(poly):
    # x^-1 shift must not leave a spurious factor of x
    r = resultant(poly("y - x^-1"), poly("y - 1"), 1)
    assert r.valuation() == 0
    assert cyclotomic_factor_orders(r) == {1}


def test_cyclotomic_factor_orders_examples():
    assert cyclotomic_factor_orders(UniPoly([-2, 2, -2])) == {6}
    assert cyclotomic_factor_orders(UniPoly([-1, 1])) == {1}
    assert cyclotomic_factor_orders(UniPoly([3, 0, 1])) == set()
    with pytest.raises(ZeroPolynomial):
        cyclotomic_factor_orders(UniPoly())


non_cyclo = st.lists(st.integers(-5, 5), min_size=2, max_size=4).map(UniPoly).filter(
    lambda r: r.degree >= 1 and not cyclotomic_factor_orders(r)
)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 100), non_cyclo)
def test_cyclotomic_factor_orders_finds_planted_factor(m, r):
    assert m in cyclotomic_factor_orders(cyclotomic_poly(m) * r)


def test_laurent_arithmetic(poly):
    f = poly("x + y - 1")
    assert (f * f - f**2).is_zero()
    assert f(Fraction(1), Fraction(0)) == 0
    assert poly("x^-2*y + 3").min_exponents() == (-2, 0)
    assert poly("x^3*y^-1 + x*y^2").total_degree() == 3
