"""Polynomials, rational functions, integer roots and shifts."""

import random
from fractions import Fraction

import pytest

from opalg import (
    RatFunc,
    UniPoly,
    ZeroPolynomial,
    falling_factorial_poly,
    mu_of_poly,
    natplus_roots,
    poly_shift,
    rising_product,
)
from opalg.scalars import scalar_from_str, scalar_to_str

from samplers import random_unipoly


def test_construction_strips_trailing_zeros():
    p = UniPoly((1, 2, 0, 0))
    assert p.degree == 1
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert UniPoly(()).is_zero()
    assert UniPoly((0, 0)).degree == -1


def test_arithmetic_matches_evaluation():
    rng = random.Random(1)
    for _ in range(60):
        p = random_unipoly(rng, max_deg=4, allow_zero=True)
        q = random_unipoly(rng, max_deg=4, allow_zero=True)
        t = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        assert (p + q).eval(t) == p.eval(t) + q.eval(t)
        assert (p - q).eval(t) == p.eval(t) - q.eval(t)
        assert (p * q).eval(t) == p.eval(t) * q.eval(t)
        assert (p ** 3).eval(t) == p.eval(t) ** 3


def test_divmod_and_gcd():
    rng = random.Random(2)
    for _ in range(40):
        p = random_unipoly(rng, max_deg=4)
        q = random_unipoly(rng, max_deg=2)
        quo, rem = p.divmod(q)
        assert quo * q + rem == p
        assert rem.is_zero() or rem.degree < q.degree
        g = (p * q).gcd(q)
        assert q.divmod(g)[1].is_zero()
    with pytest.raises(ZeroPolynomial):
        UniPoly((1,)).divmod(UniPoly(()))


def test_shift_is_substitution():
    rng = random.Random(3)
    for _ in range(40):
        p = random_unipoly(rng, max_deg=4)
        i = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        t = Fraction(rng.randint(-4, 4))
        assert p.shift(i).eval(t) == p.eval(t + i)
        assert p.shift(i).shift(-i) == p
    assert poly_shift(UniPoly((0, 1)), 2) == UniPoly((2, 1))


def test_compose_and_from_roots():
    p = UniPoly.from_roots([1, 4])
    assert p == UniPoly((4, -5, 1))
    inner = UniPoly((1, 1))
    assert p.compose(inner).eval(0) == p.eval(1)
    assert p.compose(inner).eval(3) == p.eval(4)


def test_natplus_roots_basic():
    H = UniPoly.gen()
    assert natplus_roots(H - 3) == {3}
    assert natplus_roots(H + 5) == set()
    assert natplus_roots((H - 1) * (H - 4)) == {1, 4}
    assert natplus_roots(H ** 2) == set()
    assert natplus_roots(UniPoly.const(7)) == set()
    assert natplus_roots((H - 2) ** 2 * (H + 1)) == {2}
    assert natplus_roots(2 * (H - 3)) == {3}
    assert natplus_roots(H - Fraction(1, 2)) == set()
    assert natplus_roots(Fraction(1, 6) * (H - 2) * (H - 3)) == {2, 3}
    with pytest.raises(ZeroPolynomial):
        natplus_roots(UniPoly(()))


def test_mu_of_poly():
    H = UniPoly.gen()
    assert mu_of_poly(H - 3) == 3
    assert mu_of_poly(H + 5) == 0
    assert mu_of_poly((H - 1) * (H - 4)) == 4
    for p in (H - 3, (H - 1) * (H - 4), (H - 2) ** 2):
        mu = mu_of_poly(p)
        assert natplus_roots(p.shift(mu)) == set()
        if mu:
            assert natplus_roots(p.shift(mu - 1)) != set()


def test_falling_and_rising_products():
    fall3 = falling_factorial_poly(3)
    assert fall3.eval(5) == 5 * 4 * 3
    assert fall3.eval(2) == 0
    assert falling_factorial_poly(0).eval(9) == 1
    assert rising_product(2, 3) == 3 * 4 * 5
    assert rising_product(0, 4) == 24
    assert rising_product(Fraction(1, 2), 2) == Fraction(3, 2) * Fraction(5, 2)


def test_ratfunc_reduction_and_ops():
    H = UniPoly.gen()
    f = RatFunc((H ** 2 - 1), (H - 1))
    assert f == RatFunc(H + 1)
    g = RatFunc(UniPoly((1,)), H)
    rng = random.Random(4)
    for _ in range(30):
        t = Fraction(rng.randint(2, 9))
        assert (f * g).eval_checked(t) == f.eval_checked(t) * g.eval_checked(t)
        assert (f + g).eval_checked(t) == f.eval_checked(t) + g.eval_checked(t)
        assert (f - g).eval_checked(t) == f.eval_checked(t) - g.eval_checked(t)
    assert g.eval_checked(0) is None
    assert g.shift(1).eval_checked(0) == 1


def test_ratfunc_integer_poles():
    H = UniPoly.gen()
    f = RatFunc(UniPoly((1,)), (H - 2) * (H + 3) * H)
    assert f.integer_poles() == {2, -3, 0}
    assert RatFunc(H).integer_poles() == set()
    half = RatFunc(UniPoly((1,)), H - Fraction(1, 2))
    assert half.integer_poles() == set()


def test_render_and_scalars():
    H = UniPoly.gen()
    assert ((H - 1) ** 2).render() == "H^2-2*H+1"
    assert UniPoly((), "y").render() == "0"
    assert UniPoly((Fraction(1, 2), 0, -1), "d").render() == "-d^2+1/2"
    assert scalar_to_str(Fraction(3, 4)) == "3/4"
    assert scalar_to_str(Fraction(5)) == "5"
    assert scalar_from_str("-7/2") == Fraction(-7, 2)
