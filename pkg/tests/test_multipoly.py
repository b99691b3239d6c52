"""Tests for multivariate polynomials, shift operators and their fractions."""

import random
from fractions import Fraction

import pytest

from opalg.errors import DimensionMismatch, DivisionByZeroImage, ZeroPolynomial
from opalg.multipoly import (
    MultiPoly,
    MultiRationalFunction,
    ShiftSpec,
    finite_difference,
    lex_leading,
)


def random_multipoly(rng, n, max_deg=2, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(n))
        terms[exps] = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
    return MultiPoly(n, terms)


def random_point(rng, n):
    return tuple(Fraction(rng.randint(-5, 5), rng.choice([1, 1, 2])) for _ in range(n))


class TestArithmetic:
    def test_ops_agree_with_evaluation(self):
        rng = random.Random(2201)
        for _ in range(30):
            n = rng.randint(1, 3)
            f = random_multipoly(rng, n)
            g = random_multipoly(rng, n)
            pt = random_point(rng, n)
            assert (f + g).eval(pt) == f.eval(pt) + g.eval(pt)
            assert (f - g).eval(pt) == f.eval(pt) - g.eval(pt)
            assert (f * g).eval(pt) == f.eval(pt) * g.eval(pt)
            assert (f ** 2).eval(pt) == f.eval(pt) ** 2

    def test_mixed_size_operands_rejected(self):
        f = MultiPoly.gen(2, 0)
        g = MultiPoly.gen(3, 0)
        with pytest.raises(DimensionMismatch):
            f + g

    def test_shift_var_matches_substitution(self):
        rng = random.Random(2202)
        for _ in range(20):
            n = rng.randint(1, 3)
            f = random_multipoly(rng, n)
            i = rng.randrange(n)
            delta = Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
            pt = random_point(rng, n)
            shifted_pt = tuple(
                c + delta if j == i else c for j, c in enumerate(pt))
            assert f.shift_var(i, delta).eval(pt) == f.eval(shifted_pt)

    def test_render_names_variables_by_index(self):
        f = MultiPoly.gen(2, 0) * MultiPoly.gen(2, 1)
        assert "H1" in f.render() and "H2" in f.render()


class TestLexLeading:
    def test_last_variable_dominates(self):
        h1 = MultiPoly.gen(2, 0)
        h2 = MultiPoly.gen(2, 1)
        phi = h1 ** 2 * h2 + h1 ** 3
        coeff, exps = lex_leading(phi)
        assert coeff == 1
        assert exps == (2, 1)

    def test_single_variable_degree(self):
        h = MultiPoly.gen(1, 0)
        coeff, exps = lex_leading(3 * h ** 4 - h)
        assert (coeff, exps) == (3, (4,))

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            lex_leading(MultiPoly.const(2, 0))


class TestFiniteDifference:
    def test_second_difference_of_square(self):
        h = MultiPoly.gen(1, 0)
        spec = ShiftSpec((1,), direction=-1)
        out = finite_difference(h ** 2, (2,), spec)
        assert out == MultiPoly.const(1, 2)

    def test_difference_kills_lower_degree(self):
        h = MultiPoly.gen(1, 0)
        spec = ShiftSpec((1,), direction=-1)
        assert finite_difference(5 * h + 7, (2,), spec).is_zero()

    def test_leading_exponent_collapses_to_constant(self):
        rng = random.Random(2203)
        for _ in range(25):
            n = rng.randint(1, 3)
            phi = random_multipoly(rng, n)
            steps = tuple(Fraction(rng.randint(1, 3), rng.choice([1, 2]))
                          for _ in range(n))
            spec = ShiftSpec(steps, direction=-1)
            coeff, d = lex_leading(phi)
            out = finite_difference(phi, d, spec)
            expected = coeff
            for i, di in enumerate(d):
                for t in range(1, di + 1):
                    expected *= t * steps[i]
            assert out == MultiPoly.const(n, expected)

    def test_direction_sign_flips_shift(self):
        h = MultiPoly.gen(1, 0)
        fwd = ShiftSpec((1,), direction=1)
        assert fwd.sigma(h, 0) == h + 1
        back = ShiftSpec((1,), direction=-1)
        assert back.sigma(h, 0) == h - 1

    def test_dimension_checked(self):
        h = MultiPoly.gen(2, 0)
        with pytest.raises(DimensionMismatch):
            finite_difference(h, (1, 0), ShiftSpec((1,), direction=-1))

    def test_bad_direction_rejected(self):
        with pytest.raises(ValueError):
            ShiftSpec((1,), direction=0)


class TestMultiRationalFunction:
    def test_equality_by_cross_multiplication(self):
        h1 = MultiPoly.gen(2, 0)
        h2 = MultiPoly.gen(2, 1)
        a = MultiRationalFunction(h1 * h2, h2 ** 2)
        b = MultiRationalFunction(h1, h2)
        assert a == b

    def test_content_reduction(self):
        h = MultiPoly.gen(1, 0)
        f = MultiRationalFunction(2 * h ** 2, 4 * h)
        g = MultiRationalFunction(h, MultiPoly.const(1, 2))
        assert f == g

    def test_field_ops(self):
        h1 = MultiPoly.gen(2, 0)
        h2 = MultiPoly.gen(2, 1)
        f = MultiRationalFunction(h1, h2)
        g = MultiRationalFunction(h2, h1)
        one = MultiRationalFunction(MultiPoly.const(2, 1), MultiPoly.const(2, 1))
        assert f * g == one
        assert f / f == one
        assert (f + g) - g == f
        assert f.invert() == g
        assert f.invert().invert() == f

    def test_zero_denominator_rejected(self):
        h = MultiPoly.gen(1, 0)
        with pytest.raises(DivisionByZeroImage):
            MultiRationalFunction(h, MultiPoly.const(1, 0))

    def test_invert_zero_rejected(self):
        h = MultiPoly.gen(1, 0)
        f = MultiRationalFunction(MultiPoly.const(1, 0), h)
        with pytest.raises(DivisionByZeroImage):
            f.invert()
