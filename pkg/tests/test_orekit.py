"""Tests for the Ore-condition toolkit: witness search, annihilating
denominator powers, denominator spot checks, and the localization pairing."""

import random

import pytest

from opalg.errors import NotADenominator, OpalgError
from opalg import intdiff, jacobian, onesided
from opalg.orekit import (
    UNKNOWN,
    OreWitness,
    Unknown,
    ass_member,
    denominator_check,
    localization_pair_check,
    ore_witness,
    ring_handle,
)


S1 = ring_handle("s1")
I1 = ring_handle("i1")
A1 = ring_handle("a1")
ALL = (S1, I1, A1)


def ymono(i, j):
    return onesided.sn_monomial(1, (i,), (j,))


class TestUnknownSentinel:
    def test_no_truth_value(self):
        with pytest.raises(TypeError):
            bool(UNKNOWN)

    def test_singleton(self):
        assert Unknown() is UNKNOWN
        assert repr(UNKNOWN) == "Unknown"

    def test_comparisons_stay_usable(self):
        assert UNKNOWN is not None
        assert (UNKNOWN is UNKNOWN) is True


class TestRingHandle:
    def test_names(self):
        assert S1.name == "s1"
        assert I1.name == "i1"
        assert A1.name == "a1"

    def test_unknown_backend(self):
        with pytest.raises(OpalgError):
            ring_handle("weyl2")

    def test_tensor_handle(self):
        h = ring_handle("s1", n=2)
        assert h.n == 2
        s = h.denominator(3)
        assert h.denominator_power(s) == 3

    def test_denominator_power_recognition(self):
        assert S1.denominator_power(ymono(0, 3)) == 3
        assert S1.denominator_power(ymono(0, 0)) == 0
        assert S1.denominator_power(ymono(1, 0)) is None
        assert S1.denominator_power(2 * ymono(0, 1)) is None
        assert I1.denominator_power(intdiff.i1_d(2)) == 2
        assert I1.denominator_power(intdiff.i1_int()) is None
        assert A1.denominator_power(jacobian.a1_d() ** 4) == 4
        assert A1.denominator_power(jacobian.a1_x()) is None


class TestOreWitness:
    def test_worked_one_sided(self):
        # y^5 x^2 = 1 * y^3 is the first matching power.
        w = ore_witness(S1, ymono(2, 0), ymono(0, 3))
        assert isinstance(w, OreWitness)
        assert w.k == 5
        assert w.s_prime == ymono(0, 5)
        assert w.r_prime == onesided.sn_one(1)

    def test_worked_integro(self):
        w = ore_witness(I1, intdiff.i1_int(), intdiff.i1_d())
        assert w.k == 2
        assert w.r_prime == intdiff.i1_one()
        assert intdiff.i1_mul(w.s_prime, intdiff.i1_int()) == intdiff.i1_mul(
            w.r_prime, intdiff.i1_d()
        )

    def test_worked_jacobian(self):
        w = ore_witness(A1, jacobian.a1_int(), jacobian.a1_d())
        assert w.k == 2
        assert jacobian.a1_equal(w.r_prime, jacobian.a1_one())

    def test_bound_monotonicity(self):
        r = ymono(9, 0)
        s = ymono(0, 3)
        assert ore_witness(S1, r, s, bound=5) is UNKNOWN
        w = ore_witness(S1, r, s, bound=12)
        assert w.k == 12

    def test_requires_denominator_power(self):
        with pytest.raises(NotADenominator):
            ore_witness(S1, ymono(1, 1), ymono(2, 0))
        with pytest.raises(NotADenominator):
            ore_witness(A1, jacobian.a1_h(), jacobian.a1_x())

    def test_witnesses_satisfy_defining_equation(self):
        rng = random.Random(7701)
        for handle in ALL:
            checked = 0
            for _ in range(30):
                r = handle.sample(rng)
                m = rng.randint(1, 3)
                s = handle.denominator(m)
                w = ore_witness(handle, r, s, bound=10)
                if w is UNKNOWN:
                    continue
                checked += 1
                assert handle.eq(
                    handle.mul(w.s_prime, r), handle.mul(w.r_prime, s)
                )
                assert handle.denominator_power(w.s_prime) == w.k
            assert checked >= 15

    def test_repr(self):
        w = ore_witness(I1, intdiff.i1_int(), intdiff.i1_d())
        assert repr(w) == "OreWitness(k=2)"


class TestAssMember:
    def test_one_sided_socle(self):
        e00 = onesided.matrix_unit(1, (0,), (0,))
        assert ass_member(S1, e00) == 1
        for l in range(3):
            e2l = onesided.matrix_unit(1, (2,), (l,))
            assert ass_member(S1, e2l) == 3

    def test_regular_elements_never_annihilate(self):
        assert ass_member(S1, ymono(1, 0)) is UNKNOWN
        assert ass_member(I1, intdiff.i1_int()) is UNKNOWN
        assert ass_member(A1, jacobian.a1_x(), bound=8) is UNKNOWN

    def test_integro_socle(self):
        for k in range(3):
            for l in range(3):
                assert ass_member(I1, intdiff.i1_e(k, l)) == k + 1

    def test_jacobian_socle(self):
        for i in range(3):
            for j in range(3):
                assert ass_member(A1, jacobian.a1_E(i, j)) == i + 1

    def test_zero_element(self):
        assert ass_member(S1, onesided.sn_zero(1)) == 0


class TestDenominatorCheck:
    def test_no_right_annihilation(self):
        for handle in ALL:
            report = denominator_check(handle, samples=40, bound=5, seed=7702)
            assert report.violations == []
            assert report.checks > 0

    def test_custom_sampler(self):
        def sampler(rng):
            return ymono(rng.randint(0, 2), rng.randint(0, 2))

        report = denominator_check(S1, samples=10, bound=3, seed=1,
                                   sampler=sampler)
        assert report.violations == []

    def test_deterministic(self):
        a = denominator_check(I1, samples=15, bound=4, seed=3)
        b = denominator_check(I1, samples=15, bound=4, seed=3)
        assert a.checks == b.checks
        assert repr(a) == repr(b)


class TestLocalizationPairing:
    def test_regular_elements_pair_with_denominators(self):
        report = localization_pair_check(samples=12, bound=16, seed=7703)
        assert report.failures == 0
        assert report.samples == 12
        assert len(report.pairs) == 12

    def test_pairs_push_into_y_polynomials(self):
        from opalg.onesided import decompose_s1, sn_monomial

        report = localization_pair_check(samples=8, bound=16, seed=7704)
        for s, k in report.pairs:
            shifted = sn_monomial(1, (0,), (k,)) * s
            assert decompose_s1(shifted).xpart.is_zero()

    def test_minimality_of_reported_power(self):
        from opalg.onesided import decompose_s1, sn_monomial

        report = localization_pair_check(samples=8, bound=16, seed=7705)
        for s, k in report.pairs:
            if k == 0:
                continue
            shifted = sn_monomial(1, (0,), (k - 1,)) * s
            assert not decompose_s1(shifted).xpart.is_zero()
