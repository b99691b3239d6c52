"""Acceptance suite: twelve end-to-end checks covering the defining
relations, fuzzed algebra laws, regularity criteria against brute-force
oracles, degree witnesses, localization maps, the finite-difference
identity, Ore machinery, scalar transport, and the command line driver.

Each check prints a single PASS/FAIL line; all arithmetic is exact."""

import contextlib
import io
import json
import pathlib
import random
import time
from fractions import Fraction
from math import factorial

import pytest

from opalg import intdiff, jacobian, onesided, s1reg
from opalg.cli import main as cli_main
from opalg.errors import ElementInF, NoDegreeFound
from opalg.lfrac import LFraction
from opalg.multipoly import MultiPoly, ShiftSpec, finite_difference, lex_leading
from opalg.orekit import UNKNOWN, OreWitness, denominator_check, ass_member, \
    ore_witness, ring_handle
from opalg.unipoly import UniPoly, mu_of_poly

from oracles import a1_oracle, i1_oracle, s1_oracle
from samplers import (
    random_a1,
    random_i1,
    random_s1,
    random_s1_fpart,
    random_scalar,
)

H = UniPoly.gen("H")


@pytest.fixture
def announce(capsys):
    @contextlib.contextmanager
    def _announce(cid, desc):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"{cid} FAIL {desc}")
            raise
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"{cid} PASS {desc} ({elapsed:.1f}s)")

    return _announce


def s1_unit(i, j):
    return onesided.matrix_unit(1, (i,), (j,))


def hpoly(*coeffs):
    return UniPoly(coeffs, "H")


def test_c01_relation_suite(announce):
    with announce("C01", "defining relations hold in all three algebras"):
        x = onesided.gen_x(1, 0)
        y = onesided.gen_y(1, 0)
        one = onesided.sn_one(1)
        zero = onesided.sn_zero(1)
        assert y * x == one
        assert x * y == one - s1_unit(0, 0)
        for i in range(5):
            for j in range(5):
                for k in range(5):
                    for l in range(5):
                        product = s1_unit(i, j) * s1_unit(k, l)
                        assert product == (s1_unit(i, l) if j == k else zero)
        for i in range(5):
            for j in range(5):
                assert x * s1_unit(i, j) == s1_unit(i + 1, j)
                shifted = s1_unit(i, j) * x
                assert shifted == (s1_unit(i, j - 1) if j else zero)

        D, INT = intdiff.i1_d(), intdiff.i1_int()
        i1_one = intdiff.i1_one()
        assert intdiff.i1_mul(D, INT) == i1_one
        assert intdiff.i1_mul(INT, D) == i1_one - intdiff.i1_e(0, 0)
        corner_i1 = i1_one - intdiff.i1_mul(INT, D)
        assert intdiff.i1_mul(intdiff.i1_h(), corner_i1) == corner_i1

        assert jacobian.a1_mul(jacobian.a1_d(), jacobian.a1_x()) == jacobian.a1_h()
        xd = jacobian.a1_mul(jacobian.a1_x(), jacobian.a1_d())
        assert xd == jacobian.a1_from_lfrac(LFraction(hpoly(-1, 1)))
        corner = jacobian.a1_one() - jacobian.a1_mul(
            jacobian.a1_x(),
            jacobian.a1_mul(jacobian.a1_hinv(), jacobian.a1_d()))
        assert jacobian.a1_zero_test(jacobian.a1_E(0, 0) - corner)
        for i in range(4):
            for j in range(4):
                lifted = jacobian.a1_mul(jacobian.a1_x(), jacobian.a1_E(i, j))
                assert jacobian.a1_equal(lifted, jacobian.a1_E(i + 1, j))
                lowered = jacobian.a1_mul(jacobian.a1_E(i, j), jacobian.a1_x())
                if j:
                    assert jacobian.a1_equal(lowered, jacobian.a1_E(i, j - 1))
                else:
                    assert jacobian.a1_zero_test(lowered)
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    for l in range(3):
                        product = jacobian.a1_mul(jacobian.a1_E(i, j),
                                                  jacobian.a1_E(k, l))
                        if j == k:
                            assert jacobian.a1_equal(product,
                                                     jacobian.a1_E(i, l))
                        else:
                            assert jacobian.a1_zero_test(product)


def test_c02_associativity_and_involutions(announce):
    with announce("C02", "associativity and involution laws under fuzzing"):
        rng = random.Random(9902)
        for _ in range(500):
            a, b, c = (random_s1(rng, max_exp=3) for _ in range(3))
            assert (a * b) * c == a * (b * c)
        for _ in range(500):
            a, b, c = (random_i1(rng) for _ in range(3))
            lhs = intdiff.i1_mul(intdiff.i1_mul(a, b), c)
            assert lhs == intdiff.i1_mul(a, intdiff.i1_mul(b, c))
        for _ in range(500):
            a, b, c = (random_a1(rng) for _ in range(3))
            lhs = jacobian.a1_mul(jacobian.a1_mul(a, b), c)
            assert lhs == jacobian.a1_mul(a, jacobian.a1_mul(b, c))
        for _ in range(200):
            a, b = random_s1(rng), random_s1(rng)
            assert onesided.eta(a * b) == onesided.eta(b) * onesided.eta(a)
            assert onesided.eta(onesided.eta(a)) == a
        for _ in range(200):
            a, b = random_i1(rng), random_i1(rng)
            assert intdiff.star(intdiff.i1_mul(a, b)) == intdiff.i1_mul(
                intdiff.star(b), intdiff.star(a))
            assert intdiff.star(intdiff.star(a)) == a
        for _ in range(200):
            a, b = random_a1(rng), random_a1(rng)
            assert jacobian.a1_equal(
                jacobian.theta(jacobian.a1_mul(a, b)),
                jacobian.a1_mul(jacobian.theta(b), jacobian.theta(a)))
            assert jacobian.theta(jacobian.theta(a)) == a


def test_c03_regularity_oracle_equivalence(announce):
    with announce("C03", "regularity criteria match brute-force module "
                         "oracles, stable under truncation growth"):
        rng = random.Random(9903)
        for _ in range(300):
            a = random_s1(rng)
            if a.is_zero():
                continue
            verdict = s1reg.is_left_regular_s1(a).verdict
            assert verdict == s1_oracle(a, extra=4)
            assert verdict == s1_oracle(a, extra=9)
        for _ in range(300):
            a = random_i1(rng)
            if a.is_zero():
                continue
            verdict = intdiff.i1_regularity(a).verdict
            assert verdict == i1_oracle(a, extra=4)
            assert verdict == i1_oracle(a, extra=9)
        for _ in range(300):
            a = random_a1(rng)
            if a.is_formally_zero():
                continue
            verdict = jacobian.a1_regularity(a).verdict
            assert verdict == a1_oracle(a, extra=4)
            assert verdict == a1_oracle(a, extra=9)


def test_c04_matrix_units_never_regular(announce):
    with announce("C04", "matrix units rejected by every regularity test"):
        for i in range(5):
            for j in range(5):
                unit = s1_unit(i, j)
                assert not s1reg.is_left_regular_s1(unit).verdict
                assert not s1reg.is_right_regular_s1(unit).verdict
                assert not intdiff.i1_regularity(intdiff.i1_e(i, j)).verdict
                assert not intdiff.is_right_regular_i1(
                    intdiff.i1_e(i, j)).verdict
                assert not jacobian.a1_regularity(jacobian.a1_E(i, j)).verdict


def test_c05_degree_witnesses(announce):
    with announce("C05", "regularity degrees with minimal witnesses"):
        assert s1reg.regularity_degree_s1(onesided.gen_x(1, 0)) == 1
        assert jacobian.regularity_degree_a1(jacobian.a1_x()) == 1
        weight = jacobian.a1_from_lfrac(LFraction(hpoly(-2, 1)))
        assert jacobian.regularity_degree_a1(weight) == 2

        rng = random.Random(9905)
        y = onesided.gen_y(1, 0)
        witnessed = 0
        for _ in range(40):
            a = random_s1(rng)
            if a.is_zero():
                continue
            try:
                deg = s1reg.regularity_degree_s1(a, cap=16)
            except (ElementInF, NoDegreeFound):
                continue
            if deg < 1:
                continue
            witnessed += 1
            lifted = y ** deg * a
            assert s1reg.is_left_regular_s1(lifted).verdict
            lowered = y ** (deg - 1) * a
            assert not s1reg.is_left_regular_s1(lowered).verdict
        for _ in range(40):
            a = random_i1(rng)
            if a.is_zero():
                continue
            try:
                deg = intdiff.regularity_degree_i1(a, cap=16)
            except (ElementInF, NoDegreeFound):
                continue
            if deg < 1:
                continue
            witnessed += 1
            assert intdiff.i1_regularity(
                intdiff.i1_mul(intdiff.i1_d(deg), a)).verdict
            assert not intdiff.i1_regularity(
                intdiff.i1_mul(intdiff.i1_d(deg - 1)
                               if deg > 1 else intdiff.i1_one(), a)).verdict
        d = jacobian.a1_d()
        for _ in range(40):
            a = random_a1(rng)
            if a.is_formally_zero():
                continue
            try:
                deg = jacobian.regularity_degree_a1(a, cap=16)
            except (ElementInF, NoDegreeFound):
                continue
            if deg < 1:
                continue
            witnessed += 1
            assert jacobian.a1_regularity(jacobian.a1_mul(d ** deg, a)).verdict
            assert not jacobian.a1_regularity(
                jacobian.a1_mul(d ** (deg - 1), a)).verdict
        assert witnessed >= 10


def test_c06_shift_counts(announce):
    with announce("C06", "shift counts of weight polynomials match the "
                         "regular-fraction test"):
        assert mu_of_poly(hpoly(-3, 1)) == 3
        assert mu_of_poly(hpoly(5, 1)) == 0
        assert mu_of_poly(hpoly(-1, 1) * hpoly(-4, 1)) == 4

        rng = random.Random(9906)
        polys = [hpoly(-3, 1), hpoly(5, 1), hpoly(-1, 1) * hpoly(-4, 1)]
        for _ in range(25):
            p = hpoly(*[rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
            if not p.is_zero():
                polys.append(p)
        for p in polys:
            mu = mu_of_poly(p)
            assert jacobian.l_is_regular(LFraction(p.shift(mu)))
            assert jacobian.l_is_regular(LFraction(p.shift(mu + 3)))
            if mu > 0:
                assert not jacobian.l_is_regular(LFraction(p.shift(mu - 1)))


def test_c07_localization_maps(announce):
    with announce("C07", "Laurent and skew-Laurent images are ring maps "
                         "killing exactly the finite-rank part"):
        rng = random.Random(9907)
        for _ in range(200):
            a, b = random_s1(rng), random_s1(rng)
            assert onesided.laurent_image(a * b) == \
                onesided.laurent_image(a) * onesided.laurent_image(b)
        for _ in range(200):
            a, b = random_a1(rng), random_a1(rng)
            assert jacobian.skew_laurent_image(jacobian.a1_mul(a, b)) == \
                jacobian.skew_laurent_image(a) * jacobian.skew_laurent_image(b)

        x = onesided.gen_x(1, 0)
        for _ in range(40):
            f = random_s1_fpart(rng)
            assert onesided.laurent_image(f).is_zero()
            spiked = f + x ** rng.randint(0, 2)
            assert not onesided.laurent_image(spiked).is_zero()
        for _ in range(40):
            f = jacobian.a1_zero()
            for _ in range(rng.randint(1, 3)):
                f = f + random_scalar(rng) * jacobian.a1_E(
                    rng.randint(0, 3), rng.randint(0, 3))
            assert jacobian.skew_laurent_image(f).is_zero()
            spiked = f + jacobian.a1_x() ** rng.randint(0, 2)
            assert not jacobian.skew_laurent_image(spiked).is_zero()

        assert s1reg.localize(x).render() == "1/y"
        y = onesided.gen_y(1, 0)
        denominators = [y, y * y, y ** 3, 2 * y,
                        Fraction(1, 2) * y ** 2]
        checked = 0
        for _ in range(50):
            r = random_s1(rng)
            s = rng.choice(denominators)
            image = s1reg.fraction_image(s, r)
            expected = s1reg.localize(r) * s1reg.localize(s).invert()
            assert image == expected
            checked += 1
        assert checked == 50


def test_c08_twist_factorials(announce):
    with announce("C08", "the involution twists matrix units by factorial "
                         "ratios"):
        for i in range(5):
            for j in range(5):
                ratio = Fraction(factorial(i), factorial(j))
                lhs = jacobian.theta(jacobian.a1_E(i, j))
                assert jacobian.a1_zero_test(lhs - ratio * jacobian.a1_E(j, i))


def test_c09_finite_difference_identity(announce):
    with announce("C09", "iterated differences collapse the leading term "
                         "to factorial times step powers"):
        rng = random.Random(9909)
        steps_pool = (Fraction(1), Fraction(2), Fraction(1, 2))
        done = 0
        while done < 100:
            n = rng.randint(1, 3)
            phi = MultiPoly.const(n, 0)
            for _ in range(rng.randint(1, 4)):
                coeff = Fraction(rng.randint(-3, 3))
                if not coeff:
                    continue
                term = MultiPoly.const(n, coeff)
                for i in range(n):
                    term = term * MultiPoly.gen(n, i) ** rng.randint(0, 3)
                phi = phi + term
            if phi.is_zero():
                continue
            done += 1
            lam, degs = lex_leading(phi)
            steps = [rng.choice(steps_pool) for _ in range(n)]
            result = finite_difference(phi, degs, ShiftSpec(steps))
            expected = lam
            for d_i, mu_i in zip(degs, steps):
                expected *= factorial(d_i) * mu_i ** d_i
            assert result == MultiPoly.const(n, expected)


def test_c10_ore_machinery(announce):
    with announce("C10", "Ore witnesses, annihilator powers and denominator "
                         "checks"):
        rng = random.Random(9910)
        handles = [ring_handle("s1"), ring_handle("i1"), ring_handle("a1")]
        for handle in handles:
            for _ in range(100):
                r = handle.sample(rng)
                s = handle.denominator(rng.randint(1, 3))
                witness = ore_witness(handle, r, s, bound=12)
                assert isinstance(witness, OreWitness)
                assert handle.eq(handle.mul(witness.s_prime, r),
                                 handle.mul(witness.r_prime, s))

        s1h = ring_handle("s1")
        for _ in range(50):
            f = random_s1_fpart(rng)
            if f.is_zero():
                continue
            k = ass_member(s1h, f)
            assert k is not UNKNOWN
            assert (s1h.denominator(k) * f).is_zero()
        i1h = ring_handle("i1")
        for _ in range(50):
            f = intdiff.I1Element({}, {})
            for _ in range(rng.randint(1, 3)):
                f = f + random_scalar(rng) * intdiff.i1_e(
                    rng.randint(0, 3), rng.randint(0, 3))
            if f.is_zero():
                continue
            k = ass_member(i1h, f)
            assert k is not UNKNOWN
            assert i1h.is_zero(i1h.mul(i1h.denominator(k), f))
        a1h = ring_handle("a1")
        for _ in range(50):
            f = jacobian.a1_zero()
            for _ in range(rng.randint(1, 3)):
                f = f + random_scalar(rng) * jacobian.a1_E(
                    rng.randint(0, 3), rng.randint(0, 3))
            if jacobian.a1_zero_test(f):
                continue
            k = ass_member(a1h, f)
            assert k is not UNKNOWN
            assert a1h.is_zero(a1h.mul(a1h.denominator(k), f))

        for handle in handles:
            report = denominator_check(handle, samples=40, bound=5, seed=9910)
            assert report.violations == []


def test_c11_scalar_transport(announce):
    with announce("C11", "the embedding into integro-differential operators "
                         "is multiplicative and preserves verdicts"):
        rng = random.Random(9911)
        for _ in range(200):
            a, b = random_s1(rng), random_s1(rng)
            assert intdiff.xi_of(a * b) == intdiff.i1_mul(
                intdiff.xi_of(a), intdiff.xi_of(b))
        for i in range(4):
            for j in range(4):
                assert intdiff.xi_of(s1_unit(i, j)) == intdiff.i1_e(i, j)
        checked = 0
        for _ in range(120):
            a = random_s1(rng)
            if a.is_zero():
                continue
            checked += 1
            assert s1reg.is_left_regular_s1(a).verdict == \
                intdiff.i1_regularity(intdiff.xi_of(a)).verdict
            if checked == 100:
                break
        assert checked == 100


def _run_cli(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), \
            contextlib.redirect_stderr(io.StringIO()):
        code = cli_main(argv)
    return code, out.getvalue()


def test_c12_cli_goldens_and_fuzz(announce):
    with announce("C12", "golden CLI transcripts byte-exact and parser fuzz "
                         "crash-free"):
        golden_dir = pathlib.Path(__file__).parent / "golden"
        files = sorted(golden_dir.glob("*.txt"))
        assert len(files) >= 20
        for path in files:
            header, exit_line, payload = path.read_text().split("\n", 2)
            argv = json.loads(header.removeprefix("# args: "))
            expected_code = int(exit_line.removeprefix("# exit: "))
            code, out = _run_cli(argv)
            assert code == expected_code, path.name
            assert out == payload, path.name

        pieces = [
            "x", "y", "d", "i", "H", "Hinv", "int", "E[0,0]", "e[1,2]",
            "rho[1,1]", "x1", "y2", "+", "-", "*", "^", "(", ")", "[", "]",
            ",", "0", "1", "2", "3", "7", "5/2", "q", "_z", " ",
        ]
        algebras = [("s1", "mul"), ("sn:2", "mul"), ("i1", "mul"),
                    ("a1", "mul"), ("num", "mu")]
        rng = random.Random(9912)
        total_tokens = 0
        while total_tokens < 10000:
            length = rng.randint(1, 14)
            text = "".join(rng.choice(pieces) for _ in range(length))
            total_tokens += length
            algebra, verb = rng.choice(algebras)
            code, _ = _run_cli([algebra, verb, "--", text])
            assert code in (0, 2, 3, 4)
