"""Ore-condition witnesses and denominator checks, uniformly over the three
operator algebras.

For a denominator set S consisting of powers of a one-sided-invertible
generator (y in the one-sided-inverse algebra, the derivative in the other
two), the Ore condition  S r  meets  (ring) s  is witnessed by a pair
(s', r') with s' r = r' s.  Because right division by such powers has at
most one solution, the solver produces the unique candidate in closed form
through the involution of the respective algebra and then verifies it by
exact ring arithmetic; a reported witness is therefore always a genuine
solution of the defining linear system.

The module also searches annihilating denominators (s with s r = 0), spot
checks that denominators never annihilate ring elements from the right, and
pairs left regular elements with the power of y that pushes them into
y-polynomials plus finite-rank operators.
"""

from fractions import Fraction

from .errors import NotADenominator, OpalgError
from . import intdiff, jacobian, onesided, s1reg
from .lfrac import LFraction
from .unipoly import UniPoly

__all__ = [
    "UNKNOWN", "Unknown", "OreWitness", "ring_handle", "ore_witness",
    "ass_member", "denominator_check", "localization_pair_check",
    "DenominatorReport", "PairCheckReport",
]


class Unknown:
    """Three-valued logic sentinel for bounded searches."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        raise TypeError("Unknown has no truth value")

    def __repr__(self):
        return "Unknown"


UNKNOWN = Unknown()


class OreWitness:
    """A verified pair s' r = r' s, with s' the k-th denominator power."""

    __slots__ = ("k", "s_prime", "r_prime")

    def __init__(self, k, s_prime, r_prime):
        self.k = k
        self.s_prime = s_prime
        self.r_prime = r_prime

    def __repr__(self):
        return f"OreWitness(k={self.k})"


class _SnHandle:
    """Ring operations of S_n with denominators y^k (componentwise y for
    n > 1 is not needed; powers of the full y-monomial are used)."""

    name = "s1"

    def __init__(self, n=1):
        self.n = n

    def one(self):
        return onesided.sn_one(self.n)

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return a == b

    def denominator(self, k):
        return onesided.sn_monomial(self.n, (0,) * self.n, (k,) * self.n)

    def denominator_power(self, s):
        """The exponent when s is a power of the denominator generator."""
        if len(s.terms) != 1:
            return None
        (alpha, beta), c = next(iter(s.terms.items()))
        if c != 1 or any(a != 0 for a in alpha):
            return None
        if len(set(beta)) != 1:
            return None
        return beta[0]

    def solve_right(self, v, k):
        """The unique r' with r' y^k = v, if it exists."""
        eta_v = onesided.eta(v)
        yk = onesided.sn_monomial(self.n, (0,) * self.n, (k,) * self.n)
        xk = onesided.sn_monomial(self.n, (k,) * self.n, (0,) * self.n)
        candidate = yk * eta_v
        if xk * candidate == eta_v:
            return onesided.eta(candidate)
        return None

    def sample(self, rng, max_deg=3, max_terms=4):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            alpha = tuple(rng.randint(0, max_deg) for _ in range(self.n))
            beta = tuple(rng.randint(0, max_deg) for _ in range(self.n))
            c = Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 1, 2]))
            terms[(alpha, beta)] = terms.get((alpha, beta), Fraction(0)) + c
        return onesided.SnElement(self.n, terms)

    def render(self, a):
        return a.render()


class _I1Handle:
    """Ring operations of I_1 with denominators D^k."""

    name = "i1"

    def one(self):
        return intdiff.i1_one()

    def mul(self, a, b):
        return intdiff.i1_mul(a, b)

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return a == b

    def denominator(self, k):
        return intdiff.i1_d(k) if k else intdiff.i1_one()

    def denominator_power(self, s):
        if s.fpart or len(s.diag) != 1:
            return None
        d, p = next(iter(s.diag.items()))
        if d < 0 or p.degree != 0 or p[0] != 1:
            return None
        return d

    def solve_right(self, v, k):
        sv = intdiff.star(v)
        candidate = intdiff.i1_mul(self.denominator(k), sv)
        back = intdiff.i1_mul(intdiff.i1_int(k) if k else intdiff.i1_one(),
                              candidate)
        if back == sv:
            return intdiff.star(candidate)
        return None

    def sample(self, rng, max_deg=2, max_terms=3):
        diag, fpart = {}, {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(-2, 2)
            coeffs = [Fraction(rng.randint(-2, 2)) for _ in range(max_deg + 1)]
            p = UniPoly(coeffs, "H")
            if not p.is_zero():
                diag[d] = diag.get(d, UniPoly((), "H")) + p
        if rng.random() < 0.5:
            fpart[(rng.randint(0, 2), rng.randint(0, 2))] = Fraction(
                rng.choice([-2, -1, 1, 2]))
        return intdiff.I1Element(diag, fpart)

    def render(self, a):
        return a.render()


class _A1Handle:
    """Ring operations of A_1 with denominators d^k."""

    name = "a1"

    def one(self):
        return jacobian.a1_one()

    def mul(self, a, b):
        return jacobian.a1_mul(a, b)

    def is_zero(self, a):
        return jacobian.a1_zero_test(a)

    def eq(self, a, b):
        return jacobian.a1_equal(a, b)

    def denominator(self, k):
        return jacobian.a1_d() ** k

    def denominator_power(self, s):
        if len(s.terms) != 1:
            return None
        (a, b), g = next(iter(s.terms.items()))
        if a != 0 or not g.is_const() or g.const_value() != 1:
            return None
        return b

    def solve_right(self, v, k):
        tv = jacobian.theta(v)
        left_inv = jacobian.a1_mul(jacobian.a1_hinv(), jacobian.a1_d())
        candidate = jacobian.a1_mul(left_inv ** k, tv)
        back = jacobian.a1_mul(jacobian.a1_x() ** k, candidate)
        if jacobian.a1_equal(back, tv):
            return jacobian.theta(candidate)
        return None

    def sample(self, rng, max_deg=2, max_terms=3):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            a = rng.randint(0, max_deg)
            b = rng.randint(0, max_deg)
            num = UniPoly([Fraction(rng.randint(-2, 2))
                           for _ in range(rng.randint(1, 3))], "H")
            if num.is_zero():
                continue
            den = {}
            if rng.random() < 0.4:
                den[rng.randint(0, 2)] = 1
            g = LFraction(num, den)
            key = (a, b)
            terms[key] = terms[key] + g if key in terms else g
        element = jacobian.A1Element(terms)
        if rng.random() < 0.3:
            element = element + jacobian.a1_E(rng.randint(0, 2),
                                              rng.randint(0, 2))
        return element

    def render(self, a):
        return a.render()


_HANDLES = {"s1": lambda: _SnHandle(1), "i1": _I1Handle, "a1": _A1Handle}


def ring_handle(name, n=1):
    """Handle for one of the backends: ``s1`` (or S_n via n), ``i1``, ``a1``."""
    if name == "s1" and n != 1:
        return _SnHandle(n)
    if name not in _HANDLES:
        raise OpalgError(f"no ring backend named {name!r}")
    return _HANDLES[name]()


def ore_witness(handle, r, s, bound=12):
    """Search (s', r') with s' r = r' s, s' a denominator power <= bound.

    ``s`` must itself be a denominator power.  Returns an OreWitness or
    UNKNOWN; every returned witness has been verified by exact arithmetic,
    and enlarging the bound can only turn UNKNOWN into a witness.
    """
    m = handle.denominator_power(s)
    if m is None:
        raise NotADenominator(
            "s must be a power of the denominator generator")
    for k in range(bound + 1):
        s_prime = handle.denominator(k)
        v = handle.mul(s_prime, r)
        r_prime = handle.solve_right(v, m)
        if r_prime is not None and handle.eq(handle.mul(s_prime, r),
                                             handle.mul(r_prime, s)):
            return OreWitness(k, s_prime, r_prime)
    return UNKNOWN


def ass_member(handle, r, bound=12):
    """Search a denominator power annihilating r from the left.

    Returns the exponent k with denominator^k * r = 0, or UNKNOWN.
    """
    for k in range(bound + 1):
        if handle.is_zero(handle.mul(handle.denominator(k), r)):
            return k
    return UNKNOWN


class DenominatorReport:
    __slots__ = ("samples", "checks", "violations")

    def __init__(self, samples, checks, violations):
        self.samples = samples
        self.checks = checks
        self.violations = violations

    def __repr__(self):
        return (f"DenominatorReport(samples={self.samples}, "
                f"checks={self.checks}, violations={len(self.violations)})")


def denominator_check(handle, samples=50, bound=6, seed=0, sampler=None):
    """Spot check that r s = 0 forces r = 0 for denominator powers s.

    Returns a report with the number of violating pairs (expected zero:
    the denominator generators are left regular).
    """
    import random
    rng = random.Random(seed)
    violations = []
    checks = 0
    for _ in range(samples):
        r = sampler(rng) if sampler else handle.sample(rng)
        if handle.is_zero(r):
            continue
        for k in range(1, bound + 1):
            checks += 1
            if handle.is_zero(handle.mul(r, handle.denominator(k))):
                violations.append((r, k))
    return DenominatorReport(samples, checks, violations)


class PairCheckReport:
    __slots__ = ("samples", "pairs", "failures")

    def __init__(self, samples, pairs, failures):
        self.samples = samples
        self.pairs = pairs
        self.failures = failures

    def __repr__(self):
        return (f"PairCheckReport(samples={self.samples}, "
                f"pairs={len(self.pairs)}, failures={self.failures})")


def localization_pair_check(samples=20, bound=16, seed=0):
    """For random left regular elements s of S_1, find the power of y that
    moves y^k s into y-polynomials plus finite-rank operators.

    Such a power exists with k at most the x-degree of s; failures count
    sampled elements where no k <= bound works.
    """
    import random
    rng = random.Random(seed)
    handle = _SnHandle(1)
    pairs = []
    failures = 0
    found = 0
    attempts = 0
    while found < samples and attempts < samples * 50:
        attempts += 1
        s = handle.sample(rng)
        if s.is_zero() or not s1reg.is_left_regular_s1(s).verdict:
            continue
        found += 1
        hit = None
        for k in range(bound + 1):
            shifted = onesided.sn_monomial(1, (0,), (k,)) * s
            if onesided.decompose_s1(shifted).xpart.is_zero():
                hit = k
                break
        if hit is None:
            failures += 1
        else:
            pairs.append((s, hit))
    return PairCheckReport(found, pairs, failures)
