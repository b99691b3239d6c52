"""Regularity (non-zero-divisor) tests and localization data for S_1.

An element is left regular when right multiplication by it is injective on
the whole algebra; the finite criterion implemented here reduces that to an
exact rank computation of the right action on polynomials in y of degree at
most the size of the finite-rank component:

* elements of x K[x] + F are never left regular (the excluded locus);
* otherwise a is left regular iff  p -> p . a  is injective from the space of
  y-polynomials of degree <= s(a) to those of degree <= s(a) + deg(a_y),
  where s(a) is the largest matrix-unit index of the F-component (-1 when
  absent, making the test vacuously true) and a_y is the y-plus-constant
  component of the four-part split.

Right regularity mirrors through the swap involution.  The module also
provides the regularity degree (least power of y that repairs left
regularity), membership predicates for several distinguished sets, and the
commutative localization at powers of y.
"""

from fractions import Fraction

from .errors import (DimensionMismatch, DivisionByZeroImage, ElementInF,
                     NoDegreeFound, NotADenominator)
from .linalg import kernel_vector, matrix_rank
from .onesided import (SnElement, act_right_on_Pprime, decompose_s1, eta,
                       gen_y, is_in_fn, laurent_image, sn_monomial)
from .multipoly import MultiPoly, MultiRationalFunction

__all__ = [
    "RegularityReport", "size_s1", "is_left_regular_s1", "is_right_regular_s1",
    "regularity_degree_s1", "in_set", "localize", "fraction_image",
    "SET_TAGS",
]

SET_TAGS = ("PowersOfY", "LeftRegularYPolys", "FullLeftRegular", "TildeY",
            "SPlusIdeal")


class RegularityReport:
    """Result of a one-sided regularity test.

    ``verdict`` is the boolean answer; ``size`` and ``deg_y`` are the data of
    the finite criterion; ``excluded`` flags membership in the locus that is
    rejected without a rank computation; ``kernel`` (when the verdict is
    false) lists the coefficients of a polynomial annihilated by the element,
    in the module the test ran in.
    """

    __slots__ = ("verdict", "size", "deg_y", "excluded", "kernel", "side")

    def __init__(self, verdict, size, deg_y, excluded, kernel, side="left"):
        self.verdict = verdict
        self.size = size
        self.deg_y = deg_y
        self.excluded = excluded
        self.kernel = kernel
        self.side = side

    def __bool__(self):
        return self.verdict

    def to_json(self):
        from .scalars import scalar_to_str
        out = {"verdict": self.verdict, "size": self.size,
               "degY": self.deg_y, "excluded": self.excluded}
        if self.kernel is not None:
            out["kernel"] = [scalar_to_str(c) for c in self.kernel]
        return out

    def __repr__(self):
        return (f"RegularityReport(verdict={self.verdict}, size={self.size}, "
                f"deg_y={self.deg_y}, excluded={self.excluded})")


def size_s1(a):
    """Largest matrix-unit index of the finite-rank component (-1 if none)."""
    return decompose_s1(a).size()


def _right_action_matrix(a, domain_deg, codomain_deg):
    """Matrix of p -> p.a from y-degree <= domain_deg to <= codomain_deg."""
    rows = [[Fraction(0)] * (domain_deg + 1) for _ in range(codomain_deg + 1)]
    for m in range(domain_deg + 1):
        image = act_right_on_Pprime({(m,): Fraction(1)}, a)
        for (j,), c in image.items():
            rows[j][m] = c
    return rows


def _max_y_degree(a):
    return max((beta[0] for (_, beta) in a.terms), default=0)


def is_left_regular_s1(a):
    """Decide left regularity of an element of S_1; see the module docstring."""
    if a.n != 1:
        raise DimensionMismatch("the regularity criterion is defined on S_1")
    if a.is_zero():
        return RegularityReport(False, -1, None, True, [Fraction(1)])
    dec = decompose_s1(a)
    s = dec.size()
    if dec.constant == 0 and dec.ypart.is_zero():
        # x K[x] + F: right multiplication strictly drops y-degree beyond s,
        # so a kernel vector exists already in degree <= s + 1
        n = s + 1
        matrix = _right_action_matrix(a, n, n + _max_y_degree(a))
        return RegularityReport(False, s, None, True, kernel_vector(matrix))
    deg_y = dec.ypart.degree if not dec.ypart.is_zero() else 0
    if s == -1:
        return RegularityReport(True, s, deg_y, False, None)
    matrix = _right_action_matrix(a, s, s + deg_y)
    if matrix_rank(matrix) == s + 1:
        return RegularityReport(True, s, deg_y, False, None)
    return RegularityReport(False, s, deg_y, False, kernel_vector(matrix))


def is_right_regular_s1(a):
    """Right regularity via the swap involution (left regularity of eta(a)).

    The reported kernel, read as a polynomial in x, annihilates a from the
    left.
    """
    report = is_left_regular_s1(eta(a))
    return RegularityReport(report.verdict, report.size, report.deg_y,
                            report.excluded, report.kernel, side="right")


def regularity_degree_s1(a, cap=64):
    """Least i >= 0 such that y^i a is left regular.

    Defined for elements outside the finite-rank ideal; raises ElementInF
    otherwise and NoDegreeFound if the cap is exceeded.
    """
    if is_in_fn(a):
        raise ElementInF("the regularity degree needs a nonzero quotient image")
    y = gen_y(1)
    current = a
    for i in range(cap + 1):
        if is_left_regular_s1(current).verdict:
            return i
        current = y * current
    raise NoDegreeFound(f"no regularity degree up to {cap}")


# -- localization at powers of y ---------------------------------------

def localize(a):
    """Image in the commutative localization: x_i -> y_i^{-1}, y_i -> y_i.

    Returns a rational function in y_1..y_n whose denominator is a monomial.
    """
    image = laurent_image(a)
    n = a.n
    gamma = [0] * n
    for exps in image.terms:
        for i, d in enumerate(exps):
            gamma[i] = max(gamma[i], d)
    num_terms = {}
    for exps, c in image.terms.items():
        key = tuple(g - d for g, d in zip(gamma, exps))
        num_terms[key] = c
    num = MultiPoly(n, num_terms, "y")
    den = MultiPoly.monomial(n, tuple(gamma), 1, "y")
    return MultiRationalFunction(num, den)


def _is_y_monomial(a):
    if len(a.terms) != 1:
        return False
    (alpha, _beta), _c = next(iter(a.terms.items()))
    return all(e == 0 for e in alpha)


def fraction_image(s, r):
    """The fraction s^{-1} r in the commutative localization.

    ``s`` must be a (scalar multiple of a) power-of-y monomial; these are the
    admissible denominators.
    """
    if s.n != r.n:
        raise DimensionMismatch("fraction operands live in different algebras")
    if not _is_y_monomial(s):
        raise NotADenominator("denominators are scalar multiples of y-monomials")
    image = localize(s)
    if image.is_zero():
        raise DivisionByZeroImage("denominator has zero quotient image")
    return localize(r) / image


# -- membership in distinguished sets ----------------------------------

def _is_y_polynomial(a):
    return all(all(e == 0 for e in alpha) for (alpha, _beta) in a.terms)


def _nonpositive_support(image):
    return all(all(d <= 0 for d in exps) for exps in image.terms)


def in_set(a, tag, bound=16):
    """Three-valued membership test for distinguished subsets of S_n.

    Returns True / False / None (unknown).  ``tag`` is one of:

    * ``PowersOfY``          — monic monomials y^alpha;
    * ``LeftRegularYPolys``  — left regular polynomials in the y_i;
    * ``FullLeftRegular``    — all left regular elements;
    * ``SPlusIdeal``         — sums of a nonzero polynomial in the y_i
                               and a finite-rank operator (the enlarged
                               denominator set of the localization);
    * ``TildeY``             — elements with some y^alpha multiple in
                               the previous set (searched up to ``bound``).

    Exact for n = 1; for several tensor factors the regularity-dependent
    tags fall back to monomial sufficient conditions and report None
    otherwise.  Enlarging ``bound`` never turns True or False into None.
    """
    if tag not in SET_TAGS:
        raise ValueError(f"unknown set tag {tag!r}; expected one of {SET_TAGS}")
    n = a.n
    if tag == "PowersOfY":
        if len(a.terms) != 1:
            return False
        (alpha, _beta), c = next(iter(a.terms.items()))
        return c == 1 and all(e == 0 for e in alpha)
    if tag == "LeftRegularYPolys":
        if not _is_y_polynomial(a) or a.is_zero():
            return False
        if n == 1:
            return is_left_regular_s1(a).verdict
        if len(a.terms) == 1:
            return True  # tensor products of regular factors stay regular
        return None
    if tag == "FullLeftRegular":
        if a.is_zero():
            return False
        if n == 1:
            return is_left_regular_s1(a).verdict
        if _is_y_polynomial(a) and len(a.terms) == 1:
            return True
        return None
    if tag == "SPlusIdeal":
        image = laurent_image(a)
        if image.is_zero():
            return False
        if not _nonpositive_support(image):
            return False
        if n == 1:
            return True  # every nonzero y-polynomial is left regular in S_1
        if len(image.terms) == 1:
            return True
        return None
    # TildeY
    image = laurent_image(a)
    if image.is_zero():
        return False
    exponents = _ascending_exponents(n, bound)
    for alpha in exponents:
        shifted = sn_monomial(n, (0,) * n, alpha) * a
        member = in_set(shifted, "SPlusIdeal", bound)
        if member is True:
            return True
    return None


def _ascending_exponents(n, bound):
    """All exponent tuples with entries <= bound, by total degree."""
    from itertools import product
    exps = sorted(product(range(bound + 1), repeat=n), key=lambda e: (sum(e), e))
    return exps


def xi_transport(a):
    """The isomorphism onto the scalar subalgebra of the operator ring.

    Defined in the integro-differential module; re-exported here so the two
    views of S_1 sit side by side.
    """
    from .intdiff import xi_of
    return xi_of(a)
