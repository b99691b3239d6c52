"""Multivariate polynomials, shift operators and rational functions over Q.

``MultiPoly`` maps exponent tuples to Fractions.  Exponents may be negative
(Laurent polynomials, used for commutative quotient images); the shift
substitutions used by finite differences require ordinary polynomials.

``ShiftSpec`` fixes one rational step per variable and a direction; the
operator sigma_i substitutes H_i -> H_i + direction*step_i.  The finite
difference prod_i (1 - sigma_i)^{d_i} collapses the reversed-lexicographic
leading term (last variable compared first) to the exact constant
d! * step^d * leading_coefficient, which the tests pin down.

``MultiRationalFunction`` is a quotient of two MultiPolys reduced by monomial
and scalar content, compared by cross multiplication.
"""

from fractions import Fraction
from math import comb

from .errors import DimensionMismatch, DivisionByZeroImage, ZeroPolynomial
from .scalars import scalar_to_str

__all__ = ["MultiPoly", "MultiRationalFunction", "ShiftSpec",
           "finite_difference", "lex_leading"]


def _term_sort_key(exps):
    # graded, then reversed-lexicographic (last variable most significant)
    return (sum(exps), tuple(reversed(exps)))


class MultiPoly:
    """Polynomial (or Laurent polynomial) in n variables."""

    __slots__ = ("n", "terms", "var")

    def __init__(self, n, terms=None, var="H"):
        self.n = n
        self.var = var
        clean = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                exps = tuple(int(e) for e in exps)
                if len(exps) != n:
                    raise DimensionMismatch(f"exponent tuple {exps} in {n} variables")
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors --------------------------------------------------
    @classmethod
    def const(cls, n, c, var="H"):
        return cls(n, {(0,) * n: Fraction(c)}, var)

    @classmethod
    def gen(cls, n, i, var="H"):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): Fraction(1)}, var)

    @classmethod
    def monomial(cls, n, exps, c=1, var="H"):
        return cls(n, {tuple(exps): Fraction(c)}, var)

    # -- structure -----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.n, other, self.var)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.n, other, self.var)
        if isinstance(other, MultiPoly):
            if other.n != self.n:
                raise DimensionMismatch(f"{self.n} vs {other.n} variables")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.n, terms, self.var)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.n, terms, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MultiPoly.const(self.n, 1, self.var)
        for _ in range(k):
            result = result * self
        return result

    # -- substitution --------------------------------------------------
    def shift_var(self, i, delta):
        """Substitute variable i -> variable i + delta (polynomials only)."""
        delta = Fraction(delta)
        if delta == 0:
            return self
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e < 0:
                raise ValueError("cannot shift a Laurent variable")
            p = Fraction(1)
            for j in range(e, -1, -1):
                ne = list(exps)
                ne[i] = j
                key = tuple(ne)
                terms[key] = terms.get(key, Fraction(0)) + c * comb(e, j) * p
                p *= delta
        return MultiPoly(self.n, terms, self.var)

    def eval(self, point):
        acc = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for e, t in zip(exps, point):
                v *= Fraction(t) ** e
            acc += v
        return acc

    # -- rendering -----------------------------------------------------
    def _varname(self, i):
        return self.var if self.n == 1 else f"{self.var}{i + 1}"

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_term_sort_key, reverse=True):
            c = self.terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                factors.append(self._varname(i) if e == 1
                               else f"{self._varname(i)}^{e}")
            mag = scalar_to_str(abs(c))
            if not factors:
                body = mag
            elif mag == "1":
                body = "*".join(factors)
            else:
                body = "*".join([mag] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.render()})"


class ShiftSpec:
    """Per-variable rational steps plus a common direction (+1 or -1)."""

    __slots__ = ("steps", "direction")

    def __init__(self, steps, direction=-1):
        self.steps = tuple(Fraction(s) for s in steps)
        if direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        self.direction = direction

    @property
    def n(self):
        return len(self.steps)

    def sigma(self, phi, i, times=1):
        """Apply the shift substitution for variable i ``times`` times."""
        return phi.shift_var(i, self.direction * self.steps[i] * times)


def lex_leading(phi):
    """Leading coefficient and exponent of the reversed-lex order.

    The last variable is compared first; ties graded by total degree are not
    needed because reversed-lex is already a total order on exponents.
    Returns (coefficient, exponent tuple); raises ZeroPolynomial on 0.
    """
    if phi.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading term")
    d = max(phi.terms, key=lambda e: tuple(reversed(e)))
    return phi.terms[d], d


def finite_difference(phi, d, spec):
    """Apply prod_i (1 - sigma_i)^{d_i} to phi, exactly.

    For d the reversed-lex leading exponent of phi this collapses phi to the
    constant prod_i d_i! * step_i^{d_i} times the leading coefficient.
    """
    if spec.n != phi.n or len(d) != phi.n:
        raise DimensionMismatch("shift spec, exponent and polynomial sizes differ")
    cur = phi
    for i, di in enumerate(d):
        if di == 0:
            continue
        acc = MultiPoly(phi.n, {}, phi.var)
        for t in range(di + 1):
            term = spec.sigma(cur, i, times=t)
            coeff = Fraction((-1) ** t * comb(di, t))
            acc = acc + MultiPoly.const(phi.n, coeff, phi.var) * term
        cur = acc
    return cur


class MultiRationalFunction:
    """num/den of MultiPolys, reduced by monomial and scalar content."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.is_zero():
            raise DivisionByZeroImage("zero denominator")
        if num.n != den.n:
            raise DimensionMismatch("numerator and denominator variable counts differ")
        if num.is_zero():
            den = MultiPoly.const(den.n, 1, den.var)
        else:
            # shared monomial content
            n = num.n
            mins = [min(min(e[i] for e in num.terms), min(e[i] for e in den.terms))
                    for i in range(n)]
            if any(mins):
                num = MultiPoly(n, {tuple(a - b for a, b in zip(e, mins)): c
                                    for e, c in num.terms.items()}, num.var)
                den = MultiPoly(n, {tuple(a - b for a, b in zip(e, mins)): c
                                    for e, c in den.terms.items()}, den.var)
            # scale so the denominator's leading coefficient is 1
            lead, _ = lex_leading(den)
            if lead != 1:
                inv = 1 / lead
                num = MultiPoly.const(n, inv, num.var) * num
                den = MultiPoly.const(n, inv, den.var) * den
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, MultiRationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        return MultiRationalFunction(self.num * other.den + other.num * self.den,
                                     self.den * other.den)

    def __sub__(self, other):
        return MultiRationalFunction(self.num * other.den - other.num * self.den,
                                     self.den * other.den)

    def __mul__(self, other):
        return MultiRationalFunction(self.num * other.num, self.den * other.den)

    def invert(self):
        if self.num.is_zero():
            raise DivisionByZeroImage("cannot invert the zero fraction")
        return MultiRationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * other.invert()

    def render(self):
        num = self.num.render()
        if self.den == MultiPoly.const(self.den.n, 1, self.den.var):
            return num
        den = self.den.render()
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"MultiRationalFunction({self.render()})"
