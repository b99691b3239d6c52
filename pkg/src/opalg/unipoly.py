"""Exact univariate polynomials and rational functions over Q.

``UniPoly`` stores dense ascending coefficient tuples of Fractions together
with a display variable name (``H`` by default; the same class doubles for
polynomials in x, y or d).  ``RatFunc`` is a reduced quotient of two UniPolys
with monic denominator.  On top of these the module provides the shift
operator p(t) -> p(t+i), the set of positive integer roots, and the minimal
shift mu making a polynomial root-free on the positive integers.
"""

from fractions import Fraction
from math import comb, gcd

from .errors import ZeroPolynomial

__all__ = [
    "UniPoly", "RatFunc", "poly_shift", "natplus_roots", "mu_of_poly",
    "falling_factorial_poly", "rising_product",
]


class UniPoly:
    """Polynomial in one variable with Fraction coefficients.

    Coefficients are stored ascending with no trailing zeros; the zero
    polynomial has an empty tuple and degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="H"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c, var="H"):
        return cls((Fraction(c),), var)

    @classmethod
    def gen(cls, var="H"):
        """The polynomial t itself."""
        return cls((0, 1), var)

    @classmethod
    def from_roots(cls, roots, var="H"):
        p = cls.const(1, var)
        for r in roots:
            p = p * cls((-Fraction(r), 1), var)
        return p

    # -- basic structure ----------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other, self.var)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other, self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly((self[i] + other[i] for i in range(n)), self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly((-c for c in self.coeffs), self.var)

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
        if self.is_zero() or other.is_zero():
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly.const(1, self.var)
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other):
        """Exact polynomial division with remainder."""
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        q = UniPoly((), self.var)
        r = self
        d, lc = other.degree, other.leading()
        while not r.is_zero() and r.degree >= d:
            shift = r.degree - d
            c = r.leading() / lc
            mono = UniPoly([0] * shift + [c], self.var)
            q = q + mono
            r = r - mono * other
        return q, r

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a * (1 / a.leading())

    # -- evaluation and shifting --------------------------------------
    def eval(self, t):
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def shift(self, i):
        """p(t) -> p(t + i); the shift step i may be any rational."""
        i = Fraction(i)
        if i == 0 or self.is_zero():
            return self
        n = self.degree
        out = [Fraction(0)] * (n + 1)
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            # (t+i)^k expanded by the binomial theorem
            p = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * p
                p *= i
        return UniPoly(out, self.var)

    def compose(self, inner):
        """p(inner(t)) for another UniPoly ``inner``."""
        acc = UniPoly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(c, inner.var)
        return acc

    def scale_int(self):
        """Return (k, q) with q = k*p having coprime integer coefficients."""
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        from math import lcm
        denlcm = 1
        for c in self.coeffs:
            denlcm = lcm(denlcm, c.denominator)
        ints = [int(c * denlcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        return Fraction(denlcm, g), UniPoly([v // g for v in ints], self.var)

    # -- rendering -----------------------------------------------------
    def __repr__(self):
        return f"UniPoly({self.render()})"

    def render(self):
        """Human-readable form, highest degree first: ``H^2-2*H+1``."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            from .scalars import scalar_to_str
            mag = scalar_to_str(abs(c))
            if k == 0:
                body = mag
            elif k == 1:
                body = self.var if mag == "1" else f"{mag}*{self.var}"
            else:
                body = (f"{self.var}^{k}" if mag == "1"
                        else f"{mag}*{self.var}^{k}")
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)


def poly_shift(p, i):
    """The shift operator: poly_shift(p, i)(t) = p(t + i)."""
    return p.shift(i)


def falling_factorial_poly(length, var="m"):
    """t(t-1)...(t-length+1) as a UniPoly (empty product for length 0)."""
    p = UniPoly.const(1, var)
    t = UniPoly.gen(var)
    for s in range(length):
        p = p * (t - s)
    return p


def rising_product(t, length):
    """Exact value (t+1)(t+2)...(t+length) for integer or Fraction t."""
    acc = Fraction(1)
    for s in range(1, length + 1):
        acc *= Fraction(t) + s
    return acc


def _positive_divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def natplus_roots(p):
    """The set of roots of p in {1, 2, 3, ...}.

    Raises ZeroPolynomial for the zero polynomial (every positive integer
    would be a root).
    """
    if p.is_zero():
        raise ZeroPolynomial("every positive integer is a root of 0")
    # strip powers of t: they only contribute the root 0
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    q = UniPoly(coeffs, p.var)
    if q.degree == 0:
        return set()
    _, qi = q.scale_int()
    trailing = int(qi.coeffs[0])
    roots = set()
    for d in _positive_divisors(trailing):
        if qi.eval(d) == 0:
            roots.add(d)
    return roots


def mu_of_poly(p):
    """Least i >= 0 such that p(t + i) has no positive integer root.

    Equals max of the positive integer roots of p (and 0 when there are
    none): shifting by the largest root moves every root to <= 0.
    """
    roots = natplus_roots(p)
    return max(roots) if roots else 0


class RatFunc:
    """Reduced rational function num/den with monic denominator.

    Used for eigenvalue sequences of graded slices; supports exact
    arithmetic, shifting, pole/root inspection and checked evaluation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var="m"):
        if isinstance(num, (int, Fraction)):
            num = UniPoly.const(num, var)
        if den is None:
            den = UniPoly.const(1, num.var)
        elif isinstance(den, (int, Fraction)):
            den = UniPoly.const(den, num.var)
        if den.is_zero():
            raise ZeroPolynomial("zero denominator")
        if num.is_zero():
            den = UniPoly.const(1, num.var)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = den.leading()
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(UniPoly.const(other, self.num.var))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(UniPoly.const(other, self.num.var))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RatFunc) else RatFunc(
            UniPoly.const(-Fraction(other), self.num.var)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(UniPoly.const(other, self.num.var))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def shift(self, i):
        return RatFunc(self.num.shift(i), self.den.shift(i))

    def eval_checked(self, t):
        """Value at t, or None when t is a pole."""
        d = self.den.eval(t)
        if d == 0:
            return None
        return self.num.eval(t) / d

    def integer_poles(self):
        """Integer roots of the denominator (of any sign)."""
        poles = set()
        if self.den.degree <= 0:
            return poles
        # roots of den(t) and of den(-t) via positive-divisor search
        for sign in (1, -1):
            flipped = UniPoly([c * (sign ** k)
                               for k, c in enumerate(self.den.coeffs)],
                              self.den.var)
            try:
                for r in natplus_roots(flipped):
                    poles.add(sign * r)
            except ZeroPolynomial:
                pass
        if self.den.eval(0) == 0:
            poles.add(0)
        return poles

    def __repr__(self):
        if self.den.degree <= 0 and self.den == 1:
            return f"RatFunc({self.num.render()})"
        return f"RatFunc(({self.num.render()})/({self.den.render()}))"
