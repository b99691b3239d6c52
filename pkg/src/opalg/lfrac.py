"""The coefficient ring L = K[H^{-1}, (H+1)^{-1}, (H+2)^{-1}, ...][H].

Elements are fractions p(H) / prod_k (H+k)^{e_k} with k ranging over
nonnegative integers.  The denominator is kept factored as a map k -> e_k and
the invariant is maintained that no (H+k) with k in the map divides the
numerator, which makes the representation canonical (the denominator factors
are monic, so the numerator carries the scalar).

Forward shifts f(H) -> f(H+i), i >= 0, stay inside L; backward shifts are
performed only when every factor pushed to a negative position cancels
against the numerator, otherwise BackwardShiftOutOfL is raised.  Inverses
exist exactly for scalar multiples of products of the allowed factors.
"""

from fractions import Fraction

from .errors import (BackwardShiftOutOfL, NotInvertibleInL, UnsplittableComponent,
                     ZeroPolynomial)
from .scalars import scalar_to_str
from .unipoly import RatFunc, UniPoly

__all__ = [
    "LFraction", "lfrac_mul", "lfrac_add", "lfrac_shift", "lfrac_invert",
    "inverse_rising",
]


def _linear(k):
    """The polynomial H + k."""
    return UniPoly((Fraction(k), 1), "H")


class LFraction:
    """A canonical fraction in L."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = UniPoly.const(num, "H")
        den = dict(den or {})
        for k, e in list(den.items()):
            if k < 0 or e < 0:
                raise ValueError("denominator factors must be (H+k)^e, k,e >= 0")
            if e == 0:
                del den[k]
        self.num = num
        self.den = den
        self._reduce()

    def _reduce(self):
        if self.num.is_zero():
            self.den = {}
            return
        for k in sorted(self.den):
            factor = _linear(k)
            while self.den.get(k, 0) > 0:
                q, r = self.num.divmod(factor)
                if not r.is_zero():
                    break
                self.num = q
                self.den[k] -= 1
            if self.den.get(k) == 0:
                del self.den[k]

    # -- constructors --------------------------------------------------
    @classmethod
    def const(cls, c):
        return cls(UniPoly.const(c, "H"))

    @classmethod
    def from_poly(cls, p):
        return cls(p)

    def copy(self):
        return LFraction(self.num, dict(self.den))

    # -- structure -----------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def is_const(self):
        return not self.den and self.num.degree <= 0

    def const_value(self):
        return self.num[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LFraction.const(other)
        if not isinstance(other, LFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, tuple(sorted(self.den.items()))))

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return LFraction.const(other)
        return other if isinstance(other, LFraction) else None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        keys = set(self.den) | set(other.den)
        common = {k: max(self.den.get(k, 0), other.den.get(k, 0)) for k in keys}
        a = self.num
        for k in keys:
            a = a * _linear(k) ** (common[k] - self.den.get(k, 0))
        b = other.num
        for k in keys:
            b = b * _linear(k) ** (common[k] - other.den.get(k, 0))
        return LFraction(a + b, common)

    __radd__ = __add__

    def __neg__(self):
        return LFraction(-self.num, dict(self.den))

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
        den = dict(self.den)
        for k, e in other.den.items():
            den[k] = den.get(k, 0) + e
        return LFraction(self.num * other.num, den)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = LFraction.const(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, i):
        """f(H) -> f(H+i).  Negative i must keep the result inside L."""
        i = int(i)
        num = self.num.shift(i)
        den = {}
        for k, e in self.den.items():
            k2 = k + i
            if k2 >= 0:
                den[k2] = den.get(k2, 0) + e
            else:
                factor = _linear(k2)
                for _ in range(e):
                    q, r = num.divmod(factor)
                    if not r.is_zero():
                        raise BackwardShiftOutOfL(
                            f"shift by {i} sends (H+{k}) to position {k2}")
                    num = q
        return LFraction(num, den)

    def invert(self):
        """Exact inverse inside L; raises NotInvertibleInL otherwise."""
        if self.is_zero():
            raise NotInvertibleInL("zero is not invertible")
        num = self.num
        peeled = {}
        # peel nonpositive integer roots -k of the numerator
        while num.degree > 0:
            progressed = False
            for k in _nonpositive_root_positions(num):
                factor = _linear(k)
                q, r = num.divmod(factor)
                if r.is_zero():
                    num = q
                    peeled[k] = peeled.get(k, 0) + 1
                    progressed = True
                    break
            if not progressed:
                raise NotInvertibleInL(
                    f"{self.render()} has a factor with no root in -N")
        c = num[0]
        new_num = UniPoly.const(1 / c, "H")
        for k, e in self.den.items():
            new_num = new_num * _linear(k) ** e
        return LFraction(new_num, peeled)

    # -- conversions ---------------------------------------------------
    def eval(self, t):
        """Exact value at t; t must avoid the poles -k."""
        acc = self.num.eval(t)
        for k, e in self.den.items():
            d = Fraction(t) + k
            if d == 0:
                raise ZeroDivisionError(f"evaluation at pole {t}")
            acc /= d ** e
        return acc

    def den_poly(self):
        p = UniPoly.const(1, "H")
        for k, e in self.den.items():
            p = p * _linear(k) ** e
        return p

    def to_ratfunc(self):
        return RatFunc(self.num, self.den_poly())

    @classmethod
    def from_ratfunc(cls, rf):
        """Convert a rational function whose poles all lie in -N into L."""
        num, den = rf.num, rf.den
        factors = {}
        while den.degree > 0:
            progressed = False
            for k in _nonpositive_root_positions(den):
                factor = _linear(k)
                q, r = den.divmod(factor)
                if r.is_zero():
                    den = q
                    factors[k] = factors.get(k, 0) + 1
                    progressed = True
                    break
            if not progressed:
                raise UnsplittableComponent(
                    "denominator has a factor with no root in -N")
        c = den[0]
        return cls(num * (1 / c), factors)

    # -- rendering -----------------------------------------------------
    def render(self):
        num = self.num.render()
        if not self.den:
            return num
        parts = []
        for k in sorted(self.den):
            e = self.den[k]
            base = "H" if k == 0 else f"(H+{k})"
            parts.append(base if e == 1 else f"{base}^{e}")
        den = "*".join(parts)
        if self.num.degree > 0 or self.num.is_zero() or self.num[0] < 0 \
                or len(self.num.coeffs) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def to_json(self):
        return {"num": [scalar_to_str(c) for c in self.num.coeffs],
                "den": {str(k): e for k, e in sorted(self.den.items())}}

    def __repr__(self):
        return f"LFraction({self.render()})"


def _nonpositive_root_positions(p):
    """Positions k >= 0 with p(-k) = 0, smallest first."""
    out = []
    if p.eval(0) == 0:
        out.append(0)
    # roots -k, k > 0: positive roots of p(-t)
    flipped = UniPoly([c * ((-1) ** j) for j, c in enumerate(p.coeffs)], p.var)
    from .unipoly import natplus_roots
    try:
        out.extend(sorted(natplus_roots(flipped)))
    except ZeroPolynomial:
        pass
    return out


def lfrac_mul(f, g):
    """Product in L."""
    return f * g


def lfrac_add(f, g):
    """Sum in L."""
    return f + g


def lfrac_shift(f, i):
    """Shift f(H) -> f(H+i) with the backward-shift domain check."""
    return f.shift(i)


def lfrac_invert(f):
    """Inverse in L when it exists."""
    return f.invert()


def inverse_rising(j):
    """[H(H+1)...(H+j-1)]^{-1}; the empty product inverts to 1."""
    return LFraction(UniPoly.const(1, "H"), {k: 1 for k in range(j)})
