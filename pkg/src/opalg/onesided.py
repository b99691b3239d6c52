"""The algebra of one-sided inverses S_n and its basic structure maps.

S_1 is generated by x and y subject to yx = 1; the monomials x^i y^j form a
basis and multiply by (x^a y^b)(x^c y^d) = x^{a+c-m} y^{b+d-m}, m = min(b, c).
S_n is the n-fold tensor power with componentwise rules; elements map exponent
pairs (alpha, beta) of n-tuples to rational coefficients.

The module provides the matrix units E_{alpha beta} (finite-rank operators
spanning the ideal F_n), the swap involution eta (x <-> y, an
anti-automorphism), the commutative quotient image that kills F_n (x_i -> t_i,
y_i -> t_i^{-1}), the four-part decomposition of S_1, and the left action on
polynomials in x together with the right action on polynomials in y.
"""

from fractions import Fraction

from .errors import DimensionMismatch
from .multipoly import MultiPoly
from .scalars import scalar_to_str
from .unipoly import UniPoly

__all__ = [
    "SnElement", "sn_zero", "sn_one", "gen_x", "gen_y", "sn_monomial",
    "mono_mul", "matrix_unit", "eta", "laurent_image", "is_in_fn",
    "S1Decomposition", "decompose_s1", "act_left_on_P", "act_right_on_Pprime",
]


def mono_mul(left, right):
    """Product of two basis monomials, one tensor factor at a time.

    ``left`` and ``right`` are (alpha, beta) pairs of equal-length tuples;
    the result is a single basis monomial (the product never splits).
    """
    (a, b), (c, d) = left, right
    alpha, beta = [], []
    for ai, bi, ci, di in zip(a, b, c, d):
        m = min(bi, ci)
        alpha.append(ai + ci - m)
        beta.append(bi + di - m)
    return tuple(alpha), tuple(beta)


class SnElement:
    """Element of S_n: finite sum of monomials x^alpha y^beta."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for (alpha, beta), c in (terms or {}).items():
            c = Fraction(c)
            if not c:
                continue
            alpha, beta = tuple(alpha), tuple(beta)
            if len(alpha) != n or len(beta) != n:
                raise DimensionMismatch(f"monomial {(alpha, beta)} in S_{n}")
            if any(e < 0 for e in alpha + beta):
                raise ValueError("negative exponents are not in S_n")
            key = (alpha, beta)
            clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {k: c for k, c in clean.items() if c}

    # -- structure -----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = sn_one(self.n) * Fraction(other)
        if not isinstance(other, SnElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return SnElement(self.n, {((0,) * self.n, (0,) * self.n):
                                      Fraction(other)})
        if isinstance(other, SnElement):
            if other.n != self.n:
                raise DimensionMismatch(f"S_{self.n} vs S_{other.n}")
            return other
        return None

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return SnElement(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return SnElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SnElement(self.n, {k: c * Fraction(other)
                                      for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = mono_mul(k1, k2)
                terms[k] = terms.get(k, Fraction(0)) + c1 * c2
        return SnElement(self.n, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        result = sn_one(self.n)
        for _ in range(k):
            result = result * self
        return result

    # -- rendering -----------------------------------------------------
    def _mono_str(self, alpha, beta):
        factors = []
        for i in range(self.n):
            xi = "x" if self.n == 1 else f"x{i + 1}"
            if alpha[i] == 1:
                factors.append(xi)
            elif alpha[i] > 1:
                factors.append(f"{xi}^{alpha[i]}")
        for i in range(self.n):
            yi = "y" if self.n == 1 else f"y{i + 1}"
            if beta[i] == 1:
                factors.append(yi)
            elif beta[i] > 1:
                factors.append(f"{yi}^{beta[i]}")
        return "*".join(factors)

    def render(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms,
                      key=lambda k: (sum(k[0]) + sum(k[1]), k[0], k[1]),
                      reverse=True)
        parts = []
        for k in keys:
            c = self.terms[k]
            mono = self._mono_str(*k)
            mag = scalar_to_str(abs(c))
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def to_json(self):
        keys = sorted(self.terms,
                      key=lambda k: (sum(k[0]) + sum(k[1]), k[0], k[1]))
        return {"n": self.n,
                "terms": [{"a": list(a), "b": list(b),
                           "c": scalar_to_str(self.terms[(a, b)])}
                          for a, b in keys]}

    def __repr__(self):
        return f"SnElement({self.render()})"


# -- constructors ------------------------------------------------------

def sn_zero(n=1):
    return SnElement(n)


def sn_one(n=1):
    return SnElement(n, {((0,) * n, (0,) * n): 1})


def sn_monomial(n, alpha, beta, c=1):
    return SnElement(n, {(tuple(alpha), tuple(beta)): c})


def gen_x(n=1, i=0):
    alpha = [0] * n
    alpha[i] = 1
    return SnElement(n, {(tuple(alpha), (0,) * n): 1})


def gen_y(n=1, i=0):
    beta = [0] * n
    beta[i] = 1
    return SnElement(n, {((0,) * n, tuple(beta)): 1})


def matrix_unit(n, alpha, beta):
    """E_{alpha beta} = prod_i (x_i^{a_i} y_i^{b_i} - x_i^{a_i+1} y_i^{b_i+1}).

    These satisfy E_{alpha beta} E_{gamma rho} = delta_{beta gamma}
    E_{alpha rho} and span the ideal of finite-rank operators.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != n or len(beta) != n:
        raise DimensionMismatch("index tuples must have length n")
    terms = {}
    for mask in range(1 << n):
        eps = [(mask >> i) & 1 for i in range(n)]
        a = tuple(ai + e for ai, e in zip(alpha, eps))
        b = tuple(bi + e for bi, e in zip(beta, eps))
        sign = (-1) ** sum(eps)
        terms[(a, b)] = terms.get((a, b), Fraction(0)) + sign
    return SnElement(n, terms)


# -- structure maps ----------------------------------------------------

def eta(a):
    """The swap involution x_i <-> y_i (an anti-automorphism of order 2)."""
    return SnElement(a.n, {(beta, alpha): c
                           for (alpha, beta), c in a.terms.items()})


def laurent_image(a):
    """Image in the Laurent polynomial quotient, x_i -> t_i, y_i -> t_i^{-1}.

    The kernel of this map is exactly the ideal generated by the finite-rank
    operators, so the image decides membership in that ideal.
    """
    terms = {}
    for (alpha, beta), c in a.terms.items():
        e = tuple(ai - bi for ai, bi in zip(alpha, beta))
        terms[e] = terms.get(e, Fraction(0)) + c
    return MultiPoly(a.n, terms, "t")


def is_in_fn(a):
    """Membership in the finite-rank ideal (zero commutative image)."""
    return laurent_image(a).is_zero()


class S1Decomposition:
    """The direct-sum split S_1 = K + xK[x] + yK[y] + F.

    ``constant`` is the K-component; ``xpart``/``ypart`` are polynomials with
    zero constant term (in the display variables x and y); ``fpart`` maps
    matrix-unit indices (i, j) to coefficients.
    """

    __slots__ = ("constant", "xpart", "ypart", "fpart")

    def __init__(self, constant, xpart, ypart, fpart):
        self.constant = Fraction(constant)
        self.xpart = xpart
        self.ypart = ypart
        self.fpart = {k: Fraction(c) for k, c in fpart.items() if c}

    def reassemble(self):
        out = sn_one(1) * self.constant
        for d, c in enumerate(self.xpart.coeffs):
            if d and c:
                out = out + sn_monomial(1, (d,), (0,), c)
        for d, c in enumerate(self.ypart.coeffs):
            if d and c:
                out = out + sn_monomial(1, (0,), (d,), c)
        for (i, j), c in self.fpart.items():
            out = out + matrix_unit(1, (i,), (j,)) * c
        return out

    def size(self):
        """Largest matrix-unit index in the F-component, -1 when absent."""
        if not self.fpart:
            return -1
        return max(max(i, j) for i, j in self.fpart)

    def fpart_element(self):
        """The F-component as an element of S_1."""
        out = sn_zero(1)
        for (i, j), c in sorted(self.fpart.items()):
            out = out + matrix_unit(1, (i,), (j,)) * c
        return out

    def render_fpart(self):
        """The F-component in matrix-unit notation, e.g. ``E[0,0]-E[1,1]``."""
        if not self.fpart:
            return "0"
        parts = []
        for (i, j), c in sorted(self.fpart.items()):
            mag = scalar_to_str(abs(c))
            body = f"E[{i},{j}]" if mag == "1" else f"{mag}*E[{i},{j}]"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def to_json(self):
        return {
            "constant": str(self.constant),
            "x": [str(c) for c in self.xpart.coeffs],
            "y": [str(c) for c in self.ypart.coeffs],
            "f": [{"i": i, "j": j, "c": str(c)}
                  for (i, j), c in sorted(self.fpart.items())],
        }

    def __repr__(self):
        f = {k: str(c) for k, c in sorted(self.fpart.items())}
        return (f"S1Decomposition(constant={self.constant}, "
                f"xpart={self.xpart.render()}, ypart={self.ypart.render()}, "
                f"fpart={f})")


def decompose_s1(a):
    """Split an element of S_1 into constant + x-part + y-part + F-part.

    The commutative image determines the first three components; the
    remainder lies in F and is rewritten in the matrix-unit basis by prefix
    sums along each diagonal (the identity x^i y^j = E_{ij} + x^{i+1} y^{j+1}
    telescopes, and each diagonal of an F-element has coefficient sum zero).
    """
    if a.n != 1:
        raise DimensionMismatch("the four-part split is defined on S_1")
    image = laurent_image(a)
    constant = Fraction(0)
    xcoeffs, ycoeffs = {}, {}
    lift_terms = {}
    for (d,), c in image.terms.items():
        if d == 0:
            constant = c
            lift_terms[((0,), (0,))] = c
        elif d > 0:
            xcoeffs[d] = c
            lift_terms[((d,), (0,))] = c
        else:
            ycoeffs[-d] = c
            lift_terms[((0,), (-d,))] = c
    remainder = a - SnElement(1, lift_terms)
    diagonals = {}
    for (alpha, beta), c in remainder.terms.items():
        i, j = alpha[0], beta[0]
        diagonals.setdefault(i - j, {})[j] = c
    fpart = {}
    for offset, coeffs in diagonals.items():
        prefix = Fraction(0)
        for j in range(min(coeffs), max(coeffs) + 1):
            prefix += coeffs.get(j, Fraction(0))
            if prefix:
                fpart[(j + offset, j)] = prefix
    xs = [Fraction(0)] * (max(xcoeffs) + 1 if xcoeffs else 0)
    for d, c in xcoeffs.items():
        xs[d] = c
    ys = [Fraction(0)] * (max(ycoeffs) + 1 if ycoeffs else 0)
    for d, c in ycoeffs.items():
        ys[d] = c
    return S1Decomposition(constant, UniPoly(xs, "x"), UniPoly(ys, "y"), fpart)


# -- module actions ----------------------------------------------------

def act_left_on_P(a, p):
    """Left action on polynomials in x_1..x_n.

    ``p`` maps exponent tuples to coefficients.  On monomials,
    x^alpha y^beta . x^gamma = x^{gamma - beta + alpha} when gamma >= beta
    componentwise and 0 otherwise.
    """
    out = {}
    for (alpha, beta), c in a.terms.items():
        for gamma, d in p.items():
            if all(g >= b for g, b in zip(gamma, beta)):
                e = tuple(g - b + al for g, b, al in zip(gamma, beta, alpha))
                out[e] = out.get(e, Fraction(0)) + c * d
    return {e: c for e, c in out.items() if c}


def act_right_on_Pprime(p, a):
    """Right action on polynomials in y_1..y_n.

    On monomials, y^gamma . x^alpha y^beta = y^{gamma - alpha + beta} when
    gamma >= alpha componentwise and 0 otherwise.
    """
    out = {}
    for gamma, d in p.items():
        for (alpha, beta), c in a.terms.items():
            if all(g >= al for g, al in zip(gamma, alpha)):
                e = tuple(g - al + b for g, al, b in zip(gamma, alpha, beta))
                out[e] = out.get(e, Fraction(0)) + c * d
    return {e: c for e, c in out.items() if c}
