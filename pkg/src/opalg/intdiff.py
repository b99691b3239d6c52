"""The algebra of polynomial integro-differential operators I_1.

Normal form: every element is a unique sum of blocks p(H) D^d — where D^d
means the d-th power of the derivative for d > 0, the identity for d = 0 and
the (-d)-th power of integration for d < 0, with H = Dx the Euler-type
generator — plus a finite combination of the matrix units e_{kl}.  The
defining relations are D Int = 1, D q(H) = q(H+1) D, q(H) Int = Int q(H+1),
and Int^m D^m = 1 - sum_{t<m} e_{tt}.

Elements store ``diag`` (map d -> coefficient polynomial in H, left of D^d)
and ``fpart`` (map (k, l) -> scalar).  The module provides multiplication,
the transpose-style involution (star: D <-> Int, H fixed, e_{kl} -> e_{lk}),
the faithful left action on K[x], a right action on polynomials in D by
divided-power transport through star, the embedding of the algebra of
one-sided inverses onto the scalar subalgebra (x -> Int, y -> D) with exact
membership test and preimage, and the finite regularity criterion.
"""

from fractions import Fraction
from math import factorial

from .errors import (DimensionMismatch, ElementInF, NoDegreeFound,
                     NotInScalarSubalgebra)
from .linalg import kernel_vector, matrix_rank
from .scalars import scalar_to_str
from .unipoly import UniPoly, mu_of_poly, rising_product

__all__ = [
    "I1Element", "i1_zero", "i1_one", "i1_scalar", "i1_d", "i1_int", "i1_h",
    "i1_from_hpoly", "i1_block", "i1_e", "i1_mul", "star", "act_on_Kx",
    "act_right_on_Dpolys", "I1RegularityReport", "i1_regularity",
    "is_right_regular_i1", "regularity_degree_i1",
    "xi_of", "is_in_scalar_subalgebra", "xi_preimage",
]


def _fall(m, k):
    """Falling factorial m (m-1) ... (m-k+1) as an exact Fraction."""
    acc = Fraction(1)
    for s in range(k):
        acc *= m - s
    return acc


class I1Element:
    """Element of I_1 in normal form (see module docstring)."""

    __slots__ = ("diag", "fpart")

    def __init__(self, diag=None, fpart=None):
        self.diag = {}
        for d, p in (diag or {}).items():
            if isinstance(p, (int, Fraction)):
                p = UniPoly.const(p, "H")
            if not p.is_zero():
                d = int(d)
                if d in self.diag:
                    p = self.diag[d] + p
                self.diag[d] = p
        self.diag = {d: p for d, p in self.diag.items() if not p.is_zero()}
        self.fpart = {}
        for (k, l), c in (fpart or {}).items():
            c = Fraction(c)
            if c:
                if k < 0 or l < 0:
                    raise ValueError("matrix-unit indices must be nonnegative")
                key = (int(k), int(l))
                self.fpart[key] = self.fpart.get(key, Fraction(0)) + c
        self.fpart = {k: c for k, c in self.fpart.items() if c}

    # -- structure -----------------------------------------------------
    def is_zero(self):
        return not self.diag and not self.fpart

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = i1_scalar(other)
        if not isinstance(other, I1Element):
            return NotImplemented
        return self.diag == other.diag and self.fpart == other.fpart

    def __hash__(self):
        return hash((tuple(sorted(self.diag.items())),
                     tuple(sorted(self.fpart.items()))))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return i1_scalar(other)
        return other if isinstance(other, I1Element) else None

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        diag = dict(self.diag)
        for d, p in other.diag.items():
            diag[d] = diag.get(d, UniPoly((), "H")) + p
        fpart = dict(self.fpart)
        for k, c in other.fpart.items():
            fpart[k] = fpart.get(k, Fraction(0)) + c
        return I1Element(diag, fpart)

    __radd__ = __add__

    def __neg__(self):
        return I1Element({d: -p for d, p in self.diag.items()},
                         {k: -c for k, c in self.fpart.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return I1Element({d: p * c for d, p in self.diag.items()},
                            {k: v * c for k, v in self.fpart.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return i1_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        result = i1_one()
        for _ in range(k):
            result = i1_mul(result, self)
        return result

    # -- rendering -----------------------------------------------------
    @staticmethod
    def _block_str(d, p):
        if d == 0:
            return p.render() if (p.degree <= 0 or len(
                [c for c in p.coeffs if c]) == 1) else f"({p.render()})"
        op = "d" if d > 0 else "i"
        power = abs(d)
        op_str = op if power == 1 else f"{op}^{power}"
        if p.degree == 0 and p[0] == 1:
            return op_str
        if p.degree == 0:
            return f"{scalar_to_str(p[0])}*{op_str}"
        return f"({p.render()})*{op_str}"

    def render(self):
        if self.is_zero():
            return "0"
        parts = []
        for d in sorted(self.diag, reverse=True):
            parts.append(self._block_str(d, self.diag[d]))
        for (k, l) in sorted(self.fpart):
            c = self.fpart[(k, l)]
            body = f"e[{k},{l}]"
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{scalar_to_str(c)}*{body}")
        out = parts[0]
        for piece in parts[1:]:
            out += piece if piece.startswith("-") else "+" + piece
        return out

    def to_json(self):
        return {"diag": {str(d): [scalar_to_str(c)
                                  for c in self.diag[d].coeffs]
                         for d in sorted(self.diag)},
                "f": [{"k": k, "l": l, "c": scalar_to_str(self.fpart[(k, l)])}
                      for (k, l) in sorted(self.fpart)]}

    def __repr__(self):
        return f"I1Element({self.render()})"


# -- constructors ------------------------------------------------------

def i1_zero():
    return I1Element()


def i1_one():
    return I1Element({0: UniPoly.const(1, "H")})


def i1_scalar(c):
    return I1Element({0: UniPoly.const(c, "H")})


def i1_d(power=1):
    return I1Element({power: UniPoly.const(1, "H")})


def i1_int(power=1):
    return I1Element({-power: UniPoly.const(1, "H")})


def i1_h():
    return I1Element({0: UniPoly.gen("H")})


def i1_from_hpoly(p):
    return I1Element({0: p})


def i1_block(d, p):
    """p(H) times the d-th diagonal generator power."""
    return I1Element({d: p})


def i1_e(k, l):
    return I1Element(None, {(k, l): 1})


# -- multiplication ----------------------------------------------------

def _mul_diag_diag(da, pa, db, pb, diag_out, f_out):
    """(pa(H) D^da)(pb(H) D^db) accumulated into the output maps."""
    p = pa * pb.shift(da)
    d = da + db
    diag_out[d] = diag_out.get(d, UniPoly((), "H")) + p
    if da < 0 and db > 0:
        # Int^j D^i = D-pure part minus sum_t e_{j-t, i-t}
        j, i = -da, db
        for t in range(1, min(i, j) + 1):
            k, l = j - t, i - t
            c = -p.eval(k + 1)
            if c:
                f_out[(k, l)] = f_out.get((k, l), Fraction(0)) + c


def i1_mul(a, b):
    """Product in I_1 via the normal-form rewriting rules."""
    diag_out, f_out = {}, {}
    for da, pa in a.diag.items():
        for db, pb in b.diag.items():
            _mul_diag_diag(da, pa, db, pb, diag_out, f_out)
        for (k, l), c in b.fpart.items():
            # (p(H) D^d) e_{kl}
            if da >= 0:
                if k >= da:
                    v = c * pa.eval(k - da + 1)
                    if v:
                        key = (k - da, l)
                        f_out[key] = f_out.get(key, Fraction(0)) + v
            else:
                v = c * pa.eval(k - da + 1)
                if v:
                    key = (k - da, l)
                    f_out[key] = f_out.get(key, Fraction(0)) + v
    for (k, l), c in a.fpart.items():
        for db, pb in b.diag.items():
            # e_{kl} (p(H) D^d)
            v = c * pb.eval(l + 1)
            if not v:
                continue
            l2 = l + db
            if l2 >= 0:
                key = (k, l2)
                f_out[key] = f_out.get(key, Fraction(0)) + v
        for (u, v_), c2 in b.fpart.items():
            if l == u:
                key = (k, v_)
                f_out[key] = f_out.get(key, Fraction(0)) + c * c2
    return I1Element(diag_out, f_out)


def star(a):
    """The involution: D <-> Int, H fixed, e_{kl} -> e_{lk}.

    An anti-automorphism of order two; on blocks,
    (p(H) D^d)^* = p(H+(-d)) D^{-d} after renormalizing coefficients left.
    """
    return I1Element({-d: p.shift(-d) for d, p in a.diag.items()},
                     {(l, k): c for (k, l), c in a.fpart.items()})


# -- actions -----------------------------------------------------------

def act_on_Kx(a, p):
    """Apply an operator to a polynomial in x (UniPoly in variable x).

    The action is faithful: H x^m = (m+1) x^m, D differentiates, Int is the
    antiderivative without constant, e_{kl} x^m = delta_{lm} (m!/k!) x^k.
    """
    out = {}
    for m, c in enumerate(p.coeffs):
        if not c:
            continue
        for d, q in a.diag.items():
            if d >= 0:
                if m >= d:
                    v = c * _fall(m, d) * q.eval(m - d + 1)
                    if v:
                        out[m - d] = out.get(m - d, Fraction(0)) + v
            else:
                j = -d
                v = c * q.eval(m + j + 1) / rising_product(m, j)
                if v:
                    out[m + j] = out.get(m + j, Fraction(0)) + v
        for (k, l), c2 in a.fpart.items():
            if l == m:
                v = c * c2 * Fraction(factorial(m), factorial(k))
                if v:
                    out[k] = out.get(k, Fraction(0)) + v
    coeffs = [Fraction(0)] * (max(out) + 1 if out else 0)
    for m, c in out.items():
        coeffs[m] = c
    return UniPoly(coeffs, "x")


def act_right_on_Dpolys(p, a):
    """Right action on polynomials in D (UniPoly in variable d).

    Transported through star with the divided-power identification of D^m
    and x^m/m!:  D^m . a = sum_k k!/m! [x^k](star(a) x^m) D^k.  In
    particular D^m . (q(H) D^i) = q(m+1) D^{m+i} and D^m . e_{kl} =
    delta_{mk} D^l.
    """
    sa = star(a)
    out = {}
    for m, c in enumerate(p.coeffs):
        if not c:
            continue
        image = act_on_Kx(sa, UniPoly([0] * m + [1], "x"))
        for k, v in enumerate(image.coeffs):
            if v:
                w = c * v * Fraction(factorial(k), factorial(m))
                out[k] = out.get(k, Fraction(0)) + w
    coeffs = [Fraction(0)] * (max(out) + 1 if out else 0)
    for k, c in out.items():
        coeffs[k] = c
    return UniPoly(coeffs, "d")


# -- regularity --------------------------------------------------------

class I1RegularityReport:
    """Data of the finite left-regularity criterion in I_1.

    ``in_psi`` flags the excluded locus (no derivative-side component);
    ``size`` is the largest matrix-unit index, ``mu`` the minimal shift
    clearing the leading coefficient of positive integer roots, ``nu`` the
    resulting truncation degree, ``deg_d`` the derivative-part degree, and
    ``kernel`` (when the verdict is false) a polynomial in D annihilating
    the element from the left, as a coefficient list.
    """

    __slots__ = ("verdict", "in_psi", "size", "mu", "nu", "deg_d", "kernel")

    def __init__(self, verdict, in_psi, size, mu, nu, deg_d, kernel):
        self.verdict = verdict
        self.in_psi = in_psi
        self.size = size
        self.mu = mu
        self.nu = nu
        self.deg_d = deg_d
        self.kernel = kernel

    def __bool__(self):
        return self.verdict

    def to_json(self):
        out = {"inPsi": self.in_psi, "size": self.size, "mu": self.mu,
               "nu": self.nu, "verdict": self.verdict}
        if self.deg_d is not None:
            out["degD"] = self.deg_d
        if self.kernel is not None:
            out["kernel"] = [scalar_to_str(c) for c in self.kernel]
        return out

    def __repr__(self):
        return (f"I1RegularityReport(verdict={self.verdict}, "
                f"in_psi={self.in_psi}, size={self.size}, mu={self.mu}, "
                f"nu={self.nu})")


def _size_i1(a):
    if not a.fpart:
        return -1
    return max(max(k, l) for k, l in a.fpart)


def _right_action_matrix_i1(a, domain_deg, codomain_deg):
    rows = [[Fraction(0)] * (domain_deg + 1) for _ in range(codomain_deg + 1)]
    for m in range(domain_deg + 1):
        image = act_right_on_Dpolys(UniPoly([0] * m + [1], "d"), a)
        for k, c in enumerate(image.coeffs):
            if c:
                rows[k][m] = c
    return rows


def i1_regularity(a):
    """Left regularity in I_1 by the finite rank test.

    Operators without derivative-side component (integrations, H-free
    constants aside, plus finite rank) are never left regular; otherwise the
    element is left regular iff the right action on polynomials in D is
    injective in degree <= nu = max(size, mu of the leading coefficient).
    """
    s = _size_i1(a)
    dplus = [d for d in a.diag if d >= 0]
    if not dplus:
        in_psi = True
        if a.is_zero():
            return I1RegularityReport(False, True, s, None, None, None,
                                      [Fraction(1)])
        n_dom = s + 1
        bound = n_dom + max((-d for d in a.diag), default=0)
        matrix = _right_action_matrix_i1(a, n_dom, max(bound, s))
        return I1RegularityReport(False, True, s, None, None, None,
                                  kernel_vector(matrix))
    n = max(dplus)
    mu = mu_of_poly(a.diag[n])
    nu = max(s, mu, 0)
    matrix = _right_action_matrix_i1(a, nu, nu + n)
    if matrix_rank(matrix) == nu + 1:
        return I1RegularityReport(True, False, s, mu, nu, n, None)
    return I1RegularityReport(False, False, s, mu, nu, n,
                              kernel_vector(matrix))


def is_right_regular_i1(a):
    """Right regularity via the involution (left regularity of star(a))."""
    report = i1_regularity(star(a))
    return report


def regularity_degree_i1(a, cap=64):
    """Least i >= 0 with D^i a left regular; raises ElementInF inside F."""
    if not a.diag:
        raise ElementInF("the regularity degree needs a nonzero image "
                         "modulo finite-rank operators")
    current = a
    d = i1_d()
    for i in range(cap + 1):
        if i1_regularity(current).verdict:
            return i
        current = i1_mul(d, current)
    raise NoDegreeFound(f"no regularity degree up to {cap}")


# -- the embedded copy of the one-sided-inverse algebra ----------------

def xi_of(a):
    """Ring isomorphism from S_1 onto the scalar subalgebra of I_1.

    x -> Int and y -> D; matrix units map to matrix units.  On a basis
    monomial x^u y^v with m = min(u, v):
    Int^u D^v = D-block of degree v-u minus sum_{t<m} e_{t+u-m, t+v-m}.
    """
    if a.n != 1:
        raise DimensionMismatch("the embedding is defined on S_1")
    diag, fpart = {}, {}
    for (alpha, beta), c in a.terms.items():
        u, v = alpha[0], beta[0]
        m = min(u, v)
        d = v - u
        diag[d] = diag.get(d, UniPoly((), "H")) + UniPoly.const(c, "H")
        for t in range(m):
            key = (t + u - m, t + v - m)
            fpart[key] = fpart.get(key, Fraction(0)) - c
    return I1Element(diag, fpart)


def is_in_scalar_subalgebra(a):
    """Exact membership test for the image of the embedding.

    An operator lies in the embedded copy iff every diagonal coefficient
    polynomial is constant (the matrix units are always in the image).
    """
    return all(p.degree <= 0 for p in a.diag.values())


def xi_preimage(a):
    """Inverse of the embedding; raises NotInScalarSubalgebra off the image."""
    from .onesided import SnElement, matrix_unit, sn_monomial, sn_zero
    if not is_in_scalar_subalgebra(a):
        raise NotInScalarSubalgebra("a diagonal coefficient depends on H")
    out = sn_zero(1)
    for d, p in a.diag.items():
        c = p[0]
        if d >= 0:
            out = out + sn_monomial(1, (0,), (d,), c)
        else:
            out = out + sn_monomial(1, (-d,), (0,), c)
    for (k, l), c in a.fpart.items():
        out = out + matrix_unit(1, (k,), (l,)) * c
    return out
