"""The Jacobian algebra A_1: the Weyl algebra extended by H^{-1}.

Elements are finite sums of terms x^a g(H) d^b with g in the coefficient
ring L = K[H^{-1}, (H+1)^{-1}, ...][H] (see lfrac); this spanning form is not
a basis, so equality is decided through the faithful action on K[x], where a
term acts by  x^m -> m(m-1)...(m-b+1) * g(m-b+1) * x^{m-b+a}  (zero for
m < b; the evaluation point m-b+1 >= 1 never meets a pole of L).

Per grade r = a - b the eigenvalue sequence of an element agrees, for all
m >= max b, with a unique rational function W_r(m); the finitely many
deviations at small m are the canonical finite-rank corrections.  All the
structure here — the zero test, the grade view with its L vs L-perp vs
finite-rank split, the left-regularity criterion with its size/delta/mu/nu
data, and the skew Laurent image that kills the finite-rank ideal — is
computed exactly from (W_r, deviations).
"""

from fractions import Fraction
from math import factorial

from .errors import (DimensionMismatch, ElementInF, NoDegreeFound,
                     UnsplittableComponent)
from .lfrac import LFraction, inverse_rising
from .linalg import kernel_vector, matrix_rank
from .scalars import scalar_to_str
from .unipoly import RatFunc, UniPoly, falling_factorial_poly, natplus_roots

__all__ = [
    "A1Element", "a1_zero", "a1_one", "a1_scalar", "a1_x", "a1_d", "a1_h",
    "a1_hinv", "a1_int", "a1_term", "a1_from_lfrac", "a1_E", "a1_rho",
    "a1_mul", "theta", "a1_zero_test", "a1_equal", "act_on_xpoly",
    "act_right_on_dpolys", "GradeData", "grade_decompose", "op_with_eigen",
    "A1RegularityReport", "a1_regularity", "l_is_regular",
    "regularity_degree_a1", "SkewLaurentElement", "skew_laurent_image",
]


def _fall(m, k):
    acc = Fraction(1)
    for s in range(k):
        acc *= m - s
    return acc


class A1Element:
    """Finite sum of terms x^a g(H) d^b, stored as a map (a, b) -> g."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (a, b), g in (terms or {}).items():
            if isinstance(g, (int, Fraction)):
                g = LFraction.const(g)
            if g.is_zero():
                continue
            a, b = int(a), int(b)
            if a < 0 or b < 0:
                raise ValueError("term exponents must be nonnegative")
            key = (a, b)
            if key in clean:
                g = clean[key] + g
            clean[key] = g
        self.terms = {k: g for k, g in clean.items() if not g.is_zero()}

    # -- structure -----------------------------------------------------
    def is_formally_zero(self):
        """No stored terms (sufficient but not necessary for being zero)."""
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = a1_scalar(other)
        if not isinstance(other, A1Element):
            return NotImplemented
        return a1_equal(self, other)

    def __hash__(self):
        raise TypeError("A1Element is unhashable (equality is semantic)")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return a1_scalar(other)
        return other if isinstance(other, A1Element) else None

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, g in other.terms.items():
            terms[k] = terms[k] + g if k in terms else g
        return A1Element(terms)

    __radd__ = __add__

    def __neg__(self):
        return A1Element({k: -g for k, g in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return A1Element({k: g * Fraction(other)
                              for k, g in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return a1_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        result = a1_one()
        for _ in range(k):
            result = a1_mul(result, self)
        return result

    # -- rendering -----------------------------------------------------
    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            g = self.terms[(a, b)]
            factors = []
            if a == 1:
                factors.append("x")
            elif a > 1:
                factors.append(f"x^{a}")
            gstr = None
            if g.is_const():
                c = g.const_value()
            else:
                c = None
                gstr = g.render()
                if any(ch in gstr for ch in "+-/"):
                    gstr = f"({gstr})"
            if b == 1:
                dstr = "d"
            elif b > 1:
                dstr = f"d^{b}"
            else:
                dstr = None
            mid = [f for f in [gstr] + [dstr] if f]
            if c is None:
                body = "*".join(factors + mid) if factors or mid else "1"
                parts.append(body if not parts else "+" + body)
                continue
            mag = scalar_to_str(abs(c))
            rest = factors + ([dstr] if dstr else [])
            if not rest:
                body = mag
            elif mag == "1":
                body = "*".join(rest)
            else:
                body = "*".join([mag] + rest)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+" if c > 0 else "-") + body)
        return "".join(parts)

    def to_json(self):
        return {"terms": [{"a": a, "b": b, "g": self.terms[(a, b)].to_json()}
                          for (a, b) in sorted(self.terms)]}

    def __repr__(self):
        return f"A1Element({self.render()})"


# -- constructors ------------------------------------------------------

def a1_zero():
    return A1Element()


def a1_one():
    return A1Element({(0, 0): LFraction.const(1)})


def a1_scalar(c):
    return A1Element({(0, 0): LFraction.const(c)})


def a1_x():
    return A1Element({(1, 0): LFraction.const(1)})


def a1_d():
    return A1Element({(0, 1): LFraction.const(1)})


def a1_h():
    return A1Element({(0, 0): LFraction(UniPoly.gen("H"))})


def a1_hinv():
    return A1Element({(0, 0): LFraction(UniPoly.const(1, "H"), {0: 1})})


def a1_int():
    """The integration operator x H^{-1} (a right inverse of d)."""
    return A1Element({(1, 0): LFraction(UniPoly.const(1, "H"), {0: 1})})


def a1_term(a, g, b):
    return A1Element({(a, b): g})


def a1_from_lfrac(g):
    return A1Element({(0, 0): g})


def a1_E(i, j):
    """Matrix unit E_{ij}: x^i u_j d^j - x^{i+1} u_{j+1} d^{j+1},
    with u_k = [H(H+1)...(H+k-1)]^{-1}; it sends x^j to x^i exactly."""
    return A1Element({(i, j): inverse_rising(j),
                      (i + 1, j + 1): -inverse_rising(j + 1)})


def a1_rho(j, i):
    """rho_{ji} = x^i [H^j (H)(H+1)...(H+i-1)]^{-1} d^i.

    Satisfies d^i rho_{ji} = H^{-j} d^i; these witness one-sided
    invertibility phenomena below the regularity degree.
    """
    den = {}
    if j > 0 or i > 0:
        den[0] = j + (1 if i >= 1 else 0)
    for k in range(1, i):
        den[k] = den.get(k, 0) + 1
    return A1Element({(i, i): LFraction(UniPoly.const(1, "H"), den)})


# -- multiplication and involution ------------------------------------

def _shift_factor_poly(count, offset):
    """prod_{s=1}^{count} (H + offset - s) as a UniPoly in H."""
    p = UniPoly.const(1, "H")
    H = UniPoly.gen("H")
    for s in range(1, count + 1):
        p = p * (H + (offset - s))
    return p


def a1_mul(u, v):
    """Product, normal-ordering each term pair with forward shifts only.

    d^B x^C = x^{C-B} prod_{s=1}^{B}(H+C-s)  for B <= C, and
    d^B x^C = prod_{s=1}^{C}(H+B-s) d^{B-C}  for B > C.
    """
    out = {}
    for (A, B), g in u.terms.items():
        for (C, D), h in v.terms.items():
            if B <= C:
                coeff = g.shift(C - B) * LFraction(_shift_factor_poly(B, C)) * h
                key = (A + C - B, D)
            else:
                coeff = g * LFraction(_shift_factor_poly(C, B)) * h.shift(B - C)
                key = (A, B - C + D)
            if key in out:
                coeff = out[key] + coeff
            out[key] = coeff
    return A1Element(out)


def theta(u):
    """The anti-automorphism x^a g(H) d^b -> x^b g(H) d^a (order two)."""
    return A1Element({(b, a): g for (a, b), g in u.terms.items()})


# -- the faithful action and the zero test -----------------------------

def act_on_xpoly(u, p):
    """Left action on a polynomial in x (UniPoly in variable x)."""
    out = {}
    for m, c in enumerate(p.coeffs):
        if not c:
            continue
        for (a, b), g in u.terms.items():
            if m < b:
                continue
            v = c * _fall(m, b) * g.eval(m - b + 1)
            if v:
                e = m - b + a
                out[e] = out.get(e, Fraction(0)) + v
    coeffs = [Fraction(0)] * (max(out) + 1 if out else 0)
    for e, v in out.items():
        coeffs[e] = v
    return UniPoly(coeffs, "x")


class GradeEigen:
    """Eigen data of one grade: rational function plus finite deviations."""

    __slots__ = ("grade", "eigen", "exceptions", "gate")

    def __init__(self, grade, eigen, exceptions, gate):
        self.grade = grade
        self.eigen = eigen          # RatFunc in the index m
        self.exceptions = exceptions  # list of (m, actual, expected-or-None)
        self.gate = gate            # indices below this were checked

    def __repr__(self):
        return (f"GradeEigen(grade={self.grade}, eigen={self.eigen!r}, "
                f"exceptions={self.exceptions})")


def _term_eigen_ratfunc(g, b):
    """RatFunc in m for the sequence m(m-1)..(m-b+1) * g(m-b+1)."""
    num = UniPoly(g.num.shift(1 - b).coeffs, "m")
    den = UniPoly.const(1, "m")
    for k, e in g.den.items():
        den = den * UniPoly((Fraction(k + 1 - b), 1), "m") ** e
    return RatFunc(num, den) * RatFunc(falling_factorial_poly(b, "m"))


def left_eigen_data(u):
    """Per-grade eigen rational functions and deviation lists.

    For grade r the element maps x^m to w_r(m) x^{m+r}; w_r agrees with the
    returned rational function for every m >= gate, and the deviations below
    the gate are listed exactly.
    """
    grades = {}
    gates = {}
    members = {}
    for (a, b), g in u.terms.items():
        r = a - b
        rf = _term_eigen_ratfunc(g, b)
        grades[r] = grades[r] + rf if r in grades else rf
        gates[r] = max(gates.get(r, 0), b)
        members.setdefault(r, []).append((b, g))
    out = {}
    for r, eigen in grades.items():
        exceptions = []
        for m in range(gates[r]):
            actual = Fraction(0)
            for b, g in members[r]:
                if m >= b:
                    actual += _fall(m, b) * g.eval(m - b + 1)
            expected = eigen.eval_checked(m)
            if expected is None or actual != expected:
                exceptions.append((m, actual, expected))
        out[r] = GradeEigen(r, eigen, exceptions, gates[r])
    return out


def a1_zero_test(u):
    """Exact zero test through the faithful action.

    The element is zero iff every grade has identically zero rational part
    and no deviations.
    """
    for data in left_eigen_data(u).values():
        if not data.eigen.is_zero() or data.exceptions:
            return False
    return True


def a1_equal(u, v):
    return a1_zero_test(u - v)


# -- right action on polynomials in d ----------------------------------

def act_right_on_dpolys(p, u):
    """Right action on polynomials in d, transported through theta:
    d^m . (x^A g(H) d^B) = m(m-1)..(m-A+1) * g(m-A+1) * d^{m-A+B}."""
    out = {}
    for m, c in enumerate(p.coeffs):
        if not c:
            continue
        for (a, b), g in u.terms.items():
            if m < a:
                continue
            v = c * _fall(m, a) * g.eval(m - a + 1)
            if v:
                e = m - a + b
                out[e] = out.get(e, Fraction(0)) + v
    coeffs = [Fraction(0)] * (max(out) + 1 if out else 0)
    for e, v in out.items():
        coeffs[e] = v
    return UniPoly(coeffs, "d")


def right_eigen_data(u):
    """Eigen data of the right action (the left data of theta(u))."""
    return left_eigen_data(theta(u))


# -- grade view --------------------------------------------------------

def op_with_eigen(w):
    """An element of grade 0 whose eigen sequence matches the rational
    function ``w`` (in the index m) at every non-deviation point.

    Positive-integer poles are realized by the column operators
    x^p H^{-(e+1)} d^p (whose H-form has a pole of order e at p); what
    remains has poles in -N only and lifts into the coefficient ring L.
    """
    gH = RatFunc(UniPoly(w.num.coeffs, "H"), UniPoly(w.den.coeffs, "H")).shift(-1)
    element = a1_zero()
    remaining = gH
    while True:
        pos = [p for p in remaining.integer_poles() if p >= 1]
        if not pos:
            break
        p = max(pos)
        # order of the pole at p
        e = 0
        den = remaining.den
        linear = UniPoly((-Fraction(p), 1), "H")
        while True:
            q, rem = den.divmod(linear)
            if not rem.is_zero():
                break
            den = q
            e += 1
        c = (remaining * RatFunc(linear ** e)).eval_checked(p)
        k = c / Fraction(factorial(p - 1))
        column = a1_term(p, LFraction(UniPoly.const(k, "H"), {0: e + 1}), p)
        phi = RatFunc(_shift_factor_poly(p - 1, 0) * k, linear ** e)
        element = element + column
        remaining = remaining - phi
    lf = LFraction.from_ratfunc(remaining)
    return element + a1_from_lfrac(lf)


class GradeData:
    """One grade of the canonical decomposition.

    ``l`` is the coefficient-ring component and ``perp`` the column
    component (the span of the x^p H^{-f} d^p) of the depth algebra,
    reported with the grade attached, so that ``core`` -- the grade
    component of the element -- is x^r l + perp for r >= 0 and
    l d^{-r} + perp for r < 0.  ``eigen`` is the reduced eigen rational
    function of the grade and ``exceptions`` its pointwise deviations
    (index, actual, expected).
    """

    __slots__ = ("grade", "eigen", "exceptions", "l", "perp", "core")

    def __init__(self, grade, eigen, exceptions, l, perp, core):
        self.grade = grade
        self.eigen = eigen
        self.exceptions = exceptions
        self.l = l
        self.perp = perp
        self.core = core

    def __repr__(self):
        return (f"GradeData(grade={self.grade}, l={self.l.render()}, "
                f"perp={self.perp.render()})")


def _principal_parts(rf):
    """Polynomial part and principal parts {(k, f): c} at the poles -k <= 0
    of a rational function; raises UnsplittableComponent on any other pole
    (which the grading makes impossible for depth coefficients).
    """
    poly, rem = rf.num.divmod(rf.den)
    pieces = {}
    work = RatFunc(rem, rf.den)
    while not work.is_zero():
        if work.den.degree == 0:
            poly = poly + work.num * (Fraction(1) / work.den[0])
            break
        poles = [t for t in work.integer_poles()]
        if not poles or max(poles) > 0:
            raise UnsplittableComponent(
                "pole pattern outside the depth coefficient ring")
        t = max(poles)
        linear = UniPoly((-Fraction(t), 1), "H")
        e = 0
        den = work.den
        while True:
            q, r = den.divmod(linear)
            if not r.is_zero():
                break
            den = q
            e += 1
        c = work.num.eval(t) / den.eval(t)
        pieces[(-t, e)] = pieces.get((-t, e), Fraction(0)) + c
        work = work - RatFunc(UniPoly.const(c, "H"), linear ** e)
    return poly, {k: c for k, c in pieces.items() if c}


def _split_depth(m, rf, l_parts, columns):
    """Express x^m rf(H) d^m inside L + span{x^p H^{-f} d^p}, exactly.

    Uses x^m p(H) d^m = p(H-m)(H-1)...(H-m) for polynomials,
    x^m (H+k)^{-f} d^m = (H-1)...(H-m)(H+k-m)^{-f} for k >= m, and the
    depth-lowering rewrite
    x^m (H+k)^{-f} d^m = x^{m-k} H^{-f}(H-1)...(H-k) d^{m-k} for 0 < k < m.
    L-pieces are appended to ``l_parts``; columns accumulate in ``columns``
    as {(p, f): c}.
    """
    work = [(m, rf)]
    while work:
        m, rf = work.pop()
        if rf.is_zero():
            continue
        if m == 0:
            l_parts.append(LFraction.from_ratfunc(rf))
            continue
        poly, pieces = _principal_parts(rf)
        if not poly.is_zero():
            l_parts.append(LFraction(poly.shift(-m) * _shift_factor_poly(m, 0)))
        for (k, f), c in pieces.items():
            if k >= m:
                l_parts.append(LFraction(
                    _shift_factor_poly(m, 0) * UniPoly.const(c, "H"),
                    {k - m: f}))
            elif k == 0:
                columns[(m, f)] = columns.get((m, f), Fraction(0)) + c
            else:
                inner = RatFunc(
                    _shift_factor_poly(k, 0) * UniPoly.const(c, "H"),
                    UniPoly.gen("H") ** f)
                work.append((m - k, inner))


def grade_decompose(u):
    """Canonical split of each grade into its L-component and its column
    component in the depth algebra L + span{x^p H^{-f} d^p} (a direct sum);
    the cores reassemble to the element exactly.

    Returns a list of GradeData ordered by grade.
    """
    eigen_data = left_eigen_data(u)
    by_grade = {}
    for (a, b), g in u.terms.items():
        by_grade.setdefault(a - b, []).append((a, b, g))
    views = []
    for r in sorted(by_grade):
        l_parts, columns = [], {}
        for a, b, g in by_grade[r]:
            _split_depth(min(a, b), g.to_ratfunc(), l_parts, columns)
        l = LFraction.const(0)
        for piece in l_parts:
            l = l + piece
        perp_terms = {}
        for (p, f), c in sorted(columns.items()):
            if not c:
                continue
            key = (p + r, p) if r >= 0 else (p, p - r)
            lf = LFraction(UniPoly.const(c, "H"), {0: f})
            perp_terms[key] = perp_terms[key] + lf if key in perp_terms else lf
        perp = A1Element(perp_terms)
        core = perp
        if not l.is_zero():
            lkey = (r, 0) if r >= 0 else (0, -r)
            core = core + A1Element({lkey: l})
        ed = eigen_data[r]
        views.append(GradeData(r, ed.eigen, ed.exceptions, l, perp, core))
    return views


def reassemble_grades(views):
    """Exact inverse of grade_decompose."""
    out = a1_zero()
    for view in views:
        out = out + view.core
    return out


# -- regularity --------------------------------------------------------

class A1RegularityReport:
    """Data of the finite left-regularity criterion in A_1.

    ``excluded`` flags elements with no nonnegative-grade rational content
    (they are never left regular); ``size`` bounds the finite-rank
    deviations, ``delta`` is the largest positive pole of the leading
    H-form, ``mu`` the minimal shift clearing it of positive poles and
    roots, ``nu`` the truncation degree of the rank test, and ``lead`` the
    delta-shifted leading H-form inside the coefficient ring.
    """

    __slots__ = ("verdict", "excluded", "size", "delta", "mu", "nu",
                 "deg_d", "lead", "kernel")

    def __init__(self, verdict, excluded, size, delta, mu, nu, deg_d, lead,
                 kernel):
        self.verdict = verdict
        self.excluded = excluded
        self.size = size
        self.delta = delta
        self.mu = mu
        self.nu = nu
        self.deg_d = deg_d
        self.lead = lead
        self.kernel = kernel

    def __bool__(self):
        return self.verdict

    def to_json(self):
        out = {"inXi": self.excluded, "size": self.size, "delta": self.delta,
               "mu": self.mu, "nu": self.nu, "verdict": self.verdict}
        if self.deg_d is not None:
            out["degD"] = self.deg_d
        if self.lead is not None:
            out["lead"] = self.lead.to_json()
        if self.kernel is not None:
            out["kernel"] = [scalar_to_str(c) for c in self.kernel]
        return out

    def __repr__(self):
        return (f"A1RegularityReport(verdict={self.verdict}, "
                f"excluded={self.excluded}, size={self.size}, "
                f"delta={self.delta}, mu={self.mu}, nu={self.nu})")


def _exception_box(data):
    """Largest coordinate touched by any deviation, -1 when there are none."""
    s = -1
    for grade_data in data.values():
        r = grade_data.grade
        for m, _actual, _expected in grade_data.exceptions:
            s = max(s, m, m + r)
    return s


def _right_action_matrix_a1(u, domain_deg, codomain_deg):
    rows = [[Fraction(0)] * (domain_deg + 1) for _ in range(codomain_deg + 1)]
    for m in range(domain_deg + 1):
        image = act_right_on_dpolys(UniPoly([0] * m + [1], "d"), u)
        for k, c in enumerate(image.coeffs):
            if c and k <= codomain_deg:
                rows[k][m] = c
    return rows


def a1_regularity(u):
    """Left regularity in A_1 by the finite rank test.

    Elements whose right action has no surviving rational content in any
    nonnegative grade are never left regular.  Otherwise, with n the largest
    such grade and G the leading H-form, the element is left regular iff the
    right action on polynomials in d is injective in degree <=
    nu = max(size of the deviations, mu(G)).
    """
    data = right_eigen_data(u)
    s = _exception_box(data)
    lead_grades = [r for r, gd in data.items()
                   if r >= 0 and not gd.eigen.is_zero()]
    if not lead_grades:
        n_dom = s + 1
        cod = max(s, n_dom)
        matrix = _right_action_matrix_a1(u, n_dom, cod)
        return A1RegularityReport(False, True, s, None, None, None, None,
                                  None, kernel_vector(matrix))
    n = max(lead_grades)
    W = data[n].eigen
    G = RatFunc(UniPoly(W.num.coeffs, "H"), UniPoly(W.den.coeffs, "H")).shift(-1)
    delta = max([p for p in G.integer_poles() if p >= 1], default=0)
    mu = delta
    while natplus_roots(G.shift(mu).num):
        mu += 1
    nu = max(s, mu)
    lead = LFraction.from_ratfunc(G.shift(delta))
    matrix = _right_action_matrix_a1(u, nu, nu + n)
    if matrix_rank(matrix) == nu + 1:
        return A1RegularityReport(True, False, s, delta, mu, nu, n, lead, None)
    return A1RegularityReport(False, False, s, delta, mu, nu, n, lead,
                              kernel_vector(matrix))


def l_is_regular(g):
    """Left regularity of a coefficient-ring element g(H).

    Equivalent to the numerator having no positive integer root; the full
    criterion is used so the answer carries the same report data.
    """
    return a1_regularity(a1_from_lfrac(g)).verdict


def regularity_degree_a1(u, cap=64):
    """Least i >= 0 with d^i u left regular.

    Requires the element to act with some surviving rational content
    (i.e. to lie outside the finite-rank ideal); raises ElementInF
    otherwise, NoDegreeFound past the cap.
    """
    if all(gd.eigen.is_zero() for gd in left_eigen_data(u).values()):
        raise ElementInF("the regularity degree needs a nonzero image "
                         "modulo finite-rank operators")
    d = a1_d()
    current = u
    for i in range(cap + 1):
        if a1_regularity(current).verdict:
            return i
        current = a1_mul(d, current)
    raise NoDegreeFound(f"no regularity degree up to {cap}")


# -- skew Laurent image ------------------------------------------------

class SkewLaurentElement:
    """Element of the skew Laurent quotient: sum of c_t(H) z^t.

    z is the image of d, z^{-1} the image of H^{-1} x down a twist, and the
    commutation law is z^t f(H) = f(H+t) z^t.  Coefficients are rational
    functions of H with integer poles of either sign.
    """

    __slots__ = ("slots",)

    def __init__(self, slots=None):
        self.slots = {int(t): c for t, c in (slots or {}).items()
                      if not c.is_zero()}

    def is_zero(self):
        return not self.slots

    def __eq__(self, other):
        if not isinstance(other, SkewLaurentElement):
            return NotImplemented
        return self.slots == other.slots

    def __add__(self, other):
        slots = dict(self.slots)
        for t, c in other.slots.items():
            slots[t] = slots[t] + c if t in slots else c
        return SkewLaurentElement(slots)

    def __sub__(self, other):
        return self + SkewLaurentElement({t: -c for t, c in other.slots.items()})

    def __mul__(self, other):
        slots = {}
        for s, c in self.slots.items():
            for t, c2 in other.slots.items():
                prod = c * c2.shift(s)
                key = s + t
                slots[key] = slots[key] + prod if key in slots else prod
        return SkewLaurentElement(slots)

    def render(self):
        if not self.slots:
            return "0"
        parts = []
        for t in sorted(self.slots):
            c = self.slots[t]
            if c.den == 1:
                cstr = c.num.render()
                if len([v for v in c.num.coeffs if v]) > 1:
                    cstr = f"({cstr})"
            else:
                cstr = f"(({c.num.render()})/({c.den.render()}))"
            if t == 0:
                parts.append(cstr)
            elif t == 1:
                parts.append(f"{cstr}*z" if cstr != "1" else "z")
            elif t == -1:
                parts.append(f"{cstr}*z^-1" if cstr != "1" else "z^-1")
            else:
                parts.append(f"{cstr}*z^{t}" if cstr != "1" else f"z^{t}")
        return " + ".join(parts)

    def to_json(self):
        return {"slots": {str(t): {"num": [str(c) for c in coeff.num.coeffs],
                                   "den": [str(c) for c in coeff.den.coeffs]}
                          for t, coeff in sorted(self.slots.items())}}

    def __repr__(self):
        return f"SkewLaurentElement({self.render()})"


def skew_laurent_image(u):
    """Ring homomorphism onto the skew Laurent quotient.

    x -> (H-1) z^{-1} and d -> z; the kernel is exactly the finite-rank
    ideal.  A term x^A g(H) d^B maps to
    (H-1)(H-2)...(H-A) * g(H-A) * z^{B-A}.
    """
    slots = {}
    for (a, b), g in u.terms.items():
        num = UniPoly(g.num.shift(-a).coeffs, "H")
        for s in range(1, a + 1):
            num = num * UniPoly((-Fraction(s), 1), "H")
        den = UniPoly.const(1, "H")
        for k, e in g.den.items():
            den = den * UniPoly((Fraction(k - a), 1), "H") ** e
        coeff = RatFunc(num, den)
        t = b - a
        slots[t] = slots[t] + coeff if t in slots else coeff
    return SkewLaurentElement(slots)
