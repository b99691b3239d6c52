"""Command line interface.

Usage pattern::

    opalg ALGEBRA VERB [--flags] [--] EXPR [EXPR ...]

Algebras: ``s1`` (one-sided inverses, one variable pair), ``sn:K`` (the
K-fold tensor power, generators x1..xK, y1..yK), ``i1``
(integro-differential operators, generators d, i, H, e[k,l]), ``a1``
(the Jacobian algebra, generators x, d, H, Hinv, int, E[i,j], rho[j,i])
and ``num`` (scalar polynomial utilities).

Expressions use ``+ - * ^`` with juxtaposition as multiplication and
rational literals like ``3`` or ``5/2``; products are read left to right
and never reordered.  Use ``--`` before expressions that start with a
minus sign.

Exit codes: 0 success, 2 syntax error, 3 domain error, 4 bounded search
returned no answer.
"""

import argparse
import json
import sys
from fractions import Fraction
from functools import reduce

from . import intdiff, jacobian, onesided, orekit, s1reg
from .errors import NoDegreeFound, OpalgError, ParseError, UnknownGenerator
from .multipoly import MultiPoly, ShiftSpec, finite_difference
from .unipoly import UniPoly, mu_of_poly, natplus_roots

__all__ = ["main", "run", "tokenize", "ExprParser"]

_SYMBOLS = set("+-*^()[],")


def tokenize(text):
    """Split an expression into (kind, text, offset) tokens.

    Kinds are NUM, IDENT, one-character symbols, and a final END marker;
    offsets are byte positions into the input.
    """
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j + 1 < n and text[j] == "/" and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(("NUM", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("IDENT", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("END", "", n))
    return tokens


class ExprParser:
    """Recursive-descent parser over a fixed generator table.

    Grammar::

        expr   := signed (('+' | '-') signed)*
        signed := ('+' | '-')* term
        term   := factor ('*'? factor)*
        factor := atom ('^' NUM)?
        atom   := NUM | IDENT | IDENT '[' NUM ',' NUM ']' | '(' expr ')'

    ``atoms`` maps generator names to nullary factories, ``indexed`` maps
    names like E/e/rho to binary factories, and ``scalar`` embeds a
    rational constant into the ring.
    """

    MAX_EXPONENT = 128
    MAX_INDEX = 512

    def __init__(self, text, atoms, indexed, scalar):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.atoms = atoms
        self.indexed = indexed
        self.scalar = scalar

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        token = self.tokens[self.pos]
        if token[0] != "END":
            self.pos += 1
        return token

    def parse(self):
        value = self._expr()
        kind, _, offset = self._peek()
        if kind != "END":
            raise ParseError("unexpected trailing input", offset)
        return value

    def _expr(self):
        value = self._signed()
        while True:
            kind = self._peek()[0]
            if kind == "+":
                self._next()
                value = value + self._signed()
            elif kind == "-":
                self._next()
                value = value - self._signed()
            else:
                return value

    def _signed(self):
        negate = False
        while self._peek()[0] in ("+", "-"):
            if self._next()[0] == "-":
                negate = not negate
        value = self._term()
        return -value if negate else value

    def _term(self):
        value = self._factor()
        while True:
            kind = self._peek()[0]
            if kind == "*":
                self._next()
                value = value * self._factor()
            elif kind in ("NUM", "IDENT", "("):
                value = value * self._factor()
            else:
                return value

    def _factor(self):
        base = self._atom()
        if self._peek()[0] == "^":
            self._next()
            kind, text, offset = self._next()
            if kind != "NUM" or "/" in text:
                raise ParseError("expected a nonnegative integer exponent",
                                 offset)
            exponent = int(text)
            if exponent > self.MAX_EXPONENT:
                raise ParseError(
                    f"exponent {exponent} exceeds limit {self.MAX_EXPONENT}",
                    offset)
            base = base ** exponent
        return base

    def _atom(self):
        kind, text, offset = self._next()
        if kind == "NUM":
            if "/" in text and text.split("/", 1)[1].strip("0") == "":
                raise ParseError("zero denominator in rational literal",
                                 offset)
            return self.scalar(Fraction(text))
        if kind == "(":
            value = self._expr()
            kind2, _, offset2 = self._next()
            if kind2 != ")":
                raise ParseError("expected ')'", offset2)
            return value
        if kind == "IDENT":
            if text in self.indexed:
                return self._indexed_atom(text)
            if text in self.atoms:
                return self.atoms[text]()
            raise UnknownGenerator(f"unknown generator {text!r}", offset)
        raise ParseError("expected an expression", offset)

    def _indexed_atom(self, name):
        kind, _, offset = self._next()
        if kind != "[":
            raise ParseError(f"{name} requires bracketed indices", offset)
        first = self._index()
        kind, _, offset = self._next()
        if kind != ",":
            raise ParseError("expected ','", offset)
        second = self._index()
        kind, _, offset = self._next()
        if kind != "]":
            raise ParseError("expected ']'", offset)
        return self.indexed[name](first, second)

    def _index(self):
        kind, text, offset = self._next()
        if kind != "NUM" or "/" in text:
            raise ParseError("expected a nonnegative integer index", offset)
        value = int(text)
        if value > self.MAX_INDEX:
            raise ParseError(f"index {value} exceeds limit {self.MAX_INDEX}",
                             offset)
        return value


def _s1_tables(n):
    atoms, indexed = {}, {}
    if n == 1:
        atoms["x"] = lambda: onesided.gen_x(1, 0)
        atoms["y"] = lambda: onesided.gen_y(1, 0)
        indexed["E"] = lambda i, j: onesided.matrix_unit(1, (i,), (j,))
    else:
        for i in range(n):
            atoms[f"x{i + 1}"] = lambda i=i: onesided.gen_x(n, i)
            atoms[f"y{i + 1}"] = lambda i=i: onesided.gen_y(n, i)
    return atoms, indexed, lambda c: c * onesided.sn_one(n)


def _i1_tables():
    atoms = {
        "d": intdiff.i1_d,
        "i": intdiff.i1_int,
        "H": intdiff.i1_h,
    }
    indexed = {"e": intdiff.i1_e}
    return atoms, indexed, lambda c: c * intdiff.i1_one()


def _a1_tables():
    atoms = {
        "x": jacobian.a1_x,
        "d": jacobian.a1_d,
        "H": jacobian.a1_h,
        "Hinv": jacobian.a1_hinv,
        "int": jacobian.a1_int,
    }
    indexed = {
        "E": jacobian.a1_E,
        "rho": jacobian.a1_rho,
    }
    return atoms, indexed, lambda c: c * jacobian.a1_one()


def _poly_tables(var):
    atoms = {var: lambda: UniPoly((0, 1), var)}
    return atoms, {}, lambda c: UniPoly((c,), var)


def _multi_tables(n):
    atoms = {}
    if n == 1:
        atoms["H"] = lambda: MultiPoly.gen(1, 0)
    for i in range(n):
        atoms[f"H{i + 1}"] = lambda i=i: MultiPoly.gen(n, i)
    return atoms, {}, lambda c: MultiPoly.const(n, c)


def _parse_with(text, tables):
    return ExprParser(text, *tables).parse()


def _bool_str(flag):
    return "true" if flag else "false"


class _Output:
    """Collects the result line plus its JSON form; printing happens once."""

    def __init__(self, use_json):
        self.use_json = use_json
        self.code = 0

    def emit(self, text, obj):
        if self.use_json:
            sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            sys.stdout.write(text + "\n")
        return self.code


def _need(args, low, high=None, what="expression"):
    high = low if high is None else high
    if not (low <= len(args) <= high):
        span = str(low) if low == high else f"{low}..{high}"
        raise OpalgError(f"expected {span} {what} argument(s), "
                         f"got {len(args)}")


def _fmt_opt(value):
    return "-" if value is None else str(value)


def _kernel_text(kernel, var):
    return UniPoly(kernel, var).render()


def _s1_report_parts(report):
    parts = [f"verdict={_bool_str(report.verdict)}",
             f"size={report.size}",
             f"degY={_fmt_opt(report.deg_y)}",
             f"excluded={_bool_str(report.excluded)}"]
    if report.kernel is not None:
        parts.append(f"kernel={_kernel_text(report.kernel, 'y')}")
    return " ".join(parts)


def _i1_report_parts(report):
    parts = [f"verdict={_bool_str(report.verdict)}",
             f"inPsi={_bool_str(report.in_psi)}",
             f"size={report.size}",
             f"mu={_fmt_opt(report.mu)}",
             f"nu={_fmt_opt(report.nu)}"]
    if report.deg_d is not None:
        parts.append(f"degD={report.deg_d}")
    if report.kernel is not None:
        parts.append(f"kernel={_kernel_text(report.kernel, 'd')}")
    return " ".join(parts)


def _a1_report_parts(report):
    parts = [f"verdict={_bool_str(report.verdict)}",
             f"inXi={_bool_str(report.excluded)}",
             f"size={report.size}",
             f"delta={_fmt_opt(report.delta)}",
             f"mu={_fmt_opt(report.mu)}",
             f"nu={_fmt_opt(report.nu)}"]
    if report.deg_d is not None:
        parts.append(f"degD={report.deg_d}")
    if report.lead is not None:
        parts.append(f"lead={report.lead.render()}")
    if report.kernel is not None:
        parts.append(f"kernel={_kernel_text(report.kernel, 'd')}")
    return " ".join(parts)


def _emit_element(out, element):
    return out.emit(element.render(), element.to_json())


def _emit_bool(out, flag):
    return out.emit(_bool_str(flag), {"result": bool(flag)})


def _emit_unknown(out):
    out.code = 4
    return out.emit("unknown", {"result": "unknown"})


def _product(values):
    return reduce(lambda a, b: a * b, values)


def _sum(values):
    return reduce(lambda a, b: a + b, values)


def _orekit_verbs(ns, out, verb, handle, tables):
    """Verbs shared by all three algebra backends."""
    if verb == "orewitness":
        _need(ns.args, 2)
        r = _parse_with(ns.args[0], tables)
        s = _parse_with(ns.args[1], tables)
        witness = orekit.ore_witness(handle, r, s, bound=ns.bound)
        if witness is orekit.UNKNOWN:
            return _emit_unknown(out)
        text = (f"k={witness.k} sprime={handle.render(witness.s_prime)} "
                f"rprime={handle.render(witness.r_prime)}")
        return out.emit(text, {"k": witness.k,
                               "sprime": handle.render(witness.s_prime),
                               "rprime": handle.render(witness.r_prime)})
    if verb == "assmember":
        _need(ns.args, 1)
        r = _parse_with(ns.args[0], tables)
        k = orekit.ass_member(handle, r, bound=ns.bound)
        if k is orekit.UNKNOWN:
            return _emit_unknown(out)
        return out.emit(f"k={k} s={handle.render(handle.denominator(k))}",
                        {"k": k, "s": handle.render(handle.denominator(k))})
    if verb == "dencheck":
        _need(ns.args, 0)
        report = orekit.denominator_check(handle, samples=ns.samples,
                                          bound=ns.bound, seed=ns.seed)
        text = (f"samples={report.samples} checks={report.checks} "
                f"violations={len(report.violations)}")
        return out.emit(text, {"samples": report.samples,
                               "checks": report.checks,
                               "violations": len(report.violations)})
    return None


def _s1_verbs(ns, out, n):
    tables = _s1_tables(n)
    verb = ns.verb
    handled = _orekit_verbs(ns, out, verb, orekit.ring_handle("s1", n),
                            tables)
    if handled is not None:
        return handled
    if verb in ("mul", "add"):
        _need(ns.args, 1, 64)
        values = [_parse_with(a, tables) for a in ns.args]
        return _emit_element(out,
                             _product(values) if verb == "mul"
                             else _sum(values))
    if verb == "eta":
        _need(ns.args, 1)
        return _emit_element(out, onesided.eta(_parse_with(ns.args[0],
                                                           tables)))
    if verb == "laurent":
        _need(ns.args, 1)
        image = onesided.laurent_image(_parse_with(ns.args[0], tables))
        return out.emit(image.render(), {"laurent": image.render()})
    if verb == "size":
        _need(ns.args, 1)
        value = s1reg.size_s1(_parse_with(ns.args[0], tables))
        return out.emit(str(value), {"size": value})
    if verb == "localize":
        _need(ns.args, 1)
        image = s1reg.localize(_parse_with(ns.args[0], tables))
        return out.emit(image.render(), {"fraction": image.render()})
    if verb == "frac":
        _need(ns.args, 2)
        s = _parse_with(ns.args[0], tables)
        r = _parse_with(ns.args[1], tables)
        image = s1reg.fraction_image(s, r)
        return out.emit(image.render(), {"fraction": image.render()})
    if verb == "inset":
        _need(ns.args, 2, what="tag/expression")
        tag = ns.args[0]
        if tag not in s1reg.SET_TAGS:
            raise OpalgError(f"unknown set tag {tag!r}; "
                             f"choose from {', '.join(s1reg.SET_TAGS)}")
        result = s1reg.in_set(_parse_with(ns.args[1], tables), tag,
                              bound=ns.bound)
        if result is None:
            return _emit_unknown(out)
        return _emit_bool(out, result)
    if n == 1:
        if verb == "decompose":
            _need(ns.args, 1)
            parts = onesided.decompose_s1(_parse_with(ns.args[0], tables))
            fline = parts.render_fpart()
            text = (f"constant={parts.constant} "
                    f"x={parts.xpart.render()} "
                    f"y={parts.ypart.render()} "
                    f"F={fline}")
            return out.emit(text, parts.to_json())
        if verb in ("isleftreg", "isrightreg"):
            _need(ns.args, 1)
            element = _parse_with(ns.args[0], tables)
            report = (s1reg.is_left_regular_s1(element)
                      if verb == "isleftreg"
                      else s1reg.is_right_regular_s1(element))
            return out.emit(_s1_report_parts(report), report.to_json())
        if verb == "regdeg":
            _need(ns.args, 1)
            value = s1reg.regularity_degree_s1(_parse_with(ns.args[0],
                                                           tables))
            return out.emit(str(value), {"degree": value})
        if verb == "xi":
            _need(ns.args, 1)
            return _emit_element(out,
                                 intdiff.xi_of(_parse_with(ns.args[0],
                                                           tables)))
        if verb == "paircheck":
            _need(ns.args, 0)
            report = orekit.localization_pair_check(samples=ns.samples,
                                                    bound=ns.bound,
                                                    seed=ns.seed)
            text = f"samples={report.samples} failures={report.failures}"
            return out.emit(text, {"samples": report.samples,
                                   "failures": report.failures})
    raise OpalgError(f"unknown verb {verb!r} for algebra s1/sn")


def _i1_verbs(ns, out):
    tables = _i1_tables()
    verb = ns.verb
    handled = _orekit_verbs(ns, out, verb, orekit.ring_handle("i1"), tables)
    if handled is not None:
        return handled
    if verb in ("mul", "add"):
        _need(ns.args, 1, 64)
        values = [_parse_with(a, tables) for a in ns.args]
        return _emit_element(out,
                             _product(values) if verb == "mul"
                             else _sum(values))
    if verb == "star":
        _need(ns.args, 1)
        return _emit_element(out, intdiff.star(_parse_with(ns.args[0],
                                                           tables)))
    if verb == "act":
        _need(ns.args, 2)
        element = _parse_with(ns.args[0], tables)
        poly = _parse_with(ns.args[1], _poly_tables("x"))
        result = intdiff.act_on_Kx(element, poly)
        return out.emit(result.render(),
                        {"coeffs": [str(c) for c in result.coeffs],
                         "var": "x"})
    if verb in ("reg", "rightreg"):
        _need(ns.args, 1)
        element = _parse_with(ns.args[0], tables)
        report = (intdiff.i1_regularity(element) if verb == "reg"
                  else intdiff.is_right_regular_i1(element))
        return out.emit(_i1_report_parts(report), report.to_json())
    if verb == "regdeg":
        _need(ns.args, 1)
        value = intdiff.regularity_degree_i1(_parse_with(ns.args[0],
                                                         tables))
        return out.emit(str(value), {"degree": value})
    if verb == "scalar":
        _need(ns.args, 1)
        flag = intdiff.is_in_scalar_subalgebra(_parse_with(ns.args[0],
                                                           tables))
        return _emit_bool(out, flag)
    if verb == "preimage":
        _need(ns.args, 1)
        element = intdiff.xi_preimage(_parse_with(ns.args[0], tables))
        return _emit_element(out, element)
    raise OpalgError(f"unknown verb {verb!r} for algebra i1")


def _a1_verbs(ns, out):
    tables = _a1_tables()
    verb = ns.verb
    handled = _orekit_verbs(ns, out, verb, orekit.ring_handle("a1"), tables)
    if handled is not None:
        return handled
    if verb in ("mul", "add"):
        _need(ns.args, 1, 64)
        values = [_parse_with(a, tables) for a in ns.args]
        return _emit_element(out,
                             _product(values) if verb == "mul"
                             else _sum(values))
    if verb == "theta":
        _need(ns.args, 1)
        return _emit_element(out, jacobian.theta(_parse_with(ns.args[0],
                                                             tables)))
    if verb == "zero":
        _need(ns.args, 1)
        return _emit_bool(out,
                          jacobian.a1_zero_test(_parse_with(ns.args[0],
                                                            tables)))
    if verb == "equal":
        _need(ns.args, 2)
        left = _parse_with(ns.args[0], tables)
        right = _parse_with(ns.args[1], tables)
        return _emit_bool(out, jacobian.a1_equal(left, right))
    if verb == "reg":
        _need(ns.args, 1)
        report = jacobian.a1_regularity(_parse_with(ns.args[0], tables))
        return out.emit(_a1_report_parts(report), report.to_json())
    if verb == "regdeg":
        _need(ns.args, 1)
        value = jacobian.regularity_degree_a1(_parse_with(ns.args[0],
                                                          tables))
        return out.emit(str(value), {"degree": value})
    if verb == "lreg":
        _need(ns.args, 1)
        element = _parse_with(ns.args[0], tables)
        if any(key != (0, 0) for key in element.terms):
            raise OpalgError("lreg expects an element of the weight "
                             "subring (no x or d factors)")
        g = element.terms.get((0, 0))
        if g is None:
            return _emit_bool(out, False)
        return _emit_bool(out, jacobian.l_is_regular(g))
    if verb == "skewimage":
        _need(ns.args, 1)
        image = jacobian.skew_laurent_image(_parse_with(ns.args[0], tables))
        return out.emit(image.render(), image.to_json())
    raise OpalgError(f"unknown verb {verb!r} for algebra a1")


def _parse_fraction_list(text, count, what):
    if not text:
        raise OpalgError(f"--{what} is required for this verb")
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise OpalgError(f"--{what} must list {count} value(s)")
    try:
        return [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise OpalgError(f"bad --{what} value: {exc}") from None


def _num_verbs(ns, out):
    verb = ns.verb
    if verb == "mu":
        _need(ns.args, 1)
        poly = _parse_with(ns.args[0], _poly_tables("H"))
        value = mu_of_poly(poly)
        return out.emit(str(value), {"mu": value})
    if verb == "roots":
        _need(ns.args, 1)
        poly = _parse_with(ns.args[0], _poly_tables("H"))
        roots = sorted(natplus_roots(poly))
        text = ",".join(str(r) for r in roots) if roots else "none"
        return out.emit(text, {"roots": roots})
    if verb == "fdiff":
        _need(ns.args, 1)
        n = ns.nvars
        if not 1 <= n <= 8:
            raise OpalgError("--nvars must be between 1 and 8")
        phi = _parse_with(ns.args[0], _multi_tables(n))
        orders = _parse_fraction_list(ns.orders, n, "orders")
        if any(o.denominator != 1 or o < 0 for o in orders):
            raise OpalgError("--orders must be nonnegative integers")
        steps = _parse_fraction_list(ns.steps, n, "steps")
        spec = ShiftSpec(steps, direction=ns.direction)
        result = finite_difference(phi, tuple(int(o) for o in orders), spec)
        return out.emit(result.render(), {"poly": result.render()})
    raise OpalgError(f"unknown verb {verb!r} for num")


def run(ns):
    out = _Output(ns.json)
    algebra = ns.algebra
    if algebra == "num":
        return _num_verbs(ns, out)
    if algebra == "s1":
        return _s1_verbs(ns, out, 1)
    if algebra.startswith("sn:"):
        spec = algebra.split(":", 1)[1]
        if not spec.isdigit() or not 1 <= int(spec) <= 8:
            raise OpalgError("sn:K needs K between 1 and 8")
        return _s1_verbs(ns, out, int(spec))
    if algebra == "i1":
        return _i1_verbs(ns, out)
    if algebra == "a1":
        return _a1_verbs(ns, out)
    raise OpalgError(f"unknown algebra {algebra!r}; "
                     "choose s1, sn:K, i1, a1 or num")


def _build_argparser():
    parser = argparse.ArgumentParser(
        prog="opalg",
        description="Exact computations in algebras of one-sided inverses, "
                    "integro-differential operators and the Jacobian "
                    "algebra.")
    parser.add_argument("algebra",
                        help="s1, sn:K, i1, a1 or num")
    parser.add_argument("verb", help="operation to perform")
    parser.add_argument("args", nargs="*", help="expression arguments")
    parser.add_argument("--bound", type=int, default=12,
                        help="search bound for bounded verbs")
    parser.add_argument("--samples", type=int, default=25,
                        help="sample count for randomized checks")
    parser.add_argument("--seed", type=int, default=0,
                        help="random seed for randomized checks")
    parser.add_argument("--json", action="store_true",
                        help="emit one JSON object instead of text")
    parser.add_argument("--nvars", type=int, default=1,
                        help="number of variables for num fdiff")
    parser.add_argument("--orders", default="",
                        help="comma separated difference orders for fdiff")
    parser.add_argument("--steps", default="",
                        help="comma separated step sizes for fdiff")
    parser.add_argument("--direction", type=int, default=-1,
                        choices=(-1, 1),
                        help="shift direction for fdiff")
    return parser


def main(argv=None):
    # parse_intermixed_args lets flags follow the expression arguments.
    ns = _build_argparser().parse_intermixed_args(argv)
    try:
        return run(ns)
    except ParseError as exc:
        sys.stderr.write(f"syntax error: {exc}\n")
        return 2
    except NoDegreeFound as exc:
        sys.stderr.write(f"no answer within bound: {exc}\n")
        return 4
    except OpalgError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
