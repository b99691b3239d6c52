"""Exception hierarchy shared by all opalg modules.

Every error raised intentionally by the library derives from OpalgError, so
callers (notably the command line driver) can distinguish domain errors from
genuine bugs.
"""


class OpalgError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(OpalgError):
    """An operation that needs a nonzero polynomial received the zero one."""


class NotInvertibleInL(OpalgError):
    """The element has no inverse inside the shifted-inverse coefficient ring L."""


class BackwardShiftOutOfL(OpalgError):
    """A backward shift would move a denominator pole to a positive position."""


class DimensionMismatch(OpalgError):
    """Operands live over different numbers of tensor factors or variables."""


class ElementInF(OpalgError):
    """The element lies in the two-sided ideal of finite-rank operators."""


class NoDegreeFound(OpalgError):
    """The regularity-degree iteration exceeded its cap without success."""


class NotADenominator(OpalgError):
    """The proposed denominator is not in the admissible denominator set."""


class DivisionByZeroImage(OpalgError):
    """A localization denominator has zero image in the commutative quotient."""


class NotInScalarSubalgebra(OpalgError):
    """Preimage requested for an element outside the embedded copy of S_1."""


class UnsplittableComponent(OpalgError):
    """A rational component does not factor over the required integer shifts."""


class ParseError(OpalgError):
    """Syntax error in a command line expression.

    Carries the byte offset of the offending position in ``offset``.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnknownGenerator(ParseError):
    """An identifier that is not a generator of the selected algebra."""
