"""opalg: exact symbolic computation in three operator algebras.

The package implements, over the rational numbers:

* ``onesided`` / ``s1reg`` -- the algebra of one-sided inverses generated
  by pairs x_i, y_i with y_i x_i = 1, its tensor powers, matrix units,
  the Laurent polynomial image, regularity criteria and localization at
  powers of y.
* ``intdiff`` -- integro-differential operators with polynomial
  coefficients in the weight H, the adjoint involution, the module action
  on polynomials and the regularity criterion.
* ``jacobian`` -- the Jacobian algebra spanned by x^a g(H) d^b with g in
  the shift-localized weight subring, with exact zero and equality tests
  through eigenvalue functions, grade decompositions, the skew Laurent
  image and the regularity criterion.
* ``orekit`` -- Ore condition witnesses and denominator checks shared by
  the three backends.
* ``cli`` -- a command line front end (entry point ``opalg``).

All arithmetic is exact; no floating point is used anywhere.
"""

from .errors import (
    BackwardShiftOutOfL,
    DimensionMismatch,
    DivisionByZeroImage,
    ElementInF,
    NoDegreeFound,
    NotADenominator,
    NotInScalarSubalgebra,
    NotInvertibleInL,
    OpalgError,
    ParseError,
    UnknownGenerator,
    UnsplittableComponent,
    ZeroPolynomial,
)
from .scalars import Fraction, scalar_from_str, scalar_to_str
from .unipoly import (
    RatFunc,
    UniPoly,
    falling_factorial_poly,
    mu_of_poly,
    natplus_roots,
    poly_shift,
    rising_product,
)
from .lfrac import LFraction, inverse_rising
from .multipoly import (
    MultiPoly,
    MultiRationalFunction,
    ShiftSpec,
    finite_difference,
    lex_leading,
)
from .onesided import (
    S1Decomposition,
    SnElement,
    decompose_s1,
    eta,
    gen_x,
    gen_y,
    is_in_fn,
    laurent_image,
    matrix_unit,
    sn_monomial,
    sn_one,
    sn_zero,
)
from .s1reg import (
    RegularityReport,
    SET_TAGS,
    fraction_image,
    in_set,
    is_left_regular_s1,
    is_right_regular_s1,
    localize,
    regularity_degree_s1,
    size_s1,
)
from .intdiff import (
    I1Element,
    I1RegularityReport,
    act_on_Kx,
    i1_d,
    i1_e,
    i1_from_hpoly,
    i1_h,
    i1_int,
    i1_mul,
    i1_one,
    i1_regularity,
    i1_scalar,
    i1_zero,
    is_in_scalar_subalgebra,
    is_right_regular_i1,
    regularity_degree_i1,
    star,
    xi_of,
    xi_preimage,
)
from .jacobian import (
    A1Element,
    A1RegularityReport,
    SkewLaurentElement,
    a1_E,
    a1_d,
    a1_equal,
    a1_h,
    a1_hinv,
    a1_int,
    a1_mul,
    a1_one,
    a1_regularity,
    a1_rho,
    a1_scalar,
    a1_term,
    a1_x,
    a1_zero,
    a1_zero_test,
    grade_decompose,
    l_is_regular,
    reassemble_grades,
    regularity_degree_a1,
    skew_laurent_image,
    theta,
)
from .orekit import (
    UNKNOWN,
    OreWitness,
    ass_member,
    denominator_check,
    localization_pair_check,
    ore_witness,
    ring_handle,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
