"""Multi-graded Groebner bases and dimension polynomials over Weyl algebras."""

from .errors import (
    ConvergenceError,
    InputError,
    VerificationError,
    WeylDimError,
    ZeroElementError,
)
from .weyl import (
    ExponentPair,
    Partition,
    WeylElement,
    element_orders,
    monomial_orders,
    weyl_dimension,
    weyl_mul,
)
from .terms import (
    GammaTerm,
    ModuleElement,
    Term,
    act,
    gamma_divides,
    leader,
    rho,
    term_compare,
    term_divides,
    term_lcm,
)
from .groebner import (
    GroebnerBasis,
    OrderSequence,
    complete_basis,
    full_sequence,
    is_groebner,
    is_reduced,
    membership,
    multi_reduce,
    provenance_orders,
    s_element,
    suffix_sequence,
)
from .numpoly import (
    IndexSet,
    InvariantReport,
    NumericalPolynomial,
    canonicalize,
    interpolate,
    invariant_set,
    minimize,
    omega,
)
from .engine import (
    BernsteinReport,
    DimensionReport,
    Presentation,
    bernstein_inequality_check,
    bernstein_polynomial,
    count_UVW,
    dimension_polynomial,
    is_holonomic,
)
from .oracle import (
    RankOracle,
    RankQuery,
    enum_V_A,
    naive_weyl_mul,
    rank_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "BernsteinReport",
    "ConvergenceError",
    "DimensionReport",
    "ExponentPair",
    "GammaTerm",
    "GroebnerBasis",
    "IndexSet",
    "InputError",
    "InvariantReport",
    "ModuleElement",
    "NumericalPolynomial",
    "OrderSequence",
    "Partition",
    "Presentation",
    "RankOracle",
    "RankQuery",
    "Term",
    "VerificationError",
    "WeylDimError",
    "WeylElement",
    "ZeroElementError",
    "act",
    "bernstein_inequality_check",
    "bernstein_polynomial",
    "canonicalize",
    "complete_basis",
    "count_UVW",
    "dimension_polynomial",
    "element_orders",
    "enum_V_A",
    "full_sequence",
    "gamma_divides",
    "interpolate",
    "invariant_set",
    "is_groebner",
    "is_holonomic",
    "is_reduced",
    "leader",
    "membership",
    "minimize",
    "monomial_orders",
    "multi_reduce",
    "naive_weyl_mul",
    "omega",
    "provenance_orders",
    "rank_dimension",
    "rho",
    "s_element",
    "suffix_sequence",
    "term_compare",
    "term_divides",
    "term_lcm",
    "weyl_dimension",
    "weyl_mul",
]
