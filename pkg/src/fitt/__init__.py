"""Exact Fitting-ideal computations on Rees rings of monomial complete
intersections, with a machine-verification harness and CLI."""

from .polyring import (
    CoefficientField,
    MonomialOrder,
    PolyRing,
    Polynomial,
    field_inverse,
    parse_polynomial,
    print_polynomial,
)
from .groebner import (
    Ideal,
    eliminate,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    localized_equal,
    reduce,
    saturate,
)
from .fitmod import (
    PresentedAlgebra,
    PresentedModule,
    base_change,
    direct_sum_free,
    fitting_ideal,
    free_module,
    minors,
)
from .kaehler import kaehler_fitting, kaehler_presentation
from .rees import (
    ChartAlgebra,
    ReesParams,
    ReesParamsError,
    chart_presentation,
    exceptional_ideal,
    micali_kernel,
    rees_presentation,
    target_ideal,
)
from .verify import (
    VerificationReport,
    check_corollary42,
    check_image_equals_center,
    check_nonnormal,
    check_theorem41,
    default_grid,
    fitting_index,
    run_grid,
)
from .properties import run_properties

__version__ = "0.1.0"

__all__ = [
    "CoefficientField",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "field_inverse",
    "parse_polynomial",
    "print_polynomial",
    "Ideal",
    "eliminate",
    "ideal_equal",
    "ideal_intersect",
    "ideal_member",
    "localized_equal",
    "reduce",
    "saturate",
    "PresentedAlgebra",
    "PresentedModule",
    "base_change",
    "direct_sum_free",
    "fitting_ideal",
    "free_module",
    "minors",
    "kaehler_fitting",
    "kaehler_presentation",
    "ChartAlgebra",
    "ReesParams",
    "ReesParamsError",
    "chart_presentation",
    "exceptional_ideal",
    "micali_kernel",
    "rees_presentation",
    "target_ideal",
    "VerificationReport",
    "check_corollary42",
    "check_image_equals_center",
    "check_nonnormal",
    "check_theorem41",
    "default_grid",
    "fitting_index",
    "run_grid",
    "run_properties",
    "__version__",
]
