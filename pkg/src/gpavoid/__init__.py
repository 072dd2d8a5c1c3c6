"""Enumeration, generating functions and growth rates for permutations
avoiding dash patterns (adjacency-constrained patterns)."""

__version__ = "0.1.0"

from .patterns import (  # noqa: F401
    GeneralizedPattern,
    Occurrence,
    PatternSyntaxError,
    Permutation,
    avoids,
    contains,
    find_occurrences,
    parse_pattern,
    reduce,
)
from .counting import (  # noqa: F401
    CapExceededError,
    CountSequence,
    KERNEL_BACKEND,
    check_submultiplicative,
    count_avoiders,
    count_consecutive_dp,
    count_sequence,
    ltr_minima,
    rtl_maxima,
)
from .series import (  # noqa: F401
    EgfSeries,
    FloatSeries,
    boxed,
    compose,
    differentiate,
    double_boxed,
    exp_series,
    integrate,
    nth_root_ratios,
    reciprocal,
)
from .exppoly import (  # noqa: F401
    ExpPoly,
    b_closed,
    b_recurrence,
    c_closed,
    c_recurrence,
    harmonic,
    s_series,
)
from .formulas import (  # noqa: F401
    BoundsReport,
    a123_egf,
    a132_egf,
    a_consecutive_egf,
    a_one_dash_sigma,
    bell_egf,
    bounds_12_34,
    bounds_1_23_4,
    bounds_1_sigma_k,
    catalan_egf,
)
from .asympt import (  # noqa: F401
    AsymptoticsReport,
    bell_asymptotic,
    bell_lambda,
    estimate_growth,
    fekete_check,
    gamma1_reference,
    gamma2,
    rho1,
    rho2,
)
