"""Time-ordered exponentials, Magnus expansions and linear fixpoint equations
over Rota-Baxter operators, in exact rational or float64 arithmetic."""

from .algebra import LaurentSeries, Matrix, MatrixOver, PolyMatrix, SeqFn
from .config import ProblemConfig
from .errors import (
    CarrierError,
    ConvergenceError,
    DegreeOverflowError,
    DimensionError,
    ModeError,
    NotInvertibleError,
    PreconditionError,
    PrecisionError,
    TieError,
    TruncationError,
    UnsupportedModeError,
)
from .fixpoint import FixpointProblem, atkinson_ef, atkinson_factorize, picard_solve, spitzer_check
from .harness import run_single, run_verify_all
from .lie import ad_power, commutator, left_mul, mat_exp, right_mul
from .magnus import bernoulli, magnus_alpha, magnus_classical, rb_magnus, rb_magnus_alpha
from .rota_baxter import (
    FiniteSumRB,
    IntegralRB,
    MatrixLiftRB,
    MinSubRB,
    SummationRB,
    TildeRB,
    check_rb_axiom,
    r_center_test,
    tilde,
)
from .series import Series, series_exp, series_inverse, series_log, series_mul
from .time_ordering import TimedOperator, phi_map, t_ordered_exp_exact, t_ordered_exp_float, t_product, tstar_exp

__version__ = "0.1.0"

__all__ = [
    "ad_power",
    "atkinson_ef",
    "atkinson_factorize",
    "bernoulli",
    "CarrierError",
    "check_rb_axiom",
    "commutator",
    "ConvergenceError",
    "DegreeOverflowError",
    "DimensionError",
    "FiniteSumRB",
    "FixpointProblem",
    "IntegralRB",
    "LaurentSeries",
    "left_mul",
    "magnus_alpha",
    "magnus_classical",
    "mat_exp",
    "Matrix",
    "MatrixLiftRB",
    "MatrixOver",
    "MinSubRB",
    "ModeError",
    "NotInvertibleError",
    "phi_map",
    "picard_solve",
    "PolyMatrix",
    "PrecisionError",
    "PreconditionError",
    "ProblemConfig",
    "r_center_test",
    "rb_magnus",
    "rb_magnus_alpha",
    "right_mul",
    "run_single",
    "run_verify_all",
    "SeqFn",
    "Series",
    "series_exp",
    "series_inverse",
    "series_log",
    "series_mul",
    "spitzer_check",
    "SummationRB",
    "t_ordered_exp_exact",
    "t_ordered_exp_float",
    "t_product",
    "TieError",
    "tilde",
    "TildeRB",
    "TimedOperator",
    "TruncationError",
    "tstar_exp",
    "UnsupportedModeError",
]
