"""Numerical certification that the factorial interpolant is forced to 1 at 0.

Three elementary bound pairs trap the interpolant gamma(1+t) on (0, 1); this
package evaluates the interpolant by two independent methods, certifies each
sandwich on dense grids with quantified minimum slacks, estimates the shared
limit at the left endpoint, cross-checks the exponential-moment identities
behind the third bound pair, and audits the companion survey statistics.
"""

from .bounds import (
    BoundPair,
    ChainCheckResult,
    ChainLink,
    Justification,
    SlackCheck,
    bound_pair,
    doubling_dominates,
    gm_am_check,
    integer_chain_check,
    j1_lower,
    j1_upper,
    j2_lower,
    j2_upper,
    j3_lower,
    j3_upper,
)
from .figures import FigureSpec, PlotSeries, emit_figure, figure_csv, figure_svg
from .gamma import (
    GammaResult,
    factorial_int,
    gamma_cross_check,
    gamma_cross_check_grid,
    gamma_plus_one_quadrature,
    gamma_plus_one_quadrature_grid,
    gamma_plus_one_series,
    gamma_plus_one_series_values,
    log_factorial,
)
from .moments import (
    ExponentialModel,
    McSpec,
    MomentBoundsCheck,
    MomentResult,
    exp_pdf,
    jensen_check,
    linear_lower_check,
    moment_bounds_check,
    moment_monte_carlo,
    moment_quadrature,
    moment_survival_form,
)
from .quadrature import QuadratureConvergenceError, QuadratureSpec, adaptive_simpson
from .squeeze import (
    CertificationReport,
    GridSpec,
    LimitEstimate,
    SqueezeInconsistencyError,
    certify,
    gap_profile,
    limit_at_zero,
    squeeze_conclusion,
)
from .survey import (
    ComparisonEntry,
    ComparisonReport,
    CsvFormatError,
    DegenerateVarianceError,
    InsufficientDataError,
    LikertCategory,
    PairedResponses,
    StatementTable,
    TTestResult,
    aggregate_agree,
    compare_to_reported,
    embedded_tables,
    marginal_consistency,
    paired_t_test,
    percentages,
    response_rate,
    synthetic_pairs,
)

__version__ = "0.1.0"
