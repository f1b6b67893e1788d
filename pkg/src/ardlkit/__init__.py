"""ardlkit: time-series econometrics toolkit for ARDL bounds analysis.

Library surface: aligned annual datasets and transforms, OLS with full
inference, Bartlett long-run covariance, ADF/PP/DF-GLS unit-root tests,
ARDL bounds cointegration with error-correction estimation, FMOLS/DOLS/CCR
robustness estimators, residual diagnostics, pairwise Granger causality,
and a config-driven reporting pipeline (also exposed as the `ardlkit` CLI).
"""

__version__ = "0.1.0"

from .exceptions import ArdlkitError, ConfigError, DataError, NumericalError
from .timeseries import (
    Dataset,
    SummaryStats,
    TimeSeries,
    difference,
    lag,
    load_csv,
    log_transform,
    summary_stats,
)
from .distributions import Distribution, chi_square, f_dist, normal, student_t
from .regression import (
    DesignMatrix,
    LongRunCovariance,
    OlsFit,
    design_matrix,
    long_run_variance,
    newey_west_bandwidth,
    ols_fit,
    wald_f_test,
)
from .unitroot import (
    IntegrationDecision,
    UnitRootResult,
    UnitRootSpec,
    adf_test,
    classify_integration,
    dfgls_test,
    pp_test,
)
from .ardl import (
    ArdlFit,
    ArdlSpec,
    BoundsTestResult,
    EcmFit,
    ParameterEstimate,
    bounds_decision,
    bounds_test,
    ecm_fit,
    fit_ardl,
    long_run_se,
    pesaran_bounds,
    select_lags,
)
from .cointegration import CointegrationFit, ccr_fit, dols_fit, fmols_fit
from .diagnostics import (
    GrangerResult,
    TestResult,
    breusch_godfrey,
    breusch_pagan_godfrey,
    granger_pairwise,
    jarque_bera,
)
from .synthetic import SyntheticSpec, generate_synthetic
from .pipeline import (
    PipelineConfig,
    Report,
    default_config,
    load_config,
    render_report,
    report_from_json,
    run_pipeline,
)

__all__ = [
    "__version__",
    "ArdlkitError", "ConfigError", "DataError", "NumericalError",
    "TimeSeries", "Dataset", "SummaryStats",
    "load_csv", "log_transform", "difference", "lag", "summary_stats",
    "Distribution", "normal", "student_t", "f_dist", "chi_square",
    "DesignMatrix", "OlsFit", "LongRunCovariance",
    "design_matrix", "ols_fit", "long_run_variance", "newey_west_bandwidth", "wald_f_test",
    "UnitRootSpec", "UnitRootResult", "IntegrationDecision",
    "adf_test", "pp_test", "dfgls_test", "classify_integration",
    "ArdlSpec", "ArdlFit", "BoundsTestResult", "EcmFit", "ParameterEstimate",
    "select_lags", "fit_ardl", "bounds_test", "bounds_decision", "ecm_fit",
    "long_run_se", "pesaran_bounds",
    "CointegrationFit", "fmols_fit", "dols_fit", "ccr_fit",
    "TestResult", "GrangerResult",
    "jarque_bera", "breusch_godfrey", "breusch_pagan_godfrey", "granger_pairwise",
    "SyntheticSpec", "generate_synthetic",
    "PipelineConfig", "Report", "default_config", "load_config",
    "run_pipeline", "render_report", "report_from_json",
]
