"""Minimum-score estimation for stationary AR(1)/MA(1) Gaussian series.

Four estimators of the scalar dependence parameter share one interface: full
maximum likelihood, consecutive-pairwise likelihood, univariate Hyvarinen
score matching, and Hyvarinen score matching on the Wishart law of the pooled
sum-of-squares matrix.  Standard errors come from Godambe (sandwich)
information, and a replicated simulation harness compares the estimators'
asymptotic relative efficiency across the parameter range.
"""

from .models import (
    Ar1Params,
    Ma1Params,
    ar1_covariance,
    ar1_precision,
    ma1_covariance,
    ma1_precision,
    params_for,
    sample_ar1,
    sample_ma1,
    sample_series,
    sum_of_squares,
)
from .optimize import MinimizationError, minimize_scalar, num_grad, num_hess
from .scores import (
    DegenerateDataError,
    EstimatorKind,
    ar1_full_loglik,
    ar1_hyvarinen,
    ar1_pairwise_closed_form,
    ar1_pairwise_loglik,
    gaussian_hyvarinen,
    ma1_full_loglik,
    ma1_hyvarinen,
    ma1_pairwise_loglik,
    score_per_series,
    total_score,
)
from .wishart import (
    WishartContext,
    hw_estimate,
    hw_grad,
    hw_grad_samples,
    hw_score,
    k_analytic_ar1,
    precision_derivative,
    wishart_context,
    wishart_sensitivity,
)
from .inference import (
    EstimateRecord,
    GodambeComponents,
    InfoMethod,
    are,
    fisher_information,
    fit,
    godambe_empirical,
    godambe_montecarlo,
)
from .simulate import ConfigError, ExperimentConfig, ReportRow, run_experiment
from .report import CSV_HEADER, emit_are_svg, emit_csv

__version__ = "0.1.0"

__all__ = [
    "Ar1Params",
    "Ma1Params",
    "ar1_covariance",
    "ar1_precision",
    "ma1_covariance",
    "ma1_precision",
    "params_for",
    "sample_ar1",
    "sample_ma1",
    "sample_series",
    "sum_of_squares",
    "MinimizationError",
    "minimize_scalar",
    "num_grad",
    "num_hess",
    "DegenerateDataError",
    "EstimatorKind",
    "ar1_full_loglik",
    "ar1_hyvarinen",
    "ar1_pairwise_closed_form",
    "ar1_pairwise_loglik",
    "gaussian_hyvarinen",
    "ma1_full_loglik",
    "ma1_hyvarinen",
    "ma1_pairwise_loglik",
    "score_per_series",
    "total_score",
    "WishartContext",
    "hw_estimate",
    "hw_grad",
    "hw_grad_samples",
    "hw_score",
    "k_analytic_ar1",
    "precision_derivative",
    "wishart_context",
    "wishart_sensitivity",
    "EstimateRecord",
    "GodambeComponents",
    "InfoMethod",
    "are",
    "fisher_information",
    "fit",
    "godambe_empirical",
    "godambe_montecarlo",
    "ConfigError",
    "ExperimentConfig",
    "ReportRow",
    "run_experiment",
    "CSV_HEADER",
    "emit_are_svg",
    "emit_csv",
]
