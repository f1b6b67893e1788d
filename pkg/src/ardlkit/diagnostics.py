"""Residual diagnostics and pairwise Granger causality tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distributions import chi2_pvalue
from .exceptions import DataError
from .regression import OlsFit, design_matrix, ols_fit, wald_f_test
from .timeseries import Dataset, jarque_bera_stat, moment_ratios

__all__ = [
    "TestResult",
    "GrangerResult",
    "jarque_bera",
    "breusch_godfrey",
    "breusch_pagan_godfrey",
    "granger_pairwise",
]


@dataclass(frozen=True)
class TestResult:
    """A scalar diagnostic statistic with its verdict at `decision_at`."""

    name: str
    statistic: float
    p_value: float
    df: float
    decision_at: float
    decision: str


@dataclass(frozen=True)
class GrangerResult:
    """One direction of a pairwise Granger causality F test."""

    cause: str
    effect: str
    lag: int
    obs: int
    f_statistic: float
    p_value: float


def jarque_bera(residuals: np.ndarray, decision_at: float = 0.05) -> TestResult:
    """Jarque-Bera normality test: (n/6)(S^2 + (K-3)^2/4) against chi2(2)."""
    x = np.asarray(residuals, dtype=float)
    n = x.size
    if n < 4:
        raise DataError(f"Jarque-Bera needs n >= 4, got {n}")
    skew, kurt = moment_ratios(x)
    stat = jarque_bera_stat(skew, kurt, n)
    p = chi2_pvalue(stat, 2)
    decision = (
        "Residuals are normally distributed"
        if p >= decision_at
        else "Residuals are not normally distributed"
    )
    return TestResult("Jarque-Bera test", float(stat), float(p), 2.0, decision_at, decision)


def breusch_godfrey(fit: OlsFit, order: int, decision_at: float = 0.05) -> TestResult:
    """Breusch-Godfrey LM test for residual serial correlation.

    Auxiliary regression of the residuals on the original regressors plus
    `order` lagged residuals (pre-sample lags zero); statistic n * R^2
    against chi2(order).
    """
    if order < 1:
        raise DataError(f"lag order must be >= 1, got {order}")
    if order >= fit.df_resid:
        raise DataError(f"lag order {order} too large for {fit.df_resid} residual df")
    e = fit.residuals
    n = e.shape[0]
    cols = [(name, fit.design.column(name)) for name in fit.names if name != "C"]
    for j in range(1, order + 1):
        lagged = np.concatenate([np.zeros(j), e[:-j]])
        cols.append((f"resid(-{j})", lagged))
    X = design_matrix(cols, intercept=fit.design.has_intercept)
    aux = ols_fit(e, X)
    stat = n * aux.r_squared
    p = chi2_pvalue(stat, order)
    decision = (
        "No serial correlation exists" if p >= decision_at else "Serial correlation exists"
    )
    return TestResult(
        "Breusch-Godfrey LM test", float(stat), float(p), float(order), decision_at, decision
    )


def breusch_pagan_godfrey(fit: OlsFit, decision_at: float = 0.05) -> TestResult:
    """Breusch-Pagan-Godfrey heteroscedasticity test.

    Auxiliary regression of the squared residuals on the original
    regressors (not their squares or cross products); statistic n * R^2
    against chi2(k - 1).
    """
    if not fit.design.has_intercept:
        raise DataError("Breusch-Pagan-Godfrey requires a design with an intercept")
    k = fit.design.k
    if k < 2:
        raise DataError("degenerate design: need at least one non-intercept regressor")
    e2 = fit.residuals**2
    cols = [(name, fit.design.column(name)) for name in fit.names if name != "C"]
    aux = ols_fit(e2, design_matrix(cols, intercept=True))
    stat = fit.nobs * aux.r_squared
    p = chi2_pvalue(stat, k - 1)
    decision = (
        "No heteroscedasticity exists" if p >= decision_at else "Heteroscedasticity exists"
    )
    return TestResult(
        "Breusch-Pagan-Godfrey test", float(stat), float(p), float(k - 1), decision_at, decision
    )


def _granger_direction(yv: np.ndarray, xv: np.ndarray, lag: int, cause: str, effect: str) -> GrangerResult:
    n = yv.shape[0]
    t = np.arange(lag, n)
    resp = yv[t]
    own = [(f"{effect}(-{j})", yv[t - j]) for j in range(1, lag + 1)]
    cross = [(f"{cause}(-{j})", xv[t - j]) for j in range(1, lag + 1)]
    unrestricted = ols_fit(resp, design_matrix(own + cross, intercept=True))
    restricted = ols_fit(resp, design_matrix(own, intercept=True))
    f_stat, p = wald_f_test(unrestricted, restricted, q=lag)
    return GrangerResult(
        cause=cause,
        effect=effect,
        lag=lag,
        obs=n - lag,
        f_statistic=float(f_stat),
        p_value=float(p),
    )


def granger_pairwise(data: Dataset, variables: Sequence[str], lag: int) -> list[GrangerResult]:
    """Pairwise Granger causality between the first (focal) variable and
    every other listed variable, both directions.

    For each pair the unrestricted regression is y_t on its own `lag` lags
    plus the candidate cause's `lag` lags; the restriction drops the cause
    lags and the F statistic has (lag, obs - 2*lag - 1) degrees of freedom.
    Results come in table order: other -> focal, then focal -> other.
    """
    if lag < 1:
        raise DataError(f"lag must be >= 1, got {lag}")
    if len(variables) < 2:
        raise DataError("need the focal variable plus at least one other")
    n = data.n_obs
    if n - lag <= 2 * lag + 1 + 3:
        raise DataError(f"insufficient observations: n={n} for lag={lag}")
    focal = variables[0]
    results = []
    for other in variables[1:]:
        yv = data[focal].values
        xv = data[other].values
        results.append(_granger_direction(yv, xv, lag, cause=other, effect=focal))
        results.append(_granger_direction(xv, yv, lag, cause=focal, effect=other))
    return results
