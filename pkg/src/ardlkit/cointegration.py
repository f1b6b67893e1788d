"""FMOLS, DOLS, and CCR long-run cointegrating-vector estimators.

All three share the toolkit's Bartlett long-run covariance engine so their
serial-correlation and endogeneity corrections are mutually consistent.
Inference uses the standard-normal reference distribution of the
asymptotically mixed-normal t-ratios.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ardl import ParameterEstimate
from .distributions import normal
from .exceptions import DataError, NumericalError
from .regression import design_matrix, long_run_variance, newey_west_bandwidth, ols_fit
from .timeseries import Dataset, TimeSeries

__all__ = ["CointegrationFit", "fmols_fit", "dols_fit", "ccr_fit", "dols_default_order"]


@dataclass(frozen=True)
class CointegrationFit:
    """A fitted cointegrating regression (FMOLS, DOLS, or CCR)."""

    method: str
    estimates: tuple[ParameterEstimate, ...]  # slope block, regressor order
    intercept: ParameterEstimate
    n_effective: int
    bandwidth: float | None = None
    leads: int | None = None
    lags: int | None = None
    long_run_variance: float | None = None
    residuals: np.ndarray | None = None

    @property
    def coefficients(self) -> dict[str, float]:
        return {e.name: e.coefficient for e in self.estimates}

    def estimate(self, name: str) -> ParameterEstimate:
        for e in self.estimates:
            if e.name == name:
                return e
        raise KeyError(name)


def _normal_estimate(name: str, coef: float, se: float) -> ParameterEstimate:
    if se > 0:
        t = coef / se
        p = 2.0 * normal().survival(abs(t))
    else:
        t, p = math.inf if coef >= 0 else -math.inf, 0.0
    return ParameterEstimate(name, float(coef), float(se), float(t), float(p))


def _align(y: TimeSeries, x: Sequence[TimeSeries]):
    names = [s.name for s in x]
    if y.name in names:
        raise DataError(f"dependent series {y.name!r} also appears among regressors")
    ds = Dataset.from_series([y, *x])
    yv = ds[y.name].values
    xv = np.column_stack([ds[n].values for n in names])
    return yv, xv, tuple(names)


def _first_stage(yv: np.ndarray, xv: np.ndarray, names: tuple[str, ...]):
    X = design_matrix(list(zip(names, xv.T)), intercept=True)
    return ols_fit(yv, X)


def _eta_and_covariances(yv, xv, names, bandwidth):
    """Stacked innovations (first-stage residual, regressor differences)
    and their long-run covariance estimate."""
    first = _first_stage(yv, xv, names)
    eta1 = first.residuals
    eta2 = np.diff(xv, axis=0)
    eta = np.column_stack([eta1[1:], eta2])
    if bandwidth is None:
        bandwidth = float(newey_west_bandwidth(eta.shape[0]))
    lrcov = long_run_variance(eta, "bartlett", bandwidth)
    return first, eta, lrcov


def fmols_fit(
    y: TimeSeries,
    x: Sequence[TimeSeries],
    kernel: str = "bartlett",
    bandwidth: float | None = None,
) -> CointegrationFit:
    """Fully modified OLS.

    The dependent variable is corrected for long-run endogeneity with the
    cross long-run covariance, and the serial-correlation bias term is
    subtracted from the normal equations. When both corrections are zero
    the estimates collapse to OLS on the differenced-trimmed sample.
    """
    if kernel != "bartlett":
        raise DataError(f"unsupported kernel {kernel!r}")
    yv, xv, names = _align(y, x)
    n = yv.shape[0]
    if n < 20:
        warnings.warn(f"FMOLS on only {n} observations; results are fragile", stacklevel=2)
    _, eta, lrcov = _eta_and_covariances(yv, xv, names, bandwidth)
    omega = np.atleast_2d(lrcov.omega)
    lam = np.atleast_2d(lrcov.one_sided)

    omega_12 = omega[0, 1:]
    omega_22 = omega[1:, 1:]
    try:
        omega_22_inv = np.linalg.inv(omega_22)
    except np.linalg.LinAlgError:
        raise NumericalError("singular regressor long-run covariance in FMOLS") from None
    eta2 = eta[:, 1:]
    y_plus = yv[1:] - eta2 @ (omega_22_inv @ omega_12)

    lam_12 = lam[0, 1:]
    lam_22 = lam[1:, 1:]
    lam_12_plus = lam_12 - omega_12 @ omega_22_inv @ lam_22

    n_eff = n - 1
    z = np.column_stack([np.ones(n_eff), xv[1:]])
    zpz = z.T @ z
    bias = np.zeros(z.shape[1])
    bias[1:] = lam_12_plus
    zpy = z.T @ y_plus - n_eff * bias
    params = np.linalg.solve(zpz, zpy)

    omega_112 = float(omega[0, 0] - omega_12 @ omega_22_inv @ omega_12)
    param_cov = omega_112 * np.linalg.inv(zpz)
    ses = np.sqrt(np.maximum(np.diag(param_cov), 0.0))

    resid = yv[1:] - z @ params
    estimates = tuple(
        _normal_estimate(name, params[i + 1], ses[i + 1]) for i, name in enumerate(names)
    )
    return CointegrationFit(
        method="fmols",
        estimates=estimates,
        intercept=_normal_estimate("C", params[0], ses[0]),
        n_effective=n_eff,
        bandwidth=lrcov.bandwidth,
        long_run_variance=omega_112,
        residuals=resid,
    )


def dols_default_order(n: int) -> int:
    """Default lead/lag window floor((n/100)^(1/4)), never below 1."""
    return max(1, int(math.floor((n / 100.0) ** 0.25)))


def dols_fit(
    y: TimeSeries,
    x: Sequence[TimeSeries],
    leads: int | None = None,
    lags: int | None = None,
) -> CointegrationFit:
    """Dynamic OLS: levels regression augmented with regressor differences
    at offsets -lags .. +leads (the contemporaneous difference always
    enters). Coefficient covariance rescales (Z'Z)^-1 by the Bartlett
    long-run variance of the residual.
    """
    yv, xv, names = _align(y, x)
    n, k = xv.shape
    if leads is None:
        leads = dols_default_order(n)
    if lags is None:
        lags = dols_default_order(n)
    if leads < 0 or lags < 0:
        raise DataError(f"leads/lags must be non-negative, got ({leads}, {lags})")
    n_eff = n - 1 - leads - lags
    if n_eff <= k * (leads + lags + 1) + k + 5:
        raise DataError(
            f"infeasible lead/lag window ({leads}, {lags}) for {n} observations"
        )

    dx = np.diff(xv, axis=0)  # row t-1 holds x_t - x_{t-1}
    t = np.arange(1 + lags, n - leads)
    cols: list[tuple[str, np.ndarray]] = [(name, xv[t, j]) for j, name in enumerate(names)]
    for offset in range(-lags, leads + 1):
        for j, name in enumerate(names):
            if offset == 0:
                label = f"D({name})"
            elif offset < 0:
                label = f"D({name}(-{-offset}))"
            else:
                label = f"D({name}(+{offset}))"
            cols.append((label, dx[t - 1 + offset, j]))
    X = design_matrix(cols, intercept=True)
    fit = ols_fit(yv[t], X)

    lr = long_run_variance(fit.residuals, "bartlett", None)
    zpz_inv = fit.coef_covariance / fit.sigma2
    cov = float(lr.omega) * zpz_inv
    ses = np.sqrt(np.maximum(np.diag(cov), 0.0))

    idx = {name: X.names.index(name) for name in names}
    estimates = tuple(
        _normal_estimate(name, fit.params[idx[name]], ses[idx[name]]) for name in names
    )
    c_idx = X.names.index("C")
    return CointegrationFit(
        method="dols",
        estimates=estimates,
        intercept=_normal_estimate("C", fit.params[c_idx], ses[c_idx]),
        n_effective=n_eff,
        bandwidth=lr.bandwidth,
        leads=leads,
        lags=lags,
        long_run_variance=float(lr.omega),
        residuals=fit.residuals,
    )


def ccr_fit(
    y: TimeSeries,
    x: Sequence[TimeSeries],
    kernel: str = "bartlett",
    bandwidth: float | None = None,
) -> CointegrationFit:
    """Canonical cointegrating regression.

    Transforms both sides with the strictly one-sided long-run covariance
    of the stacked innovations (so a zero-autocorrelation, zero-endogeneity
    configuration leaves the data untouched), then runs OLS on the
    transformed data.
    """
    if kernel != "bartlett":
        raise DataError(f"unsupported kernel {kernel!r}")
    yv, xv, names = _align(y, x)
    n = yv.shape[0]
    first, eta, lrcov = _eta_and_covariances(yv, xv, names, bandwidth)
    omega = np.atleast_2d(lrcov.omega)
    lam_strict = np.atleast_2d(lrcov.one_sided) - np.atleast_2d(lrcov.short_run)
    sigma = np.atleast_2d(lrcov.short_run)

    omega_12 = omega[0, 1:]
    omega_22 = omega[1:, 1:]
    try:
        omega_22_inv = np.linalg.inv(omega_22)
        sigma_inv = np.linalg.inv(sigma)
    except np.linalg.LinAlgError:
        raise NumericalError("singular covariance matrix in CCR") from None

    beta = np.array([first.coef(name) for name in names])
    lam2 = lam_strict[:, 1:]
    x_star = xv[1:] - eta @ (sigma_inv @ lam2)
    bias = np.zeros(eta.shape[1])
    bias[1:] = omega_22_inv @ omega_12
    y_star = yv[1:] - eta @ (sigma_inv @ lam2 @ beta + bias)

    n_eff = n - 1
    z_star = np.column_stack([np.ones(n_eff), x_star])
    zpz = z_star.T @ z_star
    params = np.linalg.solve(zpz, z_star.T @ y_star)

    omega_112 = float(omega[0, 0] - omega_12 @ omega_22_inv @ omega_12)
    param_cov = omega_112 * np.linalg.inv(zpz)
    ses = np.sqrt(np.maximum(np.diag(param_cov), 0.0))

    resid = y_star - z_star @ params
    estimates = tuple(
        _normal_estimate(name, params[i + 1], ses[i + 1]) for i, name in enumerate(names)
    )
    return CointegrationFit(
        method="ccr",
        estimates=estimates,
        intercept=_normal_estimate("C", params[0], ses[0]),
        n_effective=n_eff,
        bandwidth=lrcov.bandwidth,
        long_run_variance=omega_112,
        residuals=resid,
    )
