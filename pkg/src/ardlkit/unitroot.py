"""ADF, Phillips-Perron, and DF-GLS stationarity tests.

Critical values: MacKinnon (2010) response-surface coefficients for
ADF/PP (and for DF-GLS in the demeaned case, whose asymptotic null matches
the no-deterministics Dickey-Fuller distribution), and the
Elliott-Rothenberg-Stock table for the detrended DF-GLS case, interpolated
in the effective sample size. Every result carries its critical values so
verdicts are auditable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigError, DataError
from .regression import OlsFit, design_matrix, long_run_variance, newey_west_bandwidth, ols_fit
from .timeseries import TimeSeries

__all__ = [
    "UnitRootSpec",
    "UnitRootResult",
    "IntegrationDecision",
    "adf_test",
    "pp_test",
    "dfgls_test",
    "classify_integration",
    "schwert_max_lags",
]

TESTS = ("adf", "pp", "dfgls")
DETERMINISTICS = ("constant", "constant_trend")

# MacKinnon (2010) response-surface coefficients for the tau distribution,
# one I(1) series. Critical value = b0 + b1/T + b2/T^2 + b3/T^3.
_MACKINNON = {
    # no deterministic terms (used by demeaned DF-GLS)
    "none": {
        "1%": (-2.56574, -2.2358, -3.627, 0.0),
        "5%": (-1.94100, -0.2686, -3.365, 31.223),
        "10%": (-1.61682, 0.2656, -2.714, 25.364),
    },
    "constant": {
        "1%": (-3.43035, -6.5393, -16.786, -79.433),
        "5%": (-2.86154, -2.8903, -4.234, -40.040),
        "10%": (-2.56677, -1.5384, -2.809, 0.0),
    },
    "constant_trend": {
        "1%": (-3.95877, -9.0531, -28.428, -134.155),
        "5%": (-3.41049, -4.3904, -9.036, -45.374),
        "10%": (-3.12705, -2.5856, -3.925, -22.380),
    },
}

# Elliott-Rothenberg-Stock critical values for the GLS-detrended
# (constant+trend) statistic, tabulated at T = 50, 100, 200, infinity.
_ERS_TREND = {
    "1%": ((50, -3.77), (100, -3.58), (200, -3.46), (math.inf, -3.48)),
    "5%": ((50, -3.19), (100, -3.03), (200, -2.93), (math.inf, -2.89)),
    "10%": ((50, -2.89), (100, -2.74), (200, -2.64), (math.inf, -2.57)),
}


def schwert_max_lags(n: int) -> int:
    """Schwert rule floor(12 * (n/100)^(1/4)) for the auto-lag search bound."""
    return int(math.floor(12.0 * (n / 100.0) ** 0.25))


@dataclass(frozen=True)
class UnitRootSpec:
    """Configuration of one unit-root test run.

    lags/max_lags/ic drive the augmentation order for adf and dfgls
    (lags=None means auto-IC selection up to max_lags, defaulting to the
    Schwert bound); bandwidth applies to pp only (None means the
    Newey-West fixed rule).
    """

    test: str = "adf"
    deterministic: str = "constant"
    lags: int | None = None
    max_lags: int | None = None
    ic: str = "sic"
    bandwidth: float | None = None

    def __post_init__(self) -> None:
        if self.test not in TESTS:
            raise ConfigError(f"unknown test {self.test!r}; expected one of {TESTS}")
        if self.deterministic not in DETERMINISTICS:
            raise ConfigError(
                f"unknown deterministic case {self.deterministic!r}; expected one of {DETERMINISTICS}"
            )
        if self.ic not in ("aic", "sic"):
            raise ConfigError(f"ic must be 'aic' or 'sic', got {self.ic!r}")
        if self.test == "pp":
            if self.lags is not None or self.max_lags is not None:
                raise ConfigError("lag options apply only to adf/dfgls, not pp")
        elif self.bandwidth is not None:
            raise ConfigError("bandwidth applies only to pp")
        if self.lags is not None and self.lags < 0:
            raise ConfigError(f"lags must be non-negative, got {self.lags}")
        if self.bandwidth is not None and self.bandwidth < 0:
            raise ConfigError(f"bandwidth must be non-negative, got {self.bandwidth}")


@dataclass(frozen=True)
class UnitRootResult:
    """Left-tailed unit-root test outcome with embedded critical values."""

    test: str
    deterministic: str
    statistic: float
    critical_values: dict[str, float]
    lags_used: int | None
    bandwidth_used: float | None
    n_effective: int

    @property
    def significance(self) -> str:
        """***, **, * for rejection at 1/5/10%, empty when not rejected."""
        if self.statistic < self.critical_values["1%"]:
            return "***"
        if self.statistic < self.critical_values["5%"]:
            return "**"
        if self.statistic < self.critical_values["10%"]:
            return "*"
        return ""

    def rejects(self, level: str = "5%") -> bool:
        return self.statistic < self.critical_values[level]


@dataclass(frozen=True)
class IntegrationDecision:
    """Integration order implied by a level test and a first-difference test."""

    order: str  # "I(0)", "I(1)", or "higher"
    level_result: UnitRootResult
    diff_result: UnitRootResult


def _mackinnon_cv(case: str, n_effective: int) -> dict[str, float]:
    out = {}
    for level, (b0, b1, b2, b3) in _MACKINNON[case].items():
        t = float(n_effective)
        out[level] = b0 + b1 / t + b2 / t**2 + b3 / t**3
    return out


def _ers_cv(n_effective: int) -> dict[str, float]:
    # piecewise-linear interpolation on the 1/T scale; extrapolates the
    # first segment below T=50
    out = {}
    for level, points in _ERS_TREND.items():
        xs = [1.0 / t if math.isfinite(t) else 0.0 for t, _ in points]
        ys = [cv for _, cv in points]
        x = 1.0 / n_effective
        if x >= xs[0]:
            i = 0
        elif x <= xs[-1]:
            i = len(xs) - 2
        else:
            i = next(j for j in range(len(xs) - 1) if xs[j] >= x >= xs[j + 1])
        slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i])
        out[level] = ys[i] + slope * (x - xs[i])
    return out


def _check_series(s: TimeSeries, min_len: int) -> np.ndarray:
    y = s.values
    if np.ptp(y) == 0.0:
        raise DataError(f"series {s.name!r} is constant; unit-root test undefined")
    if len(y) < min_len:
        raise DataError(f"series {s.name!r} too short: {len(y)} < {min_len} observations")
    return y


def _df_design(y: np.ndarray, p: int, deterministic: str | None, hold_back: int | None = None):
    """Response and design of the DF regression with p lagged differences.

    hold_back pins the number of leading observations dropped (for IC
    comparison on a common sample); None drops exactly p+1.
    """
    dy = np.diff(y)
    start = p if hold_back is None else hold_back
    resp = dy[start:]
    n_eff = resp.shape[0]
    cols: list[tuple[str, np.ndarray]] = [("y.L1", y[start : start + n_eff])]
    for i in range(1, p + 1):
        cols.append((f"dy.L{i}", dy[start - i : start - i + n_eff]))
    if deterministic == "constant_trend":
        cols.insert(0, ("trend", np.arange(1.0, n_eff + 1.0)))
    X = design_matrix(cols, intercept=deterministic is not None)
    return resp, X


def _fit_df(y: np.ndarray, p: int, deterministic: str | None, hold_back: int | None = None) -> OlsFit:
    resp, X = _df_design(y, p, deterministic, hold_back)
    return ols_fit(resp, X)


def _select_df_lags(y: np.ndarray, deterministic: str | None, max_p: int, ic: str) -> int:
    """Minimize the IC over 0..max_p on the common max_p-aligned sample."""
    best_p, best_ic = 0, math.inf
    for p in range(max_p + 1):
        fit = _fit_df(y, p, deterministic, hold_back=max_p)
        value = fit.aic if ic == "aic" else fit.sic
        if value < best_ic - 1e-12:
            best_p, best_ic = p, value
    return best_p


def _resolve_lags(y: np.ndarray, spec: UnitRootSpec, deterministic: str | None) -> int:
    if spec.lags is not None:
        return spec.lags
    max_p = spec.max_lags if spec.max_lags is not None else schwert_max_lags(len(y) - 1)
    n_det = 0 if deterministic is None else (1 if deterministic == "constant" else 2)
    # keep the largest candidate estimable with a little slack
    max_p = max(0, min(max_p, len(y) - 2 - n_det - 5))
    return _select_df_lags(y, deterministic, max_p, spec.ic)


def adf_test(s: TimeSeries, spec: UnitRootSpec | None = None) -> UnitRootResult:
    """Augmented Dickey-Fuller test.

    Regresses the first difference on the lagged level, deterministics,
    and `lags` lagged differences; the statistic is the t-ratio on the
    lagged level, compared against MacKinnon (2010) critical values.
    """
    spec = spec or UnitRootSpec(test="adf")
    if spec.test != "adf":
        raise ConfigError(f"spec.test is {spec.test!r}, expected 'adf'")
    y = _check_series(s, 10)
    p = _resolve_lags(y, spec, spec.deterministic)
    fit = _fit_df(y, p, spec.deterministic)
    n_eff = fit.nobs
    if fit.df_resid < 5:
        raise DataError(f"series {s.name!r}: only {fit.df_resid} residual df with {p} lags")
    return UnitRootResult(
        test="adf",
        deterministic=spec.deterministic,
        statistic=fit.t_stat("y.L1"),
        critical_values=_mackinnon_cv(spec.deterministic, n_eff),
        lags_used=p,
        bandwidth_used=None,
        n_effective=n_eff,
    )


def pp_test(s: TimeSeries, spec: UnitRootSpec | None = None) -> UnitRootResult:
    """Phillips-Perron Z_t test.

    Runs the lag-0 DF regression and corrects its t-ratio with the
    Bartlett long-run variance of the residuals; when the long-run
    variance equals the zero-lag variance the statistic reduces to the
    plain DF t-ratio.
    """
    spec = spec or UnitRootSpec(test="pp")
    if spec.test != "pp":
        raise ConfigError(f"spec.test is {spec.test!r}, expected 'pp'")
    y = _check_series(s, 10)
    fit = _fit_df(y, 0, spec.deterministic)
    n_eff = fit.nobs
    u = fit.residuals
    bw = spec.bandwidth if spec.bandwidth is not None else float(newey_west_bandwidth(n_eff))
    omega = long_run_variance(u, "bartlett", bw).omega
    gamma0 = fit.rss / n_eff
    tau = fit.t_stat("y.L1")
    se_rho = fit.std_error("y.L1")
    s = math.sqrt(fit.sigma2)
    z_t = math.sqrt(gamma0 / omega) * tau - (omega - gamma0) * n_eff * se_rho / (
        2.0 * math.sqrt(omega) * s
    )
    return UnitRootResult(
        test="pp",
        deterministic=spec.deterministic,
        statistic=z_t,
        critical_values=_mackinnon_cv(spec.deterministic, n_eff),
        lags_used=None,
        bandwidth_used=bw,
        n_effective=n_eff,
    )


def gls_detrend(y: np.ndarray, deterministic: str) -> np.ndarray:
    """Elliott-Rothenberg-Stock local-GLS detrending.

    Quasi-differences the series and its deterministics at
    alpha = 1 + cbar/T (cbar = -7 demeaned, -13.5 detrended), estimates the
    deterministic coefficients on the quasi-differenced pair, and removes
    the fitted deterministics from the original series.
    """
    n = len(y)
    cbar = -7.0 if deterministic == "constant" else -13.5
    alpha = 1.0 + cbar / n
    if deterministic == "constant":
        d = np.ones((n, 1))
    else:
        d = np.column_stack([np.ones(n), np.arange(1.0, n + 1.0)])
    zy = np.concatenate([[y[0]], y[1:] - alpha * y[:-1]])
    zd = np.vstack([d[0], d[1:] - alpha * d[:-1]])
    delta, *_ = np.linalg.lstsq(zd, zy, rcond=None)
    return y - d @ delta


def dfgls_test(s: TimeSeries, spec: UnitRootSpec | None = None) -> UnitRootResult:
    """Elliott-Rothenberg-Stock DF-GLS test.

    ADF regression without deterministics on the GLS-detrended series.
    Demeaned case: MacKinnon no-deterministics critical values; detrended
    case: the ERS table interpolated in the effective sample size.
    """
    spec = spec or UnitRootSpec(test="dfgls")
    if spec.test != "dfgls":
        raise ConfigError(f"spec.test is {spec.test!r}, expected 'dfgls'")
    y = _check_series(s, 10)
    detrended = gls_detrend(y, spec.deterministic)
    p = _resolve_lags(detrended, spec, None)
    fit = _fit_df(detrended, p, None)
    n_eff = fit.nobs
    if spec.deterministic == "constant":
        cvs = _mackinnon_cv("none", n_eff)
    else:
        cvs = _ers_cv(n_eff)
    return UnitRootResult(
        test="dfgls",
        deterministic=spec.deterministic,
        statistic=fit.t_stat("y.L1"),
        critical_values=cvs,
        lags_used=p,
        bandwidth_used=None,
        n_effective=n_eff,
    )


def classify_integration(level: UnitRootResult, diff: UnitRootResult) -> IntegrationDecision:
    """I(0) if the level rejects at 5%; I(1) if only the difference does;
    'higher' when neither rejects."""
    if level.test != diff.test or level.deterministic != diff.deterministic:
        raise DataError("level and difference results must come from the same test family")
    if level.rejects("5%"):
        order = "I(0)"
    elif diff.rejects("5%"):
        order = "I(1)"
    else:
        order = "higher"
    return IntegrationDecision(order=order, level_result=level, diff_result=diff)
