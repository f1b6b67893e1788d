"""ARDL estimation, bounds cointegration testing, and error correction.

The conditional error-correction (CEC) regression is the exact
re-parameterization of the levels ARDL(p, q1..qk): the first difference of
the dependent variable is regressed on an intercept (and optional trend),
the one-period-lagged levels (contemporaneous level for a regressor with
lag order zero), and the difference terms implied by the lag orders. The
bounds F statistic tests the joint nullity of the level terms against the
Pesaran-Shin-Smith critical bounds; the error-correction form is
recovered in two steps from the same fit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .distributions import t_pvalue
from .exceptions import ConfigError, NumericalError
from .regression import OlsFit, design_matrix, ols_fit, wald_f_test
from .timeseries import Dataset

__all__ = [
    "ArdlSpec",
    "ArdlFit",
    "BoundsTestResult",
    "EcmFit",
    "ParameterEstimate",
    "select_lags",
    "fit_ardl",
    "bounds_test",
    "bounds_decision",
    "ecm_fit",
    "ect_is_convergent",
    "long_run_se",
    "pesaran_bounds",
]


def ect_is_convergent(ect_coefficient: float) -> bool:
    """A valid convergent error-correction coefficient lies inside (-1, 0)."""
    return -1.0 < ect_coefficient < 0.0

CASES = ("restricted_constant", "unrestricted_constant", "unrestricted_constant_trend")
BOUND_LEVELS = ("10%", "5%", "2.5%", "1%")

# Pesaran, Shin & Smith (2001) critical bounds (I0, I1) for the F statistic,
# indexed by number of regressors k; levels 10%, 5%, 2.5%, 1%.
_PSS_BOUNDS: dict[str, dict[int, tuple[tuple[float, float], ...]]] = {
    # Case II: restricted intercept, no trend
    "restricted_constant": {
        1: ((3.02, 3.51), (3.62, 4.16), (4.18, 4.79), (4.94, 5.58)),
        2: ((2.63, 3.35), (3.10, 3.87), (3.55, 4.38), (4.13, 5.00)),
        3: ((2.37, 3.20), (2.79, 3.67), (3.15, 4.08), (3.65, 4.66)),
        4: ((2.20, 3.09), (2.56, 3.49), (2.88, 3.87), (3.29, 4.37)),
        5: ((2.08, 3.00), (2.39, 3.38), (2.70, 3.73), (3.06, 4.15)),
        6: ((1.99, 2.94), (2.27, 3.28), (2.55, 3.61), (2.88, 3.99)),
        7: ((1.92, 2.89), (2.17, 3.21), (2.43, 3.51), (2.73, 3.90)),
        8: ((1.85, 2.85), (2.11, 3.15), (2.33, 3.42), (2.62, 3.77)),
        9: ((1.80, 2.80), (2.04, 3.08), (2.24, 3.35), (2.50, 3.68)),
        10: ((1.76, 2.77), (1.98, 3.04), (2.18, 3.28), (2.41, 3.61)),
    },
    # Case III: unrestricted intercept, no trend
    "unrestricted_constant": {
        1: ((4.04, 4.78), (4.94, 5.73), (5.77, 6.68), (6.84, 7.84)),
        2: ((3.17, 4.14), (3.79, 4.85), (4.41, 5.52), (5.15, 6.36)),
        3: ((2.72, 3.77), (3.23, 4.35), (3.69, 4.89), (4.29, 5.61)),
        4: ((2.45, 3.52), (2.86, 4.01), (3.25, 4.49), (3.74, 5.06)),
        5: ((2.26, 3.35), (2.62, 3.79), (2.96, 4.18), (3.41, 4.68)),
        6: ((2.12, 3.23), (2.45, 3.61), (2.75, 3.99), (3.15, 4.43)),
        7: ((2.03, 3.13), (2.32, 3.50), (2.60, 3.84), (2.96, 4.26)),
        8: ((1.95, 3.06), (2.22, 3.39), (2.48, 3.70), (2.79, 4.10)),
        9: ((1.88, 2.99), (2.14, 3.30), (2.37, 3.60), (2.65, 3.97)),
        10: ((1.83, 2.94), (2.06, 3.24), (2.28, 3.50), (2.54, 3.86)),
    },
    # Case V: unrestricted intercept, unrestricted trend
    "unrestricted_constant_trend": {
        1: ((5.59, 6.26), (6.56, 7.30), (7.46, 8.27), (8.74, 9.63)),
        2: ((4.19, 5.06), (4.87, 5.85), (5.49, 6.59), (6.34, 7.52)),
        3: ((3.47, 4.45), (4.01, 5.07), (4.52, 5.62), (5.17, 6.36)),
        4: ((3.03, 4.06), (3.47, 4.57), (3.89, 5.07), (4.40, 5.72)),
        5: ((2.75, 3.79), (3.12, 4.25), (3.47, 4.67), (3.93, 5.23)),
        6: ((2.53, 3.59), (2.87, 4.00), (3.19, 4.38), (3.60, 4.90)),
        7: ((2.38, 3.45), (2.69, 3.83), (2.98, 4.16), (3.34, 4.63)),
        8: ((2.26, 3.34), (2.55, 3.68), (2.82, 4.02), (3.15, 4.43)),
        9: ((2.16, 3.24), (2.43, 3.56), (2.67, 3.87), (2.97, 4.24)),
        10: ((2.07, 3.16), (2.33, 3.46), (2.56, 3.76), (2.84, 4.10)),
    },
}


def pesaran_bounds(k: int, case: str) -> dict[str, tuple[float, float]]:
    """Critical (I0, I1) bounds for k regressors under the given case."""
    if case not in CASES:
        raise ConfigError(f"unknown deterministic case {case!r}; expected one of {CASES}")
    table = _PSS_BOUNDS[case]
    if k not in table:
        raise ConfigError(f"no critical bounds for k={k}; supported k: 1..10")
    return dict(zip(BOUND_LEVELS, table[k]))


@dataclass(frozen=True)
class ParameterEstimate:
    """One coefficient with its classical inference columns."""

    name: str
    coefficient: float
    std_error: float
    t_stat: float
    p_value: float


@dataclass(frozen=True)
class ArdlSpec:
    """Lag structure of an ARDL(p, q1..qk) model."""

    dependent: str
    regressors: tuple[str, ...]
    p: int
    q: tuple[int, ...]
    case: str = "unrestricted_constant"

    def __post_init__(self) -> None:
        object.__setattr__(self, "regressors", tuple(self.regressors))
        object.__setattr__(self, "q", tuple(int(v) for v in self.q))
        if self.p < 1:
            raise ConfigError(f"autoregressive order p must be >= 1, got {self.p}")
        if len(self.q) != len(self.regressors):
            raise ConfigError(
                f"{len(self.q)} lag orders for {len(self.regressors)} regressors"
            )
        if any(qi < 0 for qi in self.q):
            raise ConfigError(f"regressor lag orders must be >= 0, got {self.q}")
        if self.dependent in self.regressors:
            raise ConfigError(f"dependent {self.dependent!r} cannot also be a regressor")
        if len(set(self.regressors)) != len(self.regressors):
            raise ConfigError("regressor names must be unique")
        if self.case not in CASES:
            raise ConfigError(f"unknown deterministic case {self.case!r}")

    @property
    def k(self) -> int:
        return len(self.regressors)

    @property
    def max_lag(self) -> int:
        return max(self.p, max(self.q, default=0))

    @property
    def total_lags(self) -> int:
        return self.p + sum(self.q)

    def n_params(self) -> int:
        # intercept (+ trend) + k+1 level terms + (p-1) + sum(q) differences
        det = 2 if self.case == "unrestricted_constant_trend" else 1
        return det + (self.k + 1) + (self.p - 1) + sum(self.q)


@dataclass(frozen=True)
class ArdlFit:
    """A fitted conditional error-correction regression."""

    spec: ArdlSpec
    levels_fit: OlsFit
    theta: np.ndarray  # level-term coefficients, dependent first
    level_names: tuple[str, ...]
    ic_value: float
    n_effective: int

    @property
    def theta_dependent(self) -> float:
        return float(self.theta[0])

    @property
    def theta_regressors(self) -> np.ndarray:
        return self.theta[1:]


@dataclass(frozen=True)
class BoundsTestResult:
    """Bounds F test outcome against the Pesaran critical bounds."""

    f_statistic: float
    k: int
    case: str
    bounds: dict[str, tuple[float, float]]
    decision: str  # "cointegrated" | "inconclusive" | "not_cointegrated"
    level: str | None  # tightest level at which cointegration holds


@dataclass(frozen=True)
class EcmFit:
    """Error-correction representation: short-run dynamics plus the
    speed-of-adjustment coefficient and delta-method long-run terms."""

    short_run: tuple[ParameterEstimate, ...]
    ect: ParameterEstimate
    long_run: tuple[ParameterEstimate, ...]
    intercept: ParameterEstimate
    trend: ParameterEstimate | None
    is_convergent: bool  # ECT coefficient inside (-1, 0)
    residuals: np.ndarray
    short_run_fit: OlsFit


def _cec_columns(data: Dataset, spec: ArdlSpec, hold_back: int | None = None):
    """Response and named columns of the CEC regression.

    hold_back pins the number of leading observations dropped (>= max lag)
    so that competing lag orders can be scored on a common sample.
    """
    m = spec.max_lag if hold_back is None else hold_back
    if m < spec.max_lag:
        raise ConfigError(f"hold_back {m} below the maximum lag {spec.max_lag}")
    y = data[spec.dependent].values
    n = y.shape[0]
    n_eff = n - m
    if n_eff <= spec.n_params() + 3:
        raise ConfigError(
            f"infeasible spec: {n_eff} effective observations for "
            f"{spec.n_params()} parameters"
        )
    t = np.arange(m, n)
    dy = np.diff(y)
    resp = dy[t - 1]  # dy index t-1 holds y_t - y_{t-1}

    cols: list[tuple[str, np.ndarray]] = []
    if spec.case == "unrestricted_constant_trend":
        cols.append(("trend", (t + 1).astype(float)))
    cols.append((f"{spec.dependent}(-1)", y[t - 1]))
    for name, qi in zip(spec.regressors, spec.q):
        x = data[name].values
        if qi >= 1:
            cols.append((f"{name}(-1)", x[t - 1]))
        else:
            cols.append((name, x[t]))
    for j in range(1, spec.p):
        cols.append((f"D({spec.dependent}(-{j}))", dy[t - 1 - j]))
    for name, qi in zip(spec.regressors, spec.q):
        if qi >= 1:
            dx = np.diff(data[name].values)
            cols.append((f"D({name})", dx[t - 1]))
            for j in range(1, qi):
                cols.append((f"D({name}(-{j}))", dx[t - 1 - j]))
    return resp, cols


def fit_ardl(data: Dataset, spec: ArdlSpec, criterion: str = "sic",
             hold_back: int | None = None) -> ArdlFit:
    """Estimate the conditional error-correction regression for `spec`.

    The level-term coefficient vector theta (dependent first, then
    regressors in spec order) is read straight off the fit.
    """
    if criterion not in ("aic", "sic"):
        raise ConfigError(f"criterion must be 'aic' or 'sic', got {criterion!r}")
    resp, cols = _cec_columns(data, spec, hold_back)
    X = design_matrix(cols, intercept=True)
    fit = ols_fit(resp, X)
    level_names = tuple(
        f"{name}(-1)" if qi >= 1 else name
        for name, qi in zip(spec.regressors, spec.q)
    )
    level_names = (f"{spec.dependent}(-1)",) + level_names
    theta = np.array([fit.coef(name) for name in level_names])
    ic_value = fit.aic if criterion == "aic" else fit.sic
    return ArdlFit(
        spec=spec,
        levels_fit=fit,
        theta=theta,
        level_names=level_names,
        ic_value=ic_value,
        n_effective=fit.nobs,
    )


def select_lags(
    data: Dataset,
    dependent: str,
    regressors: tuple[str, ...] | list[str],
    max_p: int,
    max_q: int,
    criterion: str = "sic",
    case: str = "unrestricted_constant",
) -> ArdlSpec:
    """Exhaustive lag-order search minimizing the information criterion.

    Every candidate is scored on the common sample implied by the largest
    admissible lag; ties within 1e-12 go to the smaller total lag count,
    then to lexicographically smaller orders.
    """
    if max_p < 1:
        raise ConfigError(f"max_p must be >= 1, got {max_p}")
    if max_q < 0:
        raise ConfigError(f"max_q must be >= 0, got {max_q}")
    regressors = tuple(regressors)
    hold_back = max(max_p, max_q)
    best: tuple[float, int, tuple[int, ...], ArdlSpec] | None = None
    for p in range(1, max_p + 1):
        for q in itertools.product(range(max_q + 1), repeat=len(regressors)):
            spec = ArdlSpec(dependent, regressors, p, q, case)
            try:
                fit = fit_ardl(data, spec, criterion, hold_back=hold_back)
            except (ConfigError, NumericalError):
                # infeasible sample or an exactly-collinear candidate design
                continue
            key = (fit.ic_value, spec.total_lags, (p,) + q)
            if best is None:
                best = key + (spec,)
                continue
            tied = fit.ic_value == best[0] or abs(fit.ic_value - best[0]) <= 1e-12
            if not tied and fit.ic_value < best[0]:
                best = key + (spec,)
            elif tied and key[1:3] < best[1:3]:
                best = key + (spec,)
    if best is None:
        raise ConfigError(
            f"no feasible ARDL candidate for max_p={max_p}, max_q={max_q} "
            f"on {data.n_obs} observations"
        )
    return best[3]


def bounds_decision(f_statistic: float, k: int, case: str) -> BoundsTestResult:
    """Classify an F statistic against the critical bounds for (k, case).

    Cointegrated at the tightest level whose upper bound it exceeds;
    not cointegrated when below the 10% lower bound; inconclusive between.
    """
    bounds = pesaran_bounds(k, case)
    level = None
    for lev in ("1%", "2.5%", "5%", "10%"):
        if f_statistic > bounds[lev][1]:
            level = lev
            break
    if level is not None:
        decision = "cointegrated"
    elif f_statistic < bounds["10%"][0]:
        decision = "not_cointegrated"
    else:
        decision = "inconclusive"
    return BoundsTestResult(
        f_statistic=float(f_statistic),
        k=k,
        case=case,
        bounds=bounds,
        decision=decision,
        level=level,
    )


def bounds_test(fit: ArdlFit) -> BoundsTestResult:
    """Pesaran bounds F test on the level terms of a fitted CEC.

    Under the restricted-constant case the intercept joins the restriction
    set (it belongs to the long-run relation); under the unrestricted cases
    only the k+1 level terms are restricted.
    """
    spec = fit.spec
    restricted_names = set(fit.level_names)
    if spec.case == "restricted_constant":
        restricted_names.add("C")
    X = fit.levels_fit.design
    keep = [(name, X.column(name)) for name in X.names
            if name not in restricted_names and name != "C"]
    with_intercept = spec.case != "restricted_constant"
    if keep or with_intercept:
        X_r = design_matrix(keep, intercept=with_intercept, n_rows=X.n)
        restricted = ols_fit(fit.levels_fit.response, X_r)
        rss_r = restricted.rss
        f_stat, _ = wald_f_test(fit.levels_fit, restricted, q=len(restricted_names))
    else:
        # restricted model is the empty regression: RSS = y'y
        y = fit.levels_fit.response
        rss_r = float(y @ y)
        q = len(restricted_names)
        rss_u, df_u = fit.levels_fit.rss, fit.levels_fit.df_resid
        f_stat = ((rss_r - rss_u) / q) / (rss_u / df_u)
    return bounds_decision(f_stat, spec.k, spec.case)


def _delta_method_long_run(fit: ArdlFit) -> dict[str, tuple[float, float]]:
    """Long-run coefficients -theta_i/theta_dep (plus intercept and trend)
    with delta-method standard errors from the CEC coefficient covariance."""
    lf = fit.levels_fit
    theta_dep = fit.theta_dependent
    if abs(theta_dep) < 1e-12:
        raise NumericalError(
            "long-run coefficients undefined: level coefficient of the dependent "
            f"variable is {theta_dep:.3e}"
        )
    names = list(lf.names)
    dep_idx = names.index(fit.level_names[0])
    targets = [("C", names.index("C"))]
    if fit.spec.case == "unrestricted_constant_trend":
        targets.append(("trend", names.index("trend")))
    for reg_name, col_name in zip(fit.spec.regressors, fit.level_names[1:]):
        targets.append((reg_name, names.index(col_name)))
    cov = lf.coef_covariance
    out = {}
    for label, idx in targets:
        value = -lf.params[idx] / theta_dep
        # gradient of -theta_i/theta_dep w.r.t. (theta_i, theta_dep)
        g_i = -1.0 / theta_dep
        g_dep = lf.params[idx] / theta_dep**2
        var = (
            g_i * g_i * cov[idx, idx]
            + 2.0 * g_i * g_dep * cov[idx, dep_idx]
            + g_dep * g_dep * cov[dep_idx, dep_idx]
        )
        out[label] = (float(value), math.sqrt(max(var, 0.0)))
    return out


def long_run_se(fit: ArdlFit) -> dict[str, float]:
    """Delta-method standard errors of the long-run coefficients
    (including the long-run intercept, keyed 'C')."""
    return {name: se for name, (_, se) in _delta_method_long_run(fit).items()}


def ecm_fit(fit: ArdlFit) -> EcmFit:
    """Two-step error-correction estimation.

    Builds the error-correction term from the long-run solution of the
    CEC fit, then regresses the dependent difference on the short-run
    difference terms and the lagged error-correction term. On the same
    sample this recovers the CEC's level coefficient on the dependent
    variable as the ECT coefficient, exactly.
    """
    spec = fit.spec
    lf = fit.levels_fit
    long_run_full = _delta_method_long_run(fit)
    df = lf.df_resid

    def estimate(name: str, value: float, se: float) -> ParameterEstimate:
        t = value / se if se > 0 else math.inf * np.sign(value)
        p = t_pvalue(t, df) if math.isfinite(t) else 0.0
        return ParameterEstimate(name, value, se, float(t), float(p))

    intercept = estimate("C", *long_run_full["C"])
    trend = (
        estimate("trend", *long_run_full["trend"])
        if spec.case == "unrestricted_constant_trend"
        else None
    )
    long_run = tuple(
        estimate(name, *long_run_full[name]) for name in spec.regressors
    )

    # ECT over the estimation sample: dependent level minus the long-run
    # combination of the CEC's level columns (contemporaneous level for
    # lag-order-zero regressors), lagged one period relative to the response
    X = lf.design
    ect_vals = X.column(fit.level_names[0]).astype(float).copy()
    ect_vals -= intercept.coefficient
    if trend is not None:
        ect_vals -= trend.coefficient * X.column("trend")
    for est, col_name in zip(long_run, fit.level_names[1:]):
        ect_vals -= est.coefficient * X.column(col_name)

    diff_names = [
        name for name in X.names
        if name.startswith("D(")
    ]
    cols = [(name, X.column(name)) for name in diff_names]
    cols.append(("ECT(-1)", ect_vals))
    X_sr = design_matrix(cols, intercept=False)
    sr_fit = ols_fit(lf.response, X_sr)

    short_run = tuple(
        ParameterEstimate(
            name,
            sr_fit.coef(name),
            sr_fit.std_error(name),
            sr_fit.t_stat(name),
            sr_fit.p_value(name),
        )
        for name in diff_names
    )
    ect = ParameterEstimate(
        "ECT(-1)",
        sr_fit.coef("ECT(-1)"),
        sr_fit.std_error("ECT(-1)"),
        sr_fit.t_stat("ECT(-1)"),
        sr_fit.p_value("ECT(-1)"),
    )
    return EcmFit(
        short_run=short_run,
        ect=ect,
        long_run=long_run,
        intercept=intercept,
        trend=trend,
        is_convergent=ect_is_convergent(ect.coefficient),
        residuals=sr_fit.residuals,
        short_run_fit=sr_fit,
    )
