"""Ordinary least squares with full inference output, plus kernel-based
long-run (HAC) covariance estimation and nested-model Wald F tests.

OLS is solved by QR with column pivoting; rank deficiency is detected from
the R diagonal and reported with the names of the dependent columns. The
normal-equations route exists only as an independent oracle in the test
suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy import linalg as _linalg
from scipy import stats as _stats

from .distributions import f_pvalue
from .exceptions import DataError, NumericalError

__all__ = [
    "DesignMatrix",
    "OlsFit",
    "LongRunCovariance",
    "design_matrix",
    "ols_fit",
    "long_run_variance",
    "newey_west_bandwidth",
    "wald_f_test",
]

_RANK_TOL = 1e-10


@dataclass(frozen=True)
class DesignMatrix:
    """Named regressor columns; at most one constant column (the intercept)."""

    names: tuple[str, ...]
    data: np.ndarray
    intercept_name: str | None = None

    def __post_init__(self) -> None:
        data = np.asarray(self.data, dtype=float)
        if data.ndim != 2:
            raise DataError("design matrix must be 2-D")
        n, k = data.shape
        if len(self.names) != k:
            raise DataError(f"{len(self.names)} names for {k} columns")
        if len(set(self.names)) != k:
            raise DataError("design matrix column names must be unique")
        if n <= k:
            raise DataError(f"not estimable: n={n} observations for k={k} regressors")
        if not np.all(np.isfinite(data)):
            raise DataError("design matrix contains non-finite values")
        if self.intercept_name is not None and self.intercept_name not in self.names:
            raise DataError(f"intercept column {self.intercept_name!r} not among columns")
        for name, col in zip(self.names, data.T):
            if name != self.intercept_name and np.ptp(col) == 0.0:
                raise DataError(f"column {name!r} is constant but is not the intercept")
        data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "names", tuple(self.names))

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def k(self) -> int:
        return self.data.shape[1]

    @property
    def has_intercept(self) -> bool:
        return self.intercept_name is not None

    def column(self, name: str) -> np.ndarray:
        return self.data[:, self.names.index(name)]


def design_matrix(
    columns: Mapping[str, np.ndarray] | Sequence[tuple[str, np.ndarray]],
    intercept: bool = True,
    intercept_name: str = "C",
    n_rows: int | None = None,
) -> DesignMatrix:
    """Assemble a DesignMatrix from named columns, optionally prepending a
    constant. n_rows is only needed for an intercept-only design."""
    items = list(columns.items()) if isinstance(columns, Mapping) else list(columns)
    names = [name for name, _ in items]
    cols = [np.asarray(col, dtype=float) for _, col in items]
    if cols:
        n = cols[0].shape[0]
    elif intercept and n_rows is not None:
        n = n_rows
    else:
        raise DataError("cannot infer row count for an intercept-only design; pass n_rows")
    for name, c in zip(names, cols):
        if c.ndim != 1 or c.shape[0] != n:
            raise DataError(f"column {name!r} has shape {c.shape}, expected ({n},)")
    if intercept:
        names = [intercept_name] + names
        cols = [np.ones(n)] + cols
    return DesignMatrix(tuple(names), np.column_stack(cols), intercept_name if intercept else None)


@dataclass(frozen=True)
class OlsFit:
    """OLS estimates with classical inference and fit criteria."""

    design: DesignMatrix
    response: np.ndarray
    params: np.ndarray
    std_errors: np.ndarray
    t_stats: np.ndarray
    p_values: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray
    rss: float
    sigma2: float
    r_squared: float
    log_likelihood: float
    aic: float
    sic: float
    df_resid: int
    coef_covariance: np.ndarray

    @property
    def names(self) -> tuple[str, ...]:
        return self.design.names

    @property
    def nobs(self) -> int:
        return self.design.n

    @property
    def coefficients(self) -> dict[str, float]:
        return dict(zip(self.names, map(float, self.params)))

    def coef(self, name: str) -> float:
        return float(self.params[self.names.index(name)])

    def std_error(self, name: str) -> float:
        return float(self.std_errors[self.names.index(name)])

    def t_stat(self, name: str) -> float:
        return float(self.t_stats[self.names.index(name)])

    def p_value(self, name: str) -> float:
        return float(self.p_values[self.names.index(name)])


def ols_fit(y: np.ndarray, X: DesignMatrix) -> OlsFit:
    """Fit y on X by QR-decomposition least squares.

    Standard errors come from sigma^2 (X'X)^-1, p-values are two-sided
    Student-t with n-k degrees of freedom, and AIC/SIC use the
    per-observation Gaussian log-likelihood form -2l/n + penalty.

    Raises
    ------
    NumericalError
        On rank deficiency, naming the dependent column set.
    """
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.shape[0] != X.n:
        raise DataError(f"response has shape {y.shape}, design has {X.n} rows")
    if not np.all(np.isfinite(y)):
        raise DataError("response contains non-finite values")
    n, k = X.n, X.k

    q, r, piv = _linalg.qr(X.data, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    scale = np.linalg.norm(X.data)
    rank = int(np.sum(diag > _RANK_TOL * max(scale, 1.0)))
    if rank < k:
        dependent = sorted(X.names[j] for j in piv[rank:])
        raise NumericalError(f"design matrix is rank deficient; dependent columns: {dependent}")

    qty = q.T @ y
    beta_piv = _linalg.solve_triangular(r, qty)
    params = np.empty(k)
    params[piv] = beta_piv

    fitted = X.data @ params
    residuals = y - fitted
    rss = float(residuals @ residuals)
    df_resid = n - k
    sigma2 = rss / df_resid

    # (X'X)^-1 = P R^-1 R^-T P'
    rinv = _linalg.solve_triangular(r, np.eye(k))
    xtx_inv_piv = rinv @ rinv.T
    xtx_inv = np.empty((k, k))
    xtx_inv[np.ix_(piv, piv)] = xtx_inv_piv
    coef_cov = sigma2 * xtx_inv

    with np.errstate(divide="ignore", invalid="ignore"):
        std_errors = np.sqrt(np.maximum(np.diag(coef_cov), 0.0))
        t_stats = np.where(std_errors > 0.0, params / std_errors, np.inf * np.sign(params))
    p_values = np.where(
        np.isfinite(t_stats), 2.0 * _stats.t.sf(np.abs(t_stats), df_resid), 0.0
    )

    if X.has_intercept:
        tss = float(np.sum((y - y.mean()) ** 2))
    else:
        tss = float(y @ y)
    if tss > 0.0:
        r_squared = 1.0 - rss / tss
    else:
        r_squared = 1.0 if rss == 0.0 else 0.0

    if rss > 0.0:
        loglik = -0.5 * n * (math.log(2.0 * math.pi) + math.log(rss / n) + 1.0)
    else:
        loglik = math.inf
    aic = -2.0 * loglik / n + 2.0 * k / n
    sic = -2.0 * loglik / n + k * math.log(n) / n

    return OlsFit(
        design=X,
        response=y,
        params=params,
        std_errors=std_errors,
        t_stats=t_stats,
        p_values=p_values,
        residuals=residuals,
        fitted=fitted,
        rss=rss,
        sigma2=sigma2,
        r_squared=r_squared,
        log_likelihood=loglik,
        aic=aic,
        sic=sic,
        df_resid=df_resid,
        coef_covariance=coef_cov,
    )


@dataclass(frozen=True)
class LongRunCovariance:
    """Bartlett-kernel long-run (co)variance.

    omega is the two-sided long-run variance (scalar) or covariance matrix;
    one_sided is sum_{j=0..L} w_j Gamma_j with Gamma_j = E[u_t u_{t-j}'] and
    w_0 = 1; short_run is the zero-lag term Gamma_0 alone. At bandwidth 0
    omega collapses to the plain sample (co)variance.
    """

    omega: float | np.ndarray
    one_sided: float | np.ndarray
    short_run: float | np.ndarray
    bandwidth: float
    kernel: str = "bartlett"


def newey_west_bandwidth(n: int) -> int:
    """Fixed Newey-West rule floor(4 * (n/100)^(2/9))."""
    return int(math.floor(4.0 * (n / 100.0) ** (2.0 / 9.0)))


def long_run_variance(
    u: np.ndarray,
    kernel: str = "bartlett",
    bandwidth: float | None = None,
) -> LongRunCovariance:
    """Bartlett-kernel long-run variance of a series (or covariance of columns).

    omega = gamma_0 + 2 * sum_{j=1..L} w_j gamma_j with w_j = 1 - j/(bw+1)
    and L = floor(bw); autocovariances are taken about the sample mean with
    n denominators. bandwidth=None resolves via the Newey-West fixed rule.
    """
    if kernel != "bartlett":
        raise DataError(f"unsupported kernel {kernel!r}")
    arr = np.asarray(u, dtype=float)
    scalar_input = arr.ndim == 1
    if scalar_input:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] < 2:
        raise DataError("long-run variance needs at least 2 observations")
    n = arr.shape[0]
    if bandwidth is None:
        bandwidth = float(newey_west_bandwidth(n))
    if bandwidth < 0:
        raise DataError(f"bandwidth must be non-negative, got {bandwidth}")
    n_lags = min(int(math.floor(bandwidth)), n - 1)

    centered = arr - arr.mean(axis=0)
    gamma0 = centered.T @ centered / n
    omega = gamma0.copy()
    one_sided = gamma0.copy()
    for j in range(1, n_lags + 1):
        w = 1.0 - j / (bandwidth + 1.0)
        gamma_j = centered[j:].T @ centered[:-j] / n
        omega += w * (gamma_j + gamma_j.T)
        one_sided += w * gamma_j
    if scalar_input:
        return LongRunCovariance(
            float(omega[0, 0]), float(one_sided[0, 0]), float(gamma0[0, 0]), bandwidth, kernel
        )
    return LongRunCovariance(omega, one_sided, gamma0, bandwidth, kernel)


def wald_f_test(unrestricted: OlsFit, restricted: OlsFit, q: int) -> tuple[float, float]:
    """F test of a nested restriction via the RSS comparison.

    F = ((RSS_r - RSS_u)/q) / (RSS_u/df_u), p-value upper-tail F(q, df_u).
    """
    if q < 1:
        raise DataError(f"number of restrictions must be >= 1, got {q}")
    if unrestricted.nobs != restricted.nobs or not np.allclose(
        unrestricted.response, restricted.response, rtol=0.0, atol=0.0
    ):
        raise DataError("wald_f_test requires both fits to share the same response")
    rss_u, rss_r = unrestricted.rss, restricted.rss
    diff = rss_r - rss_u
    if diff < -1e-10 * max(1.0, rss_u):
        raise NumericalError(
            f"nesting violated: restricted RSS {rss_r:.6g} < unrestricted RSS {rss_u:.6g}"
        )
    diff = max(diff, 0.0)
    df_u = unrestricted.df_resid
    if rss_u == 0.0:
        f_stat = 0.0 if diff == 0.0 else math.inf
    else:
        f_stat = (diff / q) / (rss_u / df_u)
    p = f_pvalue(f_stat, q, df_u) if math.isfinite(f_stat) else 0.0
    return f_stat, p
