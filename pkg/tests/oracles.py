"""Independent oracles for the test suite.

These deliberately avoid the library's own solution paths: OLS via plain
normal equations solved by hand-rolled Gaussian elimination, moments via
a direct two-pass computation, quantiles via adaptive quadrature of the
explicit density.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import quad


def gaussian_elimination_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a x = b by Gaussian elimination with partial pivoting."""
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    n = a.shape[0]
    aug = np.column_stack([a, b])
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(aug[col:, col])))
        if abs(aug[pivot, col]) == 0.0:
            raise ZeroDivisionError("singular matrix")
        if pivot != col:
            aug[[col, pivot]] = aug[[pivot, col]]
        for row in range(col + 1, n):
            factor = aug[row, col] / aug[col, col]
            aug[row, col:] -= factor * aug[col, col:]
    x = np.zeros(n)
    for row in range(n - 1, -1, -1):
        x[row] = (aug[row, -1] - aug[row, row + 1 : n] @ x[row + 1 : n]) / aug[row, row]
    return x


def normal_equations_ols(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """(X'X)^-1 X'y via explicit normal equations and Gaussian elimination."""
    return gaussian_elimination_solve(x.T @ x, x.T @ y)


def two_pass_moments(x: np.ndarray) -> dict[str, float]:
    """Direct two-pass mean/std/skewness/kurtosis (moment-ratio convention)."""
    x = np.asarray(x, dtype=float)
    n = x.size
    mean = float(sum(x) / n)
    d = x - mean
    m2 = float(sum(d**2) / n)
    m3 = float(sum(d**3) / n)
    m4 = float(sum(d**4) / n)
    return {
        "mean": mean,
        "std_dev": math.sqrt(sum(d**2) / (n - 1)),
        "skewness": m3 / m2**1.5,
        "kurtosis": m4 / m2**2,
    }


def t_density(x: float, df: float) -> float:
    c = math.gamma((df + 1) / 2.0) / (math.sqrt(df * math.pi) * math.gamma(df / 2.0))
    return c * (1.0 + x * x / df) ** (-(df + 1) / 2.0)


def t_cdf_quadrature(x: float, df: float) -> float:
    """CDF of Student-t by adaptive quadrature of the explicit density."""
    if x >= 0.0:
        tail, _ = quad(t_density, x, np.inf, args=(df,), epsabs=1e-13, epsrel=1e-13)
        return 1.0 - tail
    tail, _ = quad(t_density, -np.inf, x, args=(df,), epsabs=1e-13, epsrel=1e-13)
    return tail


def t_quantile_quadrature(p: float, df: float) -> float:
    """Invert the quadrature CDF by bisection."""
    lo, hi = -1000.0, 1000.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if t_cdf_quadrature(mid, df) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12:
            break
    return 0.5 * (lo + hi)


def rss_f_stat(rss_r: float, rss_u: float, q: int, df_u: int) -> float:
    """The F statistic straight from the two residual sums of squares."""
    return ((rss_r - rss_u) / q) / (rss_u / df_u)


def ar1_series(rng: np.random.Generator, n: int, phi: float, sd: float = 1.0) -> np.ndarray:
    e = rng.normal(0.0, sd, n)
    out = np.empty(n)
    out[0] = e[0] if phi == 0.0 else e[0] / math.sqrt(1.0 - phi * phi)
    for t in range(1, n):
        out[t] = phi * out[t - 1] + e[t]
    return out
