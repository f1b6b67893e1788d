"""Seeded synthetic data generation for the test harness and demos.

Two kinds of systems: `cointegrated` builds random-walk regressors plus a
dependent variable tied to them through a stationary AR(1) equilibrium
error (the spec's beta/intercept are the ground truth); `random_walks`
builds fully independent unit-root series with no relation at all.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigError
from .timeseries import Dataset, TimeSeries

__all__ = ["SyntheticSpec", "generate_synthetic"]


@dataclass(frozen=True)
class SyntheticSpec:
    kind: str = "cointegrated"  # or "random_walks"
    n: int = 200
    dependent: str = "Y"
    regressors: tuple[str, ...] = ("X1",)
    beta: tuple[float, ...] = (2.0,)
    intercept: float = 1.0
    error_ar: float = 0.4
    error_sd: float = 1.0
    regressor_sd: float = 1.0
    start_year: int = 1900

    def __post_init__(self) -> None:
        object.__setattr__(self, "regressors", tuple(self.regressors))
        object.__setattr__(self, "beta", tuple(float(b) for b in self.beta))
        if self.kind not in ("cointegrated", "random_walks"):
            raise ConfigError(f"unknown synthetic kind {self.kind!r}")
        if self.n < 20:
            raise ConfigError(f"n must be >= 20, got {self.n}")
        if self.kind == "cointegrated" and len(self.beta) != len(self.regressors):
            raise ConfigError(
                f"{len(self.beta)} beta values for {len(self.regressors)} regressors"
            )
        if not abs(self.error_ar) < 1.0:
            raise ConfigError(f"error_ar must lie inside the unit circle, got {self.error_ar}")
        if self.error_sd <= 0 or self.regressor_sd <= 0:
            raise ConfigError("innovation standard deviations must be positive")
        if self.dependent in self.regressors:
            raise ConfigError("dependent name collides with a regressor name")


def _ar1(rng: np.random.Generator, n: int, phi: float, sd: float) -> np.ndarray:
    # stationary start draws from the marginal distribution
    e = rng.normal(0.0, sd, size=n)
    u = np.empty(n)
    u[0] = e[0] / np.sqrt(1.0 - phi**2) if phi != 0.0 else e[0]
    for t in range(1, n):
        u[t] = phi * u[t - 1] + e[t]
    return u


def generate_synthetic(spec: SyntheticSpec, seed: int) -> Dataset:
    """Deterministically generate a dataset for `spec` from `seed`."""
    rng = np.random.default_rng(seed)
    n = spec.n
    x = spec.regressor_sd * rng.normal(size=(n, len(spec.regressors))).cumsum(axis=0)
    series = []
    if spec.kind == "cointegrated":
        u = _ar1(rng, n, spec.error_ar, spec.error_sd)
        y = spec.intercept + x @ np.asarray(spec.beta) + u
    else:
        y = spec.error_sd * rng.normal(size=n).cumsum()
    series.append(TimeSeries(spec.dependent, spec.start_year, y))
    for j, name in enumerate(spec.regressors):
        series.append(TimeSeries(name, spec.start_year, x[:, j]))
    return Dataset.from_series(series)
