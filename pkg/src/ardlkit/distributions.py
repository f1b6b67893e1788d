"""Probability distributions backing every p-value in the toolkit.

Normal, Student-t, F, and chi-square CDFs, survival functions, and
quantiles. Survival functions are evaluated directly (not as 1 - cdf) so
the upper tail keeps full precision. Convention: t statistics get
two-sided p-values, F and chi-square statistics upper-tail p-values.
"""

from __future__ import annotations

from dataclasses import dataclass

from scipy import stats as _stats

__all__ = [
    "Distribution",
    "normal",
    "student_t",
    "f_dist",
    "chi_square",
    "t_pvalue",
    "f_pvalue",
    "chi2_pvalue",
]

_KINDS = ("normal", "student_t", "f", "chi_square")


@dataclass(frozen=True)
class Distribution:
    """One of the four reference distributions, with degrees of freedom."""

    kind: str
    df1: float | None = None
    df2: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        needs = {"normal": 0, "student_t": 1, "chi_square": 1, "f": 2}[self.kind]
        dfs = [d for d in (self.df1, self.df2) if d is not None]
        if len(dfs) != needs:
            raise ValueError(f"{self.kind} takes {needs} df parameter(s), got {len(dfs)}")
        if any(d <= 0 for d in dfs):
            raise ValueError(f"{self.kind}: degrees of freedom must be positive, got {dfs}")

    @property
    def _frozen(self):
        if self.kind == "normal":
            return _stats.norm
        if self.kind == "student_t":
            return _stats.t(self.df1)
        if self.kind == "chi_square":
            return _stats.chi2(self.df1)
        return _stats.f(self.df1, self.df2)

    def cdf(self, x: float) -> float:
        return float(self._frozen.cdf(x))

    def survival(self, x: float) -> float:
        return float(self._frozen.sf(x))

    def quantile(self, p: float) -> float:
        if not 0.0 < p < 1.0:
            raise ValueError(f"quantile probability must lie in (0, 1), got {p}")
        return float(self._frozen.ppf(p))


def normal() -> Distribution:
    return Distribution("normal")


def student_t(df: float) -> Distribution:
    return Distribution("student_t", df)


def f_dist(df1: float, df2: float) -> Distribution:
    return Distribution("f", df1, df2)


def chi_square(df: float) -> Distribution:
    return Distribution("chi_square", df)


def t_pvalue(t_stat: float, df: float) -> float:
    """Two-sided p-value of a t statistic."""
    return 2.0 * student_t(df).survival(abs(t_stat))


def f_pvalue(f_stat: float, df1: float, df2: float) -> float:
    """Upper-tail p-value of an F statistic."""
    return f_dist(df1, df2).survival(f_stat)


def chi2_pvalue(stat: float, df: float) -> float:
    """Upper-tail p-value of a chi-square statistic."""
    return chi_square(df).survival(stat)
