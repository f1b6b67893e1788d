"""Containers for aligned annual time series and their basic transforms.

A :class:`TimeSeries` is a named, gap-free run of annual observations; a
:class:`Dataset` is a collection of such series forced onto a common year
span. Transforms (log, lag, difference) are pure functions that return new
series with deterministically adjusted spans.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .distributions import chi_square
from .exceptions import DataError

__all__ = [
    "TimeSeries",
    "Dataset",
    "SummaryStats",
    "load_csv",
    "log_transform",
    "difference",
    "lag",
    "summary_stats",
]


@dataclass(frozen=True)
class TimeSeries:
    """A named annual series: one finite value per year, no gaps."""

    name: str
    start_year: int
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise DataError(f"series {self.name!r}: values must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr))[0])
            raise DataError(
                f"series {self.name!r}: non-finite value in year {self.start_year + bad}"
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "start_year", int(self.start_year))

    def __len__(self) -> int:
        return self.values.size

    @property
    def end_year(self) -> int:
        return self.start_year + len(self) - 1

    @property
    def years(self) -> np.ndarray:
        return np.arange(self.start_year, self.start_year + len(self))

    def slice_years(self, start: int, end: int) -> "TimeSeries":
        """Return the sub-series covering [start, end] inclusive."""
        if start < self.start_year or end > self.end_year or start > end:
            raise DataError(
                f"series {self.name!r}: requested span {start}-{end} outside "
                f"{self.start_year}-{self.end_year}"
            )
        i = start - self.start_year
        return TimeSeries(self.name, start, self.values[i : i + (end - start + 1)])

    def rename(self, name: str) -> "TimeSeries":
        return TimeSeries(name, self.start_year, self.values)


@dataclass(frozen=True)
class Dataset:
    """Aligned annual series keyed by name; all members share one year span."""

    series: dict[str, TimeSeries] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.series:
            raise DataError("dataset must contain at least one series")
        spans = {(s.start_year, len(s)) for s in self.series.values()}
        if len(spans) > 1:
            raise DataError(f"series are not aligned: spans {sorted(spans)}")
        for key, s in self.series.items():
            if key != s.name:
                raise DataError(f"series key {key!r} does not match series name {s.name!r}")

    @classmethod
    def from_series(cls, series: Iterable[TimeSeries]) -> "Dataset":
        """Align series by intersecting year spans, then construct."""
        items = list(series)
        if not items:
            raise DataError("dataset must contain at least one series")
        names = [s.name for s in items]
        if len(set(names)) != len(names):
            raise DataError("duplicate series names")
        start = max(s.start_year for s in items)
        end = min(s.end_year for s in items)
        if start > end:
            raise DataError("series have no overlapping years")
        return cls({s.name: s.slice_years(start, end) for s in items})

    def __getitem__(self, name: str) -> TimeSeries:
        try:
            return self.series[name]
        except KeyError:
            raise DataError(f"no series named {name!r}; have {sorted(self.series)}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.series

    def __len__(self) -> int:
        return self.n_obs

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.series)

    @property
    def n_obs(self) -> int:
        return len(next(iter(self.series.values())))

    @property
    def start_year(self) -> int:
        return next(iter(self.series.values())).start_year

    @property
    def year_range(self) -> tuple[int, int]:
        first = next(iter(self.series.values()))
        return first.start_year, first.end_year

    def subset(self, names: Sequence[str]) -> "Dataset":
        return Dataset({n: self[n] for n in names})

    def with_series(self, s: TimeSeries) -> "Dataset":
        """Return a new dataset with `s` added (aligned by intersection)."""
        return Dataset.from_series(list(self.series.values()) + [s])


@dataclass(frozen=True)
class SummaryStats:
    """Descriptive statistics plus the Jarque-Bera normality test.

    Skewness and kurtosis are moment ratios with n denominators
    (m3/m2^1.5 and m4/m2^2, kurtosis not excess); std_dev uses the n-1
    denominator and is reported separately for display.
    """

    n: int
    mean: float
    median: float
    maximum: float
    minimum: float
    std_dev: float
    skewness: float
    kurtosis: float
    jarque_bera: float
    jb_probability: float


def load_csv(path: str | Path, schema: Sequence[str] | None = None) -> Dataset:
    """Load an annual dataset from a CSV file.

    The first column must be `year`; every other column becomes a series.
    Rows are sorted by year before validation, duplicate or non-contiguous
    years are rejected with the offending row number (1-based, header is
    row 1), and every cell must parse as a finite number.

    Parameters
    ----------
    path : str or Path
        CSV file with a header row.
    schema : sequence of str, optional
        Column names (beyond `year`) that must all be present. Extra
        columns are still loaded.
    """
    path = Path(path)
    if not path.exists():
        raise DataError(f"no such file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: empty file") from None
        header = [h.strip() for h in header]
        if not header or header[0] != "year":
            raise DataError(f"{path}: first column must be 'year', got {header[:1]!r}")
        columns = header[1:]
        if len(set(columns)) != len(columns):
            raise DataError(f"{path}: duplicate column names in header")
        if schema is not None:
            missing = [c for c in schema if c not in columns]
            if missing:
                raise DataError(f"{path}: missing required columns {missing}")
        rows: list[tuple[int, list[float], int]] = []
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise DataError(
                    f"{path}: row {line_no} has {len(row)} cells, expected {len(header)}"
                )
            try:
                year = int(row[0])
            except ValueError:
                raise DataError(
                    f"{path}: non-integer year {row[0]!r} at row {line_no}"
                ) from None
            vals = []
            for col, cell in zip(columns, row[1:]):
                try:
                    v = float(cell)
                except ValueError:
                    raise DataError(
                        f"{path}: non-numeric cell {cell!r} at row {line_no}, column {col!r}"
                    ) from None
                if not math.isfinite(v):
                    raise DataError(
                        f"{path}: non-finite value at row {line_no}, column {col!r}"
                    )
                vals.append(v)
            rows.append((year, vals, line_no))
    if not rows:
        raise DataError(f"{path}: no data rows")
    rows.sort(key=lambda r: r[0])
    years = [r[0] for r in rows]
    for i in range(1, len(years)):
        if years[i] == years[i - 1]:
            raise DataError(f"{path}: duplicate year {years[i]} at row {rows[i][2]}")
        if years[i] != years[i - 1] + 1:
            raise DataError(f"{path}: non-contiguous years at row {rows[i][2]}")
    data = np.array([r[1] for r in rows], dtype=float)
    series = [TimeSeries(col, years[0], data[:, j]) for j, col in enumerate(columns)]
    return Dataset.from_series(series)


def log_transform(s: TimeSeries) -> TimeSeries:
    """Element-wise natural log; the name gains an 'L' prefix.

    Raises
    ------
    DataError
        If any value is non-positive (reports the offending year).
    """
    bad = np.flatnonzero(s.values <= 0.0)
    if bad.size:
        raise DataError(
            f"series {s.name!r}: non-positive value in year {s.start_year + int(bad[0])}, "
            "cannot take log"
        )
    return TimeSeries("L" + s.name, s.start_year, np.log(s.values))


def difference(s: TimeSeries, order: int = 1) -> TimeSeries:
    """Apply the difference operator `order` times; the span shrinks to match."""
    if order < 1:
        raise DataError(f"difference order must be >= 1, got {order}")
    if order >= len(s):
        raise DataError(
            f"series {s.name!r}: cannot take {order} differences of {len(s)} observations"
        )
    return TimeSeries(s.name, s.start_year + order, np.diff(s.values, n=order))


def lag(s: TimeSeries, k: int) -> TimeSeries:
    """Shift so element t holds the original value at t-k; first k years drop."""
    if k < 0:
        raise DataError(f"lag must be non-negative, got {k}")
    if k >= len(s):
        raise DataError(f"series {s.name!r}: lag {k} >= length {len(s)}")
    if k == 0:
        return s
    return TimeSeries(s.name, s.start_year + k, s.values[: len(s) - k])


def moment_ratios(values: np.ndarray) -> tuple[float, float]:
    """Skewness m3/m2^1.5 and kurtosis m4/m2^2 with n denominators."""
    x = np.asarray(values, dtype=float)
    m = x.mean()
    d = x - m
    m2 = np.mean(d**2)
    if m2 <= 0.0:
        raise DataError("zero variance: skewness/kurtosis undefined")
    m3 = np.mean(d**3)
    m4 = np.mean(d**4)
    return float(m3 / m2**1.5), float(m4 / m2**2)


def jarque_bera_stat(skewness: float, kurtosis: float, n: int) -> float:
    """(n/6) * (S^2 + (K-3)^2 / 4)."""
    return n / 6.0 * (skewness**2 + (kurtosis - 3.0) ** 2 / 4.0)


def summary_stats(s: TimeSeries) -> SummaryStats:
    """Descriptive statistics with the Jarque-Bera test and its p-value."""
    x = s.values
    n = x.size
    if n < 4:
        raise DataError(f"series {s.name!r}: need n >= 4 for kurtosis, got {n}")
    skew, kurt = moment_ratios(x)
    jb = jarque_bera_stat(skew, kurt, n)
    return SummaryStats(
        n=n,
        mean=float(x.mean()),
        median=float(np.median(x)),
        maximum=float(x.max()),
        minimum=float(x.min()),
        std_dev=float(x.std(ddof=1)),
        skewness=skew,
        kurtosis=kurt,
        jarque_bera=jb,
        jb_probability=chi_square(2).survival(jb),
    )
