from pathlib import Path

import numpy as np
import pytest

from ardlkit import Dataset, TimeSeries

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_CSV = REPO_ROOT / "data" / "us_1990_2021.csv"


@pytest.fixture(scope="session")
def fixture_path() -> Path:
    return FIXTURE_CSV


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20240901)


def make_dataset(named_arrays: dict[str, np.ndarray], start_year: int = 1900) -> Dataset:
    return Dataset.from_series(
        [TimeSeries(name, start_year, values) for name, values in named_arrays.items()]
    )
