import numpy as np
import pytest
from numpy.testing import assert_allclose

from ardlkit import (
    ConfigError,
    DataError,
    TimeSeries,
    UnitRootSpec,
    adf_test,
    classify_integration,
    design_matrix,
    dfgls_test,
    ols_fit,
    pp_test,
)
from ardlkit.unitroot import gls_detrend, schwert_max_lags

from oracles import ar1_series


def ts(values, name="y"):
    return TimeSeries(name, 1900, np.asarray(values, dtype=float))


def random_walk(seed, n, drift=0.0):
    rng = np.random.default_rng(seed)
    return np.cumsum(drift + rng.normal(size=n))


class TestSpecValidation:
    def test_unknown_test(self):
        with pytest.raises(ConfigError):
            UnitRootSpec(test="kpss")

    def test_lag_options_only_for_adf_dfgls(self):
        with pytest.raises(ConfigError, match="lag options"):
            UnitRootSpec(test="pp", lags=2)

    def test_bandwidth_only_for_pp(self):
        with pytest.raises(ConfigError, match="bandwidth"):
            UnitRootSpec(test="adf", bandwidth=3.0)

    def test_series_guards(self):
        with pytest.raises(DataError, match="constant"):
            adf_test(ts([1.0] * 30))
        with pytest.raises(DataError, match="too short"):
            adf_test(ts([1.0, 2.0, 1.5]))


class TestAdf:
    def test_p0_statistic_equals_direct_ols_oracle(self):
        y = random_walk(3, 120)
        res = adf_test(ts(y), UnitRootSpec(test="adf", lags=0))
        # oracle: explicit regression of dy on {1, y_{t-1}}
        dy = np.diff(y)
        X = design_matrix([("level", y[:-1])], intercept=True)
        oracle = ols_fit(dy, X)
        assert res.statistic == pytest.approx(oracle.t_stat("level"), abs=1e-10)
        assert res.n_effective == 119
        assert res.lags_used == 0

    def test_lagged_design_statistic_matches_oracle(self):
        y = random_walk(4, 150)
        res = adf_test(ts(y), UnitRootSpec(test="adf", lags=2))
        dy = np.diff(y)
        X = design_matrix(
            [("level", y[2:-1]), ("d1", dy[1:-1]), ("d2", dy[:-2])], intercept=True
        )
        oracle = ols_fit(dy[2:], X)
        assert res.statistic == pytest.approx(oracle.t_stat("level"), abs=1e-10)

    def test_affine_invariance(self):
        y = random_walk(5, 200)
        r1 = adf_test(ts(y), UnitRootSpec(test="adf"))
        r2 = adf_test(ts(250.0 * y + 3.0), UnitRootSpec(test="adf"))
        assert r2.statistic == pytest.approx(r1.statistic, abs=1e-9)
        assert r2.lags_used == r1.lags_used

    def test_trend_subtraction_moves_statistic_left(self):
        # a trend-stationary series looks less stationary to the
        # constant-case test until the trend is removed
        rng = np.random.default_rng(12)
        t = np.arange(300.0)
        y = 0.05 * t + ar1_series(rng, 300, 0.5)
        with_trend = adf_test(ts(y), UnitRootSpec(test="adf"))
        without = adf_test(ts(y - 0.05 * t), UnitRootSpec(test="adf"))
        assert without.statistic < with_trend.statistic

    def test_critical_values_asymptote(self):
        res = adf_test(ts(random_walk(1, 100000)), UnitRootSpec(test="adf", lags=0))
        assert res.critical_values["1%"] == pytest.approx(-3.43035, abs=5e-4)
        assert res.critical_values["5%"] == pytest.approx(-2.86154, abs=5e-4)
        assert res.critical_values["10%"] == pytest.approx(-2.56677, abs=5e-4)

    def test_auto_lag_bounded_by_schwert(self):
        y = random_walk(6, 100)
        res = adf_test(ts(y), UnitRootSpec(test="adf"))
        assert res.lags_used <= schwert_max_lags(99)

    def test_significance_markers_consistent(self):
        for seed in range(40):
            rng = np.random.default_rng(seed)
            y = ar1_series(rng, 80, float(rng.uniform(0.2, 0.999)))
            res = adf_test(ts(y), UnitRootSpec(test="adf"))
            cv = res.critical_values
            expected = (
                "***" if res.statistic < cv["1%"]
                else "**" if res.statistic < cv["5%"]
                else "*" if res.statistic < cv["10%"]
                else ""
            )
            assert res.significance == expected

    def test_marker_pattern_weak_level_strong_difference(self):
        # a -0.155 level statistic carries no stars at annual sample sizes
        # while a -4.954 difference statistic is significant at 1%
        from dataclasses import replace

        y = random_walk(17, 32)
        base = adf_test(ts(y), UnitRootSpec(test="adf", lags=0))
        level = replace(base, statistic=-0.155)
        diff = replace(base, statistic=-4.954)
        assert level.significance == ""
        assert diff.significance == "***"
        assert classify_integration(level, diff).order == "I(1)"


class TestPhillipsPerron:
    def test_bandwidth_zero_equals_adf0(self):
        y = random_walk(7, 150)
        a = adf_test(ts(y), UnitRootSpec(test="adf", lags=0))
        p = pp_test(ts(y), UnitRootSpec(test="pp", bandwidth=0.0))
        assert p.statistic == pytest.approx(a.statistic, abs=1e-10)
        assert p.critical_values == a.critical_values

    def test_affine_invariance(self):
        y = random_walk(8, 200)
        r1 = pp_test(ts(y), UnitRootSpec(test="pp"))
        r2 = pp_test(ts(0.001 * y + 9.0), UnitRootSpec(test="pp"))
        assert r2.statistic == pytest.approx(r1.statistic, abs=1e-9)

    def test_size_on_ma1_noise_random_walk(self):
        # MA(1) innovations around a random walk, n=1000
        non_reject = 0
        reps = 1000
        for seed in range(reps):
            rng = np.random.default_rng(seed)
            e = rng.normal(size=1001)
            y = np.cumsum(e[1:] + 0.5 * e[:-1])
            res = pp_test(ts(y), UnitRootSpec(test="pp"))
            non_reject += not res.rejects("5%")
        assert 0.88 <= non_reject / reps <= 0.99

    def test_power_on_stationary_ar1(self):
        reject = 0
        reps = 1000
        for seed in range(reps):
            y = ar1_series(np.random.default_rng(seed), 500, 0.3)
            reject += pp_test(ts(y), UnitRootSpec(test="pp")).rejects("5%")
        assert reject / reps >= 0.95

    def test_reports_bandwidth(self):
        res = pp_test(ts(random_walk(9, 64)), UnitRootSpec(test="pp"))
        assert res.bandwidth_used == 3.0
        assert res.lags_used is None


class TestDfGls:
    def test_demeaning_matches_explicit_quasi_difference_oracle(self):
        y = random_walk(10, 90, drift=0.02) + 5.0
        detrended = gls_detrend(y, "constant")
        # oracle: explicit quasi-differencing and 1-regressor least squares
        n = len(y)
        alpha = 1.0 - 7.0 / n
        zy = np.concatenate([[y[0]], y[1:] - alpha * y[:-1]])
        zd = np.concatenate([[1.0], np.full(n - 1, 1.0 - alpha)])
        mu = float(zd @ zy) / float(zd @ zd)
        assert_allclose(detrended, y - mu, atol=1e-10)

    def test_trend_case_detrending_oracle(self):
        y = random_walk(11, 80) + 0.3 * np.arange(80.0)
        detrended = gls_detrend(y, "constant_trend")
        n = len(y)
        alpha = 1.0 - 13.5 / n
        d = np.column_stack([np.ones(n), np.arange(1.0, n + 1.0)])
        zy = np.concatenate([[y[0]], y[1:] - alpha * y[:-1]])
        zd = np.vstack([d[0], d[1:] - alpha * d[:-1]])
        coef = np.linalg.lstsq(zd, zy, rcond=None)[0]
        assert_allclose(detrended, y - d @ coef, atol=1e-10)

    def test_affine_invariance(self):
        y = random_walk(12, 150)
        r1 = dfgls_test(ts(y), UnitRootSpec(test="dfgls"))
        r2 = dfgls_test(ts(42.0 * y + 17.0), UnitRootSpec(test="dfgls"))
        assert r2.statistic == pytest.approx(r1.statistic, abs=1e-9)

    def test_size_on_random_walk(self):
        non_reject = 0
        reps = 1000
        for seed in range(reps):
            y = random_walk(seed, 500)
            res = dfgls_test(ts(y), UnitRootSpec(test="dfgls", lags=0))
            non_reject += not res.rejects("5%")
        assert non_reject / reps >= 0.90

    def test_power_exceeds_near_unit_root(self):
        # DF-GLS should reject a stationary-but-persistent series more often
        # than ADF at the same sample size
        adf_rej = gls_rej = 0
        for seed in range(200):
            y = ar1_series(np.random.default_rng(seed), 150, 0.90)
            adf_rej += adf_test(ts(y), UnitRootSpec(test="adf", lags=0)).rejects("5%")
            gls_rej += dfgls_test(ts(y), UnitRootSpec(test="dfgls", lags=0)).rejects("5%")
        assert gls_rej > adf_rej

    def test_marker_strong_level_statistic(self):
        # a -5.064 demeaned statistic rejects at 1% at annual sample sizes
        from dataclasses import replace

        y = random_walk(18, 32)
        base = dfgls_test(ts(y), UnitRootSpec(test="dfgls", lags=0))
        assert replace(base, statistic=-5.064).significance == "***"

    def test_trend_case_critical_values_from_ers_table(self):
        y = random_walk(13, 200)
        res = dfgls_test(ts(y), UnitRootSpec(test="dfgls", deterministic="constant_trend", lags=0))
        # n_effective = 199 is just under the T=200 table row
        assert res.critical_values["5%"] == pytest.approx(-2.93, abs=0.01)
        big = dfgls_test(
            ts(random_walk(14, 100000)),
            UnitRootSpec(test="dfgls", deterministic="constant_trend", lags=0),
        )
        assert big.critical_values["5%"] == pytest.approx(-2.89, abs=0.005)


class TestClassification:
    def _result(self, stat):
        y = random_walk(15, 100)
        base = adf_test(ts(y), UnitRootSpec(test="adf", lags=0))
        from dataclasses import replace

        return replace(base, statistic=stat)

    def test_three_cases(self):
        cv5 = self._result(0.0).critical_values["5%"]
        stationary = self._result(cv5 - 1.0)
        non_stationary = self._result(cv5 + 1.0)
        assert classify_integration(non_stationary, stationary).order == "I(1)"
        assert classify_integration(stationary, stationary).order == "I(0)"
        assert classify_integration(non_stationary, non_stationary).order == "higher"

    def test_i0_even_when_diff_also_rejects(self):
        cv5 = self._result(0.0).critical_values["5%"]
        stationary = self._result(cv5 - 1.0)
        assert classify_integration(stationary, stationary).order == "I(0)"

    def test_mixed_families_rejected(self):
        y = random_walk(16, 100)
        a = adf_test(ts(y), UnitRootSpec(test="adf", lags=0))
        p = pp_test(ts(y), UnitRootSpec(test="pp"))
        with pytest.raises(DataError, match="same test family"):
            classify_integration(a, p)
