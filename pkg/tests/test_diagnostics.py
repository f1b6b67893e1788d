import numpy as np
import pytest

from ardlkit import (
    DataError,
    breusch_godfrey,
    breusch_pagan_godfrey,
    design_matrix,
    f_dist,
    granger_pairwise,
    jarque_bera,
    load_csv,
    ols_fit,
)
from ardlkit.timeseries import jarque_bera_stat, moment_ratios

from conftest import make_dataset
from oracles import ar1_series, rss_f_stat

PUBLISHED_F_PAIRS = [
    ("LGDP", 4.95374, 0.0154),
    ("LCO2>LGDP", 0.84545, 0.4413),
    ("LAI", 5.58219, 0.0099),
    ("LCO2>LAI", 1.83762, 0.1801),
    ("LSMC", 8.65988, 0.0014),
    ("LCO2>LSMC", 1.67744, 0.2072),
    ("LICT", 10.7905, 0.0004),
    ("LCO2>LICT", 0.0616, 0.9404),
    ("LPOP", 4.60632, 0.0198),
    ("LCO2>LPOP", 0.63614, 0.5377),
]


class TestJarqueBera:
    def test_zero_at_normal_moment_point(self):
        assert jarque_bera_stat(0.0, 3.0, 100) == 0.0

    def test_matches_paper_lco2_column(self):
        jb = jarque_bera_stat(-0.4666, 2.6354, 32)
        assert jb == pytest.approx(1.3384, abs=2e-3)
        res_p = np.exp(-jb / 2.0)
        assert res_p == pytest.approx(0.5121, abs=2e-3)

    def test_statistic_follows_from_sample_moments(self, rng):
        x = rng.normal(size=200) ** 2  # skewed sample
        res = jarque_bera(x)
        skew, kurt = moment_ratios(x)
        assert res.statistic == pytest.approx(jarque_bera_stat(skew, kurt, 200), abs=1e-9)
        assert res.df == 2.0

    def test_size_on_normal_samples(self):
        ok = 0
        reps = 500
        for seed in range(reps):
            x = np.random.default_rng(seed).normal(size=5000)
            ok += jarque_bera(x).p_value > 0.01
        assert ok / reps >= 0.98

    def test_decision_strings(self, rng):
        good = jarque_bera(rng.normal(size=500))
        assert good.decision == "Residuals are normally distributed"
        bad = jarque_bera(rng.exponential(size=500))
        assert bad.decision == "Residuals are not normally distributed"

    def test_zero_variance_rejected(self):
        with pytest.raises(DataError):
            jarque_bera(np.ones(50))


def exact_white_fit(n=60, seed=3):
    """A fit whose residuals have exactly zero lag-1 sample autocovariance
    (support on even indices) and are exactly orthogonal to the design."""
    rng = np.random.default_rng(seed)
    e = np.zeros(n)
    e[::2] = rng.normal(size=(n + 1) // 2)
    e[::2] -= e[::2].mean() * 1.0  # mean zero over its support
    e -= e.mean()
    e[1::2] = 0.0  # keep odd entries exactly zero
    x = np.zeros(n)
    x[1::2] = rng.normal(size=n // 2)  # regressor lives on odd indices
    X = design_matrix([("x", x)], intercept=True)
    # orthogonalize e against the design exactly
    q, _ = np.linalg.qr(X.data)
    e = e - q @ (q.T @ e)
    e[1::2] = 0.0  # projection keeps odd-support structure of x only approx
    e -= e.mean()
    # re-orthogonalize against x only (x has odd support, e even: already 0)
    y = X.data @ np.array([1.0, 2.0]) + e
    return ols_fit(y, X), e


class TestBreuschGodfrey:
    def test_exactly_white_residuals_give_zero_statistic(self):
        fit, e = exact_white_fit()
        res = breusch_godfrey(fit, order=1)
        assert res.statistic == pytest.approx(0.0, abs=1e-12)
        assert res.p_value == pytest.approx(1.0)

    def test_power_on_ar1_residuals(self):
        rejections = 0
        reps = 500
        for seed in range(reps):
            rng = np.random.default_rng(seed)
            n = 200
            x = rng.normal(size=n)
            u = ar1_series(rng, n, 0.6)
            fit = ols_fit(1.0 + 0.5 * x + u, design_matrix([("x", x)]))
            rejections += breusch_godfrey(fit, order=2).p_value < 0.05
        assert rejections / reps >= 0.95

    def test_statistic_invariant_to_residual_scale(self, rng):
        n = 120
        x = rng.normal(size=n)
        u = ar1_series(rng, n, 0.4)
        f1 = ols_fit(1.0 + x + u, design_matrix([("x", x)]))
        f2 = ols_fit(250.0 * (1.0 + x + u), design_matrix([("x", x)]))
        r1 = breusch_godfrey(f1, order=2)
        r2 = breusch_godfrey(f2, order=2)
        assert r2.statistic == pytest.approx(r1.statistic, rel=1e-9)

    def test_decision_string(self, rng):
        n = 300
        x = rng.normal(size=n)
        fit = ols_fit(1.0 + x + rng.normal(size=n), design_matrix([("x", x)]))
        res = breusch_godfrey(fit, order=2)
        assert res.p_value >= 0.05
        assert res.decision == "No serial correlation exists"

    def test_order_validation(self, rng):
        x = rng.normal(size=30)
        fit = ols_fit(x + rng.normal(size=30), design_matrix([("x", x)]))
        with pytest.raises(DataError, match="too large"):
            breusch_godfrey(fit, order=28)
        with pytest.raises(DataError):
            breusch_godfrey(fit, order=0)


class TestBreuschPaganGodfrey:
    def test_size_on_homoscedastic_errors(self):
        rejections = 0
        reps = 500
        for seed in range(reps):
            rng = np.random.default_rng(seed)
            n = 500
            x = rng.normal(size=n)
            fit = ols_fit(1.0 + x + rng.normal(size=n), design_matrix([("x", x)]))
            rejections += breusch_pagan_godfrey(fit).p_value < 0.05
        assert rejections / reps <= 0.10

    def test_power_on_variance_proportional_to_x_squared(self):
        # positive regressor (like a log level), error variance ~ x^2; the
        # raw-regressor auxiliary regression picks the pattern up
        rejections = 0
        reps = 500
        for seed in range(reps):
            rng = np.random.default_rng(seed)
            n = 500
            x = rng.uniform(0.5, 3.0, size=n)
            u = x * rng.normal(size=n)
            fit = ols_fit(1.0 + x + u, design_matrix([("x", x)]))
            rejections += breusch_pagan_godfrey(fit).p_value < 0.05
        assert rejections / reps >= 0.90

    def test_df_is_slope_count(self, rng):
        n = 80
        cols = [(f"x{j}", rng.normal(size=n)) for j in range(3)]
        X = design_matrix(cols)
        fit = ols_fit(rng.normal(size=n), X)
        assert breusch_pagan_godfrey(fit).df == 3.0

    def test_decision_string(self, rng):
        n = 400
        x = rng.normal(size=n)
        fit = ols_fit(1.0 + x + rng.normal(size=n), design_matrix([("x", x)]))
        res = breusch_pagan_godfrey(fit)
        assert res.decision == "No heteroscedasticity exists"

    def test_requires_intercept(self, rng):
        x = rng.normal(size=40)
        fit = ols_fit(x + rng.normal(size=40), design_matrix([("x", x)], intercept=False))
        with pytest.raises(DataError, match="intercept"):
            breusch_pagan_godfrey(fit)


class TestGranger:
    def test_obs_arithmetic_on_fixture(self, fixture_path):
        ds = load_csv(fixture_path)
        logs = make_dataset(
            {("L" + n): np.log(ds[n].values) for n in ds.names}, start_year=1990
        )
        results = granger_pairwise(logs, ["LCO2", "LGDP", "LAI", "LSMC", "LICT", "LPOP"], lag=2)
        assert len(results) == 10
        assert all(r.obs == 30 for r in results)
        # table layout: other->focal first, then reverse, per variable
        assert (results[0].cause, results[0].effect) == ("LGDP", "LCO2")
        assert (results[1].cause, results[1].effect) == ("LCO2", "LGDP")

    def test_f_matches_rss_oracle(self, rng):
        n = 120
        x = ar1_series(rng, n, 0.5)
        y = np.empty(n)
        y[0] = 0.0
        e = rng.normal(size=n)
        for t in range(1, n):
            y[t] = 0.4 * y[t - 1] + 0.6 * x[t - 1] + e[t]
        ds = make_dataset({"Y": y, "X": x})
        res = granger_pairwise(ds, ["Y", "X"], lag=2)[0]
        t_idx = np.arange(2, n)
        unrestricted = ols_fit(
            y[t_idx],
            design_matrix(
                [
                    ("y1", y[t_idx - 1]),
                    ("y2", y[t_idx - 2]),
                    ("x1", x[t_idx - 1]),
                    ("x2", x[t_idx - 2]),
                ]
            ),
        )
        restricted = ols_fit(
            y[t_idx], design_matrix([("y1", y[t_idx - 1]), ("y2", y[t_idx - 2])])
        )
        oracle = rss_f_stat(restricted.rss, unrestricted.rss, 2, unrestricted.df_resid)
        assert res.f_statistic == pytest.approx(oracle, abs=1e-10)
        assert res.p_value == pytest.approx(
            f_dist(2, unrestricted.df_resid).survival(oracle), abs=1e-12
        )

    def test_published_pvalues_reproduce_under_f_2_25(self):
        for name, f_stat, prob in PUBLISHED_F_PAIRS:
            assert abs(f_dist(2, 25).survival(f_stat) - prob) < 5e-4, name

    def test_published_verdict_asymmetry(self):
        # five one-way causalities toward the dependent variable, none reverse
        toward = PUBLISHED_F_PAIRS[0::2]
        reverse = PUBLISHED_F_PAIRS[1::2]
        assert all(f_dist(2, 25).survival(f) < 0.05 for _, f, _ in toward)
        assert all(f_dist(2, 25).survival(f) > 0.05 for _, f, _ in reverse)

    def test_direction_specific_design(self, rng):
        # x leads y strongly; y does not lead x
        n = 300
        x = ar1_series(rng, n, 0.5)
        y = np.empty(n)
        y[0] = 0.0
        e = rng.normal(size=n)
        for t in range(1, n):
            y[t] = 0.3 * y[t - 1] + 0.8 * x[t - 1] + e[t]
        ds = make_dataset({"Y": y, "X": x})
        fwd, rev = granger_pairwise(ds, ["Y", "X"], lag=2)
        assert fwd.p_value < 0.01
        assert rev.p_value > fwd.p_value

    def test_insufficient_observations(self, rng):
        ds = make_dataset({"Y": rng.normal(size=12), "X": rng.normal(size=12)})
        with pytest.raises(DataError, match="insufficient"):
            granger_pairwise(ds, ["Y", "X"], lag=3)

    def test_lag_validation(self, rng):
        ds = make_dataset({"Y": rng.normal(size=30), "X": rng.normal(size=30)})
        with pytest.raises(DataError):
            granger_pairwise(ds, ["Y", "X"], lag=0)
        with pytest.raises(DataError):
            granger_pairwise(ds, ["Y"], lag=2)
