"""Regenerate data/us_1990_2021.csv, the bundled synthetic reconstruction.

The fixture mimics the shapes and magnitudes of the six US annual series
(CO2 kt, GDP per capita, AI patent applications, stock market cap % GDP,
ICT goods imports %, total population) over 1990-2021. Every series is an
integrated process in logs whose growth rate is a persistent AR(1) (plus
mild deterministic shape overlays), so the data behave like macro series;
CO2 is tied to the other five through a stationary equilibrium error.
Generated from a fixed seed and committed; it is NOT the original data.
"""

from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "data" / "us_1990_2021.csv"
SEED = 20211054


def _ar1(rng: np.random.Generator, n: int, phi: float, sd: float) -> np.ndarray:
    e = rng.normal(0.0, sd, n)
    out = np.empty(n)
    out[0] = e[0] / np.sqrt(1.0 - phi**2)
    for t in range(1, n):
        out[t] = phi * out[t - 1] + e[t]
    return out


def build(seed: int) -> dict[str, np.ndarray]:
    rng = np.random.default_rng(seed)
    years = np.arange(1990, 2022)
    n = years.size

    def walk(start_log, total_drift, sd, shocks=None):
        # integrated series with persistent growth innovations
        steps = total_drift / (n - 1) + _ar1(rng, n, 0.35, sd)
        steps[0] = 0.0
        if shocks:
            for idx, size in shocks.items():
                steps[idx] += size
        return start_log + np.cumsum(steps)

    rec = {int(np.flatnonzero(years == 2009)[0]): -0.045,
           int(np.flatnonzero(years == 2020)[0]): -0.035}
    lgdp = walk(np.log(23900.0), 1.06, 0.028, rec)
    lai = walk(np.log(560.0), 2.90, 0.110)
    lsmc = walk(np.log(52.0), 1.30, 0.100,
                {int(np.flatnonzero(years == 2008)[0]): -0.30})
    lsmc = lsmc + 0.35 * np.exp(-0.5 * ((years - 1999) / 2.8) ** 2)
    lict = walk(np.log(10.0), 0.0, 0.055)
    lict = lict + 0.45 * np.exp(-0.5 * ((years - 2000) / 5.2) ** 2)
    lpop = walk(np.log(249.6e6), 0.285, 0.0055)

    # CO2: long-run combination of the drivers plus a stationary AR(1)
    # equilibrium error, centered on a realistic log level
    combo = 0.40 * lgdp - 0.12 * lai + 0.12 * lsmc - 0.20 * lict + 0.80 * lpop
    lco2 = 15.46 - combo.mean() + combo + _ar1(rng, n, 0.6, 0.008)
    return {"year": years, "CO2": np.exp(lco2), "GDP": np.exp(lgdp),
            "AI": np.exp(lai), "SMC": np.exp(lsmc), "ICT": np.exp(lict),
            "POP": np.exp(lpop)}


def main() -> None:
    cols = build(SEED)
    with open(OUT, "w", encoding="utf-8") as fh:
        fh.write("year,CO2,GDP,AI,SMC,ICT,POP\n")
        for i, year in enumerate(cols["year"]):
            fh.write(
                f"{year},{cols['CO2'][i]:.1f},{cols['GDP'][i]:.2f},"
                f"{cols['AI'][i]:.1f},{cols['SMC'][i]:.3f},"
                f"{cols['ICT'][i]:.4f},{cols['POP'][i]:.0f}\n"
            )
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
