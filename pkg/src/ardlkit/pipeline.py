"""Config-driven end-to-end analysis pipeline with report rendering.

Stage order mirrors the analysis flow: descriptive statistics, unit-root
tests, bounds cointegration, error-correction estimation, long-run
robustness estimators, residual diagnostics, Granger causality. Every
stage is a pure function of the loaded data and the configuration, so a
given (config, data) pair always produces an identical report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

from . import __version__
from .ardl import ArdlFit, CASES, bounds_test, ecm_fit, fit_ardl, select_lags
from .cointegration import ccr_fit, dols_fit, fmols_fit
from .diagnostics import breusch_godfrey, breusch_pagan_godfrey, granger_pairwise, jarque_bera
from .exceptions import ConfigError
from .timeseries import Dataset, TimeSeries, difference, load_csv, log_transform, summary_stats
from .unitroot import UnitRootSpec, adf_test, classify_integration, dfgls_test, pp_test

__all__ = [
    "PipelineConfig",
    "Report",
    "STAGES",
    "load_config",
    "default_config",
    "run_pipeline",
    "render_report",
    "report_from_json",
]

STAGES = ("summary", "unit_root", "bounds", "ardl", "robustness", "diagnostics", "granger")
FORMATS = ("text", "markdown", "csv", "json")
ROLES = ("P", "A", "T")


@dataclass(frozen=True)
class PipelineConfig:
    """Everything the pipeline needs, with defaults replicating the
    standard six-variable log-log setup."""

    data_path: str
    dependent: str
    regressors: tuple[str, ...]
    stirpat_roles: dict[str, str]
    transforms: dict[str, str]
    max_p: int = 2
    max_q: int = 2
    criterion: str = "sic"
    bounds_case: str = "restricted_constant"
    granger_lag: int = 2
    significance: float = 0.05
    output_format: str = "text"
    stages: tuple[str, ...] = STAGES
    unit_root_deterministic: str = "constant"
    lm_order: int = 2

    def validate(self) -> None:
        problems = []
        if not self.dependent:
            problems.append("dependent: must be set")
        if not self.regressors:
            problems.append("regressors: must be a non-empty list")
        if self.dependent in self.regressors:
            problems.append(f"dependent: {self.dependent!r} also listed in regressors")
        if len(set(self.regressors)) != len(self.regressors):
            problems.append("regressors: names must be unique")
        missing_roles = [r for r in self.regressors if r not in self.stirpat_roles]
        if missing_roles:
            problems.append(f"stirpat_roles: missing entries for {missing_roles}")
        bad_roles = {k: v for k, v in self.stirpat_roles.items() if v not in ROLES}
        if bad_roles:
            problems.append(f"stirpat_roles: values must be P/A/T, got {bad_roles}")
        bad_tr = {k: v for k, v in self.transforms.items() if v not in ("log", "none")}
        if bad_tr:
            problems.append(f"transforms: values must be log/none, got {bad_tr}")
        if self.max_p < 1:
            problems.append(f"max_p: must be >= 1, got {self.max_p}")
        if self.max_q < 0:
            problems.append(f"max_q: must be >= 0, got {self.max_q}")
        if self.criterion not in ("aic", "sic"):
            problems.append(f"criterion: must be aic or sic, got {self.criterion!r}")
        if self.bounds_case not in CASES:
            problems.append(f"bounds_case: unknown case {self.bounds_case!r}")
        if self.granger_lag < 1:
            problems.append(f"granger_lag: must be >= 1, got {self.granger_lag}")
        if not 0.0 < self.significance < 1.0:
            problems.append(f"significance: must lie in (0, 1), got {self.significance}")
        if self.output_format not in FORMATS:
            problems.append(f"output_format: must be one of {FORMATS}")
        unknown = [s for s in self.stages if s not in STAGES]
        if unknown:
            problems.append(f"stages: unknown stage names {unknown}")
        if self.unit_root_deterministic not in ("constant", "constant_trend"):
            problems.append(
                f"unit_root_deterministic: got {self.unit_root_deterministic!r}"
            )
        if self.lm_order < 1:
            problems.append(f"lm_order: must be >= 1, got {self.lm_order}")
        if problems:
            raise ConfigError("invalid configuration: " + "; ".join(problems))


def default_config(data_path: str | Path = "data/us_1990_2021.csv") -> PipelineConfig:
    """The six-variable carbon model defaults: logs on, k=5, lag-2 Granger."""
    regressors = ("GDP", "AI", "SMC", "ICT", "POP")
    return PipelineConfig(
        data_path=str(data_path),
        dependent="CO2",
        regressors=regressors,
        stirpat_roles={"GDP": "A", "AI": "T", "SMC": "A", "ICT": "T", "POP": "P"},
        transforms={name: "log" for name in ("CO2",) + regressors},
    )


def load_config(path: str | Path) -> PipelineConfig:
    """Read a YAML config file (nested sections, see README) into a
    validated PipelineConfig."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file not found: {path}")
    with open(path, encoding="utf-8") as fh:
        try:
            raw = yaml.safe_load(fh) or {}
        except yaml.YAMLError as exc:
            raise ConfigError(f"config file {path} is not valid YAML: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must contain a mapping at top level")

    known_sections = {"data", "model", "ardl", "unit_root", "granger", "diagnostics", "report"}
    unknown = sorted(set(raw) - known_sections)
    if unknown:
        raise ConfigError(f"unknown config sections: {unknown}")

    def section(name: str) -> dict:
        value = raw.get(name, {})
        if not isinstance(value, dict):
            raise ConfigError(f"config section {name!r} must be a mapping")
        return value

    def pick(sec: dict, sec_name: str, allowed: set[str]) -> None:
        bad = sorted(set(sec) - allowed)
        if bad:
            raise ConfigError(f"unknown keys in config section {sec_name!r}: {bad}")

    model = section("model")
    pick(model, "model", {"dependent", "regressors", "stirpat_roles", "transforms"})
    ardl_sec = section("ardl")
    pick(ardl_sec, "ardl", {"max_p", "max_q", "criterion", "bounds_case"})
    ur = section("unit_root")
    pick(ur, "unit_root", {"deterministic"})
    gr = section("granger")
    pick(gr, "granger", {"lag"})
    diag = section("diagnostics")
    pick(diag, "diagnostics", {"lm_order"})
    rep = section("report")
    pick(rep, "report", {"significance", "format", "stages"})

    data_path = raw.get("data")
    if not data_path:
        raise ConfigError("config is missing the 'data' entry (path to the CSV file)")
    base = default_config(data_path)
    regressors = tuple(model.get("regressors", base.regressors))
    config = PipelineConfig(
        data_path=str(data_path),
        dependent=model.get("dependent", base.dependent),
        regressors=regressors,
        stirpat_roles=dict(model.get("stirpat_roles", base.stirpat_roles)),
        transforms=dict(model.get("transforms", base.transforms)),
        max_p=int(ardl_sec.get("max_p", base.max_p)),
        max_q=int(ardl_sec.get("max_q", base.max_q)),
        criterion=str(ardl_sec.get("criterion", base.criterion)),
        bounds_case=str(ardl_sec.get("bounds_case", base.bounds_case)),
        granger_lag=int(gr.get("lag", base.granger_lag)),
        significance=float(rep.get("significance", base.significance)),
        output_format=str(rep.get("format", base.output_format)),
        stages=tuple(rep.get("stages", STAGES)),
        unit_root_deterministic=str(ur.get("deterministic", base.unit_root_deterministic)),
        lm_order=int(diag.get("lm_order", base.lm_order)),
    )
    config.validate()
    return config


@dataclass
class Report:
    """Ordered report sections (plain JSON-able values only) plus metadata."""

    sections: dict[str, dict]
    metadata: dict


def _estimate_row(est) -> dict:
    return {
        "name": est.name,
        "coefficient": est.coefficient,
        "std_error": est.std_error,
        "t_stat": est.t_stat,
        "p_value": est.p_value,
    }


def _apply_transforms(data: Dataset, config: PipelineConfig) -> tuple[Dataset, str, list[str]]:
    """Apply per-variable transforms; log-transformed series gain the L prefix."""
    out: list[TimeSeries] = []
    mapped: dict[str, str] = {}
    for name in (config.dependent, *config.regressors):
        s = data[name]
        how = config.transforms.get(name, "none")
        if how == "log":
            s = log_transform(s)
        out.append(s)
        mapped[name] = s.name
    return (
        Dataset.from_series(out),
        mapped[config.dependent],
        [mapped[r] for r in config.regressors],
    )


def _summary_section(model: Dataset, names: list[str]) -> dict:
    rows: dict[str, list[float]] = {
        "Mean": [], "Median": [], "Maximum": [], "Minimum": [], "Std. Dev.": [],
        "Skewness": [], "Kurtosis": [], "Jarque-Bera": [], "Probability": [],
    }
    for name in names:
        st = summary_stats(model[name])
        rows["Mean"].append(st.mean)
        rows["Median"].append(st.median)
        rows["Maximum"].append(st.maximum)
        rows["Minimum"].append(st.minimum)
        rows["Std. Dev."].append(st.std_dev)
        rows["Skewness"].append(st.skewness)
        rows["Kurtosis"].append(st.kurtosis)
        rows["Jarque-Bera"].append(st.jarque_bera)
        rows["Probability"].append(st.jb_probability)
    return {"variables": list(names), "rows": rows}


def _unit_root_entry(result) -> dict:
    entry = {
        "statistic": result.statistic,
        "significance": result.significance,
        "critical_values": dict(result.critical_values),
        "n_effective": result.n_effective,
    }
    if result.lags_used is not None:
        entry["lags"] = result.lags_used
    if result.bandwidth_used is not None:
        entry["bandwidth"] = result.bandwidth_used
    return entry


def _unit_root_rows(model: Dataset, names: list[str], deterministic: str) -> list[dict]:
    rows = []
    for name in names:
        level = model[name]
        diffed = difference(level, 1)
        per_test: dict[str, Any] = {}
        decisions = {}
        for test, runner in (("adf", adf_test), ("pp", pp_test), ("dfgls", dfgls_test)):
            spec = UnitRootSpec(test=test, deterministic=deterministic)
            res_level = runner(level, spec)
            res_diff = runner(diffed, spec)
            per_test[test] = {
                "level": _unit_root_entry(res_level),
                "diff": _unit_root_entry(res_diff),
            }
            decisions[test] = classify_integration(res_level, res_diff).order
        rows.append(
            {
                "variable": name,
                "tests": per_test,
                "decisions": decisions,
                "decision": decisions["adf"],
            }
        )
    return rows


def _bounds_section(fit: ArdlFit, config: PipelineConfig) -> dict:
    result = bounds_test(fit)
    return {
        "f_statistic": result.f_statistic,
        "k": result.k,
        "case": result.case,
        "bounds": {lev: list(pair) for lev, pair in result.bounds.items()},
        "decision": result.decision,
        "level": result.level,
        "lag_orders": {
            "p": fit.spec.p,
            "q": {name: qi for name, qi in zip(fit.spec.regressors, fit.spec.q)},
        },
        "criterion": config.criterion,
        "ic_value": fit.ic_value,
        "n_effective": fit.n_effective,
    }


def _ardl_section(fit: ArdlFit) -> dict:
    ecm = ecm_fit(fit)
    section = {
        "long_run": [_estimate_row(e) for e in ecm.long_run],
        "intercept": _estimate_row(ecm.intercept),
        "short_run": [_estimate_row(e) for e in ecm.short_run],
        "ect": _estimate_row(ecm.ect),
        "convergent": ecm.is_convergent,
    }
    if ecm.trend is not None:
        section["trend"] = _estimate_row(ecm.trend)
    return section


def _robustness_section(model: Dataset, dep: str, regs: list[str]) -> dict:
    y = model[dep]
    x = [model[name] for name in regs]
    methods = {}
    for label, fitted in (
        ("fmols", fmols_fit(y, x)),
        ("dols", dols_fit(y, x)),
        ("ccr", ccr_fit(y, x)),
    ):
        entry = {
            "estimates": [_estimate_row(e) for e in fitted.estimates],
            "intercept": _estimate_row(fitted.intercept),
            "n_effective": fitted.n_effective,
        }
        if fitted.bandwidth is not None:
            entry["bandwidth"] = fitted.bandwidth
        if fitted.leads is not None:
            entry["leads"] = fitted.leads
            entry["lags"] = fitted.lags
        methods[label] = entry
    return {"methods": methods}


def _diagnostics_section(fit: ArdlFit, config: PipelineConfig) -> dict:
    lf = fit.levels_fit
    alpha = config.significance
    rows = []
    for res in (
        jarque_bera(lf.residuals, alpha),
        breusch_godfrey(lf, config.lm_order, alpha),
        breusch_pagan_godfrey(lf, alpha),
    ):
        rows.append(
            {
                "name": res.name,
                "statistic": res.statistic,
                "p_value": res.p_value,
                "df": res.df,
                "decision": res.decision,
            }
        )
    return {"rows": rows, "applied_to": "conditional EC regression", "lm_order": config.lm_order}


def _granger_section(model: Dataset, dep: str, regs: list[str], lag: int) -> dict:
    results = granger_pairwise(model, [dep] + regs, lag)
    rows = [
        {
            "cause": r.cause,
            "effect": r.effect,
            "obs": r.obs,
            "f_statistic": r.f_statistic,
            "p_value": r.p_value,
        }
        for r in results
    ]
    return {"lag": lag, "rows": rows}


def run_pipeline(config: PipelineConfig, seed: int | None = None) -> Report:
    """Execute the configured stages in order and assemble the report.

    If any variable classifies as integrated of order two or higher, the
    pipeline records a structured verdict and skips every stage past the
    unit-root tests (the bounds test is invalid in that regime).
    """
    config.validate()
    data = load_csv(config.data_path, schema=[config.dependent, *config.regressors])
    model, dep, regs = _apply_transforms(data, config)

    sections: dict[str, dict] = {}
    metadata: dict[str, Any] = {
        "version": __version__,
        "seed": seed,
        "config": {
            "data_path": config.data_path,
            "dependent": config.dependent,
            "regressors": list(config.regressors),
            "stirpat_roles": dict(config.stirpat_roles),
            "transforms": dict(config.transforms),
            "max_p": config.max_p,
            "max_q": config.max_q,
            "criterion": config.criterion,
            "bounds_case": config.bounds_case,
            "granger_lag": config.granger_lag,
            "significance": config.significance,
            "output_format": config.output_format,
            "stages": list(config.stages),
            "unit_root_deterministic": config.unit_root_deterministic,
            "lm_order": config.lm_order,
        },
        "model_variables": [dep] + regs,
        "n_obs": model.n_obs,
        "year_range": list(model.year_range),
    }

    stages = [s for s in STAGES if s in config.stages]

    if "summary" in stages:
        sections["summary"] = _summary_section(model, [dep] + regs)

    unit_root_rows = None
    needs_guard = any(s in stages for s in ("bounds", "ardl", "robustness", "diagnostics"))
    if "unit_root" in stages or needs_guard:
        unit_root_rows = _unit_root_rows(model, [dep] + regs, config.unit_root_deterministic)
    if "unit_root" in stages:
        sections["unit_root"] = {
            "deterministic": config.unit_root_deterministic,
            "rows": unit_root_rows,
        }

    if unit_root_rows is not None and needs_guard:
        too_high = [row["variable"] for row in unit_root_rows if row["decision"] == "higher"]
        if too_high:
            metadata["halted"] = (
                "bounds testing skipped: variables classified above I(1): "
                + ", ".join(too_high)
            )
            return Report(sections=sections, metadata=metadata)

    ardl_fit: ArdlFit | None = None

    def get_fit() -> ArdlFit:
        nonlocal ardl_fit
        if ardl_fit is None:
            spec = select_lags(
                model, dep, tuple(regs), config.max_p, config.max_q,
                config.criterion, config.bounds_case,
            )
            fit = fit_ardl(model, spec, config.criterion)
            metadata["selected_lags"] = {
                "p": spec.p,
                "q": {name: qi for name, qi in zip(spec.regressors, spec.q)},
            }
            ardl_fit = fit
        return ardl_fit

    if "bounds" in stages:
        sections["bounds"] = _bounds_section(get_fit(), config)
    if "ardl" in stages:
        sections["ardl"] = _ardl_section(get_fit())
    if "robustness" in stages:
        sections["robustness"] = _robustness_section(model, dep, regs)
        metadata["robustness_tuning"] = {
            method: {k: v for k, v in entry.items() if k in ("bandwidth", "leads", "lags")}
            for method, entry in sections["robustness"]["methods"].items()
        }
    if "diagnostics" in stages:
        sections["diagnostics"] = _diagnostics_section(get_fit(), config)
    if "granger" in stages:
        sections["granger"] = _granger_section(model, dep, regs, config.granger_lag)

    if "unit_root" in sections:
        metadata["pp_bandwidths"] = sorted(
            {
                row["tests"]["pp"][part]["bandwidth"]
                for row in sections["unit_root"]["rows"]
                for part in ("level", "diff")
            }
        )

    return Report(sections=sections, metadata=metadata)


# ---------------------------------------------------------------------------
# rendering

_SECTION_TITLES = {
    "summary": "Summary Statistics",
    "unit_root": "Unit Root Tests",
    "bounds": "ARDL Bounds Cointegration Test",
    "ardl": "ARDL Error-Correction Estimates",
    "robustness": "Robustness: FMOLS / DOLS / CCR",
    "diagnostics": "Residual Diagnostics",
    "granger": "Pairwise Granger Causality",
}


def _f4(x: float) -> str:
    return f"{x:.4f}"


def _f3(x: float) -> str:
    return f"{x:.3f}"


def stars(p_value: float) -> str:
    """Significance stars: *** p<0.01, ** p<0.05, * p<0.10."""
    if p_value < 0.01:
        return "***"
    if p_value < 0.05:
        return "**"
    if p_value < 0.10:
        return "*"
    return ""


def _tables_for_section(name: str, sec: dict) -> list[tuple[str, list[str], list[list[str]]]]:
    """Normalize a section into (title, header, string rows) tables."""
    tables = []
    if name == "summary":
        header = ["Statistic"] + sec["variables"]
        body = [[stat] + [_f4(v) for v in vals] for stat, vals in sec["rows"].items()]
        tables.append(("", header, body))
    elif name == "unit_root":
        header = ["Variable", "ADF I(0)", "ADF I(1)", "PP I(0)", "PP I(1)",
                  "DF-GLS I(0)", "DF-GLS I(1)", "Decision"]
        body = []
        for row in sec["rows"]:
            cells = [row["variable"]]
            for test in ("adf", "pp", "dfgls"):
                for part in ("level", "diff"):
                    e = row["tests"][test][part]
                    cells.append(_f4(e["statistic"]) + e["significance"])
            cells.append(row["decision"])
            body.append(cells)
        tables.append((f"deterministic: {sec['deterministic']}", header, body))
    elif name == "bounds":
        info_rows = [
            ["F statistic", _f4(sec["f_statistic"])],
            ["k", str(sec["k"])],
            ["case", sec["case"]],
            ["decision", sec["decision"] + (f" at {sec['level']}" if sec["level"] else "")],
        ]
        tables.append(("", ["Quantity", "Value"], info_rows))
        header = ["Bound"] + list(sec["bounds"].keys())
        i0 = ["I(0)"] + [_f3(sec["bounds"][lev][0]) for lev in sec["bounds"]]
        i1 = ["I(1)"] + [_f3(sec["bounds"][lev][1]) for lev in sec["bounds"]]
        tables.append(("Critical bounds", header, [i0, i1]))
        lag_rows = [["p", str(sec["lag_orders"]["p"])]] + [
            [name_, str(qi)] for name_, qi in sec["lag_orders"]["q"].items()
        ]
        tables.append(("Selected lag orders", ["Term", "Lags"], lag_rows))
    elif name == "ardl":
        header = ["Variable", "Coefficient", "Std. Error", "t-Statistic", "Prob."]

        def row_of(d: dict, label: str | None = None) -> list[str]:
            return [
                label or d["name"],
                _f4(d["coefficient"]) + stars(d["p_value"]),
                _f4(d["std_error"]),
                _f4(d["t_stat"]),
                _f4(d["p_value"]),
            ]

        long_rows = [row_of(d) for d in sec["long_run"]]
        long_rows.append(row_of(sec["intercept"], "C"))
        if "trend" in sec:
            long_rows.append(row_of(sec["trend"], "trend"))
        tables.append(("Long-run estimation", header, long_rows))
        short_rows = [row_of(d) for d in sec["short_run"]]
        short_rows.append(row_of(sec["ect"], "CointEq(-1)*"))
        tables.append(("Short-run estimation", header, short_rows))
    elif name == "robustness":
        methods = sec["methods"]
        labels = {"fmols": "FMOLS", "dols": "DOLS", "ccr": "CCR"}
        header = ["Variable"] + [labels[m] for m in methods]
        names = [e["name"] for e in next(iter(methods.values()))["estimates"]]
        body = []
        for i, var in enumerate(names):
            cells = [var]
            for m in methods:
                e = methods[m]["estimates"][i]
                cells.append(_f4(e["coefficient"]) + stars(e["p_value"]))
            body.append(cells)
        c_cells = ["C"]
        for m in methods:
            e = methods[m]["intercept"]
            c_cells.append(_f4(e["coefficient"]) + stars(e["p_value"]))
        body.append(c_cells)
        tables.append(("", header, body))
    elif name == "diagnostics":
        header = ["Diagnostic test", "Statistic", "p-value", "Decision"]
        body = [
            [r["name"], _f4(r["statistic"]), _f4(r["p_value"]), r["decision"]]
            for r in sec["rows"]
        ]
        tables.append(("", header, body))
    elif name == "granger":
        header = ["Null Hypothesis", "Obs", "F-Statistic", "Prob."]
        body = [
            [
                f"{r['cause']} does not Granger-cause {r['effect']}",
                str(r["obs"]),
                _f4(r["f_statistic"]),
                _f4(r["p_value"]),
            ]
            for r in sec["rows"]
        ]
        tables.append((f"lag: {sec['lag']}", header, body))
    return tables


def _render_text(report: Report) -> str:
    lines: list[str] = []
    lines.append(f"ardlkit report (version {report.metadata['version']})")
    years = report.metadata.get("year_range")
    if years:
        lines.append(
            f"data: {report.metadata['config']['data_path']}  "
            f"years {years[0]}-{years[1]}  n={report.metadata['n_obs']}"
        )
    if report.metadata.get("halted"):
        lines.append(f"VERDICT: {report.metadata['halted']}")
    for name in (s for s in STAGES if s in report.sections):
        sec = report.sections[name]
        lines.append("")
        lines.append(f"== {_SECTION_TITLES[name]} ==")
        for title, header, body in _tables_for_section(name, sec):
            if title:
                lines.append(f"-- {title}")
            widths = [
                max(len(header[i]), *(len(row[i]) for row in body)) if body else len(header[i])
                for i in range(len(header))
            ]
            lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
            lines.append("  ".join("-" * w for w in widths))
            for row in body:
                lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    lines.append("")
    return "\n".join(lines)


def _render_markdown(report: Report) -> str:
    lines: list[str] = [f"# ardlkit report (version {report.metadata['version']})"]
    if report.metadata.get("halted"):
        lines.append(f"\n**VERDICT:** {report.metadata['halted']}")
    for name in (s for s in STAGES if s in report.sections):
        sec = report.sections[name]
        lines.append(f"\n## {_SECTION_TITLES[name]}")
        for title, header, body in _tables_for_section(name, sec):
            if title:
                lines.append(f"\n*{title}*")
            lines.append("")
            lines.append("| " + " | ".join(header) + " |")
            lines.append("|" + "|".join("---" for _ in header) + "|")
            for row in body:
                lines.append("| " + " | ".join(row) + " |")
    lines.append("")
    return "\n".join(lines)


def _render_csv(report: Report) -> str:
    # long/tidy layout: one formatted cell per line
    out = ["section,table,row,column,value"]

    def esc(v: str) -> str:
        if any(ch in v for ch in ",\"\n"):
            return '"' + v.replace('"', '""') + '"'
        return v

    for name in (s for s in STAGES if s in report.sections):
        sec = report.sections[name]
        for title, header, body in _tables_for_section(name, sec):
            for row in body:
                for col, cell in zip(header[1:], row[1:]):
                    out.append(
                        ",".join(esc(v) for v in (name, title or "main", row[0], col, cell))
                    )
    out.append("")
    return "\n".join(out)


def render_report(report: Report, output_format: str | None = None) -> str:
    """Render a report deterministically in one of text/markdown/csv/json.

    Human formats round to 4 decimals (3 for critical bounds); the JSON
    format keeps full precision and round-trips to equal numeric content.
    """
    fmt = output_format or report.metadata.get("config", {}).get("output_format", "text")
    if fmt == "text":
        return _render_text(report)
    if fmt == "markdown":
        return _render_markdown(report)
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "json":
        payload = {"metadata": report.metadata, "sections": report.sections}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ConfigError(f"unsupported output format {fmt!r}")


def report_from_json(text: str) -> Report:
    """Inverse of the JSON rendering (numeric content compares equal)."""
    payload = json.loads(text)
    return Report(sections=payload["sections"], metadata=payload["metadata"])
