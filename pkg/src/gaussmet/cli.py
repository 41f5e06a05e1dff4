"""Command-line front end.

Five subcommands dispatch into the library and emit machine-readable
results; all run configuration lives in a single JSON document so nested
sweep and oracle settings stay structured:

    gaussmet <command> --config <path> [--out <path>] [--format csv|json]

Commands: ``compute`` (QFIM, bounds and closed-form comparisons for one
probe/parameter point), ``sweep`` (one CSV row per grid point),
``oracle-check`` (Fock-oracle sector ratios), ``optimize`` (probe-phase
scan) and ``equivalence`` (beam-splitter equivalence report).

Outputs are byte-deterministic for a given config: floats are printed
with 17 significant digits, no timestamps enter data files, and run
metadata goes to a ``<out>.meta.json`` sidecar instead.  Exit status: 0
success, 2 config error, 3 numerical failure, 4 oracle cutoff overflow.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import sys

import numpy as np

from . import __version__
from .fock_oracle import CutoffOverflowError, cutoff_for, prepare_state, sector_ratios
from .gaussian import Probe, ResourceBudget, SmssProbe, TmssProbe
from .interferometer import ParamVector
from .probe_design import (
    SweepSpec,
    optimize_probe,
    run_sweep,
    smss_phase_preference,
    smss_tmss_equivalence,
)
from .qfim import (
    ConditioningError,
    qcrb_bounds,
    qfim_numeric,
    smss_cov_qfim,
    smss_cov_qfim_general,
    tmss_cov_qfim,
    tmss_disp_qfim,
)

COMMANDS = ("compute", "sweep", "oracle-check", "optimize", "equivalence")

SWEEP_COLUMNS = (
    "tr_inv",
    "bound_phi0",
    "bound_phi",
    "bound_psi",
    "bound_omega",
    "singular",
    "eig1",
    "eig2",
    "eig3",
    "eig4",
)


class ConfigError(ValueError):
    """Invalid run configuration; the message names the offending key."""


# --------------------------------------------------------------------------
# Deterministic formatting
# --------------------------------------------------------------------------


def format_float(x: float) -> str:
    """17-significant-digit decimal form (round-trips any double)."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.17g}"


def _json_scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v) or math.isinf(v):
            return "null"  # JSON has no non-finite literals; flags carry semantics
        return format_float(v)
    if isinstance(v, str):
        return json.dumps(v)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def dumps_json(obj, level: int = 0) -> str:
    """Serialize with fixed key order and 17-significant-digit floats."""
    pad = "  " * level
    inner = "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f"{inner}{json.dumps(str(k))}: {dumps_json(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj):
            return "[" + ", ".join(_json_scalar(v) for v in obj) + "]"
        parts = [f"{inner}{dumps_json(v, level + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    return _json_scalar(obj)


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format_float(float(v))
    return str(v)


def render_csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def flatten_document(doc, prefix="") -> list:
    """(dotted-key, scalar) pairs of a nested document, in document order."""
    out = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            out.extend(flatten_document(v, f"{prefix}{k}."))
    elif isinstance(doc, np.ndarray):
        out.extend(flatten_document(doc.tolist(), prefix))
    elif isinstance(doc, (list, tuple)):
        for i, v in enumerate(doc):
            out.extend(flatten_document(v, f"{prefix}{i}."))
    else:
        out.append((prefix[:-1], doc))
    return out


# --------------------------------------------------------------------------
# Config parsing
# --------------------------------------------------------------------------


def _check_keys(d: dict, allowed, ctx: str):
    for key in d:
        if key not in allowed:
            raise ConfigError(f"unknown key '{ctx}{key}'")


def _get_num(d: dict, key: str, ctx: str, default=None, required=False):
    if key not in d:
        if required:
            raise ConfigError(f"missing key '{ctx}{key}'")
        return default
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"key '{ctx}{key}' must be a number")
    return float(v)


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def parse_params(raw, degrees: bool, ctx="params.") -> ParamVector:
    if not isinstance(raw, dict):
        raise ConfigError(f"key '{ctx[:-1]}' must be an object")
    _check_keys(raw, ("phi0", "phi", "psi", "omega"), ctx)
    vals = {k: _angle(_get_num(raw, k, ctx, default=0.0), degrees) for k in ("phi0", "phi", "psi")}
    vals["omega"] = _angle(_get_num(raw, "omega", ctx, required=True), degrees)
    return ParamVector(**vals)


def parse_probe(raw, degrees: bool, ctx="probe.") -> Probe:
    if not isinstance(raw, dict):
        raise ConfigError(f"key '{ctx[:-1]}' must be an object")
    family = raw.get("family")
    if family not in ("tmss", "smss"):
        raise ConfigError(f"key '{ctx}family' must be 'tmss' or 'smss'")
    common = ("alpha1_mag", "beta1", "alpha2_mag", "beta2")
    try:
        if family == "tmss":
            _check_keys(raw, ("family", "r", "theta") + common, ctx)
            return TmssProbe(
                r=_get_num(raw, "r", ctx, default=0.0),
                theta=_angle(_get_num(raw, "theta", ctx, default=0.0), degrees),
                alpha1_mag=_get_num(raw, "alpha1_mag", ctx, default=0.0),
                beta1=_angle(_get_num(raw, "beta1", ctx, default=0.0), degrees),
                alpha2_mag=_get_num(raw, "alpha2_mag", ctx, default=0.0),
                beta2=_angle(_get_num(raw, "beta2", ctx, default=0.0), degrees),
            )
        _check_keys(raw, ("family", "r1", "theta1", "r2", "theta2") + common, ctx)
        return SmssProbe(
            r1=_get_num(raw, "r1", ctx, default=0.0),
            theta1=_angle(_get_num(raw, "theta1", ctx, default=0.0), degrees),
            r2=_get_num(raw, "r2", ctx, default=0.0),
            theta2=_angle(_get_num(raw, "theta2", ctx, default=0.0), degrees),
            alpha1_mag=_get_num(raw, "alpha1_mag", ctx, default=0.0),
            beta1=_angle(_get_num(raw, "beta1", ctx, default=0.0), degrees),
            alpha2_mag=_get_num(raw, "alpha2_mag", ctx, default=0.0),
            beta2=_angle(_get_num(raw, "beta2", ctx, default=0.0), degrees),
        )
    except ValueError as exc:
        raise ConfigError(f"invalid '{ctx[:-1]}': {exc}") from exc


def parse_budget(raw, ctx="budget.") -> ResourceBudget:
    if not isinstance(raw, dict):
        raise ConfigError(f"key '{ctx[:-1]}' must be an object")
    _check_keys(raw, ("n_s", "n_c", "tau", "eta"), ctx)
    try:
        return ResourceBudget(
            n_s=_get_num(raw, "n_s", ctx, required=True),
            n_c=_get_num(raw, "n_c", ctx, required=True),
            tau=_get_num(raw, "tau", ctx, default=0.5),
            eta=_get_num(raw, "eta", ctx, default=0.5),
        )
    except ValueError as exc:
        raise ConfigError(f"invalid '{ctx[:-1]}': {exc}") from exc


def _parse_grid(raw, degrees, variable, ctx):
    angular = variable in ("omega", "phase_mismatch")
    if isinstance(raw, list):
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw):
            raise ConfigError(f"key '{ctx}' must contain numbers")
        vals = [float(v) for v in raw]
    elif isinstance(raw, dict):
        _check_keys(raw, ("start", "stop", "points", "spacing"), ctx + ".")
        start = _get_num(raw, "start", ctx + ".", required=True)
        stop = _get_num(raw, "stop", ctx + ".", required=True)
        points = raw.get("points")
        if not isinstance(points, int) or isinstance(points, bool) or points < 1:
            raise ConfigError(f"key '{ctx}.points' must be a positive integer")
        spacing = raw.get("spacing", "linear")
        if spacing not in ("linear", "log"):
            raise ConfigError(f"key '{ctx}.spacing' must be 'linear' or 'log'")
        if spacing == "log":
            if start <= 0 or stop <= 0:
                raise ConfigError(f"key '{ctx}' log spacing needs positive endpoints")
            vals = list(np.geomspace(start, stop, points))
        else:
            vals = list(np.linspace(start, stop, points))
    else:
        raise ConfigError(f"key '{ctx}' must be a list or a start/stop/points object")
    if angular and degrees:
        vals = [math.radians(v) for v in vals]
    return tuple(vals)


def parse_sweep(raw, budget, params, degrees, ctx="sweep.") -> SweepSpec:
    if not isinstance(raw, dict):
        raise ConfigError(f"key '{ctx[:-1]}' must be an object")
    allowed = ("family", "variable", "grid", "theta", "beta1", "beta2", "theta1", "theta2", "through_bs")
    _check_keys(raw, allowed, ctx)
    family = raw.get("family", "tmss")
    variable = raw.get("variable")
    if variable is None:
        raise ConfigError(f"missing key '{ctx}variable'")
    if "grid" not in raw:
        raise ConfigError(f"missing key '{ctx}grid'")
    grid = _parse_grid(raw["grid"], degrees, variable, ctx + "grid")
    through_bs = raw.get("through_bs", False)
    if not isinstance(through_bs, bool):
        raise ConfigError(f"key '{ctx}through_bs' must be a boolean")
    kwargs = {}
    for key, default in (
        ("theta", 0.0),
        ("beta1", None),  # family-resolved defaults when unset
        ("beta2", None),
        ("theta1", math.pi / 2.0),
        ("theta2", 0.0),
    ):
        kwargs[key] = (
            _angle(_get_num(raw, key, ctx), degrees) if key in raw else default
        )
    try:
        return SweepSpec(
            probe_family=family,
            budget=budget,
            swept=variable,
            grid=grid,
            fixed_params=params,
            through_bs=through_bs,
            **kwargs,
        )
    except ValueError as exc:
        raise ConfigError(f"invalid '{ctx[:-1]}': {exc}") from exc


def load_config(command: str, text: str):
    """Parse and validate the JSON run configuration for ``command``."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    allowed = ("command", "degrees", "probe", "params", "budget", "sweep", "oracle", "optimize", "equivalence")
    _check_keys(raw, allowed, "")
    declared = raw.get("command")
    if declared is not None and declared != command:
        raise ConfigError(f"key 'command' ({declared!r}) conflicts with the subcommand {command!r}")
    degrees = raw.get("degrees", False)
    if not isinstance(degrees, bool):
        raise ConfigError("key 'degrees' must be a boolean")

    cfg = {"command": command, "degrees": degrees}

    def need(key):
        if key not in raw:
            raise ConfigError(f"missing key '{key}' required by command '{command}'")
        return raw[key]

    if command == "compute":
        cfg["probe"] = parse_probe(need("probe"), degrees)
        cfg["params"] = parse_params(need("params"), degrees)
    elif command == "sweep":
        budget = parse_budget(need("budget"))
        params = parse_params(need("params"), degrees)
        cfg["sweep"] = parse_sweep(need("sweep"), budget, params, degrees)
    elif command == "oracle-check":
        cfg["params"] = parse_params(need("params"), degrees)
        cfg["oracle"] = _parse_oracle(need("oracle"), degrees)
    elif command == "optimize":
        cfg["budget"] = parse_budget(need("budget"))
        cfg["params"] = parse_params(need("params"), degrees)
        cfg["optimize"] = _parse_optimize(need("optimize"))
    elif command == "equivalence":
        cfg["budget"] = parse_budget(need("budget"))
        cfg["params"] = parse_params(need("params"), degrees)
        eq = need("equivalence")
        if not isinstance(eq, dict):
            raise ConfigError("key 'equivalence' must be an object")
        _check_keys(eq, ("r",), "equivalence.")
        r = _get_num(eq, "r", "equivalence.", required=True)
        if r < 0:
            raise ConfigError("key 'equivalence.r' must be >= 0")
        cfg["equivalence"] = {"r": r}
    return cfg


def _parse_oracle(raw, degrees, ctx="oracle."):
    if not isinstance(raw, dict):
        raise ConfigError(f"key '{ctx[:-1]}' must be an object")
    allowed = (
        "r_values",
        "omega_values",
        "alpha1_mag",
        "alpha2_mag",
        "beta1",
        "beta2",
        "theta",
        "tol",
        "max_cutoff",
        "ratio_floor",
    )
    _check_keys(raw, allowed, ctx)
    for key in ("r_values", "omega_values"):
        if key not in raw:
            raise ConfigError(f"missing key '{ctx}{key}'")
        if not isinstance(raw[key], list) or not raw[key]:
            raise ConfigError(f"key '{ctx}{key}' must be a nonempty list")
    out = {
        "r_values": [float(v) for v in raw["r_values"]],
        "omega_values": [
            _angle(float(v), degrees) for v in raw["omega_values"]
        ],
        "alpha1_mag": _get_num(raw, "alpha1_mag", ctx, default=0.35),
        "alpha2_mag": _get_num(raw, "alpha2_mag", ctx, default=0.35),
        "beta1": _angle(_get_num(raw, "beta1", ctx, default=0.0), degrees),
        "beta2": _angle(_get_num(raw, "beta2", ctx, default=0.0), degrees),
        "theta": _angle(_get_num(raw, "theta", ctx, default=0.0), degrees),
        "tol": _get_num(raw, "tol", ctx, default=1e-8),
        "max_cutoff": int(_get_num(raw, "max_cutoff", ctx, default=60)),
        "ratio_floor": _get_num(raw, "ratio_floor", ctx, default=1e-6),
    }
    if not 0.0 < out["tol"] <= 1e-2:
        raise ConfigError(f"key '{ctx}tol' must lie in (0, 1e-2]")
    return out


def _parse_optimize(raw, ctx="optimize."):
    if not isinstance(raw, dict):
        raise ConfigError(f"key '{ctx[:-1]}' must be an object")
    _check_keys(raw, ("family", "free", "angle_points", "tau_points", "rounds"), ctx)
    family = raw.get("family", "tmss")
    if family not in ("tmss", "smss"):
        raise ConfigError(f"key '{ctx}family' must be 'tmss' or 'smss'")
    free = raw.get("free")
    if not isinstance(free, list) or not free:
        raise ConfigError(f"missing or empty key '{ctx}free'")
    return {
        "family": family,
        "free": tuple(str(f) for f in free),
        "angle_points": int(_get_num(raw, "angle_points", ctx, default=24)),
        "tau_points": int(_get_num(raw, "tau_points", ctx, default=21)),
        "rounds": int(_get_num(raw, "rounds", ctx, default=3)),
    }


# --------------------------------------------------------------------------
# Command implementations (each returns the JSON document and CSV payload)
# --------------------------------------------------------------------------


def _params_doc(params: ParamVector) -> dict:
    return {"phi0": params.phi0, "phi": params.phi, "psi": params.psi, "omega": params.omega}


def _probe_doc(probe: Probe) -> dict:
    if isinstance(probe, TmssProbe):
        return {
            "family": "tmss",
            "r": probe.r,
            "theta": probe.theta,
            "alpha1_mag": probe.alpha1_mag,
            "beta1": probe.beta1,
            "alpha2_mag": probe.alpha2_mag,
            "beta2": probe.beta2,
        }
    return {
        "family": "smss",
        "r1": probe.r1,
        "theta1": probe.theta1,
        "r2": probe.r2,
        "theta2": probe.theta2,
        "alpha1_mag": probe.alpha1_mag,
        "beta1": probe.beta1,
        "alpha2_mag": probe.alpha2_mag,
        "beta2": probe.beta2,
    }


def _bounds_doc(bounds) -> dict:
    return {
        "per_param": {
            "phi0": bounds.per_param[0],
            "phi": bounds.per_param[1],
            "psi": bounds.per_param[2],
            "omega": bounds.per_param[3],
        },
        "scalar_bound": bounds.scalar_bound,
        "condition_number": bounds.condition_number,
        "singular": bounds.singular,
    }


def _run_compute(cfg):
    probe, params = cfg["probe"], cfg["params"]
    q = qfim_numeric(probe, params)
    bounds = qcrb_bounds(q)
    if isinstance(probe, TmssProbe):
        comparison = {
            "form": "tmss",
            "applicable": True,
            "covariance_max_abs_dev": float(
                np.max(np.abs(q.covariance - tmss_cov_qfim(probe.r, params.omega)))
            ),
            "displacement_max_abs_dev": float(
                np.max(np.abs(q.displacement - tmss_disp_qfim(probe, params)))
            ),
        }
    else:
        standard_phases = (
            abs(probe.theta1 - math.pi / 2.0) < 1e-12 and abs(probe.theta2) < 1e-12
        )
        if standard_phases and abs(probe.r1 - probe.r2) < 1e-15:
            closed = smss_cov_qfim(probe.r1, params.omega, params.phi)
            form = "smss_equal"
        elif standard_phases:
            closed = smss_cov_qfim_general(probe.r1, probe.r2, params.omega, params.phi)
            form = "smss_general"
        else:
            closed, form = None, "none"
        comparison = {"form": form, "applicable": closed is not None}
        if closed is not None:
            comparison["covariance_max_abs_dev"] = float(np.max(np.abs(q.covariance - closed)))
    doc = {
        "schema_version": "1",
        "command": "compute",
        "probe": _probe_doc(probe),
        "params": _params_doc(params),
        "qfim": {
            "displacement": q.displacement,
            "covariance": q.covariance,
            "total": q.total,
        },
        "bounds": _bounds_doc(bounds),
        "closed_form_comparison": comparison,
    }
    return doc, None


def _run_sweep(cfg):
    spec = cfg["sweep"]
    rows = run_sweep(spec)
    header = (spec.swept,) + SWEEP_COLUMNS
    table = []
    for row in rows:
        table.append(
            [row.value, row.scalar_bound]
            + [row.per_param[k] for k in range(4)]
            + [row.singular]
            + [row.eigenvalues[k] for k in range(4)]
        )
    doc = {
        "schema_version": "1",
        "command": "sweep",
        "spec": {
            "probe_family": spec.probe_family,
            "variable": spec.swept,
            "budget": {
                "n_s": spec.budget.n_s,
                "n_c": spec.budget.n_c,
                "tau": spec.budget.tau,
                "eta": spec.budget.eta,
            },
            "params": _params_doc(spec.fixed_params),
            "through_bs": spec.through_bs,
        },
        "columns": list(header),
        "rows": table,
    }
    return doc, (header, table)


def _run_oracle_check(cfg):
    params, oracle = cfg["params"], cfg["oracle"]
    grid_docs = []
    cov_ratios, disp_ratios = [], []
    for r in oracle["r_values"]:
        for omega in oracle["omega_values"]:
            probe = TmssProbe(
                r=r,
                theta=oracle["theta"],
                alpha1_mag=oracle["alpha1_mag"],
                beta1=oracle["beta1"],
                alpha2_mag=oracle["alpha2_mag"],
                beta2=oracle["beta2"],
            )
            point_params = params.replace(omega=omega)
            cutoff = cutoff_for(probe, oracle["tol"], max_cutoff=oracle["max_cutoff"])
            state = prepare_state(probe, cutoff)
            report = sector_ratios(probe, point_params, cutoff, floor=oracle["ratio_floor"])
            cov = report["covariance"]["ratios"]
            disp = report["displacement"]["ratios"]
            cov_ratios.extend(cov.tolist())
            disp_ratios.extend(disp.tolist())
            grid_docs.append(
                {
                    "r": r,
                    "omega": omega,
                    "cutoff": cutoff,
                    "norm_defect": state.norm_defect,
                    "covariance_ratios": cov,
                    "covariance_entries": [list(e) for e in report["covariance"]["entries"]],
                    "displacement_ratios": disp,
                    "displacement_entries": [list(e) for e in report["displacement"]["entries"]],
                }
            )

    def stats(values):
        if not values:
            return {"mean": None, "min": None, "max": None, "spread": None}
        arr = np.asarray(values)
        mean = float(np.mean(arr))
        return {
            "mean": mean,
            "min": float(np.min(arr)),
            "max": float(np.max(arr)),
            "spread": float((np.max(arr) - np.min(arr)) / abs(mean)) if mean else None,
        }

    doc = {
        "schema_version": "1",
        "command": "oracle-check",
        "params": _params_doc(params),
        "oracle": {k: oracle[k] for k in sorted(oracle)},
        "grid": grid_docs,
        "summary": {
            "covariance_ratio": stats(cov_ratios),
            "displacement_ratio": stats(disp_ratios),
        },
    }
    return doc, None


def _run_optimize(cfg):
    opt, budget, params = cfg["optimize"], cfg["budget"], cfg["params"]
    result = optimize_probe(
        opt["family"],
        budget,
        params,
        free=opt["free"],
        angle_points=opt["angle_points"],
        tau_points=opt["tau_points"],
        rounds=opt["rounds"],
    )
    doc = {
        "schema_version": "1",
        "command": "optimize",
        "family": opt["family"],
        "free": list(opt["free"]),
        "params": _params_doc(params),
        "budget": {"n_s": budget.n_s, "n_c": budget.n_c, "tau": budget.tau, "eta": budget.eta},
        "all_singular": result.all_singular,
        "config": dict(result.config),
        "scalar_bound": result.scalar_bound,
        "trace": [
            {"stage": stage, "config": dict(conf), "scalar_bound": bound}
            for stage, conf, bound in result.trace
        ],
    }
    if opt["family"] == "smss":
        doc["displacement_phase_preference"] = smss_phase_preference(budget, params)
    return doc, None


def _run_equivalence(cfg):
    budget, params = cfg["budget"], cfg["params"]
    rep = smss_tmss_equivalence(cfg["equivalence"]["r"], params, budget)
    doc = {
        "schema_version": "1",
        "command": "equivalence",
        "r": rep.r,
        "params": _params_doc(params),
        "budget": {"n_s": budget.n_s, "n_c": budget.n_c, "tau": budget.tau, "eta": budget.eta},
        "matched_tmss_theta": rep.matched_theta,
        "covariance_dev": rep.covariance_dev,
        "mapped_total_dev": rep.mapped_total_dev,
        "budget_cov_dev": rep.budget_cov_dev,
        "budget_total_rel_dev": rep.budget_total_rel_dev,
        "budget_rel_matrix": rep.budget_rel_matrix,
        "asymptotic_rel_dev": rep.asymptotic_rel_dev,
        "tmss_total": rep.tmss_total,
        "smss_total": rep.smss_total,
        "displacement_phase_preference": smss_phase_preference(budget, params),
    }
    return doc, None


_RUNNERS = {
    "compute": _run_compute,
    "sweep": _run_sweep,
    "oracle-check": _run_oracle_check,
    "optimize": _run_optimize,
    "equivalence": _run_equivalence,
}


def run(cfg: dict) -> tuple[str, str]:
    """Execute a parsed config; returns (json_text, csv_text)."""
    doc, csv_payload = _RUNNERS[cfg["command"]](cfg)
    json_text = dumps_json(doc) + "\n"
    if csv_payload is not None:
        header, table = csv_payload
        csv_text = render_csv(header, table)
    else:
        flat = flatten_document(doc)
        csv_text = render_csv(("key", "value"), flat)
    return json_text, csv_text


# --------------------------------------------------------------------------
# Entry point
# --------------------------------------------------------------------------


def _parse_args(argv):
    parser = argparse.ArgumentParser(
        prog="gaussmet",
        description="Precision bounds for two-channel interferometry with Gaussian probes.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="JSON config path, or '-' for stdin")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument(
        "--format",
        choices=("csv", "json"),
        default=None,
        help="output format (default: csv for sweep, json otherwise)",
    )
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = _parse_args(argv)
    try:
        if args.config == "-":
            text = sys.stdin.read()
        else:
            with open(args.config, "r", encoding="utf-8") as fh:
                text = fh.read()
        cfg = load_config(args.command, text)
    except OSError as exc:
        print(f"gaussmet: config error: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"gaussmet: config error: {exc}", file=sys.stderr)
        return 2

    try:
        json_text, csv_text = run(cfg)
    except CutoffOverflowError as exc:
        print(f"gaussmet: oracle cutoff overflow: {exc}", file=sys.stderr)
        return 4
    except (ConditioningError, np.linalg.LinAlgError, FloatingPointError, ValueError) as exc:
        print(f"gaussmet: numerical failure: {exc}", file=sys.stderr)
        return 3

    fmt = args.format or ("csv" if args.command == "sweep" else "json")
    payload = csv_text if fmt == "csv" else json_text
    if args.out is None:
        sys.stdout.write(payload)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
        meta = {
            "tool": "gaussmet",
            "version": __version__,
            "command": args.command,
            "format": fmt,
            "created_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
        with open(args.out + ".meta.json", "w", encoding="utf-8") as fh:
            fh.write(json.dumps(meta, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
