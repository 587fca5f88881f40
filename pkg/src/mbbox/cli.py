"""Command-line front-end: point evaluation, expansion, verification, sweeps.

Commands
--------
``eval``    evaluate one kinematic point with a chosen method
``expand``  emit the Laurent coefficients of the regulator expansion
``verify``  run the cross-validation suites on fixed grids
``sweep``   evaluate a JSON grid of points and write a report

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 numerical non-convergence.  Reports are JSON on stdout (or ``--out``),
with full-precision repr floats and no locale formatting.

Environment overrides: ``MBBOX_TOL`` (verification tolerance),
``MBBOX_QUAD_NODES`` and ``MBBOX_QUAD_HEIGHT`` (contour quadrature
defaults).  Explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import mb_engine, oracles
from .closed_form import (
    Kinematics,
    massless_box,
    massless_box_alt,
    massless_box_laurent,
    onemass_box,
    onemass_box_alt,
    onemass_box_laurent,
)
from .errors import (
    DegenerateKinematics,
    InfeasibleContour,
    MbboxError,
    NonConvergence,
)
from .series import RegulatorSeries
from .specfun import (
    ABOVE,
    BELOW,
    PV,
    CutPrescription,
    f21_1e,
    f21_2e,
    f21_11,
    f21_11_split,
    f21_general_series,
    appell_f2_reduced,
    cut_power,
    gamma,
    li2,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NOT_CONVERGED = 3

_CUTS = {"pv": PV, "above": ABOVE, "below": BELOW}
_METHODS = ("closed", "closed_alt", "mb", "residue", "feynman")


@dataclass
class RunConfig:
    """Validated inputs of one evaluation request."""

    integral: str
    s: float
    t: float
    eps: float
    msq: float | None = None
    method: str = "closed"
    cut: CutPrescription = PV
    tol: float = 1e-8
    quad_nodes: int | None = None
    quad_height: float | None = None

    def kinematics(self) -> Kinematics:
        if self.integral == "massless":
            return Kinematics(s=self.s, t=self.t, eps=self.eps)
        if self.msq is None:
            raise DegenerateKinematics("onemass integral requires --msq")
        return Kinematics(s=self.s, t=self.t, eps=self.eps, msq=self.msq)


@dataclass
class Report:
    """Machine-readable result container with a lossless JSON form."""

    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({"records": self.records, "summary": self.summary},
                          indent=2, allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        raw = json.loads(text)
        return cls(records=raw["records"], summary=raw["summary"])


def _c(value: complex) -> dict:
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def _laurent_json(series: RegulatorSeries) -> list:
    return [{"power": p, **_c(series.coeff(p))}
            for p in range(series.min_power, series.max_power + 1)]


def _jsonable(obj):
    if isinstance(obj, complex):
        return _c(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    return obj


def _env_default(name, cast, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise DegenerateKinematics(f"bad {name}={raw!r}")


def _contours(cfg: RunConfig, k: Kinematics):
    if cfg.integral == "massless":
        spec = mb_engine.select_contour_massless(k.eps, k)
        height = cfg.quad_height or spec.height
        nodes = cfg.quad_nodes or int(2 * height * 64)
        return mb_engine.ContourSpec(spec.abscissa, height, nodes)
    ca, cb = mb_engine.select_contour_onemass(k.eps)
    height = cfg.quad_height or ca.height
    nodes = cfg.quad_nodes or ca.nodes
    return (mb_engine.ContourSpec(ca.abscissa, height, nodes),
            mb_engine.ContourSpec(cb.abscissa, height, nodes))


def _evaluate(cfg: RunConfig) -> dict:
    k = cfg.kinematics()
    record: dict = {
        "integral": cfg.integral,
        "kinematics": {"s": k.s, "t": k.t, "msq": k.msq, "eps": k.eps},
        "method": cfg.method,
    }
    if cfg.integral == "massless":
        if cfg.method == "closed":
            box = massless_box(k, cfg.cut)
        elif cfg.method == "closed_alt":
            box = massless_box_alt(k, cfg.cut)
        elif cfg.method == "feynman":
            box = oracles.feynman_1d_massless(k)
        elif cfg.method == "mb":
            box = mb_engine.mb_massless_eval(k, _contours(cfg, k))
        elif cfg.method == "residue":
            br = mb_engine.residue_massless(k, cfg.cut)
            record["breakdown"] = _jsonable(
                {**br.pieces, "delta_pole_coefficient": br.delta_pole_coefficient})
            record["value"] = _c(br.pieces["total"])
            record["diagnostics"] = {}
            return record
        else:
            raise DegenerateKinematics(f"unknown method {cfg.method}")
    else:
        if cfg.method == "closed":
            box = onemass_box(k, cfg.cut)
        elif cfg.method == "closed_alt":
            box = onemass_box_alt(k, cfg.cut)
        elif cfg.method == "feynman":
            box = oracles.feynman_1d_onemass(k)
        elif cfg.method == "mb":
            ca, cb = _contours(cfg, k)
            box = mb_engine.mb_onemass_eval(k, ca, cb)
        elif cfg.method == "residue":
            br = mb_engine.residue_onemass(k, cfg.cut)
            record["breakdown"] = _jsonable(
                {**br.pieces, "delta_pole_coefficient": br.delta_pole_coefficient})
            record["value"] = _c(br.pieces["total"])
            record["diagnostics"] = {}
            return record
        else:
            raise DegenerateKinematics(f"unknown method {cfg.method}")
    record["value"] = _c(box.value)
    record["diagnostics"] = _jsonable(box.diagnostics)
    return record


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

MASSLESS_GRID = tuple((s, t, e)
                      for s in (-0.5, -1.0, -3.0)
                      for t in (-0.5, -1.0, -3.0)
                      for e in (0.2, 0.3, 0.45))

ONEMASS_GRID = tuple((s, t, m2, e)
                     for s in (-0.5, -1.0, -2.0)
                     for t in (-0.5, -1.0, -2.0)
                     for m2 in (-0.5, -1.0, -2.0)
                     for e in (0.25, 0.4)
                     if m2 not in (s, t, s + t))


def _check(checks: list, name: str, deviation: float, tol: float):
    checks.append({"check": name, "deviation": deviation, "tol": tol,
                   "pass": bool(deviation <= tol)})


def verify_identities(tol: float = 1e-11) -> Report:
    """Two-sided numeric checks of the function-level identities."""
    checks: list = []
    cut_tol = 10.0 * tol

    for x in (0.2, 0.5, 1.0, 2.5, 6.0, 0.9):
        lhs = li2(-x) + li2(-1.0 / x)
        rhs = -0.5 * math.log(x) ** 2 - math.pi ** 2 / 6.0
        _check(checks, f"dilog inversion sum x={x}", abs(lhs - rhs), tol)

    for x in (0.1, 0.25, 0.5, 0.8, 0.95):
        lhs = li2(1.0 - x)
        rhs = math.pi ** 2 / 6.0 - li2(x) - math.log(x) * math.log(1.0 - x)
        _check(checks, f"dilog reflection x={x}", abs(lhs - rhs), tol)

    for (e, z) in ((0.3, 0.6), (0.4, 0.5), (0.25, -0.8), (0.7, 0.2), (0.55, -2.5)):
        lhs = f21_1e(z, e) / e
        rhs = 1.0 / e + z / (1.0 + e) * f21_2e(z, e)
        _check(checks, f"parameter-shift identity e={e} z={z}",
               abs(lhs - rhs) / max(1.0, abs(lhs)), tol)
    for (e, z) in ((0.3, 1.5), (0.45, 2.0), (0.2, 3.5), (0.6, 1.2), (0.35, 5.0)):
        for cut in (PV, ABOVE, BELOW):
            lhs = f21_1e(z, e, cut) / e
            rhs = 1.0 / e + z / (1.0 + e) * f21_2e(z, e, cut)
            _check(checks, f"parameter-shift identity e={e} z={z} {cut.value}",
                   abs(lhs - rhs) / max(1.0, abs(lhs)), cut_tol)

    for (s, t, e) in ((-1.0, -2.0, 0.3), (-3.0, -1.0, 0.45), (-0.5, -2.0, 0.2),
                      (-1.0, -1.0, 0.35), (-2.0, -3.0, 0.6)):
        for cut in (PV, ABOVE, BELOW):
            head, alg = f21_11_split(t / s, e, cut)
            direct = f21_11(-s / t, e, cut)
            _check(checks, f"resummation split s={s} t={t} e={e} {cut.value}",
                   abs(head + alg - direct) / max(1.0, abs(direct)), cut_tol)

    for (e, z) in ((0.3, -0.5), (0.45, -3.0), (0.2, 0.4), (0.35, -9.0), (0.6, 0.85)):
        # both cut-sensitive factors taken from above; the imaginary parts
        # cancel in the sum for z < 0 where the left side is real
        lhs = f21_11(z, e)
        head = -((1.0 - e) / e) / z * f21_1e(1.0 - 1.0 / z, e, ABOVE)
        tail = gamma(2.0 - e) * gamma(e) * cut_power(1.0 - z, -e) \
            * cut_power(z, e - 1.0, ABOVE)
        rhs = head + tail
        _check(checks, f"inverse-argument connection e={e} z={z}",
               abs(lhs - rhs) / max(1.0, abs(lhs)),
               cut_tol if z < 0.0 else tol)

    for (e, d, z) in ((0.3, 1e-3, 0.4), (0.45, 3e-3, 0.3), (0.25, 1e-3, 0.55),
                      (0.6, 2e-3, 0.2), (0.35, 5e-4, 0.7)):
        lhs = f21_general_series(1.0, e - d, 1.0 - d, z)
        c1 = gamma(1.0 - d) * gamma(-e) / (gamma(-d) * gamma(1.0 - e))
        c2 = gamma(1.0 - d) * gamma(e) / gamma(e - d)
        rhs = c1 * f21_general_series(1.0, e - d, 1.0 + e, 1.0 - z) \
            + c2 * (1.0 - z) ** (-e) * z ** d
        _check(checks, f"regulated connection e={e} d={d} z={z}",
               abs(lhs - rhs) / max(1.0, abs(lhs)), tol)

    for (b, bp, al, x, y) in ((1.0, 1.0, 1.7, 0.2, 0.3), (1.0, 1.0, 1.55, 0.3, 0.4),
                              (0.7, 1.3, 1.6, 0.2, 0.3), (1.0, 1.0, 1.75, -0.3, 0.4),
                              (1.2, 0.4, 2.3, 0.25, 0.35)):
        lhs = appell_f2_reduced(b, bp, al, x, y)
        rhs = oracles.f2_double_series(al, b, bp, al, al, x, y)
        _check(checks, f"appell reduction a={al} x={x} y={y}",
               abs(lhs - rhs) / max(1.0, abs(rhs)), tol)

    for e in (0.3, 0.45, 0.5, 0.7, 0.9):
        lhs = oracles.beta_oracle(e)
        rhs = abs(gamma(e)) ** 2 / gamma(2.0 * e).real
        _check(checks, f"beta integral e={e}", abs(lhs - rhs) / abs(rhs), 1e-10)

    failures = [c for c in checks if not c["pass"]]
    return Report(records=checks, summary={
        "suite": "identities",
        "checks": len(checks),
        "failures": len(failures),
        "max_deviation": max(c["deviation"] for c in checks),
    })


def verify_massless(tol_residue: float = 1e-10, tol_oracle: float = 1e-8,
                    tol_spurious: float = 1e-11, tol_pole: float = 1e-12) -> Report:
    """Four-way agreement plus cancellation checks on the massless grid."""
    checks: list = []
    for (s, t, e) in MASSLESS_GRID:
        k = Kinematics(s=s, t=t, eps=e)
        tag = f"s={s} t={t} e={e}"
        closed = massless_box(k).value
        br = mb_engine.residue_massless(k)
        _check(checks, f"residue vs closed {tag}",
               abs(br.pieces["total"] - closed) / abs(closed), tol_residue)
        _check(checks, f"spurious cancellation {tag}",
               abs(br.pieces["spurious_sum"]) / abs(closed), tol_spurious)
        _check(checks, f"regulator pole cancellation {tag}",
               abs(br.delta_pole_coefficient) / abs(closed), tol_pole)
        feyn = oracles.feynman_1d_massless(k).value
        _check(checks, f"feynman vs closed {tag}",
               abs(feyn - closed) / abs(closed), tol_oracle)
        mbv = mb_engine.mb_massless_eval(k)
        _check(checks, f"mb vs closed {tag}",
               abs(mbv.value - closed) / abs(closed), tol_oracle)
        _check(checks, f"mb doubling within estimate {tag}",
               mbv.diagnostics["node_doubling_delta"],
               mbv.diagnostics["error_estimate"])
        spec = mb_engine.select_contour_massless(e, k)
        shifted = mb_engine.ContourSpec(-1.0 + 0.75 * e, spec.height, spec.nodes)
        drift = abs(mb_engine.mb_massless_eval(k, shifted).value - mbv.value)
        _check(checks, f"abscissa-shift drift {tag}", drift / abs(closed), 1e-10)
    failures = [c for c in checks if not c["pass"]]
    return Report(records=checks, summary={
        "suite": "massless",
        "checks": len(checks),
        "failures": len(failures),
        "max_deviation": max(c["deviation"] for c in checks),
    })


def verify_onemass(tol_residue: float = 1e-10, tol_spurious: float = 1e-11,
                   tol_mb: float = 1e-6) -> Report:
    """Residue/closed/contour agreement on the one-mass grid, plus the massless limit."""
    checks: list = []
    for (s, t, m2, e) in ONEMASS_GRID:
        k = Kinematics(s=s, t=t, eps=e, msq=m2)
        tag = f"s={s} t={t} m2={m2} e={e}"
        closed = onemass_box(k).value
        br = mb_engine.residue_onemass(k)
        _check(checks, f"residue vs closed {tag}",
               abs(br.pieces["total"] - closed) / abs(closed), tol_residue)
        _check(checks, f"spurious cancellation {tag}",
               abs(br.pieces["spurious_sum"]) / abs(closed), tol_spurious)
        mbv = mb_engine.mb_onemass_eval(k)
        _check(checks, f"double-contour vs closed {tag}",
               abs(mbv.value - closed) / abs(closed), tol_mb)
        _check(checks, f"mb doubling within estimate {tag}",
               mbv.diagnostics["node_doubling_delta"],
               mbv.diagnostics["error_estimate"])
    for (s, t, e) in ((-1.0, -2.0, 0.3), (-0.5, -3.0, 0.45)):
        base = massless_box(Kinematics(s=s, t=t, eps=e)).value
        m2s = (-1e-2, -1e-3, -1e-4)
        diffs = [abs(onemass_box(Kinematics(s=s, t=t, eps=e, msq=m2)).value - base)
                 for m2 in m2s]
        slope = np.polyfit(np.log(np.abs(m2s)), np.log(diffs), 1)[0]
        _check(checks, f"massless-limit slope s={s} t={t} e={e}",
               abs(slope - e), 0.05)
    failures = [c for c in checks if not c["pass"]]
    return Report(records=checks, summary={
        "suite": "onemass",
        "checks": len(checks),
        "failures": len(failures),
        "max_deviation": max(c["deviation"] for c in checks),
    })


def verify_all(tol: float = 1e-11) -> Report:
    parts = [verify_identities(tol), verify_massless(), verify_onemass()]
    records = [r for p in parts for r in p.records]
    failures = sum(p.summary["failures"] for p in parts)
    return Report(records=records, summary={
        "suite": "all",
        "checks": len(records),
        "failures": failures,
        "max_deviation": max(p.summary["max_deviation"] for p in parts),
    })


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_eval(cfg: RunConfig) -> Report:
    record = _evaluate(cfg)
    return Report(records=[record], summary={"points": 1, "failures": 0})


def cmd_expand(cfg: RunConfig, order: int = 0) -> Report:
    if order > 0 or order < -2:
        raise DegenerateKinematics("expansion order limited to -2 .. 0")
    k = cfg.kinematics()
    series = massless_box_laurent(k) if cfg.integral == "massless" \
        else onemass_box_laurent(k)
    record = {
        "integral": cfg.integral,
        "kinematics": {"s": k.s, "t": k.t, "msq": k.msq, "eps": k.eps},
        "method": "laurent",
        "laurent": [row for row in _laurent_json(series) if row["power"] <= order],
        "provenance": "analytic-series",
    }
    return Report(records=[record], summary={"points": 1, "failures": 0})


def cmd_verify(suite: str, tol: float = 1e-11) -> Report:
    if suite == "identities":
        return verify_identities(tol)
    if suite == "massless":
        return verify_massless()
    if suite == "onemass":
        return verify_onemass()
    if suite == "all":
        return verify_all(tol)
    raise DegenerateKinematics(f"unknown suite {suite!r}")


def _sweep_point(index: int, point: dict) -> dict:
    methods = point.get("methods", ["closed"])
    base = {
        "index": index,
        "inputs": {key: point.get(key) for key in
                   ("integral", "s", "t", "msq", "eps")},
    }
    try:
        values = {}
        diagnostics = {}
        for method in methods:
            cfg = RunConfig(integral=point.get("integral", "massless"),
                            s=float(point["s"]), t=float(point["t"]),
                            eps=float(point["eps"]),
                            msq=point.get("msq"), method=method)
            rec = _evaluate(cfg)
            values[method] = rec["value"]
            diagnostics[method] = rec.get("diagnostics", {})
        deviations = {}
        names = sorted(values)
        for i, m1 in enumerate(names):
            for m2 in names[i + 1:]:
                v1 = complex(values[m1]["re"], values[m1]["im"])
                v2 = complex(values[m2]["re"], values[m2]["im"])
                deviations[f"{m1}/{m2}"] = abs(v1 - v2) / max(abs(v1), 1e-300)
        return {**base, "status": "ok", "values": values,
                "deviations": deviations, "diagnostics": diagnostics}
    except DegenerateKinematics as exc:
        return {**base, "status": "skipped-degenerate", "reason": str(exc)}


def cmd_sweep(grid_file: str, out_file: str | None, tol: float = 1e-8) -> Report:
    try:
        with open(grid_file) as fh:
            grid = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DegenerateKinematics(f"cannot read grid file: {exc}")
    points = grid["points"] if isinstance(grid, dict) else grid
    if not isinstance(points, list):
        raise DegenerateKinematics("grid must be a list of points")
    with ThreadPoolExecutor(max_workers=min(4, max(1, len(points)))) as pool:
        records = list(pool.map(lambda ip: _sweep_point(*ip), enumerate(points)))
    failures = 0
    warnings = 0
    max_dev = 0.0
    for rec in records:
        if rec["status"] == "skipped-degenerate":
            warnings += 1
            continue
        worst = max(rec["deviations"].values(), default=0.0)
        max_dev = max(max_dev, worst)
        rec["pass"] = worst <= tol
        if not rec["pass"]:
            failures += 1
    report = Report(records=records, summary={
        "points": len(records), "failures": failures,
        "warnings": warnings, "max_deviation": max_dev, "tol": tol,
    })
    if out_file:
        with open(out_file, "w") as fh:
            fh.write(report.to_json() + "\n")
    return report


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbbox",
        description="One-loop box integrals: closed forms, contour quadrature, "
                    "residue resummation, and their cross-validation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kinematics(p):
        p.add_argument("--integral", choices=("massless", "onemass"),
                       default="massless")
        p.add_argument("--s", type=float, required=True)
        p.add_argument("--t", type=float, required=True)
        p.add_argument("--msq", type=float, default=None)
        p.add_argument("--eps", type=float, required=True)

    p_eval = sub.add_parser("eval", help="evaluate one point")
    add_kinematics(p_eval)
    p_eval.add_argument("--method", choices=_METHODS, default="closed")
    p_eval.add_argument("--cut", choices=sorted(_CUTS), default="pv")
    p_eval.add_argument("--nodes", type=int, default=None)
    p_eval.add_argument("--height", type=float, default=None)
    p_eval.add_argument("--json", action="store_true",
                        help="emit the full JSON record (default: value only)")
    p_eval.add_argument("--out", default=None)

    p_exp = sub.add_parser("expand", help="Laurent coefficients of the expansion")
    add_kinematics(p_exp)
    p_exp.add_argument("--order", type=int, default=0,
                       help="highest emitted power (-2 .. 0)")
    p_exp.add_argument("--json", action="store_true")
    p_exp.add_argument("--out", default=None)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", choices=("identities", "massless", "onemass", "all"),
                       default="all")
    p_ver.add_argument("--tol", type=float, default=None)
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--out", default=None)

    p_sw = sub.add_parser("sweep", help="evaluate a JSON grid of points")
    p_sw.add_argument("grid_file")
    p_sw.add_argument("--out", default=None)
    p_sw.add_argument("--tol", type=float, default=None)
    return parser


def _emit(report: Report, args) -> None:
    text = report.to_json()
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        env_tol = _env_default("MBBOX_TOL", float, None)
        env_nodes = _env_default("MBBOX_QUAD_NODES", int, None)
        env_height = _env_default("MBBOX_QUAD_HEIGHT", float, None)
        if args.command == "eval":
            cfg = RunConfig(integral=args.integral, s=args.s, t=args.t,
                            eps=args.eps, msq=args.msq, method=args.method,
                            cut=_CUTS[args.cut],
                            quad_nodes=args.nodes or env_nodes,
                            quad_height=args.height or env_height)
            report = cmd_eval(cfg)
            if args.json or args.out:
                _emit(report, args)
            else:
                value = report.records[0]["value"]
                print(f"{value['re']!r} {value['im']!r}")
            return EXIT_OK
        if args.command == "expand":
            cfg = RunConfig(integral=args.integral, s=args.s, t=args.t,
                            eps=args.eps, msq=args.msq)
            report = cmd_expand(cfg, order=args.order)
            if args.json or args.out:
                _emit(report, args)
            else:
                for row in report.records[0]["laurent"]:
                    print(f"{row['power']:+d} {row['re']!r} {row['im']!r}")
            return EXIT_OK
        if args.command == "verify":
            tol = args.tol or env_tol or 1e-11
            report = cmd_verify(args.suite, tol)
            _emit(report, args)
            return EXIT_OK if report.summary["failures"] == 0 else EXIT_VERIFY_FAILED
        if args.command == "sweep":
            tol = args.tol or env_tol or 1e-8
            report = cmd_sweep(args.grid_file, args.out, tol)
            if not args.out:
                _emit(report, args)
            return EXIT_OK if report.summary["failures"] == 0 else EXIT_VERIFY_FAILED
        raise DegenerateKinematics(f"unknown command {args.command}")
    except (DegenerateKinematics, InfeasibleContour) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except NonConvergence as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except MbboxError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
