"""Command-line front end: ``subpinch analyze | sweep | verify``.

Manifold files are JSON::

    {
      "options": {"seed": 0, "budget": 32, "step": null},
      "entries": [
        {"model": "clifford", "n": 3, "lambda": 1.0},
        {"model": "cylinder", "n": 4, "H0": 1.0, "numeric": true, "grid": 4},
        {"immersion": {"map": ["cos(u1)", "sin(u1)", "u2"],
                       "box": [[0, 6.28], [-1, 1]], "grid": 5,
                       "ambient": {"c": 0}}, "name": "unit cylinder"},
        {"data": {"n": 4, "ambient": {"kmin": 0.8, "kmax": 1.0},
                  "points": [{"S": 0.1, "H": 0.0}]}}
      ]
    }

Exit codes: 0 success, 1 evaluation failure or verification violations,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import pinching as pf
from .frames import DEFAULT_RESTARTS
from .immersion import ImmersionError, ImmersionSpec
from .models import CliffordProduct, SphericalCylinder, exact_h, model_from_dict
from .oracle import SUITES, TrialConfig
from .report import analyze_samples, samples_from_immersion, samples_from_model, SampleSet
from .tensors import AmbientSpec, gauss_curvature, scalar_curvature

CSV_COLUMNS = ["family", "n", "param", "S", "H", "c", "lambda_M", "mu_M",
               "theorem_4_3_margin", "theorem_B_margin", "theorem_3_1_margin"]
DEFAULT_TRIALS = {"eq19": 100_000}


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _ambient(d) -> AmbientSpec:
    if not isinstance(d, dict):
        raise UsageError("ambient must be an object")
    if "c" in d:
        return AmbientSpec.space_form(float(d["c"]))
    if "kmin" in d and "kmax" in d:
        return AmbientSpec.bounds(float(d["kmin"]), float(d["kmax"]))
    raise UsageError("ambient needs 'c' or both 'kmin' and 'kmax'")


def load_manifold_file(text: str) -> dict:
    if not text.strip():
        raise UsageError("manifold file is empty")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        raise UsageError("manifold file needs an 'entries' list")
    if not doc["entries"]:
        raise UsageError("manifold file has no entries")
    return doc


def _entry_samples(entry: dict, idx: int, step):
    if not isinstance(entry, dict):
        raise UsageError(f"entry {idx}: expected an object")
    try:
        if "model" in entry:
            model = model_from_dict(entry)
            return samples_from_model(model, bool(entry.get("numeric", False)),
                                      int(entry.get("grid", 5)), step)
        if "immersion" in entry:
            im = entry["immersion"]
            box = im["box"]
            spec = ImmersionSpec(n=len(box), ambient=_ambient(im.get("ambient", {"c": 0})),
                                 map=im["map"], box=box, grid=int(im.get("grid", 5)),
                                 name=entry.get("name", f"immersion[{idx}]"))
            return samples_from_immersion(spec, step)
        if "data" in entry:
            d = entry["data"]
            pts = d["points"]
            return SampleSet.from_values(entry.get("name", f"data[{idx}]"), d["n"], _ambient(d["ambient"]),
                                         [pt["S"] for pt in pts], [pt["H"] for pt in pts], p=d.get("p"))
    except ImmersionError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"entry {idx}: {type(exc).__name__}: {exc}") from None
    raise UsageError(f"entry {idx}: needs one of 'model', 'immersion', 'data'")


def analyze(doc: dict, seed=None, budget=None, step=None) -> dict:
    opts = doc.get("options", {}) or {}
    seed = int(opts.get("seed", 0) if seed is None else seed)
    budget = int(opts.get("budget", DEFAULT_RESTARTS) if budget is None else budget)
    step = opts.get("step") if step is None else step
    reports = []
    for i, entry in enumerate(doc["entries"]):
        s = _entry_samples(entry, i, step)
        reports.append(analyze_samples(s, budget=budget, seed=seed, step=step))
    return {"schema": "subpinch.analysis/1", "reports": reports}


def sweep_rows(family: str, ns, params) -> list[dict]:
    if family not in ("clifford", "cylinder"):
        raise UsageError("family must be 'clifford' or 'cylinder'")
    params = [float(x) for x in params]
    if not params or any(not x > 0 for x in params):
        raise UsageError("parameter grid must be non-empty and positive")
    rows = []
    for n in ns:
        for x in params:
            model = CliffordProduct(n, x) if family == "clifford" else SphericalCylinder(n, x)
            h, amb = exact_h(model)
            S, H, c = h.S, h.H, amb.c
            R = scalar_curvature(gauss_curvature(h, amb))
            rows.append({
                "family": family, "n": n, "param": x, "S": S, "H": H, "c": c,
                "lambda_M": float(pf.lambda_values(S, H, n, c)),
                "mu_M": float(pf.mu_values(R, H, n, c)),
                "theorem_4_3_margin": float(pf.check_theorem_4_3(S, H, c, n)),
                "theorem_B_margin": float(pf.check_theorem_B(S, H, c, n)),
                "theorem_3_1_margin": float(pf.check_theorem_3_1(S, H, c)) if n == 3 else None,
            })
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(["" if r[k] is None else (f"{r[k]:.12g}" if isinstance(r[k], float) else r[k])
                    for k in CSV_COLUMNS])
    return buf.getvalue()


def verify(suites, trials=None, seed=42, scale=1.0, tol=1e-9) -> dict:
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    if trials is not None and trials < 1:
        raise UsageError("--trials must be >= 1")
    out = {"config": {"seed": seed, "scale": scale, "tol": tol, "trials": trials}, "suites": {}, "violations": []}
    for name in suites:
        cfg = TrialConfig(seed=seed, trials=trials or DEFAULT_TRIALS.get(name, 10_000), scale=scale, tol=tol)
        rep = SUITES[name](cfg)
        d = rep.to_dict()
        out["suites"][name] = d
        out["violations"].extend(dict(v, suite=name) for v in d["violations"])
    out["passed"] = not out["violations"]
    return out


def _write(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="subpinch", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="evaluate pinching hypotheses for a manifold file")
    a.add_argument("file")
    a.add_argument("--step", type=float, default=None, help="finite-difference step (default 1e-4 * box width)")
    a.add_argument("--seed", type=int, default=None)
    a.add_argument("--budget", type=int, default=None, help="frame-search restarts (0 disables searches)")
    a.add_argument("--out", default=None)

    s = sub.add_parser("sweep", help="CSV sweep over a model family")
    s.add_argument("--family", required=True, choices=["clifford", "cylinder"])
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.add_argument("--param-min", type=float)
    s.add_argument("--param-max", type=float)
    s.add_argument("--param-steps", type=int)
    s.add_argument("--spacing", choices=["linear", "log"], default="linear")
    s.add_argument("--values", type=float, nargs="+", help="explicit parameter values instead of a range")
    s.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="run randomized inequality suites")
    v.add_argument("--suite", action="append", help=f"one of {sorted(SUITES)}; repeatable (default all)")
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--scale", type=float, default=1.0)
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--out", default=None)
    return ap


def _sweep_params(args) -> list[float]:
    if args.values:
        return args.values
    if None in (args.param_min, args.param_max, args.param_steps):
        raise UsageError("give --values or all of --param-min/--param-max/--param-steps")
    if args.param_steps < 1 or args.param_min <= 0 or args.param_max < args.param_min:
        raise UsageError("bad parameter grid")
    if args.spacing == "log":
        return list(np.geomspace(args.param_min, args.param_max, args.param_steps))
    return list(np.linspace(args.param_min, args.param_max, args.param_steps))


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "analyze":
            try:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(str(exc)) from None
            result = analyze(load_manifold_file(text), args.seed, args.budget, args.step)
            _write(dumps(result), args.out)
            return 0
        if args.command == "sweep":
            if any(n < 2 for n in args.n):
                raise UsageError("--n values must be >= 2")
            _write(rows_to_csv(sweep_rows(args.family, args.n, _sweep_params(args))), args.out)
            return 0
        suites = []
        for s in args.suite or list(SUITES):
            suites.extend(x for x in s.split(",") if x)
        result = verify(suites, args.trials, args.seed, args.scale, args.tol)
        _write(dumps(result), args.out)
        return 0 if result["passed"] else 1
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"subpinch: error: {exc}", file=sys.stderr)
        return 2
    except (ImmersionError, ArithmeticError, ValueError) as exc:
        print(f"subpinch: evaluation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
