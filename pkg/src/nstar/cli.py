"""Command-line front end.

Commands: star, bracket, conj, kernel, omega, verify, spectrum,
residual, oracle.  Exact results print in canonical graded-lex form;
reports are emitted as JSON or CSV.  An optional ./nstar.json config
file supplies defaults; explicit flags win.

Exit codes: 0 success, 1 a guaranteed audit claim failed, 2 usage error
(bad flags, malformed expressions, dimension mismatches).
"""

from __future__ import annotations

import argparse
import cmath
import csv
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .audit import all_guaranteed_hold, reports_to_json, run_suite
from .exprs import ExprError, contains_wave, lower_poly, lower_wave, parse_expression
from .oscillator import HamiltonianSpec, QuantumNumber, energy, residual_report
from .starcore import ThetaConfig, conjugate_star_n, star_bracket, star_n
from .waves import (
    GridSpec,
    WorkBudgetError,
    freq_cross,
    grid_oracle_star,
    kernel_exponent,
    save_lattice,
    star_waves,
)

CONFIG_PATH = "nstar.json"


class UsageError(Exception):
    def __init__(self, message: str, code: str = "usage", line: int | None = None,
                 col: int | None = None):
        super().__init__(message)
        self.code = code
        self.line = line
        self.col = col

    def to_json(self) -> str:
        body = {"code": self.code, "message": str(self)}
        if self.line is not None:
            body["line"] = self.line
            body["col"] = self.col
        return json.dumps({"error": body})


def _load_config() -> dict:
    path = Path(CONFIG_PATH)
    if not path.is_file():
        return {}
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed config file {CONFIG_PATH}: {exc}", code="config")
    if not isinstance(data, dict):
        raise UsageError(f"config file {CONFIG_PATH} must hold a JSON object", code="config")
    return data


def _setting(args, config, name, default):
    value = getattr(args, name, None)
    if value is not None:
        return value
    if name in config:
        return config[name]
    return default


def _parse_rational_list(text: str, what: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed {what} {text!r}: {exc}", code="usage")


def _parse_float_list(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed {what} {text!r}: {exc}", code="usage")


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed {what} {text!r}: {exc}", code="usage")


def _theta_config(args, config) -> ThetaConfig:
    n = int(_setting(args, config, "n", 3))
    theta_raw = _setting(args, config, "theta", None)
    if theta_raw is None:
        theta = (Fraction(1),) * n
    else:
        theta = _parse_rational_list(str(theta_raw), "theta")
    if len(theta) != n:
        raise UsageError(f"theta must have {n} components, got {len(theta)}")
    try:
        return ThetaConfig(n, theta)
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_exprs(texts, n):
    return [parse_expression(t, n) for t in texts]


def _emit(text_body: str, json_body, args, config) -> None:
    fmt = _setting(args, config, "format", "text")
    out_path = _setting(args, config, "output", None)
    if fmt == "json":
        print(json.dumps(json_body))
    else:
        print(text_body)
    if out_path:
        Path(out_path).write_text(json.dumps(json_body, indent=2) + "\n")


def _cmd_star(args, config) -> int:
    cfg = _theta_config(args, config)
    if len(args.exprs) != cfg.n:
        raise UsageError(f"star takes exactly {cfg.n} expressions, got {len(args.exprs)}")
    nodes = _parse_exprs(args.exprs, cfg.n)
    if any(contains_wave(nd) for nd in nodes):
        waves = [lower_wave(nd, cfg.n) for nd in nodes]
        result = star_waves(waves, cfg)
        _emit(str(result), json.loads(result.to_json()), args, config)
        return 0
    polys = [lower_poly(nd, cfg.n) for nd in nodes]
    result = star_n(polys, cfg)
    _emit(str(result), {"n": cfg.n, "terms": result.to_json_terms()}, args, config)
    return 0


def _cmd_bracket(args, config) -> int:
    cfg = _theta_config(args, config)
    if len(args.exprs) != cfg.n:
        raise UsageError(
            f"bracket takes the two outer factors plus {cfg.n - 2} middle factors "
            f"({cfg.n} expressions), got {len(args.exprs)}")
    nodes = _parse_exprs(args.exprs, cfg.n)
    polys = [lower_poly(nd, cfg.n) for nd in nodes]
    f, h, mids = polys[0], polys[1], polys[2:]
    result = star_bracket(f, h, mids, cfg)
    _emit(str(result), {"n": cfg.n, "terms": result.to_json_terms()}, args, config)
    return 0


def _cmd_conj(args, config) -> int:
    cfg = _theta_config(args, config)
    if len(args.exprs) != cfg.n:
        raise UsageError(f"conj takes exactly {cfg.n} expressions, got {len(args.exprs)}")
    nodes = _parse_exprs(args.exprs, cfg.n)
    polys = [lower_poly(nd, cfg.n) for nd in nodes]
    result = conjugate_star_n(polys, cfg)
    _emit(str(result), {"n": cfg.n, "terms": result.to_json_terms()}, args, config)
    return 0


def _cmd_kernel(args, config) -> int:
    cfg = _theta_config(args, config)
    if len(args.freqs) != cfg.n:
        raise UsageError(f"kernel takes {cfg.n} frequency vectors, got {len(args.freqs)}")
    vectors = [_parse_float_list(v, "frequency vector") for v in args.freqs]
    for v in vectors:
        if len(v) != cfg.n:
            raise UsageError(f"frequency vector must have {cfg.n} components, got {len(v)}")
    expo = kernel_exponent(vectors, cfg)
    mult = cmath.exp(expo)
    text = f"exponent = {expo.real!r} + {expo.imag!r}i\nmultiplier = {mult.real!r} + {mult.imag!r}i"
    body = {"exponent": {"re": expo.real, "im": expo.imag},
            "multiplier": {"re": mult.real, "im": mult.imag}}
    _emit(text, body, args, config)
    return 0


def _cmd_omega(args, config) -> int:
    q = _parse_float_list(args.q, "frequency vector")
    r = _parse_float_list(args.r, "frequency vector")
    if len(q) != 3 or len(r) != 3:
        raise UsageError("omega is defined for dimension 3 vectors")
    w = freq_cross(q, r)
    _emit(f"omega = {list(w)}", {"omega": list(w)}, args, config)
    return 0


def _cmd_verify(args, config) -> int:
    seed = int(_setting(args, config, "seed", 0))
    trials = int(_setting(args, config, "trials", 100))
    tolerance = float(_setting(args, config, "tolerance", 1e-9))
    reports = run_suite(seed=seed, trials=trials, tolerance=tolerance)
    out_path = _setting(args, config, "output", "nstar_audit.json")
    Path(out_path).write_text(reports_to_json(reports) + "\n")
    for rep in reports:
        print(f"{rep.claim}: {rep.verdict}")
    ok = all_guaranteed_hold(reports)
    print(f"report written to {out_path}")
    print("guaranteed claims: " + ("all hold" if ok else "FAILURE"))
    return 0 if ok else 1


def _hamiltonian_spec(args, config, n) -> HamiltonianSpec:
    lam0 = getattr(args, "lambda0", None)
    lam2 = getattr(args, "lambda2", None)
    rows = []
    if lam0 is not None:
        rows.append(_parse_rational_list(lam0, "lambda0"))
    if lam2 is not None:
        if lam0 is None:
            raise UsageError("--lambda2 requires --lambda0")
        rows.append(_parse_rational_list(lam2, "lambda2"))
    for row in rows:
        if len(row) != n:
            raise UsageError(f"diagonal coefficient rows must have {n} entries")
    pairs = {}
    for spec_text in getattr(args, "pair", None) or []:
        try:
            key_text, val_text = spec_text.split("=")
            i, j = (int(v) for v in key_text.split(","))
            pairs[(i, j)] = Fraction(val_text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"malformed pair coupling {spec_text!r}: {exc}")
    try:
        return HamiltonianSpec(n, lambda_pair=pairs,
                               diag_lambdas=tuple(rows) if rows else None)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_spectrum(args, config) -> int:
    cfg = _theta_config(args, config)
    spec = _hamiltonian_spec(args, config, cfg.n)
    nbar = QuantumNumber(_parse_int_list(args.nbar, "nbar")) if args.nbar else QuantumNumber((0,) * cfg.n)
    if len(nbar.nbar) != cfg.n:
        raise UsageError(f"nbar must have {cfg.n} components")
    k = int(_setting(args, config, "k", 1))
    if not 1 <= k <= cfg.n:
        raise UsageError(f"k must be in 1..{cfg.n}")
    value = energy(k, nbar, cfg, spec)
    rows = [{"k": kk, "nbar": list(nbar.nbar),
             "energy": str(energy(kk, nbar, cfg, spec))}
            for kk in range(1, cfg.n + 1)]
    text = f"E = {value}"
    body = {"k": k, "nbar": list(nbar.nbar), "energy": str(value), "table": rows}
    fmt = _setting(args, config, "format", "text")
    out_path = _setting(args, config, "output", None)
    print(json.dumps(body) if fmt == "json" else text)
    if out_path:
        if out_path.endswith(".csv"):
            with open(out_path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["k", "nbar", "energy"])
                for row in rows:
                    writer.writerow([row["k"], " ".join(map(str, row["nbar"])), row["energy"]])
        else:
            Path(out_path).write_text(json.dumps(body, indent=2) + "\n")
    return 0


def _cmd_residual(args, config) -> int:
    cfg = _theta_config(args, config)
    spec = _hamiltonian_spec(args, config, cfg.n)
    k = int(_setting(args, config, "k", 0))
    order = int(_setting(args, config, "order", 4))
    npoints = int(_setting(args, config, "points", 20))
    seed = int(_setting(args, config, "seed", 0))
    rng = random.Random(seed)
    points = [tuple(Fraction(rng.randint(-200, 200), 100) for _ in range(cfg.n))
              for _ in range(npoints)]
    report = residual_report(spec, cfg, k, order, points)
    fmt = _setting(args, config, "format", "text")
    out_path = _setting(args, config, "output", None)
    if fmt == "json":
        print(json.dumps(report))
    else:
        print(f"residuals for k={k}, n={cfg.n}, E={report['energy']} "
              f"({npoints} points, order <= {order})")
        print("order  ground_max      ground_mean     eigen_max       eigen_mean")
        for row in report["rows"]:
            print(f"{row['order']:>5}  {row['ground_max']:<14.8g}  {row['ground_mean']:<14.8g}"
                  f"  {row['eigen_max']:<14.8g}  {row['eigen_mean']:<14.8g}")
    if out_path:
        if out_path.endswith(".csv"):
            with open(out_path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["order", "point_index", "ground_residual", "eigen_residual"])
                for m, (grow, erow) in enumerate(zip(report["ground_residuals"],
                                                     report["eigen_residuals"])):
                    for pi, (gv, ev) in enumerate(zip(grow, erow)):
                        writer.writerow([m, pi, repr(gv), repr(ev)])
        else:
            Path(out_path).write_text(json.dumps(report, indent=2) + "\n")
    return 0


def _cmd_oracle(args, config) -> int:
    cfg = _theta_config(args, config)
    if len(args.exprs) != cfg.n:
        raise UsageError(f"oracle takes exactly {cfg.n} wave expressions, got {len(args.exprs)}")
    N = int(_setting(args, config, "N", 8))
    L = float(_setting(args, config, "L", 2 * np.pi))
    budget = float(_setting(args, config, "budget", 1e8))
    grid = GridSpec(cfg.n, N, L)
    nodes = _parse_exprs(args.exprs, cfg.n)
    waves = [lower_wave(nd, cfg.n) for nd in nodes]
    closed = star_waves(waves, cfg)
    samples = [w.sample_on_grid(grid) for w in waves]
    lattice = grid_oracle_star(samples, grid, cfg, budget=budget)
    reference = closed.sample_on_grid(grid)
    scale = max(1e-300, float(np.abs(reference).max()))
    err = float(np.abs(lattice - reference).max()) / scale
    text = f"max relative error = {err!r}"
    body = {"max_relative_error": err, "N": N, "L": L,
            "closed_form": json.loads(closed.to_json())}
    fmt = _setting(args, config, "format", "text")
    print(json.dumps(body) if fmt == "json" else text)
    out_path = _setting(args, config, "output", None)
    if out_path:
        save_lattice(out_path, lattice, grid)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None, help="space dimension (default 3)")
    parser.add_argument("--theta", type=str, default=None,
                        help="comma-separated rational deformation parameters")
    parser.add_argument("--format", choices=("text", "json"), default=None)
    parser.add_argument("--output", type=str, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nstar",
        description="Exact n-ary star products, identity audits, and the oscillator application.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("star", help="star product of n expressions")
    _add_common(p)
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("bracket", help="antisymmetrized product of the outer factors")
    _add_common(p)
    p.add_argument("exprs", nargs="+", help="f h middle1 [middle2 ...]")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("conj", help="conjugate star product of n expressions")
    _add_common(p)
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=_cmd_conj)

    p = sub.add_parser("kernel", help="plane-wave kernel exponent for n frequency vectors")
    _add_common(p)
    p.add_argument("freqs", nargs="+", help="comma-separated float vectors")
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("omega", help="antisymmetric frequency combination (n=3)")
    _add_common(p)
    p.add_argument("q")
    p.add_argument("r")
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("verify", help="run the full identity audit suite")
    _add_common(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectrum", help="closed-form oscillator eigenvalues")
    _add_common(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--nbar", type=str, default=None)
    p.add_argument("--lambda0", type=str, default=None,
                   help="comma-separated diagonal quadratic coefficients")
    p.add_argument("--lambda2", type=str, default=None,
                   help="comma-separated diagonal quartic coefficients")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("residual", help="residual table for the eigenvalue equations")
    _add_common(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--lambda0", type=str, default=None)
    p.add_argument("--lambda2", type=str, default=None)
    p.add_argument("--pair", action="append", default=None,
                   help="pair coupling as i,j=value (repeatable)")
    p.set_defaults(func=_cmd_residual)

    p = sub.add_parser("oracle", help="cross-check wave star product on a lattice")
    _add_common(p)
    p.add_argument("--N", type=int, default=None, help="points per axis")
    p.add_argument("--L", type=float, default=None, help="period")
    p.add_argument("--budget", type=float, default=None, help="kernel work budget")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config()
        return args.func(args, config)
    except ExprError as exc:
        err = UsageError(exc.message, code="parse-error", line=exc.line, col=exc.col)
        print(err.to_json(), file=sys.stderr)
        return 2
    except UsageError as exc:
        print(exc.to_json(), file=sys.stderr)
        return 2
    except WorkBudgetError as exc:
        print(UsageError(str(exc), code="budget").to_json(), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
