"""Command-line interface.

Exit codes: 0 success, 1 a computed check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import fixtures
from .assembly import check_functional_equation, check_residues, rank_zeta_polynomial
from .curve import DEFAULT_PRECISION, CurveDatum, validate_weil_datum
from .errors import WengZetaError
from .invariants import invariant_table
from .rational import decimal_str, frac_str
from .rh import asymptotic_series, rh_status
from .selftest import run_selftest
from .uniformity import DEFAULT_SU_BOUND, su_crosscheck, su_report_json

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    curve: Optional[CurveDatum] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    fmt: str = "pretty"
    precision: int = DEFAULT_PRECISION
    force: bool = False
    su_bound: int = DEFAULT_SU_BOUND
    samples: int = 3
    decimal: bool = False
    output: Optional[str] = None

    def __post_init__(self):
        if self.precision < 16:
            raise UsageError("--precision must be >= 16")
        for name in ("n", "n_max"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be >= 1")

    def ranks(self, default_max: int = 1) -> range:
        if self.n is not None:
            return range(self.n, self.n + 1)
        return range(1, (self.n_max or default_max) + 1)


def load_curve(source: str) -> CurveDatum:
    text = source.strip()
    if not text.startswith("{"):
        path = Path(source)
        if not path.is_file():
            raise UsageError(f"--curve is neither inline JSON nor a readable file: {source}")
        text = path.read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad curve JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise UsageError("curve JSON must be an object")
    return CurveDatum.from_json(obj)


def _require_valid(cfg: RunConfig):
    report = validate_weil_datum(cfg.curve.artin, cfg.precision)
    if not report.ok and not cfg.force:
        raise UsageError(f"curve fails validation ({', '.join(report.failed())}); use --force to proceed")


def _cell(v):
    return frac_str(v) if isinstance(v, Fraction) else v


# ---------------------------------------------------------------- commands
# each returns (json payload, csv/pretty rows, ok)


def cmd_artin(cfg: RunConfig):
    C = cfg.curve
    report = validate_weil_datum(C.artin, cfg.precision)
    payload = {
        "curve": C.to_json(),
        "checks": [
            {"name": c.name, "passed": c.passed, "margin": c.margin, "detail": c.detail}
            for c in report.checks
        ],
        "ok": report.ok,
    }
    rows = [{"check": c.name, "passed": c.passed, "margin": c.margin or "", "detail": c.detail} for c in report.checks]
    return payload, rows, report.ok


def cmd_invariants(cfg: RunConfig):
    _require_valid(cfg)
    tab = invariant_table(cfg.curve)
    rows = []
    for n in cfg.ranks(default_max=5):
        row = {k: _cell(v) for k, v in tab.row(n).items()}
        if cfg.decimal:
            row.update({f"{k}_decimal": decimal_str(v) for k, v in tab.row(n).items() if k != "n"})
        rows.append(row)
    return {"curve": cfg.curve.to_json(), "rows": rows}, rows, True


def cmd_zeta_poly(cfg: RunConfig):
    _require_valid(cfg)
    polys, rows, ok = [], [], True
    for n in cfg.ranks():
        Z = rank_zeta_polynomial(cfg.curve, n)
        fe, res = check_functional_equation(Z), check_residues(Z)
        ok &= fe and res
        entry = Z.to_json() | {"beta0": frac_str(Z.beta0), "functional_equation": fe, "residues": res}
        polys.append(entry)
        rows.append({"n": n, "Q": Z.Q, "alpha0": entry["alpha0"], "coeffs": " ".join(entry["coeffs"]),
                     "functional_equation": fe, "residues": res})
    return {"curve": cfg.curve.to_json(), "polynomials": polys}, rows, ok


def cmd_rh_check(cfg: RunConfig):
    _require_valid(cfg)
    reports, rows, ok = [], [], True
    for n in cfg.ranks():
        rep = rh_status(rank_zeta_polynomial(cfg.curve, n), cfg.precision)
        ok &= rep.holds
        js = rep.to_json()
        reports.append(js)
        row = {"n": n, "Q": rep.Q, "status": rep.status}
        if rep.split is not None:
            row.update({k: js["split"][k] for k in ("sum", "product", "discriminant")})
        row["max_root_deviation"] = str(rep.max_root_deviation())[:24]
        rows.append(row)
    return {"curve": cfg.curve.to_json(), "reports": reports}, rows, ok


def cmd_asymptotics(cfg: RunConfig):
    _require_valid(cfg)
    series = asymptotic_series(cfg.curve, cfg.n_max or 20, cfg.precision)
    text = series.to_csv(digits=cfg.precision, decimal=cfg.decimal)
    return text, None, True


def cmd_su_verify(cfg: RunConfig):
    _require_valid(cfg)
    results = []
    ok = True
    for n in cfg.ranks(default_max=4):
        evals = su_crosscheck(cfg.curve, n, cfg.samples, cfg.su_bound)
        ok &= all(e.equal for e in evals)
        results.append(su_report_json(n, evals))
    rows = [{"n": r["n"], "y": s["y"], "equal": s["equal"]} for r in results for s in r["samples"]]
    payload = results[0] if len(results) == 1 else {"reports": results}
    return payload, rows, ok


def cmd_selftest(cfg: RunConfig):
    ok = run_selftest(emit=lambda line: print(line, flush=True))
    return None, None, ok


COMMANDS = {
    "artin": cmd_artin,
    "invariants": cmd_invariants,
    "zeta-poly": cmd_zeta_poly,
    "rh-check": cmd_rh_check,
    "asymptotics": cmd_asymptotics,
    "su-verify": cmd_su_verify,
    "selftest": cmd_selftest,
}

# ---------------------------------------------------------------- output


def _pretty(rows) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    widths = {k: max(len(k), *(len(str(r.get(k, ""))) for r in rows)) for k in keys}
    lines = ["  ".join(k.ljust(widths[k]) for k in keys)]
    lines += ["  ".join(str(r.get(k, "")).ljust(widths[k]) for k in keys) for r in rows]
    return "\n".join(lines) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def render(cfg: RunConfig, payload, rows) -> str:
    if isinstance(payload, str):
        return payload
    if payload is None:
        return ""
    if cfg.fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if cfg.fmt == "csv":
        return _csv(rows) if rows else ""
    return _pretty(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wengzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--curve", help="curve JSON, inline or a file path")
    src.add_argument("--fixture", help=f"built-in curve: {', '.join(fixtures.CURVES)}")
    common.add_argument("--format", dest="fmt", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="decimal digits for numeric columns")
    common.add_argument("--force", action="store_true", help="proceed past failed Weil-datum checks")
    common.add_argument("--decimal", action="store_true", help="add rounded decimal columns")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    ranged = argparse.ArgumentParser(add_help=False)
    grp = ranged.add_mutually_exclusive_group()
    grp.add_argument("--n", type=int)
    grp.add_argument("--n-max", type=int)

    sub.add_parser("artin", parents=[common], help="derive and validate the Weil polynomial")
    sub.add_parser("invariants", parents=[common, ranged], help="vhat, beta_hat(0), beta(0), alpha(0), alpha(n)")
    sub.add_parser("zeta-poly", parents=[common, ranged], help="P_n(T) with functional-equation/residue flags")
    sub.add_parser("rh-check", parents=[common, ranged], help="exact rank-n RH verdict")
    p = sub.add_parser("asymptotics", parents=[common], help="large-n residual series as CSV")
    p.add_argument("--n-max", type=int, default=20)
    p = sub.add_parser("su-verify", parents=[common, ranged], help="special-uniformity crosscheck")
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--su-bound", type=int, default=DEFAULT_SU_BOUND)
    sub.add_parser("selftest", help="run the oracle suite on built-in curves")
    return parser


def config_from_args(args) -> RunConfig:
    curve = None
    if args.command != "selftest":
        if getattr(args, "fixture", None):
            try:
                curve = fixtures.get(args.fixture)
            except KeyError as exc:
                raise UsageError(str(exc.args[0])) from None
        elif getattr(args, "curve", None):
            curve = load_curve(args.curve)
        else:
            raise UsageError("one of --curve / --fixture is required")
    return RunConfig(
        command=args.command,
        curve=curve,
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        fmt=getattr(args, "fmt", "pretty"),
        precision=getattr(args, "precision", DEFAULT_PRECISION),
        force=getattr(args, "force", False),
        su_bound=getattr(args, "su_bound", DEFAULT_SU_BOUND),
        samples=getattr(args, "samples", 3),
        decimal=getattr(args, "decimal", False),
        output=getattr(args, "output", None),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        payload, rows, ok = COMMANDS[cfg.command](cfg)
    except (UsageError, WengZetaError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(cfg, payload, rows)
    if cfg.output:
        Path(cfg.output).write_text(text)
    elif text:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
