# src/splitspectral/cli.py
"""
Command-line front end.

    python -m splitspectral report --m 2 --g 2
    python -m splitspectral check --m 2 --g 2 --format json
    python -m splitspectral fiber-count --m 2 --g 2 --M 2 --group so

Exit codes: 0 success, 1 invalid input, 2 failed invariant or failed check row.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from typing import Sequence, TextIO

import pandas as pd

from . import __version__
from .checks import run_checks
from .cohomology import build_cover_model, so_fiber_model
from .components import fiber_count, gothen_count, grading_table, maximal_case
from .config import Settings, load_config
from .covers import (
    CONVENTIONS,
    CurveParams,
    adjunction_checks,
    build_geometry,
    hitchin_base_dims,
    integrability_check,
    residual_base_dims,
    riemann_hurwitz_check,
    two_torsion_check,
)
from .data_io import dumps, format_bitvector, format_divisor_class, frame_to_text, parse_bitvector, parse_divisor_class, records_to_frame
from .degrees import profile_record, toledo_spectrum
from .divisors import classes_with_M, enumerate_classes
from .errors import InvariantViolation
from .hitchin import hitchin_report, w_pm_rank_check
from .ledger import ledger_records, typo_ledger
from .swdata import SpectralDatum, ko_classes, sw_classes, sw_classes_corollary

logger = logging.getLogger("splitspectral")

EXIT_OK, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Parse errors become exceptions so run() can map them to exit code 1."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="splitspectral", description="Spectral data of split real Higgs bundles over GF(2).")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default=None)
    common.add_argument("--eps-sigma", type=int, choices=[0, 1], default=None)
    common.add_argument("--eps-sbar", type=int, choices=[0, 1], default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--config", default=None, help="YAML settings file (default: config/defaults.yaml)")
    common.add_argument("--verbose", action="store_true")

    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, needs_g: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--g", type=int, required=needs_g, default=None)
        return sp

    add("report", "cover geometry, base dimensions and ledger")
    add("check", "run every consistency check; exit 2 on failure")
    gp = add("grade", "component grading table by M")
    gp.add_argument("--group", choices=["sp", "so"], required=True)
    sw = add("sw", "Stiefel-Whitney classes of a spectral datum")
    sw.add_argument("--F", required=True, help="class in H1(Sbar, Z2) as 0x<hex>:<len>")
    sw.add_argument("--D", required=True, help="even divisor on the N zeros of a_m, e.g. 01100000")
    sw.add_argument("--w2v", type=int, choices=[0, 1], default=0)
    dg = add("degrees", "degrees of U, U+-, W and the Toledo invariant")
    dg.add_argument("--M", type=int, required=True)
    add("hitchin", "graded bundles of the Hitchin components", needs_g=False)
    fc = add("fiber-count", "points per regular fibre with invariant M")
    fc.add_argument("--M", type=int, required=True)
    fc.add_argument("--group", choices=["sp", "so"], required=True)
    en = add("enumerate", "enumerate divisor classes modulo b0")
    en.add_argument("--max-M", type=int, default=None)
    en.add_argument("--limit", type=int, default=64, help="number of representatives listed")
    return ap


def _settings(args: argparse.Namespace) -> Settings:
    settings = load_config(args.config)
    updates = {}
    for flag, key in (("format", "format"), ("eps_sigma", "eps_sigma"), ("eps_sbar", "eps_sbar"), ("seed", "seed")):
        value = getattr(args, flag)
        if value is not None:
            updates[key] = value
    return replace(settings, **updates)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _emit(out: TextIO, settings: Settings, payload, frames: Sequence[tuple[str, pd.DataFrame]]) -> None:
    if settings.format == "json":
        out.write(dumps(payload) + "\n")
        return
    for i, (title, df) in enumerate(frames):
        if i:
            out.write("\n")
        out.write(f"== {title} ==\n{frame_to_text(df)}\n")


# commands -------------------------------------------------------------------

def cmd_report(args, settings, out) -> int:
    p = CurveParams(args.m, args.g)
    geo = build_geometry(p)
    payload = {
        "m": p.m,
        "g": p.g,
        "geometry": geo.to_record(),
        "hitchin_base_dims": hitchin_base_dims(p),
        "residual_base_dims": {c: residual_base_dims(p, c) for c in CONVENTIONS},
        "checks": {
            "riemann_hurwitz": riemann_hurwitz_check(geo),
            "adjunction": adjunction_checks(geo, p),
            "integrability": integrability_check(geo),
            "two_torsion": two_torsion_check(geo),
        },
        "ledger": ledger_records(p.m, p.g),
    }
    geo_df = pd.DataFrame({"value": geo.to_record()})
    _emit(out, settings, payload, [("geometry", geo_df), ("ledger", records_to_frame(payload["ledger"], "id"))])
    return EXIT_OK


def cmd_check(args, settings, out) -> int:
    rows = run_checks(args.m, args.g, settings)
    passed = all(r.passed for r in rows)
    payload = {"m": args.m, "g": args.g, "passed": passed, "checks": [r.to_record() for r in rows]}
    _emit(out, settings, payload, [("checks", records_to_frame(payload["checks"], "name"))])
    return EXIT_OK if passed else EXIT_INVARIANT


def cmd_grade(args, settings, out) -> int:
    table = grading_table(args.group, args.m, args.g)
    payload = {**table.to_record(), "maximal_case": maximal_case(args.m, args.g)}
    if args.m == 2 and args.group == "sp":
        payload["gothen_count"] = gothen_count(args.g)
    totals = pd.DataFrame({"value": {k: str(v) for k, v in table.totals.items()}})
    _emit(out, settings, payload, [(f"{table.group} m={args.m} g={args.g}", table.to_frame()), ("totals", totals)])
    return EXIT_OK


def cmd_sw(args, settings, out) -> int:
    p = CurveParams(args.m, args.g)
    model = build_cover_model(p, settings.eps_sigma, settings.eps_sbar)
    datum = SpectralDatum(parse_bitvector(args.F), parse_divisor_class(args.D, p.N), args.w2v)
    classes = sw_classes(datum, model)
    corollary = sw_classes_corollary(datum, model)
    if classes != corollary:
        raise InvariantViolation("spin-structure reading of the classes disagrees with the direct formula")
    plus, minus = ko_classes(datum, model)
    payload = {
        "m": p.m,
        "g": p.g,
        "F": format_bitvector(datum.F),
        "D": format_divisor_class(datum.D),
        "w2_total": datum.w2_total,
        "w1": format_bitvector(classes.w1_Vplus),
        "w2_Vplus": classes.w2_Vplus,
        "w2_Vminus": classes.w2_Vminus,
        "M": classes.M,
        "identity_component": classes.identity_component,
        "corollary_agrees": classes == corollary,
        "ko": {"Vplus": plus.to_record(), "Vminus": minus.to_record()},
        "eps_sigma": settings.eps_sigma,
        "eps_sbar": settings.eps_sbar,
    }
    flat = {k: v for k, v in payload.items() if not isinstance(v, dict)}
    _emit(out, settings, payload, [("classes", pd.DataFrame({"value": {k: str(v) for k, v in flat.items()}}))])
    return EXIT_OK


def cmd_degrees(args, settings, out) -> int:
    record = profile_record(args.m, args.g, args.M)
    ledger = [e.to_record() for e in typo_ledger(args.m, args.g) if e.id == "deg-U"]
    for entry in ledger:
        logger.warning("ledger %s: printed %s, adopted %s", entry["id"], entry["printed"], entry["adopted"])
    payload = {**record, "ledger": ledger, "toledo_spectrum": toledo_spectrum(args.m, args.g)}
    flat = {k: str(v) for k, v in record.items()}
    _emit(
        out,
        settings,
        payload,
        [("degrees", pd.DataFrame({"value": flat})), ("toledo", pd.DataFrame(payload["toledo_spectrum"]).set_index("M"))],
    )
    return EXIT_OK


def cmd_hitchin(args, settings, out) -> int:
    if args.g is not None:
        CurveParams(args.m, args.g)
    report = hitchin_report(args.m, args.g)
    payload = {**report, "w_pm": w_pm_rank_check(args.m)}
    bundles = records_to_frame(report["bundles"].values(), "label")
    checks = pd.DataFrame({"ok": report["checks"]})
    _emit(out, settings, payload, [("bundles", bundles), ("checks", checks)])
    if not report["ok"]:
        raise InvariantViolation(f"graded-bundle checks failed for m={args.m}")
    return EXIT_OK


def cmd_fiber_count(args, settings, out) -> int:
    count = fiber_count(args.group, args.m, args.g, args.M)
    payload = {"group": "SpReal" if args.group == "sp" else "SOSplit", "m": args.m, "g": args.g, "M": args.M, "count": count}
    if settings.format == "table":
        out.write(f"{count}\n")
    else:
        _emit(out, settings, payload, [])
    return EXIT_OK


def cmd_enumerate(args, settings, out) -> int:
    p = CurveParams(args.m, args.g)
    N = p.N
    by_M: dict[int, int] = {}
    listed = []
    for c in enumerate_classes(N, max_M=args.max_M, max_n=settings.max_enum_n):
        by_M[c.M] = by_M.get(c.M, 0) + 1
        if len(listed) < args.limit:
            listed.append(c.rep.to_string())
    expected = {M: classes_with_M(N, M) for M in by_M}
    payload = {
        "m": p.m,
        "g": p.g,
        "N": N,
        "count": sum(by_M.values()),
        "by_M": {str(M): n for M, n in sorted(by_M.items())},
        "matches_formula": by_M == expected,
        "representatives": listed,
    }
    if args.max_M is None:
        fiber = so_fiber_model(p, max_enum_n=settings.max_enum_n)
        payload["so_fiber_points_per_copy"] = fiber.points_per_copy
    by_df = pd.DataFrame({"classes": by_M, "formula": expected}).sort_index()
    _emit(out, settings, payload, [(f"classes N={N}", by_df)])
    return EXIT_OK


COMMANDS = {
    "report": cmd_report,
    "check": cmd_check,
    "grade": cmd_grade,
    "sw": cmd_sw,
    "degrees": cmd_degrees,
    "hitchin": cmd_hitchin,
    "fiber-count": cmd_fiber_count,
    "enumerate": cmd_enumerate,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)

    _configure_logging(args.verbose)
    try:
        settings = _settings(args)
        logger.debug("running %s with %s", args.command, settings)
        return COMMANDS[args.command](args, settings, out)
    except InvariantViolation as exc:
        logger.error("invariant violated: %s", exc)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
