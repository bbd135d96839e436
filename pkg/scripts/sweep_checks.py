# scripts/sweep_checks.py
"""
Run every consistency check for each (m, g) of the sweep grid.
Outputs:
- results/checks_m{m}_g{g}.csv      (one row per check)
"""

from __future__ import annotations
import argparse
import sys
from pathlib import Path

# make src importable
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from splitspectral.checks import run_checks
from splitspectral.config import load_config
from splitspectral.data_io import RESULTS, records_to_frame, save_table


def sweep_one(m: int, g: int, settings) -> bool:
    rows = run_checks(m, g, settings)
    df = records_to_frame([r.to_record() for r in rows], index="name")
    path = save_table(df, f"checks_m{m}_g{g}", out_dir=RESULTS)
    failed = [r.name for r in rows if not r.passed]
    status = "ok" if not failed else f"FAILED {failed}"
    print(f"[sweep] m={m} g={g}: {len(rows)} checks, {status} -> {path}")
    return not failed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, help="Run only this m")
    ap.add_argument("--g", type=int, help="Run only this g")
    ap.add_argument("--config", default=None)
    args = ap.parse_args()

    settings = load_config(args.config)
    ms = [args.m] if args.m else list(settings.sweep_m)
    gs = [args.g] if args.g else list(settings.sweep_g)

    ok = True
    for m in ms:
        for g in gs:
            ok &= sweep_one(m, g, settings)
    sys.exit(0 if ok else 2)


if __name__ == "__main__":
    main()
