"""Write the component grading tables (by the invariant M) for every (m, g) of the sweep grid."""

from __future__ import annotations
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import pandas as pd

from splitspectral.components import grading_table
from splitspectral.config import load_config
from splitspectral.data_io import RESULTS, frame_to_text, save_table

GROUPS = ["sp", "so"]


def build_one(group: str, m: int, g: int, show: bool) -> pd.DataFrame:
    table = grading_table(group, m, g)
    df = table.to_frame()
    save_table(df, f"grading_{group}_m{m}_g{g}", out_dir=RESULTS)
    if show:
        print(f"\n=== {table.group} m={m} g={g} ===")
        print(frame_to_text(df))
    return pd.DataFrame(
        [{"group": table.group, "m": m, "g": g, **{k: str(v) for k, v in table.totals.items()}}]
    )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", choices=GROUPS, help="Generate only for this group")
    ap.add_argument("--show", action="store_true", help="Print each table")
    ap.add_argument("--config", default=None)
    args = ap.parse_args()

    settings = load_config(args.config)
    groups = [args.group] if args.group else GROUPS
    totals = [
        build_one(grp, m, g, args.show)
        for grp in groups
        for m in settings.sweep_m
        for g in settings.sweep_g
    ]
    out = pd.concat(totals, ignore_index=True)
    path = save_table(out, "grading_totals", out_dir=RESULTS)
    print(f"Saved {path}")


if __name__ == "__main__":
    main()
