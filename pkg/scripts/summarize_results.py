"""Summarize the per-(m, g) check tables into one pass/fail matrix."""
from __future__ import annotations
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import pandas as pd

from splitspectral.config import load_config
from splitspectral.data_io import RESULTS, frame_to_text, load_table, save_table


def load_checks(m: int, g: int) -> pd.Series:
    """Pass flags of results/checks_m{m}_g{g}.csv, indexed by check name."""
    try:
        df = load_table(f"checks_m{m}_g{g}", out_dir=RESULTS)
    except FileNotFoundError:
        raise FileNotFoundError(
            f"Missing checks table for m={m} g={g}. Run scripts/sweep_checks.py first."
        ) from None
    return df.set_index("name")["passed"].astype(bool).rename(f"m={m} g={g}")


def pass_matrix(ms, gs) -> pd.DataFrame:
    frames = [load_checks(m, g) for m in ms for g in gs]
    # checks that only apply to some m (cayley_rank4, maximal_copies) stay blank elsewhere
    wide = pd.concat(frames, axis=1)
    return wide.map(lambda x: "" if pd.isna(x) else ("ok" if x else "FAIL"))


def main():
    settings = load_config()
    wide = pass_matrix(settings.sweep_m, settings.sweep_g)
    print("\n=== Check results across the sweep grid ===")
    print(frame_to_text(wide))

    failures = int((wide == "FAIL").sum().sum())
    path = save_table(wide.rename_axis("check"), "summary", out_dir=RESULTS)
    print(f"\n{failures} failing cell(s). Saved {path}")
    sys.exit(0 if failures == 0 else 2)


if __name__ == "__main__":
    main()
