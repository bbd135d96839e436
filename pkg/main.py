"""
Master pipeline to rebuild every check table and grading table.
Runs the full workflow automatically:
    1. Run all consistency checks for each (m, g) of the sweep grid
    2. Write grading tables for both groups
    3. Summarize check results across the grid
"""

from __future__ import annotations
import subprocess
import sys


def run_step(desc: str, cmd: list[str]):
    print(f"\n=== {desc} ===")
    subprocess.run([sys.executable] + cmd, check=True)


def main():
    # 1) Checks (grid comes from config/defaults.yaml)
    run_step("STEP 1: Running consistency checks", ["scripts/sweep_checks.py"])

    # 2) Grading tables
    run_step("STEP 2: Generating grading tables", ["scripts/grading_tables.py"])

    # 3) Summary matrix
    run_step("STEP 3: Summarizing results", ["scripts/summarize_results.py"])

    print("\nAll steps completed successfully.")


if __name__ == "__main__":
    main()
