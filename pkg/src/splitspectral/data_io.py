"""Text forms of bit vectors and divisors, deterministic JSON, and table output."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable

import numpy as np
import pandas as pd

from .divisors import Divisor, DivisorClass, canonicalize
from .gf2 import BitVector

RESULTS = Path("results")


def parse_bitvector(text: str) -> BitVector:
    """'0x…:len', little-endian by bit index."""
    value, sep, length = text.strip().partition(":")
    if not sep:
        raise ValueError(f"bit vector must look like '0x<hex>:<len>', got {text!r}")
    try:
        n = int(length)
    except ValueError as exc:
        raise ValueError(f"bit vector length must be an integer, got {length!r}") from exc
    if n < 0:
        raise ValueError(f"bit vector length must be >= 0, got {n}")
    return BitVector.from_hex(value, n)


def format_bitvector(v: BitVector) -> str:
    return f"{v.to_hex()}:{len(v)}"


def parse_divisor(text: str, N: int | None = None) -> Divisor:
    """
    Binary string with index 0 first ('01100000'), or '0x…:N' hex. When N is
    given the parsed length must match it.
    """
    text = text.strip()
    bits = parse_bitvector(text) if text.lower().startswith("0x") else BitVector.from_string(text)
    if N is not None and len(bits) != N:
        raise ValueError(f"divisor has {len(bits)} points, expected N = {N}")
    return Divisor(bits)


def parse_divisor_class(text: str, N: int | None = None) -> DivisorClass:
    return canonicalize(parse_divisor(text, N))


def format_divisor_class(d: DivisorClass) -> dict:
    return {"rep": d.rep.to_string(), "M": d.M, "N": d.N, "partner_M": d.partner_M}


def _default(obj: Any):
    if isinstance(obj, BitVector):
        return format_bitvector(obj)
    if isinstance(obj, DivisorClass):
        return format_divisor_class(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (tuple, set, frozenset)):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(payload: Any) -> str:
    """Sorted keys, two-space indent, big integers as plain JSON integers."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, default=_default)


def records_to_frame(records: Iterable[dict], index: str | None = None) -> pd.DataFrame:
    """Flat table of records; nested values are rendered as compact JSON, big integers as text."""
    rows = []
    for rec in records:
        row = {}
        for key, value in rec.items():
            if isinstance(value, (dict, list)):
                row[key] = json.dumps(value, sort_keys=True, default=_default)
            elif isinstance(value, int) and not isinstance(value, bool) and abs(value) >= 2**63:
                row[key] = str(value)
            else:
                row[key] = value
        rows.append(row)
    df = pd.DataFrame(rows)
    if index is not None and index in df.columns:
        df = df.set_index(index)
    return df


def frame_to_text(df: pd.DataFrame) -> str:
    return df.to_string()


def save_table(df: pd.DataFrame, name: str, out_dir: Path = RESULTS) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{name}.csv"
    df.to_csv(path)
    return path


def load_table(name: str, out_dir: Path = RESULTS) -> pd.DataFrame:
    path = out_dir / f"{name}.csv"
    return pd.read_csv(path)
