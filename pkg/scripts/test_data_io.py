"""Tests for text forms, deterministic JSON and table output."""
import json

import pytest

from splitspectral.data_io import (
    dumps,
    format_bitvector,
    load_table,
    parse_bitvector,
    parse_divisor,
    parse_divisor_class,
    records_to_frame,
    save_table,
)
from splitspectral.errors import ParityError
from splitspectral.gf2 import BitVector


def test_parse_bitvector():
    v = parse_bitvector("0x3:6")
    assert list(v) == [1, 1, 0, 0, 0, 0]
    assert format_bitvector(v) == "0x3:6"
    assert parse_bitvector("0x0:14") == BitVector.zeros(14)


@pytest.mark.parametrize("text", ["0x3", "3:6", "0x3:abc", "0x100:4", "0x1:-1"])
def test_parse_bitvector_rejects(text):
    with pytest.raises(ValueError):
        parse_bitvector(text)


def test_parse_divisor_forms():
    assert parse_divisor("01100000").support == BitVector.from_string("01100000")
    assert parse_divisor("0x6:8").support == BitVector.from_string("01100000")
    assert parse_divisor_class("11111111", 8).M == 0
    with pytest.raises(ValueError):
        parse_divisor("0110", N=8)
    with pytest.raises(ParityError):
        parse_divisor("01000000")
    with pytest.raises(ValueError):
        parse_divisor("01x0")


def test_dumps_is_sorted_and_keeps_big_integers():
    payload = {"b": 2**100, "a": [BitVector.basis(4, 1)], "c": (1, 2)}
    text = dumps(payload)
    assert text == dumps(dict(reversed(list(payload.items()))))
    assert list(json.loads(text)) == ["a", "b", "c"]
    assert json.loads(text)["b"] == 2**100
    assert json.loads(text)["a"] == ["0x2:4"]


def test_records_to_frame():
    df = records_to_frame(
        [{"M": 0, "count": 2**70, "dims": [1, 2]}, {"M": 2, "count": 5, "dims": []}],
        index="M",
    )
    assert list(df.index) == [0, 2]
    assert df.loc[0, "count"] == str(2**70)
    assert df.loc[0, "dims"] == "[1, 2]"


def test_table_roundtrip_on_disk(tmp_path):
    df = records_to_frame([{"name": "rh", "passed": True}], index="name")
    path = save_table(df, "checks", out_dir=tmp_path)
    assert path.exists()
    back = load_table("checks", out_dir=tmp_path)
    assert list(back["name"]) == ["rh"]
    assert bool(back.loc[0, "passed"])
