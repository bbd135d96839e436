"""Tests for even divisors modulo b0, their counts and enumeration."""
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import comb

from splitspectral.divisors import (
    Divisor,
    canonicalize,
    classes_with_M,
    count_by_M,
    count_classes,
    count_classes_by_M,
    enumerate_classes,
    multisection_identity,
)
from splitspectral.errors import ParityError, RangeError, ResourceLimitError
from splitspectral.gf2 import BitVector


def div(text: str) -> Divisor:
    return Divisor(BitVector.from_string(text))


@pytest.mark.parametrize(
    "text, rep, M",
    [
        ("00000000", "00000000", 0),
        ("11111111", "00000000", 0),
        ("11110000", "00001111", 4),
        ("11111100", "00000011", 2),
    ],
)
def test_canonicalize_examples(text, rep, M):
    c = canonicalize(div(text))
    assert c.rep.to_string() == rep
    assert c.M == M
    assert c.partner_M == 8 - M


def test_odd_divisor_is_rejected():
    with pytest.raises(ParityError):
        div("1000")


@given(st.integers(0, 2**12 - 1))
@settings(max_examples=200, deadline=None)
def test_canonicalize_is_constant_on_classes(value):
    bits = BitVector.from_int(value, 12)
    if bits.weight % 2:
        bits = bits + BitVector.basis(12, 0)
    d = Divisor(bits)
    assert canonicalize(d) == canonicalize(d.complement())
    assert canonicalize(d).M <= 6


@pytest.mark.parametrize("N, M, expected", [(8, 2, 28), (8, 0, 1), (8, 4, 70)])
def test_count_by_M(N, M, expected):
    assert count_by_M(N, M) == expected


def test_count_by_M_rejects_bad_M():
    with pytest.raises(ParityError):
        count_by_M(8, 3)
    with pytest.raises(RangeError):
        count_by_M(8, 10)


@pytest.mark.parametrize("N, expected", [(8, 64), (4, 4), (2, 1)])
def test_count_classes(N, expected):
    assert count_classes(N) == expected
    assert count_classes_by_M(N) == expected


def test_class_count_decomposition_n8():
    assert [classes_with_M(8, M) for M in (0, 2, 4, 6, 8)] == [1, 28, 35, 0, 0]


@pytest.mark.parametrize("N", list(range(2, 62, 2)))
def test_multisection_identity(N):
    assert multisection_identity(N)


def test_multisection_big_integer():
    total = sum(int(comb(40, M, exact=True)) for M in range(0, 41, 2))
    assert total == 2**39


def test_enumerate_n4_by_hand():
    classes = list(enumerate_classes(4))
    assert [c.rep.to_string() for c in classes] == ["0000", "0011", "0101", "0110"]
    assert [c.M for c in classes] == [0, 2, 2, 2]


def test_enumerate_small_cases():
    assert len(list(enumerate_classes(2))) == 1
    assert len(list(enumerate_classes(8, max_M=0))) == 1


@pytest.mark.parametrize("N", [2, 4, 6, 8, 10, 12, 14, 16, 18, 20])
def test_enumeration_matches_formulas(N):
    seen = Counter(c.M for c in enumerate_classes(N, max_n=20))
    assert sum(seen.values()) == count_classes(N)
    for M in range(0, N // 2 + 1, 2):
        assert seen[M] == classes_with_M(N, M)


def test_enumeration_yields_each_class_once():
    reps = [canonicalize(c.rep) for c in enumerate_classes(10)]
    assert len(set(r.rep.to_string() for r in reps)) == len(reps) == 2**8
    assert all(r.rep == c.rep for r, c in zip(reps, enumerate_classes(10)))


def test_enumeration_guard():
    with pytest.raises(ResourceLimitError):
        list(enumerate_classes(24, max_n=20))
    with pytest.raises(ResourceLimitError):
        list(enumerate_classes(30, max_n=40))
