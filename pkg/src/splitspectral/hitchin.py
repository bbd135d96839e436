# src/splitspectral/hitchin.py
"""
Graded bundles of the Hitchin components as multisets of powers of K.

Exponents are half-integers stored as integer numerators over 2, so K^{-3/2}
is the numerator -3. No floating point anywhere.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import RangeError


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise RangeError(f"m must be an integer >= 1, got {m!r}")


@dataclass(frozen=True)
class GradedBundle:
    numerators: tuple[int, ...]
    twist: int = 0
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(sorted(int(n) for n in self.numerators)))

    @classmethod
    def from_exponents(cls, exponents: Iterable[Fraction | int], label: str = "") -> "GradedBundle":
        nums = []
        for e in exponents:
            twice = Fraction(e) * 2
            if twice.denominator != 1:
                raise ValueError(f"exponent {e} is not a half-integer")
            nums.append(int(twice))
        return cls(tuple(nums), label=label)

    @property
    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, 2) for n in self.numerators)

    @property
    def rank(self) -> int:
        return len(self.numerators)

    def degree(self, g: int) -> int:
        """(2g − 2)·Σ exponents."""
        return (g - 1) * sum(self.numerators)

    @property
    def det_trivial(self) -> bool:
        return sum(self.numerators) == 0

    @property
    def self_dual(self) -> bool:
        return Counter(self.numerators) == Counter(-n for n in self.numerators)

    def dual(self) -> "GradedBundle":
        return GradedBundle(tuple(-n for n in self.numerators), -self.twist, f"{self.label}*")

    def shift(self, numerator: int) -> "GradedBundle":
        """Tensor by K^{numerator/2}."""
        return GradedBundle(tuple(n + numerator for n in self.numerators), self.twist + numerator, self.label)

    def union(self, other: "GradedBundle", label: str = "") -> "GradedBundle":
        return GradedBundle(self.numerators + other.numerators, self.twist, label or self.label)

    def even_part(self, label: str = "") -> "GradedBundle":
        """Summands with even integer exponent."""
        return GradedBundle(tuple(n for n in self.numerators if n % 4 == 0), self.twist, label)

    def odd_part(self, label: str = "") -> "GradedBundle":
        """Summands with odd integer exponent."""
        return GradedBundle(tuple(n for n in self.numerators if n % 4 == 2), self.twist, label)

    def same_summands(self, other: "GradedBundle") -> bool:
        return self.numerators == other.numerators

    def to_record(self, g: int | None = None) -> dict:
        rec = {
            "label": self.label,
            "exponents": [str(e) for e in self.exponents],
            "rank": self.rank,
            "det_trivial": self.det_trivial,
            "self_dual": self.self_dual,
        }
        if g is not None:
            rec["degree"] = self.degree(g)
        return rec


def sp_hitchin_E(m: int) -> GradedBundle:
    """E = ⊕_{i=1}^{2m} K^{−m+i−1/2}."""
    _check_m(m)
    return GradedBundle(tuple(2 * (-m + i) - 1 for i in range(1, 2 * m + 1)), label="E")


def so_hitchin_V(m: int) -> GradedBundle:
    """V = ⊕_{i=0}^{2m} K^{−m+i}."""
    _check_m(m)
    return GradedBundle(tuple(2 * (-m + i) for i in range(0, 2 * m + 1)), label="V")


def sp_hitchin_W(m: int) -> GradedBundle:
    """W = ⊕_{i=m+1}^{2m} K^{−m+i−1/2}, so that E = W ⊕ W*."""
    _check_m(m)
    return GradedBundle(tuple(2 * (-m + i) - 1 for i in range(m + 1, 2 * m + 1)), label="W")


def w_parts(m: int) -> tuple[GradedBundle, GradedBundle]:
    """(W+, W−): the summands of W with even i and odd i respectively."""
    _check_m(m)
    plus = tuple(2 * (-m + i) - 1 for i in range(m + 1, 2 * m + 1) if i % 2 == 0)
    minus = tuple(2 * (-m + i) - 1 for i in range(m + 1, 2 * m + 1) if i % 2 == 1)
    return GradedBundle(plus, label="W+"), GradedBundle(minus, label="W-")


def parity_split_V(m: int) -> tuple[GradedBundle, GradedBundle]:
    """
    (V_even, V_odd). For m even V+ is the even part and V− the odd part;
    for m odd the labels are interchanged.
    """
    v = so_hitchin_V(m)
    even_label, odd_label = ("V+", "V-") if m % 2 == 0 else ("V-", "V+")
    return v.even_part(even_label), v.odd_part(odd_label)


def v_plus_minus(m: int) -> tuple[GradedBundle, GradedBundle]:
    """(V+, V−) with the parity convention applied."""
    even, odd = parity_split_V(m)
    return (even, odd) if m % 2 == 0 else (odd, even)


def sl_twisted_hitchin(m: int) -> GradedBundle:
    """K²-twisted SL(m,R) Hitchin bundle ⊕_{i=0}^{m−1} K^{−m+1+2i}."""
    _check_m(m)
    return GradedBundle(tuple(2 * (-m + 1 + 2 * i) for i in range(m)), label="V~")


def rank_m_parity_part(m: int) -> GradedBundle:
    even, odd = parity_split_V(m)
    return even if even.rank == m else odd


def orthogonal_from_symplectic(m: int) -> GradedBundle:
    """E ⊗ K^{−1/2} ⊕ K^m."""
    e = sp_hitchin_E(m)
    return e.shift(-1).union(GradedBundle((2 * m,)), label="V")


def w_pm_rank_check(m: int) -> dict:
    """
    Rank bookkeeping of V± against W± ⊕ W±*. The V± part holding the K⁰
    summand has rank 2|W| + 1, the other 2|W|. Exponent-level equality is
    reported separately and is not expected to hold without a twist.
    """
    w_plus, w_minus = w_parts(m)
    v_plus, v_minus = v_plus_minus(m)
    rows = {}
    for name, v, w in (("+", v_plus, w_plus), ("-", v_minus, w_minus)):
        carries_zero = 0 in v.numerators
        expected = 2 * w.rank + (1 if carries_zero else 0)
        doubled = w.union(w.dual())
        rows[name] = {
            "rank_V": v.rank,
            "rank_W": w.rank,
            "carries_K0": carries_zero,
            "expected_rank_V": expected,
            "rank_ok": v.rank == expected,
            "exponent_level_match": doubled.same_summands(v),
        }
    return {"m": m, "parts": rows, "ok": all(r["rank_ok"] for r in rows.values())}


def hitchin_report(m: int, g: int | None = None) -> dict:
    """All five bundles with their structural checks."""
    e, v, w = sp_hitchin_E(m), so_hitchin_V(m), sp_hitchin_W(m)
    even, odd = parity_split_V(m)
    sl = sl_twisted_hitchin(m)
    checks = {
        "E_det_trivial": e.det_trivial,
        "V_det_trivial": v.det_trivial,
        "E_self_dual": e.self_dual,
        "V_self_dual": v.self_dual,
        "V_even_self_dual": even.self_dual,
        "V_odd_self_dual": odd.self_dual,
        "W_not_self_dual": not w.self_dual,
        "V_from_E": orthogonal_from_symplectic(m).same_summands(v),
        "W_union_dual_is_E": w.union(w.dual()).same_summands(e),
        "parity_ranks": (even.rank, odd.rank) == ((m + 1, m) if m % 2 == 0 else (m, m + 1)),
        "sl_is_rank_m_part": sl.same_summands(rank_m_parity_part(m)),
        "w_pm_ranks": w_pm_rank_check(m)["ok"],
    }
    return {
        "m": m,
        "bundles": {b.label: b.to_record(g) for b in (e, v, w, even, odd, sl)},
        "checks": checks,
        "ok": all(checks.values()),
    }
