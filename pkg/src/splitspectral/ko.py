# src/splitspectral/ko.py
"""
KO(Σ) ≅ Z ⊕ H¹(Σ, Z2) ⊕ Z2 with the Whitney-sum law

    (r, x, u) + (s, y, v) = (r + s, x + y, u + v + (x, y)),

where (x, y) is the standard intersection form, and the analytic mod 2 index
φ modelled by a quadratic refinement q with q(0) = ε_Σ.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import DimensionMismatch
from .gf2 import BitVector, QuadraticRefinement, SymplecticForm


@dataclass(frozen=True)
class KOClass:
    rank: int
    w1: BitVector
    w2: int

    def __post_init__(self):
        if len(self.w1) % 2:
            raise DimensionMismatch(f"w1 must live in H1 of a surface (even length), got {len(self.w1)}")
        object.__setattr__(self, "w2", int(self.w2) & 1)

    @property
    def dim(self) -> int:
        return len(self.w1)

    def __add__(self, other: "KOClass") -> "KOClass":
        if self.dim != other.dim:
            raise DimensionMismatch(f"cannot add KO classes over H1 of dims {self.dim} and {other.dim}")
        form = SymplecticForm.standard(self.dim // 2)
        return KOClass(
            self.rank + other.rank,
            self.w1 + other.w1,
            self.w2 ^ other.w2 ^ form.pairing(self.w1, other.w1),
        )

    def __neg__(self) -> "KOClass":
        # (x, x) = 0, so only the rank changes sign
        return KOClass(-self.rank, self.w1, self.w2)

    def __sub__(self, other: "KOClass") -> "KOClass":
        return self + (-other)

    def determinant(self) -> "KOClass":
        return alpha(self.w1)

    def to_record(self) -> dict:
        return {"rank": self.rank, "w1": {"hex": self.w1.to_hex(), "len": self.dim}, "w2": self.w2}


def zero(dim: int) -> KOClass:
    return KOClass(0, BitVector.zeros(dim), 0)


def trivial(rank: int, dim: int) -> KOClass:
    return KOClass(rank, BitVector.zeros(dim), 0)


def alpha(x: BitVector) -> KOClass:
    """Class of the flat line bundle with w1 = x."""
    return KOClass(1, x, 0)


def omega_point(dim: int) -> KOClass:
    """Ω = O_p + O_p* − 2: rank 0, w1 = 0, w2 = [Σ]."""
    return KOClass(0, BitVector.zeros(dim), 1)


def whitney_sum(classes: Iterable[KOClass]) -> KOClass:
    return reduce(lambda a, b: a + b, classes)


def phi(c: KOClass, q: QuadraticRefinement) -> int:
    """φ(r, x, w) = (r − 1)·ε_Σ + q(x) + w, with ε_Σ = q(0)."""
    if c.dim != q.dim:
        raise DimensionMismatch(f"class over H1 of dim {c.dim}, refinement of dim {q.dim}")
    return (((c.rank - 1) * q.base_parity) + q(c.w1) + c.w2) & 1


def w2_from_phi(c: KOClass, q: QuadraticRefinement) -> int:
    """
    φ(V) + φ(det V) + (rank − 1)·φ(O). The last term vanishes for an even spin
    structure, where this is the classical ω2 = φ(V) + φ(det V).
    """
    return (phi(c, q) + phi(c.determinant(), q) + (c.rank - 1) * phi(trivial(1, c.dim), q)) & 1
