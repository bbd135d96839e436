# src/splitspectral/divisors.py
"""
Divisors supported on the N = 4m(g−1) zeros of a_m: even-weight bit patterns
modulo b0 = (1, ..., 1). The weight of the canonical representative is the
invariant M of the class.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from scipy.special import comb

from .config import HARD_MAX_ENUM_N
from .errors import ParityError, RangeError, ResourceLimitError
from .gf2 import BitVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Divisor:
    support: BitVector

    def __post_init__(self):
        if self.support.weight % 2:
            raise ParityError(
                f"divisor {self.support.to_string()} has odd weight {self.support.weight}; "
                "only even subdivisors of [a_m] are allowed"
            )

    @property
    def N(self) -> int:
        return len(self.support)

    @property
    def weight(self) -> int:
        return self.support.weight

    def complement(self) -> "Divisor":
        return Divisor(self.support + BitVector([1] * self.N))

    def to_string(self) -> str:
        return self.support.to_string()


@dataclass(frozen=True)
class DivisorClass:
    rep: Divisor
    M: int

    @property
    def N(self) -> int:
        return self.rep.N

    @property
    def partner_M(self) -> int:
        """Invariant of the same class read with σ replaced by −σ."""
        return self.N - self.M

    def members(self) -> tuple[Divisor, Divisor]:
        return self.rep, self.rep.complement()


def _check_N(N: int, minimum: int = 0) -> None:
    if not isinstance(N, int) or N < minimum:
        raise RangeError(f"N must be an integer >= {minimum}, got {N!r}")
    if N % 2:
        raise ParityError(f"N must be even, got {N}")


def canonicalize(d: Divisor) -> DivisorClass:
    """
    Representative of {d, d + b0}: the member of smaller weight; at weight N/2
    the lexicographically smaller bit string (index 0 most significant).
    """
    _check_N(d.N)
    other = d.complement()
    if d.weight != other.weight:
        rep = d if d.weight < other.weight else other
    else:
        rep = min(d, other, key=lambda x: x.to_string())
    return DivisorClass(rep=rep, M=rep.weight)


def _check_M(N: int, M: int) -> None:
    if not isinstance(M, int):
        raise RangeError(f"M must be an integer, got {M!r}")
    if M % 2:
        raise ParityError(f"M must be even, got {M}")
    if not 0 <= M <= N:
        raise RangeError(f"M must lie in [0, {N}], got {M}")


def count_by_M(N: int, M: int) -> int:
    """Number of divisors (not classes) with invariant M: C(N, M)."""
    _check_N(N)
    _check_M(N, M)
    return int(comb(N, M, exact=True))


def classes_with_M(N: int, M: int) -> int:
    """Number of classes whose canonical invariant is M."""
    _check_N(N)
    _check_M(N, M)
    if 2 * M < N:
        return count_by_M(N, M)
    if 2 * M == N:
        return count_by_M(N, M) // 2
    return 0


def count_classes(N: int) -> int:
    _check_N(N, minimum=2)
    return 2 ** (N - 2)


def count_classes_by_M(N: int) -> int:
    """Σ over canonical M of classes_with_M; equals count_classes(N)."""
    _check_N(N, minimum=2)
    return sum(classes_with_M(N, M) for M in range(0, N // 2 + 1, 2))


def multisection_identity(N: int) -> bool:
    """Σ_{M even} C(N, M) == 2^{N−1}."""
    _check_N(N, minimum=2)
    return sum(int(comb(N, M, exact=True)) for M in range(0, N + 1, 2)) == 2 ** (N - 1)


def _canonical_values(N: int, cap: int) -> Iterator[int]:
    """Canonical representatives as N-bit integers (index 0 = most significant bit), ascending."""
    half = N // 2

    def walk(pos: int, value: int, weight: int) -> Iterator[int]:
        if pos == N:
            if weight % 2 == 0 and (weight < half or (weight == half and not value >> (N - 1))):
                yield value
            return
        yield from walk(pos + 1, value << 1, weight)
        if weight < cap:
            yield from walk(pos + 1, (value << 1) | 1, weight + 1)

    yield from walk(0, 0, 0)


def enumerate_classes(N: int, max_M: int | None = None, max_n: int = HARD_MAX_ENUM_N) -> Iterator[DivisorClass]:
    """
    Every class exactly once, ordered by the bit string of its representative.
    Refuses N above `max_n` (never above the library cap of 28).
    """
    _check_N(N, minimum=2)
    limit = min(max_n, HARD_MAX_ENUM_N)
    if N > limit:
        raise ResourceLimitError(f"enumeration of N={N} refused; limit is N <= {limit}")
    cap = N // 2 if max_M is None else min(N // 2, max_M)
    if cap < 0:
        raise RangeError(f"max_M must be >= 0, got {max_M}")
    logger.debug("enumerating divisor classes for N=%d (max weight %d)", N, cap)
    for value in _canonical_values(N, cap):
        bits = BitVector([(value >> (N - 1 - i)) & 1 for i in range(N)])
        yield DivisorClass(rep=Divisor(bits), M=bits.weight)
