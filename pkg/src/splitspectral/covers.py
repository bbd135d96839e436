# src/splitspectral/covers.py
"""
Numeric geometry of the curve tower

    π: S → Σ (2m:1),   ρ: S → S̄ (2:1),   π̄: S̄ → Σ (m:1)

for a spectral curve η^{2m} + a_1 η^{2m-2} + ... + a_m = 0 in the total space of K.
All quantities are plain integers evaluated per (m, g).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import RangeError

CONVENTIONS = ("1..m-1", "1..2m-2")


@dataclass(frozen=True)
class CurveParams:
    m: int
    g: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise RangeError(f"m must be an integer >= 1, got {self.m!r}")
        if not isinstance(self.g, int) or self.g < 2:
            raise RangeError(f"g must be an integer >= 2, got {self.g!r}")

    @property
    def N(self) -> int:
        """Number of zeros of a_m, i.e. branch points of ρ."""
        return 4 * self.m * (self.g - 1)


@dataclass(frozen=True)
class CoverGeometry:
    g_S: int
    g_Sbar: int
    N: int
    deg_K: int
    dim_prym: int
    dim_hitchin_base: int
    dim_prym2: int
    dim_so_fiber: int

    def to_record(self) -> dict:
        return asdict(self)


def h0_canonical_power(k: int, g: int) -> int:
    """dim H⁰(Σ, K^k) for k ≥ 2 by Riemann-Roch: deg − g + 1 with deg = k(2g−2)."""
    if k < 2:
        raise RangeError(f"Riemann-Roch shortcut needs k >= 2, got {k}")
    return k * (2 * g - 2) - g + 1


def hitchin_base_dims(p: CurveParams) -> list[int]:
    """[dim H⁰(Σ, K^{2i})] for i = 1..m; each equals (4i − 1)(g − 1)."""
    return [h0_canonical_power(2 * i, p.g) for i in range(1, p.m + 1)]


def build_geometry(p: CurveParams) -> CoverGeometry:
    m, g = p.m, p.g
    g_S = 1 + 4 * m * m * (g - 1)
    g_Sbar = (2 * m * m - m) * (g - 1) + 1
    N = p.N
    return CoverGeometry(
        g_S=g_S,
        g_Sbar=g_Sbar,
        N=N,
        deg_K=2 * g - 2,
        dim_prym=g_S - g_Sbar,
        dim_hitchin_base=sum(hitchin_base_dims(p)),
        dim_prym2=2 * g_Sbar + N - 2,
        dim_so_fiber=N - 2,
    )


def riemann_hurwitz_check(geo: CoverGeometry) -> bool:
    """RH for ρ: S → S̄, a double cover branched at the N fixed points of σ."""
    return 2 * geo.g_S - 2 == 2 * (2 * geo.g_Sbar - 2) + geo.N


def adjunction_checks(geo: CoverGeometry, p: CurveParams) -> dict[str, bool]:
    """K_S = π*K^{2m} and K_S̄ = π̄*K^{2m−1}, compared at degree level."""
    m, g = p.m, p.g
    return {
        "K_S": 2 * geo.g_S - 2 == (2 * m) * (2 * m) * (2 * g - 2),
        "K_Sbar": 2 * geo.g_Sbar - 2 == m * (2 * m - 1) * (2 * g - 2),
    }


def integrability_check(geo: CoverGeometry) -> bool:
    """dim of the Hitchin base equals dim Prym(S, S̄)."""
    return geo.dim_hitchin_base == geo.dim_prym


def two_torsion_check(geo: CoverGeometry) -> bool:
    """The H¹(S̄) ⊕ divisor-quotient bookkeeping matches 2·dim Prym(S, S̄)."""
    return geo.dim_prym2 == 2 * geo.dim_prym and geo.dim_so_fiber == geo.N - 2


def residual_base_dims(p: CurveParams, convention: str) -> list[int]:
    """
    Dimensions of the differentials left after fixing a_m.

    "1..m-1":  the base ⊕_{i=1}^{m} H⁰(K^{2i}) minus its top summand;
    "1..2m-2": the index range printed in the component-structure proofs.
    """
    if convention == "1..m-1":
        top = p.m - 1
    elif convention == "1..2m-2":
        top = 2 * p.m - 2
    else:
        raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")
    return [h0_canonical_power(2 * i, p.g) for i in range(1, top + 1)]


def cayley_rank4_check(p: CurveParams) -> bool | None:
    """
    For m = 2: H¹(S̄, Z2) ≅ H¹(Σ, Z2) ⊕ (divisor quotient) ⊕ H¹(Σ, Z2), i.e.
    2g_S̄ = 2g + (N − 2) + 2g. None for other m.
    """
    if p.m != 2:
        return None
    geo = build_geometry(p)
    return 2 * geo.g_Sbar == 4 * p.g + geo.N - 2
