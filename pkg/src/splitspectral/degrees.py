# src/splitspectral/degrees.py
"""Degree bookkeeping on the symplectic side: U, U±, W and the Toledo invariant."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .covers import CurveParams, build_geometry
from .errors import ParityError, RangeError


def _validate(m: int, g: int, M: int, *, bounded: bool = True) -> CurveParams:
    p = CurveParams(m, g)
    if not isinstance(M, int):
        raise RangeError(f"M must be an integer, got {M!r}")
    if M % 2:
        raise ParityError(f"M must be even, got {M}")
    if bounded and not 0 <= M <= p.N:
        raise RangeError(f"M must lie in [0, 4m(g-1)] = [0, {p.N}], got {M}")
    return p


def deg_U(m: int, g: int) -> int:
    """deg(L ⊗ π*K^{(2m−1)/2}) with deg π*K = 2m(2g − 2)."""
    return 2 * m * (2 * m - 1) * (g - 1)


def deg_U_printed(m: int, g: int) -> int:
    """The value m(2m − 1)(g − 1) as printed; kept only as ledger evidence."""
    return m * (2 * m - 1) * (g - 1)


@dataclass(frozen=True)
class DegreeProfile:
    m: int
    g: int
    M: int
    deg_U: int
    deg_U_plus: int
    deg_U_minus: int
    deg_W: int
    toledo: int

    def to_record(self) -> dict:
        return asdict(self)


def degree_profile(m: int, g: int, M: int) -> DegreeProfile:
    _validate(m, g, M)
    half = M // 2
    deg_w = -half + m * (g - 1)
    return DegreeProfile(
        m=m,
        g=g,
        M=M,
        deg_U=deg_U(m, g),
        deg_U_plus=m * (2 * m - 1) * (g - 1) - half,
        deg_U_minus=m * (2 * m - 3) * (g - 1) + half,
        deg_W=deg_w,
        toledo=deg_w,
    )


def deg_W_from_U(m: int, g: int, M: int, u: int | None = None) -> int:
    """deg(U)/2 − M/2 − (2m² − 2m)(g − 1); `u` overrides deg U."""
    u = deg_U(m, g) if u is None else u
    return u // 2 - M // 2 - (2 * m * m - 2 * m) * (g - 1)


def euler_pushforward_check(m: int, g: int, M: int, deg_U_value: int | None = None) -> bool:
    """
    χ is preserved by ρ_*: deg U+ + deg U− == deg U − (g_S − 1) + 2(g_S̄ − 1).
    Pass deg_U_value to test another value of deg U (e.g. the printed one).
    """
    p = _validate(m, g, M)
    geo = build_geometry(p)
    prof = degree_profile(m, g, M)
    u = prof.deg_U if deg_U_value is None else deg_U_value
    return prof.deg_U_plus + prof.deg_U_minus == u - (geo.g_S - 1) + 2 * (geo.g_Sbar - 1)


def lemmaU_degree_check(m: int, g: int, M: int) -> bool:
    """deg U− − deg U+ == deg(O(D) ⊗ π̄*K*) = M − 2m(g − 1); deg L0 = 0."""
    prof = degree_profile(m, g, M)
    return prof.deg_U_minus - prof.deg_U_plus == M - 2 * m * (g - 1)


def milnor_wood(m: int, g: int, M: int) -> dict:
    """Toledo invariant c1(W) = m(g−1) − M/2, the bound |c1(W)| ≤ m(g−1), and c1(W) mod 2."""
    _validate(m, g, M, bounded=False)
    toledo = m * (g - 1) - M // 2
    return {
        "toledo": toledo,
        "within_bound": abs(toledo) <= m * (g - 1),
        "c1_mod2": toledo % 2,
    }


def toledo_spectrum(m: int, g: int) -> list[dict]:
    """(M, toledo, c1_mod2) for every even M in [0, 4m(g−1)]."""
    p = CurveParams(m, g)
    rows = []
    for M in range(0, p.N + 1, 2):
        mw = milnor_wood(m, g, M)
        rows.append({"M": M, "toledo": mw["toledo"], "c1_mod2": mw["c1_mod2"]})
    return rows


def profile_record(m: int, g: int, M: int) -> dict:
    """DegreeProfile plus every degree-level check, for the CLI."""
    prof = degree_profile(m, g, M)
    return {
        **prof.to_record(),
        "deg_U_printed": deg_U_printed(m, g),
        "deg_W_via_U": deg_W_from_U(m, g, M),
        "euler_pushforward": euler_pushforward_check(m, g, M),
        "euler_pushforward_printed": euler_pushforward_check(m, g, M, deg_U_printed(m, g)),
        "lemmaU_degree": lemmaU_degree_check(m, g, M),
        "milnor_wood": milnor_wood(m, g, M),
    }
