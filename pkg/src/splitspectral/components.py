# src/splitspectral/components.py
"""
Grading of the moduli spaces by the invariant M.

Over the regular fibres, the Sp(2m,R) component labelled by M is a fibration
of a Z2-vector space (Prym[2] points with invariant M) over a vector bundle
on S^M Σ; the SO(m,m+1) component is a covering, up to H¹(S̄, Z2), of the
same kind of vector bundle. Connectivity over the discriminant locus is not
computed here.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import pandas as pd
from scipy.special import comb

from .cohomology import build_cover_model, lemmaH_split
from .covers import CONVENTIONS, CurveParams, build_geometry, cayley_rank4_check, residual_base_dims
from .errors import ParityError, RangeError

logger = logging.getLogger(__name__)

GROUPS = ("SpReal", "SOSplit")
MAXIMAL_NOTE = "maximal Toledo (M = 0): may subdivide further; see gothen_count for m = 2"


@dataclass(frozen=True)
class ComponentDescriptor:
    group: str
    m: int
    g: int
    M: int
    sym_dim: int
    bundle_rank: int
    residual_base_dims: dict[str, list[int]]
    fiber_z2_dim: int
    fiber_count_per_point: int
    annotations: tuple[str, ...] = field(default_factory=tuple)

    @property
    def nonempty(self) -> bool:
        return self.bundle_rank >= 0

    def to_record(self) -> dict:
        return {
            "group": self.group,
            "m": self.m,
            "g": self.g,
            "M": self.M,
            "sym_dim": self.sym_dim,
            "bundle_rank": self.bundle_rank,
            "residual_base_dims": {k: list(v) for k, v in self.residual_base_dims.items()},
            "fiber_z2_dim": self.fiber_z2_dim,
            "fiber_count_per_point": self.fiber_count_per_point,
            "annotations": list(self.annotations),
        }


def _check_M(p: CurveParams, M: int) -> None:
    if not isinstance(M, int):
        raise RangeError(f"M must be an integer, got {M!r}")
    if M % 2:
        raise ParityError(f"M must be even, got {M}")
    if not 0 <= M <= p.N:
        raise RangeError(f"M must lie in [0, 4m(g-1)] = [0, {p.N}], got {M}")


def _bundle_rank(p: CurveParams, M: int) -> int:
    """rank of H⁰(Σ, K^{2m}(−D)) over S^M Σ by Riemann-Roch."""
    return (4 * p.m - 1) * (p.g - 1) - M


def _shared(p: CurveParams, M: int) -> tuple[int, dict[str, list[int]], list[str]]:
    rank = _bundle_rank(p, M)
    notes = []
    if M == 0:
        notes.append(MAXIMAL_NOTE)
    if rank < 0:
        notes.append(f"bundle_rank {rank} < 0: generically empty over the regular locus")
    dims = {c: residual_base_dims(p, c) for c in CONVENTIONS}
    return rank, dims, notes


def sp_component(m: int, g: int, M: int) -> ComponentDescriptor:
    p = CurveParams(m, g)
    _check_M(p, M)
    geo = build_geometry(p)
    rank, dims, notes = _shared(p, M)
    return ComponentDescriptor(
        group="SpReal",
        m=m,
        g=g,
        M=M,
        sym_dim=M,
        bundle_rank=rank,
        residual_base_dims=dims,
        fiber_z2_dim=2 * geo.g_Sbar,
        fiber_count_per_point=int(comb(p.N, M, exact=True)) * 2 ** (2 * geo.g_Sbar),
        annotations=tuple(notes),
    )


def so_component(m: int, g: int, M: int) -> ComponentDescriptor:
    """
    M and N − M label the same class of divisors; an M above N/2 is replaced
    by its canonical partner and the replacement is annotated.
    """
    p = CurveParams(m, g)
    _check_M(p, M)
    geo = build_geometry(p)
    N = p.N
    notes: list[str] = []
    if 2 * M > N:
        notes.append(f"M = {M} identified with canonical M = {N - M}")
        M = N - M
    elif 2 * M < N:
        notes.append(f"identified partner: N - M = {N - M}")
    else:
        notes.append("midpoint M = N/2: classes counted once per pair")
    rank, dims, extra = _shared(p, M)
    count = int(comb(N, M, exact=True))
    if 2 * M == N:
        count //= 2
    notes.append(f"parametrized up to H1(Sbar, Z2) of dim {2 * geo.g_Sbar}")
    return ComponentDescriptor(
        group="SOSplit",
        m=m,
        g=g,
        M=M,
        sym_dim=M,
        bundle_rank=rank,
        residual_base_dims=dims,
        fiber_z2_dim=2 * geo.g_Sbar,
        fiber_count_per_point=count,
        annotations=tuple(extra + notes),
    )


@dataclass(frozen=True)
class GradingTable:
    group: str
    m: int
    g: int
    rows: tuple[ComponentDescriptor, ...]
    totals: dict[str, int | bool]

    def to_record(self) -> dict:
        return {
            "group": self.group,
            "m": self.m,
            "g": self.g,
            "rows": [r.to_record() for r in self.rows],
            "totals": dict(self.totals),
        }

    def to_frame(self) -> pd.DataFrame:
        df = pd.DataFrame(
            [
                {
                    "M": r.M,
                    "sym_dim": r.sym_dim,
                    "bundle_rank": r.bundle_rank,
                    "fiber_z2_dim": r.fiber_z2_dim,
                    "count": str(r.fiber_count_per_point),
                    "residual(1..m-1)": ",".join(map(str, r.residual_base_dims["1..m-1"])),
                    "residual(1..2m-2)": ",".join(map(str, r.residual_base_dims["1..2m-2"])),
                }
                for r in self.rows
            ]
        )
        return df.set_index("M")


def _normalize_group(group: str) -> str:
    key = group.lower()
    if key in ("sp", "spreal"):
        return "SpReal"
    if key in ("so", "sosplit"):
        return "SOSplit"
    raise ValueError(f"group must be one of 'sp', 'so' (or {GROUPS}), got {group!r}")


def grading_table(group: str, m: int, g: int) -> GradingTable:
    group = _normalize_group(group)
    p = CurveParams(m, g)
    geo = build_geometry(p)
    N = p.N
    if group == "SpReal":
        rows = tuple(sp_component(m, g, M) for M in range(0, N + 1, 2))
        divisor_level = sum(r.fiber_count_per_point for r in rows)
        class_level = divisor_level // 2
        totals = {
            "divisor_level": divisor_level,
            "class_level": class_level,
            "prym2_size": 2 ** geo.dim_prym2,
            "reconciles": divisor_level == 2 ** (N - 1 + 2 * geo.g_Sbar) and class_level == 2 ** geo.dim_prym2,
        }
    else:
        rows = tuple(so_component(m, g, M) for M in range(0, N // 2 + 1, 2))
        per_copy = sum(r.fiber_count_per_point for r in rows)
        totals = {
            "per_copy": per_copy,
            "both_copies": 2 * per_copy,
            "fiber_size": 2 ** geo.dim_so_fiber,
            "reconciles": per_copy == 2 ** (N - 2) == 2 ** geo.dim_so_fiber,
        }
    logger.debug("grading table %s m=%d g=%d: %d rows", group, m, g, len(rows))
    return GradingTable(group, m, g, rows, totals)


def fiber_count(group: str, m: int, g: int, M: int) -> int:
    group = _normalize_group(group)
    desc = sp_component(m, g, M) if group == "SpReal" else so_component(m, g, M)
    return desc.fiber_count_per_point


def maximal_case(m: int, g: int) -> dict:
    """M = 0 on both sides."""
    p = CurveParams(m, g)
    geo = build_geometry(p)
    report: dict = {
        "m": m,
        "g": g,
        "sp": {
            "cover_multiplicity": 2 ** (2 * geo.g_Sbar),
            "base": "vector space over a point",
        },
    }
    if m == 1:
        report["so"] = {"degenerate": True, "copies": 2 ** (2 * g), "prym_dim": 0, "note": "Sbar = Sigma"}
    elif m % 2:
        report["so"] = {"degenerate": False, "copies": 2 ** (2 * g), "prym_dim": geo.g_Sbar - g}
    else:
        split = lemmaH_split(build_cover_model(p))
        report["so"] = {
            "degenerate": False,
            "filtration_dims": list(split.dims),
            "note": "m even: im pullback lies in ker Nm; no copy count asserted",
        }
    return report


def gothen_count(g: int) -> int:
    """Reference number of components of the Sp(4,R) moduli space with maximal Toledo invariant."""
    if not isinstance(g, int) or g < 2:
        raise RangeError(f"g must be an integer >= 2, got {g!r}")
    return 3 * 2 ** (2 * g) + 2 * g - 4


def hitchin_component_count(g: int) -> int:
    """The 2^{2g} Hitchin components inside the M = 0 covering, one per H¹(Σ, Z2) class."""
    if not isinstance(g, int) or g < 2:
        raise RangeError(f"g must be an integer >= 2, got {g!r}")
    return 2 ** (2 * g)


def toledo_parity_totals(m: int, g: int) -> dict[int, int]:
    """SpReal points per regular fibre grouped by c1(W) mod 2."""
    p = CurveParams(m, g)
    out = {0: 0, 1: 0}
    for M in range(0, p.N + 1, 2):
        out[(m * (g - 1) - M // 2) % 2] += sp_component(m, g, M).fiber_count_per_point
    return out


def cayley_partner(m: int, g: int) -> dict:
    """
    H¹(S̄, Z2) read as spectral data of K²-twisted GL(m,R)-Higgs bundles; for
    m = 2 it decomposes as two copies of H¹(Σ, Z2) around the divisor quotient.
    """
    p = CurveParams(m, g)
    geo = build_geometry(p)
    return {
        "m": m,
        "g": g,
        "h1_sbar_dim": 2 * geo.g_Sbar,
        "points_per_base_point": 2 ** (2 * geo.g_Sbar),
        "covers_from_sigma": 2 ** (2 * g),
        "rank4_decomposition": cayley_rank4_check(p),
    }
