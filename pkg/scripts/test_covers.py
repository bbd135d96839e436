"""Tests for the genus, dimension and Riemann-Hurwitz bookkeeping of the curve tower."""
from dataclasses import replace

import pytest

from splitspectral.covers import (
    CurveParams,
    adjunction_checks,
    build_geometry,
    cayley_rank4_check,
    hitchin_base_dims,
    integrability_check,
    residual_base_dims,
    riemann_hurwitz_check,
    two_torsion_check,
)
from splitspectral.errors import RangeError

GRID = [(m, g) for m in range(1, 9) for g in range(2, 9)]


@pytest.mark.parametrize(
    "m, g, g_S, g_Sbar, N",
    [(2, 2, 17, 7, 8), (1, 2, 5, 2, 4), (3, 3, 73, 31, 24)],
)
def test_genus_examples(m, g, g_S, g_Sbar, N):
    geo = build_geometry(CurveParams(m, g))
    assert (geo.g_S, geo.g_Sbar, geo.N) == (g_S, g_Sbar, N)


def test_full_record_m2_g2():
    geo = build_geometry(CurveParams(2, 2))
    assert geo.dim_prym == 10
    assert geo.dim_prym2 == 20
    assert geo.dim_so_fiber == 6
    assert geo.to_record()["g_Sbar"] == 7


@pytest.mark.parametrize("m, g", GRID)
def test_tower_identities(m, g):
    p = CurveParams(m, g)
    geo = build_geometry(p)
    assert riemann_hurwitz_check(geo)
    assert all(adjunction_checks(geo, p).values())
    assert integrability_check(geo)
    assert geo.dim_hitchin_base == (2 * m * m + m) * (g - 1)
    assert two_torsion_check(geo)
    assert 2 * geo.g_Sbar + geo.N - 2 == 2 * (geo.g_S - geo.g_Sbar)


def test_corrupted_geometry_fails_riemann_hurwitz():
    geo = build_geometry(CurveParams(2, 2))
    assert not riemann_hurwitz_check(replace(geo, g_S=geo.g_S - 1))


@pytest.mark.parametrize(
    "m, g, dims",
    [(2, 2, [3, 7]), (1, 2, [3]), (3, 2, [3, 7, 11])],
)
def test_hitchin_base_dims(m, g, dims):
    p = CurveParams(m, g)
    assert hitchin_base_dims(p) == dims
    assert sum(dims) == build_geometry(p).dim_prym


def test_residual_conventions():
    p = CurveParams(3, 2)
    assert residual_base_dims(p, "1..m-1") == [3, 7]
    assert residual_base_dims(p, "1..2m-2") == [3, 7, 11, 15]
    assert residual_base_dims(CurveParams(1, 2), "1..m-1") == []
    with pytest.raises(ValueError):
        residual_base_dims(p, "0..m")


def test_cayley_rank4_only_for_m2():
    assert cayley_rank4_check(CurveParams(2, 3)) is True
    assert cayley_rank4_check(CurveParams(3, 3)) is None


@pytest.mark.parametrize("m, g", [(0, 2), (1, 1), (-1, 3)])
def test_invalid_params(m, g):
    with pytest.raises(RangeError):
        CurveParams(m, g)
