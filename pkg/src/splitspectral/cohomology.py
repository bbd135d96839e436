# src/splitspectral/cohomology.py
"""
Free GF(2) models of H¹(Σ, Z2) and H¹(S̄, Z2) with the Norm and pullback maps,
the splittings of H¹(S̄, Z2) by the parity of m, and the SO fibre
Prym(S, S̄)[2] / ρ*H¹(S̄, Z2).

No curve cohomology is computed: the matrices are built so that exactly the
relations used downstream hold (Nm∘π̄* = m·I, compatibility of the
intersection forms, exactness of 0 → ker Nm → H¹(S̄) → H¹(Σ) → 0).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .config import HARD_MAX_ENUM_N
from .covers import CurveParams, build_geometry
from .divisors import DivisorClass, count_classes, enumerate_classes
from .errors import DimensionMismatch, InvariantViolation, ParityError
from .gf2 import (
    BitMatrix,
    BitVector,
    QuadraticRefinement,
    arf,
    contains,
    image_basis,
    intersection_dim,
    kernel_basis,
    matmul,
    quotient_dim,
    rank,
    short_exact,
    spin_refinement,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceCohomology:
    """H¹ of a closed surface of genus dim/2 with its spin-structure refinement."""

    q: QuadraticRefinement

    @property
    def dim(self) -> int:
        return self.q.dim

    @property
    def form(self):
        return self.q.form

    @property
    def parity(self) -> int:
        return self.q.base_parity


def surface_cohomology(genus: int, parity: int, *, odd_first_a: bool = False) -> SurfaceCohomology:
    h = SurfaceCohomology(spin_refinement(genus, parity, odd_first_a=odd_first_a))
    if arf(h.q) != h.parity:
        raise InvariantViolation(f"spin refinement of genus {genus} has Arf {arf(h.q)} != parity {parity}")
    return h


@dataclass(frozen=True)
class CoverCohomologyModel:
    params: CurveParams
    H_Sigma: SurfaceCohomology
    H_Sbar: SurfaceCohomology
    Nm: BitMatrix        # 2g × 2g_S̄
    pullback: BitMatrix  # 2g_S̄ × 2g

    @property
    def m_parity(self) -> int:
        return self.params.m % 2

    @property
    def q_sigma(self) -> QuadraticRefinement:
        return self.H_Sigma.q

    @property
    def q_sbar(self) -> QuadraticRefinement:
        return self.H_Sbar.q


def build_cover_model(p: CurveParams, eps_sigma: int = 0, eps_sbar: int = 0) -> CoverCohomologyModel:
    """
    m = 1: S̄ = Σ with the same spin refinement, Nm = pullback = I; the two
           parities must agree.
    m odd: pullback embeds onto the first 2g coordinates, Nm projects onto them.
    m even: pullback sends e_j to b_{j+1}, Nm reads a_{j+1}, j < 2g, so that
            im(pullback) is isotropic and lies in ker(Nm).
    """
    geo = build_geometry(p)
    two_g, two_gs = 2 * p.g, 2 * geo.g_Sbar
    h_sigma = surface_cohomology(p.g, eps_sigma)
    if p.m == 1:
        if eps_sbar != eps_sigma:
            raise ParityError(f"m = 1 identifies S̄ with Σ; eps_sbar = {eps_sbar} must equal eps_sigma = {eps_sigma}")
        eye = BitMatrix.identity(two_g)
        return CoverCohomologyModel(p, h_sigma, h_sigma, eye, eye)

    if two_gs < 2 * two_g:
        raise InvariantViolation(f"2g_Sbar = {two_gs} < 4g = {2 * two_g}; cannot place the model blocks")
    h_sbar = surface_cohomology(geo.g_Sbar, eps_sbar, odd_first_a=True)
    nm = np.zeros((two_g, two_gs), dtype=np.uint8)
    pb = np.zeros((two_gs, two_g), dtype=np.uint8)
    for j in range(two_g):
        if p.m % 2:
            nm[j, j] = 1
            pb[j, j] = 1
        else:
            nm[j, 2 * j] = 1
            pb[2 * j + 1, j] = 1
    model = CoverCohomologyModel(p, h_sigma, h_sbar, BitMatrix(nm), BitMatrix(pb))
    logger.debug("built cover model m=%d g=%d: H1(Sbar) of dim %d", p.m, p.g, two_gs)
    return model


def model_violations(model: CoverCohomologyModel) -> list[str]:
    """Every CoverCohomologyModel invariant that fails, as readable messages."""
    p = model.params
    two_g, two_gs = 2 * p.g, model.H_Sbar.dim
    out: list[str] = []
    if model.Nm.rows != two_g or model.Nm.cols != two_gs:
        return [f"Nm has shape {model.Nm.rows}x{model.Nm.cols}, expected {two_g}x{two_gs}"]
    if model.pullback.rows != two_gs or model.pullback.cols != two_g:
        return [f"pullback has shape {model.pullback.rows}x{model.pullback.cols}, expected {two_gs}x{two_g}"]
    if rank(model.Nm) != two_g:
        out.append(f"Nm is not surjective (rank {rank(model.Nm)} < {two_g})")
    if rank(model.pullback) != two_g:
        out.append(f"pullback is not injective (rank {rank(model.pullback)} < {two_g})")
    composite = matmul(model.Nm, model.pullback)
    expected = BitMatrix.identity(two_g) if p.m % 2 else BitMatrix.zeros(two_g, two_g)
    if composite != expected:
        out.append(f"Nm∘pullback != {p.m % 2}·I")
    pulled_form = matmul(matmul(model.pullback.T, model.H_Sbar.form.matrix), model.pullback)
    sigma_form = model.H_Sigma.form.matrix if p.m % 2 else BitMatrix.zeros(two_g, two_g)
    if pulled_form != sigma_form:
        out.append("form_Sbar(pullback x, pullback y) != m·form_Sigma(x, y)")
    ker_dim = kernel_basis(model.Nm).rows
    if ker_dim != two_gs - two_g:
        out.append(f"dim ker Nm = {ker_dim}, expected {two_gs - two_g}")
    return out


def norm_sequence_exact(model: CoverCohomologyModel) -> bool:
    """0 → ker Nm → H¹(S̄) → H¹(Σ) → 0, checked at every junction."""
    inclusion = kernel_basis(model.Nm).T
    return short_exact(inclusion, model.Nm).exact


@dataclass(frozen=True)
class LemmaHReport:
    m_parity: str
    verified: bool
    dims: tuple[int, ...]
    expected_dims: tuple[int, ...]
    violations: tuple[str, ...] = field(default_factory=tuple)

    def to_record(self) -> dict:
        return {
            "m_parity": self.m_parity,
            "verified": self.verified,
            "dims": list(self.dims),
            "expected_dims": list(self.expected_dims),
            "violations": list(self.violations),
        }


def lemmaH_split(model: CoverCohomologyModel) -> LemmaHReport:
    """
    m odd:  H¹(S̄) = ker Nm ⊕ im π̄*, with Nm restricted to im π̄* an isomorphism.
    m even: im π̄* ⊆ ker Nm ⊆ H¹(S̄), graded pieces of dims (2g, 2g_S̄ − 4g, 2g).
    """
    p = model.params
    two_g, two_gs = 2 * p.g, model.H_Sbar.dim
    violations = model_violations(model)
    if violations and any("shape" in v for v in violations):
        return LemmaHReport("odd" if p.m % 2 else "even", False, (), (), tuple(violations))

    ker = kernel_basis(model.Nm)
    im = image_basis(model.pullback)
    if p.m % 2:
        dims = (ker.rows, im.rows)
        expected = (two_gs - two_g, two_g)
        if ker.rows + im.rows != two_gs:
            violations.append(f"dim ker + dim im = {ker.rows + im.rows} != {two_gs}")
        if intersection_dim(ker, im):
            violations.append("ker Nm ∩ im pullback is nonzero")
        if rank(matmul(model.Nm, model.pullback)) != two_g:
            violations.append("Nm restricted to im pullback is not onto H1(Sigma)")
        parity = "odd"
    else:
        if contains(ker, im):
            middle = quotient_dim(ker, im)
        else:
            violations.append("im pullback is not contained in ker Nm")
            middle = ker.rows - im.rows
        dims = (im.rows, middle, two_gs - ker.rows)
        expected = (two_g, two_gs - 2 * two_g, two_g)
        parity = "even"
    if dims != expected:
        violations.append(f"dims {dims} != expected {expected}")
    return LemmaHReport(parity, not violations, dims, expected, tuple(violations))


@dataclass(frozen=True)
class PrymTwoTorsionModel:
    """A point of Prym(S, S̄)[2] ≅ H¹(S̄, Z2) ⊕ Z2([a_m])^ev / b0."""

    h1_part: BitVector
    div_part: DivisorClass

    @property
    def dim(self) -> int:
        """GF(2) dimension of the ambient space."""
        return len(self.h1_part) + self.div_part.N - 2

    @property
    def quotient_class(self) -> DivisorClass:
        """Image in Prym[2] / ρ*H¹(S̄): only the divisor part survives."""
        return self.div_part


def prym_two_torsion_model(model: CoverCohomologyModel, F: BitVector, D: DivisorClass) -> PrymTwoTorsionModel:
    if len(F) != model.H_Sbar.dim:
        raise DimensionMismatch(f"F has length {len(F)}, H1(Sbar) has dim {model.H_Sbar.dim}")
    if D.N != model.params.N:
        raise DimensionMismatch(f"D is over {D.N} points, expected N = {model.params.N}")
    return PrymTwoTorsionModel(F, D)


def _prym_blocks(two_gs: int, N: int) -> tuple[BitMatrix, BitMatrix, BitMatrix]:
    """Generators in GF(2)^{2g_S̄ + N}: H¹(S̄) ⊕ even divisors, b0, and H¹(S̄) + b0."""
    total = two_gs + N
    h1 = np.zeros((two_gs, total), dtype=np.uint8)
    h1[:, :two_gs] = np.eye(two_gs, dtype=np.uint8)
    even = np.zeros((N - 1, total), dtype=np.uint8)
    for i in range(N - 1):
        even[i, two_gs + i] = even[i, two_gs + i + 1] = 1
    b0 = np.zeros((1, total), dtype=np.uint8)
    b0[0, two_gs:] = 1
    return (
        BitMatrix(np.vstack([h1, even])),
        BitMatrix(b0),
        BitMatrix(np.vstack([h1, b0])),
    )


@dataclass(frozen=True)
class SOFiberReport:
    m: int
    g: int
    dim_prym2: int
    fiber_dim: int
    expected_dim: int
    copies: int
    points_per_copy: int
    enumeration_count: int | None
    ok: bool

    def to_record(self) -> dict:
        return {
            "m": self.m,
            "g": self.g,
            "dim_prym2": self.dim_prym2,
            "fiber_dim": self.fiber_dim,
            "expected_dim": self.expected_dim,
            "copies": self.copies,
            "copy_labels": {"0": "w2(V)=0, spin lift (identity copy)", "1": "w2(V)=1, no spin lift"},
            "points_per_copy": self.points_per_copy,
            "enumeration_count": self.enumeration_count,
            "ok": self.ok,
        }


def so_fiber_model(p: CurveParams, max_enum_n: int = 20) -> SOFiberReport:
    """
    dim of Prym(S, S̄)[2] / ρ*H¹(S̄, Z2) in the model, where ρ*H¹(S̄) is the
    h1 factor (the M = 0 points). Cross-checked by class enumeration when
    N ≤ max_enum_n.
    """
    geo = build_geometry(p)
    two_gs, N = 2 * geo.g_Sbar, geo.N
    ambient, b0, h1_plus_b0 = _prym_blocks(two_gs, N)
    dim_prym2 = quotient_dim(ambient, b0)
    fiber_dim = quotient_dim(ambient, h1_plus_b0)
    enumerated = None
    if N <= min(max_enum_n, HARD_MAX_ENUM_N):
        enumerated = sum(1 for _ in enumerate_classes(N, max_n=max_enum_n))
    ok = (
        fiber_dim == N - 2
        and dim_prym2 == geo.dim_prym2
        and 2 ** fiber_dim == count_classes(N)
        and (enumerated is None or enumerated == 2 ** fiber_dim)
    )
    return SOFiberReport(
        m=p.m,
        g=p.g,
        dim_prym2=dim_prym2,
        fiber_dim=fiber_dim,
        expected_dim=N - 2,
        copies=2,
        points_per_copy=2 ** fiber_dim,
        enumeration_count=enumerated,
        ok=ok,
    )


def model_to_json(model: CoverCohomologyModel) -> dict:
    """Row-major bit strings of every model matrix plus the refinement tables."""
    return {
        "m": model.params.m,
        "g": model.params.g,
        "eps_sigma": model.H_Sigma.parity,
        "eps_sbar": model.H_Sbar.parity,
        "Nm": model.Nm.to_strings(),
        "pullback": model.pullback.to_strings(),
        "q_sigma_values": model.q_sigma.values.to_string(),
        "q_sbar_values": model.q_sbar.values.to_string(),
    }
