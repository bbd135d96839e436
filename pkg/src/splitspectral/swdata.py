# src/splitspectral/swdata.py
"""
Stiefel-Whitney classes of an SO(m,m+1)-Higgs bundle V = V+ ⊕ V− from its
spectral datum (F, D) and the spin-lift flag ω2(V):

    ω1(V+) = Nm(F)
    ω2(V+) = φ_S̄(F) + φ_Σ(Nm F)
    ω2(V−) = ω2(V+) + ω2(V)

φ_S̄ and φ_Σ are the refinements carried by the cover model. D does not
enter the values; it fixes M and the extension class of V.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .cohomology import CoverCohomologyModel
from .divisors import DivisorClass
from .errors import DimensionMismatch
from .gf2 import BitVector
from .ko import KOClass


@dataclass(frozen=True)
class SpectralDatum:
    F: BitVector
    D: DivisorClass
    w2_total: int = 0

    def __post_init__(self):
        if self.w2_total not in (0, 1):
            raise ValueError(f"w2_total must be 0 or 1, got {self.w2_total!r}")


@dataclass(frozen=True)
class SWClasses:
    w1_Vplus: BitVector
    w2_Vplus: int
    w2_Vminus: int
    M: int

    @property
    def w1_Vminus(self) -> BitVector:
        # det V− = (det V+)*, and w1 is 2-torsion
        return self.w1_Vplus

    @property
    def identity_component(self) -> bool:
        """Both determinants trivial: the SO(m,m+1)_0 case."""
        return self.w1_Vplus.is_zero()

    def to_record(self) -> dict:
        return {
            "w1_Vplus": {"hex": self.w1_Vplus.to_hex(), "len": len(self.w1_Vplus)},
            "w2_Vplus": self.w2_Vplus,
            "w2_Vminus": self.w2_Vminus,
            "M": self.M,
            "identity_component": self.identity_component,
        }


def _check_datum(d: SpectralDatum, model: CoverCohomologyModel) -> None:
    if len(d.F) != model.H_Sbar.dim:
        raise DimensionMismatch(f"F has length {len(d.F)}, H1(Sbar) has dim {model.H_Sbar.dim}")
    if d.D.N != model.params.N:
        raise DimensionMismatch(f"D is over {d.D.N} points, the model has N = {model.params.N}")


def sw_classes(d: SpectralDatum, model: CoverCohomologyModel) -> SWClasses:
    _check_datum(d, model)
    nm_f = model.Nm.apply(d.F)
    w2_plus = model.q_sbar(d.F) ^ model.q_sigma(nm_f)
    return SWClasses(nm_f, w2_plus, w2_plus ^ d.w2_total, d.D.M)


def sw_classes_corollary(d: SpectralDatum, model: CoverCohomologyModel) -> SWClasses:
    """
    The same classes read purely through spin structures: φ(F_S̄) := q_S̄(F)
    for the twisted spin structure F ⊗ K_S̄^{1/2}, and φ_Σ(V) := ω2(V).
    """
    _check_datum(d, model)
    nm_f = model.Nm.apply(d.F)
    phi_twisted = model.q_sbar(d.F)
    phi_nm = model.q_sigma(nm_f)
    w2_plus = phi_nm if phi_twisted == 0 else 1 ^ phi_nm
    w2_minus = phi_nm if phi_twisted == d.w2_total else 1 ^ phi_nm
    return SWClasses(nm_f, w2_plus, w2_minus, d.D.M)


def ko_classes(d: SpectralDatum, model: CoverCohomologyModel) -> tuple[KOClass, KOClass]:
    """[V+] of rank m and [V−] of rank m+1 in KO(Σ)."""
    sw = sw_classes(d, model)
    m = model.params.m
    return KOClass(m, sw.w1_Vplus, sw.w2_Vplus), KOClass(m + 1, sw.w1_Vminus, sw.w2_Vminus)


def w1_is_norm_linear(
    model: CoverCohomologyModel,
    w1_of: Callable[[BitVector], BitVector] | None = None,
    samples: int = 256,
    seed: int = 0,
) -> bool:
    """
    F ↦ ω1(V+) is GF(2)-linear: w1(0) = 0 and w1(F1 + F2) = w1(F1) + w1(F2)
    on `samples` seeded random pairs from all of H¹(S̄), plus every basis
    pair when dim ≤ 64.
    """
    if w1_of is None:
        w1_of = model.Nm.apply
    n = model.H_Sbar.dim
    if not w1_of(BitVector.zeros(n)).is_zero():
        return False
    rng = np.random.default_rng(seed)
    pairs: list[tuple[BitVector, BitVector]] = [
        (BitVector(rng.integers(0, 2, n)), BitVector(rng.integers(0, 2, n)))
        for _ in range(samples)
    ]
    if n <= 64:
        basis = [BitVector.basis(n, i) for i in range(n)]
        pairs += [(x, y) for x in basis for y in basis]
    return all(w1_of(x + y) == w1_of(x) + w1_of(y) for x, y in pairs)


def sw_classes_many(model: CoverCohomologyModel, X: np.ndarray, w2_total: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """sw_classes on every row of a k×dim H¹(S̄) bit array: (w1 rows, ω2(V+), ω2(V−))."""
    x = np.asarray(X, dtype=np.int64)
    nm_x = (x @ model.Nm.entries.T.astype(np.int64)) & 1
    w2_plus = model.q_sbar.evaluate_many(x) ^ model.q_sigma.evaluate_many(nm_x)
    return nm_x, w2_plus, w2_plus ^ np.uint8(w2_total)


def sw_classes_corollary_many(
    model: CoverCohomologyModel, X: np.ndarray, w2_total: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    x = np.asarray(X, dtype=np.int64)
    nm_x = (x @ model.Nm.entries.T.astype(np.int64)) & 1
    phi_twisted = model.q_sbar.evaluate_many(x)
    phi_nm = model.q_sigma.evaluate_many(nm_x)
    w2_plus = np.where(phi_twisted == 0, phi_nm, 1 ^ phi_nm).astype(np.uint8)
    w2_minus = np.where(phi_twisted == w2_total, phi_nm, 1 ^ phi_nm).astype(np.uint8)
    return nm_x, w2_plus, w2_minus


@dataclass(frozen=True)
class SweepSummary:
    evaluated: int
    corollary_agrees: bool
    polarization_holds: bool
    w2_sum_holds: bool
    sl_compatible: bool

    @property
    def ok(self) -> bool:
        return self.corollary_agrees and self.polarization_holds and self.w2_sum_holds and self.sl_compatible


def sweep(
    model: CoverCohomologyModel,
    D_classes: Iterable[DivisorClass],
    F_dim: int = 10,
    pair_samples: int = 256,
    seed: int = 0,
) -> SweepSummary:
    """
    Exhaustive comparison over F in the span of the first F_dim coordinates of
    H¹(S̄), every given D and both ω2(V) flags. The F axis is evaluated in one
    batch per flag; for each D the scalar engines are also run on three F and
    must match the batch. Polarization of ω2(V+) is checked on every pair of
    the subspace for F_dim ≤ 10, otherwise on `pair_samples` seeded pairs.
    """
    n = model.H_Sbar.dim
    k = min(F_dim, n)
    size = 1 << k
    coeffs = ((np.arange(size)[:, None] >> np.arange(k)) & 1).astype(np.uint8)
    X = np.zeros((size, n), dtype=np.int64)
    X[:, :k] = coeffs

    batches = {}
    agrees = w2_sum = sl_ok = True
    q_sigma_zero = model.q_sigma(BitVector.zeros(model.H_Sigma.dim))
    for w2v in (0, 1):
        direct = sw_classes_many(model, X, w2v)
        corollary = sw_classes_corollary_many(model, X, w2v)
        agrees &= all(np.array_equal(a, b) for a, b in zip(direct, corollary))
        nm_x, w2_plus, w2_minus = direct
        w2_sum &= bool(np.all((w2_plus ^ w2_minus) == w2v))
        in_sl = ~nm_x.any(axis=1)
        q_sbar_x = model.q_sbar.evaluate_many(X)
        sl_ok &= bool(np.all(w2_plus[in_sl] == (q_sbar_x[in_sl] ^ q_sigma_zero)))
        batches[w2v] = direct

    evaluated = 0
    for pos, D in enumerate(D_classes):
        for w2v in (0, 1):
            nm_x, w2_plus, w2_minus = batches[w2v]
            evaluated += size
            for row in {0, size - 1, pos % size}:
                datum = SpectralDatum(BitVector(X[row]), D, w2v)
                a = sw_classes(datum, model)
                agrees &= a == sw_classes_corollary(datum, model)
                agrees &= a.M == D.M
                agrees &= (
                    np.array_equal(a.w1_Vplus.bits, nm_x[row])
                    and a.w2_Vplus == w2_plus[row]
                    and a.w2_Vminus == w2_minus[row]
                )

    nm_x, w2p, _ = batches[0]
    b_sbar = model.H_Sbar.form.matrix.entries.astype(np.int64)
    b_sigma = model.H_Sigma.form.matrix.entries.astype(np.int64)
    if k <= 10:
        # row i holds the bits of i, so F_i + F_j is row i ^ j
        idx = np.arange(size)
        lhs = w2p[idx[:, None] ^ idx[None, :]] ^ w2p[:, None] ^ w2p[None, :] ^ w2p[0]
        rhs = ((X @ b_sbar @ X.T) + (nm_x @ b_sigma @ nm_x.T)) & 1
        polar = bool(np.array_equal(lhs, rhs))
    else:
        rng = np.random.default_rng(seed)
        pairs = rng.integers(0, size, (pair_samples, 2))
        i, j = pairs[:, 0], pairs[:, 1]
        lhs = w2p[i ^ j] ^ w2p[i] ^ w2p[j] ^ w2p[0]
        rhs = (((X[i] @ b_sbar) * X[j]).sum(axis=1) + ((nm_x[i] @ b_sigma) * nm_x[j]).sum(axis=1)) & 1
        polar = bool(np.array_equal(lhs, rhs))
    return SweepSummary(evaluated, bool(agrees), polar, bool(w2_sum), bool(sl_ok))
