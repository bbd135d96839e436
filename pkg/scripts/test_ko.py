"""Tests for KO(Σ) arithmetic and the mod 2 index."""
import pytest
from hypothesis import given, settings, strategies as st

from splitspectral.errors import DimensionMismatch
from splitspectral.gf2 import BitVector, spin_refinement
from splitspectral.ko import KOClass, alpha, omega_point, phi, trivial, w2_from_phi, whitney_sum, zero

DIM = 4
A1, B1 = BitVector.basis(DIM, 0), BitVector.basis(DIM, 1)

classes = st.builds(
    lambda r, x, w: KOClass(r, BitVector.from_int(x, DIM), w),
    st.integers(-3, 5),
    st.integers(0, 2**DIM - 1),
    st.integers(0, 1),
)


def test_alpha_of_zero_is_trivial_line():
    assert alpha(BitVector.zeros(DIM)) == KOClass(1, BitVector.zeros(DIM), 0)


def test_alpha_law():
    assert alpha(A1) + alpha(B1) == KOClass(2, A1 + B1, 1)
    assert alpha(A1) + alpha(A1) == KOClass(2, BitVector.zeros(DIM), 0)


def test_omega_point():
    omega = omega_point(DIM)
    assert omega.rank == 0
    assert omega + omega == zero(DIM)
    assert omega + alpha(A1) == KOClass(1, A1, 1)


@given(classes, classes, classes)
@settings(max_examples=100, deadline=None)
def test_group_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + zero(DIM) == a
    assert a - a == zero(DIM)


@pytest.mark.parametrize("eps", [0, 1])
def test_phi_examples(eps):
    q = spin_refinement(DIM // 2, eps)
    assert phi(omega_point(DIM), q) == 1
    if eps == 0:
        for n in range(-2, 5):
            assert phi(trivial(n, DIM), q) == 0
        for k in range(16):
            x = BitVector.from_int(k, DIM)
            assert phi(alpha(x), q) == q(x)


@given(classes, classes, st.integers(0, 1))
@settings(max_examples=150, deadline=None)
def test_phi_is_additive(a, b, eps):
    q = spin_refinement(DIM // 2, eps)
    assert phi(zero(DIM), q) == 0
    assert phi(a + b, q) == phi(a, q) ^ phi(b, q)


@pytest.mark.parametrize("eps", [0, 1])
def test_phi_is_additive_on_every_pair_in_genus_one(eps):
    q = spin_refinement(1, eps)
    every = [
        KOClass(r, BitVector.from_int(x, 2), w)
        for r in range(-2, 4)
        for x in range(4)
        for w in (0, 1)
    ]
    assert phi(zero(2), q) == 0
    for a in every:
        for b in every:
            assert phi(a + b, q) == phi(a, q) ^ phi(b, q)


@pytest.mark.parametrize("eps", [0, 1])
def test_w2_from_phi_recovers_w2(eps):
    q = spin_refinement(DIM // 2, eps)
    x = A1 + B1
    assert w2_from_phi(KOClass(3, x, 1), q) == 1
    assert w2_from_phi(omega_point(DIM), q) == 1
    assert w2_from_phi(alpha(x), q) == 0


@given(classes, st.integers(0, 1))
@settings(max_examples=100, deadline=None)
def test_w2_from_phi_identity(c, eps):
    assert w2_from_phi(c, spin_refinement(DIM // 2, eps)) == c.w2


def test_determinant_and_whitney_sum():
    c = KOClass(3, A1, 1)
    assert c.determinant() == alpha(A1)
    assert whitney_sum([alpha(A1), alpha(B1), omega_point(DIM)]) == KOClass(2, A1 + B1, 0)


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        KOClass(1, BitVector.zeros(3), 0)
    with pytest.raises(DimensionMismatch):
        alpha(A1) + alpha(BitVector.basis(6, 0))
    with pytest.raises(DimensionMismatch):
        phi(alpha(A1), spin_refinement(3, 0))
