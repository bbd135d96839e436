"""Tests for GF(2) linear algebra, exact sequences and quadratic refinements."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from splitspectral.errors import DegenerateFormError, DimensionMismatch
from splitspectral.gf2 import (
    BitMatrix,
    BitVector,
    QuadraticRefinement,
    SymplecticForm,
    arf,
    arf_by_majority,
    check_exact,
    contains,
    image_basis,
    intersection_dim,
    kernel_basis,
    matmul,
    polarize,
    quotient_dim,
    rank,
    same_subspace,
    short_exact,
    span_vectors,
    spin_refinement,
    symplectic_basis,
    transvection,
)


# bit vectors ---------------------------------------------------------------

def test_hex_is_little_endian_by_bit_index():
    v = BitVector.from_hex("0x5", 4)
    assert list(v) == [1, 0, 1, 0]
    assert v.to_hex() == "0x5"
    assert v.weight == 2
    assert repr(v) == "BitVector(0x5:4)"


def test_from_int_rejects_overflow():
    with pytest.raises(DimensionMismatch):
        BitVector.from_int(16, 4)


def test_vectors_are_read_only():
    v = BitVector([1, 0, 1])
    with pytest.raises(ValueError):
        v.bits[0] = 0


def test_add_needs_equal_lengths():
    with pytest.raises(DimensionMismatch):
        BitVector.zeros(3) + BitVector.zeros(4)


# rank, kernel, image ---------------------------------------------------------

@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 0], [0, 1]], 2),
        ([[0, 0, 0]] * 3, 0),
        ([[1, 1], [1, 1]], 1),
    ],
)
def test_rank_examples(rows, expected):
    assert rank(BitMatrix(np.array(rows))) == expected


def test_kernel_basis_small():
    m = BitMatrix(np.array([[1, 1, 0], [0, 1, 1]]))
    ker = kernel_basis(m)
    assert ker.rows == 1
    assert ker.row(0) == BitVector([1, 1, 1])
    assert matmul(m, ker.T).is_zero()


def test_image_basis_spans_columns():
    m = BitMatrix(np.array([[1, 0, 1], [0, 1, 1], [1, 1, 0]]))
    im = image_basis(m)
    assert im.rows == rank(m) == 2
    assert same_subspace(im, m.T)


@given(st.integers(1, 5), st.integers(1, 6), st.integers(0, 2**30 - 1))
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows, cols, seed):
    rng = np.random.default_rng(seed)
    m = BitMatrix(rng.integers(0, 2, (rows, cols)))
    assert rank(m) + kernel_basis(m).rows == cols
    assert matmul(m, kernel_basis(m).T).is_zero()


@given(st.integers(1, 4), st.integers(0, 3), st.integers(0, 2**30 - 1))
@settings(max_examples=50, deadline=None)
def test_quotient_dim_matches_coset_count(k, j, seed):
    rng = np.random.default_rng(seed)
    n = 6
    v = BitMatrix(rng.integers(0, 2, (k, n)))
    w = BitMatrix((rng.integers(0, 2, (j, k)) @ v.entries.astype(np.int64)) & 1) if j else BitMatrix.zeros(0, n)
    assert contains(v, w)
    size_v = len(np.unique(span_vectors(v), axis=0))
    size_w = len(np.unique(span_vectors(w), axis=0)) if j else 1
    assert 2 ** quotient_dim(v, w) == size_v // size_w


def test_quotient_dim_requires_containment():
    v = BitMatrix(np.array([[1, 0, 0]]))
    w = BitMatrix(np.array([[0, 1, 0]]))
    with pytest.raises(DimensionMismatch):
        quotient_dim(v, w)
    assert intersection_dim(v, w) == 0


# exact sequences -------------------------------------------------------------

def test_identity_is_short_exact():
    eye = BitMatrix.identity(2)
    result = short_exact(eye, BitMatrix.zeros(0, 2))
    assert result.exact
    assert len(result.verdicts) == 3


def test_inclusion_then_projection_is_exact():
    f = BitMatrix(np.array([[1], [0]]))
    g = BitMatrix(np.array([[0, 1]]))
    assert short_exact(f, g).exact


def test_wrong_projection_fails_in_the_middle():
    f = BitMatrix(np.array([[1], [0]]))
    g = BitMatrix(np.array([[1, 0]]))
    result = short_exact(f, g)
    assert result.verdicts == (True, False, True)
    assert not result.exact


def test_check_exact_rejects_mismatched_maps():
    with pytest.raises(DimensionMismatch):
        check_exact([BitMatrix.identity(2), BitMatrix.identity(3)])


# symplectic forms --------------------------------------------------------------

def test_degenerate_forms_are_rejected():
    with pytest.raises(DegenerateFormError):
        SymplecticForm(BitMatrix.identity(2))
    with pytest.raises(DegenerateFormError):
        SymplecticForm(BitMatrix.zeros(2, 2))
    with pytest.raises(DegenerateFormError):
        SymplecticForm(BitMatrix.zeros(3, 3))


def test_pairing_examples():
    form = SymplecticForm.standard(2)
    a1, b1 = BitVector.basis(4, 0), BitVector.basis(4, 1)
    assert form.pairing(a1, b1) == 1
    assert form.pairing(a1, BitVector.basis(4, 3)) == 0
    for k in range(16):
        x = BitVector.from_int(k, 4)
        assert form.pairing(x, x) == 0


def test_symplectic_basis_of_permuted_form():
    perm = np.array([3, 0, 5, 1, 4, 2])
    std = SymplecticForm.standard(3).matrix.entries
    form = SymplecticForm(BitMatrix(std[np.ix_(perm, perm)]))
    basis = symplectic_basis(form)
    assert len(basis) == 3
    for i, (a, b) in enumerate(basis):
        assert form.pairing(a, b) == 1
        for j, (c, d) in enumerate(basis):
            if i != j:
                assert form.pairing(a, c) == form.pairing(a, d) == 0
                assert form.pairing(b, c) == form.pairing(b, d) == 0


def test_transvection_preserves_form():
    form = SymplecticForm.standard(3)
    t = transvection(BitVector([1, 1, 0, 1, 0, 0]), form)
    assert matmul(matmul(t.T, form.matrix), t) == form.matrix


# quadratic refinements and Arf -----------------------------------------------

def test_arf_examples():
    std1 = SymplecticForm.standard(1)
    assert arf(QuadraticRefinement(std1, BitVector([0, 0]))) == 0
    odd = QuadraticRefinement(std1, BitVector([1, 1]))
    assert arf(odd) == 1
    assert arf_by_majority(odd) == 1
    direct_sum = QuadraticRefinement(SymplecticForm.standard(2), BitVector([0, 0, 1, 1]))
    assert arf(direct_sum) == arf_by_majority(direct_sum) == 1


@pytest.mark.parametrize("parity", [0, 1])
@pytest.mark.parametrize("odd_first_a", [False, True])
def test_spin_refinement_has_arf_equal_to_parity(parity, odd_first_a):
    q = spin_refinement(4, parity, odd_first_a=odd_first_a)
    assert q(BitVector.zeros(8)) == parity
    assert arf(q) == parity
    assert arf_by_majority(q) == parity


def test_spin_refinement_tables():
    q = spin_refinement(2, 0, odd_first_a=True)
    assert q(BitVector.basis(4, 0)) == 1
    assert q(BitVector.basis(4, 1)) == 0
    assert spin_refinement(2, 1)(BitVector.basis(4, 1)) == 0  # 1 + q0(b1) with q0(b1) = 1


@given(st.integers(0, 63), st.integers(0, 63), st.integers(0, 63), st.integers(0, 1))
@settings(max_examples=200, deadline=None)
def test_polarization_is_the_pairing(x, y, vals, parity):
    q = QuadraticRefinement(SymplecticForm.standard(3), BitVector.from_int(vals, 6), parity)
    xv, yv = BitVector.from_int(x, 6), BitVector.from_int(y, 6)
    assert polarize(q, xv, yv) == q.form.pairing(xv, yv)


@pytest.mark.parametrize("genus", [1, 2, 3, 4])
def test_polarization_on_every_pair(genus):
    n = 2 * genus
    for vals, parity in (((1 << n) - 1, 1), (0b1011 & ((1 << n) - 1), 0)):
        q = QuadraticRefinement(SymplecticForm.standard(genus), BitVector.from_int(vals, n), parity)
        vectors = [BitVector.from_int(k, n) for k in range(1 << n)]
        for xv in vectors:
            for yv in vectors:
                assert polarize(q, xv, yv) == q.form.pairing(xv, yv)


@given(st.integers(0, 255), st.integers(1, 255))
@settings(max_examples=100, deadline=None)
def test_arf_is_invariant_under_transvections(vals, v):
    q = QuadraticRefinement(SymplecticForm.standard(4), BitVector.from_int(vals, 8))
    t = transvection(BitVector.from_int(v, 8), q.form)
    moved = q.compose(t)
    assert arf(moved) == arf(q) == arf_by_majority(q)
    x = BitVector.from_int(vals ^ v, 8)
    assert moved(x) == q(t.apply(x))


def test_evaluate_many_matches_scalar_evaluation():
    q = spin_refinement(3, 1, odd_first_a=True)
    xs = np.array([[1, 0, 0, 1, 1, 0], [0, 0, 0, 0, 0, 0], [1, 1, 1, 1, 1, 1]], dtype=np.uint8)
    assert list(q.evaluate_many(xs)) == [q(BitVector(row)) for row in xs]
