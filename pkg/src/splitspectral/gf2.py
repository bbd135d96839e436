# src/splitspectral/gf2.py
"""
Exact linear algebra over GF(2): bit vectors, bit matrices, subspaces,
exact sequences, symplectic forms, quadratic refinements and Arf invariants.

Conventions
-----------
- Coordinates are uint8 arrays with entries in {0, 1}; arrays are made
  read-only on construction so every value is immutable.
- Symplectic coordinates are interleaved: index 2i is a_{i+1}, index 2i+1 is b_{i+1}.
- Hex text is little-endian by bit index: bit i contributes 2**i.
- Elimination always takes the leftmost nonzero column and the first
  available row as pivot, so derived bases are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateFormError, DimensionMismatch


def _as_bits(values, ndim: int) -> np.ndarray:
    arr = (np.asarray(values, dtype=np.int64) & 1).astype(np.uint8)
    if arr.ndim != ndim:
        raise DimensionMismatch(f"expected a {ndim}-dimensional bit array, got shape {arr.shape}")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BitVector:
    bits: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bits", _as_bits(self.bits, 1))

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(np.zeros(n, dtype=np.uint8))

    @classmethod
    def basis(cls, n: int, i: int) -> "BitVector":
        if not 0 <= i < n:
            raise DimensionMismatch(f"basis index {i} outside [0, {n})")
        v = np.zeros(n, dtype=np.uint8)
        v[i] = 1
        return cls(v)

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitVector":
        if value < 0 or value >> n:
            raise DimensionMismatch(f"value {value:#x} does not fit in {n} bits")
        return cls([(value >> i) & 1 for i in range(n)])

    @classmethod
    def from_hex(cls, text: str, n: int) -> "BitVector":
        text = text.strip().lower()
        if not text.startswith("0x"):
            raise ValueError(f"hex bit vector must start with '0x', got {text!r}")
        return cls.from_int(int(text, 16), n)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Binary string, index 0 first."""
        if any(ch not in "01" for ch in text):
            raise ValueError(f"bit string may only contain '0' and '1', got {text!r}")
        return cls([int(ch) for ch in text])

    # views ---------------------------------------------------------------
    def __len__(self) -> int:
        return int(self.bits.shape[0])

    def __getitem__(self, i: int) -> int:
        return int(self.bits[i])

    def __iter__(self):
        return (int(b) for b in self.bits)

    @property
    def weight(self) -> int:
        return int(self.bits.sum())

    def is_zero(self) -> bool:
        return not self.bits.any()

    def to_int(self) -> int:
        return sum(1 << int(i) for i in np.flatnonzero(self.bits))

    def to_hex(self) -> str:
        return f"{self.to_int():#x}"

    def to_string(self) -> str:
        return "".join(str(int(b)) for b in self.bits)

    # arithmetic ------------------------------------------------------------
    def __add__(self, other: "BitVector") -> "BitVector":
        if len(self) != len(other):
            raise DimensionMismatch(f"cannot add vectors of length {len(self)} and {len(other)}")
        return BitVector(self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: "BitVector") -> int:
        if len(self) != len(other):
            raise DimensionMismatch(f"cannot pair vectors of length {len(self)} and {len(other)}")
        return int(np.dot(self.bits.astype(np.int64), other.bits.astype(np.int64)) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return len(self) == len(other) and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((len(self), self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({self.to_hex()}:{len(self)})"


@dataclass(frozen=True, eq=False)
class BitMatrix:
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_bits(self.entries, 2))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | BitVector], cols: int | None = None) -> "BitMatrix":
        """Stack rows; `cols` is required when `rows` is empty."""
        data = [r.bits if isinstance(r, BitVector) else r for r in rows]
        if not data:
            if cols is None:
                raise DimensionMismatch("an empty row list needs an explicit column count")
            return cls.zeros(0, cols)
        return cls(np.vstack([np.asarray(r, dtype=np.uint8).reshape(1, -1) for r in data]))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVector], rows: int) -> "BitMatrix":
        if not columns:
            return cls.zeros(rows, 0)
        return cls(np.column_stack([c.bits for c in columns]))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def T(self) -> "BitMatrix":
        return BitMatrix(self.entries.T)

    def row(self, i: int) -> BitVector:
        return BitVector(self.entries[i])

    def column(self, j: int) -> BitVector:
        return BitVector(self.entries[:, j])

    def apply(self, v: BitVector) -> BitVector:
        if self.cols != len(v):
            raise DimensionMismatch(f"cannot apply a {self.rows}x{self.cols} matrix to a vector of length {len(v)}")
        return BitVector(self.entries.astype(np.int64) @ v.bits.astype(np.int64))

    def __matmul__(self, other):
        if isinstance(other, BitVector):
            return self.apply(other)
        return matmul(self, other)

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.entries.shape != other.entries.shape:
            raise DimensionMismatch(f"cannot add matrices of shape {self.entries.shape} and {other.entries.shape}")
        return BitMatrix(self.entries ^ other.entries)

    def is_zero(self) -> bool:
        return not self.entries.any()

    def to_strings(self) -> list[str]:
        """Row-major bit strings."""
        return ["".join(str(int(b)) for b in r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.entries.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, rank={rank(self)})"


def matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Composite a∘b (apply b first)."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot compose {a.rows}x{a.cols} after {b.rows}x{b.cols}")
    return BitMatrix(a.entries.astype(np.int64) @ b.entries.astype(np.int64))


def _rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2) and its pivot columns."""
    m = a.astype(np.uint8, copy=True)
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        candidates = np.flatnonzero(m[r:, c])
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            m[[r, p], :] = m[[p, r], :]
        ones = np.flatnonzero(m[:, c])
        ones = ones[ones != r]
        if ones.size:
            m[ones, :] ^= m[r, :]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(m: BitMatrix) -> int:
    return len(_rref(m.entries)[1])


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Rows span ker(m) ⊆ GF(2)^cols; one row per free column, in column order."""
    reduced, pivots = _rref(m.entries)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), m.cols), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, p in enumerate(pivots):
            if reduced[r, f]:
                basis[k, p] = 1
    return BitMatrix(basis)


def image_basis(m: BitMatrix) -> BitMatrix:
    """Rows span im(m) ⊆ GF(2)^rows."""
    reduced, pivots = _rref(m.entries.T)
    return BitMatrix(reduced[: len(pivots)]) if pivots else BitMatrix.zeros(0, m.rows)


def row_space_basis(generators: BitMatrix) -> BitMatrix:
    reduced, pivots = _rref(generators.entries)
    return BitMatrix(reduced[: len(pivots)]) if pivots else BitMatrix.zeros(0, generators.cols)


def _stack(v: BitMatrix, w: BitMatrix) -> BitMatrix:
    if v.cols != w.cols:
        raise DimensionMismatch(f"subspaces live in GF(2)^{v.cols} and GF(2)^{w.cols}")
    return BitMatrix(np.vstack([v.entries, w.entries]))


def span_dim(generators: BitMatrix) -> int:
    return rank(generators)


def contains(v: BitMatrix, w: BitMatrix) -> bool:
    """True iff span(w) ⊆ span(v)."""
    return rank(_stack(v, w)) == rank(v)


def same_subspace(v: BitMatrix, w: BitMatrix) -> bool:
    return contains(v, w) and contains(w, v)


def intersection_dim(v: BitMatrix, w: BitMatrix) -> int:
    return rank(v) + rank(w) - rank(_stack(v, w))


def quotient_dim(v: BitMatrix, w: BitMatrix) -> int:
    """dim(span v / span w); requires span w ⊆ span v."""
    if not contains(v, w):
        raise DimensionMismatch("quotient_dim needs the second subspace to lie inside the first")
    return rank(v) - rank(w)


@dataclass(frozen=True)
class ExactSequenceCheck:
    maps: tuple[BitMatrix, ...]
    verdicts: tuple[bool, ...]
    image_dims: tuple[int, ...]
    kernel_dims: tuple[int, ...]

    @property
    def exact(self) -> bool:
        return all(self.verdicts)


def check_exact(maps: Sequence[BitMatrix]) -> ExactSequenceCheck:
    """
    Verdict per interior junction i: im(maps[i]) == ker(maps[i+1]).
    maps[i+1] must accept the codomain of maps[i].
    """
    maps = tuple(maps)
    for i in range(len(maps) - 1):
        if maps[i + 1].cols != maps[i].rows:
            raise DimensionMismatch(
                f"map {i + 1} expects GF(2)^{maps[i + 1].cols} but map {i} lands in GF(2)^{maps[i].rows}"
            )
    verdicts, im_dims, ker_dims = [], [], []
    for i in range(len(maps) - 1):
        im = image_basis(maps[i])
        ker = kernel_basis(maps[i + 1])
        verdicts.append(same_subspace(im, ker) and matmul(maps[i + 1], maps[i]).is_zero())
        im_dims.append(im.rows)
        ker_dims.append(ker.rows)
    return ExactSequenceCheck(maps, tuple(verdicts), tuple(im_dims), tuple(ker_dims))


def short_exact(f: BitMatrix, g: BitMatrix) -> ExactSequenceCheck:
    """Check 0 → A --f--> B --g--> C → 0 at all three junctions."""
    return check_exact([BitMatrix.zeros(f.cols, 0), f, g, BitMatrix.zeros(0, g.rows)])


@dataclass(frozen=True, eq=False)
class SymplecticForm:
    matrix: BitMatrix

    def __post_init__(self):
        e = self.matrix.entries
        if e.shape[0] != e.shape[1] or e.shape[0] % 2:
            raise DegenerateFormError(f"a symplectic form needs an even square matrix, got {e.shape}")
        if not np.array_equal(e, e.T) or e.diagonal().any():
            raise DegenerateFormError("form matrix must be symmetric with zero diagonal")
        if rank(self.matrix) != e.shape[0]:
            raise DegenerateFormError(f"form is degenerate: rank {rank(self.matrix)} < {e.shape[0]}")

    @classmethod
    def standard(cls, n_pairs: int) -> "SymplecticForm":
        e = np.zeros((2 * n_pairs, 2 * n_pairs), dtype=np.uint8)
        for i in range(n_pairs):
            e[2 * i, 2 * i + 1] = e[2 * i + 1, 2 * i] = 1
        return cls(BitMatrix(e))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def is_standard(self) -> bool:
        return self.matrix == SymplecticForm.standard(self.dim // 2).matrix

    def pairing(self, x: BitVector, y: BitVector) -> int:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"pairing on GF(2)^{self.dim} got lengths {len(x)}, {len(y)}")
        e = self.matrix.entries.astype(np.int64)
        return int(x.bits.astype(np.int64) @ e @ y.bits.astype(np.int64) & 1)


def symplectic_basis(form: SymplecticForm) -> list[tuple[BitVector, BitVector]]:
    """Symplectic Gram-Schmidt; the standard form returns its own (a_i, b_i)."""
    n = form.dim
    if form.is_standard():
        return [(BitVector.basis(n, 2 * i), BitVector.basis(n, 2 * i + 1)) for i in range(n // 2)]
    b_mat = form.matrix.entries.astype(np.int64)
    rest = np.eye(n, dtype=np.int64)
    pairs = []
    while rest.shape[0]:
        a = rest[0]
        pa = (rest @ (b_mat @ a)) & 1
        partners = np.flatnonzero(pa)
        if partners.size == 0:
            raise DegenerateFormError("form is degenerate: found a vector orthogonal to everything")
        j = int(partners[0])
        b = rest[j]
        keep = np.array([k for k in range(rest.shape[0]) if k not in (0, j)], dtype=int)
        others = rest[keep] if keep.size else np.zeros((0, n), dtype=np.int64)
        if others.shape[0]:
            pb = (others @ (b_mat @ b)) & 1
            pa_o = (others @ (b_mat @ a)) & 1
            others = (others + np.outer(pb, a) + np.outer(pa_o, b)) & 1
        pairs.append((BitVector(a), BitVector(b)))
        rest = others
    return pairs


def transvection(v: BitVector, form: SymplecticForm) -> BitMatrix:
    """Matrix of x ↦ x + pairing(x, v)·v; preserves the form."""
    if len(v) != form.dim:
        raise DimensionMismatch(f"transvection vector has length {len(v)}, form has dim {form.dim}")
    bv = (form.matrix.entries.astype(np.int64) @ v.bits.astype(np.int64)) & 1
    return BitMatrix(np.eye(form.dim, dtype=np.int64) + np.outer(v.bits.astype(np.int64), bv))


@dataclass(frozen=True, eq=False)
class QuadraticRefinement:
    """
    Affine quadratic function q(x) = base_parity + q0(x), where q0 is the
    homogeneous refinement determined by its values on the coordinate basis:
        q0(x) = Σ x_i·values_i + Σ_{i<j} x_i x_j B(e_i, e_j).
    """

    form: SymplecticForm
    values: BitVector
    base_parity: int = 0

    def __post_init__(self):
        if len(self.values) != self.form.dim:
            raise DimensionMismatch(f"{len(self.values)} basis values for a form of dim {self.form.dim}")
        object.__setattr__(self, "base_parity", int(self.base_parity) & 1)
        upper = np.triu(self.form.matrix.entries.astype(np.int64), k=1)
        object.__setattr__(self, "_upper", upper)

    @property
    def dim(self) -> int:
        return self.form.dim

    def homogeneous(self, x: BitVector) -> int:
        if len(x) != self.dim:
            raise DimensionMismatch(f"refinement on GF(2)^{self.dim} got a vector of length {len(x)}")
        xi = x.bits.astype(np.int64)
        return int((xi @ self._upper @ xi + xi @ self.values.bits.astype(np.int64)) & 1)

    def __call__(self, x: BitVector) -> int:
        return self.base_parity ^ self.homogeneous(x)

    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        """q on every row of a k×dim bit array."""
        x = np.asarray(xs, dtype=np.int64)
        if x.ndim != 2 or x.shape[1] != self.dim:
            raise DimensionMismatch(f"expected rows of length {self.dim}, got shape {x.shape}")
        quad = ((x @ self._upper) * x).sum(axis=1)
        lin = x @ self.values.bits.astype(np.int64)
        return ((quad + lin + self.base_parity) & 1).astype(np.uint8)

    def compose(self, t: BitMatrix) -> "QuadraticRefinement":
        """x ↦ q(t x) for a form-preserving t."""
        if t.rows != self.dim or t.cols != self.dim:
            raise DimensionMismatch(f"change of basis must be {self.dim}x{self.dim}")
        new_form = SymplecticForm(matmul(matmul(t.T, self.form.matrix), t))
        vals = [self.homogeneous(t.column(j)) for j in range(self.dim)]
        return QuadraticRefinement(new_form, BitVector(vals), self.base_parity)


def spin_refinement(n_pairs: int, parity: int, *, odd_first_a: bool = False) -> QuadraticRefinement:
    """
    Refinement of the standard form with Arf invariant = base parity = `parity`.

    Default table: q0(a_1) = q0(b_1) = parity, zero elsewhere.
    odd_first_a:   q0(a_1) = 1, q0(b_1) = parity, zero elsewhere.
    """
    parity &= 1
    values = np.zeros(2 * n_pairs, dtype=np.uint8)
    if n_pairs == 0:
        if parity:
            raise DegenerateFormError("the zero space carries no refinement of Arf invariant 1")
    elif odd_first_a:
        values[0], values[1] = 1, parity
    else:
        values[0] = values[1] = parity
    return QuadraticRefinement(SymplecticForm.standard(n_pairs), BitVector(values), parity)


def polarize(q: QuadraticRefinement, x: BitVector, y: BitVector) -> int:
    """q(x+y) + q(x) + q(y) + q(0); equals pairing(x, y) for every base parity."""
    if len(x) != q.dim or len(y) != q.dim:
        raise DimensionMismatch(f"polarize on GF(2)^{q.dim} got lengths {len(x)}, {len(y)}")
    return q(x + y) ^ q(x) ^ q(y) ^ q.base_parity


def arf(q: QuadraticRefinement) -> int:
    """Σ q0(a_i)·q0(b_i) over a symplectic basis."""
    return sum(q.homogeneous(a) * q.homogeneous(b) for a, b in symplectic_basis(q.form)) & 1


def arf_by_majority(q: QuadraticRefinement) -> int:
    """Brute-force Arf: 1 iff q0 takes the value 1 on the majority of vectors (dim ≤ 16)."""
    if q.dim > 16:
        raise DimensionMismatch("majority-count Arf is limited to dimension 16")
    xs = all_vectors(q.dim)
    ones = int((q.evaluate_many(xs) ^ q.base_parity).sum())
    return int(ones > (1 << q.dim) // 2)


def all_vectors(n: int) -> np.ndarray:
    """Every vector of GF(2)^n as rows, row k = bits of k (little-endian)."""
    k = np.arange(1 << n, dtype=np.int64)
    return ((k[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.uint8)


def span_vectors(generators: BitMatrix) -> np.ndarray:
    """All 2**k combinations of the k generator rows (with repetition if dependent)."""
    coeffs = all_vectors(generators.rows).astype(np.int64)
    return ((coeffs @ generators.entries.astype(np.int64)) & 1).astype(np.uint8)


def vectors(rows: Iterable[BitVector]) -> np.ndarray:
    return np.vstack([r.bits for r in rows])
