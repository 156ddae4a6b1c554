"""Bit-packed linear algebra over GF(2) using Python int bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class GF2Vector:
    """A fixed-length vector over GF(2); element ``i`` is bit ``i`` of ``bits``."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        # canonical padding: bits beyond `length` are zero
        object.__setattr__(self, "bits", self.bits & ((1 << self.length) - 1))

    @classmethod
    def from_bits(cls, elements: Iterable[int]) -> GF2Vector:
        bits = 0
        length = 0
        for e in elements:
            if e & 1:
                bits |= 1 << length
            length += 1
        return cls(length, bits)

    @classmethod
    def from_string(cls, text: str) -> GF2Vector:
        """Parse e.g. "0011" (leftmost character is element 0)."""
        return cls.from_bits(int(c) for c in text)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def __iter__(self):
        return ((self.bits >> i) & 1 for i in range(self.length))

    def __xor__(self, other: GF2Vector) -> GF2Vector:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")
        return GF2Vector(self.length, self.bits ^ other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return "".join(str(b) for b in self)


@dataclass(frozen=True)
class GF2Matrix:
    """Dense GF(2) matrix stored as one bitset row per matrix row."""

    rows: int
    cols: int
    row_data: tuple[GF2Vector, ...]

    def __post_init__(self) -> None:
        if len(self.row_data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.row_data)}")
        for r in self.row_data:
            if r.length != self.cols:
                raise ValueError(f"row length {r.length} != cols {self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[GF2Vector | str | Iterable[int]]) -> GF2Matrix:
        vecs = []
        for r in rows:
            if isinstance(r, GF2Vector):
                vecs.append(r)
            elif isinstance(r, str):
                vecs.append(GF2Vector.from_string(r))
            else:
                vecs.append(GF2Vector.from_bits(r))
        if not vecs:
            raise ValueError("from_rows needs at least one row; use GF2Matrix(0, cols, ()) for empty")
        cols = vecs[0].length
        return cls(len(vecs), cols, tuple(vecs))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> GF2Matrix:
        return cls(rows, cols, tuple(GF2Vector(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(GF2Vector(n, 1 << i) for i in range(n)))

    def row(self, i: int) -> GF2Vector:
        return self.row_data[i]

    def transpose(self) -> GF2Matrix:
        cols = []
        for j in range(self.cols):
            bits = 0
            for i in range(self.rows):
                bits |= ((self.row_data[i].bits >> j) & 1) << i
            cols.append(GF2Vector(self.rows, bits))
        return GF2Matrix(self.cols, self.rows, tuple(cols))


def rank(matrix: GF2Matrix) -> int:
    """Row rank over GF(2) via in-place Gaussian elimination on int rows."""
    work = [r.bits for r in matrix.row_data]
    rnk = 0
    for col in range(matrix.cols):
        pivot = None
        for i in range(rnk, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rnk], work[pivot] = work[pivot], work[rnk]
        for i in range(len(work)):
            if i != rnk and (work[i] >> col) & 1:
                work[i] ^= work[rnk]
        rnk += 1
        if rnk == len(work):
            break
    return rnk


def kernel_dim(matrix: GF2Matrix) -> int:
    """Nullspace dimension: cols - rank (rank-nullity)."""
    return matrix.cols - rank(matrix)


def mat_vec(matrix: GF2Matrix, vec: GF2Vector) -> GF2Vector:
    """Matrix-vector product; entry i is the parity of row_i AND vec."""
    if vec.length != matrix.cols:
        raise ValueError(f"dimension mismatch: matrix has {matrix.cols} cols, vector length {vec.length}")
    bits = 0
    for i, row in enumerate(matrix.row_data):
        bits |= ((row.bits & vec.bits).bit_count() & 1) << i
    return GF2Vector(matrix.rows, bits)
