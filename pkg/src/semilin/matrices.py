"""Dense matrices and oriented vectors over a single carrier.

Everything is immutable and row-major.  A matrix has at least one row but may
have zero columns (dropping all-zero columns can empty it); the convention is
that the right image of a zero-column matrix is {0}.

The column-stochastic normal form lives here too: any system A·w = b over a
zero-sum-free carrier scales to one whose columns sum to the multiplicative
identity and whose right-hand side is a 0/1 vector, and the scalings are
invertible diagonals, so answers map back exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionMismatchError,
    InternalInvariantError,
    NotZeroSumFreeError,
    TagMismatchError,
)
from .semirings import Element, SemiringTag, add, descriptor, element, inv, mul, one, zero


@dataclass(frozen=True)
class RowVec:
    """A 1 x n row vector."""

    tag: SemiringTag
    entries: tuple[Element, ...]

    def __post_init__(self) -> None:
        _check_entries(self.tag, self.entries)

    @property
    def length(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ColVec:
    """An n x 1 column vector."""

    tag: SemiringTag
    entries: tuple[Element, ...]

    def __post_init__(self) -> None:
        _check_entries(self.tag, self.entries)

    @property
    def length(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Matrix:
    """A d x n matrix, d >= 1, n >= 0."""

    tag: SemiringTag
    rows: int
    cols: int
    entries: tuple[tuple[Element, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 0:
            raise DimensionMismatchError(f"bad shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows:
            raise DimensionMismatchError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError("ragged rows")
            _check_entries(self.tag, row)

    def row(self, i: int) -> tuple[Element, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Element, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))


def _check_entries(tag: SemiringTag, entries: Iterable[Element]) -> None:
    for e in entries:
        if not isinstance(e, Element):
            raise TypeError(f"expected Element, got {e!r}")
        if e.tag is not tag:
            raise TagMismatchError(f"entry tag {e.tag.value} != container tag {tag.value}")


def matrix(tag: SemiringTag | str, rows: Sequence[Sequence]) -> Matrix:
    """Build a matrix, coercing raw exact values entrywise."""
    tag = SemiringTag(tag)
    data = tuple(tuple(element(tag, v) for v in row) for row in rows)
    if not data:
        raise DimensionMismatchError("a matrix needs at least one row")
    return Matrix(tag, len(data), len(data[0]), data)


def row_vec(tag: SemiringTag | str, values: Sequence) -> RowVec:
    tag = SemiringTag(tag)
    return RowVec(tag, tuple(element(tag, v) for v in values))


def col_vec(tag: SemiringTag | str, values: Sequence) -> ColVec:
    tag = SemiringTag(tag)
    return ColVec(tag, tuple(element(tag, v) for v in values))


def identity_matrix(tag: SemiringTag | str, size: int) -> Matrix:
    """Unit matrix: ones on the diagonal, zeros elsewhere."""
    tag = SemiringTag(tag)
    o, z = one(tag), zero(tag)
    return Matrix(
        tag, size, size, tuple(tuple(o if i == j else z for j in range(size)) for i in range(size))
    )


def ones_row(tag: SemiringTag | str, length: int) -> RowVec:
    tag = SemiringTag(tag)
    return RowVec(tag, (one(tag),) * length)


def zeros_row(tag: SemiringTag | str, length: int) -> RowVec:
    tag = SemiringTag(tag)
    return RowVec(tag, (zero(tag),) * length)


def zeros_col(tag: SemiringTag | str, length: int) -> ColVec:
    tag = SemiringTag(tag)
    return ColVec(tag, (zero(tag),) * length)


def unit_row(tag: SemiringTag | str, length: int, index: int) -> RowVec:
    tag = SemiringTag(tag)
    return RowVec(tag, tuple(one(tag) if j == index else zero(tag) for j in range(length)))


def transpose(a: Matrix) -> Matrix:
    if a.cols == 0:
        raise DimensionMismatchError("cannot transpose a zero-column matrix")
    return Matrix(a.tag, a.cols, a.rows, tuple(a.col(j) for j in range(a.cols)))


def vec_add(x: Union[RowVec, ColVec], y: Union[RowVec, ColVec]) -> Union[RowVec, ColVec]:
    """Entrywise sum of two same-oriented vectors."""
    if type(x) is not type(y):
        raise DimensionMismatchError("cannot add a row vector to a column vector")
    if x.tag is not y.tag:
        raise TagMismatchError("mixed carriers")
    if x.length != y.length:
        raise DimensionMismatchError(f"lengths {x.length} != {y.length}")
    return type(x)(x.tag, tuple(add(p, q) for p, q in zip(x.entries, y.entries)))


def _sum(tag: SemiringTag, items: Iterable[Element]) -> Element:
    acc = zero(tag)
    for x in items:
        acc = add(acc, x)
    return acc


def _dot(tag: SemiringTag, xs: Sequence[Element], ys: Sequence[Element]) -> Element:
    acc = zero(tag)
    for x, y in zip(xs, ys):
        acc = add(acc, mul(x, y))
    return acc


MatMulOperand = Union[Matrix, RowVec, ColVec]


def mat_mul(x: MatMulOperand, y: MatMulOperand) -> Union[Matrix, RowVec, ColVec, Element]:
    """Semiring product of conformable operands.

    row * matrix -> row, matrix * col -> col, row * col -> scalar,
    matrix * matrix -> matrix.
    """
    if x.tag is not y.tag:
        raise TagMismatchError(f"mixed carriers: {x.tag.value} and {y.tag.value}")
    tag = x.tag
    if isinstance(x, RowVec) and isinstance(y, Matrix):
        if x.length != y.rows:
            raise DimensionMismatchError(f"inner dims {x.length} != {y.rows}")
        return RowVec(tag, tuple(_dot(tag, x.entries, y.col(j)) for j in range(y.cols)))
    if isinstance(x, Matrix) and isinstance(y, ColVec):
        if x.cols != y.length:
            raise DimensionMismatchError(f"inner dims {x.cols} != {y.length}")
        return ColVec(tag, tuple(_dot(tag, x.row(i), y.entries) for i in range(x.rows)))
    if isinstance(x, RowVec) and isinstance(y, ColVec):
        if x.length != y.length:
            raise DimensionMismatchError(f"inner dims {x.length} != {y.length}")
        return _dot(tag, x.entries, y.entries)
    if isinstance(x, Matrix) and isinstance(y, Matrix):
        if x.cols != y.rows:
            raise DimensionMismatchError(f"inner dims {x.cols} != {y.rows}")
        data = tuple(
            tuple(_dot(tag, x.row(i), y.col(j)) for j in range(y.cols)) for i in range(x.rows)
        )
        return Matrix(tag, x.rows, y.cols, data)
    raise TypeError(f"cannot multiply {type(x).__name__} by {type(y).__name__}")


def col_sums(a: Matrix) -> tuple[Element, ...]:
    return tuple(_sum(a.tag, a.col(j)) for j in range(a.cols))


def row_sums(a: Matrix) -> tuple[Element, ...]:
    return tuple(_sum(a.tag, a.row(i)) for i in range(a.rows))


def is_column_stochastic(a: Matrix) -> bool:
    """True iff every column sums to one (for min-plus: every column min is 0)."""
    o = one(a.tag)
    return all(s == o for s in col_sums(a))


def is_row_stochastic(a: Matrix) -> bool:
    """True iff every row sums to one."""
    o = one(a.tag)
    return all(s == o for s in row_sums(a))


@dataclass(frozen=True)
class NormalizedSystem:
    """Column-stochastic form of a system plus the scalings that undo it.

    ``a_norm = C^-1 · A' · D^-1`` and ``b_norm = C^-1 · b`` where A' is A
    restricted to ``kept_columns``, C = diag(row_scale), D = diag(col_scale).
    Both diagonals are invertible, so solutions and kernel-pair certificates
    for the normalized system map back to the original one.
    """

    a_norm: Matrix
    b_norm: ColVec
    row_scale: tuple[Element, ...]
    col_scale: tuple[Element, ...]
    kept_columns: tuple[int, ...]
    original_cols: int


def normalize(a: Matrix, b: ColVec) -> NormalizedSystem:
    """Scale a system over a zero-sum-free carrier to column-stochastic form.

    Drops all-zero columns, scales row i by the inverse of b_i (or 1 where
    b_i = 0) and then each remaining column by the inverse of its sum; the
    sums are nonzero precisely because the carrier is zero-sum free.
    """
    tag = a.tag
    if b.tag is not tag:
        raise TagMismatchError("matrix and vector carriers differ")
    if b.length != a.rows:
        raise DimensionMismatchError(f"matrix has {a.rows} rows, vector has {b.length}")
    if not descriptor(tag).is_zero_sum_free:
        raise NotZeroSumFreeError(f"the {tag.value} carrier is not zero-sum free")

    z = zero(tag)
    kept = tuple(j for j in range(a.cols) if any(a.entries[i][j] != z for i in range(a.rows)))
    beta = tuple(b.entries[i] if b.entries[i] != z else one(tag) for i in range(a.rows))
    beta_inv = tuple(inv(x) for x in beta)

    scaled_rows = tuple(
        tuple(mul(beta_inv[i], a.entries[i][j]) for j in kept) for i in range(a.rows)
    )
    alpha = tuple(
        _sum(tag, (scaled_rows[i][c] for i in range(a.rows))) for c in range(len(kept))
    )
    if any(x == z for x in alpha):
        raise InternalInvariantError("zero column sum despite zero-sum-freeness")
    alpha_inv = tuple(inv(x) for x in alpha)

    a_norm = Matrix(
        tag,
        a.rows,
        len(kept),
        tuple(
            tuple(mul(scaled_rows[i][c], alpha_inv[c]) for c in range(len(kept)))
            for i in range(a.rows)
        ),
    )
    b_norm = ColVec(tag, tuple(mul(beta_inv[i], b.entries[i]) for i in range(a.rows)))

    if not is_column_stochastic(a_norm):
        raise InternalInvariantError("normalized matrix is not column-stochastic")
    if any(e != z and e != one(tag) for e in b_norm.entries):
        raise InternalInvariantError("normalized right-hand side is not 0/1")
    return NormalizedSystem(a_norm, b_norm, beta, alpha, kept, a.cols)


def inflate_solution(system: NormalizedSystem, w_norm: ColVec) -> ColVec:
    """Map a normalized solution back: w = D^-1 · w_norm, dropped columns get 0."""
    tag = system.a_norm.tag
    if w_norm.length != len(system.kept_columns):
        raise DimensionMismatchError("solution length does not match kept columns")
    full = [zero(tag)] * system.original_cols
    for c, j in enumerate(system.kept_columns):
        full[j] = mul(inv(system.col_scale[c]), w_norm.entries[c])
    return ColVec(tag, tuple(full))


def unscale_certificate(
    system: NormalizedSystem, u_norm: RowVec, v_norm: RowVec
) -> tuple[RowVec, RowVec]:
    """Map a normalized kernel pair back: (u, v) = (u_norm · C^-1, v_norm · C^-1)."""
    tag = system.a_norm.tag
    beta_inv = tuple(inv(x) for x in system.row_scale)
    if u_norm.length != len(beta_inv) or v_norm.length != len(beta_inv):
        raise DimensionMismatchError("certificate length does not match row count")
    u = RowVec(tag, tuple(mul(x, s) for x, s in zip(u_norm.entries, beta_inv)))
    v = RowVec(tag, tuple(mul(x, s) for x, s in zip(v_norm.entries, beta_inv)))
    return u, v
