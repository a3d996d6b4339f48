"""Seeded random instance generators for the verification suites.

All functions take an explicit ``random.Random`` so parallel or repeated runs
reproduce byte-identically.  Tropical entries are small integers with an
occasional infinity (probability 1/8) so zero-entry edge paths (zero columns,
zero rows, b_i = 0) get exercised.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .matrices import ColVec, Matrix, RowVec, mat_mul
from .semirings import INF, Element, SemiringTag, add, element, inv, mul, one, zero


def random_element(tag: SemiringTag | str, rng: Random) -> Element:
    tag = SemiringTag(tag)
    if tag is SemiringTag.BOOLEAN:
        return element(tag, rng.randint(0, 1))
    if tag is SemiringTag.TROPICAL:
        if rng.random() < 0.125:
            return element(tag, INF)
        return element(tag, rng.randint(-9, 9))
    if tag is SemiringTag.NONNEG_RATIONAL:
        return element(tag, Fraction(rng.randint(0, 9), rng.randint(1, 3)))
    return element(tag, Fraction(rng.randint(-9, 9), rng.randint(1, 3)))


def random_nonzero_element(tag: SemiringTag | str, rng: Random) -> Element:
    tag = SemiringTag(tag)
    if tag is SemiringTag.BOOLEAN:
        return one(tag)
    if tag is SemiringTag.TROPICAL:
        return element(tag, rng.randint(-5, 5))
    sign = 1 if tag is SemiringTag.NONNEG_RATIONAL else rng.choice((-1, 1))
    return element(tag, Fraction(sign * rng.randint(1, 5), rng.randint(1, 3)))


def random_matrix(tag: SemiringTag | str, d: int, n: int, rng: Random) -> Matrix:
    tag = SemiringTag(tag)
    return Matrix(
        tag, d, n, tuple(tuple(random_element(tag, rng) for _ in range(n)) for _ in range(d))
    )


def random_row_vec(tag: SemiringTag | str, length: int, rng: Random) -> RowVec:
    tag = SemiringTag(tag)
    return RowVec(tag, tuple(random_element(tag, rng) for _ in range(length)))


def random_col_vec(tag: SemiringTag | str, length: int, rng: Random) -> ColVec:
    tag = SemiringTag(tag)
    return ColVec(tag, tuple(random_element(tag, rng) for _ in range(length)))


def random_zero_one_col(tag: SemiringTag | str, length: int, rng: Random) -> ColVec:
    """A column with entries drawn from {0, 1} of the carrier."""
    tag = SemiringTag(tag)
    return ColVec(
        tag, tuple(one(tag) if rng.random() < 0.5 else zero(tag) for _ in range(length))
    )


def random_column_stochastic(
    tag: SemiringTag | str,
    d: int,
    n: int,
    rng: Random,
    entry,
) -> Matrix:
    """A column-stochastic matrix with entries drawn by ``entry(rng)``.

    Columns are redrawn until they contain a nonzero entry, then scaled by
    the inverse of their sum, which makes each column sum exactly one.
    """
    tag = SemiringTag(tag)
    z = zero(tag)
    columns = []
    for _ in range(n):
        while True:
            col = [entry(rng) for _ in range(d)]
            if any(e != z for e in col):
                break
        s = col[0]
        for e in col[1:]:
            s = add(s, e)
        s_inv = inv(s)
        columns.append([mul(e, s_inv) for e in col])
    return Matrix(tag, d, n, tuple(tuple(columns[j][i] for j in range(n)) for i in range(d)))


def random_system(
    tag: SemiringTag | str, rng: Random, max_dim: int = 5
) -> tuple[Matrix, ColVec]:
    """A random system (A, b); half the time b := A·w so solvable cases occur."""
    tag = SemiringTag(tag)
    d = rng.randint(1, max_dim)
    n = rng.randint(1, max_dim)
    a = random_matrix(tag, d, n, rng)
    if rng.random() < 0.5:
        w = random_col_vec(tag, n, rng)
        b = mat_mul(a, w)
    else:
        b = random_col_vec(tag, d, rng)
    return a, b


def random_monomial(tag: SemiringTag | str, size: int, rng: Random) -> tuple[Matrix, Matrix]:
    """A random monomial matrix (permutation times nonzero diagonal) and its inverse.

    These are the constructively invertible matrices over any semifield.
    """
    tag = SemiringTag(tag)
    z = zero(tag)
    perm = list(range(size))
    rng.shuffle(perm)
    diag = [random_nonzero_element(tag, rng) for _ in range(size)]
    m_rows = [[z] * size for _ in range(size)]
    inv_rows = [[z] * size for _ in range(size)]
    for i in range(size):
        m_rows[i][perm[i]] = diag[i]
        inv_rows[perm[i]][i] = inv(diag[i])
    m = Matrix(tag, size, size, tuple(tuple(r) for r in m_rows))
    m_inv = Matrix(tag, size, size, tuple(tuple(r) for r in inv_rows))
    return m, m_inv
