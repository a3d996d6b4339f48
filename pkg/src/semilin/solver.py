"""Certified membership decisions and linear-functional extension.

``membership_certified`` answers whether b lies in the right image of A and
backs the answer up: a Solution carries w with A·w = b recomputed exactly,
a Refutation carries a kernel pair (u, v) with u·A = v·A and u·b != v·b.
Over the boolean, tropical and rational carriers exactly one of the two is
returned for every system.  The nonnegative-rational carrier admits a third
outcome, NO_SOLUTION, for systems proved unsolvable by exact elimination yet
having no kernel pair, plus UNDECIDED when a bounded search is inconclusive.

``extend_functional`` turns the same machinery into an extension engine for
functionals given by their values on the rows of a generator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import islice, product
from typing import Optional

from .errors import (
    DimensionMismatchError,
    InternalInvariantError,
    MembershipDetectedError,
    TagMismatchError,
    UnsupportedCarrierError,
    ZeroColumnError,
)
from .matrices import (
    ColVec,
    Matrix,
    RowVec,
    inflate_solution,
    mat_mul,
    normalize,
    unit_row,
    unscale_certificate,
    zeros_col,
    zeros_row,
)
from .semirings import Element, SemiringTag, inv, mul, nat_geq, zero
from .witness import boolean_kernel_witness, check_certificate, kernel_witness


class SolveKind(Enum):
    SOLUTION = "solution"
    REFUTATION = "refutation"
    NO_SOLUTION = "no-solution"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class CertifiedSolveResult:
    """Outcome of a membership query.

    kind=SOLUTION carries w, kind=REFUTATION carries the kernel pair (u, v);
    NO_SOLUTION and UNDECIDED occur only over the nonnegative rationals and
    carry a prose reason in ``detail``.
    """

    kind: SolveKind
    w: Optional[ColVec] = None
    u: Optional[RowVec] = None
    v: Optional[RowVec] = None
    detail: str = ""


class ExtensionKind(Enum):
    EXTENDED = "extended"
    ILL_POSED = "ill-posed"
    NOT_EXTENDABLE = "not-extendable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ExtensionResult:
    """Outcome of extending a functional from the row space of G.

    EXTENDED carries the coefficient vector alpha with G·alpha = values, so
    psi(x) = sum_j x_j·alpha_j agrees with the functional on every generator.
    ILL_POSED carries a kernel pair showing the prescribed values are
    inconsistent or inextensible.
    """

    kind: ExtensionKind
    alpha: Optional[ColVec] = None
    u: Optional[RowVec] = None
    v: Optional[RowVec] = None
    detail: str = ""


def _check_system(a: Matrix, b: ColVec) -> None:
    if a.tag is not b.tag:
        raise TagMismatchError("matrix and vector carriers differ")
    if b.length != a.rows:
        raise DimensionMismatchError(f"matrix has {a.rows} rows, vector has {b.length}")


def _nat_meet(items: list[Element]) -> Element:
    """Greatest lower bound in the natural order of a nonempty chain sample."""
    m = items[0]
    for x in items[1:]:
        if nat_geq(m, x):
            m = x
    return m


def principal_solution(a: Matrix, b: ColVec) -> Optional[ColVec]:
    """Greatest candidate solution under the natural order, or None.

    Over the idempotent totally ordered carriers the componentwise residual
    x_j = meet over rows i with A_i^j != 0 of (A_i^j)^-1 · b_i dominates every
    solution; the system is solvable iff this candidate itself solves it.
    A has to be free of all-zero columns (normalize first, or pre-strip).
    """
    _check_system(a, b)
    tag = a.tag
    if tag not in (SemiringTag.BOOLEAN, SemiringTag.TROPICAL):
        raise UnsupportedCarrierError("residuation needs an idempotent totally ordered carrier")
    z = zero(tag)
    entries = []
    for j in range(a.cols):
        candidates = [
            mul(inv(a.entries[i][j]), b.entries[i])
            for i in range(a.rows)
            if a.entries[i][j] != z
        ]
        if not candidates:
            raise ZeroColumnError(f"column {j} is entirely zero; strip zero columns first")
        entries.append(_nat_meet(candidates))
    xhat = ColVec(tag, tuple(entries))
    return xhat if mat_mul(a, xhat) == b else None


# --- exact rational elimination ---------------------------------------------


def _row_reduce(
    a: list[list[Fraction]], b: list[Fraction]
) -> tuple[Optional[list[Fraction]], Optional[list[Fraction]], list[list[Fraction]]]:
    """Gauss-Jordan over exact fractions with a tracked transform.

    Returns (particular_solution, refutation_row, null_basis).  Exactly one
    of the first two is not None.  The refutation row y satisfies y·A = 0 and
    y·b != 0, read off the transform at an inconsistent row.
    """
    d = len(a)
    n = len(a[0]) if a else 0
    m = [list(row) for row in a]
    rhs = list(b)
    transform = [[Fraction(int(i == t)) for t in range(d)] for i in range(d)]

    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, d) if m[i][c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
            transform[r], transform[pivot] = transform[pivot], transform[r]
        scale = m[r][c]
        m[r] = [x / scale for x in m[r]]
        rhs[r] = rhs[r] / scale
        transform[r] = [x / scale for x in transform[r]]
        for i in range(d):
            if i == r or m[i][c] == 0:
                continue
            factor = m[i][c]
            m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
            rhs[i] = rhs[i] - factor * rhs[r]
            transform[i] = [x - factor * y for x, y in zip(transform[i], transform[r])]
        pivot_cols.append(c)
        r += 1
        if r == d:
            break

    for i in range(r, d):
        if rhs[i] != 0:
            return None, transform[i], []

    solution = [Fraction(0)] * n
    for idx, c in enumerate(pivot_cols):
        solution[c] = rhs[idx]
    free_cols = [c for c in range(n) if c not in set(pivot_cols)]
    null_basis = []
    for f in free_cols:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for idx, c in enumerate(pivot_cols):
            vec[c] = -m[idx][f]
        null_basis.append(vec)
    return solution, None, null_basis


def _split_refutation_row(tag: SemiringTag, y: list[Fraction]) -> tuple[RowVec, RowVec]:
    """Split y = u - v into nonnegative parts, keeping the certificate shape."""
    u = RowVec(tag, tuple(Element(tag, x if x > 0 else Fraction(0)) for x in y))
    v = RowVec(tag, tuple(Element(tag, -x if x < 0 else Fraction(0)) for x in y))
    return u, v


def field_solve(a: Matrix, b: ColVec) -> CertifiedSolveResult:
    """Exact elimination over the rational carrier: Solution or Refutation."""
    _check_system(a, b)
    if a.tag is not SemiringTag.RATIONAL:
        raise UnsupportedCarrierError("field_solve is defined over the rational carrier")
    raw_a = [[e.value for e in row] for row in a.entries]
    raw_b = [e.value for e in b.entries]
    solution, refutation_row, _ = _row_reduce(raw_a, raw_b)
    if refutation_row is not None:
        u, v = _split_refutation_row(a.tag, refutation_row)
        return _checked_refutation(a, b, u, v)
    w = ColVec(a.tag, tuple(Element(a.tag, x) for x in solution))
    return _checked_solution(a, b, w)


def _checked_solution(a: Matrix, b: ColVec, w: ColVec, detail: str = "") -> CertifiedSolveResult:
    if mat_mul(a, w) != b:
        raise InternalInvariantError("claimed solution does not reproduce b")
    return CertifiedSolveResult(SolveKind.SOLUTION, w=w, detail=detail)


def _checked_refutation(a: Matrix, b: ColVec, u: RowVec, v: RowVec) -> CertifiedSolveResult:
    if not check_certificate(a, b, u, v):
        raise InternalInvariantError("claimed kernel pair does not validate")
    return CertifiedSolveResult(SolveKind.REFUTATION, u=u, v=v)


# --- bounded search over the nonnegative rationals ---------------------------

_GRID_VALUES = [Fraction(k, 2) for k in range(-6, 7)]
_COARSE_VALUES = [Fraction(k) for k in range(-2, 3)]
_SEARCH_CAP = 40000


def _nonneg_membership(a: Matrix, b: ColVec) -> CertifiedSolveResult:
    """Decide what exact elimination can; fall back to a bounded grid search.

    The rational refutation row splits into nonnegative u, v, so it stays a
    valid certificate in the nonnegative carrier.  A unique rational solution
    with a negative coordinate proves unsolvability analytically (the probe
    instance family lands here) but admits no kernel pair, hence NO_SOLUTION
    without one.  With free variables, candidates on a small grid around the
    particular solution are tried; failure to find one is only UNDECIDED.
    """
    tag = a.tag
    raw_a = [[e.value for e in row] for row in a.entries]
    raw_b = [e.value for e in b.entries]
    solution, refutation_row, null_basis = _row_reduce(raw_a, raw_b)
    if refutation_row is not None:
        u, v = _split_refutation_row(tag, refutation_row)
        return _checked_refutation(a, b, u, v)
    assert solution is not None
    if all(x >= 0 for x in solution):
        w = ColVec(tag, tuple(Element(tag, x) for x in solution))
        return _checked_solution(a, b, w)
    if not null_basis:
        return CertifiedSolveResult(
            SolveKind.NO_SOLUTION,
            detail="the unique rational solution has a negative coordinate; "
            "no nonnegative solution exists (and no kernel pair can witness this)",
        )
    values = _GRID_VALUES if len(_GRID_VALUES) ** len(null_basis) <= _SEARCH_CAP else _COARSE_VALUES
    combos = islice(product(values, repeat=len(null_basis)), _SEARCH_CAP)
    tried = 0
    for combo in combos:
        tried += 1
        candidate = list(solution)
        for t, vec in zip(combo, null_basis):
            if t == 0:
                continue
            candidate = [x + t * y for x, y in zip(candidate, vec)]
        if all(x >= 0 for x in candidate):
            w = ColVec(tag, tuple(Element(tag, x) for x in candidate))
            return _checked_solution(a, b, w)
    return CertifiedSolveResult(
        SolveKind.UNDECIDED,
        detail=f"bounded search over {tried} candidates found no nonnegative solution",
    )


def membership_certified(a: Matrix, b: ColVec) -> CertifiedSolveResult:
    """Decide b in right-im A with a certificate, dispatching on the carrier.

    rational: exact elimination.  boolean/tropical: normalize to
    column-stochastic form, residuate, and on failure construct a kernel pair
    (exhaustive search over the two-element carrier) that maps back through
    the inverse scalings.  nonneg-rational: elimination plus a bounded search.
    Every returned object is re-validated before this function returns.
    """
    _check_system(a, b)
    tag = a.tag
    if tag is SemiringTag.RATIONAL:
        return field_solve(a, b)
    if tag is SemiringTag.NONNEG_RATIONAL:
        return _nonneg_membership(a, b)

    z = zero(tag)
    if all(e == z for e in b.entries):
        return _checked_solution(a, b, zeros_col(tag, a.cols))
    if all(e == z for row in a.entries for e in row):
        i = next(i for i in range(a.rows) if b.entries[i] != z)
        return _checked_refutation(a, b, unit_row(tag, a.rows, i), zeros_row(tag, a.rows))

    system = normalize(a, b)
    xhat = principal_solution(system.a_norm, system.b_norm)
    if xhat is not None:
        return _checked_solution(a, b, inflate_solution(system, xhat))
    try:
        if tag is SemiringTag.BOOLEAN:
            u_norm, v_norm = boolean_kernel_witness(system.a_norm, system.b_norm)
        else:
            u_norm, v_norm = kernel_witness(system.a_norm, system.b_norm)
    except MembershipDetectedError as exc:
        raise InternalInvariantError(
            f"residuation found no solution but the witness builder found one: {exc}"
        ) from exc
    u, v = unscale_certificate(system, u_norm, v_norm)
    return _checked_refutation(a, b, u, v)


def extend_functional(g: Matrix, values: ColVec) -> ExtensionResult:
    """Extend a functional defined on the rows of G by its values there.

    A Solution w of G·alpha = values yields psi(x) = sum_j x_j·alpha_j, which
    agrees with the functional on every generator; a Refutation yields the
    kernel pair showing the prescription is ill-posed or inextensible.
    """
    result = membership_certified(g, values)
    if result.kind is SolveKind.SOLUTION:
        return ExtensionResult(ExtensionKind.EXTENDED, alpha=result.w)
    if result.kind is SolveKind.REFUTATION:
        return ExtensionResult(ExtensionKind.ILL_POSED, u=result.u, v=result.v)
    if result.kind is SolveKind.NO_SOLUTION:
        return ExtensionResult(ExtensionKind.NOT_EXTENDABLE, detail=result.detail)
    return ExtensionResult(ExtensionKind.INCONCLUSIVE, detail=result.detail)
