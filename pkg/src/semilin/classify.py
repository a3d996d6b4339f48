"""Exactness classification and the desk-scale verification suites.

A semifield is left exact (every linear functional on a finitely generated
subsemimodule extends to the whole space) precisely when its descriptor flags
say it is a ring or idempotent.  The verdict for the remaining case carries
the canonical unsolvable probe system as a witness.

Two suites back the classification up empirically: an exhaustive sweep over
every small boolean system, and a seeded randomized run checking that exact
carriers always produce one verified Solution or one verified Refutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Optional

from .errors import InvalidDescriptorError, ToolkitError, UnsupportedCarrierError
from .matrices import ColVec, Matrix, mat_mul
from .semirings import SemiringDescriptor, SemiringTag, format_element
from .solver import SolveKind, membership_certified
from .sampling import random_system
from .witness import check_certificate, non_exactness_instance


class ExactnessReason(Enum):
    DIVISION_RING = "division-ring"
    IDEMPOTENT = "idempotent"
    NO_ABSORBING_E = "no-absorbing-e"


@dataclass(frozen=True)
class ExactnessVerdict:
    left_exact: bool
    reason: ExactnessReason
    witness: Optional[tuple[Matrix, ColVec]] = None


def _validate_descriptor(desc: SemiringDescriptor) -> None:
    if desc.is_idempotent and not desc.is_zero_sum_free:
        raise InvalidDescriptorError("idempotent carriers are zero-sum free")
    if desc.has_minus_one and desc.is_zero_sum_free:
        raise InvalidDescriptorError("1 + x = 0 contradicts zero-sum-freeness")
    if desc.has_minus_one and desc.is_idempotent:
        raise InvalidDescriptorError("1 + 1 = 1 plus an additive inverse of 1 forces 0 = 1")
    # in a semifield, an e with 1 + 1 + e = 1 exists iff it is a ring or idempotent
    if desc.exists_absorbing_e != (desc.has_minus_one or desc.is_idempotent):
        raise InvalidDescriptorError(
            "exists_absorbing_e must agree with has_minus_one or is_idempotent"
        )
    if desc.carrier_size == "two" and not desc.is_idempotent:
        raise InvalidDescriptorError("the only two-element semifield is idempotent")


def classify(desc: SemiringDescriptor) -> ExactnessVerdict:
    """Classify a semifield descriptor as left exact or not.

    Rings and idempotent semifields are left exact; everything else is not,
    and the verdict carries the probe system that no nonnegative-style
    carrier without an e satisfying 1 + 1 + e = 1 can solve.
    """
    _validate_descriptor(desc)
    if desc.has_minus_one:
        return ExactnessVerdict(True, ExactnessReason.DIVISION_RING)
    if desc.is_idempotent:
        return ExactnessVerdict(True, ExactnessReason.IDEMPOTENT)
    return ExactnessVerdict(
        False, ExactnessReason.NO_ABSORBING_E, witness=non_exactness_instance(desc.tag)
    )


# --- exhaustive sweep over small boolean systems ------------------------------


@dataclass(frozen=True)
class ShapeReport:
    d: int
    n: int
    systems: int
    members: int
    violations: tuple[str, ...]


@dataclass(frozen=True)
class ExhaustiveReport:
    d_max: int
    n_max: int
    shapes: tuple[ShapeReport, ...]
    total_systems: int
    total_violations: int


def boolean_exhaustive_check(d_max: int, n_max: int) -> ExhaustiveReport:
    """Verify kernel-inclusion implies membership for every small boolean system.

    For each shape d x n with d <= d_max, n <= n_max, enumerates all matrices
    and right-hand sides; for every non-member b it confirms some pair (u, v)
    has u·A = v·A but u·b != v·b.  Systems are encoded as bitmasks, which
    keeps the full d = n = 3 sweep (4096 systems in that shape alone) fast.
    """
    if not (1 <= d_max <= 4 and 1 <= n_max <= 4):
        raise ValueError("exhaustive sweep is sized for dimensions 1..4")
    shapes = []
    for d in range(1, d_max + 1):
        for n in range(1, n_max + 1):
            violations: list[str] = []
            members = 0
            for a_bits in range(1 << (d * n)):
                row_masks = [(a_bits >> (i * n)) & ((1 << n) - 1) for i in range(d)]
                col_masks = [
                    sum(((row_masks[i] >> j) & 1) << i for i in range(d)) for j in range(n)
                ]
                for b_mask in range(1 << d):
                    member = any(
                        all(
                            ((row_masks[i] & w) != 0) == bool((b_mask >> i) & 1)
                            for i in range(d)
                        )
                        for w in range(1 << n)
                    )
                    if member:
                        members += 1
                        continue
                    # non-member: the left kernel has to separate b somewhere
                    seen: dict[tuple[bool, ...], bool] = {}
                    inclusion_holds = True
                    for u in range(1 << d):
                        key = tuple((u & c) != 0 for c in col_masks)
                        b_bit = (u & b_mask) != 0
                        if key in seen:
                            if seen[key] != b_bit:
                                inclusion_holds = False
                                break
                        else:
                            seen[key] = b_bit
                    if inclusion_holds:
                        violations.append(
                            f"d={d} n={n} A=0b{a_bits:0{d * n}b} b=0b{b_mask:0{d}b}"
                        )
            shapes.append(
                ShapeReport(d, n, (1 << (d * n)) * (1 << d), members, tuple(violations))
            )
    total = sum(s.systems for s in shapes)
    bad = sum(len(s.violations) for s in shapes)
    return ExhaustiveReport(d_max, n_max, tuple(shapes), total, bad)


# --- randomized dichotomy suite ----------------------------------------------


@dataclass(frozen=True)
class DichotomyReport:
    tag: SemiringTag
    trials: int
    seed: int
    solutions: int
    refutations: int
    failures: tuple[str, ...]


def _describe_instance(a: Matrix, b: ColVec) -> str:
    rows = "; ".join(" ".join(format_element(e) for e in row) for row in a.entries)
    vec = " ".join(format_element(e) for e in b.entries)
    return f"A=[{rows}] b=[{vec}]"


def randomized_dichotomy_suite(
    tag: SemiringTag | str, trials: int, seed: int
) -> DichotomyReport:
    """Draw random systems and demand one *verified* Solution or Refutation each.

    Half the draws are solvable by construction (b := A·w), half independent.
    Each Solution is recomputed against A, each Refutation re-validated; an
    Undecided outcome or a failed check is reported as a failure with enough
    context to replay it.
    """
    tag = SemiringTag(tag)
    if tag not in (SemiringTag.BOOLEAN, SemiringTag.TROPICAL, SemiringTag.RATIONAL):
        raise UnsupportedCarrierError("the dichotomy suite runs on exact carriers only")
    rng = Random(seed)
    solutions = refutations = 0
    failures: list[str] = []
    for trial in range(trials):
        a, b = random_system(tag, rng)
        prefix = f"trial {trial} (seed {seed}): {_describe_instance(a, b)}"
        try:
            result = membership_certified(a, b)
        except ToolkitError as exc:
            failures.append(f"{prefix} raised {type(exc).__name__}: {exc}")
            continue
        if result.kind is SolveKind.SOLUTION:
            if mat_mul(a, result.w) == b:
                solutions += 1
            else:
                failures.append(f"{prefix} claimed solution does not reproduce b")
        elif result.kind is SolveKind.REFUTATION:
            if check_certificate(a, b, result.u, result.v):
                refutations += 1
            else:
                failures.append(f"{prefix} claimed certificate does not validate")
        else:
            failures.append(f"{prefix} returned {result.kind.value} on an exact carrier")
    return DichotomyReport(tag, trials, seed, solutions, refutations, tuple(failures))
