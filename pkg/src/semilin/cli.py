"""Command-line entry point and the plain-text instance format.

Instance files are line-oriented and diff-friendly::

    semiring tropical
    matrix 2 2
    1 2
    0 0
    vector 2
    0 inf

The vector block is optional (normalize treats a missing vector as zero).
Exit codes: 0 for a positive or inconclusive answer, 1 for a certified
negative one (refutation / ill-posed / no-solution), 2 for usage or parse
errors, 3 for internal invariant violations or suite failures.  Identical
argv (and seed) produce byte-identical reports.
"""

from __future__ import annotations

import sys
from typing import Optional, Sequence

from .classify import (
    DichotomyReport,
    ExhaustiveReport,
    boolean_exhaustive_check,
    classify,
    randomized_dichotomy_suite,
)
from .errors import (
    InternalInvariantError,
    ParseError,
    ToolkitError,
)
from .matrices import (
    ColVec,
    Matrix,
    is_column_stochastic,
    is_row_stochastic,
    mat_mul,
    normalize,
    zeros_col,
)
from .semirings import SemiringTag, descriptor, format_element, parse_element
from .solver import (
    CertifiedSolveResult,
    ExtensionKind,
    SolveKind,
    extend_functional,
    membership_certified,
)
from .witness import check_certificate

USAGE = """\
usage: semilin <command> [options]

commands:
  solve <file>             decide b in right-im A, with certificate
  witness <file>           print a kernel-pair certificate, or report membership
  normalize <file>         column-stochastic normal form (vector optional)
  extend <file>            extend the functional given on the rows of the matrix
  classify <semiring>      left-exactness verdict for a built-in carrier
  verify boolean [--max-dim K]            exhaustive sweep of small systems
  verify <semiring> [--trials N --seed S] randomized dichotomy suite

options:
  --format text|kv         report style (default text)
  --trials N               randomized suite size (default 1000)
  --seed S                 randomized suite seed (default 42)
  --max-dim K              exhaustive sweep bound (default 3)\
"""


class _UsageError(Exception):
    pass


# --- instance format ----------------------------------------------------------


def parse_instance(text: str) -> tuple[SemiringTag, Matrix, Optional[ColVec]]:
    """Parse an instance file; errors carry the offending line number."""
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in lines if line]
    pos = 0

    def take(expected: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of input, expected {expected}")
        no, line = lines[pos]
        pos += 1
        return no, line.split()

    no, tokens = take("a 'semiring <tag>' line")
    if len(tokens) != 2 or tokens[0] != "semiring":
        raise ParseError("expected 'semiring <tag>'", no)
    try:
        tag = SemiringTag(tokens[1])
    except ValueError:
        raise ParseError(f"unknown semiring {tokens[1]!r}", no) from None

    no, tokens = take("a 'matrix <d> <n>' line")
    if len(tokens) != 3 or tokens[0] != "matrix":
        raise ParseError("expected 'matrix <d> <n>'", no)
    try:
        d, n = int(tokens[1]), int(tokens[2])
    except ValueError:
        raise ParseError("matrix dimensions must be integers", no) from None
    if d < 1 or n < 0:
        raise ParseError(f"bad matrix shape {d}x{n}", no)

    rows = []
    for _ in range(d if n > 0 else 0):
        no, tokens = take(f"a matrix row of {n} tokens")
        if len(tokens) != n:
            raise ParseError(f"expected {n} tokens, found {len(tokens)}", no)
        try:
            rows.append(tuple(parse_element(tag, t) for t in tokens))
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
    if n == 0:
        rows = [()] * d
    a = Matrix(tag, d, n, tuple(rows))

    b: Optional[ColVec] = None
    if pos < len(lines):
        no, tokens = take("a 'vector <d>' line")
        if len(tokens) != 2 or tokens[0] != "vector":
            raise ParseError("expected 'vector <d>' or end of file", no)
        try:
            length = int(tokens[1])
        except ValueError:
            raise ParseError("vector length must be an integer", no) from None
        if length != d:
            raise ParseError(f"vector length {length} does not match {d} matrix rows", no)
        no, tokens = take(f"a vector line of {length} tokens")
        if len(tokens) != length:
            raise ParseError(f"expected {length} tokens, found {len(tokens)}", no)
        try:
            b = ColVec(tag, tuple(parse_element(tag, t) for t in tokens))
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
    if pos < len(lines):
        no, _ = lines[pos]
        raise ParseError("trailing content after instance", no)
    return tag, a, b


def format_instance(tag: SemiringTag, a: Matrix, b: Optional[ColVec] = None) -> str:
    """Canonical text for an instance; parse_instance round-trips it exactly."""
    out = [f"semiring {tag.value}", f"matrix {a.rows} {a.cols}"]
    if a.cols > 0:
        out.extend(" ".join(format_element(e) for e in row) for row in a.entries)
    if b is not None:
        out.append(f"vector {b.length}")
        out.append(" ".join(format_element(e) for e in b.entries))
    return "\n".join(out) + "\n"


# --- report rendering ---------------------------------------------------------


def _vec(entries) -> str:
    return " ".join(format_element(e) for e in entries)


def _render_solve(result: CertifiedSolveResult, fmt: str) -> str:
    if fmt == "kv":
        lines = [f"kind {result.kind.value}"]
        if result.w is not None:
            lines.append(f"w {_vec(result.w.entries)}")
        if result.u is not None:
            lines.append(f"u {_vec(result.u.entries)}")
            lines.append(f"v {_vec(result.v.entries)}")
        if result.detail:
            lines.append(f"detail {result.detail}")
        return "\n".join(lines)
    if result.kind is SolveKind.SOLUTION:
        return f"SOLUTION\nw = {_vec(result.w.entries)}"
    if result.kind is SolveKind.REFUTATION:
        return f"REFUTATION\nu = {_vec(result.u.entries)}\nv = {_vec(result.v.entries)}"
    if result.kind is SolveKind.NO_SOLUTION:
        return f"NO-SOLUTION\n{result.detail}"
    return f"UNDECIDED\n{result.detail}"


_SOLVE_EXIT = {
    SolveKind.SOLUTION: 0,
    SolveKind.UNDECIDED: 0,
    SolveKind.REFUTATION: 1,
    SolveKind.NO_SOLUTION: 1,
}


def _revalidate(a: Matrix, b: ColVec, result: CertifiedSolveResult) -> None:
    # every printed answer is re-checked right before emission
    if result.kind is SolveKind.SOLUTION and mat_mul(a, result.w) != b:
        raise InternalInvariantError("solution failed re-validation")
    if result.kind is SolveKind.REFUTATION and not check_certificate(
        a, b, result.u, result.v
    ):
        raise InternalInvariantError("certificate failed re-validation")


# --- commands -----------------------------------------------------------------


def _read_instance(path: str) -> tuple[SemiringTag, Matrix, Optional[ColVec]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None
    return parse_instance(text)


def _require_vector(b: Optional[ColVec], command: str) -> ColVec:
    if b is None:
        raise _UsageError(f"'{command}' needs an instance with a vector block")
    return b


def _cmd_solve(path: str, fmt: str) -> tuple[int, str]:
    _, a, b = _read_instance(path)
    b = _require_vector(b, "solve")
    result = membership_certified(a, b)
    _revalidate(a, b, result)
    return _SOLVE_EXIT[result.kind], _render_solve(result, fmt)


def _cmd_witness(path: str, fmt: str) -> tuple[int, str]:
    _, a, b = _read_instance(path)
    b = _require_vector(b, "witness")
    result = membership_certified(a, b)
    _revalidate(a, b, result)
    if result.kind is SolveKind.SOLUTION:
        if fmt == "kv":
            return 0, f"kind membership-detected\nw {_vec(result.w.entries)}"
        return 0, f"MEMBERSHIP-DETECTED\nw = {_vec(result.w.entries)}"
    return _SOLVE_EXIT[result.kind], _render_solve(result, fmt)


def _cmd_normalize(path: str, fmt: str) -> tuple[int, str]:
    tag, a, b = _read_instance(path)
    if b is None:
        b = zeros_col(tag, a.rows)
    system = normalize(a, b)
    col_stoch = is_column_stochastic(a)
    row_stoch = is_row_stochastic(a)
    if fmt == "kv":
        lines = [
            "kind normalized",
            f"original-column-stochastic {str(col_stoch).lower()}",
            f"original-row-stochastic {str(row_stoch).lower()}",
            f"kept-columns {' '.join(map(str, system.kept_columns))}",
            f"row-scale {_vec(system.row_scale)}",
            f"col-scale {_vec(system.col_scale)}",
            f"matrix {system.a_norm.rows} {system.a_norm.cols}",
        ]
        lines.extend(f"row {_vec(row)}" for row in system.a_norm.entries)
        lines.append(f"vector {_vec(system.b_norm.entries)}")
        return 0, "\n".join(lines)
    lines = [
        "NORMALIZED",
        f"original column-stochastic: {str(col_stoch).lower()}",
        f"original row-stochastic: {str(row_stoch).lower()}",
        f"kept columns = {' '.join(map(str, system.kept_columns))}",
        f"row scale = {_vec(system.row_scale)}",
        f"col scale = {_vec(system.col_scale)}",
        format_instance(tag, system.a_norm, system.b_norm).rstrip("\n"),
    ]
    return 0, "\n".join(lines)


def _cmd_extend(path: str, fmt: str) -> tuple[int, str]:
    _, g, values = _read_instance(path)
    values = _require_vector(values, "extend")
    result = extend_functional(g, values)
    if result.kind is ExtensionKind.EXTENDED and mat_mul(g, result.alpha) != values:
        raise InternalInvariantError("extension coefficients failed re-validation")
    if result.kind is ExtensionKind.ILL_POSED and not check_certificate(
        g, values, result.u, result.v
    ):
        raise InternalInvariantError("ill-posedness certificate failed re-validation")
    if fmt == "kv":
        lines = [f"kind {result.kind.value}"]
        if result.alpha is not None:
            lines.append(f"alpha {_vec(result.alpha.entries)}")
        if result.u is not None:
            lines.append(f"u {_vec(result.u.entries)}")
            lines.append(f"v {_vec(result.v.entries)}")
        if result.detail:
            lines.append(f"detail {result.detail}")
        text = "\n".join(lines)
    elif result.kind is ExtensionKind.EXTENDED:
        text = f"EXTENDED\nalpha = {_vec(result.alpha.entries)}"
    elif result.kind is ExtensionKind.ILL_POSED:
        text = f"ILL-POSED\nu = {_vec(result.u.entries)}\nv = {_vec(result.v.entries)}"
    else:
        text = f"{result.kind.value.upper().replace('_', '-')}\n{result.detail}"
    code = 0 if result.kind in (ExtensionKind.EXTENDED, ExtensionKind.INCONCLUSIVE) else 1
    return code, text


def _cmd_classify(tag_name: str, fmt: str) -> tuple[int, str]:
    try:
        tag = SemiringTag(tag_name)
    except ValueError:
        raise _UsageError(f"unknown semiring {tag_name!r}") from None
    verdict = classify(descriptor(tag))
    if fmt == "kv":
        lines = [
            f"verdict {'left-exact' if verdict.left_exact else 'not-left-exact'}",
            f"reason {verdict.reason.value}",
        ]
        if verdict.witness is not None:
            a, b = verdict.witness
            lines.extend(f"witness-row {_vec(row)}" for row in a.entries)
            lines.append(f"witness-vector {_vec(b.entries)}")
        return 0, "\n".join(lines)
    reason_text = {
        "division-ring": "division ring",
        "idempotent": "idempotent: 1+1=1",
        "no-absorbing-e": "no e with 1+1+e=1",
    }[verdict.reason.value]
    if verdict.left_exact:
        return 0, f"LEFT EXACT ({reason_text})"
    a, b = verdict.witness
    lines = [
        f"NOT LEFT EXACT ({reason_text})",
        "witness " + format_instance(tag, a, b).rstrip("\n").replace("\n", " / "),
    ]
    return 0, "\n".join(lines)


def _render_exhaustive(report: ExhaustiveReport, fmt: str) -> str:
    if fmt == "kv":
        lines = [
            "mode exhaustive",
            "tag boolean",
            f"max-dim {report.d_max}",
            f"total-systems {report.total_systems}",
            f"violations {report.total_violations}",
        ]
        lines.extend(
            f"shape {s.d}x{s.n} systems {s.systems} members {s.members} "
            f"violations {len(s.violations)}"
            for s in report.shapes
        )
        return "\n".join(lines)
    lines = [f"VERIFY boolean exhaustive (d, n <= {report.d_max})"]
    lines.extend(
        f"shape {s.d}x{s.n}: {s.systems} systems, {s.members} solvable, "
        f"{len(s.violations)} violations"
        for s in report.shapes
    )
    lines.append(f"total: {report.total_systems} systems, {report.total_violations} violations")
    for s in report.shapes:
        lines.extend(f"VIOLATION {v}" for v in s.violations)
    return "\n".join(lines)


def _render_dichotomy(report: DichotomyReport, fmt: str) -> str:
    if fmt == "kv":
        lines = [
            "mode randomized",
            f"tag {report.tag.value}",
            f"trials {report.trials}",
            f"seed {report.seed}",
            f"solutions {report.solutions}",
            f"refutations {report.refutations}",
            f"failures {len(report.failures)}",
        ]
        lines.extend(f"failure {f}" for f in report.failures)
        return "\n".join(lines)
    lines = [
        f"VERIFY {report.tag.value} randomized (trials {report.trials}, seed {report.seed})",
        f"solutions: {report.solutions}",
        f"refutations: {report.refutations}",
        f"failures: {len(report.failures)}",
    ]
    lines.extend(f"FAILURE {f}" for f in report.failures)
    return "\n".join(lines)


def _cmd_verify(tag_name: str, opts: dict, fmt: str) -> tuple[int, str]:
    try:
        tag = SemiringTag(tag_name)
    except ValueError:
        raise _UsageError(f"unknown semiring {tag_name!r}") from None
    if tag is SemiringTag.BOOLEAN and "trials" not in opts:
        max_dim = opts.get("max-dim", 3)
        report = boolean_exhaustive_check(max_dim, max_dim)
        return (3 if report.total_violations else 0), _render_exhaustive(report, fmt)
    if "max-dim" in opts:
        raise _UsageError("--max-dim applies to the boolean exhaustive sweep only")
    trials = opts.get("trials", 1000)
    seed = opts.get("seed", 42)
    report = randomized_dichotomy_suite(tag, trials, seed)
    return (3 if report.failures else 0), _render_dichotomy(report, fmt)


# --- dispatch -----------------------------------------------------------------

_INT_FLAGS = {"--seed": "seed", "--trials": "trials", "--max-dim": "max-dim"}


def _parse_argv(argv: list[str]) -> tuple[str, list[str], str, dict]:
    if not argv:
        raise _UsageError("missing command")
    command, rest = argv[0], argv[1:]
    fmt = "text"
    opts: dict = {}
    positional: list[str] = []
    i = 0
    while i < len(rest):
        arg = rest[i]
        if arg == "--format":
            if i + 1 >= len(rest) or rest[i + 1] not in ("text", "kv"):
                raise _UsageError("--format needs 'text' or 'kv'")
            fmt = rest[i + 1]
            i += 2
        elif arg in _INT_FLAGS:
            if i + 1 >= len(rest):
                raise _UsageError(f"{arg} needs an integer value")
            try:
                opts[_INT_FLAGS[arg]] = int(rest[i + 1])
            except ValueError:
                raise _UsageError(f"{arg} needs an integer value") from None
            i += 2
        elif arg.startswith("-"):
            raise _UsageError(f"unknown option {arg}")
        else:
            positional.append(arg)
            i += 1
    return command, positional, fmt, opts


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Dispatch one CLI invocation; returns (exit_code, report_text)."""
    try:
        command, positional, fmt, opts = _parse_argv(list(argv))
        if command in ("solve", "witness", "normalize", "extend"):
            if len(positional) != 1:
                raise _UsageError(f"'{command}' takes exactly one instance file")
            if opts:
                raise _UsageError(f"'{command}' takes no numeric options")
            handler = {
                "solve": _cmd_solve,
                "witness": _cmd_witness,
                "normalize": _cmd_normalize,
                "extend": _cmd_extend,
            }[command]
            return handler(positional[0], fmt)
        if command == "classify":
            if len(positional) != 1 or opts:
                raise _UsageError("'classify' takes exactly one semiring name")
            return _cmd_classify(positional[0], fmt)
        if command == "verify":
            if len(positional) != 1:
                raise _UsageError("'verify' takes exactly one semiring name")
            return _cmd_verify(positional[0], opts, fmt)
        raise _UsageError(f"unknown command {command!r}")
    except _UsageError as exc:
        return 2, f"error: {exc}\n{USAGE}"
    except ParseError as exc:
        return 2, f"error: {exc}"
    except InternalInvariantError as exc:
        return 3, f"internal invariant violation: {exc}"
    except ToolkitError as exc:
        return 2, f"error: {exc}"


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, report = run_command(sys.argv[1:] if argv is None else argv)
    print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
