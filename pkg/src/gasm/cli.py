"""``gasm`` command line.

Exit codes: 0 yes/ok, 2 no (infeasible spec, invalid matrix), 1 usage or
input error.  Specs are JSON documents with integer arrays ``u``,
``u_prime``, ``v``, ``v_prime``; matrices are text grids of ``+ - .``.
``-`` reads from stdin.  ``$GASM_WORKERS`` sets the worker count for
enumeration and sweeps (default 1, sequential).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Sequence

from .analysis import AlphaSpec, alpha_decompose, conjecture_sweep, nonzero_stats
from .construct import InfeasibleSpec, build
from .core import TRANSFORMS, BoundarySpec, DimensionMismatch, SignMatrix
from .enumeration import classical_count, count, default_workers, enumerate_asms
from .feasibility import check
from .verify import InteriorNotAlternating, infer_spec, verify

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means "no" here
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str, stdin: IO[str]) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def parse_spec(text: str, source: str = "<spec>") -> BoundarySpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise UsageError(f"{source}: top level must be an object")
    try:
        return BoundarySpec.from_dict(doc)
    except ValueError as exc:
        raise UsageError(f"{source}: {exc}") from None


def parse_matrix(text: str, source: str = "<matrix>") -> SignMatrix:
    try:
        return SignMatrix.from_text(text)
    except ValueError as exc:
        raise UsageError(f"{source}: {exc}") from None


def _parse_order(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--order must be comma-separated integers, got {raw!r}") from None


def _sign_arg(raw: str) -> int:
    if raw in ("+", "+1", "1"):
        return 1
    if raw in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError("expected +1 or -1")


def _make_parser() -> _Parser:
    p = _Parser(prog="gasm", description="Generalized alternating sign matrices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="decide feasibility of a spec")
    s.add_argument("spec")

    s = sub.add_parser("build", help="construct a matrix for a feasible spec")
    s.add_argument("spec")
    s.add_argument("--order", help="row preference order, e.g. 1,3,5,4,2")
    s.add_argument("--trace", action="store_true", help="write the construction trace (JSON) to stderr")

    s = sub.add_parser("verify", help="check a matrix against a spec")
    s.add_argument("spec")
    s.add_argument("matrix")

    s = sub.add_parser("infer", help="infer a spec under which an alternating matrix is valid")
    s.add_argument("matrix")
    s.add_argument(
        "--zero-line-sign", type=_sign_arg, default=1,
        help="first border sign for all-zero lines (default +1)",
    )

    s = sub.add_parser("enumerate", help="list all matrices for a spec")
    s.add_argument("spec")
    s.add_argument("--limit", type=int)
    s.add_argument("--count-only", action="store_true")

    s = sub.add_parser("count", help="exact number of matrices for a spec")
    s.add_argument("spec")

    s = sub.add_parser("classical-count", help="number of n x n ASMs")
    s.add_argument("n", type=int)

    s = sub.add_parser("transform", help="apply a symmetry to a spec (and matrix)")
    s.add_argument("op", choices=sorted(TRANSFORMS))
    s.add_argument("spec")
    s.add_argument("matrix", nargs="?")

    s = sub.add_parser("analyze", help="structural and extremal analyses")
    asub = s.add_subparsers(dest="analysis", required=True, parser_class=_Parser)
    a = asub.add_parser("alpha", help="check the block decomposition for alpha_{n,k}")
    a.add_argument("n", type=int)
    a.add_argument("k", type=int)
    a = asub.add_parser("extremes", help="min/max nonzeros over all matrices for a spec")
    a.add_argument("spec")
    a = asub.add_parser("sweep", help="compare f(u,u'|v,v') with f(n) over n x n specs")
    a.add_argument("n", type=int)
    a.add_argument("--samples", type=int)
    a.add_argument("--seed", type=int, default=0)
    for a in asub.choices.values():
        a.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _emit(out: IO[str], fmt: str, doc: dict) -> None:
    if fmt == "json":
        out.write(json.dumps(doc) + "\n")
    else:
        for k, val in doc.items():
            out.write(f"{k}: {val}\n")


def _analyze(args, stdin: IO[str], out: IO[str], err: IO[str]) -> int:
    if args.analysis == "alpha":
        try:
            alpha = AlphaSpec(args.n, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        total = 0
        for A in enumerate_asms(alpha.spec()):
            alpha_decompose(A, alpha)
            total += 1
        expected = alpha.expected_count()
        _emit(out, args.format, {
            "n": alpha.n, "k": alpha.k, "count": total,
            "f(k)*f(n-k)": expected, "decomposed": total, "f(n)": classical_count(alpha.n),
        })
        return EXIT_OK if total == expected else EXIT_NO
    if args.analysis == "extremes":
        spec = parse_spec(_read(args.spec, stdin), args.spec)
        try:
            st = nonzero_stats(spec)
        except InfeasibleSpec as exc:
            err.write(f"{exc}\n")
            return EXIT_NO
        _emit(out, args.format, {
            "count": st.total, "min_nonzeros": st.min_nonzeros, "max_nonzeros": st.max_nonzeros,
            "argmin": st.argmin.to_text().splitlines(), "argmax": st.argmax.to_text().splitlines(),
        })
        return EXIT_OK
    report = conjecture_sweep(args.n, args.samples, args.seed, workers=default_workers())
    doc = report.to_dict()
    if args.format == "text":
        doc = {k: doc[k] for k in ("n", "f_n", "exhaustive", "specs_checked", "feasible_specs", "max_count")}
        doc["counterexamples"] = len(report.counterexamples)
    _emit(out, args.format, doc)
    return EXIT_OK if report.holds else EXIT_NO


def _dispatch(args, stdin: IO[str], out: IO[str], err: IO[str]) -> int:
    cmd = args.command
    if cmd == "classical-count":
        if args.n < 1:
            raise UsageError("n must be >= 1")
        out.write(f"{classical_count(args.n)}\n")
        return EXIT_OK
    if cmd == "analyze":
        return _analyze(args, stdin, out, err)
    if cmd == "infer":
        A = parse_matrix(_read(args.matrix, stdin), args.matrix)
        try:
            spec = infer_spec(A, args.zero_line_sign)
        except InteriorNotAlternating as exc:
            err.write(f"{exc}\n")
            return EXIT_NO
        out.write(json.dumps(spec.to_dict()) + "\n")
        return EXIT_OK

    if cmd in ("verify", "transform") and args.spec == "-" and args.matrix == "-":
        raise UsageError("spec and matrix cannot both be read from stdin")
    spec = parse_spec(_read(args.spec, stdin), args.spec)

    if cmd == "check":
        report = check(spec)
        if report.feasible:
            out.write("feasible\n")
            return EXIT_OK
        out.write("infeasible\n")
        for v in report.violated:
            err.write(f"{v}\n")
        return EXIT_NO

    if cmd == "build":
        order = _parse_order(args.order) if args.order else None
        try:
            A, trace = build(spec, order)
        except InfeasibleSpec as exc:
            for v in exc.report.violated:
                err.write(f"{v}\n")
            return EXIT_NO
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.write(A.to_text() + "\n")
        if args.trace:
            err.write(json.dumps(trace.to_dict(), indent=2) + "\n")
        return EXIT_OK

    if cmd == "verify":
        A = parse_matrix(_read(args.matrix, stdin), args.matrix)
        violations = verify(A, spec)
        if not violations:
            out.write("valid\n")
            return EXIT_OK
        for v in violations:
            out.write(f"{v}\n")
        return EXIT_NO

    if cmd == "enumerate":
        if args.limit is not None and args.limit < 0:
            raise UsageError("--limit must be nonnegative")
        workers = default_workers()
        if args.count_only:
            if args.limit is None:
                n = count(spec, workers)
            else:
                n = sum(1 for _ in enumerate_asms(spec, args.limit, workers))
            out.write(f"{n}\n")
            return EXIT_OK
        for i, A in enumerate(enumerate_asms(spec, args.limit, workers)):
            if i:
                out.write("\n")
            out.write(A.to_text() + "\n")
        return EXIT_OK

    if cmd == "count":
        out.write(f"{count(spec, default_workers())}\n")
        return EXIT_OK

    if cmd == "transform":
        fn = TRANSFORMS[args.op]
        if args.matrix is None:
            A = SignMatrix.zeros(spec.m, spec.n)
            _, new_spec = fn(A, spec)
            out.write(json.dumps(new_spec.to_dict()) + "\n")
            return EXIT_OK
        A = parse_matrix(_read(args.matrix, stdin), args.matrix)
        new_A, new_spec = fn(A, spec)
        out.write(json.dumps(new_spec.to_dict()) + "\n\n" + new_A.to_text() + "\n")
        return EXIT_OK

    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def run(
    argv: Sequence[str] | None = None,
    stdin: IO[str] | None = None,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = _make_parser().parse_args(argv)
        return _dispatch(args, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except (DimensionMismatch, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else EXIT_ERROR
    sys.exit(code)


if __name__ == "__main__":
    main()
