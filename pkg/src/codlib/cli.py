"""Command-line front end.

Exit codes: 0 success / true / design exists; 1 false / nonexistence
(certificate written); 2 usage error; 3 invalid or malformed design.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, equivalence, fileio, generator
from .errors import DesignError, InvalidDesignError, MalformedFileError, ParameterError
from .model import verify_numeric, verify_symbolic

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


def _read_design(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedFileError(str(exc), path)
    return fileio.design_from_json(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_generate(args) -> int:
    cod = generator.construct_g(args.m)
    _emit(fileio.design_to_json(cod), args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.certificate:
        m, constraints = fileio.certificate_from_json(Path(args.file).read_text())
        ok = generator.check_certificate(m, constraints)
        print("certificate valid" if ok else "certificate INVALID")
        return EXIT_OK if ok else EXIT_FALSE
    cod = _read_design(args.file)
    report = verify_symbolic(cod)
    if not report.ok:
        for where, residual in report.failures:
            print(f"residual at columns {where}: {len(residual)} monomials")
        print("not orthogonal")
        return EXIT_FALSE
    print("symbolic: ok")
    if args.numeric:
        ok = verify_numeric(cod, trials=args.trials, seed=args.seed, tol=args.tol)
        print(
            f"numeric (trials={args.trials}, seed={args.seed}, tol={args.tol}): "
            + ("ok" if ok else "FAILED")
        )
        if not ok:
            return EXIT_FALSE
    return EXIT_OK


def _cmd_canonicalize(args) -> int:
    cod = _read_design(args.file)
    canon = equivalence.canonicalize(cod)
    _emit(fileio.design_to_json(canon), args.output)
    return EXIT_OK


def _cmd_equivalent(args) -> int:
    a = _read_design(args.a)
    b = _read_design(args.b)
    if equivalence.equivalent(a, b):
        print("equivalent")
        return EXIT_OK
    print("not equivalent")
    return EXIT_FALSE


def _cmd_extend(args) -> int:
    result = generator.extend_g(args.m)
    if result.exists:
        print(
            f"extension exists; sign solutions: 2^{result.solution_count_log2}"
        )
        _emit(fileio.design_to_json(result.design), args.output)
        return EXIT_OK
    text = fileio.certificate_to_json(args.m, result.certificate)
    _emit(text, args.certificate)
    print(
        f"no extension for m={args.m}: odd-parity cycle of "
        f"{len(result.certificate.constraints)} constraints"
    )
    return EXIT_FALSE


def _cmd_bounds(args) -> int:
    rep = analysis.bounds(args.n)
    print(f"rate {rep.max_rate}")
    print(f"delay {rep.min_delay}")
    return EXIT_OK


def _cmd_scramble(args) -> int:
    cod = _read_design(args.file)
    out, ops = equivalence.scramble(cod, seed=args.seed, count=args.count)
    if not verify_symbolic(out).ok:
        raise InvalidDesignError("scramble output fails verification")
    _emit(fileio.design_to_json(out), args.output)
    if args.log:
        Path(args.log).write_text(fileio.ops_to_text(ops))
    print(f"seed {args.seed}, {len(ops)} ops applied")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    cod = _read_design(args.file)
    rep = verify_symbolic(cod)
    print(f"[{cod.p},{cod.n},{cod.k}] m={cod.m}")
    print(f"orthogonal: {'yes' if rep.ok else 'NO'}")
    sr = analysis.structural_report(cod)
    for check in sr.checks:
        status = "pass" if check.ok else "FAIL"
        print(f"{check.name}: {status}")
        for w in check.witnesses[:5]:
            print(f"  witness: {w}")
    return EXIT_OK if rep.ok and sr.ok else EXIT_FALSE


def _cmd_export(args) -> int:
    cod = _read_design(args.file)
    if args.format == "json":
        text = fileio.design_to_json(cod)
    elif args.format == "csv":
        text = fileio.design_to_csv(cod)
    else:
        text = fileio.design_to_latex(cod)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codlib",
        description="Construct, verify, canonicalize and extend complex orthogonal designs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build the standard design for a given m")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="check orthogonality, or validate a certificate")
    p.add_argument("file")
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--certificate", action="store_true",
                   help="treat FILE as an inconsistency certificate")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("canonicalize", help="compute the unique standard form")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_canonicalize)

    p = sub.add_parser("equivalent", help="compare two designs up to equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_equivalent)

    p = sub.add_parser("extend", help="try to append the 2m-th column")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--certificate", help="where to write the certificate on failure")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("bounds", help="rate and delay bounds for n antennas")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("scramble", help="apply seeded random equivalence operations")
    p.add_argument("file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--log", help="write the op log here")
    p.set_defaults(func=_cmd_scramble)

    p = sub.add_parser("analyze", help="structural report")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("export", help="re-serialize a design")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (MalformedFileError, InvalidDesignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DesignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
