"""Command-line entry point.

Exit codes: 0 success or passed verification (a computed ``false`` is a
success), 1 failed verification, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from importlib import resources

from . import __version__, exact
from .errors import ConsistencyError, DomainError, StructuralError
from .fibration import (
    base_point,
    build_fibration,
    fiber_at,
    parse_point,
    sample_vectors,
    segments_tsv,
    verify_fibration,
)
from .hopf import sample_hopf_fibration
from .hrcore import exists_fibration, render_table, rho
from .hrmat import HRFamily, build_hr_family, truncate_family, verify_hr_family
from .series import DEFAULT_SEARCH_LIMIT, base_series, complex_condition_holds, min_complex_ambient, series_pow

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def fixture_hash() -> str:
    data = resources.files("affine_hopf").joinpath("data/paper_tables.json").read_bytes()
    return hashlib.sha256(data).hexdigest()


class _Out:
    def __init__(self, stdout, stderr, quiet):
        self.stdout, self.stderr, self.quiet = stdout, stderr, quiet

    def data(self, text: str) -> None:
        self.stdout.write(text if text.endswith("\n") else text + "\n")

    def json(self, obj) -> None:
        self.data(json.dumps(obj))

    def report(self, rep, fmt: str) -> int:
        if not self.quiet:
            if fmt == "json":
                self.json(rep.to_dict())
            else:
                status = "PASS" if rep.passed else "FAIL"
                line = f"{status} checked={rep.checked}"
                if rep.relation:
                    line += f" relation={rep.relation!r} witness={json.dumps(rep.witness)}"
                self.data(line)
        return EXIT_OK if rep.passed else EXIT_FAIL


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_rho(args, out):
    value = rho(args.N)
    out.json({"N": args.N, "rho": value}) if args.fmt == "json" else out.data(str(value))
    return EXIT_OK


def cmd_exists(args, out):
    value = exists_fibration(args.p, args.n)
    if args.fmt == "json":
        out.json({"p": args.p, "n": args.n, "exists": value})
    else:
        out.data(_bool(value))
    return EXIT_OK


def cmd_table(args, out):
    out.data(render_table(args.n_from, args.n_to, args.fmt))
    return EXIT_OK


def cmd_hr_family(args, out):
    fam = build_hr_family(args.N)
    if args.r is not None:
        fam = truncate_family(fam, args.r)
    if args.fmt == "json":
        out.json(fam.to_dict())
    else:
        blocks = [f"N={fam.N} r={fam.r}"]
        for k, m in enumerate(fam.matrices):
            blocks.append(f"A{k + 1}:")
            blocks.extend(" ".join(f"{x:>2}" for x in row) for row in m)
        out.data("\n".join(blocks))
    return EXIT_OK


def cmd_hr_verify(args, out):
    try:
        if args.input == "-":
            doc = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                doc = json.load(fh)
    except OSError as exc:
        out.stderr.write(f"error: cannot read {args.input}: {exc}\n")
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        raise StructuralError(f"input is not valid JSON: {exc}") from exc
    return out.report(verify_hr_family(HRFamily.from_dict(doc)), args.fmt)


def cmd_fibration_build(args, out):
    fib = build_fibration(args.p, args.n)
    if args.fmt == "tsv":
        import random

        rng = random.Random(args.seed)
        bs = [sample_vectors(rng, fib.N) for _ in range(args.samples)]
        out.data(segments_tsv([fiber_at(fib, b) for b in bs], labels=[",".join(map(str, b)) for b in bs]))
    elif args.fmt == "json":
        out.json(fib.to_dict())
    else:
        lines = [f"p={fib.p} n={fib.n} N={fib.N} r={fib.r}"]
        for k, m in enumerate(fib.dual.b_matrices):
            lines.append(f"B{k + 1}:")
            lines.extend(" ".join(f"{x:>2}" for x in row) for row in m)
        out.data("\n".join(lines))
    return EXIT_OK


def cmd_fibration_verify(args, out):
    fib = build_fibration(args.p, args.n)
    return out.report(verify_fibration(fib, args.samples, args.seed), args.fmt)


def cmd_fibration_project(args, out):
    fib = build_fibration(args.p, args.n)
    try:
        point = parse_point(args.point)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse point {args.point!r}: {exc}") from exc
    b = base_point(fib, point)
    if args.fmt == "json":
        out.json({"p": fib.p, "n": fib.n, "point": [exact.fmt(v) for v in point], "b": [exact.fmt(v) for v in b]})
    else:
        out.data(" ".join(exact.fmt(v) for v in b))
    return EXIT_OK


def cmd_hopf_sample(args, out):
    rep, fibers = sample_hopf_fibration(args.algebra, args.m, args.chart, args.samples, args.seed, return_fibers=True)
    if args.emit_segments:
        with open(args.emit_segments, "w") as fh:
            fh.write(segments_tsv(fibers))
    return out.report(rep, args.fmt)


def cmd_complex_min(args, out):
    value = min_complex_ambient(args.P, args.limit)
    if args.fmt == "json":
        out.json({"p": args.P, "limit": args.limit, "min_n": value})
    else:
        out.data("not-found" if value is None else str(value))
    return EXIT_OK


def cmd_complex_check(args, out):
    value = complex_condition_holds(args.P, args.N)
    if args.fmt == "json":
        out.json({"p": args.P, "n": args.N, "holds": value})
    else:
        out.data(_bool(value))
    return EXIT_OK


def cmd_series_coeffs(args, out):
    s = series_pow(base_series(args.order), args.power)
    coeffs = [exact.fmt(c) for c in s.coeffs]
    if args.fmt == "json":
        out.json({"order": args.order, "power": args.power, "coeffs": coeffs})
    else:
        out.data(" ".join(coeffs))
    return EXIT_OK


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class _VersionAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        sys.stdout.write(f"affine-hopf {__version__} (tables sha256:{fixture_hash()})\n")
        parser.exit()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affine-hopf", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action=_VersionAction, nargs=0, help="show version and table fixture hash")
    parser.add_argument("--format", dest="global_format", choices=("text", "tsv", "json"), default="text")
    parser.add_argument("--seed", dest="global_seed", type=_nonneg, default=0)
    parser.add_argument("--quiet", action="store_true", help="suppress verification reports")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats=("text", "json"), **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=func)
        p.add_argument("--format", dest="format", choices=formats, default=None)
        return p

    def seeded(p):
        p.add_argument("--seed", dest="seed", type=_nonneg, default=None)
        return p

    p = add("rho", cmd_rho, help="Hurwitz-Radon number")
    p.add_argument("N", type=int)

    p = add("exists", cmd_exists, help="existence criterion for (p, n)")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)

    p = add("table", cmd_table, formats=("text", "tsv", "json"), help="admissibility table")
    p.add_argument("--from", dest="n_from", type=int, default=3)
    p.add_argument("--to", dest="n_to", type=int, default=80)

    p = add("hr-family", cmd_hr_family, help="Hurwitz-Radon family on R^N")
    p.add_argument("N", type=int)
    p.add_argument("--r", type=int, default=None)

    p = add("hr-verify", cmd_hr_verify, help="verify a family document")
    p.add_argument("--input", default="-", help="JSON file, '-' for stdin")

    fib = sub.add_parser("fibration", help="affine Hopf fibrations")
    fsub = fib.add_subparsers(dest="fib_command", required=True)

    def fadd(name, func, formats=("text", "json")):
        p = fsub.add_parser(name)
        p.set_defaults(func=func)
        p.add_argument("--format", dest="format", choices=formats, default=None)
        p.add_argument("p", type=int)
        p.add_argument("n", type=int)
        return p

    p = seeded(fadd("build", cmd_fibration_build, formats=("text", "tsv", "json")))
    p.add_argument("--samples", type=_positive, default=10, help="fibers in the tsv dump")
    p = seeded(fadd("verify", cmd_fibration_verify))
    p.add_argument("--samples", type=_positive, default=1000)
    p = fadd("project", cmd_fibration_project)
    p.add_argument("--point", required=True, help="comma-separated x_1..x_p, y_1..y_N")

    hopf = sub.add_parser("hopf", help="classical Hopf fibrations")
    hsub = hopf.add_subparsers(dest="hopf_command", required=True)
    p = seeded(hsub.add_parser("sample"))
    p.set_defaults(func=cmd_hopf_sample)
    p.add_argument("--format", dest="format", choices=("text", "json"), default=None)
    p.add_argument("--algebra", choices=("complex", "quaternion"), required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--samples", type=_positive, default=50)
    p.add_argument("--chart", type=int, default=-1, help="chart coordinate index (default: last)")
    p.add_argument("--emit-segments", default=None, metavar="FILE")

    p = add("complex-min", cmd_complex_min, help="smallest n passing the complex test")
    p.add_argument("P", type=int)
    p.add_argument("--limit", type=_positive, default=DEFAULT_SEARCH_LIMIT)

    p = add("complex-check", cmd_complex_check, help="complex integrality test for (p, n)")
    p.add_argument("P", type=int)
    p.add_argument("N", type=int)

    p = add("series-coeffs", cmd_series_coeffs, help="coefficients of (t/ln(1+t))^power")
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--power", type=_nonneg, required=True)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.fmt = getattr(args, "format", None) or args.global_format
    if hasattr(args, "seed"):
        args.seed = args.global_seed if args.seed is None else args.seed
    out = _Out(stdout, stderr, args.quiet)
    try:
        return args.func(args, out)
    except (DomainError, StructuralError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        stderr.write(f"internal consistency failure: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
