"""Command-line entry point: ``freecum <verb> ...``.

Examples::

    freecum nc kreweras "{(1,2,7),(3),(4,6),(5),(8)}"
    freecum cumulants from-moments dist.json --out cum.json
    freecum moments from-cumulants cum.json
    freecum kprod dist.json --word "a b a" --breaks 2,3
    freecum verify all --max-n 5
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .cumulants import (
    InconsistencyError,
    IntervalGrouping,
    cumulant_of_products,
    cumulants_from_moments,
    k_sigma_from_cumulants,
    k_sigma_from_moments,
    moments_from_cumulants,
)
from .free import (
    SpecError,
    free_product,
    rdiag_aastar_cumulants,
    rdiag_cumulant_table,
    rdiag_product_cumulants,
    verify_power_rdiag,
)
from .oracle import oracle_kreweras
from .partitions import (
    LatticeError,
    NcPartition,
    enumerate_nc,
    format_partition,
    join,
    kreweras,
    meet,
    moebius,
    parse_partition,
)
from .verify import SUITES, run_suites
from .words import CumulantTable, MomentFunctional, TruncationError, WordError, parse_word

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_TRUNCATION = 4
EXIT_MISMATCH = 5


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _fmt_value(x: Fraction, decimal: int | None) -> str:
    if decimal is None:
        return str(x)
    q = round(x, decimal)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q.numerator * 10**decimal // q.denominator, 10**decimal)
    return f"{sign}{whole}" + (f".{frac:0{decimal}d}" if decimal else "")


def _emit(args, text_lines: list[str], payload) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2) + "\n"
    else:
        out = "".join(line + "\n" for line in text_lines)
    if getattr(args, "out", None):
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _emit_value(args, value: Fraction) -> None:
    s = _fmt_value(value, args.decimal)
    _emit(args, [s], {"value": s})


def _emit_table(args, table) -> None:
    text = io.dumps_table(table)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _partition(text: str, n: int | None = None) -> NcPartition:
    return parse_partition(text, n)


def _load_table(path: str):
    try:
        return io.read_table(path)
    except FileNotFoundError:
        raise CliError(f"no such file: {path}") from None


def _cumulants_of(table) -> CumulantTable:
    return table if isinstance(table, CumulantTable) else cumulants_from_moments(table)


def _moments_of(table) -> MomentFunctional:
    return table if isinstance(table, MomentFunctional) else moments_from_cumulants(table)


def _load_spec(path: str):
    try:
        return io.read_spec(path)
    except FileNotFoundError:
        raise CliError(f"no such file: {path}") from None


# -- verbs --------------------------------------------------------------------


def cmd_nc(args) -> int:
    op = args.op
    if op == "enumerate":
        parts = enumerate_nc(int(args.items[0]))
        _emit(args, [format_partition(p) for p in parts], [format_partition(p) for p in parts])
        return 0
    ps = [_partition(t) for t in args.items]
    if op in ("join", "meet", "moebius") and len(ps) != 2:
        raise CliError(f"nc {op} takes two partitions", EXIT_USAGE)
    if op in ("kreweras", "complement-check") and len(ps) != 1:
        raise CliError(f"nc {op} takes one partition", EXIT_USAGE)
    if len(ps) == 2 and ps[0].n != ps[1].n:
        # "{(1,2)}" and "{(1),(2),(3)}" are read with their own sizes; pad to the larger
        n = max(p.n for p in ps)
        ps = [_partition(t, n) for t in args.items]
    if op == "join":
        r = format_partition(join(*ps))
    elif op == "meet":
        r = format_partition(meet(*ps))
    elif op == "kreweras":
        r = format_partition(kreweras(ps[0]))
    elif op == "moebius":
        r = str(moebius(*ps))
    else:
        k = kreweras(ps[0])
        o = oracle_kreweras(ps[0])
        r = format_partition(k)
        if k != o:
            raise CliError(f"complement mismatch: {r} vs maximality scan {format_partition(o)}", EXIT_MISMATCH)
    _emit(args, [r], {"result": r})
    return 0


def cmd_cumulants(args) -> int:
    if args.op == "from-moments":
        table = _load_table(args.file)
        if not isinstance(table, MomentFunctional):
            raise CliError(f"{args.file} holds cumulants, not moments")
        _emit_table(args, cumulants_from_moments(table))
    else:
        spec = _load_spec(args.file)
        _emit_table(args, rdiag_cumulant_table(spec, args.var))
    return 0


def cmd_moments(args) -> int:
    table = _load_table(args.file)
    if not isinstance(table, CumulantTable):
        raise CliError(f"{args.file} holds moments, not cumulants")
    _emit_table(args, moments_from_cumulants(table))
    return 0


def _word(args, table):
    return parse_word(args.word, table.alphabet)


def cmd_kprod(args) -> int:
    table = _load_table(args.file)
    w = _word(args, table)
    breaks = [int(x) for x in args.breaks.split(",")] if args.breaks else [len(w)]
    g = IntervalGrouping(len(w), breaks)
    tau = _partition(args.tau, g.m) if args.tau else NcPartition.one(g.m)
    _emit_value(args, cumulant_of_products(tau, g, w, _cumulants_of(table)))
    return 0


def cmd_ksigma(args) -> int:
    table = _load_table(args.file)
    w = _word(args, table)
    sigma = _partition(args.sigma, len(w))
    k = _cumulants_of(table)
    v = k_sigma_from_cumulants(sigma, w, k)
    if isinstance(table, MomentFunctional):
        other = k_sigma_from_moments(sigma, w, table)
        if other != v:
            raise CliError(f"moment form {other} != cumulant form {v}", EXIT_MISMATCH)
    _emit_value(args, v)
    return 0


def cmd_freeprod(args) -> int:
    marginals = [_moments_of(_load_table(f)) for f in args.files]
    _emit_table(args, free_product(marginals, args.order).materialize())
    return 0


def cmd_rdiag(args) -> int:
    if args.op == "aastar":
        _emit_value(args, rdiag_aastar_cumulants(_load_spec(args.files[0]), args.n))
    elif args.op == "product":
        if len(args.files) != 2:
            raise CliError("rdiag product takes two spec files", EXIT_USAGE)
        _emit_value(args, rdiag_product_cumulants(_load_spec(args.files[0]), _load_spec(args.files[1]), args.n))
    else:
        spec = _load_spec(args.files[0])
        ok = verify_power_rdiag(spec, args.r, args.order if args.order_given else spec.order)
        _emit(args, [f"power {args.r}: {'PASS' if ok else 'FAIL'}"], {"r": args.r, "passed": ok})
        return 0 if ok else EXIT_MISMATCH
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise CliError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}", EXIT_USAGE)
    results = run_suites(names, args.max_n, args.seed)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  [{s}] {c.name}" + (f" ({c.detail})" if c.detail else "")
             for s, c in results]
    failed = sum(not c.passed for _, c in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    payload = {
        "seed": args.seed,
        "max_n": args.max_n,
        "checks": [{"suite": s, "name": c.name, "passed": c.passed} for s, c in results],
    }
    _emit(args, lines, payload)
    return 0 if not failed else EXIT_MISMATCH


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=8, help="truncation order (default 8)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--out", help="write the result to this file")
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--decimal", type=int, metavar="K", help="show values rounded to K decimals")

    p = argparse.ArgumentParser(prog="freecum", description="Exact free-cumulant combinatorics.")
    sub = p.add_subparsers(dest="verb", required=True)

    q = sub.add_parser("nc", parents=[common], help="non-crossing partition lattice")
    q.add_argument("op", choices=["enumerate", "join", "meet", "kreweras", "moebius", "complement-check"])
    q.add_argument("items", nargs="+", help="n for enumerate, otherwise partitions like {(1,3),(2)}")
    q.set_defaults(func=cmd_nc)

    q = sub.add_parser("cumulants", parents=[common], help="free cumulant tables")
    q.add_argument("op", choices=["from-moments", "from-spec"])
    q.add_argument("file")
    q.add_argument("--var", default="a", help="variable name for from-spec")
    q.set_defaults(func=cmd_cumulants)

    q = sub.add_parser("moments", parents=[common], help="moments from cumulants")
    q.add_argument("op", choices=["from-cumulants"])
    q.add_argument("file")
    q.set_defaults(func=cmd_moments)

    q = sub.add_parser("kprod", parents=[common], help="cumulant with products as arguments")
    q.add_argument("file", help="distribution (moments or cumulants)")
    q.add_argument("--word", required=True)
    q.add_argument("--breaks", help="comma-separated breakpoints i_1 < ... < i_m = n")
    q.add_argument("--tau", help="partition of the products (default: one block)")
    q.set_defaults(func=cmd_kprod)

    q = sub.add_parser("ksigma", parents=[common], help="generalized cumulant k^sigma")
    q.add_argument("file")
    q.add_argument("--word", required=True)
    q.add_argument("--sigma", required=True)
    q.set_defaults(func=cmd_ksigma)

    q = sub.add_parser("freeprod", parents=[common], help="free product of distributions")
    q.add_argument("files", nargs="+")
    q.set_defaults(func=cmd_freeprod)

    q = sub.add_parser("rdiag", parents=[common], help="R-diagonal closed forms")
    q.add_argument("op", choices=["aastar", "product", "power"])
    q.add_argument("files", nargs="+", help="spec file(s)")
    q.add_argument("--n", type=int, default=1)
    q.add_argument("--r", type=int, default=2)
    q.set_defaults(func=cmd_rdiag)

    q = sub.add_parser("verify", parents=[common], help="run verification suites")
    q.add_argument("suite", help="all or one of: " + ", ".join(SUITES))
    q.add_argument("--max-n", type=int, default=5)
    q.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.order_given = "--order" in argv or any(a.startswith("--order=") for a in argv)
    if args.verb == "freeprod" and not args.order_given:
        args.order = None
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except io.FormatError as e:
        print(f"error: malformed file: {e}", file=sys.stderr)
        return EXIT_INPUT
    except TruncationError as e:
        print(f"error: truncation: {e}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (SpecError, WordError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except LatticeError as e:
        print(f"error: bad partition: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as e:
        print(f"error: internal mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
