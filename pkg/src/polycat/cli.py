"""Command-line front end: ``polycat <subcommand> ...``.

Exit codes: 0 success, 1 input error, 2 unsupported domain, 3 internal
budget exceeded or representation mismatch.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from polycat.axioms import axiom_suite
from polycat.bench import BenchConfig, RepresentationMismatchError, run_bench
from polycat.domains import StructureKind, domain_from_descriptor
from polycat.errors import (
    BudgetExceededError,
    ParseError,
    ProblemFormatError,
    UnsupportedDomainError,
    UnsupportedStructureError,
)
from polycat.groebner import (
    DEFAULT_STEP_BUDGET,
    GroebnerStats,
    groebner_basis,
    normal_form,
    reduce_basis,
    require_groebner_domain,
    s_polynomial,
    set_to_external,
)
from polycat.textio import GroebnerReport, read_problem_file, write_report


class InputError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbose", "-v", action="store_true")
    return p


def _problem_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("file", nargs="?", help="problem file (same as --input)")
    p.add_argument("--input", dest="input_path", metavar="PATH")
    p.add_argument("--rep", choices=["sorted_pairs", "keyed_table"], default="sorted_pairs")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="polycat", description="Polynomial rings and Gröbner bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("groebner", parents=[common], help="Gröbner basis of a problem file")
    _problem_args(g)
    g.add_argument("--reduced", action="store_true", help="also compute the reduced basis")
    g.add_argument("--budget", type=int, default=DEFAULT_STEP_BUDGET, help="max reduction steps")
    g.add_argument("--no-timings", action="store_true", help="report elapsed_ms as 0")

    nf = sub.add_parser("nf", parents=[common], help="normal form modulo the file's set")
    _problem_args(nf)
    nf.add_argument("--poly", required=True)

    sp = sub.add_parser("spol", parents=[common], help="S-polynomial of two set elements")
    _problem_args(sp)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)

    ar = sub.add_parser("arith", parents=[common], help="sum or product of two set elements")
    _problem_args(ar)
    ar.add_argument("--op", choices=["add", "mul"], required=True)
    ar.add_argument("--i", type=int, required=True)
    ar.add_argument("--j", type=int, required=True)

    b = sub.add_parser("bench", parents=[common], help="time sum/product per representation")
    b.add_argument("--format", choices=["text", "csv", "json"], default="text")
    b.add_argument("--domains", default="z,zmod:7,mat:2")
    b.add_argument("--sizes", default=None, help="comma-separated term counts")
    b.add_argument("--ops", default="sum,product")
    b.add_argument("--reps", default="sorted_pairs,keyed_table")
    b.add_argument("--trials", type=int, default=3)
    b.add_argument("--csv", dest="csv_path", metavar="PATH", help="also write the table as CSV")
    b.add_argument("--no-timings", action="store_true")

    ax = sub.add_parser("axioms", parents=[common], help="sample structure axioms on a domain")
    ax.add_argument("--format", choices=["text", "json"], default="text")
    ax.add_argument("--domain", required=True)
    ax.add_argument("--kind", required=True, help="e.g. field, commutative-ring, group")
    ax.add_argument("--samples", type=int, default=500)
    ax.set_defaults(seed=42)
    return parser


def _load(args):
    path = args.input_path or args.file
    if not path:
        raise InputError("no problem file given (positional FILE or --input)")
    try:
        problem = read_problem_file(path, args.rep)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return problem, problem.ring(args.rep)


def _pick(polys, k: int, flag: str):
    if not 1 <= k <= len(polys):
        raise InputError(f"{flag} {k} out of range 1..{len(polys)}")
    return polys[k - 1]


def _emit_poly(args, ring, p, **extra) -> None:
    text = ring.render(p)
    if args.format == "json":
        print(json.dumps({**extra, "result": text}, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_groebner(args) -> int:
    problem, ring = _load(args)
    if not problem.polynomials:
        raise InputError("problem file contains no polynomials")
    require_groebner_domain(ring)
    stats = GroebnerStats(step_budget=args.budget)
    t0 = time.perf_counter()
    basis = groebner_basis(ring, problem.polynomials, stats)
    reduced = reduce_basis(ring, basis, stats) if args.reduced else None
    elapsed = 0.0 if args.no_timings else round((time.perf_counter() - t0) * 1000, 3)
    report = GroebnerReport(
        vars=list(problem.base.names),
        domain=problem.domain.descriptor,
        input=set_to_external(ring, problem.polynomials),
        basis=set_to_external(ring, basis),
        reduced_basis=set_to_external(ring, reduced) if reduced is not None else None,
        spoly_count=stats.spoly_count,
        reduction_steps=stats.reduction_steps,
        elapsed_ms=elapsed,
    )
    print(write_report(report, args.format))
    return 0


def cmd_nf(args) -> int:
    problem, ring = _load(args)
    require_groebner_domain(ring)
    try:
        p = ring.parse(args.poly)
    except ParseError as exc:
        raise InputError(f"--poly: {exc}") from exc
    F = [f for f in problem.polynomials if f]
    _emit_poly(args, ring, normal_form(ring, F, p), input=ring.render(p))
    return 0


def cmd_spol(args) -> int:
    problem, ring = _load(args)
    require_groebner_domain(ring)
    p1 = _pick(problem.polynomials, args.i, "--i")
    p2 = _pick(problem.polynomials, args.j, "--j")
    if not p1 or not p2:
        raise InputError("S-polynomial of a null polynomial")
    _emit_poly(args, ring, s_polynomial(ring, p1, p2))
    return 0


def cmd_arith(args) -> int:
    problem, ring = _load(args)
    p1 = _pick(problem.polynomials, args.i, "--i")
    p2 = _pick(problem.polynomials, args.j, "--j")
    out = ring.add(p1, p2) if args.op == "add" else ring.mul(p1, p2)
    _emit_poly(args, ring, out, op=args.op)
    return 0


def _split(text: str) -> tuple[str, ...]:
    return tuple(t.strip() for t in text.split(",") if t.strip())


def cmd_bench(args) -> int:
    try:
        config = BenchConfig(
            domains=_split(args.domains),
            sizes=tuple(int(s) for s in _split(args.sizes)) if args.sizes else None,
            operations=_split(args.ops),
            representations=_split(args.reps),
            trials=args.trials,
            seed=args.seed,
        )
        for d in config.domains:
            domain_from_descriptor(d)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = run_bench(config, timings=not args.no_timings)
    if args.csv_path:
        with open(args.csv_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(result.to_csv())
    if args.format == "csv":
        sys.stdout.write(result.to_csv())
    elif args.format == "json":
        print(json.dumps(result.to_dict(), indent=2))
    else:
        print(result.to_text())
    return 0


def cmd_axioms(args) -> int:
    try:
        domain = domain_from_descriptor(args.domain)
        kind = StructureKind.parse(args.kind)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.samples < 1:
        raise InputError("--samples must be >= 1")
    report = axiom_suite(domain, kind, args.samples, args.seed)
    if args.format == "json":
        data = {
            "domain": report.domain,
            "kind": report.kind.value,
            "samples": report.sample_count,
            "seed": report.seed,
            "passed": report.passed,
            "axioms": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "counterexample": None
                    if r.counterexample is None
                    else [domain.format(x) for x in r.counterexample],
                }
                for r in report.results
            ],
        }
        print(json.dumps(data, indent=2))
    else:
        print(report.format(domain))
    return 0


COMMANDS = {
    "groebner": cmd_groebner,
    "nf": cmd_nf,
    "spol": cmd_spol,
    "arith": cmd_arith,
    "bench": cmd_bench,
    "axioms": cmd_axioms,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except (InputError, ProblemFormatError, ParseError) as exc:
        print(f"polycat: error: {exc}", file=sys.stderr)
        return 1
    except (UnsupportedDomainError, UnsupportedStructureError) as exc:
        print(f"polycat: error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, RepresentationMismatchError) as exc:
        print(f"polycat: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
