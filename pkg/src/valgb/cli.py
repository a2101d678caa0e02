"""Command-line front end.

Subcommands: gb, nf, initial, tropical-member, bounds, compare-cardinality.
Exit status 0 on success, 1 on input errors, 2 when an internal budget was
exhausted (step budget, coefficient breaker, retry budget, genericity).
"""

from __future__ import annotations

import argparse
import sys

from .bounds import dube_degree_bound, effective_valuation_bound
from .cardinality import GenericityError, cardinality_report, default_orders
from .division import CoefficientBlowup, StepBudgetExceeded, normal_form
from .fields import QpField
from .groebner import buchberger, is_basis_of, reduce_basis
from .lifting import gb_mod_pm
from .parsing import ParseError, ProblemFile, parse_problem, parse_polynomial
from .polynomials import poly_to_str
from .tropical import contains_monomial, initial_ideal
from .weights import initial_form

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2


def _load_problem(path: str) -> ProblemFile:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_problem(handle.read())


def _require_homogeneous(problem: ProblemFile):
    for i, g in enumerate(problem.generators, start=1):
        if not g.is_homogeneous():
            raise ParseError(f"generator {i} is not homogeneous", 1, 1)


def _print_poly(poly, problem: ProblemFile):
    print(poly_to_str(poly, problem.names))


def _cmd_gb(args) -> int:
    problem = _load_problem(args.file)
    _require_homogeneous(problem)
    order = problem.weighted_order()
    limits = dict(max_steps=args.max_steps, max_coeff_bits=args.max_coeff_bits)
    if args.modpm is not None:
        if not isinstance(problem.field, QpField):
            raise ParseError("--modpm requires a Qp(p) field", 1, 1)
        stats: dict = {}
        basis = gb_mod_pm(
            problem.generators,
            order,
            m=args.modpm,
            retry_budget=args.retry_budget,
            use_criteria=not args.no_criteria,
            max_steps=args.max_steps,
            stats=stats,
            warn=lambda msg: print(f"warning: {msg}", file=sys.stderr),
        )
        if stats.get("fallback"):
            print("note: direct rational computation used", file=sys.stderr)
    else:
        progress = None
        if args.progress:
            def progress(done, remaining):
                print(f"pairs processed: {done}, remaining: {remaining}", file=sys.stderr)
        raw = buchberger(
            problem.generators,
            order,
            use_criteria=not args.no_criteria,
            progress=progress,
            **limits,
        )
        basis = reduce_basis(raw, max_steps=args.max_steps)
    for g in basis.elements:
        _print_poly(g, problem)
    if args.verify:
        ok = is_basis_of(basis, problem.generators, max_steps=args.max_steps)
        print(f"verified: {'true' if ok else 'false'}")
        if not ok:
            return EXIT_BUDGET
    return EXIT_OK


def _cmd_nf(args) -> int:
    problem = _load_problem(args.file)
    _require_homogeneous(problem)
    if args.target is not None:
        target = parse_polynomial(args.target, problem.field, problem.names)
    elif problem.target is not None:
        target = problem.target
    else:
        raise ParseError("nf needs a target polynomial ('target:' line or --target)", 1, 1)
    order = problem.weighted_order()
    result = normal_form(
        target,
        problem.generators,
        order,
        max_steps=args.max_steps,
        max_coeff_bits=args.max_coeff_bits,
        trace=args.trace,
    )
    if args.trace and result.trace is not None:
        for step in result.trace:
            print("trace: " + step.line(problem.names))
    for i, h in enumerate(result.quotients, start=1):
        print(f"h{i} = {poly_to_str(h, problem.names)}")
    print(f"r = {poly_to_str(result.remainder, problem.names)}")
    print(f"steps = {result.step_count}")
    return EXIT_OK


def _cmd_initial(args) -> int:
    problem = _load_problem(args.file)
    if args.forms_only:
        for g in problem.generators:
            _print_poly(initial_form(g, problem.weights), problem)
        return EXIT_OK
    _require_homogeneous(problem)
    for g in initial_ideal(problem.generators, problem.weighted_order(),
                           max_steps=args.max_steps):
        _print_poly(g, problem)
    return EXIT_OK


def _cmd_tropical_member(args) -> int:
    problem = _load_problem(args.file)
    _require_homogeneous(problem)
    gens = initial_ideal(problem.generators, problem.weighted_order(),
                         max_steps=args.max_steps)
    member = not contains_monomial(gens, max_steps=args.max_steps)
    print(f"member: {'true' if member else 'false'}")
    for g in gens:
        print(f"initial: {poly_to_str(g, problem.names)}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    problem = _load_problem(args.file)
    _require_homogeneous(problem)
    degrees = [g.homogeneous_degree() for g in problem.generators if not g.is_zero()]
    if not degrees:
        raise ParseError("bounds need at least one nonzero generator", 1, 1)
    n = problem.nvars
    d = max(degrees)
    print(f"n = {n}")
    print(f"d = {d}")
    print(f"D = {dube_degree_bound(n, d)}")
    if isinstance(problem.field, QpField):
        report = effective_valuation_bound(
            problem.generators, problem.field.p, problem.weighted_order(),
            degree_cap=args.degree_cap,
        )
        print(f"C = {report.coeff_bound}")
        print(f"evaluated_degree = {report.evaluated_degree}")
        print(f"A = {report.ideal_dim}")
        print(f"valuation_bound = {report.valuation_bound}")
        print(f"truncated = {'true' if report.truncated else 'false'}")
    else:
        print("valuation_bound = n/a (needs a Qp(p) field)")
    return EXIT_OK


def _cmd_compare_cardinality(args) -> int:
    print("e,d,seed,padic_size,order,standard_size,bound")
    base = args.seed
    for k in range(args.seeds):
        report = cardinality_report(
            args.e,
            default_orders(args.e),
            seed=base + k,
            max_steps=args.max_steps,
        )
        import math

        bound = math.ceil(report.lower_bound)
        for label, size in report.standard_sizes.items():
            print(
                f"{report.e},{report.degree},{report.seed},{report.padic_size},"
                f"{label},{size},{bound}"
            )
        for entry in report.log:
            print(f"note: {entry}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valgb",
        description="Groebner bases over fields with valuations (Qp, Q, Q(t))",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="problem file")
        p.add_argument("--max-steps", type=int, default=1_000_000,
                       help="division step budget (default 1e6)")
        p.add_argument("--max-coeff-bits", type=int, default=None,
                       help="coefficient-size circuit breaker in bits")

    p_gb = sub.add_parser("gb", help="reduced Groebner basis")
    common(p_gb)
    p_gb.add_argument("--no-criteria", action="store_true",
                      help="disable the S-pair skip criteria")
    p_gb.add_argument("--modpm", type=int, default=None, metavar="M",
                      help="run through Z/p^M with verified lifting")
    p_gb.add_argument("--retry-budget", type=int, default=5,
                      help="mod-p^m retry doublings (default 5)")
    p_gb.add_argument("--verify", action="store_true",
                      help="re-check the basis property after computing")
    p_gb.add_argument("--progress", action="store_true",
                      help="report pair progress on stderr")
    p_gb.set_defaults(func=_cmd_gb)

    p_nf = sub.add_parser("nf", help="normal form with quotient certificate")
    common(p_nf)
    p_nf.add_argument("--target", default=None,
                      help="polynomial to divide (overrides the file's target)")
    p_nf.add_argument("--trace", action="store_true",
                      help="emit one trace line per division step")
    p_nf.set_defaults(func=_cmd_nf)

    p_init = sub.add_parser("initial", help="initial ideal over the residue field")
    common(p_init)
    p_init.add_argument("--forms-only", action="store_true",
                        help="print initial forms of the listed generators only")
    p_init.set_defaults(func=_cmd_initial)

    p_trop = sub.add_parser("tropical-member",
                            help="does the weight vector lie in the tropical variety?")
    common(p_trop)
    p_trop.set_defaults(func=_cmd_tropical_member)

    p_bounds = sub.add_parser("bounds", help="degree and valuation bounds")
    common(p_bounds)
    p_bounds.add_argument("--degree-cap", type=int, default=64,
                          help="cap for the bound evaluation degree (default 64)")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_card = sub.add_parser("compare-cardinality",
                            help="p-adic vs classical basis sizes (CSV)")
    common(p_card, needs_file=False)
    p_card.add_argument("--e", type=int, default=1, help="half the degree (d = 2e)")
    p_card.add_argument("--seeds", type=int, default=1, help="number of seeds")
    p_card.add_argument("--seed", type=int, default=0, help="first seed")
    p_card.set_defaults(func=_cmd_compare_cardinality)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (StepBudgetExceeded, CoefficientBlowup, GenericityError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
