"""Command-line front end: sequence stats, closed forms, exact engines, Monte
Carlo, bias tables, and the self-check battery.

Exit codes: 0 success, 1 usage or domain error, 2 statistic undefined (D=0).
Probability literals written as 'a/b' keep every computation in exact
rationals; decimal literals select double arithmetic.  HOTHAND_MODE
(rational|double) sets the default --mode of the ``exact`` command.
"""

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import checks
from .bernoulli import format_probability, parse_probability
from .exact import (
    conditional_expectation,
    distribution_to_json,
    dp_joint,
    enumerate_joint,
    prob_denominator_zero,
)
from .formulas import expected_hot_hand_k1
from .sequences import count_streak_terms, parse_sequence
from .simulate import AcceptanceShortfallError, SimulationConfig, result_to_json, simulate

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDEFINED = 2


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _fmt(value) -> str:
    return str(value) if isinstance(value, Fraction) else repr(value)


def _json_value(value):
    # exact rationals travel as strings, doubles as JSON numbers
    return str(value) if isinstance(value, Fraction) else value


def _parse_range(text: str) -> list[int]:
    """'3..5' -> [3, 4, 5]; '7' -> [7]; empty when the range is reversed."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _parse_grid(text: str) -> list:
    return [parse_probability(item) for item in text.split(",") if item.strip()]


def _resolve_mode(flag, p):
    inferred = "rational" if isinstance(p, Fraction) else "double"
    mode = flag or os.environ.get("HOTHAND_MODE") or inferred
    if mode not in ("rational", "double"):
        raise ValueError(f"unknown arithmetic mode {mode!r} (use rational or double)")
    if mode == "rational" and not isinstance(p, Fraction):
        raise ValueError(
            "rational mode needs an exact probability literal like 1/2; "
            "a decimal literal would misrepresent exactness"
        )
    return mode


def _cmd_stat(args) -> int:
    with open(args.file, encoding="ascii") as handle:
        seq = parse_sequence(handle.read())
    counts = count_streak_terms(seq, args.k)
    if counts.opportunities == 0:
        print(f"N={counts.continuations} D={counts.opportunities} undefined (D=0)")
        return EXIT_UNDEFINED
    ratio = Fraction(counts.continuations, counts.opportunities)
    print(f"N={counts.continuations} D={counts.opportunities} P={ratio}")
    return EXIT_OK


def _cmd_closed_form(args) -> int:
    p = parse_probability(args.p)
    value = expected_hot_hand_k1(args.n, p)
    print(f"E={_fmt(value)} bias={_fmt(p - value)}", end="")
    if args.n == 2:
        print(" (n=2: boundary case, expectation equals p)", end="")
    print()
    return EXIT_OK


def _cmd_exact(args) -> int:
    p = parse_probability(args.p)
    mode = _resolve_mode(args.mode, p)
    if mode == "double" and isinstance(p, Fraction):
        p = float(p)
    dist = dp_joint(args.n, args.k, p)
    if args.oracle:
        reference = enumerate_joint(args.n, args.k, p)
        if not _pmf_matches(dist.pmf, reference.pmf, mode):
            print("error: DP distribution disagrees with enumeration", file=sys.stderr)
            return EXIT_ERROR
        print("oracle: DP matches enumeration")
    expectation = conditional_expectation(dist)
    print(f"E={_fmt(expectation)} P(D=0)={_fmt(prob_denominator_zero(dist))}")
    if args.dump:
        print(json.dumps(distribution_to_json(dist), indent=2))
    return EXIT_OK


def _pmf_matches(left, right, mode) -> bool:
    if set(left) != set(right):
        return False
    if mode == "rational":
        return left == right
    return all(
        abs(left[key] - right[key]) <= 1e-12 * max(abs(right[key]), 1e-15) + 1e-300
        for key in left
    )


def _cmd_mc(args) -> int:
    config = SimulationConfig(
        n=args.n,
        k=args.k,
        p=float(args.p),
        samples=args.samples,
        seed=args.seed,
        max_attempt_factor=args.max_attempt_factor,
        shards=args.shards,
    )
    result = simulate(config)
    print(json.dumps(result_to_json(config, result), indent=2))
    return EXIT_OK


def _bias_rows(args):
    rows = []
    for n in _parse_range(args.n):
        for k in _parse_range(args.k):
            for p in _parse_grid(args.p):
                if args.method == "closed_form":
                    expectation = expected_hot_hand_k1(n, p)
                elif args.method == "dp":
                    expectation = conditional_expectation(dp_joint(n, k, p))
                elif args.method == "enumeration":
                    expectation = conditional_expectation(enumerate_joint(n, k, p))
                else:
                    config = SimulationConfig(
                        n=n, k=k, p=float(p), samples=args.samples, seed=args.seed
                    )
                    expectation = simulate(config).estimate
                gap = (float(p) if args.method == "monte_carlo" else p) - expectation
                rows.append((n, k, p, expectation, gap))
    return rows


def _cmd_bias_table(args) -> int:
    if args.method == "closed_form" and _parse_range(args.k) != [1]:
        print("error: method closed_form only covers k=1", file=sys.stderr)
        return EXIT_ERROR
    rows = _bias_rows(args)
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "k", "p", "expectation", "bias_gap", "method"])
        for n, k, p, expectation, gap in rows:
            writer.writerow(
                [n, k, format_probability(p), _fmt(expectation), _fmt(gap), args.method]
            )
    else:
        payload = {
            "rows": [
                {
                    "n": n,
                    "k": k,
                    "p": _json_value(p),
                    "expectation": _json_value(expectation),
                    "bias_gap": _json_value(gap),
                    "method": args.method,
                }
                for n, k, p, expectation, gap in rows
            ]
        }
        print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_verify(_args) -> int:
    results = checks.run_all()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hothand", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    stat = sub.add_parser("stat", help="streak counts and statistic for a sequence file")
    stat.add_argument("file", help="text file of 0/1 characters, whitespace ignored")
    stat.add_argument("-k", type=int, required=True, help="streak length")
    stat.set_defaults(func=_cmd_stat)

    closed = sub.add_parser("closed-form", help="k=1 conditional mean and bias gap")
    closed.add_argument("--n", type=int, required=True)
    closed.add_argument("--p", required=True, help="probability literal, a/b or decimal")
    closed.set_defaults(func=_cmd_closed_form)

    exact = sub.add_parser("exact", help="exact conditional mean via the DP for any k")
    exact.add_argument("--n", type=int, required=True)
    exact.add_argument("--k", type=int, required=True)
    exact.add_argument("--p", required=True)
    exact.add_argument("--mode", choices=("rational", "double"))
    exact.add_argument("--dump", action="store_true", help="also print the pmf as JSON")
    exact.add_argument(
        "--oracle", action="store_true", help="cross-check the DP against enumeration (n <= 20)"
    )
    exact.set_defaults(func=_cmd_exact)

    mc = sub.add_parser("mc", help="seeded Monte Carlo estimate, JSON output")
    mc.add_argument("--n", type=int, required=True)
    mc.add_argument("--k", type=int, required=True)
    mc.add_argument("--p", type=float, required=True)
    mc.add_argument("--samples", type=int, required=True)
    mc.add_argument("--seed", type=int, required=True)
    mc.add_argument("--max-attempt-factor", type=int, default=10)
    mc.add_argument("--shards", type=int, default=1)
    mc.set_defaults(func=_cmd_mc)

    table = sub.add_parser("bias-table", help="bias table over an (n, k, p) grid")
    table.add_argument("--n", required=True, help="single value or range a..b")
    table.add_argument("--k", required=True, help="single value or range a..b")
    table.add_argument("--p", required=True, help="comma-separated probability literals")
    table.add_argument(
        "--method",
        choices=("closed_form", "dp", "enumeration", "monte_carlo"),
        default="dp",
    )
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--samples", type=int, default=100000, help="monte_carlo only")
    table.add_argument("--seed", type=int, default=0, help="monte_carlo only")
    table.set_defaults(func=_cmd_bias_table)

    verify = sub.add_parser("verify", help="run the built-in invariant battery")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits itself on usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args)
    except AcceptanceShortfallError as exc:
        print(
            f"error: {exc} (accepted={exc.accepted} rejected={exc.rejected})",
            file=sys.stderr,
        )
        return EXIT_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
