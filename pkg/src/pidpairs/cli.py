"""Command line front end.

Exit codes: 0 on success (and for an `equivalent` verdict), 1 for an
`inequivalent` verdict or selftest property failures, 2 for parse
errors (with file:line:col diagnostics), 3 for violated structural
hypotheses.
"""

from __future__ import annotations

import argparse
import sys

from .errors import HypothesisError, ParseError
from .normal_forms import hnf, hnf_pivots, snf
from .pairs import canonical_pair, equivalent, pair_invariants
from .selftest import SelftestConfig, format_report, run_selftest
from .submodules import Submodule
from .textio import format_matrix, read_matrix_file

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3


class _CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


def _load(path):
    try:
        return read_matrix_file(path)
    except OSError as e:
        raise _CliError(EXIT_PARSE, f"{path}: {e.strerror or e}") from None
    except ParseError as e:
        raise _CliError(EXIT_PARSE, f"{path}:{e}") from None


def _load_pair(path1, path2):
    m1 = _load(path1)
    m2 = _load(path2)
    if m1.ring != m2.ring:
        raise _CliError(
            EXIT_HYPOTHESIS, f"hypothesis failed: {path1} and {path2} use different rings"
        )
    if m1.rows != m2.rows:
        raise _CliError(
            EXIT_HYPOTHESIS,
            f"hypothesis failed: {path1} and {path2} have different row counts",
        )
    return m1, m2


def _print_block(out, name, matrix):
    print(f"matrix {name}", file=out)
    print(format_matrix(matrix), file=out)


def _scalars(ring, values):
    return " ".join(ring.format_token(v) for v in values)


def _cmd_snf(args, out):
    M = _load(args.file)
    dec = snf(M)
    print(f"rank: {dec.rank}", file=out)
    print(f"invariants: {_scalars(M.ring, dec.invariant_factors)}".rstrip(), file=out)
    _print_block(out, "S", dec.S)
    _print_block(out, "Q", dec.Q)
    _print_block(out, "V", dec.V)
    return EXIT_OK


def _cmd_hnf(args, out):
    M = _load(args.file)
    H, U = hnf(M)
    print(f"rank: {len(hnf_pivots(H))}", file=out)
    _print_block(out, "H", H)
    _print_block(out, "U", U)
    return EXIT_OK


def _cmd_closure(args, out):
    M = _load(args.file)
    module = Submodule.from_generators(M.rows, M)
    closed = module.closure()
    print(f"rank: {module.rank}", file=out)
    print(f"pure: {'true' if module.is_pure() else 'false'}", file=out)
    _print_block(out, "closure", closed.basis)
    return EXIT_OK


def _cmd_pair_canon(args, out):
    x1, x2 = _load_pair(args.file1, args.file2)
    try:
        cf = canonical_pair(x1, x2)
    except HypothesisError as e:
        raise _CliError(EXIT_HYPOTHESIS, f"hypothesis failed: {e}") from None
    ring = x1.ring
    print(f"n: {cf.n}", file=out)
    print(f"m1: {cf.m1}", file=out)
    print(f"m2: {cf.m2}", file=out)
    print(f"t: {cf.t}", file=out)
    print(f"alpha: {_scalars(ring, cf.alphas)}".rstrip(), file=out)
    print(f"beta: {_scalars(ring, cf.betas)}".rstrip(), file=out)
    _print_block(out, "Y1", cf.Y1)
    _print_block(out, "Y2", cf.Y2)
    _print_block(out, "Q", cf.Q)
    _print_block(out, "V1", cf.V1)
    _print_block(out, "V2", cf.V2)
    return EXIT_OK


def _describe_invariants(out, label, ring, inv):
    print(f"{label} rank_sum: {inv.rank_sum}", file=out)
    print(f"{label} torsion1: {_scalars(ring, inv.q1.torsion)}".rstrip(), file=out)
    print(f"{label} free1: {inv.q1.free_rank}", file=out)
    print(f"{label} torsion2: {_scalars(ring, inv.q2.torsion)}".rstrip(), file=out)
    print(f"{label} free2: {inv.q2.free_rank}", file=out)


def _cmd_pair_equiv(args, out):
    a1, a2 = _load_pair(args.file1, args.file2)
    b1, b2 = _load_pair(args.file3, args.file4)
    if a1.ring != b1.ring:
        raise _CliError(EXIT_HYPOTHESIS, "hypothesis failed: pairs use different rings")
    if a1.rows != b1.rows:
        raise _CliError(
            EXIT_HYPOTHESIS, "hypothesis failed: pairs have different ambient ranks"
        )
    try:
        inv_a = pair_invariants(a1, a2)
        inv_b = pair_invariants(b1, b2)
        verdict = equivalent((a1, a2), (b1, b2))
    except HypothesisError as e:
        raise _CliError(EXIT_HYPOTHESIS, f"hypothesis failed: {e}") from None
    ring = a1.ring
    print(f"n: {a1.rows}", file=out)
    _describe_invariants(out, "pairA", ring, inv_a)
    _describe_invariants(out, "pairB", ring, inv_b)
    print(f"verdict: {'equivalent' if verdict else 'inequivalent'}", file=out)
    return EXIT_OK if verdict else EXIT_FAILURE


def _cmd_selftest(args, out):
    config = SelftestConfig(
        trials=args.trials,
        seed=args.seed,
        ring_tag=args.ring,
        max_dim=args.max_dim,
        max_entry=args.max_entry,
    )
    try:
        report = run_selftest(config)
    except ValueError as e:
        raise _CliError(EXIT_PARSE, str(e)) from None
    print(format_report(report), file=out)
    return EXIT_OK if report.ok else EXIT_FAILURE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pidpairs",
        description=(
            "Exact normal forms and equivalence invariants for pairs of "
            "submodules of R^n over a principal ideal domain."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", help="Smith normal form with witnesses")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_snf)

    p = sub.add_parser("hnf", help="column Hermite normal form with witness")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_hnf)

    p = sub.add_parser("closure", help="closure of the span of the columns")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_closure)

    p = sub.add_parser(
        "pair-canon", help="canonical form and witnesses of a pair of matrices"
    )
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=_cmd_pair_canon)

    p = sub.add_parser(
        "pair-equiv", help="decide equivalence of two pairs (exit 0 yes, 1 no)"
    )
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("file3")
    p.add_argument("file4")
    p.set_defaults(fn=_cmd_pair_equiv)

    p = sub.add_parser("selftest", help="run the deterministic property suites")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ring", default="int", choices=("int", "polyq"))
    p.add_argument("--max-dim", type=int, default=5)
    p.add_argument("--max-entry", type=int, default=10)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except _CliError as e:
        print(e.message, file=sys.stderr)
        return e.code


if __name__ == "__main__":
    raise SystemExit(main())
