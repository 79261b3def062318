"""Command line entry point: ``stackfilter <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch,
3 oracle width limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .balanced import balanced_eval, balanced_profile, threshold_probs
from .ced import CedSyntaxError, build_ced
from .distribution import a_profile, eval_transfer, rank_selection, transfer
from .dnfio import DnfSyntaxError, format_dnf, read_balanced, read_dnf
from .joint import joint_eval, joint_profile
from .oracle import (
    DEFAULT_LIMIT,
    OracleLimitError,
    OracleReport,
    brute_balanced,
    brute_joint,
    brute_transfer_profile,
    brute_zeros,
)
from .pbf import WindowMismatch, dualize
from .rows import enumerate_zeros

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _num(x) -> str:
    return str(x)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def cmd_transfer(args) -> int:
    tp = transfer(enumerate_zeros(read_dnf(args.file)))
    payload = {
        "mixed": [{"coeff": str(m.coeff), "p": m.p_exp, "q": m.q_exp} for m in tp.mixed],
        "expanded": [str(c) for c in tp.expanded],
        "degree": tp.degree,
    }
    lines = [f"mixed:    {tp.format_mixed()}", f"expanded: {tp.format_expanded()}", f"degree:   {tp.degree}"]
    if args.p is not None:
        v = eval_transfer(tp, args.p)
        payload["p"], payload["value"] = _num(args.p), _num(v)
        lines.append(f"phi({args.p}) = {v} ~ {float(v):.12g}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_count(args) -> int:
    rs = enumerate_zeros(read_dnf(args.file))
    _emit(args, {"N": str(rs.N), "R": rs.R}, [f"N = {rs.N}", f"R = {rs.R}"])
    return EXIT_OK


def cmd_rows(args) -> int:
    rs = enumerate_zeros(read_dnf(args.file))
    _emit(args, {"rows": [r.cells() for r in rs]}, [str(r) for r in rs])
    return EXIT_OK


def cmd_profile(args) -> int:
    prof = a_profile(enumerate_zeros(read_dnf(args.file)))
    payload = {"A": [str(a) for a in prof.counts]}
    lines = ["A = " + " ".join(str(a) for a in prof.counts)]
    if prof.total:
        ranks = rank_selection(prof)
        payload["rank_selection"] = [str(r) for r in ranks]
        lines += [f"p_{i} = {r}" for i, r in enumerate(ranks, start=1)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_joint(args) -> int:
    if (args.p is None) != (args.pi is None):
        raise UsageError("--p and --pi must be given together")
    b1, b2 = read_dnf(args.file1), read_dnf(args.file2)
    jm = joint_profile(b1, b2)
    payload = {"w": jm.w, "A": [[str(a) for a in row] for row in jm.A]}
    lines = [" ".join(f"{a:>6}" for a in row) for row in jm.A]
    if args.p is not None:
        v = joint_eval(jm, args.p, args.pi)
        payload["value"] = _num(v)
        lines.append(f"JD = {v} ~ {float(v):.12g}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_balanced(args) -> int:
    given = [args.F_t is not None, args.F_neg_t is not None, args.t_sign is not None]
    if any(given) and not all(given):
        raise UsageError("--F-t, --F-neg-t and --t-sign must be given together")
    prof = balanced_profile(read_balanced(args.file))
    payload = {"w": prof.w, "profile": [{"exponents": list(k), "count": str(v)} for k, v in prof.counts.items()]}
    lines = [f"{k[0]} {k[1]} {k[2]} {k[3]}: {v}" for k, v in prof.counts.items()]
    if all(given):
        try:
            q4 = threshold_probs(args.F_t, args.F_neg_t, args.t_sign == "neg")
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        v = balanced_eval(prof, q4)
        payload["value"] = _num(v)
        lines.append(f"F_out = {v} ~ {float(v):.12g}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ced(args) -> int:
    pbf = build_ced(args.spec)
    text = format_dnf(pbf)
    if args.format == "json":
        _emit(args, {"window": [pbf.window.lo, pbf.window.hi], "implicants": [list(i) for i in pbf.implicants]}, [])
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_dualize(args) -> int:
    dual = dualize(read_dnf(args.file))
    if args.format == "json":
        _emit(args, {"window": [dual.window.lo, dual.window.hi], "implicants": [list(i) for i in dual.implicants]}, [])
    elif dual.is_one:
        sys.stdout.write(f"# constant 1 on window {dual.window}\n")
    else:
        sys.stdout.write(format_dnf(dual))
    return EXIT_OK


def verify_reports(args) -> list[OracleReport]:
    limit = args.limit
    if args.balanced:
        bpbf = read_balanced(args.file)
        return [OracleReport("balanced profile", balanced_profile(bpbf), brute_balanced(bpbf, limit), args.file)]
    pbf = read_dnf(args.file)
    rs = enumerate_zeros(pbf)
    zeros = brute_zeros(pbf, limit)
    fast_zeros = sorted(x for r in rs for x in r.members())
    brute_masks = sorted(sum(bit << k for k, bit in enumerate(x)) for x in zeros)
    tp, prof = brute_transfer_profile(pbf, limit)
    reports = [
        OracleReport("zero set (disjoint cover)", fast_zeros, brute_masks, args.file),
        OracleReport("N", rs.N, len(zeros), args.file),
        OracleReport("transfer", transfer(rs).expanded, tp.expanded, args.file),
        OracleReport("A-profile", a_profile(rs).counts, prof.counts, args.file),
    ]
    if args.second:
        b2 = read_dnf(args.second)
        reports.append(
            OracleReport("joint matrix", joint_profile(pbf, b2).A, brute_joint(pbf, b2, limit).A, f"{args.file} x {args.second}")
        )
    return reports


def cmd_verify(args) -> int:
    reports = verify_reports(args)
    if args.format == "json":
        _emit(args, {"reports": [{"quantity": r.quantity, "equal": r.equal} for r in reports]}, [])
    else:
        for r in reports:
            print(r)
    return EXIT_OK if all(r.equal for r in reports) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stackfilter", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("transfer", cmd_transfer, "distribution transfer polynomial")
    p.add_argument("file")
    p.add_argument("--p", type=_fraction)
    add("count", cmd_count, "number of zeros N and of rows R").add_argument("file")
    add("rows", cmd_rows, "final multivalued rows").add_argument("file")
    add("profile", cmd_profile, "A-profile and rank selection probabilities").add_argument("file")
    p = add("joint", cmd_joint, "joint distribution matrix of two filters")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--p", type=_fraction)
    p.add_argument("--pi", type=_fraction)
    p = add("balanced", cmd_balanced, "balanced stack filter profile")
    p.add_argument("file")
    p.add_argument("--F-t", dest="F_t", type=_fraction)
    p.add_argument("--F-neg-t", dest="F_neg_t", type=_fraction)
    p.add_argument("--t-sign", choices=("neg", "pos"))
    add("ced", cmd_ced, "DNF of an erosion/dilation cascade such as U2L2").add_argument("spec")
    add("dualize", cmd_dualize, "DNF of the dual function").add_argument("file")
    p = add("verify", cmd_verify, "compare fast results with brute force")
    p.add_argument("file")
    p.add_argument("--second", help="second DNF for the joint matrix check")
    p.add_argument("--balanced", action="store_true", help="FILE is a balanced DNF")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DnfSyntaxError, CedSyntaxError, WindowMismatch, UsageError, OSError) as exc:
        print(f"stackfilter: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleLimitError as exc:
        print(f"stackfilter: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
