"""Command-line front end.

Exit status: 0 when the predicate or theorem holds (or a requested witness
was found), 1 when it fails (or no witness was found), 2 on usage or input
errors.  ``--json`` switches to machine-readable output; all numbers are
printed exactly.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import LCSeqError
from .relations import RelationKind, relation
from .search import (
    ConjectureId,
    SearchConfig,
    SearchMode,
    find_counterexample,
    verify_paper_example,
    verify_witness,
)
from .sequence import (
    classify,
    convolve,
    format_rational,
    format_sequence,
    lin_comb,
    parse_sequence,
    sequence_to_json,
    as_rational,
)
from .theorems import (
    check_hierarchy,
    check_triangle_transport,
    proof_trace,
    proof_trace_window,
    verify_convolution_preservation,
    verify_lincomb_logconcave,
    verify_lincomb_partial,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _seq(text):
    try:
        return parse_sequence(text)
    except (LCSeqError, ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rat_list(text):
    try:
        return [as_rational(p) for p in text.split(",")]
    except (LCSeqError, ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    p = _Parser(prog="lcseq", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="classify a sequence")
    c.add_argument("seq", type=_seq)

    r = sub.add_parser("relate", parents=[common], help="test a relation between two sequences")
    r.add_argument("--kind", required=True, choices=[k.value for k in RelationKind])
    r.add_argument("--bruteforce", action="store_true",
                   help="use the definitional scan for partial synchronicity")
    r.add_argument("A", type=_seq)
    r.add_argument("B", type=_seq)

    v = sub.add_parser("convolve", parents=[common], help="convolve two sequences")
    v.add_argument("A", type=_seq)
    v.add_argument("B", type=_seq)

    b = sub.add_parser("combine", parents=[common], help="nonnegative linear combination")
    b.add_argument("--u", required=True, type=_rat_list)
    b.add_argument("--v", type=_rat_list)
    b.add_argument("seqs", nargs="+", type=_seq)

    t = sub.add_parser("verify", parents=[common], help="check a theorem on concrete input")
    t.add_argument("--theorem", required=True,
                   choices=["hierarchy", "transport", "lincomb", "convpreserve", "trace"])
    t.add_argument("--window", type=int, default=3, help="transport: index padding")
    t.add_argument("--u", type=_rat_list, help="lincomb: first coefficient list")
    t.add_argument("--v", type=_rat_list, help="lincomb: second coefficient list")
    t.add_argument("--m", type=int, help="trace: fix m (default: every m >= n in window)")
    t.add_argument("--n", type=int, help="trace: fix n")
    t.add_argument("seqs", nargs="+", type=_seq)

    s = sub.add_parser("search", parents=[common], help="search for a counterexample")
    s.add_argument("--conjecture", required=True)
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--max-value", type=int, required=True)
    s.add_argument("--random", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=10_000)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--minimize", action="store_true")

    sub.add_parser("verify-paper", parents=[common], help="replay the worked counterexample")
    return p


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _violation_text(v, kind):
    if kind is RelationKind.PARTIAL:
        where = f"(m,n)=({v.m},{v.n})"
        if v.condition:
            where += f", condition ({v.condition})"
    else:
        where = f"k={v.m}" + (f" ({v.condition})" if v.condition else "")
    return (f"violated at {where}: dominating side {format_rational(v.lhs)} < "
            f"{format_rational(v.rhs)} (margin {format_rational(v.margin)})")


def _cmd_check(args):
    cls = classify(args.seq)
    _emit(args, {"sequence": sequence_to_json(args.seq), "class": cls.value, "in_L": cls.in_L},
          f"{format_sequence(args.seq)}: {cls.value}")
    return EXIT_OK if cls.in_L else EXIT_FAIL


def _cmd_relate(args):
    kind = RelationKind(args.kind)
    rep = relation(kind, args.A, args.B, oracle=args.bruteforce)
    text = f"{kind.value}: " + ("holds" if rep.holds else "fails")
    if not rep.holds:
        text += "\n" + _violation_text(rep.violation, kind)
    payload = rep.to_json()
    payload["A"], payload["B"] = sequence_to_json(args.A), sequence_to_json(args.B)
    _emit(args, payload, text)
    return EXIT_OK if rep.holds else EXIT_FAIL


def _cmd_convolve(args):
    out = convolve(args.A, args.B)
    _emit(args, {"result": sequence_to_json(out)}, format_sequence(out))
    return EXIT_OK


def _cmd_combine(args):
    U = lin_comb(args.u, args.seqs)
    payload = {"u": sequence_to_json(U)}
    text = format_sequence(U)
    if args.v is not None:
        V = lin_comb(args.v, args.seqs)
        payload["v"] = sequence_to_json(V)
        text += "\n" + format_sequence(V)
    _emit(args, payload, text)
    return EXIT_OK


def _arity(args, *counts):
    if len(args.seqs) not in counts:
        want = " or ".join(str(c) for c in counts)
        raise _UsageError(f"--theorem {args.theorem} takes {want} sequences, got {len(args.seqs)}")


def _cmd_verify(args):
    th, seqs = args.theorem, args.seqs
    if th == "hierarchy":
        _arity(args, 2)
        rep = check_hierarchy(*seqs)
    elif th == "transport":
        _arity(args, 2)
        rep = check_triangle_transport(*seqs, window=args.window)
    elif th == "lincomb":
        if args.u is None or args.v is None:
            raise _UsageError("--theorem lincomb needs --u and --v")
        if len(seqs) == 2 and len(args.u) == 1 and len(args.v) == 1:
            rep = verify_lincomb_logconcave(seqs[0], seqs[1], args.u[0], args.v[0])
        else:
            rep = verify_lincomb_partial(seqs, args.u, args.v)
    elif th == "convpreserve":
        _arity(args, 3)
        rep = verify_convolution_preservation(*seqs)
    else:
        _arity(args, 3)
        if (args.m is None) != (args.n is None):
            raise _UsageError("--m and --n go together")
        rep = (proof_trace_window(*seqs) if args.m is None
               else proof_trace(*seqs, args.m, args.n))
    payload = rep.to_json()
    text = f"{rep.theorem_id.value}: " + ("holds" if rep.holds else "FAILS")
    text += "\n" + json.dumps(payload["detail"], sort_keys=True)
    _emit(args, payload, text)
    return EXIT_OK if rep.holds else EXIT_FAIL


def _cmd_search(args):
    try:
        cid = ConjectureId.parse(args.conjecture)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    cfg = SearchConfig(args.max_len, args.max_value,
                       SearchMode.RANDOM if args.random else SearchMode.EXHAUSTIVE,
                       args.seed, args.budget)
    w = find_counterexample(cid, cfg, workers=args.threads, minimize=args.minimize)
    if w is None:
        _emit(args, {"conjecture": cid.value, "witness": None},
              f"{cid.value}: no counterexample within bounds")
        return EXIT_FAIL
    ok = verify_witness(w)
    payload = {"conjecture": cid.value, "witness": w.to_json(), "verified": ok}
    text = (f"{cid.value}: counterexample " + " ; ".join(format_sequence(S) for S in w.sequences)
            + f"\n{w.violated_at['relation']} fails on {w.violated_at['pair']} at "
            + f"(m,n)=({w.violated_at['m']},{w.violated_at['n']}): "
            + f"{format_rational(w.lhs)} < {format_rational(w.rhs)}"
            + ("" if ok else "\nWARNING: witness did not re-verify"))
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_verify_paper(args):
    rep = verify_paper_example()
    d = rep.detail
    text = "\n".join([
        "A*C = " + format_sequence(d["A*C"]),
        "B*C = " + format_sequence(d["B*C"]),
        "A ~w B: " + str(d.get("A~wB")),
        f"weak synchronicity of (A*C, B*C) fails at k={d.get('k')}, "
        f"margin {format_rational(d['margin']) if 'margin' in d else '-'}",
        "worked example: " + ("reproduced" if rep.holds else "NOT reproduced"),
    ])
    _emit(args, rep.to_json(), text)
    return EXIT_OK if rep.holds else EXIT_FAIL


_COMMANDS = {
    "check": _cmd_check,
    "relate": _cmd_relate,
    "convolve": _cmd_convolve,
    "combine": _cmd_combine,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "verify-paper": _cmd_verify_paper,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"lcseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LCSeqError, ValueError, TypeError) as exc:
        print(f"lcseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
