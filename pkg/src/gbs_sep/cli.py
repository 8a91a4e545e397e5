"""Command-line front end.

Exit codes: 0 yes/success, 1 no, 2 unknown, 64 usage error, 65 bad input or
failed precondition.  ``--json`` prints a verdict object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import graph as gr
from .bs1n import Bs1nGroup
from .errors import BoundExceeded, GbsSepError
from .hquot import BRUTEFORCE_BOUND, HGroup, find_separating_quotient
from .numtheory import PrimeSet, in_xi, multiplicative_order
from .separability import (
    Answer,
    Verdict,
    condition1_check,
    conjugacy_separable_gbs,
    default_bound,
    fusion_witness,
    residually_c_gbs,
)

EXIT_CODES = {Answer.YES: 0, Answer.NO: 1, Answer.UNKNOWN: 2}
EX_USAGE = 64
EX_DATAERR = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _prime_set(text: str) -> PrimeSet:
    try:
        return PrimeSet.parse(text)
    except GbsSepError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_graph(path: str) -> gr.LabeledGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise gr.ParseError(f"cannot read {path}: {exc.strerror}") from None
    return gr.LabeledGraph.from_json(text)


def _fmt_witness(w: dict[str, Any] | None) -> str:
    if not w:
        return ""
    return " " + " ".join(f"{k}={v}" for k, v in w.items())


# Each handler returns (verdict, human-readable text).


def _gbs_classify(args: argparse.Namespace) -> tuple[Verdict, str]:
    R, _ = gr.prepare(_load_graph(args.graph))
    c = gr.classify(R)
    return Verdict.yes("classify", {"kind": c.kind.value, "n": c.n}), str(c)


def _gbs_reduce(args: argparse.Namespace) -> tuple[Verdict, str]:
    R = gr.reduce(_load_graph(args.graph))
    return Verdict.yes("reduce", {"graph": R.to_json()}), R.dumps()


def _gbs_modular(args: argparse.Namespace) -> tuple[Verdict, str]:
    R, S = gr.prepare(_load_graph(args.graph))
    M = gr.modular_image(R, S)
    gens = {eid: str(q) for eid, q in zip(M.edge_ids, M.generators)}
    lines = [M.classification.value] + [f"t.{eid} -> {q}" for eid, q in gens.items()]
    return Verdict.yes("modular", {"classification": M.classification.value, "generators": gens}), "\n".join(lines)


def _gbs_radical(args: argparse.Namespace) -> tuple[Verdict, str]:
    R, S = gr.prepare(_load_graph(args.graph))
    rad = gr.cyclic_radical(R, S)
    exps = dict(rad.radical_exponent)
    lines = [f"mu={rad.mu}"] + [f"mu({v})={m}" for v, m in exps.items()]
    return Verdict.yes("radical", {"mu": rad.mu, "radical_exponent": exps}), "\n".join(lines)


def _verdict_text(v: Verdict) -> str:
    text = f"{v.answer.value} ({v.reason}){_fmt_witness(v.witness)}"
    if v.bound is not None:
        text += f" bound={v.bound}"
    return text


def _gbs_residual(args: argparse.Namespace) -> tuple[Verdict, str]:
    v = residually_c_gbs(_load_graph(args.graph), args.primes, args.bound)
    return v, _verdict_text(v)


def _gbs_conjsep(args: argparse.Namespace) -> tuple[Verdict, str]:
    v = conjugacy_separable_gbs(_load_graph(args.graph), args.primes, args.bound)
    return v, _verdict_text(v)


def _bs_conj(args: argparse.Namespace) -> tuple[Verdict, str]:
    g = Bs1nGroup(args.n)
    x, y = g.from_word(args.w1), g.from_word(args.w2)
    c = g.find_conjugator(x, y)
    if c is None:
        return Verdict.no("not_conjugate"), "not conjugate"
    witness: dict[str, Any] = {"conjugator": str(c)}
    lines = ["conjugate", f"conjugator: {c}"]
    if args.witness:
        image = g.conjugate(x, c)
        witness["verified"] = image == y
        lines.append(f"check: ({c})^-1 ({x}) ({c}) = {image}")
    return Verdict.yes("conjugate", witness), "\n".join(lines)


def _bs_separate(args: argparse.Namespace) -> tuple[Verdict, str]:
    g = Bs1nGroup(args.n)
    x, y = g.from_word(args.w1), g.from_word(args.w2)
    if g.are_conjugate(x, y):
        return Verdict.no("conjugate"), "no (elements are conjugate)"
    H = find_separating_quotient(g, x, y, args.primes, args.smax)
    if H is None:
        u, m1 = g._nonneg_standard(x)
        _, m2 = g._nonneg_standard(y)
        exact = condition1_check(args.n, args.primes, u, m1, m2, args.smax)
        if exact.answer is Answer.YES:
            s = exact.witness["s"]
            H = HGroup(args.n, multiplicative_order(args.n, s), s)
        else:
            v = Verdict(exact.answer, f"condition1/{exact.reason}", exact.witness, exact.bound)
            return v, _verdict_text(v)
    v = Verdict.yes("separating_quotient", {"n": H.n, "r": H.r, "s": H.s})
    return v, f"separated in {H}"


def _bs_fusion(args: argparse.Namespace) -> tuple[Verdict, str]:
    fw = fusion_witness(args.n, args.primes, args.missing)
    return Verdict.yes("fusion_witness", fw.to_json()), f"u={fw.u} v={fw.v} w={fw.w} q={fw.q}"


def _h_conj(args: argparse.Namespace) -> tuple[Verdict, str]:
    H = HGroup(args.n, args.r, args.s)
    x, y = H.from_word(args.w1), H.from_word(args.w2)
    if args.brute:
        try:
            same = H.are_conjugate_bruteforce(x, y, BRUTEFORCE_BOUND)
        except BoundExceeded:
            v = Verdict.unknown("bruteforce_bound", BRUTEFORCE_BOUND)
            return v, _verdict_text(v)
        method = "bruteforce"
    else:
        same, method = H.are_conjugate_criterion(x, y), "criterion"
    if same:
        return Verdict.yes(method, {"x": str(x), "y": str(y)}), f"conjugate in {H}"
    return Verdict.no(method, {"x": str(x), "y": str(y)}), f"not conjugate in {H}"


def _num_xi(args: argparse.Namespace) -> tuple[Verdict, str]:
    if in_xi(args.n, args.s, args.primes):
        r = multiplicative_order(args.n, args.s)
        return Verdict.yes("in_xi", {"order": r}), f"{args.s} in Xi({args.n}, {args.primes}); ord = {r}"
    return Verdict.no("not_in_xi"), f"{args.s} not in Xi({args.n}, {args.primes})"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a verdict object")

    parser = _Parser(prog="gbs-sep", description="Separability verdicts for GBS groups.")
    top = parser.add_subparsers(dest="group", required=True)

    def leaf(sub: argparse._SubParsersAction, name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    gbs = top.add_parser("gbs", help="labeled-graph commands").add_subparsers(dest="cmd", required=True)
    for name, func, help in (
        ("classify", _gbs_classify, "classify the reduced graph"),
        ("reduce", _gbs_reduce, "print the reduced graph as JSON"),
        ("modular", _gbs_modular, "modular homomorphism image"),
        ("radical", _gbs_radical, "cyclic radical indices"),
    ):
        leaf(gbs, name, func, help).add_argument("graph")
    for name, func, help in (
        ("residual", _gbs_residual, "residual property for a prime set"),
        ("conjsep", _gbs_conjsep, "conjugacy separability for a prime set"),
    ):
        p = leaf(gbs, name, func, help)
        p.add_argument("graph")
        p.add_argument("--primes", type=_prime_set, required=True)
        p.add_argument("--bound", type=int, default=None)

    bs = top.add_parser("bs", help="BS(1,n) commands").add_subparsers(dest="cmd", required=True)
    p = leaf(bs, "conj", _bs_conj, "decide conjugacy and print a conjugator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("w1")
    p.add_argument("w2")
    p.add_argument("--witness", action="store_true")
    p = leaf(bs, "separate", _bs_separate, "find a separating finite quotient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--primes", type=_prime_set, required=True)
    p.add_argument("--smax", type=int, required=True)
    p.add_argument("w1")
    p.add_argument("w2")
    p = leaf(bs, "fusion", _bs_fusion, "fusion witness for a missing prime")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--primes", type=_prime_set, required=True)
    p.add_argument("--missing", type=int, required=True)

    h = top.add_parser("h", help="finite quotient commands").add_subparsers(dest="cmd", required=True)
    p = leaf(h, "conj", _h_conj, "conjugacy in H(n,r,s)")
    for flag in ("--n", "--r", "--s"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("w1")
    p.add_argument("w2")
    p.add_argument("--brute", action="store_true")

    num = top.add_parser("num", help="number theory").add_subparsers(dest="cmd", required=True)
    p = leaf(num, "xi", _num_xi, "membership in Xi(n, P)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--primes", type=_prime_set, required=True)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EX_USAGE
    try:
        if getattr(args, "bound", None) is None and hasattr(args, "bound"):
            args.bound = default_bound()
        verdict, text = args.func(args)
    except GbsSepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    if args.json:
        print(json.dumps(verdict.to_json(), sort_keys=True))
    else:
        print(text)
    return EXIT_CODES[verdict.answer]


def main() -> None:
    sys.exit(run())
