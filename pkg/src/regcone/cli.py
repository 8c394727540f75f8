"""Command-line front end.

Exit codes: 0 success / IsCone / true, 1 NotCone / false, 2 input error,
3 inconclusive.
"""

from __future__ import annotations

import argparse
import sys

from . import automata as fa
from .automata import InputError, format_word, word
from .conecheck import (
    Inconclusive,
    RefuteConfig,
    SearchExhausted,
    check_cone_axioms,
    format_verdict,
    pumping_witness,
)
from .freegroup import GroupAlphabet, benois_reduce
from .graphprod import geo_automaton, is_geodesic, load_graph, theorem2_witness
from .orders import z2_bounded_verify

OK, NO, BAD_INPUT, INCONCLUSIVE = 0, 1, 2, 3


def _emit(a: fa.Automaton, out: str | None):
    if out:
        fa.save_automaton(a, out)
    else:
        sys.stdout.write(fa.format_automaton(a))
    return OK


def _group(a: fa.Automaton) -> GroupAlphabet:
    return GroupAlphabet(a.alphabet)


def cmd_reduce(args):
    a = fa.load_automaton(args.input)
    P = benois_reduce(a, _group(a))
    if args.output:
        fa.save_automaton(P.automaton, args.output)
    print(f"states: {P.automaton.state_count}")
    w = P.shortest()
    print("empty" if w is None else f"shortest: {format_word(w)}")
    return OK


def cmd_cone_check(args):
    a = fa.load_automaton(args.input)
    v = check_cone_axioms(a, _group(a))
    sys.stdout.write(format_verdict(v))
    return OK if v.is_cone else NO


def cmd_refute(args):
    a = fa.load_automaton(args.input)
    cfg = RefuteConfig(max_ball_radius=args.ball, max_t_search_length=args.tmax)
    try:
        v = pumping_witness(a, _group(a), cfg)
    except Inconclusive:
        print("inconclusive")
        return INCONCLUSIVE
    sys.stdout.write(format_verdict(v))
    return NO


def cmd_geo(args):
    G = load_graph(args.graph)
    if args.action == "check":
        ok = is_geodesic(G, word(args.word))
        print("true" if ok else "false")
        return OK if ok else NO
    if args.action == "build":
        a = geo_automaton(G)
        fa.save_automaton(a, args.output)
        print(f"states: {a.state_count}")
        return OK
    pair = theorem2_witness(G, word(args.word), args.t, args.u, args.x, args.y)
    for w in pair:
        print(f"{format_word(w)}\tgeodesic: {'true' if is_geodesic(G, w) else 'false'}")
    return OK


def cmd_z2_verify(args):
    a = fa.load_automaton(args.input)
    ok, pt = z2_bounded_verify(a, args.radius)
    print("pass" if ok else f"fail: {pt[0]} {pt[1]}")
    return OK if ok else NO


def _binary(op):
    def run(args):
        return _emit(op(fa.load_automaton(args.a), fa.load_automaton(args.b)), args.output)
    return run


def _unary(op):
    def run(args):
        return _emit(op(fa.load_automaton(args.a)), args.output)
    return run


def cmd_eq(args):
    same = fa.equivalent(fa.load_automaton(args.a), fa.load_automaton(args.b))
    print("true" if same else "false")
    return OK if same else NO


def cmd_enum(args):
    for w in fa.enumerate_words(fa.load_automaton(args.a), args.max_len):
        print(format_word(w))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="regcone", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", help="free reductions of a language (Benois)")
    s.add_argument("input")
    s.add_argument("output", nargs="?")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("cone-check", help="decide whether a language is a positive cone")
    s.add_argument("input")
    s.set_defaults(func=cmd_cone_check)

    s = sub.add_parser("refute", help="pumping-style refutation certificate")
    s.add_argument("input")
    s.add_argument("--ball", type=int, default=3, help="ball radius cap (default 3)")
    s.add_argument("--tmax", type=int, default=6, help="longest conjugator tried (default 6)")
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("geo", help="graph product geodesics")
    s.add_argument("graph")
    acts = s.add_subparsers(dest="action", required=True)
    c = acts.add_parser("check")
    c.add_argument("word")
    c = acts.add_parser("build")
    c.add_argument("output")
    c = acts.add_parser("witness")
    for name in ("word", "t", "u", "x", "y"):
        c.add_argument(name)
    s.set_defaults(func=cmd_geo)

    s = sub.add_parser("z2-verify", help="bounded check against the lexicographic cone of Z^2")
    s.add_argument("input")
    s.add_argument("--radius", type=int, default=4, help="box radius (default 4)")
    s.set_defaults(func=cmd_z2_verify)

    for name, op in (("and", fa.intersect), ("or", fa.union), ("cat", fa.concat)):
        s = sub.add_parser(name)
        s.add_argument("a")
        s.add_argument("b")
        s.add_argument("output", nargs="?")
        s.set_defaults(func=_binary(op))
    for name, op in (("not", fa.complement), ("star", fa.star), ("rev", fa.reverse),
                     ("pref", fa.prefix_closure)):
        s = sub.add_parser(name)
        s.add_argument("a")
        s.add_argument("output", nargs="?")
        s.set_defaults(func=_unary(op))

    s = sub.add_parser("eq")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("enum")
    s.add_argument("a")
    s.add_argument("--max-len", type=int, default=4)
    s.set_defaults(func=cmd_enum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except SearchExhausted as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
