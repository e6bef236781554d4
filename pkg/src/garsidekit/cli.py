"""Command-line front end.

Exit codes: 0 success (Garside / true / converged), 1 negative answer
(Rejected / false / blocked), 2 budget exhausted or inconclusive, 3 input
error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import automata, garside, normalform, oracle, recognizer, reversing
from .presentation import PresentationError, WordParseError, fraction, load_presentation, relations_of

EXIT_OK, EXIT_NO, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors too
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class BudgetError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    fuel: reversing.Fuel
    closure_cap: int
    jobs: int
    fmt: str

    @property
    def budgets(self) -> recognizer.Budgets:
        return recognizer.Budgets(self.fuel, self.closure_cap, self.jobs)


def _config(args, default_cap: int = 10_000) -> CliConfig:
    fuel = reversing.Fuel(args.max_steps, args.max_word_len)
    cap = args.cap if args.cap is not None else default_cap
    return CliConfig(fuel, cap, args.jobs, args.format)


def _emit(config: CliConfig, payload: dict, text: str) -> None:
    if config.fmt == "json":
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(text)


def _load(path: str):
    try:
        return load_presentation(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except PresentationError as exc:
        raise InputError(str(exc)) from None


def _word(p, text: str, signed: bool = False):
    try:
        return p.signed(text) if signed else p.word(text)
    except WordParseError as exc:
        raise InputError(f"bad word {text!r}: {exc}") from None


def _structure(p, config: CliConfig) -> garside.GarsideStructure:
    report = recognizer.recognize(p, config.budgets)
    if report.verdict == "Inconclusive":
        raise BudgetError(f"recognition inconclusive at stage {report.stage} ({report.reason})")
    if not report.is_garside:
        raise InputError(f"presentation is not recognized as Garside: {report.reason}")
    return garside.build_structure(p, report, config.fuel)


# -- commands ---------------------------------------------------------------------


def cmd_recognize(args) -> int:
    config = _config(args)
    p = _load(args.file)
    report = recognizer.recognize(p, config.budgets)
    payload = report.to_json(p)
    lines = [f"verdict: {report.verdict}"]
    if report.reason:
        lines.append(f"reason: {report.reason}")
    if report.stage:
        lines.append(f"stage: {report.stage}")
    lines.append("closure: " + " ".join(p.fmt(w) or "ε" for w in report.closure or ()))
    if report.lcm_closure is not None:
        lines.append("lcm closure: " + " ".join(p.fmt(w) or "ε" for w in report.lcm_closure))
    if report.omega is not None:
        lines.append(f"omega: {p.fmt(report.omega)}")
    shortcut = recognizer.check_homogeneous_shortcut(p, config.fuel)
    if isinstance(shortcut, recognizer.Applies):
        holds = shortcut.cube_on_letters.holds
        payload["homogeneous_shortcut"] = {"applies": True, "cube_on_letters": holds}
        lines.append(f"homogeneous shortcut: applies, cube on letters {'holds' if holds else 'fails'}")
    _emit(config, payload, "\n".join(lines))
    return {"Garside": EXIT_OK, "Rejected": EXIT_NO}.get(report.verdict, EXIT_BUDGET)


def cmd_reverse(args) -> int:
    config = _config(args)
    p = _load(args.file)
    w = _word(p, args.word, signed=True)
    if args.left:
        g = _structure(p, config)
        out = reversing.reverse_left(w, g.left_selector, config.fuel)
    else:
        out = reversing.reverse_right(w, p.f, config.fuel)
    side = "left" if args.left else "right"
    if isinstance(out, reversing.Converged):
        pos, neg = out.positive_part, out.negative_part
        if args.left:
            final = tuple((a, -1) for a in reversed(neg)) + tuple((a, 1) for a in pos)
        else:
            final = fraction(pos, neg)
        payload = {
            "direction": side,
            "status": "converged",
            "positive": p.fmt(pos),
            "negative": p.fmt(neg),
            "word": p.fmt_signed(final),
            "steps": out.steps,
        }
        text = f"{p.fmt_signed(final) or 'ε'}\npositive: {p.fmt(pos) or 'ε'}\nnegative: {p.fmt(neg) or 'ε'}\nsteps: {out.steps}"
        code = EXIT_OK
    elif isinstance(out, reversing.Blocked):
        a, b = (p.alphabet.letters[c] for c in out.pair)
        payload = {"direction": side, "status": "blocked", "pair": [a, b], "steps": out.steps}
        text = f"blocked: f({a},{b}) undefined after {out.steps} steps"
        code = EXIT_NO
    else:
        payload = {"direction": side, "status": "fuel", "steps": out.steps}
        text = f"fuel exhausted after {out.steps} steps"
        code = EXIT_BUDGET

    if args.show_grid or args.dot:
        k = 0
        while k < len(w) and w[k][1] < 0:
            k += 1
        if args.left or any(s < 0 for _, s in w[k:]):
            raise InputError("grids are drawn for right reversing of words shaped u'v")
        u = tuple(a for a, _ in reversed(w[:k]))
        v = tuple(a for a, _ in w[k:])
        grid = reversing.capture_grid(u, v, p.f, config.fuel)
        if args.show_grid:
            text += "\n" + reversing.grid_to_ascii(grid, p)
        if args.dot:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(reversing.grid_to_dot(grid, p))
    _emit(config, payload, text)
    return code


def cmd_word_problem(args) -> int:
    config = _config(args)
    p = _load(args.file)
    if args.word2 is None:
        g = _structure(p, config)
        w = _word(p, args.word1, signed=True)
        fr = garside.reduce_fraction_left(w, g, config.fuel)
        answer = fr.is_trivial
        payload = {
            "kind": "group",
            "trivial": answer,
            "denominator": p.fmt(fr.denominator),
            "numerator": p.fmt(fr.numerator),
        }
        text = "trivial" if answer else f"nontrivial: ({p.fmt(fr.denominator) or 'ε'})^-1 {p.fmt(fr.numerator) or 'ε'}"
    else:
        u, v = _word(p, args.word1), _word(p, args.word2)
        answer = reversing.equiv_pp(u, v, p.f, config.fuel)
        payload = {"kind": "monoid", "equal": answer}
        text = "equal" if answer else "different"
        if args.oracle is not None:
            radius = max(args.oracle, len(u), len(v))
            ball = oracle.build_ball(p, radius)
            check = oracle.oracle_equal(u, v, ball)
            payload["oracle"] = {"radius": radius, "equal": check}
            text += f"\noracle (radius {radius}): {'equal' if check else 'different'}"
    _emit(config, payload, text)
    return EXIT_OK if answer else EXIT_NO


def _fmt_nf(nf: normalform.MixedNormalForm, g) -> str:
    neg = " ".join(f"({g.fmt(x)})^-1" for x in reversed(nf.negative_factors))
    pos = " ".join(g.fmt(x) for x in nf.positive_factors)
    return f"{neg} | {pos}".strip()


def cmd_nf(args) -> int:
    config = _config(args)
    p = _load(args.file)
    g = _structure(p, config)
    w = _word(p, args.word, signed=True)
    nf = normalform.mixed_nf(w, g, config.fuel)
    payload = {
        "negative": [g.fmt(x) for x in nf.negative_factors],
        "positive": [g.fmt(x) for x in nf.positive_factors],
    }
    text = _fmt_nf(nf, g) or "|"
    if args.right:
        if any(s < 0 for _, s in w):
            raise InputError("--right needs a positive word")
        rnf = normalform.right_nf(tuple(a for a, _ in w), g, config.fuel)
        payload["right"] = [g.fmt(x) for x in rnf]
        text += "\nright: " + " ".join(g.fmt(x) for x in rnf)
    _emit(config, payload, text)
    return EXIT_OK


_OPS = {
    "lcm-right": lambda u, v, g, fuel: garside.lcm_right(u, v, g, fuel),
    "lcm-left": lambda u, v, g, fuel: garside.lcm_left(u, v, g, fuel),
    "gcd-left": lambda u, v, g, fuel: garside.gcd_left(u, v, g, fuel),
    "gcd-right": lambda u, v, g, fuel: garside.gcd_right(u, v, g, fuel),
    "under": lambda u, v, g, fuel: reversing.under(u, v, g.f, fuel),
    "over": lambda u, v, g, fuel: reversing.over(u, v, g.left_selector, fuel),
}


def cmd_lcm_gcd(args) -> int:
    config = _config(args)
    p = _load(args.file)
    g = _structure(p, config)
    u, v = _word(p, args.u), _word(p, args.v)
    result = _OPS[args.op](u, v, g, config.fuel)
    payload = {"op": args.op, "result": None if result is None else p.fmt(result)}
    _emit(config, payload, "⊥" if result is None else (p.fmt(result) or "ε"))
    return EXIT_OK if result is not None else EXIT_NO


def cmd_simples(args) -> int:
    config = _config(args)
    p = _load(args.file)
    g = _structure(p, config)
    rows = []
    lines = [f"{'simple':>12} {'star':>12} {'costar':>12} norm"]
    for i in range(len(g)):
        rows.append({"word": g.fmt(i), "star": g.fmt(g.star[i]), "costar": g.fmt(g.costar[i]), "norm": g.norm[i]})
        lines.append(f"{g.fmt(i):>12} {g.fmt(g.star[i]):>12} {g.fmt(g.costar[i]):>12} {g.norm[i]}")
    lines.append(f"delta: {g.fmt(g.delta_index)}  ({len(g)} simples)")
    lines.extend(f"note: {d}" for d in g.diagnostics)
    payload = {"delta": g.fmt(g.delta_index), "simples": rows, "diagnostics": list(g.diagnostics)}
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(automata.export_dot(automata.build_char_graph(g)))
    _emit(config, payload, "\n".join(lines))
    return EXIT_OK


def cmd_automaton(args) -> int:
    config = _config(args)
    p = _load(args.file)
    g = _structure(p, config)
    if args.kind == "right-transducer":
        machine = automata.build_right_transducer(g)
        payload = {"kind": args.kind, "states": len(g)}
    elif args.kind == "left-gcd":
        machine = automata.build_left_gcd_automaton(g)
        payload = {
            "kind": args.kind,
            "primitives": [g.fmt(x) for x in machine.primitives],
            "states": len(machine.states),
        }
    else:
        machine = automata.build_char_graph(g)
        payload = {"kind": args.kind, "states": len(g), "edges": len(machine.edges)}
    dot = automata.export_dot(machine)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    if config.fmt == "dot":
        sys.stdout.write(dot)
    else:
        text = "\n".join(f"{k}: {' '.join(v) if isinstance(v, list) else v}" for k, v in payload.items())
        _emit(config, payload, text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    config = _config(args, default_cap=recognizer.ENUMERATION_BUDGETS.closure_cap)
    found = []
    for p, report in recognizer.enumerate_presentations(args.n, args.length, config.budgets):
        rels = [f"{p.fmt(l)} = {p.fmt(r)}" for l, r in relations_of(p)]
        found.append({"relations": rels, "omega": p.fmt(report.omega), "simples_upper_bound": len(report.lcm_closure)})
        if config.fmt != "json":
            print("; ".join(rels) if rels else "(no relations)", flush=True)
    if config.fmt == "json":
        print(json.dumps({"n": args.n, "max_len": args.length, "presentations": found}, ensure_ascii=False, indent=2))
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-steps", type=int, default=reversing.DEFAULT_FUEL.max_steps,
                        help="reversing steps allowed per reversal")
    common.add_argument("--max-word-len", type=int, default=reversing.DEFAULT_FUEL.max_word_len,
                        help="longest intermediate word allowed during reversing")
    common.add_argument("--cap", type=int, default=None,
                        help="closure size cap (default 10000, 200 for enumerate)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the cube check")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="garsidekit", description="Word reversing and Garside monoids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("recognize", parents=[common], help="run the Garside recognizer")
    s.add_argument("file")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("reverse", parents=[common], help="reverse a signed word")
    s.add_argument("file")
    s.add_argument("word", help="signed word, e.g. a'baa")
    s.add_argument("--left", action="store_true", help="left reversing with the derived left selector")
    s.add_argument("--show-grid", action="store_true")
    s.add_argument("--dot", metavar="OUT", help="write the reversing grid as DOT")
    s.set_defaults(func=cmd_reverse)

    s = sub.add_parser("word-problem", parents=[common], help="decide equality of words")
    s.add_argument("file")
    s.add_argument("word1")
    s.add_argument("word2", nargs="?")
    s.add_argument("--oracle", type=int, metavar="RADIUS", default=None,
                   help="cross-check a monoid answer by brute force")
    s.set_defaults(func=cmd_word_problem)

    s = sub.add_parser("nf", parents=[common], help="mixed normal form of a signed word")
    s.add_argument("file")
    s.add_argument("word")
    s.add_argument("--right", action="store_true", help="also print the right normal form")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("lcm-gcd", parents=[common], help="lcm, gcd and complements of two words")
    s.add_argument("file")
    s.add_argument("op", choices=sorted(_OPS))
    s.add_argument("u")
    s.add_argument("v")
    s.set_defaults(func=cmd_lcm_gcd)

    s = sub.add_parser("simples", parents=[common], help="table of simple elements")
    s.add_argument("file")
    s.add_argument("--dot", metavar="OUT", help="write the characteristic graph as DOT")
    s.set_defaults(func=cmd_simples)

    s = sub.add_parser("automaton", parents=[common], help="build a normal-form automaton")
    s.add_argument("file")
    s.add_argument("--kind", choices=("right-transducer", "left-gcd", "char-graph"), default="right-transducer")
    s.add_argument("--dot", metavar="OUT")
    s.set_defaults(func=cmd_automaton)

    s = sub.add_parser("enumerate", parents=[common], help="search small complemented presentations")
    s.add_argument("n", type=int, help="number of letters")
    s.add_argument("length", type=int, help="maximal complement length")
    s.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, PresentationError, WordParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetError, reversing.FuelExhaustedError) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except oracle.BallTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
