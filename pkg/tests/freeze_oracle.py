"""Regenerate tests/data/oracle_radius6.json from the brute-force oracle.

Run by hand (``python3 tests/freeze_oracle.py``); the test suite only reads
the frozen file.
"""

import json
from pathlib import Path

from garsidekit.oracle import build_ball
from garsidekit.presentation import Presentation

RADIUS = 6
PRESENTATIONS = {
    "P1": [("aba", "bb")],
    "P2": [("aba", "bab")],
    "P4": [("ab", "ba")],
    "P5": [("aa", "bb")],
}


def freeze(relations):
    p = Presentation.from_relations("ab", relations)
    ball = build_ball(p, RADIUS)
    short = list(p.alphabet.words(RADIUS))
    rep = {p.fmt(w): p.fmt(ball.rep(w)) for w in short}
    classes = sorted({ball.class_of[w] for w in short})
    divisors = {
        p.fmt(ball.classes[c][0]): sorted(p.fmt(ball.classes[d][0]) for d in ball.divisors[c])
        for c in classes
    }
    return {
        "relations": [list(r) for r in relations],
        "radius": RADIUS,
        "slack": ball.slack,
        "rep": rep,
        "divisors": divisors,
    }


def main():
    data = {name: freeze(rels) for name, rels in PRESENTATIONS.items()}
    out = Path(__file__).parent / "data" / "oracle_radius6.json"
    out.write_text(json.dumps(data, indent=1, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
