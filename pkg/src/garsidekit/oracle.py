"""Brute-force reference answers on small balls of positive words.

Equality classes are built by union-find over single relation applications
in both directions, allowing intermediate words up to ``radius + slack``.
Nothing here uses reversing; the module exists to certify the reversing
based algorithms on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import Presentation, Word, relations_of, shortlex_key


class DisjointSet:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


class BallTooLarge(RuntimeError):
    pass


@dataclass
class Ball:
    radius: int
    slack: int
    class_of: dict[Word, int]  # every word of length <= radius + slack
    classes: list[list[Word]]  # shortlex-sorted members; classes[i][0] is the representative
    divisors: list[set[int]]  # left divisors of each class (within the ball)

    def rep(self, word: Word) -> Word:
        return self.classes[self.class_of[word]][0]


def build_ball(p: Presentation, radius: int, slack: int | None = None, max_words: int = 2_000_000) -> Ball:
    """Equality classes of all words of length <= radius + slack.

    Answers are meant for words of length <= radius; longer words only serve
    as intermediate steps and as extra class members.
    """
    rels = relations_of(p)
    if slack is None:
        slack = max((max(len(l), len(r)) for l, r in rels), default=0)
    limit = radius + slack
    n = len(p.alphabet)
    total = sum(n**k for k in range(limit + 1))
    if total > max_words:
        raise BallTooLarge(f"{total} words exceed the cap of {max_words}")
    rules = [(l, r) for l, r in rels] + [(r, l) for l, r in rels]
    ds = DisjointSet()
    words = list(p.alphabet.words(limit))
    for w in words:
        ds.add(w)
    for w in words:
        for lhs, rhs in rules:
            k = len(lhs)
            for i in range(len(w) - k + 1):
                if w[i : i + k] == lhs:
                    v = w[:i] + rhs + w[i + k :]
                    if len(v) <= limit:
                        ds.union(w, v)
    # classes cover the whole window so that divisors are read off every
    # member, including those longer than the radius
    groups: dict = {}
    for w in words:
        groups.setdefault(ds.find(w), []).append(w)
    classes = sorted((sorted(g, key=shortlex_key) for g in groups.values()), key=lambda g: shortlex_key(g[0]))
    class_of = {w: i for i, g in enumerate(classes) for w in g}
    divisors = []
    for g in classes:
        divs = set()
        for w in g:
            for k in range(len(w) + 1):
                divs.add(class_of[w[:k]])
        divisors.append(divs)
    return Ball(radius, slack, class_of, classes, divisors)


def oracle_equal(u: Word, v: Word, ball: Ball) -> bool:
    return ball.class_of[tuple(u)] == ball.class_of[tuple(v)]


def oracle_left_divides(u: Word, v: Word, ball: Ball) -> bool:
    """u left-divides v: some word of v's class (within the ball) starts with
    a word of u's class."""
    return ball.class_of[tuple(u)] in ball.divisors[ball.class_of[tuple(v)]]


def oracle_lcm_right(u: Word, v: Word, ball: Ball) -> Word | None:
    """Representative of the right lcm, None when no least common multiple
    shows up inside the ball (caller treats that as inconclusive)."""
    cu, cv = ball.class_of[tuple(u)], ball.class_of[tuple(v)]
    common = [c for c, divs in enumerate(ball.divisors) if cu in divs and cv in divs]
    for m in common:
        if all(m in ball.divisors[c] for c in common):
            return ball.classes[m][0]
    return None


def oracle_gcd_left(u: Word, v: Word, ball: Ball) -> Word:
    cu, cv = ball.class_of[tuple(u)], ball.class_of[tuple(v)]
    common = ball.divisors[cu] & ball.divisors[cv]
    for d in sorted(common):
        if all(c in ball.divisors[d] for c in common):
            return ball.classes[d][0]
    raise AssertionError("no greatest common left divisor inside the ball")


def oracle_left_divisors(u: Word, ball: Ball) -> list[Word]:
    return [ball.classes[c][0] for c in sorted(ball.divisors[ball.class_of[tuple(u)]])]
