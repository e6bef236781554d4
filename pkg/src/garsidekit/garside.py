"""The finite Garside structure of a recognized presentation.

Simple elements are the reversing-equivalence classes of the lcm closure
produced by the recognizer.  All lattice operations on simples are stored as
dense tables indexed by class number; arbitrary words go through reversing.

Orientation conventions: ``u\\v`` is the word ``z`` with ``u.z`` the right lcm
of ``u`` and ``v``; ``s`` left-divides ``x`` exactly when ``x\\s`` is empty.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .presentation import Presentation, ReversingFunction, SignedWord, Word, fraction, positive, shortlex_key
from .recognizer import RecognitionReport
from .reversing import (
    DEFAULT_FUEL,
    Blocked,
    Fuel,
    FuelExhausted,
    FuelExhaustedError,
    equiv_pp,
    over,
    reverse_left,
    reverse_right,
    under,
)


class StructureError(RuntimeError):
    """The witnesses do not assemble into a consistent Garside structure."""


@dataclass(frozen=True)
class GarsideStructure:
    presentation: Presentation
    simples: tuple[Word, ...]  # canonical word per class, shortlex order; index 0 is the identity
    delta_index: int
    atom_edges: dict[tuple[int, int], int]  # (simple, letter) -> simple
    star: tuple[int, ...]
    costar: tuple[int, ...]
    phi_letter: tuple[Word, ...]
    norm: tuple[int, ...]
    left_selector: ReversingFunction
    under_table: tuple[tuple[int, ...], ...]  # x\y
    join_table: tuple[tuple[int, ...], ...]  # right lcm
    meet_table: tuple[tuple[int, ...], ...]  # left gcd
    diagnostics: tuple[str, ...] = field(default=(), compare=False)

    # -- basic accessors ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.simples)

    @property
    def f(self) -> ReversingFunction:
        return self.presentation.f

    @property
    def delta(self) -> Word:
        return self.simples[self.delta_index]

    @property
    def identity(self) -> int:
        return 0

    def word_of(self, index: int) -> Word:
        return self.simples[index]

    def letter_class(self, a: int) -> int:
        return self.atom_edges[(0, a)]

    def class_of(self, w: Word) -> int | None:
        """Index of the simple represented by ``w``, None when ``w`` is not
        simple.  Walks the atom edges, since every prefix of a simple word is
        simple."""
        s = 0
        for a in w:
            s = self.atom_edges.get((s, a))
            if s is None:
                return None
        return s

    # -- lattice on simples --------------------------------------------------

    def under(self, x: int, y: int) -> int:
        return self.under_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def left_divides(self, x: int, y: int) -> bool:
        return self.under_table[y][x] == 0

    def phi(self, x: int) -> int:
        return self.star[self.star[x]]

    def phi_inverse(self, x: int) -> int:
        return self.costar[self.costar[x]]

    def over(self, x: int, y: int) -> int:
        """x/y, from x/y = (*x ^ *y)\\*y."""
        cx, cy = self.costar[x], self.costar[y]
        return self.under_table[self.meet_table[cx][cy]][cy]

    def left_join(self, x: int, y: int) -> int:
        """Left lcm, (*x ^ *y)*."""
        return self.star[self.meet_table[self.costar[x]][self.costar[y]]]

    def right_meet(self, x: int, y: int) -> int:
        """Right gcd, (*x v *y)*."""
        return self.star[self.join_table[self.costar[x]][self.costar[y]]]

    def right_divides(self, x: int, y: int) -> bool:
        return self.left_join(x, y) == y

    def join_all(self, xs) -> int:
        out = 0
        for x in xs:
            out = self.join_table[out][x]
        return out

    # -- words -----------------------------------------------------------------

    def is_simple(self, w: Word, fuel: Fuel = DEFAULT_FUEL) -> bool:
        return under(self.delta, w, self.f, fuel) == ()

    def phi_word(self, w: Word) -> Word:
        return tuple(c for a in w for c in self.phi_letter[a])

    def fmt(self, index: int) -> str:
        return self.presentation.fmt(self.simples[index]) or "ε"


# -- construction ---------------------------------------------------------------


def _classes(words, f, fuel) -> list[list[Word]]:
    classes: list[list[Word]] = []
    for w in sorted(set(words), key=shortlex_key):
        for cls in classes:
            if equiv_pp(cls[0], w, f, fuel):
                cls.append(w)
                break
        else:
            classes.append([w])
    return classes


def build_structure(
    p: Presentation, report: RecognitionReport, fuel: Fuel = DEFAULT_FUEL
) -> GarsideStructure:
    if not report.is_garside:
        raise ValueError(f"presentation was not recognized as Garside ({report.verdict})")
    f = p.f
    classes = _classes(report.lcm_closure, f, fuel)
    simples = tuple(cls[0] for cls in classes)
    if simples[0] != ():
        raise StructureError("the empty word is not the least simple")
    n = len(simples)
    omega = report.omega
    delta_index = next(i for i, cls in enumerate(classes) if omega in cls)
    delta = simples[delta_index]

    # atom edges: x.a is simple iff it left-divides delta
    edges: dict[tuple[int, int], int] = {}
    for i, s in enumerate(simples):
        for a in range(len(p.alphabet)):
            w = s + (a,)
            if under(delta, w, f, fuel) != ():
                continue
            match = [j for j, t in enumerate(simples) if equiv_pp(w, t, f, fuel)]
            if len(match) != 1:
                raise StructureError(f"{p.fmt(w)} is simple but matches {len(match)} classes")
            edges[(i, a)] = match[0]

    def lookup(w: Word) -> int:
        s = 0
        for a in w:
            nxt = edges.get((s, a))
            if nxt is None:
                raise StructureError(f"{p.fmt(w) or 'ε'} does not represent a simple")
            s = nxt
        return s

    under_rows = []
    for x in simples:
        row = []
        for y in simples:
            c = under(x, y, f, fuel)
            if c is None:
                raise StructureError(f"{p.fmt(x)}\\{p.fmt(y)} is undefined")
            row.append(lookup(c))
        under_rows.append(tuple(row))
    under_table = tuple(under_rows)
    join_table = tuple(
        tuple(lookup(simples[x] + simples[under_table[x][y]]) for y in range(n)) for x in range(n)
    )

    divides = [[under_table[y][x] == 0 for y in range(n)] for x in range(n)]
    meet_rows = []
    for x in range(n):
        row = []
        for y in range(n):
            m = 0
            for s in range(n):
                if divides[s][x] and divides[s][y]:
                    m = join_table[m][s]
            row.append(m)
        meet_rows.append(tuple(row))
    meet_table = tuple(meet_rows)

    star = tuple(under_table[x][delta_index] for x in range(n))
    if len(set(star)) != n:
        raise StructureError("x -> x\\delta is not a permutation of the simples")
    costar_list = [0] * n
    for x, y in enumerate(star):
        costar_list[y] = x
    costar = tuple(costar_list)

    # longest path from the identity in the atom-edge DAG
    norm = [0] * n
    order = sorted(range(n), key=lambda i: (len(simples[i]), simples[i]))
    indeg = [0] * n
    succ: dict[int, list[int]] = {}
    for (s, _a), t in edges.items():
        succ.setdefault(s, []).append(t)
        indeg[t] += 1
    ready = [i for i in order if indeg[i] == 0]
    seen = 0
    while ready:
        s = ready.pop(0)
        seen += 1
        for t in sorted(succ.get(s, ())):
            norm[t] = max(norm[t], norm[s] + 1)
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
    if seen != n:
        raise StructureError("atom edges contain a cycle")

    letters = [edges[(0, a)] for a in range(len(p.alphabet))]
    phi_letter = tuple(simples[star[star[c]]] for c in letters)

    diagnostics = []
    for a, b in f:
        if f[(a, b)] == ():
            diagnostics.append(
                f"f({p.alphabet.letters[a]},{p.alphabet.letters[b]}) is empty: "
                f"{p.alphabet.letters[b]} left-divides {p.alphabet.letters[a]}"
            )

    g = GarsideStructure(
        presentation=p,
        simples=simples,
        delta_index=delta_index,
        atom_edges=dict(sorted(edges.items())),
        star=star,
        costar=costar,
        phi_letter=phi_letter,
        norm=tuple(norm),
        left_selector=ReversingFunction({}),
        under_table=under_table,
        join_table=join_table,
        meet_table=meet_table,
        diagnostics=tuple(diagnostics),
    )
    object.__setattr__(g, "left_selector", derive_left_selector(g))
    return g


def derive_left_selector(g: GarsideStructure) -> ReversingFunction:
    """f~(a,b) = a/b on letters, taken from the lattice of simples."""
    table = {}
    for a, b in g.f:
        table[(a, b)] = g.simples[g.over(g.letter_class(a), g.letter_class(b))]
    return ReversingFunction(table)


def structure_of(p: Presentation, budgets=None) -> GarsideStructure:
    """Recognize ``p`` and build its structure; raises ValueError when the
    recognizer does not answer Garside."""
    from .recognizer import Budgets, recognize

    budgets = budgets or Budgets()
    return build_structure(p, recognize(p, budgets), budgets.fuel)


# -- general words ----------------------------------------------------------------


def _ok(out):
    if isinstance(out, FuelExhausted):
        raise FuelExhaustedError(out.steps)
    if isinstance(out, Blocked):
        return None
    return out


def lcm_right(u: Word, v: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    c = under(u, v, g.f, fuel)
    return None if c is None else tuple(u) + c


def lcm_left(u: Word, v: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    c = over(u, v, g.left_selector, fuel)
    return None if c is None else c + tuple(v)


def gcd_left(u: Word, v: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    """(u v v) / ((u\\v) v~ (v\\u)), by three reversings."""
    uv = under(u, v, g.f, fuel)
    vu = under(v, u, g.f, fuel)
    if uv is None or vu is None:
        return None
    m = tuple(u) + uv
    left = lcm_left(uv, vu, g, fuel)
    if left is None:
        return None
    return over(m, left, g.left_selector, fuel)


def gcd_right(u: Word, v: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    """Mirror of gcd_left: ((u/v) v (v/u)) \\ (u v~ v)."""
    uv = over(u, v, g.left_selector, fuel)
    vu = over(v, u, g.left_selector, fuel)
    if uv is None or vu is None:
        return None
    m = uv + tuple(v)
    right = lcm_right(uv, vu, g, fuel)
    if right is None:
        return None
    return under(right, m, g.f, fuel)


class Side(enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"


@dataclass(frozen=True)
class Fraction:
    """Left: the element D^-1 N.  Right: the element N D^-1."""

    denominator: Word
    numerator: Word
    side: Side = Side.LEFT

    @property
    def is_trivial(self) -> bool:
        return not self.denominator and not self.numerator


def reduce_fraction_left(w: SignedWord, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> Fraction:
    """w -> v u^-1 by right reversing, then v u^-1 -> u'^-1 v' to the left."""
    first = _ok(reverse_right(w, g.f, fuel))
    if first is None:
        raise StructureError("right reversing blocked on a Garside presentation")
    second = _ok(reverse_left(fraction(first.positive_part, first.negative_part), g.left_selector, fuel))
    if second is None:
        raise StructureError("left reversing blocked on a Garside presentation")
    return Fraction(second.negative_part, second.positive_part, Side.LEFT)


def reduce_fraction_right(w: SignedWord, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> Fraction:
    """w -> u^-1 v to the left, then u^-1 v -> v' u'^-1 to the right."""
    first = _ok(reverse_left(w, g.left_selector, fuel))
    if first is None:
        raise StructureError("left reversing blocked on a Garside presentation")
    den, num = first.negative_part, first.positive_part
    word = tuple((a, -1) for a in reversed(den)) + positive(num)
    second = _ok(reverse_right(word, g.f, fuel))
    if second is None:
        raise StructureError("right reversing blocked on a Garside presentation")
    return Fraction(second.negative_part, second.positive_part, Side.RIGHT)


def word_problem_monoid(u: Word, v: Word, g, fuel: Fuel = DEFAULT_FUEL) -> bool:
    f = g.f if isinstance(g, (GarsideStructure, Presentation)) else g
    return equiv_pp(u, v, f, fuel)


def word_problem_group(w: SignedWord, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> bool:
    """True iff ``w`` represents 1 in the group of fractions."""
    return reduce_fraction_left(w, g, fuel).is_trivial
