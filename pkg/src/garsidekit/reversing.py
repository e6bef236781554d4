"""Word reversing for complemented presentations.

Right reversing replaces a factor ``a^-1 b`` by ``f(a,b) f(b,a)^-1``; left
reversing replaces ``a b^-1`` by ``g(b,a)^-1 g(a,b)`` for a left selector
``g``.  Every routine is bounded by a :class:`Fuel` budget.  An undefined
``f(a,b)`` is not an error: it yields a :class:`Blocked` outcome, and the
derived helpers return ``None`` for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import Presentation, ReversingFunction, SignedWord, Word


@dataclass(frozen=True)
class Fuel:
    max_steps: int = 10**6
    max_word_len: int = 10**4

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_word_len <= 0:
            raise ValueError("fuel budgets must be strictly positive")


DEFAULT_FUEL = Fuel()


@dataclass(frozen=True)
class Converged:
    """Final word ``positive_part . negative_part^-1`` (right reversing) or
    ``negative_part^-1 . positive_part`` (left reversing)."""

    positive_part: Word
    negative_part: Word
    steps: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Blocked:
    pair: tuple[int, int]
    steps: int = field(default=0, compare=False)


@dataclass(frozen=True)
class FuelExhausted:
    steps: int


ReversalOutcome = Converged | Blocked | FuelExhausted


class FuelExhaustedError(RuntimeError):
    def __init__(self, steps: int, what: str = "reversing"):
        self.steps = steps
        super().__init__(f"{what} ran out of fuel after {steps} steps")


def _table(f) -> ReversingFunction:
    return f.f if isinstance(f, Presentation) else f


def _reverse_ints(syllables: list[int], f: ReversingFunction, fuel: Fuel) -> ReversalOutcome:
    # Letters are encoded as +(i+1) / -(i+1).  `left` never contains a
    # negative-positive frontier, so the junction left[-1] / pending[-1] is
    # always the leftmost one.
    pending = syllables[::-1]
    left: list[int] = []
    steps = 0
    lookup = f.lookup
    max_len = fuel.max_word_len
    while pending:
        x = pending.pop()
        if x > 0 and left and left[-1] < 0:
            a = -left.pop() - 1
            b = x - 1
            fab = lookup(a, b)
            fba = lookup(b, a)
            if fab is None or fba is None:
                return Blocked((a, b), steps)
            steps += 1
            if steps > fuel.max_steps:
                return FuelExhausted(steps - 1)
            for c in fba:
                pending.append(-c - 1)
            for c in reversed(fab):
                pending.append(c + 1)
            if len(pending) + len(left) > max_len:
                return FuelExhausted(steps)
        else:
            left.append(x)
    k = 0
    while k < len(left) and left[k] > 0:
        k += 1
    pos = tuple(c - 1 for c in left[:k])
    neg = tuple(-c - 1 for c in reversed(left[k:]))
    return Converged(pos, neg, steps)


def _encode(w: SignedWord) -> list[int]:
    return [(a + 1) * s for a, s in w]


def reverse_right(w: SignedWord, f, fuel: Fuel = DEFAULT_FUEL) -> ReversalOutcome:
    """Right-reverse ``w`` always at the leftmost ``a^-1 b`` factor.

    A converged result ``Converged(v, u)`` stands for the word ``v u^-1``.
    """
    return _reverse_ints(_encode(w), _table(f), fuel)


def _mirror_table(g: ReversingFunction) -> ReversingFunction:
    return ReversingFunction({(a, b): tuple(reversed(g[(b, a)])) for a, b in g})


_MIRRORS: dict[ReversingFunction, ReversingFunction] = {}


def _mirrored(g: ReversingFunction) -> ReversingFunction:
    m = _MIRRORS.get(g)
    if m is None:
        m = _MIRRORS[g] = _mirror_table(g)
    return m


def reverse_left(w: SignedWord, g, fuel: Fuel = DEFAULT_FUEL) -> ReversalOutcome:
    """Left-reverse ``w`` with the left selector ``g``.

    Implemented as right reversing of the mirror word; a converged result
    ``Converged(v, u)`` stands for ``u^-1 v``.
    """
    mirror = [(a + 1) * s for a, s in reversed(w)]
    out = _reverse_ints(mirror, _mirrored(_table(g)), fuel)
    if isinstance(out, Converged):
        return Converged(out.positive_part[::-1], out.negative_part[::-1], out.steps)
    if isinstance(out, Blocked):
        a, b = out.pair
        return Blocked((b, a), out.steps)
    return out


def right_complement(u: Word, v: Word, f, fuel: Fuel = DEFAULT_FUEL) -> ReversalOutcome:
    """Reverse ``u^-1 v``; on success positive_part is ``u\\v`` and
    negative_part is ``v\\u``."""
    w = tuple((a, -1) for a in reversed(u)) + tuple((a, 1) for a in v)
    return reverse_right(w, f, fuel)


def left_complement(u: Word, v: Word, g, fuel: Fuel = DEFAULT_FUEL) -> ReversalOutcome:
    """Reverse ``u v^-1`` to the left; on success positive_part is ``u/v``
    and negative_part is ``v/u``."""
    w = tuple((a, 1) for a in u) + tuple((a, -1) for a in reversed(v))
    return reverse_left(w, g, fuel)


def _unwrap(out: ReversalOutcome, what: str):
    if isinstance(out, FuelExhausted):
        raise FuelExhaustedError(out.steps, what)
    if isinstance(out, Blocked):
        return None
    return out


def under(u: Word, v: Word, f, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    """The word ``u\\v``, or None when undefined."""
    out = _unwrap(right_complement(u, v, f, fuel), "right complement")
    return None if out is None else out.positive_part


def over(u: Word, v: Word, g, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    """The word ``u/v`` for the left selector ``g``, or None."""
    out = _unwrap(left_complement(u, v, g, fuel), "left complement")
    return None if out is None else out.positive_part


def right_lcm_word(u: Word, v: Word, f, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    c = under(u, v, f, fuel)
    return None if c is None else tuple(u) + c


def left_lcm_word(u: Word, v: Word, g, fuel: Fuel = DEFAULT_FUEL) -> Word | None:
    c = over(u, v, g, fuel)
    return None if c is None else c + tuple(v)


def equiv_pp(u: Word, v: Word, f, fuel: Fuel = DEFAULT_FUEL) -> bool:
    """True iff ``u^-1 v`` reverses to the empty word.

    Raises FuelExhaustedError rather than answering False on budget hits.
    """
    out = _unwrap(right_complement(u, v, f, fuel), "equivalence test")
    return out is not None and not out.positive_part and not out.negative_part


def equiv_words(u: Word | None, v: Word | None, f, fuel: Fuel = DEFAULT_FUEL) -> bool:
    """equiv_pp extended to None (undefined): None matches only None."""
    if u is None or v is None:
        return u is None and v is None
    return equiv_pp(u, v, f, fuel)


# -- grids -------------------------------------------------------------


@dataclass
class GridCell:
    left: Word
    top: Word
    bottom: Word | None = None
    right: Word | None = None


@dataclass
class ReversingGrid:
    """Cells of the reversing diagram of ``u^-1 v``.

    Row i starts with the i-th letter of ``u`` on its left edge, column j
    with the j-th letter of ``v`` on its top edge.  ``status`` is
    ``"converged"``, ``"blocked"`` or ``"fuel"``; on failure cells past the
    failing one keep ``bottom``/``right`` set to None.
    """

    u: Word
    v: Word
    cells: list[list[GridCell]]
    status: str = "converged"
    steps: int = 0

    @property
    def bottom(self) -> Word:
        if not self.cells:
            return tuple(self.v)
        return tuple(c for cell in self.cells[-1] for c in (cell.bottom or ()))

    @property
    def right(self) -> Word:
        if not self.v:
            return tuple(self.u)
        return tuple(c for row in self.cells for c in (row[-1].right or ()))


def capture_grid(u: Word, v: Word, f, fuel: Fuel = DEFAULT_FUEL) -> ReversingGrid:
    f = _table(f)
    cells = [[GridCell((a,), ()) for _ in v] for a in u]
    grid = ReversingGrid(tuple(u), tuple(v), cells)
    tops: list[Word] = [(b,) for b in v]
    budget = fuel.max_steps
    for i, a in enumerate(u):
        left: Word = (a,)
        for j in range(len(v)):
            cell = cells[i][j]
            cell.left, cell.top = left, tops[j]
            remaining = Fuel(max(1, budget - grid.steps), fuel.max_word_len)
            out = right_complement(left, tops[j], f, remaining)
            if isinstance(out, Blocked):
                grid.status = "blocked"
                return grid
            if isinstance(out, FuelExhausted) or grid.steps + out.steps > budget:
                grid.status = "fuel"
                return grid
            grid.steps += out.steps
            cell.bottom, cell.right = out.positive_part, out.negative_part
            tops[j] = out.positive_part
            left = out.negative_part
    return grid


def grid_to_ascii(grid: ReversingGrid, p: Presentation) -> str:
    lines = [f"grid {len(grid.u)}x{len(grid.v)} ({grid.status}, {grid.steps} steps)"]
    for i, row in enumerate(grid.cells):
        parts = []
        for cell in row:
            parts.append(
                f"[{p.fmt(cell.left) or 'ε'} | {p.fmt(cell.top) or 'ε'} -> "
                f"{p.fmt(cell.bottom) if cell.bottom is not None else '?'} | "
                f"{p.fmt(cell.right) if cell.right is not None else '?'}]"
            )
        lines.append(f"row {i}: " + " ".join(parts))
    lines.append(f"bottom: {p.fmt(grid.bottom) or 'ε'}")
    lines.append(f"right:  {p.fmt(grid.right) or 'ε'}")
    return "\n".join(lines)


def grid_to_dot(grid: ReversingGrid, p: Presentation) -> str:
    out = ["digraph reversing {", "  node [shape=point];"]
    for i in range(len(grid.u) + 1):
        for j in range(len(grid.v) + 1):
            out.append(f'  "{i},{j}";')
    for i, row in enumerate(grid.cells):
        for j, cell in enumerate(row):
            out.append(f'  "{i},{j}" -> "{i},{j + 1}" [label="{p.fmt(cell.top) or "ε"}"];')
            out.append(f'  "{i},{j}" -> "{i + 1},{j}" [label="{p.fmt(cell.left) or "ε"}"];')
            if cell.bottom is not None:
                out.append(
                    f'  "{i + 1},{j}" -> "{i + 1},{j + 1}" [label="{p.fmt(cell.bottom) or "ε"}"];'
                )
            if cell.right is not None:
                out.append(
                    f'  "{i},{j + 1}" -> "{i + 1},{j + 1}" [label="{p.fmt(cell.right) or "ε"}"];'
                )
    out.append("}")
    return "\n".join(out) + "\n"
