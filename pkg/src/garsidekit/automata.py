"""Finite-state machines read off a :class:`GarsideStructure`.

* the right transducer, whose state after reading ``u`` is ``u ^~ Delta``;
* the left-gcd automaton over maps on right-primitive simples;
* the characteristic graph of atom edges between simples.

All three can be exported to Graphviz DOT text.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .garside import GarsideStructure
from .presentation import Word


@dataclass(frozen=True)
class RightTransducer:
    structure: GarsideStructure
    transition: dict[tuple[int, int], int]
    output: dict[tuple[int, int], Word]
    initial: int = 0

    @property
    def states(self) -> range:
        return range(len(self.structure))


def build_right_transducer(g: GarsideStructure) -> RightTransducer:
    trans, out = {}, {}
    for s in range(len(g)):
        cs = g.costar[s]
        for a in range(len(g.presentation.alphabet)):
            aa = g.phi_inverse(g.letter_class(a))
            trans[(s, a)] = g.star[g.under(aa, cs)]
            out[(s, a)] = g.simples[g.under(cs, aa)]
    return RightTransducer(g, trans, out)


def run_transducer(t: RightTransducer, u: Word) -> tuple[Word, int]:
    """Fold ``u`` through the transducer; ``u`` equals output . final."""
    state = t.initial
    output: list[int] = []
    for a in u:
        output.extend(t.output[(state, a)])
        state = t.transition[(state, a)]
    return tuple(output), state


def transducer_right_nf(t: RightTransducer, u: Word) -> tuple[int, ...]:
    """Right normal form by feeding the output back in until it is empty."""
    factors = []
    word = tuple(u)
    while word:
        word, last = run_transducer(t, word)
        if last != 0:
            factors.append(last)
    return tuple(reversed(factors))


@dataclass(frozen=True)
class LeftGcdAutomaton:
    structure: GarsideStructure
    primitives: tuple[int, ...]
    states: tuple[tuple[int, ...], ...]  # states[i][k] = image of primitives[k]
    transition: dict[tuple[int, int], int]
    initial: int = 0

    def run(self, u: Word) -> int:
        state = self.initial
        for a in u:
            state = self.transition[(state, a)]
        return state

    def head_of_state(self, state: int) -> int:
        g = self.structure
        return g.join_all(p for p, img in zip(self.primitives, self.states[state]) if img == 0)

    def head(self, u: Word) -> int:
        """u ^ Delta read from the state reached on ``u``."""
        return self.head_of_state(self.run(u))


class TooManyStates(RuntimeError):
    pass


def right_primitives(g: GarsideStructure) -> tuple[int, ...]:
    """Closure of the letter classes under x\\y (contains the identity)."""
    prims = {g.letter_class(a) for a in range(len(g.presentation.alphabet))}
    frontier = list(prims)
    while frontier:
        new = set()
        for x in list(prims):
            for y in frontier:
                for c in (g.under(x, y), g.under(y, x)):
                    if c not in prims:
                        new.add(c)
        prims |= new
        frontier = list(new)
    return tuple(sorted(prims))


def build_left_gcd_automaton(g: GarsideStructure, max_states: int = 100_000) -> LeftGcdAutomaton:
    prims = right_primitives(g)
    pos = {p: k for k, p in enumerate(prims)}
    letters = range(len(g.presentation.alphabet))
    letter_cls = [g.letter_class(a) for a in letters]
    start = tuple(prims)
    states = [start]
    index = {start: 0}
    trans: dict[tuple[int, int], int] = {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        f = states[i]
        for a in letters:
            nxt = tuple(g.under(letter_cls[a], v) for v in f)
            if any(v not in pos for v in nxt):
                raise RuntimeError("primitive set is not closed under complement")
            j = index.get(nxt)
            if j is None:
                if len(states) >= max_states:
                    raise TooManyStates(f"more than {max_states} states")
                j = index[nxt] = len(states)
                states.append(nxt)
                queue.append(j)
            trans[(i, a)] = j
    return LeftGcdAutomaton(g, prims, tuple(states), trans)


@dataclass(frozen=True)
class CharGraph:
    structure: GarsideStructure
    edges: tuple[tuple[int, int, int], ...]

    @property
    def vertices(self) -> range:
        return range(len(self.structure))


def build_char_graph(g: GarsideStructure) -> CharGraph:
    return CharGraph(g, tuple((s, a, t) for (s, a), t in sorted(g.atom_edges.items())))


# -- DOT -------------------------------------------------------------------------


def _edge_attrs(g: GarsideStructure, a: int, extra: str = "") -> str:
    letters = g.presentation.alphabet.letters
    if len(letters) == 2 and not extra:
        return ' [style=solid]' if a == 0 else ' [style=dashed]'
    label = letters[a] + extra
    style = ""
    if len(letters) == 2:
        style = ", style=solid" if a == 0 else ", style=dashed"
    return f' [label="{label}"{style}]'


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def export_dot(machine) -> str:
    if isinstance(machine, CharGraph):
        g = machine.structure
        lines = ["digraph simples {", "  rankdir=BT;"]
        for v in machine.vertices:
            lines.append(f"  {_quote(g.fmt(v))};")
        for s, a, t in machine.edges:
            lines.append(f"  {_quote(g.fmt(s))} -> {_quote(g.fmt(t))}{_edge_attrs(g, a)};")
    elif isinstance(machine, RightTransducer):
        g = machine.structure
        lines = ["digraph right_transducer {", "  rankdir=LR;"]
        for s in machine.states:
            shape = "doublecircle" if s == machine.initial else "circle"
            lines.append(f"  {_quote(g.fmt(s))} [shape={shape}];")
        for (s, a), t in machine.transition.items():
            out = g.presentation.fmt(machine.output[(s, a)]) or "ε"
            lines.append(f"  {_quote(g.fmt(s))} -> {_quote(g.fmt(t))}{_edge_attrs(g, a, ' / ' + out)};")
    elif isinstance(machine, LeftGcdAutomaton):
        g = machine.structure
        lines = ["digraph left_gcd {", "  rankdir=LR;"]
        for i in range(len(machine.states)):
            shape = "doublecircle" if i == machine.initial else "circle"
            lines.append(f'  s{i} [shape={shape}, label="{i}: {g.fmt(machine.head_of_state(i))}"];')
        for (i, a), j in machine.transition.items():
            lines.append(f"  s{i} -> s{j}{_edge_attrs(g, a)};")
    else:
        raise TypeError(f"cannot export {type(machine).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
