import random

import pytest

from garsidekit.automata import (
    CharGraph,
    build_char_graph,
    build_left_gcd_automaton,
    build_right_transducer,
    export_dot,
    right_primitives,
    run_transducer,
    transducer_right_nf,
    TooManyStates,
)
from garsidekit.garside import gcd_left, gcd_right
from garsidekit.normalform import right_nf
from garsidekit.reversing import equiv_pp

from conftest import GARSIDE, struct


def test_transducer_basics(g1, g2):
    for g in (g1, g2):
        t = build_right_transducer(g)
        for a in range(2):
            assert t.transition[(0, a)] == g.letter_class(a)
            assert t.output[(0, a)] == ()
        assert run_transducer(t, ()) == ((), 0)
    assert len(build_right_transducer(g1).states) == 8


def test_transducer_on_aab(g2):
    t = build_right_transducer(g2)
    u = g2.presentation.word("aab")
    out, final = run_transducer(t, u)
    assert final == right_nf(u, g2)[-1]
    assert equiv_pp(out + g2.simples[final], u, g2.f)


@pytest.mark.parametrize("name", GARSIDE)
def test_transducer_against_gcd(name):
    g = struct(name)
    t = build_right_transducer(g)
    rng = random.Random(11)
    for _ in range(200):
        u = tuple(rng.randrange(2) for _ in range(rng.randint(0, 8)))
        out, final = run_transducer(t, u)
        assert equiv_pp(gcd_right(u, g.delta, g), g.simples[final], g.f)
        assert equiv_pp(out + g.simples[final], u, g.f)
        assert transducer_right_nf(t, u) == right_nf(u, g)


def test_left_gcd_automaton_p2(g2):
    a = build_left_gcd_automaton(g2)
    assert [g2.fmt(x) for x in a.primitives] == ["ε", "a", "b", "ab", "ba"]
    assert len(a.states) == 20
    assert a.head(()) == 0
    assert a.head((0,)) == g2.letter_class(0)
    with pytest.raises(TooManyStates):
        build_left_gcd_automaton(g2, max_states=5)


@pytest.mark.parametrize("name", GARSIDE)
def test_left_gcd_against_gcd(name):
    g = struct(name)
    a = build_left_gcd_automaton(g)
    assert set(right_primitives(g)) == set(a.primitives)
    rng = random.Random(5)
    for _ in range(200):
        u = tuple(rng.randrange(2) for _ in range(rng.randint(0, 8)))
        assert equiv_pp(gcd_left(u, g.delta, g), g.simples[a.head(u)], g.f)


def test_automaton_numbering_is_deterministic(g2):
    assert build_left_gcd_automaton(g2) == build_left_gcd_automaton(g2)


def test_char_graph(g1):
    cg = build_char_graph(g1)
    assert len(cg.vertices) == 8
    out = {}
    for s, a, t in cg.edges:
        assert (s, a) not in out
        out[(s, a)] = t
    assert sum(1 for s, _, _ in cg.edges if s == 0) == 2
    assert not any(s == g1.delta_index for s, _, _ in cg.edges)


def _shape(cg: CharGraph):
    g = cg.structure
    return sorted((g.norm[s], g.norm[t]) for s, _, t in cg.edges)


def _label_paths(cg: CharGraph):
    # label sequences of all edge paths from the identity to the top
    g = cg.structure
    out, stack = set(), [(0, "")]
    while stack:
        v, seq = stack.pop()
        if v == g.delta_index:
            out.add(seq)
        for s, a, t in cg.edges:
            if s == v:
                stack.append((t, seq + g.presentation.alphabet.letters[a]))
    return out


def test_p4_p5_graphs():
    c4, c5 = build_char_graph(struct("P4")), build_char_graph(struct("P5"))
    assert len(c4.vertices) == len(c5.vertices) == 4
    assert _shape(c4) == _shape(c5)
    # same unlabeled graph, but the labels tell the monoids apart
    assert _label_paths(c4) == {"ab", "ba"}
    assert _label_paths(c5) == {"aa", "bb"}


def test_dot_export(g1, g2):
    dot = export_dot(build_char_graph(g1))
    assert dot.startswith("digraph simples {")
    assert '"ε" -> "a" [style=solid];' in dot and '"ε" -> "b" [style=dashed];' in dot
    assert export_dot(build_char_graph(g1)) == dot
    assert "doublecircle" in export_dot(build_right_transducer(g2))
    assert export_dot(build_left_gcd_automaton(g2)).count("->") == 40
    with pytest.raises(TypeError):
        export_dot(object())
