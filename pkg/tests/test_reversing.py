import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garsidekit.presentation import Presentation, fraction, inverse, negative, positive
from garsidekit.reversing import (
    Blocked,
    Converged,
    Fuel,
    FuelExhausted,
    FuelExhaustedError,
    capture_grid,
    equiv_pp,
    equiv_words,
    grid_to_ascii,
    grid_to_dot,
    left_complement,
    reverse_left,
    reverse_right,
    right_complement,
    under,
)

from conftest import pres, struct


def test_complement_orientation_on_p1(p1):
    out = right_complement(p1.word("a"), p1.word("baa"), p1.f)
    assert out == Converged(p1.word("babba"), p1.word("bab"))
    assert out.steps == 4


def test_letter_complements_follow_the_table(p1):
    assert under((0,), (1,), p1.f) == p1.f[(0, 1)]
    assert under((1,), (0,), p1.f) == p1.f[(1, 0)]
    assert under((0,), (0,), p1.f) == ()


def test_blocked_when_undefined():
    p = Presentation.from_relations("abc", [("ab", "ba")])
    out = reverse_right(p.signed("a'c"), p.f)
    assert isinstance(out, Blocked) and out.pair == (0, 2)
    assert under((0,), (2,), p.f) is None
    assert equiv_words(None, None, p.f)
    assert not equiv_words(None, (0,), p.f)


def test_fuel_exhaustion_is_reported():
    p3 = pres("P3")
    w = p3.signed("b'" * 3 + "a" * 6)
    out = reverse_right(w, p3.f, Fuel(max_steps=5))
    assert isinstance(out, FuelExhausted)
    with pytest.raises(FuelExhaustedError):
        equiv_pp(p3.word("bbb"), p3.word("aaaaaa"), p3.f, Fuel(max_steps=5))


def test_fuel_rejects_nonpositive():
    with pytest.raises(ValueError):
        Fuel(max_steps=0)


def test_free_reduction():
    p = pres("P2")
    assert reverse_right(p.signed("a'a"), p.f) == Converged((), ())
    assert reverse_right(p.signed("ab"), p.f) == Converged((0, 1), ())


def test_equivalence_examples(p1):
    assert equiv_pp(p1.word("abab"), p1.word("bbb"), p1.f)
    assert equiv_pp(p1.word("aba"), p1.word("bb"), p1.f)
    assert not equiv_pp(p1.word("ab"), p1.word("ba"), p1.f)


def test_left_reversing_on_p2(g2):
    p = g2.presentation
    out = reverse_left(p.signed("ab'"), g2.left_selector)
    assert out == Converged(p.word("ba"), p.word("ab"))
    lc = left_complement(p.word("a"), p.word("b"), g2.left_selector)
    assert lc.positive_part == p.word("ba") and lc.negative_part == p.word("ab")


def test_grid_matches_reversing(p1):
    grid = capture_grid(p1.word("a"), p1.word("baa"), p1.f)
    assert grid.status == "converged"
    assert grid.bottom == p1.word("babba")
    assert grid.right == p1.word("bab")
    assert grid.steps == 4
    text = grid_to_ascii(grid, p1)
    assert "bottom: babba" in text
    dot = grid_to_dot(grid, p1)
    assert dot.startswith("digraph reversing {") and dot.rstrip().endswith("}")


def test_grid_blocked():
    p = Presentation.from_relations("abc", [("ab", "ba")])
    grid = capture_grid((0,), (2, 1), p.f)
    assert grid.status == "blocked"


words = st.lists(st.integers(0, 1), max_size=7).map(tuple)


@settings(max_examples=200, deadline=None)
@given(words, words, st.sampled_from(("P1", "P2", "P4", "P5")))
def test_complement_square_closes(u, v, name):
    p = pres(name)
    out = right_complement(u, v, p.f)
    assert isinstance(out, Converged)
    assert equiv_pp(u + out.positive_part, v + out.negative_part, p.f)
    swapped = right_complement(v, u, p.f)
    assert (swapped.positive_part, swapped.negative_part) == (out.negative_part, out.positive_part)


@settings(max_examples=200, deadline=None)
@given(words, st.sampled_from(("P1", "P2", "P4", "P5")))
def test_word_against_itself(u, name):
    p = pres(name)
    assert reverse_right(negative(u) + positive(u), p.f) == Converged((), ())
    assert reverse_left(fraction(u, u), struct(name).left_selector) == Converged((), ())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 1), st.sampled_from((1, -1))), max_size=10).map(tuple))
def test_left_reversing_mirrors_right_on_p2(w):
    # with the left selector of P2 both directions reach the same group element
    g = struct("P2")
    right = reverse_right(w, g.f)
    left = reverse_left(w, g.left_selector)
    a = fraction(right.positive_part, right.negative_part)
    b = negative(left.negative_part) + positive(left.positive_part)
    loop = reverse_right(inverse(a) + b, g.f)
    mid = fraction(loop.positive_part, loop.negative_part)
    assert reverse_left(mid, g.left_selector) == Converged((), ())
