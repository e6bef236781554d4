import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garsidekit.garside import gcd_left, gcd_right
from garsidekit.normalform import (
    LeftNormalForm,
    MixedNormalForm,
    fellow_traveller_bound,
    head,
    is_left_normal,
    is_right_normal,
    left_nf,
    mixed_nf,
    nf_mul_delta,
    nf_mul_delta_inv,
    nf_mul_simple,
    nf_mul_simple_inv,
    nf_word,
    right_nf,
    signed_word,
)
from garsidekit.presentation import negative, positive
from garsidekit.reversing import equiv_pp

from conftest import GARSIDE, struct


def names(g, factors):
    return [g.fmt(x) for x in factors]


def test_left_nf_examples(g1, g2):
    p1, p2 = g1.presentation, g2.presentation
    assert names(g2, left_nf(p2.word("aab"), g2).factors) == ["a", "ab"]
    assert left_nf(g2.delta, g2).factors == (g2.delta_index,)
    assert left_nf(p1.word("bbb"), g1).factors == (g1.delta_index,)
    assert left_nf((), g2) == LeftNormalForm(())


def test_right_nf_examples(g1, g2):
    p2 = g2.presentation
    assert right_nf(g2.delta, g2) == (g2.delta_index,)
    assert names(g2, right_nf(p2.word("aab"), g2)) == ["a", "ab"]
    r = right_nf(g1.presentation.word("aba"), g1)
    assert equiv_pp(nf_word(r, g1), g1.presentation.word("aba"), g1.f)


def test_mixed_nf_examples(g2):
    p = g2.presentation
    assert mixed_nf(p.signed("ab'"), g2) == MixedNormalForm((3,), (4,))
    assert names(g2, mixed_nf(p.signed("ab'"), g2).negative_factors) == ["ab"]
    assert mixed_nf(p.signed("aba"), g2).negative_factors == ()
    assert mixed_nf(p.signed("abab'a'b'"), g2) == MixedNormalForm((), ())


def test_incremental_examples(g2):
    p = g2.presentation
    empty = MixedNormalForm((), ())
    assert nf_mul_delta(empty, g2) == MixedNormalForm((), (g2.delta_index,))
    d = nf_mul_delta(empty, g2)
    assert nf_mul_delta(d, g2) == MixedNormalForm((), (g2.delta_index, g2.delta_index))
    s = g2.class_of(p.word("ab"))
    assert nf_mul_simple(empty, s, g2) == MixedNormalForm((), (s,))
    assert nf_mul_simple_inv(MixedNormalForm((), (s,)), s, g2) == empty
    a_nf = mixed_nf(p.signed("a"), g2)
    assert nf_mul_simple_inv(a_nf, g2.class_of(p.word("b")), g2) == mixed_nf(p.signed("ab'"), g2)
    assert fellow_traveller_bound(a_nf, a_nf, g2) == 0


signed = st.lists(st.tuples(st.integers(0, 1), st.sampled_from((1, -1))), max_size=8).map(tuple)


@settings(max_examples=150, deadline=None)
@given(signed, st.sampled_from(GARSIDE), st.data())
def test_incremental_equals_scratch(w, name, data):
    g = struct(name)
    z = mixed_nf(w, g)
    s = data.draw(st.integers(1, len(g) - 1))
    sw = g.simples[s]
    assert nf_mul_delta(z, g) == mixed_nf(w + positive(g.delta), g)
    assert nf_mul_delta_inv(z, g) == mixed_nf(w + negative(g.delta), g)
    assert nf_mul_simple(z, s, g) == mixed_nf(w + positive(sw), g)
    assert nf_mul_simple_inv(z, s, g) == mixed_nf(w + negative(sw), g)


@settings(max_examples=150, deadline=None)
@given(signed, st.sampled_from(GARSIDE))
def test_mixed_nf_is_canonical(w, name):
    g = struct(name)
    z = mixed_nf(w, g)
    assert is_left_normal(z.negative_factors, g) and is_left_normal(z.positive_factors, g)
    if z.negative_factors and z.positive_factors:
        assert g.meet(z.negative_factors[0], z.positive_factors[0]) == 0
    assert mixed_nf(signed_word(z, g), g) == z


words = st.lists(st.integers(0, 1), max_size=8).map(tuple)


@settings(max_examples=150, deadline=None)
@given(words, st.sampled_from(GARSIDE))
def test_normal_forms_of_positive_words(u, name):
    g = struct(name)
    lnf = left_nf(u, g).factors
    rnf = right_nf(u, g)
    assert is_left_normal(lnf, g) and is_right_normal(rnf, g)
    assert equiv_pp(nf_word(lnf, g), u, g.f) and equiv_pp(nf_word(rnf, g), u, g.f)
    assert len(lnf) <= len(u) and len(rnf) <= len(u)
    h = head(u, g)
    assert equiv_pp(gcd_left(u, g.delta, g), g.simples[h], g.f)
    if rnf:
        assert equiv_pp(gcd_right(u, g.delta, g), g.simples[rnf[-1]], g.f)


@pytest.mark.parametrize("name", GARSIDE)
def test_fellow_travellers(name):
    g = struct(name)
    rng = random.Random(3)
    for _ in range(60):
        w = tuple((rng.randrange(2), rng.choice((1, -1))) for _ in range(rng.randint(0, 6)))
        z = mixed_nf(w, g)
        s = rng.randrange(1, len(g))
        for other in (nf_mul_simple(z, s, g), nf_mul_simple_inv(z, s, g), nf_mul_delta(z, g)):
            assert fellow_traveller_bound(z, other, g) <= 2
