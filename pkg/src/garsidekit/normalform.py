"""Greedy normal forms over a :class:`GarsideStructure`.

Factors are simple indices; the identity class never appears as a factor.
A mixed form ``(negatives, positives)`` stands for the group element
``D^-1 N`` where ``negatives`` is the left normal form of ``D`` and
``positives`` that of ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .garside import GarsideStructure, reduce_fraction_left
from .presentation import SignedWord, Word
from .reversing import DEFAULT_FUEL, Fuel, over, under


@dataclass(frozen=True)
class LeftNormalForm:
    factors: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class MixedNormalForm:
    negative_factors: tuple[int, ...]
    positive_factors: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.negative_factors) + len(self.positive_factors)

    def letters(self) -> list[tuple[int, int]]:
        """The form as a sequence of signed simple letters, left to right."""
        return [(x, -1) for x in reversed(self.negative_factors)] + [(y, 1) for y in self.positive_factors]


def _strip(factors) -> tuple[int, ...]:
    return tuple(x for x in factors if x != 0)


def head(w: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> int:
    """w ^ Delta: the join of all simples that left-divide ``w``."""
    return g.join_all(s for s in range(len(g)) if under(w, g.simples[s], g.f, fuel) == ())


def tail_head(w: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> int:
    """w ^~ Delta: the left lcm of all simples that right-divide ``w``."""
    out = 0
    for s in range(len(g)):
        if over(g.simples[s], w, g.left_selector, fuel) == ():
            out = g.left_join(out, s)
    return out


def left_nf(w: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> LeftNormalForm:
    factors = []
    w = tuple(w)
    while w:
        h = head(w, g, fuel)
        if h == 0:
            raise RuntimeError("nonempty word without a simple left divisor")
        factors.append(h)
        w = under(g.simples[h], w, g.f, fuel)
    return LeftNormalForm(tuple(factors))


def right_nf(w: Word, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> tuple[int, ...]:
    """Right greedy factors, listed left to right."""
    factors = []
    w = tuple(w)
    while w:
        t = tail_head(w, g, fuel)
        if t == 0:
            raise RuntimeError("nonempty word without a simple right divisor")
        factors.append(t)
        w = over(w, g.simples[t], g.left_selector, fuel)
    return tuple(reversed(factors))


def nf_word(factors, g: GarsideStructure) -> Word:
    return tuple(c for x in factors for c in g.simples[x])


def is_left_normal(factors, g: GarsideStructure) -> bool:
    if any(x == 0 for x in factors):
        return False
    return all(g.meet(g.star[x], y) == 0 for x, y in zip(factors, factors[1:]))


def is_right_normal(factors, g: GarsideStructure) -> bool:
    if any(x == 0 for x in factors):
        return False
    return all(g.right_meet(x, g.costar[y]) == 0 for x, y in zip(factors, factors[1:]))


def mixed_nf(w: SignedWord, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL) -> MixedNormalForm:
    fr = reduce_fraction_left(w, g, fuel)
    return MixedNormalForm(left_nf(fr.denominator, g, fuel).factors, left_nf(fr.numerator, g, fuel).factors)


def _expand(letters, g: GarsideStructure) -> SignedWord:
    out: list[tuple[int, int]] = []
    for x, sign in letters:
        word = g.simples[x]
        if sign > 0:
            out.extend((a, 1) for a in word)
        else:
            out.extend((a, -1) for a in reversed(word))
    return tuple(out)


def signed_word(nf: MixedNormalForm, g: GarsideStructure) -> SignedWord:
    return _expand(nf.letters(), g)


# -- incremental updates ----------------------------------------------------------


def nf_mul_delta(nf: MixedNormalForm, g: GarsideStructure) -> MixedNormalForm:
    ys, xs = nf.negative_factors, nf.positive_factors
    y1 = ys[0] if ys else 0
    negatives = ys[1:]
    positives = (g.star[y1],) + tuple(g.phi(x) for x in xs)
    return MixedNormalForm(_strip(negatives), _strip(positives))


def nf_mul_delta_inv(nf: MixedNormalForm, g: GarsideStructure) -> MixedNormalForm:
    ys, xs = nf.negative_factors, nf.positive_factors
    x1 = xs[0] if xs else 0
    negatives = (g.costar[x1],) + tuple(ys)
    positives = tuple(g.phi_inverse(x) for x in xs[1:])
    return MixedNormalForm(_strip(negatives), _strip(positives))


def _head_and_rest(t: int, y: int, g: GarsideStructure) -> tuple[int, int]:
    """(t.y) ^ Delta and the remaining simple, both read off the tables."""
    return g.costar[g.over(g.star[y], g.phi(t))], g.over(g.phi(t), g.star[y])


def nf_mul_simple_inv(nf: MixedNormalForm, s: int, g: GarsideStructure) -> MixedNormalForm:
    ys, xs = nf.negative_factors, nf.positive_factors
    # push s^-1 leftwards through the positive factors
    new_xs = [0] * len(xs)
    cur = s
    for i in range(len(xs) - 1, -1, -1):
        new_xs[i] = g.over(xs[i], cur)
        cur = g.over(cur, xs[i])
    # absorb the leftover into the denominator, re-normalizing greedily
    new_ys = []
    t = cur
    for y in ys:
        h, t = _head_and_rest(t, y, g)
        new_ys.append(h)
    new_ys.append(t)
    return MixedNormalForm(_strip(new_ys), _strip(new_xs))


def nf_mul_simple(nf: MixedNormalForm, s: int, g: GarsideStructure) -> MixedNormalForm:
    """z.s computed as (z.Delta).(s*)^-1."""
    return nf_mul_simple_inv(nf_mul_delta(nf, g), g.star[s], g)


# -- fellow travelling -------------------------------------------------------------


def fellow_traveller_bound(
    z: MixedNormalForm, zs: MixedNormalForm, g: GarsideStructure, fuel: Fuel = DEFAULT_FUEL
) -> int:
    """Max over prefix positions of the simple-letter distance between the
    prefixes of the two forms (shorter one padded with the identity)."""
    a, b = z.letters(), zs.letters()
    n = max(len(a), len(b))
    a += [(0, 1)] * (n - len(a))
    b += [(0, 1)] * (n - len(b))
    worst = 0
    for k in range(n + 1):
        left, right = _expand(a[:k], g), _expand(b[:k], g)
        inv = tuple((c, -sign) for c, sign in reversed(left))
        worst = max(worst, len(mixed_nf(inv + right, g, fuel)))
    return worst
