"""Effective Garside recognition for complemented presentations.

The criterion checked by :func:`recognize`:

(i)   the closure of the letters under word complement is finite;
(ii)  the cube condition holds on that closure;
(iii) the closure of (i) under lcm words contains a word ``omega`` that every
      member left-divides and that every member is a complement into.

Budget exhaustion anywhere is reported as ``Inconclusive``; only a witnessed
failure on fully computed finite data is ``Rejected``.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .presentation import Alphabet, Presentation, ReversingFunction, Word, shortlex_key
from .reversing import (
    DEFAULT_FUEL,
    Blocked,
    Converged,
    Fuel,
    FuelExhausted,
    FuelExhaustedError,
    equiv_pp,
    equiv_words,
    right_complement,
    under,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budgets:
    fuel: Fuel = DEFAULT_FUEL
    closure_cap: int = 10_000
    jobs: int = 1


# -- closures ------------------------------------------------------------


@dataclass(frozen=True)
class Finite:
    words: tuple[Word, ...]
    steps: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CapExceeded:
    partial: tuple[Word, ...]
    pair: tuple[Word, Word]


@dataclass(frozen=True)
class Diverged:
    partial: tuple[Word, ...]
    pair: tuple[Word, Word]


@dataclass(frozen=True)
class Undefined:
    """A complement in the closure is undefined (reversing blocked)."""

    partial: tuple[Word, ...]
    pair: tuple[Word, Word]


ClosureResult = Finite | CapExceeded | Diverged | Undefined


def _saturate(seed: Iterable[Word], op, size_cap: int, fuel: Fuel, start: int = 0, same=None) -> ClosureResult:
    """Close ``seed`` under the binary word operation ``op``.

    Pairs among the first ``start`` members are assumed done.  ``same(w,
    members)`` may declare a new word redundant; by default only literal
    duplicates are.
    """
    members: list[Word] = []
    seen: set[Word] = set()
    for w in seed:
        if w not in seen:
            seen.add(w)
            members.append(w)
    steps = 0

    def partial():
        return tuple(sorted(members, key=shortlex_key))

    # every ordered pair (i, j) is processed once, as soon as both exist
    n_done = start
    while n_done < len(members):
        j = n_done
        for i in range(j + 1):
            for x, y in ((members[i], members[j]), (members[j], members[i])):
                out = op(x, y, fuel)
                if isinstance(out, FuelExhausted):
                    return Diverged(partial(), (x, y))
                if isinstance(out, Blocked):
                    return Undefined(partial(), (x, y))
                steps += out.steps
                w = out.word
                if w in seen:
                    continue
                try:
                    if same is not None and same(w, members):
                        seen.add(w)
                        continue
                except FuelExhaustedError:
                    return Diverged(partial(), (x, y))
                if len(members) >= size_cap:
                    return CapExceeded(partial(), (x, y))
                seen.add(w)
                members.append(w)
        n_done += 1
    return Finite(partial(), steps)


@dataclass(frozen=True)
class _Step:
    word: Word
    steps: int


def _complement_op(f):
    def op(x, y, fuel):
        out = right_complement(x, y, f, fuel)
        if isinstance(out, Converged):
            return _Step(out.positive_part, out.steps)
        return out

    return op


def _lcm_op(f):
    def op(x, y, fuel):
        out = right_complement(x, y, f, fuel)
        if isinstance(out, Converged):
            return _Step(tuple(x) + out.positive_part, out.steps)
        return out

    return op


def closure_under_complement(
    p: Presentation, size_cap: int = 10_000, fuel: Fuel = DEFAULT_FUEL
) -> ClosureResult:
    """Saturate the letters and the empty word under (u, v) -> u\\v."""
    if size_cap < len(p.alphabet):
        raise ValueError("size_cap must be at least the alphabet size")
    seed = [()] + [(a,) for a in range(len(p.alphabet))]
    return _saturate(seed, _complement_op(p.f), size_cap, fuel)


def closure_under_lcm(
    x: Iterable[Word], p: Presentation, size_cap: int = 10_000, fuel: Fuel = DEFAULT_FUEL
) -> ClosureResult:
    """Close ``x`` under (u, v) -> u.(u\\v).

    Every lcm word of two members of ``x`` is kept literally.  Words produced
    after that first round are kept only when not reversing-equivalent to a
    member already present, which is meaningful once the cube condition has
    been checked on ``x``.
    """
    base = sorted(set(x), key=shortlex_key)
    op = _lcm_op(p.f)
    first: list[Word] = list(base)
    seen = set(base)
    steps = 0
    for u in base:
        for v in base:
            out = op(u, v, fuel)
            if isinstance(out, FuelExhausted):
                return Diverged(tuple(sorted(first, key=shortlex_key)), (u, v))
            if isinstance(out, Blocked):
                return Undefined(tuple(sorted(first, key=shortlex_key)), (u, v))
            steps += out.steps
            if out.word not in seen:
                if len(first) >= size_cap:
                    return CapExceeded(tuple(sorted(first, key=shortlex_key)), (u, v))
                seen.add(out.word)
                first.append(out.word)

    def same(w, members):
        return any(equiv_pp(w, m, p.f, fuel) for m in members)

    res = _saturate(first, op, size_cap, fuel, start=len(base), same=same)
    if isinstance(res, Finite):
        return Finite(res.words, res.steps + steps)
    return res


# -- cube condition ------------------------------------------------------


@dataclass(frozen=True)
class Holds:
    pass


@dataclass(frozen=True)
class Fails:
    lhs: Word | None
    rhs: Word | None


@dataclass(frozen=True)
class CubeFuel:
    pass


def _nested(x: Word, y: Word, z: Word, f, fuel: Fuel) -> Word | None:
    """(x\\y)\\(x\\z), None when any complement is undefined."""
    xy = under(x, y, f, fuel)
    xz = under(x, z, f, fuel)
    if xy is None or xz is None:
        return None
    return under(xy, xz, f, fuel)


def check_cube_triple(u: Word, v: Word, w: Word, p, fuel: Fuel = DEFAULT_FUEL):
    """Compare (u\\v)\\(u\\w) with (v\\u)\\(v\\w) up to reversing equivalence.

    Both sides undefined counts as holding; exactly one undefined fails.
    """
    f = p.f if isinstance(p, Presentation) else p
    try:
        lhs = _nested(u, v, w, f, fuel)
        rhs = _nested(v, u, w, f, fuel)
        if equiv_words(lhs, rhs, f, fuel):
            return Holds()
        return Fails(lhs, rhs)
    except FuelExhaustedError:
        return CubeFuel()


@dataclass
class CubeReport:
    checked_triples: int = 0
    failures: list[tuple[Word, Word, Word, Word | None, Word | None]] = field(default_factory=list)
    fuel_failures: list[tuple[Word, Word, Word]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures and not self.fuel_failures


def _cube_chunk(args):
    words, us, f, fuel = args
    report = CubeReport()
    for u in us:
        for v in words:
            for w in words:
                report.checked_triples += 1
                r = check_cube_triple(u, v, w, f, fuel)
                if isinstance(r, Fails):
                    report.failures.append((u, v, w, r.lhs, r.rhs))
                elif isinstance(r, CubeFuel):
                    report.fuel_failures.append((u, v, w))
    return report


def check_cube_on_set(
    x: Iterable[Word], p: Presentation, fuel: Fuel = DEFAULT_FUEL, jobs: int = 1
) -> CubeReport:
    """Check every triple of ``x``; the report order is (u, v, w) lexicographic
    over the shortlex-sorted set, independently of ``jobs``."""
    words = sorted(set(x), key=shortlex_key)
    chunks = [(words, [u], p.f, fuel) for u in words]
    if jobs > 1 and len(words) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_cube_chunk, chunks))
    else:
        parts = [_cube_chunk(c) for c in chunks]
    total = CubeReport()
    for part in parts:
        total.checked_triples += part.checked_triples
        total.failures.extend(part.failures)
        total.fuel_failures.extend(part.fuel_failures)
    return total


# -- omega -----------------------------------------------------------------


@dataclass(frozen=True)
class NotFound:
    clause: str  # "divisibility" or "surjectivity"
    reason: str


def find_omega(xv: Iterable[Word], p: Presentation, fuel: Fuel = DEFAULT_FUEL):
    """Shortlex-least word of ``xv`` that all members left-divide and onto
    which complement-into is surjective (up to equivalence).

    Returns the word or a :class:`NotFound`.  FuelExhaustedError propagates.
    """
    words = sorted(set(xv), key=shortlex_key)
    divisible = []
    for omega in words:
        if all(under(omega, u, p.f, fuel) == () for u in words):
            divisible.append(omega)
    if not divisible:
        return NotFound("divisibility", "no member is a common multiple of the whole set")
    for omega in divisible:
        into = [under(v, omega, p.f, fuel) for v in words]
        if all(any(equiv_words(c, u, p.f, fuel) for c in into) for u in words):
            return omega
    return NotFound("surjectivity", "no common multiple has surjective complement map")


# -- recognition -------------------------------------------------------------


@dataclass
class RecognitionReport:
    verdict: str  # "Garside" | "Rejected" | "Inconclusive"
    reason: str | None = None
    stage: str | None = None
    closure: tuple[Word, ...] | None = None
    lcm_closure: tuple[Word, ...] | None = None
    omega: Word | None = None
    stats: dict = field(default_factory=dict)

    @property
    def is_garside(self) -> bool:
        return self.verdict == "Garside"

    def to_json(self, p: Presentation) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.stage is not None:
            out["stage"] = self.stage
        out["closure"] = [p.fmt(w) for w in self.closure or ()]
        out["lcm_closure"] = [p.fmt(w) for w in self.lcm_closure or ()]
        if self.omega is not None:
            out["omega"] = p.fmt(self.omega)
        out["stats"] = dict(sorted(self.stats.items()))
        return out


def _closure_failure(res, stage: str, stats: dict, closure=None) -> RecognitionReport:
    partial = res.partial
    x, y = res.pair
    if isinstance(res, Undefined):
        return RecognitionReport(
            "Rejected",
            reason=f"undefined complement during {stage}",
            stage=stage,
            closure=closure if closure is not None else partial,
            lcm_closure=partial if closure is not None else None,
            stats=stats,
        )
    kind = "cap" if isinstance(res, CapExceeded) else "fuel"
    return RecognitionReport(
        "Inconclusive",
        reason=kind,
        stage=stage,
        closure=closure if closure is not None else partial,
        lcm_closure=partial if closure is not None else None,
        stats=stats,
    )


def recognize(p: Presentation, budgets: Budgets = Budgets()) -> RecognitionReport:
    fuel = budgets.fuel
    stats: dict = {}
    res = closure_under_complement(p, budgets.closure_cap, fuel)
    if not isinstance(res, Finite):
        stats["closure_size"] = len(res.partial)
        return _closure_failure(res, "closure", stats)
    closure = res.words
    stats["closure_size"] = len(closure)
    stats["steps"] = res.steps

    cube = check_cube_on_set(closure, p, fuel, budgets.jobs)
    stats["triples"] = cube.checked_triples
    if cube.failures:
        u, v, w, _, _ = cube.failures[0]
        return RecognitionReport(
            "Rejected",
            reason=f"cube fails on ({p.fmt(u)}, {p.fmt(v)}, {p.fmt(w)})",
            stage="cube",
            closure=closure,
            stats=stats,
        )
    if cube.fuel_failures:
        return RecognitionReport(
            "Inconclusive", reason="fuel", stage="cube", closure=closure, stats=stats
        )

    res = closure_under_lcm(closure, p, budgets.closure_cap, fuel)
    if not isinstance(res, Finite):
        stats["lcm_closure_size"] = len(res.partial)
        return _closure_failure(res, "lcm_closure", stats, closure)
    lcm_closure = res.words
    stats["lcm_closure_size"] = len(lcm_closure)
    stats["steps"] += res.steps

    try:
        omega = find_omega(lcm_closure, p, fuel)
    except FuelExhaustedError:
        return RecognitionReport(
            "Inconclusive",
            reason="fuel",
            stage="omega",
            closure=closure,
            lcm_closure=lcm_closure,
            stats=stats,
        )
    if isinstance(omega, NotFound):
        return RecognitionReport(
            "Rejected",
            reason=f"omega {omega.clause}: {omega.reason}",
            stage="omega",
            closure=closure,
            lcm_closure=lcm_closure,
            stats=stats,
        )
    return RecognitionReport(
        "Garside",
        stage=None,
        closure=closure,
        lcm_closure=lcm_closure,
        omega=omega,
        stats=stats,
    )


def verify_witnesses(p: Presentation, report: RecognitionReport, fuel: Fuel = DEFAULT_FUEL) -> bool:
    """Re-check the three clauses on the witnesses of a Garside report."""
    if not report.is_garside:
        return False
    x, xv, omega = report.closure, report.lcm_closure, report.omega
    xs = set(x)
    if not all(((a,) in xs) for a in range(len(p.alphabet))):
        return False
    for u in x:
        for v in x:
            if under(u, v, p.f, fuel) not in xs:
                return False
    if not check_cube_on_set(x, p, fuel).holds:
        return False
    xvs = set(xv)
    if not xs <= xvs:
        return False
    for u in xv:
        for v in xv:
            c = under(u, v, p.f, fuel)
            if c is None:
                return False
            m = tuple(u) + c
            if m not in xvs and not any(equiv_pp(m, w, p.f, fuel) for w in xv):
                return False
    return omega in xvs and find_omega(xv, p, fuel) == omega


# -- shortcut criteria ---------------------------------------------------------


@dataclass(frozen=True)
class Applies:
    cube_on_letters: CubeReport


@dataclass(frozen=True)
class NotApplicable:
    reason: str


def check_homogeneous_shortcut(p: Presentation, fuel: Fuel = DEFAULT_FUEL):
    """When every relation preserves length, the cube on letters suffices."""
    lengths = p.relation_lengths()
    if any(l != r for l, r in lengths):
        return NotApplicable("some relation changes length")
    letters = [(a,) for a in range(len(p.alphabet))]
    return Applies(check_cube_on_set(letters, p, fuel))


def relation_distance(u: Word, v: Word, p: Presentation) -> int:
    """0 for equal words, 1 when one relation application links them, else 2."""
    if u == v:
        return 0
    sides = []
    for lhs, rhs in _relations(p):
        sides.append((lhs, rhs))
        sides.append((rhs, lhs))
    for lhs, rhs in sides:
        n = len(lhs)
        for i in range(len(u) - n + 1):
            if u[i : i + n] == lhs and u[:i] + rhs + u[i + n :] == v:
                return 1
    return 2


def _relations(p):
    from .presentation import relations_of

    return relations_of(p)


def check_one_coherence(p: Presentation, fuel: Fuel = DEFAULT_FUEL) -> bool:
    """Sufficient (not necessary) test: every letter triple has total
    relation distance <= 1 between the two ways of closing its cube."""
    f = p.f
    letters = [(a,) for a in range(len(p.alphabet))]
    for u, v, w in itertools.product(letters, repeat=3):
        try:
            uv = under(u, v, f, fuel)
            vu = under(v, u, f, fuel)
            if uv is None or vu is None:
                continue
            m1, m2 = u + uv, v + vu
            d = 0
            for x, y in ((under(w, m1, f, fuel), under(w, m2, f, fuel)),
                         (under(m1, w, f, fuel), under(m2, w, f, fuel))):
                if x is None or y is None:
                    if x is not y:
                        return False
                    continue
                d += relation_distance(x, y, p)
            if d > 1:
                return False
        except FuelExhaustedError:
            return False
    return True


# -- enumeration ---------------------------------------------------------------


def _tables(n_letters: int, max_f_len: int) -> Iterator[ReversingFunction]:
    words = list(Alphabet(tuple(f"x{i}" for i in range(n_letters))).words(max_f_len))
    pairs = [(a, b) for a in range(n_letters) for b in range(n_letters) if a != b]
    for choice in itertools.product(words, repeat=len(pairs)):
        yield ReversingFunction(dict(zip(pairs, choice)))


def _permuted(f: ReversingFunction, perm: tuple[int, ...]) -> ReversingFunction:
    return ReversingFunction(
        {(perm[a], perm[b]): tuple(perm[c] for c in w) for (a, b), w in f.items()}
    )


def _table_key(f: ReversingFunction):
    return tuple((k, shortlex_key(w)) for k, w in sorted(f.items()))


# Exhaustive search visits many presentations with infinite closures; each of
# them runs until the cap, so the search uses a much smaller one.
ENUMERATION_BUDGETS = Budgets(closure_cap=200)


def default_letters(n: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:n])


def enumerate_presentations(
    n_letters: int, max_f_len: int, budgets: Budgets = ENUMERATION_BUDGETS
) -> Iterator[tuple[Presentation, RecognitionReport]]:
    """Yield every total complemented presentation on ``n_letters`` letters
    with complements of length <= max_f_len that is recognized as Garside.

    Tables are taken up to letter permutation (the key-least representative
    is kept) and visited in key order.
    """
    alphabet = Alphabet(default_letters(n_letters))
    perms = list(itertools.permutations(range(n_letters)))
    reps = set()
    for f in _tables(n_letters, max_f_len):
        key = _table_key(f)
        if all(key <= _table_key(_permuted(f, q)) for q in perms):
            reps.add(key)
    for key in sorted(reps):
        f = ReversingFunction({k: w for k, (_, w) in key})
        p = Presentation(alphabet, f)
        report = recognize(p, budgets)
        log.debug("%s -> %s", p.format().strip(), report.verdict)
        if report.is_garside:
            yield p, report
