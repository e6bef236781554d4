"""Alphabets, words and complemented presentations.

A complemented presentation over an alphabet has at most one relation
``a.f(a,b) = b.f(b,a)`` per unordered pair of distinct letters; it is stored
as the partial map ``f`` (a :class:`ReversingFunction`).

Words are plain tuples.  A positive word is a tuple of letter indices, a
signed word a tuple of ``(letter, sign)`` pairs with ``sign`` in ``{+1, -1}``.

Presentation file format (UTF-8, line based)::

    # comment
    letters a b
    rel a b a = b b          # or: rel aba = bb, rel a.b.a = b.b
    compl a b = b.a          # complement table entry f(a,b)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

Word = tuple[int, ...]
SignedWord = tuple[tuple[int, int], ...]

EMPTY: Word = ()

_FORBIDDEN = set(".'#=")


class PresentationError(ValueError):
    """Invalid presentation text or table.

    ``kind`` is one of ``DuplicatePair``, ``SameHeadLetter``, ``EmptySide``,
    ``UnknownLetter``, ``AsymmetricTable``, ``DiagonalEntry``, ``BadAlphabet``,
    ``Syntax``.
    """

    def __init__(self, kind: str, message: str, line: int | None = None):
        self.kind = kind
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{kind}: {where}{message}")


class WordParseError(ValueError):
    pass


def shortlex_key(word: Word) -> tuple[int, Word]:
    return (len(word), word)


def inverse(word: SignedWord) -> SignedWord:
    """Formal inverse: reverse the syllables and flip every sign."""
    return tuple((letter, -sign) for letter, sign in reversed(word))


def positive(word: Word) -> SignedWord:
    return tuple((letter, 1) for letter in word)


def negative(word: Word) -> SignedWord:
    """The signed word ``word^-1``."""
    return tuple((letter, -1) for letter in reversed(word))


def fraction(num: Word, den: Word) -> SignedWord:
    """The signed word ``num . den^-1``."""
    return positive(num) + negative(den)


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise PresentationError("BadAlphabet", "alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise PresentationError("BadAlphabet", f"duplicate letters in {letters}")
        for tok in letters:
            if not tok or any(c.isspace() or c in _FORBIDDEN for c in tok):
                raise PresentationError("BadAlphabet", f"invalid letter token {tok!r}")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def compact(self) -> bool:
        """True when every token is a single character."""
        return all(len(t) == 1 for t in self.letters)

    def index(self, token: str) -> int:
        try:
            return self.letters.index(token)
        except ValueError:
            raise WordParseError(f"unknown letter {token!r}") from None

    # -- words ---------------------------------------------------------

    def parse_word(self, text: str, signed: bool = False) -> Word | SignedWord:
        """Parse dotted (``b.a.b``) or, for one-character letters, compact
        (``a'baa``) text.  A trailing apostrophe marks an inverse letter."""
        text = text.strip()
        if text in ("", "ε") and "ε" not in self.letters:
            return ()
        if "." in text or any(c.isspace() for c in text):
            tokens = [t for t in text.replace(".", " ").split()]
        elif self.compact:
            tokens = []
            for c in text:
                if c == "'":
                    if not tokens or tokens[-1].endswith("'"):
                        raise WordParseError(f"misplaced apostrophe in {text!r}")
                    tokens[-1] += "'"
                else:
                    tokens.append(c)
        else:
            tokens = [text]
        syllables = []
        for tok in tokens:
            sign = 1
            if tok.endswith("'"):
                sign = -1
                tok = tok[:-1]
                if not signed:
                    raise WordParseError("inverse letter in a positive word")
            syllables.append((self.index(tok), sign))
        if signed:
            return tuple(syllables)
        return tuple(letter for letter, _ in syllables)

    def format_word(self, word: Word) -> str:
        sep = "" if self.compact else "."
        return sep.join(self.letters[i] for i in word)

    def format_signed(self, word: SignedWord) -> str:
        sep = "" if self.compact else "."
        return sep.join(self.letters[i] + ("'" if s < 0 else "") for i, s in word)

    def words(self, max_len: int) -> Iterable[Word]:
        """All positive words of length <= max_len in shortlex order."""
        yield ()
        layer: list[Word] = [()]
        for _ in range(max_len):
            layer = [w + (a,) for w in layer for a in range(len(self))]
            yield from layer


class ReversingFunction(Mapping):
    """Partial map (a, b) -> f(a, b) for a != b with a symmetric domain.

    f(a, a) = empty word is implicit and never stored.
    """

    def __init__(self, table: Mapping[tuple[int, int], Word] | None = None):
        data: dict[tuple[int, int], Word] = {}
        for (a, b), w in (table or {}).items():
            if a == b:
                raise PresentationError("DiagonalEntry", f"f({a},{a}) must not be stored")
            data[(a, b)] = tuple(w)
        for a, b in data:
            if (b, a) not in data:
                raise PresentationError(
                    "AsymmetricTable", f"f({a},{b}) given without f({b},{a})"
                )
        self._data = dict(sorted(data.items()))
        self._hash = hash(tuple(self._data.items()))

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        if isinstance(other, ReversingFunction):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ReversingFunction({self._data!r})"

    def __reduce__(self):
        return (ReversingFunction, (self._data,))

    def lookup(self, a: int, b: int) -> Word | None:
        """f(a, b), the empty word on the diagonal, None when undefined."""
        if a == b:
            return ()
        return self._data.get((a, b))

    def pairs(self) -> list[tuple[int, int]]:
        """Unordered domain pairs as (a, b) with a < b."""
        return [(a, b) for a, b in self._data if a < b]


class Source(enum.Enum):
    COMPLEMENT_TABLE = "ComplementTable"
    RELATION_LIST = "RelationList"


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    f: ReversingFunction
    source: Source = field(default=Source.RELATION_LIST, compare=False)

    @classmethod
    def from_relations(cls, letters: Iterable[str], relations: Iterable[tuple[str, str]]):
        """Build from relation strings, e.g. ``from_relations("ab", [("aba", "bb")])``."""
        alphabet = Alphabet(tuple(letters))
        table: dict[tuple[int, int], Word] = {}
        for lhs, rhs in relations:
            _add_relation(table, alphabet.parse_word(lhs), alphabet.parse_word(rhs), alphabet)
        return cls(alphabet, ReversingFunction(table), Source.RELATION_LIST)

    def word(self, text: str) -> Word:
        return self.alphabet.parse_word(text)

    def signed(self, text: str) -> SignedWord:
        return self.alphabet.parse_word(text, signed=True)

    def fmt(self, word: Word | None) -> str:
        if word is None:
            return "⊥"
        return self.alphabet.format_word(word)

    def fmt_signed(self, word: SignedWord) -> str:
        return self.alphabet.format_signed(word)

    def relation_lengths(self) -> list[tuple[int, int]]:
        return [(len(l), len(r)) for l, r in relations_of(self)]

    def format(self) -> str:
        """Canonical text (relation list form)."""
        lines = ["letters " + " ".join(self.alphabet.letters)]
        for lhs, rhs in relations_of(self):
            lines.append(f"rel {self.fmt(lhs)} = {self.fmt(rhs)}")
        return "\n".join(lines) + "\n"


def relations_of(p: Presentation) -> list[tuple[Word, Word]]:
    rels = []
    for a, b in p.f.pairs():
        rels.append(((a,) + p.f[(a, b)], (b,) + p.f[(b, a)]))
    rels.sort(key=lambda r: (shortlex_key(r[0]), shortlex_key(r[1])))
    return rels


def _add_relation(table, lhs: Word, rhs: Word, alphabet: Alphabet, line: int | None = None):
    if not lhs or not rhs:
        raise PresentationError("EmptySide", "relation side is empty", line)
    a, b = lhs[0], rhs[0]
    if a == b:
        raise PresentationError(
            "SameHeadLetter",
            f"both sides start with {alphabet.letters[a]!r}",
            line,
        )
    if (a, b) in table or (b, a) in table:
        raise PresentationError(
            "DuplicatePair",
            f"pair ({alphabet.letters[min(a, b)]},{alphabet.letters[max(a, b)]}) already related",
            line,
        )
    table[(a, b)] = lhs[1:]
    table[(b, a)] = rhs[1:]


def _parse_side(alphabet: Alphabet, text: str, line: int) -> Word:
    word: Word = ()
    for chunk in text.split():
        try:
            word += alphabet.parse_word(chunk)
        except WordParseError as exc:
            raise PresentationError("UnknownLetter", str(exc), line) from None
    return word


def parse_presentation(text: str) -> Presentation:
    alphabet: Alphabet | None = None
    table: dict[tuple[int, int], Word] = {}
    saw_rel = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "letters":
            if alphabet is not None:
                raise PresentationError("Syntax", "'letters' given twice", lineno)
            alphabet = Alphabet(tuple(rest.split()))
            continue
        if alphabet is None:
            raise PresentationError("Syntax", "'letters' must come first", lineno)
        if "=" not in rest:
            raise PresentationError("Syntax", f"expected '=' in {line!r}", lineno)
        lhs_text, rhs_text = rest.split("=", 1)
        if "=" in rhs_text:
            raise PresentationError("Syntax", "more than one '='", lineno)
        if keyword == "rel":
            saw_rel = True
            lhs = _parse_side(alphabet, lhs_text, lineno)
            rhs = _parse_side(alphabet, rhs_text, lineno)
            _add_relation(table, lhs, rhs, alphabet, lineno)
        elif keyword == "compl":
            names = lhs_text.split()
            if len(names) != 2:
                raise PresentationError("Syntax", "expected 'compl <a> <b> = <word>'", lineno)
            try:
                a, b = (alphabet.index(t) for t in names)
            except WordParseError as exc:
                raise PresentationError("UnknownLetter", str(exc), lineno) from None
            if a == b:
                raise PresentationError("DiagonalEntry", "f(a,a) is implicit", lineno)
            if (a, b) in table:
                raise PresentationError(
                    "DuplicatePair", f"f({names[0]},{names[1]}) given twice", lineno
                )
            table[(a, b)] = _parse_side(alphabet, rhs_text, lineno)
        else:
            raise PresentationError("Syntax", f"unknown keyword {keyword!r}", lineno)
    if alphabet is None:
        raise PresentationError("Syntax", "missing 'letters' line")
    source = Source.RELATION_LIST if saw_rel else Source.COMPLEMENT_TABLE
    return Presentation(alphabet, ReversingFunction(table), source)


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def parse_word(text: str, alphabet: Alphabet, signed: bool = False):
    return alphabet.parse_word(text, signed)
