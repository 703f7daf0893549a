"""Words over a generating set, stored syllable-compressed.

A word is a sequence of syllables (generator, nonzero exponent) and is kept
freely reduced: adjacent syllables always carry distinct generators.  Free
reduction happens in the factory, so every :class:`Word` in circulation is
already canonical for the free group; relation-aware equality lives in
:mod:`artinret.dihedral`.

The text grammar used by the CLI is whitespace-separated tokens ``g`` or
``g^k`` with ``k`` a nonzero integer, e.g. ``a b^-1 a^3``; the single token
``1`` denotes the empty word (a bare ``1`` can never be a generator name, so
this is unambiguous).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .coxeter import is_valid_generator_name

Syllable = tuple[str, int]


class WordFormatError(ValueError):
    """Malformed word text."""


@dataclass(frozen=True)
class Word:
    syllables: tuple[Syllable, ...] = ()

    @staticmethod
    def from_syllables(syllables: Iterable[Syllable]) -> "Word":
        """Build a word, merging adjacent equal generators and dropping zeros."""
        reduced: list[list] = []
        for gen, exp in syllables:
            if exp == 0:
                continue
            if reduced and reduced[-1][0] == gen:
                reduced[-1][1] += exp
                if reduced[-1][1] == 0:
                    reduced.pop()
            else:
                reduced.append([gen, exp])
        return Word(tuple((g, e) for g, e in reduced))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def length(self) -> int:
        """Letter length: total of |exponent| over syllables."""
        return sum(abs(e) for _, e in self.syllables)

    def syllable_length(self) -> int:
        return len(self.syllables)

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def letters(self) -> Iterator[tuple[str, int]]:
        """Yield (generator, +1/-1) letter by letter."""
        for gen, exp in self.syllables:
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, sign

    def __mul__(self, other: "Word") -> "Word":
        return Word.from_syllables(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = Word()
        for _ in range(n):
            result = result * self
        return result

    def conjugated_by(self, alpha: "Word") -> "Word":
        """alpha * self * alpha^-1."""
        return alpha * self * alpha.inverse()

    def __str__(self) -> str:
        return format_word(self)


def word(*syllables: Syllable) -> Word:
    return Word.from_syllables(syllables)


def gen(name: str, exp: int = 1) -> Word:
    return Word.from_syllables([(name, exp)])


def free_reduce(syllables: Iterable[Syllable] | Word) -> Word:
    """Canonical freely-reduced form of a raw syllable sequence; idempotent."""
    if isinstance(syllables, Word):
        return syllables
    return Word.from_syllables(syllables)


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return w.inverse()


def conjugate(w: Word, by: Word) -> Word:
    return w.conjugated_by(by)


def pi_word(s: str, t: str, m: int) -> Word:
    """The alternating word sts... of length m, beginning with s.

    m = 0 yields the empty word; s = t collapses to a single syllable s^m.
    """
    if m < 0:
        raise ValueError(f"alternating word length must be >= 0, got {m}")
    if s == t:
        return Word.from_syllables([(s, m)])
    return Word.from_syllables([(s if i % 2 == 0 else t, 1) for i in range(m)])


Grading = Literal["total", "per-generator"]


def abelianize(w: Word, grading: Grading) -> int | dict[str, int]:
    """Exponent-sum image of a word.

    "total" returns one integer (sum of all exponents) and is a homomorphism
    for every Artin group.  "per-generator" returns the exponent sum per
    generator; it is a homomorphism only when every defining relation is
    balanced per generator (all labels even), which the caller must ensure.
    """
    if grading == "total":
        return sum(e for _, e in w.syllables)
    if grading == "per-generator":
        sums: dict[str, int] = {}
        for g, e in w.syllables:
            sums[g] = sums.get(g, 0) + e
        return {g: e for g, e in sums.items() if e != 0}
    raise ValueError(f"unknown grading {grading!r}")


def parse_word(text: str) -> Word:
    """Parse the whitespace-separated ``g`` / ``g^k`` token grammar."""
    tokens = text.split()
    if tokens == ["1"]:
        return Word()
    syllables: list[Syllable] = []
    for pos, token in enumerate(tokens, start=1):
        name, caret, exp_text = token.partition("^")
        if not is_valid_generator_name(name):
            raise WordFormatError(f"token {pos}: invalid generator name {name!r}")
        if caret:
            try:
                exp = int(exp_text)
            except ValueError:
                raise WordFormatError(f"token {pos}: invalid exponent {exp_text!r}") from None
            if exp == 0:
                raise WordFormatError(f"token {pos}: exponent must be nonzero")
        else:
            exp = 1
        syllables.append((name, exp))
    return Word.from_syllables(syllables)


def format_word(w: Word) -> str:
    if w.is_identity:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.syllables)
