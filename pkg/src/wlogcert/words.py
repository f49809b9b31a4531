"""Words over a finite alphabet of generators and their inverses.

A :class:`Word` is an immutable sequence of :class:`Letter` values.  No
operation reduces a word implicitly; reduction is always explicit
(:func:`free_reduce`, :func:`cyclic_reduce`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "Letter",
    "Word",
    "Occurrence",
    "WordParseError",
    "GENERATOR_NAME",
    "parse_word",
    "format_word",
    "invert",
    "free_reduce",
    "cyclic_reduce",
    "is_freely_reduced",
    "is_cyclically_reduced",
    "occurrences",
]

GENERATOR_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

FORWARD = "fwd"
INVERTED = "inv"


class WordParseError(ValueError):
    """Raised for unknown generator names or malformed exponent suffixes."""


class Letter(NamedTuple):
    gen: str
    sign: int = 1

    def inverse(self) -> Letter:
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return self.gen if self.sign > 0 else f"{self.gen}^-1"


@dataclass(frozen=True)
class Word:
    """Finite sequence of signed generator letters (possibly empty)."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(
            l if isinstance(l, Letter) else Letter(*l) for l in self.letters
        )
        for l in letters:
            if l.sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {l.sign!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *items: str | Letter | tuple[str, int]) -> Word:
        """Build a word from letters or bare names (``"a"``, ``"a^-1"``)."""
        out = []
        for it in items:
            if isinstance(it, str):
                if it.endswith("^-1"):
                    out.append(Letter(it[:-3], -1))
                else:
                    out.append(Letter(it, 1))
            else:
                out.append(Letter(*it))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.letters[idx])
        return self.letters[idx]

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + tuple(other))

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def inverse(self) -> Word:
        return invert(self)

    def rotate(self, k: int) -> Word:
        """Cyclic rotation so that letter ``k`` comes first."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k])

    @property
    def generators(self) -> set[str]:
        return {l.gen for l in self.letters}


class Occurrence(NamedTuple):
    """A match of a needle inside (relator) word ``relator``.

    ``position`` is the start offset in ``[0, len(haystack))``; for cyclic
    matches the needle may wrap past the end.  ``orientation`` is ``"fwd"``
    when the needle itself matches and ``"inv"`` when its inverse does.
    """

    relator: int
    position: int
    orientation: str
    cyclic: bool


def parse_word(text: str, generators: Iterable[str]) -> Word:
    """Parse whitespace-separated tokens ``name`` or ``name^-1``.

    No reduction is performed.

    >>> str(parse_word("d a", "abcd"))
    'd a'
    """
    known = set(generators)
    letters = []
    for tok in text.split():
        name, sep, exp = tok.partition("^")
        if sep:
            if exp != "-1":
                raise WordParseError(f"malformed exponent suffix in {tok!r}")
            sign = -1
        else:
            sign = 1
        if not GENERATOR_NAME.match(name):
            raise WordParseError(f"malformed generator name {name!r}")
        if name not in known:
            raise WordParseError(f"unknown generator {name!r}")
        letters.append(Letter(name, sign))
    return Word(tuple(letters))


def format_word(w: Word, compact: bool = False) -> str:
    """Render ``w`` in the token syntax read by :func:`parse_word`.

    With ``compact`` the letters are concatenated without separators, which
    is only unambiguous when every generator name is a single character.
    """
    return ("" if compact else " ").join(str(l) for l in w)


def invert(w: Word) -> Word:
    return Word(tuple(l.inverse() for l in reversed(w.letters)))


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for l in w:
        if stack and stack[-1].gen == l.gen and stack[-1].sign == -l.sign:
            stack.pop()
        else:
            stack.append(l)
    return Word(tuple(stack))


def cyclic_reduce(w: Word) -> Word:
    letters = free_reduce(w).letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == letters[j - 1].inverse():
        i += 1
        j -= 1
    return Word(letters[i:j])


def is_freely_reduced(w: Word) -> bool:
    return all(a != b.inverse() for a, b in zip(w.letters, w.letters[1:]))


def is_cyclically_reduced(w: Word) -> bool:
    # the empty word counts as cyclically reduced
    if not is_freely_reduced(w):
        return False
    return len(w) < 2 or w.letters[0] != w.letters[-1].inverse()


def _match_at(needle: Sequence[Letter], hay: Sequence[Letter], pos: int, cyclic: bool) -> bool:
    n = len(hay)
    for i, l in enumerate(needle):
        k = pos + i
        if cyclic:
            k %= n
        elif k >= n:
            return False
        if hay[k] != l:
            return False
    return True


def occurrences(
    needle: Word,
    haystack: Word,
    cyclic: bool = False,
    include_inverse: bool = False,
    relator: int = 0,
) -> list[Occurrence]:
    """All offsets at which ``needle`` (and optionally its inverse) occurs.

    Cyclic matching reads ``haystack`` as a cyclic word; a needle longer
    than the haystack never matches.  Results are ordered by position, then
    orientation (forward first).
    """
    if not needle:
        raise ValueError("needle must be non-empty")
    hay = haystack.letters
    n = len(hay)
    if len(needle) > n:
        return []
    patterns = [(FORWARD, needle.letters)]
    if include_inverse:
        patterns.append((INVERTED, invert(needle).letters))
    last = n if cyclic else n - len(needle) + 1
    found = []
    for pos in range(last):
        for orientation, pat in patterns:
            if _match_at(pat, hay, pos, cyclic):
                found.append(Occurrence(relator, pos, orientation, cyclic))
    return found
