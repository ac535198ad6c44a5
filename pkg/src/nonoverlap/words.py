"""Words, bipartitions and codes over the alphabet Z_q = {0, ..., q-1}.

A word is a plain tuple of ints. Codes are immutable sets of words that share
an alphabet; they are always iterated in canonical order (by length, then
lexicographically) so that file output and search results are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


def make_word(symbols: Iterable[int], q: int) -> Word:
    """Validate ``symbols`` as a nonempty word over Z_q and return it as a tuple."""
    w = tuple(int(s) for s in symbols)
    if not w:
        raise ValueError("a word has length at least 1")
    for s in w:
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} outside Z_{q}")
    return w


def prefixes(w: Sequence[int]) -> set[Word]:
    """Proper nonempty prefixes of ``w`` (lengths 1..n-1)."""
    w = tuple(w)
    return {w[:i] for i in range(1, len(w))}


def suffixes(w: Sequence[int]) -> set[Word]:
    """Proper nonempty suffixes of ``w`` (lengths 1..n-1)."""
    w = tuple(w)
    return {w[i:] for i in range(1, len(w))}


def contains_subword(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff ``v`` occurs as a contiguous block of ``u``."""
    u, v = tuple(u), tuple(v)
    m = len(v)
    return any(u[i:i + m] == v for i in range(len(u) - m + 1))


def cyclic_occurrences(u: Sequence[int], v: Sequence[int]) -> int:
    """Number of start positions at which ``v`` occurs in ``u`` read cyclically."""
    u, v = tuple(u), tuple(v)
    n, m = len(u), len(v)
    if m > n:
        raise ValueError(f"pattern of length {m} longer than cyclic word of length {n}")
    return sum(
        all(u[(i + j) % n] == v[j] for j in range(m))
        for i in range(n)
    )


def self_overlaps(w: Sequence[int]) -> bool:
    """True iff some proper prefix of ``w`` is also a suffix of ``w``."""
    w = tuple(w)
    return any(w[:i] == w[-i:] for i in range(1, len(w)))


def word_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


@dataclass(frozen=True)
class Bipartition:
    """An ordered split (I, J) of Z_q into two disjoint nonempty parts."""

    I: frozenset[int]
    J: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "I", frozenset(self.I))
        object.__setattr__(self, "J", frozenset(self.J))
        if not self.I or not self.J:
            raise ValueError("both parts of a bipartition must be nonempty")
        if self.I & self.J:
            raise ValueError(f"parts overlap on {sorted(self.I & self.J)}")
        if self.I | self.J != frozenset(range(self.q)):
            raise ValueError("I and J must cover exactly {0, ..., q-1}")

    @property
    def q(self) -> int:
        return len(self.I) + len(self.J)

    @classmethod
    def canonical(cls, q: int, isize: int) -> "Bipartition":
        """I = {0, ..., isize-1}, J = the rest."""
        if not 1 <= isize <= q - 1:
            raise ValueError(f"isize must lie in 1..{q - 1}, got {isize}")
        return cls(frozenset(range(isize)), frozenset(range(isize, q)))

    @property
    def sorted_I(self) -> tuple[int, ...]:
        return tuple(sorted(self.I))

    @property
    def sorted_J(self) -> tuple[int, ...]:
        return tuple(sorted(self.J))


@dataclass(frozen=True)
class Code:
    """A finite set of words over Z_q; nonempty codes have minimum length >= 2."""

    q: int
    words: frozenset[Word] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.q}")
        ws = frozenset(make_word(w, self.q) for w in self.words)
        if any(len(w) < 2 for w in ws):
            raise ValueError("codewords must have length at least 2")
        object.__setattr__(self, "words", ws)

    @classmethod
    def _trusted(cls, q: int, words: frozenset[Word]) -> "Code":
        # builders emit valid tuples already; skip per-word revalidation
        obj = object.__new__(cls)
        object.__setattr__(obj, "q", q)
        object.__setattr__(obj, "words", words)
        return obj

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted())

    def __contains__(self, w: object) -> bool:
        return w in self.words

    def sorted(self) -> list[Word]:
        return sorted(self.words, key=word_key)

    @property
    def lengths(self) -> list[int]:
        return sorted({len(w) for w in self.words})

    @property
    def h(self) -> int:
        return min(len(w) for w in self.words)

    @property
    def n(self) -> int:
        return max(len(w) for w in self.words)

    @property
    def is_fixed_length(self) -> bool:
        return len(self.lengths) <= 1

    def length_profile(self) -> dict[int, int]:
        prof: dict[int, int] = {}
        for w in self.words:
            prof[len(w)] = prof.get(len(w), 0) + 1
        return dict(sorted(prof.items()))

    def union(self, other: Iterable[Word]) -> "Code":
        return Code(self.q, self.words | frozenset(tuple(w) for w in other))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

class CodeFormatError(ValueError):
    """Raised when a code file cannot be parsed."""


def format_word(w: Sequence[int], q: int) -> str:
    if q <= 10:
        return "".join(str(s) for s in w)
    return ",".join(str(s) for s in w)


def parse_word(text: str, q: int) -> Word:
    text = text.strip()
    try:
        if q <= 10:
            symbols = [int(c) for c in text]
        else:
            symbols = [int(c) for c in text.split(",")]
        return make_word(symbols, q)
    except ValueError as exc:
        raise CodeFormatError(f"bad word {text!r}: {exc}") from None


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_q_header(line: str) -> int:
    key, _, value = line.partition("=")
    if key.strip() != "q" or not value.strip().isdigit():
        raise CodeFormatError(f"expected 'q=<integer>' header, got {line!r}")
    return int(value)


def loads_code(text: str) -> Code:
    lines = list(_content_lines(text))
    if not lines:
        raise CodeFormatError("empty code file (missing 'q=' header)")
    q = parse_q_header(lines[0][1])
    if q < 2:
        raise CodeFormatError(f"alphabet size must be at least 2, got {q}")
    words = []
    for lineno, line in lines[1:]:
        try:
            words.append(parse_word(line, q))
        except CodeFormatError as exc:
            raise CodeFormatError(f"line {lineno}: {exc}") from None
    if len(set(words)) != len(words):
        raise CodeFormatError("duplicate codeword")
    try:
        return Code(q, frozenset(words))
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from None


def dumps_code(code: Code) -> str:
    lines = [f"q={code.q}"]
    lines.extend(format_word(w, code.q) for w in code)
    return "\n".join(lines) + "\n"
