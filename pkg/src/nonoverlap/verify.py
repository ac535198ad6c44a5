"""Brute-force certifiers for the non-overlapping property and its relatives.

Everything here works straight from the definitions and is used as the
independent oracle for the closed forms in :mod:`nonoverlap.count`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

from .config import check_cap
from .words import Code, Word, contains_subword, prefixes, self_overlaps, suffixes

_CHUNK = 1 << 18


@dataclass(frozen=True)
class OverlapWitness:
    """Why a code fails to be non-overlapping.

    ``prefix-suffix``: ``overlap`` is a proper prefix of ``u`` and a proper
    suffix of ``v`` (``u`` may equal ``v``).  ``subword``: the codeword ``v``
    (== ``overlap``) occurs inside the distinct codeword ``u``.
    """

    kind: Literal["prefix-suffix", "subword"]
    u: Word
    v: Word
    overlap: Word

    def holds(self) -> bool:
        if self.kind == "prefix-suffix":
            return self.overlap in prefixes(self.u) and self.overlap in suffixes(self.v)
        return self.u != self.v and self.overlap == self.v and contains_subword(self.u, self.v)


def find_overlap(code: Code) -> OverlapWitness | None:
    """Return a witness that ``code`` is overlapping, or None if it is non-overlapping.

    The witness is deterministic: the shortest (then lexicographically least)
    shared prefix/suffix, with the canonically least ``u`` and ``v``.
    """
    words = code.sorted()
    if not words:
        return None
    for ell in range(1, code.n):
        pre: dict[Word, Word] = {}
        suf: dict[Word, Word] = {}
        for w in words:
            if len(w) > ell:
                pre.setdefault(w[:ell], w)
                suf.setdefault(w[-ell:], w)
        common = pre.keys() & suf.keys()
        if common:
            x = min(common)
            return OverlapWitness("prefix-suffix", pre[x], suf[x], x)

    lengths = code.lengths
    if len(lengths) > 1:
        members = code.words
        for u in words:
            for ell in lengths:
                if ell >= len(u):
                    break
                for i in range(len(u) - ell + 1):
                    v = u[i:i + ell]
                    if v in members:
                        return OverlapWitness("subword", u, v, v)
    return None


def is_non_overlapping(code: Code) -> bool:
    return find_overlap(code) is None


def _fixed_length(code: Code, n: int | None) -> int:
    if len(code) == 0:
        if n is None:
            raise ValueError("word length n is required for an empty code")
        return n
    if not code.is_fixed_length:
        raise ValueError("non-expandability is only defined for fixed-length codes")
    if n is not None and n != code.n:
        raise ValueError(f"code has length {code.n}, not {n}")
    return code.n


def expansion_candidates(code: Code, n: int | None = None, cap: int | None = None) -> Iterator[Word]:
    """Yield, in lexicographic order, every x outside ``code`` with code + {x} non-overlapping.

    ``code`` must itself be a fixed-length non-overlapping code.
    """
    n = _fixed_length(code, n)
    check_cap(code.q, n, cap)
    pre_s: set[Word] = set()
    suf_s: set[Word] = set()
    for w in code.words:
        pre_s |= prefixes(w)
        suf_s |= suffixes(w)
    for x in itertools.product(range(code.q), repeat=n):
        if x in code.words or self_overlaps(x):
            continue
        if any(x[:i] in suf_s or x[-i:] in pre_s for i in range(1, n)):
            continue
        yield x


def find_expansion(code: Code, n: int | None = None, cap: int | None = None) -> Word | None:
    """Least word that can be added to the fixed-length non-overlapping ``code``, if any."""
    return next(expansion_candidates(code, n, cap), None)


def is_non_expandable(code: Code, n: int | None = None, cap: int | None = None) -> bool:
    return find_expansion(code, n, cap) is None


# ---------------------------------------------------------------------------
# Exhaustive counting over Z_q^L (vectorised, chunked)
# ---------------------------------------------------------------------------

def _index_chunks(q: int, length: int) -> Iterator[np.ndarray]:
    """Words of Z_q^length as their base-q integer values, in blocks."""
    total = q ** length
    for start in range(0, total, _CHUNK):
        yield np.arange(start, min(start + _CHUNK, total), dtype=np.int64)


_TABLE_LIMIT = 1 << 22


class _Matcher:
    """Membership test for the length-``width`` codewords, given window values."""

    def __init__(self, q: int, width: int, words: list[Word]):
        values = []
        for w in words:
            val = 0
            for s in w:
                val = val * q + s
            values.append(val)
        self.width = width
        if q ** width <= _TABLE_LIMIT:
            self.table: np.ndarray | None = np.zeros(q ** width, dtype=bool)
            self.table[values] = True
            self.values = None
        else:
            self.table = None
            self.values = np.array(sorted(values), dtype=np.int64)

    def __call__(self, windows: np.ndarray) -> np.ndarray:
        if self.table is not None:
            return self.table[windows]
        return np.isin(windows, self.values)


def _matchers(code: Code, max_width: int | None = None) -> list[_Matcher]:
    by_len: dict[int, list[Word]] = {}
    for w in code.words:
        by_len.setdefault(len(w), []).append(w)
    out = []
    for width, words in sorted(by_len.items()):
        if max_width is not None and width > max_width:
            continue
        _check_int64(code.q, width)
        out.append(_Matcher(code.q, width, words))
    return out


def _window(idx: np.ndarray, q: int, length: int, start: int, width: int) -> np.ndarray:
    """Value of the cyclic window of ``width`` symbols beginning at ``start``."""
    if start:
        # rotate left by ``start`` symbols
        head = q ** (length - start)
        idx = (idx % head) * q ** start + idx // head
    return idx // q ** (length - width)


def _check_int64(q: int, width: int) -> None:
    if q ** width >= 2 ** 63:
        raise ValueError(f"codewords of length {width} over Z_{q} too long to encode")


def avoiding_count_bruteforce(code: Code, m: int, cap: int | None = None) -> int:
    """Number of length-m words over Z_q containing no codeword as a (linear) subword."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1
    check_cap(code.q, m, cap)
    _check_int64(code.q, m)
    matchers = _matchers(code, max_width=m)
    q = code.q
    count = 0
    for idx in _index_chunks(q, m):
        bad = np.zeros(idx.shape[0], dtype=bool)
        for match in matchers:
            for p in range(m - match.width + 1):
                # linear window: digits p .. p+width-1, no wrap needed
                bad |= match(idx // q ** (m - p - match.width) % q ** match.width)
        count += int(idx.shape[0] - bad.sum())
    return count


def exactly_one_cyclic_count_bruteforce(code: Code, length: int, cap: int | None = None) -> int:
    """Number of length-``length`` words with exactly one cyclic codeword occurrence in total."""
    if len(code) == 0:
        return 0
    if length < code.n:
        raise ValueError(f"cyclic length {length} shorter than longest codeword {code.n}")
    check_cap(code.q, length, cap)
    _check_int64(code.q, length)
    matchers = _matchers(code)
    q = code.q
    count = 0
    for idx in _index_chunks(q, length):
        # a window (start, width) matches at most one codeword, so two flags suffice
        once = np.zeros(idx.shape[0], dtype=bool)
        twice = np.zeros(idx.shape[0], dtype=bool)
        for match in matchers:
            for p in range(length):
                hit = match(_window(idx, q, length, p, match.width))
                twice |= once & hit
                once |= hit
        count += int((once & ~twice).sum())
    return count

