"""Builders for the binary-to-q-ary lift and the fixed- and variable-length constructions.

All builders enumerate by backtracking with the window/run constraint checked
as each symbol is placed, so no q^n post-filtering ever happens.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import Bipartition, Code, Word


@dataclass(frozen=True)
class ForbiddenSet:
    """A set C of length-k blocks; a word is C-free if no length-k window lies in C."""

    k: int
    blocks: frozenset[Word]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("block length k must be at least 1")
        blocks = frozenset(tuple(b) for b in self.blocks)
        if any(len(b) != self.k for b in blocks):
            raise ValueError(f"all forbidden blocks must have length {self.k}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def power(cls, symbols: Iterable[int], k: int) -> "ForbiddenSet":
        """All k-fold products of ``symbols`` (e.g. I^k)."""
        syms = sorted(symbols)
        return cls(k, frozenset(itertools.product(syms, repeat=k)))


def is_free(w: Sequence[int], f: ForbiddenSet) -> bool:
    w = tuple(w)
    return all(w[i:i + f.k] not in f.blocks for i in range(len(w) - f.k + 1))


# ---------------------------------------------------------------------------
# The lift from binary to q-ary
# ---------------------------------------------------------------------------

def phi_expand(omega: Sequence[int], bp: Bipartition) -> set[Word]:
    """Replace each 0 of a binary word by any symbol of I and each 1 by any symbol of J."""
    if any(b not in (0, 1) for b in omega):
        raise ValueError(f"phi_expand needs a binary word, got {tuple(omega)}")
    factors = [bp.sorted_I if b == 0 else bp.sorted_J for b in omega]
    return set(itertools.product(*factors))


def phi_code(code: Code, bp: Bipartition) -> Code:
    if code.q != 2:
        raise ValueError("phi_code lifts binary codes only")
    out: set[Word] = set()
    for omega in code.words:
        out |= phi_expand(omega, bp)
    return Code._trusted(bp.q, frozenset(out))


# ---------------------------------------------------------------------------
# Backtracking core
# ---------------------------------------------------------------------------

def _run_limited(
    length: int,
    first: Sequence[int],
    last: frozenset[int],
    low: frozenset[int],
    low_max: int | None,
    high_max: int | None,
    alphabet: Sequence[int],
) -> list[Word]:
    """Words of ``length`` starting in ``first``, ending in ``last``, where maximal runs
    of symbols from ``low`` are shorter than ``low_max`` and runs of the remaining
    symbols are shorter than ``high_max`` (None = unbounded)."""
    out: list[Word] = []
    buf = [0] * length
    lo = low_max if low_max is not None else length + 1
    hi = high_max if high_max is not None else length + 1

    def rec(pos: int, run_low: int, run_high: int) -> None:
        if pos == length:
            if buf[-1] in last:
                out.append(tuple(buf))
            return
        for s in (first if pos == 0 else alphabet):
            if s in low:
                r_lo, r_hi = run_low + 1, 0
                if r_lo >= lo:
                    continue
            else:
                r_lo, r_hi = 0, run_high + 1
                if r_hi >= hi:
                    continue
            buf[pos] = s
            rec(pos + 1, r_lo, r_hi)

    if length > 0:
        rec(0, 0, 0)
    return out


def _check_fixed_params(n: int, k: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}, got {k}")


def _check_variable_params(n: int, k: int) -> None:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if n < 2 * k + 2:
        raise ValueError(f"n must be at least 2k+2 = {2 * k + 2}, got {n}")


# ---------------------------------------------------------------------------
# Fixed-length constructions
# ---------------------------------------------------------------------------

def construction_I(n: int, q: int, k: int) -> Code:
    """k leading zeros, then a nonzero symbol, a nonzero last symbol, and no 0^k in the tail."""
    _check_fixed_params(n, k)
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    tail_len = n - k
    out: list[Word] = []
    buf = [0] * n

    def rec(pos: int, zeros: int) -> None:
        if pos == n:
            if buf[-1] != 0:
                out.append(tuple(buf))
            return
        for s in range(q):
            if pos == k and s == 0:
                continue
            z = zeros + 1 if s == 0 else 0
            if z >= k:
                continue
            buf[pos] = s
            rec(pos + 1, z)

    if tail_len >= 1:
        rec(k, 0)
    return Code._trusted(q, frozenset(out))


def construction_IA(n: int, bp: Bipartition, forbidden: ForbiddenSet) -> Code:
    """Prefix drawn from C, then a J symbol, a J last symbol and a C-free tail."""
    k = forbidden.k
    _check_fixed_params(n, k)
    if any(s not in bp.I for b in forbidden.blocks for s in b):
        raise ValueError("forbidden blocks must lie inside I^k")
    q = bp.q
    tail_len = n - k
    alphabet = range(q)
    out: list[Word] = []
    buf = [0] * tail_len

    def rec(pos: int) -> None:
        if pos == tail_len:
            if buf[-1] in bp.J:
                out.append(tuple(buf))
            return
        for s in (bp.sorted_J if pos == 0 else alphabet):
            buf[pos] = s
            if pos + 1 >= k and tuple(buf[pos + 1 - k:pos + 1]) in forbidden.blocks:
                continue
            rec(pos + 1)

    rec(0)
    tails = out
    words = frozenset(p + t for p in forbidden.blocks for t in tails)
    return Code._trusted(q, words)


def construction_I_prime(n: int, bp: Bipartition, k: int) -> Code:
    """I^k prefix, then a J symbol, a J last symbol, and no k consecutive I symbols in the tail."""
    _check_fixed_params(n, k)
    tails = _run_limited(n - k, bp.sorted_J, bp.J, bp.I, k, None, range(bp.q))
    heads = list(itertools.product(bp.sorted_I, repeat=k))
    return Code._trusted(bp.q, frozenset(h + t for h in heads for t in tails))


# ---------------------------------------------------------------------------
# Variable-length constructions
# ---------------------------------------------------------------------------

def construction_II(n: int, k: int) -> Code:
    """Binary variable-length code: 1^k 0 ... 1 0^k with a middle free of 0^k and 1^k."""
    _check_variable_params(n, k)
    out: list[Word] = []
    for i in range(2 * k + 2, n + 1):
        mid_len = i - 2 * k
        buf = [0] * mid_len

        def rec(pos: int, run_sym: int, run: int) -> None:
            if pos == mid_len:
                if buf[0] == 0 and buf[-1] == 1:
                    out.append((1,) * k + tuple(buf) + (0,) * k)
                return
            for s in (0, 1):
                r = run + 1 if s == run_sym else 1
                if r >= k:
                    continue
                buf[pos] = s
                rec(pos + 1, s, r)

        rec(0, -1, 0)
    return Code._trusted(2, frozenset(out))


def r_words(length: int, bp: Bipartition, k: int) -> list[Word]:
    """(I^k u J^k)-free words of ``length`` starting in I and ending in J."""
    return _run_limited(length, bp.sorted_I, bp.J, bp.I, k, k, range(bp.q))


def construction_II_prime(n: int, bp: Bipartition, k: int) -> Code:
    """Union over 2k+2 <= i <= n of J^k x R(i-2k) x I^k."""
    _check_variable_params(n, k)
    heads = list(itertools.product(bp.sorted_J, repeat=k))
    feet = list(itertools.product(bp.sorted_I, repeat=k))
    out: set[Word] = set()
    for i in range(2 * k + 2, n + 1):
        for mid in r_words(i - 2 * k, bp, k):
            for h in heads:
                hm = h + mid
                out.update(hm + f for f in feet)
    return Code._trusted(bp.q, frozenset(out))
