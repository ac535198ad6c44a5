"""Upper bounds on the size of non-overlapping codes, as exact rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .count import CodeSizeProfile, b_count_recurrence


@dataclass(frozen=True)
class BoundValue:
    """An upper bound ``|S| <= exact`` (or ``< exact`` when strict)."""

    exact: Fraction
    strict: bool

    @property
    def integer_bound(self) -> int:
        """Largest code size the bound allows."""
        fl = self.exact.numerator // self.exact.denominator
        if self.strict and self.exact.denominator == 1:
            return fl - 1
        return fl

    def admits(self, size: int) -> bool:
        return size <= self.integer_bound


def _check(n: int, q: int) -> None:
    if n < 2 or q < 2:
        raise ValueError(f"need n, q >= 2, got n={n}, q={q}")


def levenshtein_bound(n: int, q: int) -> BoundValue:
    """((n-1)/n)^{n-1} q^n / n; attained when n divides q."""
    _check(n, q)
    return BoundValue(Fraction(n - 1, n) ** (n - 1) * Fraction(q ** n, n), strict=False)


def chee_bound(n: int, q: int) -> BoundValue:
    """q^n / (2n - 1), never attained."""
    _check(n, q)
    return BoundValue(Fraction(q ** n, 2 * n - 1), strict=True)


def _lower_layers(profile: CodeSizeProfile, n: int) -> tuple[CodeSizeProfile, int]:
    if profile.n is not None and profile.n > n:
        raise ValueError(f"profile has codewords longer than n={n}")
    lower = profile.below(n)
    return lower, (lower.h if lower.h is not None else n)


def recursive_bound(profile: CodeSizeProfile, n: int, m: int) -> BoundValue:
    """Bound on the number of length-n codewords given the counts of shorter ones.

    ``q^n/(m+n) - q^{-m} sum_{h<=i<n} b(m+n-i) |J(i)|`` for 1 <= m < h; the avoiding
    counts b are recomputed from ``profile`` (entries of length n are ignored).
    """
    _check(n, profile.q)
    lower, h = _lower_layers(profile, n)
    if not 1 <= m < h:
        raise ValueError(f"m must lie in 1..{h - 1}, got {m}")
    q = profile.q
    tail = sum(b_count_recurrence(lower, m + n - i) * s for i, s in lower.sizes.items())
    return BoundValue(Fraction(q ** n, m + n) - Fraction(tail, q ** m), strict=True)


def recursive_bound_min(profile: CodeSizeProfile, n: int) -> tuple[BoundValue, int]:
    """The smallest recursive bound over 1 <= m < h, and the m attaining it (least m on ties)."""
    _check(n, profile.q)
    _, h = _lower_layers(profile, n)
    if h < 2:
        raise ValueError("minimum codeword length must be at least 2")
    best: tuple[BoundValue, int] | None = None
    for m in range(1, h):
        bv = recursive_bound(profile, n, m)
        if best is None or bv.exact < best[0].exact:
            best = (bv, m)
    assert best is not None
    return best
