"""Exact cardinalities: recurrences, rational generating functions and growth constants.

Every count is a Python int. Generating functions are kept as integer
numerator/denominator pairs and expanded through the linear recurrence their
denominator induces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import mpmath

# ---------------------------------------------------------------------------
# Polynomials and rational series
# ---------------------------------------------------------------------------


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPolynomial":
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))


ONE = IntPolynomial((1,))


@dataclass(frozen=True)
class RationalSeries:
    """The formal power series numerator / denominator (denominator(0) != 0)."""

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        if self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def coefficients(self, upto: int) -> list[int]:
        return series_coefficients(self, upto)

    def __getitem__(self, n: int) -> int:
        return series_coefficients(self, n)[n]


def series_coefficients(rs: RationalSeries, upto: int) -> list[int]:
    """Coefficients c_0..c_upto of rs, via c_n = (a_n - sum_{j>=1} d_j c_{n-j}) / d_0."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    den = rs.denominator.coeffs
    d0 = den[0]
    out: list[int] = []
    for n in range(upto + 1):
        acc = rs.numerator[n]
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * out[n - j]
        c, rem = divmod(acc, d0)
        if rem:
            raise ValueError(f"coefficient {n} is not an integer")
        out.append(c)
    return out


def _poly(*terms: tuple[int, int]) -> IntPolynomial:
    """Build a polynomial from (coefficient, power) pairs."""
    p = IntPolynomial()
    for coeff, power in terms:
        p = p + IntPolynomial.monomial(coeff, power)
    return p


def _linear_rec(init: Mapping[int, int], taps: Sequence[tuple[int, int]], start: int, n: int) -> int:
    """Evaluate a(n) for a(m) = sum coeff * a(m - lag) (m >= start); a(m) = init.get(m, 0) below start."""
    if n < start:
        return init.get(n, 0)
    vals = {m: init.get(m, 0) for m in range(min(init, default=0), start)}
    for m in range(start, n + 1):
        vals[m] = sum(c * vals.get(m - lag, 0) for c, lag in taps)
    return vals[n]


# ---------------------------------------------------------------------------
# Construction I' (fixed length)
# ---------------------------------------------------------------------------

def _check_sizes(isize: int, jsize: int) -> None:
    if isize < 1 or jsize < 1:
        raise ValueError("both parts of the bipartition must be nonempty")


def u_count(isize: int, jsize: int, k: int, n: int) -> int:
    """Number of I^k-free words of length n that start and end in J."""
    _check_sizes(isize, jsize)
    if k < 1:
        raise ValueError("k must be at least 1")
    q = isize + jsize
    init = {1: jsize, 2: jsize ** 2}
    return _linear_rec(init, [(q, 1), (-(isize ** k) * jsize, k + 1)], 3, n)


def u_gf(isize: int, jsize: int, k: int) -> RationalSeries:
    _check_sizes(isize, jsize)
    q = isize + jsize
    num = _poly((jsize, 1), (-isize * jsize, 2))
    den = _poly((1, 0), (-q, 1), (isize ** k * jsize, k + 1))
    return RationalSeries(num, den)


def s_count(isize: int, jsize: int, k: int, n: int) -> int:
    """Size of Construction I' with |I| = isize, |J| = jsize, prefix length k, word length n."""
    _check_sizes(isize, jsize)
    if k < 1:
        raise ValueError("k must be at least 1")
    q = isize + jsize
    c = isize ** k * jsize
    init = {k + 1: isize ** k * jsize, k + 2: isize ** k * jsize ** 2}
    return _linear_rec(init, [(q, 1), (-c, k + 1)], k + 3, n)


def s_gf(isize: int, jsize: int, k: int) -> RationalSeries:
    _check_sizes(isize, jsize)
    if k < 1:
        raise ValueError("k must be at least 1")
    q = isize + jsize
    c = isize ** k * jsize
    num = _poly((c, k + 1), (-c * isize, k + 2))
    den = _poly((1, 0), (-q, 1), (c, k + 1))
    return RationalSeries(num, den)


def construction_I_count(q: int, k: int, n: int) -> int:
    return s_count(1, q - 1, k, n)


# ---------------------------------------------------------------------------
# Construction II' (variable length)
# ---------------------------------------------------------------------------

def r_count(isize: int, jsize: int, k: int, n: int) -> int:
    """Number of (I^k u J^k)-free words of length n starting in I and ending in J (r(0) = 1)."""
    _check_sizes(isize, jsize)
    if k < 2:
        raise ValueError("k must be at least 2")
    q = isize + jsize
    a, b = isize, jsize
    init = {0: 1, 1: 0, 2: a * b}
    taps = [(q, 1), (-(a ** k * b + a * b ** k), k + 1), (a ** k * b ** k, 2 * k)]
    return _linear_rec(init, taps, 3, n)


def r_gf(isize: int, jsize: int, k: int) -> RationalSeries:
    _check_sizes(isize, jsize)
    if k < 2:
        raise ValueError("k must be at least 2")
    q = isize + jsize
    a, b = isize, jsize
    num = _poly((1, 0), (-q, 1), (a * b, 2))
    den = _poly((1, 0), (-q, 1), (a ** k * b + a * b ** k, k + 1), (-(a ** k) * b ** k, 2 * k))
    return RationalSeries(num, den)


def d_k_identity_check(k: int, n_max: int) -> bool:
    """Check r(n) = r(n-1) + ... + r(n-k+1) + d(n) for binary r and 2 <= n <= n_max.

    d(n) is +1 for n = 0 mod k, -1 for n = 1 mod k and 0 otherwise.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    r = [r_count(1, 1, k, n) for n in range(n_max + 1)]

    def at(i: int) -> int:
        return r[i] if i >= 0 else 0

    for n in range(2, n_max + 1):
        d = 1 if n % k == 0 else (-1 if n % k == 1 else 0)
        if r[n] != sum(at(n - j) for j in range(1, k)) + d:
            return False
    return True


def _check_variable(k: int, n: int) -> None:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if n < 2 * k + 2:
        raise ValueError(f"length must be at least 2k+2 = {2 * k + 2}, got {n}")


def v_count(isize: int, jsize: int, k: int, i: int) -> int:
    """Number of length-i words in Construction II'."""
    _check_variable(k, i)
    return isize ** k * jsize ** k * r_count(isize, jsize, k, i - 2 * k)


def vcal_count(isize: int, jsize: int, k: int, n: int) -> int:
    """Total size of Construction II' with maximum length n."""
    _check_variable(k, n)
    return sum(v_count(isize, jsize, k, i) for i in range(2 * k + 2, n + 1))


def vcal_gf(isize: int, jsize: int, k: int) -> RationalSeries:
    """sum_n |V(n)| x^n = c x^{2k} / (1 - x) * (r_gf - 1) with c = |I|^k |J|^k."""
    if k < 3:
        raise ValueError("k must be at least 3")
    r = r_gf(isize, jsize, k)
    c = isize ** k * jsize ** k
    num = IntPolynomial.monomial(c, 2 * k) * (r.numerator - r.denominator)
    den = _poly((1, 0), (-1, 1)) * r.denominator
    return RationalSeries(num, den)


# ---------------------------------------------------------------------------
# Words avoiding a variable-length non-overlapping code
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CodeSizeProfile:
    """How many codewords of each length a code over Z_q has."""

    q: int
    sizes: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError("q must be at least 2")
        sizes = {int(i): int(s) for i, s in self.sizes.items() if s}
        for i, s in sizes.items():
            if i < 2:
                raise ValueError(f"codeword length {i} < 2")
            if not 0 <= s <= self.q ** i:
                raise ValueError(f"impossible count {s} of length-{i} words")
        object.__setattr__(self, "sizes", dict(sorted(sizes.items())))

    @classmethod
    def of(cls, code) -> "CodeSizeProfile":
        return cls(code.q, code.length_profile())

    @property
    def h(self) -> int | None:
        return min(self.sizes) if self.sizes else None

    @property
    def n(self) -> int | None:
        return max(self.sizes) if self.sizes else None

    def below(self, n: int) -> "CodeSizeProfile":
        """The profile restricted to lengths < n."""
        return CodeSizeProfile(self.q, {i: s for i, s in self.sizes.items() if i < n})


def b_count_recurrence(profile: CodeSizeProfile, m: int) -> int:
    """Number of length-m words avoiding every codeword, for a non-overlapping code's profile."""
    if m < 0:
        return 0
    q = profile.q
    b = [1]
    for t in range(1, m + 1):
        val = q * b[t - 1]
        for i, size in profile.sizes.items():
            if i <= t:
                val -= b[t - i] * size
        b.append(val)
    return b[m]


def b_count_multinomial(profile: CodeSizeProfile, m: int) -> int:
    """Inclusion-exclusion form: sum over (t_1, t_h..t_n) with t_1 + sum i t_i = m of
    (-1)^r (t_1 + r)! / (t_1! prod t_i!) q^t_1 prod |J(i)|^t_i,  r = sum t_i."""
    if m < 0:
        return 0
    q = profile.q
    items = list(profile.sizes.items())
    fact = [1]
    for i in range(1, m + 1):
        fact.append(fact[-1] * i)
    total = 0

    def rec(idx: int, remaining: int, r: int, denom: int, weight: int) -> None:
        nonlocal total
        if idx == len(items):
            t1 = remaining
            term = fact[t1 + r] // (fact[t1] * denom) * q ** t1 * weight
            total += -term if r % 2 else term
            return
        length, size = items[idx]
        t = 0
        while t * length <= remaining:
            rec(idx + 1, remaining - t * length, r + t, denom * fact[t], weight * size ** t)
            t += 1

    rec(0, m, 0, 1, 1)
    return total


def b_gf(profile: CodeSizeProfile) -> RationalSeries:
    den = _poly((1, 0), (-profile.q, 1), *((s, i) for i, s in profile.sizes.items()))
    return RationalSeries(ONE, den)


# ---------------------------------------------------------------------------
# Growth constants
# ---------------------------------------------------------------------------

class EpsilonMismatch(ArithmeticError):
    pass


@dataclass(frozen=True)
class EpsilonResult:
    k: int
    epsilon: mpmath.mpf
    y0: mpmath.mpf


_PREC_BITS = 128


def _epsilon_root(k: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Positive root y0 in (1, 2) of y^k - (y^{k-1} + ... + 1), by bisection."""
    def f(y):
        return y ** k - mpmath.fsum(y ** i for i in range(k))

    lo, hi = mpmath.mpf(1), mpmath.mpf(2)
    # f(1) = 1 - k < 0 and f(2) = 1 > 0
    for _ in range(_PREC_BITS + 8):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    y0 = (lo + hi) / 2
    return 1 - y0 / 2, y0


def _epsilon_series(k: int, tolerance: float) -> mpmath.mpf:
    """Partial sums of sum_{i>=1} C((k+1)i - 2, i - 1) / (i 2^{(k+1)i})."""
    quarter = mpmath.mpf(tolerance) / 4
    total = mpmath.mpf(0)
    prev = None
    i = 1
    while True:
        term = mpmath.mpf(math.comb((k + 1) * i - 2, i - 1)) / (i * mpmath.mpf(2) ** ((k + 1) * i))
        total += term
        if term < quarter and prev is not None:
            ratio = term / prev
            # geometric estimate of the neglected tail
            if ratio < 1 and term * ratio / (1 - ratio) < quarter:
                return total
        prev = term
        i += 1


def epsilon_k(k: int, tolerance: float = 1e-12) -> EpsilonResult:
    """The defect 1 - y0/2, computed by root finding and cross-checked against its series."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    with mpmath.workprec(_PREC_BITS):
        eps, y0 = _epsilon_root(k)
        eps_series = _epsilon_series(k, tolerance)
        if abs(eps - eps_series) > tolerance:
            raise EpsilonMismatch(
                f"k={k}: root gives {mpmath.nstr(eps, 20)}, series gives {mpmath.nstr(eps_series, 20)}"
            )
        return EpsilonResult(k, +eps, +y0)


def growth_rate(q: int, k: int, family: str = "fixed") -> mpmath.mpf:
    """Exponential growth q(1 - eps) of Construction I' (eps_k) or II' (eps_{k-1}) with |I| = |J|."""
    if q < 2 or q % 2:
        raise ValueError(f"growth rate is only defined for even q (|I| = |J|), got q={q}")
    if family == "fixed":
        if k < 2:
            raise ValueError("fixed-length growth needs k > 1")
        eps = epsilon_k(k).epsilon
    elif family == "variable":
        if k < 3:
            raise ValueError("variable-length growth needs k >= 3")
        eps = epsilon_k(k - 1).epsilon
    else:
        raise ValueError(f"family must be 'fixed' or 'variable', got {family!r}")
    with mpmath.workprec(_PREC_BITS):
        return q * (1 - eps)
