from fractions import Fraction

import pytest

from nonoverlap.bounds import (
    BoundValue,
    chee_bound,
    levenshtein_bound,
    recursive_bound,
    recursive_bound_min,
)
from nonoverlap.construct import construction_I_prime, construction_II_prime
from nonoverlap.count import CodeSizeProfile
from nonoverlap.search import compatibility_graph, max_clique, max_code_exhaustive
from nonoverlap.words import Bipartition
from oracles import avoiding_words, code, pairwise_non_overlapping, w


def test_levenshtein_examples():
    assert levenshtein_bound(2, 4).exact == 4
    assert levenshtein_bound(2, 2).exact == 1
    assert levenshtein_bound(3, 3).exact == 4
    assert levenshtein_bound(3, 6).exact == 32
    assert not levenshtein_bound(2, 4).strict


def test_chee_examples():
    assert chee_bound(2, 2).exact == Fraction(4, 3)
    assert chee_bound(2, 2).integer_bound == 1
    assert chee_bound(3, 2).exact == Fraction(8, 5)
    assert chee_bound(3, 2).integer_bound == 1
    assert chee_bound(2, 6).exact == 12
    assert chee_bound(2, 6).integer_bound == 11


def test_integer_bound_and_admits():
    assert BoundValue(Fraction(7, 2), strict=True).integer_bound == 3
    assert BoundValue(Fraction(4), strict=False).integer_bound == 4
    assert BoundValue(Fraction(4), strict=True).integer_bound == 3
    assert BoundValue(Fraction(4), strict=False).admits(4)
    assert not BoundValue(Fraction(4), strict=True).admits(4)


def test_bounds_reject_bad_parameters():
    with pytest.raises(ValueError):
        levenshtein_bound(1, 2)
    with pytest.raises(ValueError):
        chee_bound(3, 1)


@pytest.mark.parametrize("n,q", [(2, 4), (2, 6), (3, 6)])
def test_levenshtein_attained(n, q):
    bp = Bipartition.canonical(q, q // n)
    size = len(construction_I_prime(n, bp, 1))  # I x J^{n-1}
    assert size == levenshtein_bound(n, q).exact


def test_levenshtein_dominates_chee():
    for q in range(2, 9):
        for n in range(2, 10):
            assert levenshtein_bound(n, q).exact <= chee_bound(n, q).exact


def test_best_known_codes_respect_all_bounds():
    for q in (2, 3, 4):
        for n in range(2, 9):
            best = max(len(construction_I_prime(n, Bipartition.canonical(q, a), k))
                       for a in range(1, q) for k in range(1, n))
            assert chee_bound(n, q).admits(best)
            assert levenshtein_bound(n, q).admits(best)
            assert recursive_bound_min(CodeSizeProfile(q), n)[0].admits(best)


def test_exhaustive_maximum_respects_bounds():
    for n, q in [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)]:
        size = max_code_exhaustive(n, q).max_size
        assert chee_bound(n, q).admits(size)


def test_recursive_bound_without_lower_layers():
    for q in (2, 3, 5):
        for n in range(2, 9):
            prof = CodeSizeProfile(q)
            for m in range(1, n):
                assert recursive_bound(prof, n, m).exact == Fraction(q ** n, m + n)
            bv, m = recursive_bound_min(prof, n)
            assert bv.exact == Fraction(q ** n, 2 * n - 1) == chee_bound(n, q).exact
            assert m == n - 1 and bv.strict


def test_recursive_bound_m_equals_one_form():
    c = code(2, "11101000", "111011000", "111001000")
    prof = CodeSizeProfile.of(c).below(10)
    n = 10
    # b values from a literal scan of the lower layers
    tail = sum(avoiding_words(c, 1 + n - i) * s for i, s in prof.sizes.items())
    assert recursive_bound(prof, n, 1).exact == Fraction(2 ** n, n + 1) - Fraction(tail, 2)


def length_nine_census():
    """Most length-9 binary words that can join {11101000}, by exact clique search."""
    base = w("11101000")
    words, adj = compatibility_graph(9, 2)
    keep = [i for i, x in enumerate(words) if pairwise_non_overlapping([base, x])]
    pos = {v: i for i, v in enumerate(keep)}
    sub = []
    for v in keep:
        mask = 0
        for u in keep:
            if adj[v] >> u & 1:
                mask |= 1 << pos[u]
        sub.append(mask)
    clique, _, complete = max_clique(sub)
    assert complete
    return len(clique)


def test_recursive_bound_profile_example():
    prof = CodeSizeProfile(2, {8: 1})
    at_one = recursive_bound(prof, 9, 1)
    census = length_nine_census()
    assert census >= 2  # the variable-length construction already has two
    assert at_one.admits(census)
    bv, m = recursive_bound_min(prof, 9)
    assert 1 <= m < 8 and bv.admits(census)
    assert all(recursive_bound(prof, 9, j).exact >= bv.exact for j in range(1, 8))


def test_recursive_bound_ignores_length_n_layer_and_rejects_longer():
    prof = CodeSizeProfile(2, {8: 1, 9: 2})
    assert recursive_bound(prof, 9, 3) == recursive_bound(CodeSizeProfile(2, {8: 1}), 9, 3)
    with pytest.raises(ValueError):
        recursive_bound(prof, 8, 3)
    with pytest.raises(ValueError):
        recursive_bound(CodeSizeProfile(2, {8: 1}), 9, 8)
    with pytest.raises(ValueError):
        recursive_bound(CodeSizeProfile(2, {8: 1}), 9, 0)


@pytest.mark.parametrize("q,isize,k", [(2, 1, 3), (3, 1, 3), (3, 2, 3), (2, 1, 4)])
def test_variable_length_layers_respect_recursive_bound(q, isize, k):
    bp = Bipartition.canonical(q, isize)
    c = construction_II_prime(2 * k + 6, bp, k)
    prof = CodeSizeProfile.of(c)
    for n, size in prof.sizes.items():
        if n == prof.h:
            continue
        for m in range(1, prof.h):
            assert recursive_bound(prof.below(n), n, m).admits(size)


def test_near_tightness_gap():
    # with |I| = floor(q/n) and k = 1 the gap to Levenshtein's bound is O(q^{n-1})
    for n in (2, 3, 4):
        ratios = []
        for q in range(n, 13):
            size = len(construction_I_prime(n, Bipartition.canonical(q, q // n), 1))
            gap = levenshtein_bound(n, q).exact - size
            assert gap >= 0
            ratios.append(gap / q ** (n - 1))
        assert max(ratios) <= 1
