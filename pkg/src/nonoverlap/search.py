"""Desk-scale exhaustive search for maximum fixed-length non-overlapping codes.

A code of length-n words is non-overlapping iff every word is bifix-free and
every pair of words is mutually non-overlapping, so maximum codes are maximum
cliques of a compatibility graph. The clique search is a colouring-bounded
branch and bound over int bitsets, in the style of Tomita's MCQ.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import check_cap
from .verify import find_overlap
from .words import Code, Word, prefixes, self_overlaps, suffixes


@dataclass(frozen=True)
class SearchResult:
    n: int
    q: int
    max_size: int
    witness: Code
    nodes_explored: int
    complete: bool  # False: node limit hit, max_size is only a lower bound


def compatibility_graph(n: int, q: int) -> tuple[list[Word], list[int]]:
    """Bifix-free words of length n, ordered by degree (descending, ties lexicographic),
    with adjacency bitmasks over that order."""
    words = [w for w in itertools.product(range(q), repeat=n) if not self_overlaps(w)]
    pre = [prefixes(w) for w in words]
    suf = [suffixes(w) for w in words]
    size = len(words)
    nbrs: list[set[int]] = [set() for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            if pre[a].isdisjoint(suf[b]) and pre[b].isdisjoint(suf[a]):
                nbrs[a].add(b)
                nbrs[b].add(a)
    order = sorted(range(size), key=lambda v: (-len(nbrs[v]), words[v]))
    pos = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        mask = 0
        for u in nbrs[v]:
            mask |= 1 << pos[u]
        adj.append(mask)
    return [words[v] for v in order], adj


def _color_sort(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    colors: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(adj: list[int], node_limit: int | None = None) -> tuple[list[int], int, bool]:
    """Maximum clique of the graph given by bitmask adjacency lists.

    Returns (clique vertices, nodes explored, complete flag).
    """
    best: list[int] = []
    nodes = 0
    stopped = False

    def expand(current: list[int], cand: int) -> None:
        nonlocal best, nodes, stopped
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            stopped = True
            return
        order, colors = _color_sort(cand, adj)
        for idx in range(len(order) - 1, -1, -1):
            if stopped or len(current) + colors[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            new_cand = cand & adj[v]
            if new_cand:
                expand(current, new_cand)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    all_vertices = (1 << len(adj)) - 1
    if all_vertices:
        expand([], all_vertices)
    return best, nodes, not stopped


def max_code_exhaustive(n: int, q: int, node_limit: int | None = None, cap: int | None = None) -> SearchResult:
    """C(n, q) by exhaustive branch and bound (exact unless ``node_limit`` is hit)."""
    if n < 2 or q < 2:
        raise ValueError(f"need n, q >= 2, got n={n}, q={q}")
    check_cap(q, n, cap)
    words, adj = compatibility_graph(n, q)
    clique, nodes, complete = max_clique(adj, node_limit)
    witness = Code._trusted(q, frozenset(words[v] for v in clique))
    return SearchResult(n, q, len(clique), witness, nodes, complete)


def greedy_expand(code: Code, n: int | None = None, cap: int | None = None) -> Code:
    """Add words of Z_q^n in lexicographic order while the code stays non-overlapping."""
    if len(code) == 0:
        if n is None:
            raise ValueError("word length n is required for an empty code")
    else:
        if not code.is_fixed_length:
            raise ValueError("greedy expansion needs a fixed-length code")
        if n is not None and n != code.n:
            raise ValueError(f"code has length {code.n}, not {n}")
        n = code.n
    witness = find_overlap(code)
    if witness is not None:
        raise ValueError(f"input code is overlapping: {witness}")
    check_cap(code.q, n, cap)
    pre_s: set[Word] = set()
    suf_s: set[Word] = set()
    words = set(code.words)
    for w in words:
        pre_s |= prefixes(w)
        suf_s |= suffixes(w)
    for x in itertools.product(range(code.q), repeat=n):
        if x in words or self_overlaps(x):
            continue
        if any(x[:i] in suf_s or x[-i:] in pre_s for i in range(1, n)):
            continue
        words.add(x)
        pre_s |= prefixes(x)
        suf_s |= suffixes(x)
    return Code._trusted(code.q, frozenset(words))
