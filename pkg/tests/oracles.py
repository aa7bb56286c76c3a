"""Slow, independent reference implementations used to cross-check the package.

Nothing here imports the algorithms under test; tournaments are plain
adjacency predicates ``beats(u, v)`` over ``range(k)``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, prod


def adjacency(t) -> list[list[bool]]:
    return [[u != v and t.beats(u, v) for v in range(t.k)] for u in range(t.k)]


def code_of(adj) -> str:
    k = len(adj)
    return ",".join("".join("1" if adj[i][j] else "0" for j in range(i + 1, k)) for i in range(k - 1))


def relabel(adj, perm):
    """New vertex ``perm[v]`` plays the role of old vertex ``v``."""
    k = len(adj)
    new = [[False] * k for _ in range(k)]
    for u in range(k):
        for v in range(k):
            new[perm[u]][perm[v]] = adj[u][v]
    return new


def brute_canonical(adj) -> str:
    return min(code_of(relabel(adj, p)) for p in permutations(range(len(adj))))


def brute_aut(adj) -> int:
    k = len(adj)
    return sum(relabel(adj, p) == adj for p in permutations(range(k)))


def brute_classes(k: int) -> set[str]:
    pairs = list(combinations(range(k), 2))
    seen = set()
    for bits in product((0, 1), repeat=len(pairs)):
        adj = [[False] * k for _ in range(k)]
        for (u, v), b in zip(pairs, bits):
            if b:
                adj[u][v] = True
            else:
                adj[v][u] = True
        seen.add(brute_canonical(adj))
    return seen


def brute_copies(h_adj, s_adj) -> int:
    k, s = len(h_adj), len(s_adj)
    target = brute_canonical(h_adj)
    n = 0
    for sub in combinations(range(s), k):
        induced = [[s_adj[a][b] for b in sub] for a in sub]
        n += brute_canonical(induced) == target
    return n


def brute_dstar(h_adj, matrix, weights) -> Fraction:
    """Sum over every map V(h) -> blocks of the weighted edge product."""
    k, n = len(h_adj), len(matrix)
    total = Fraction(0)
    for f in product(range(n), repeat=k):
        term = prod((Fraction(weights[b]) for b in f), start=Fraction(1))
        for u in range(k):
            for v in range(k):
                if h_adj[u][v]:
                    term *= Fraction(matrix[f[u]][f[v]])
        total += term
    return total


def paley_adj(q: int) -> list[list[bool]]:
    squares = {(x * x) % q for x in range(1, q)}
    return [[u != v and (v - u) % q in squares for v in range(q)] for u in range(q)]


def threshold(k: int) -> Fraction:
    return Fraction(1, 2 ** comb(k, 2))
