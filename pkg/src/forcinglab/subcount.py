"""Induced copy counts n(H, S), densities d(H, G) and the random baseline."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import kernels
from .tournament import Tournament, automorphism_count

MAX_PATTERN = 7
MAX_HOST = 16


def _pair_bits(k: int) -> list[tuple[int, int, int]]:
    return [(i, j, 1 << kernels.pair_index(k, i, j)) for i in range(k) for j in range(i + 1, k)]


@lru_cache(maxsize=64)
def pattern_table(h: Tournament) -> bytes:
    """Lookup table marking the codes of every labeled copy of ``h``."""
    k = h.k
    if k > MAX_PATTERN:
        raise ValueError(f"patterns are limited to {MAX_PATTERN} vertices")
    table = bytearray(1 << (k * (k - 1) // 2))
    pairs = _pair_bits(k)
    for perm in itertools.permutations(range(k)):
        code = 0
        for i, j, bit in pairs:
            if h.beats(perm[i], perm[j]):
                code |= bit
        table[code] = 1
    return bytes(table)


def _check_sizes(h: Tournament, s: Tournament) -> None:
    if h.k > MAX_PATTERN:
        raise ValueError(f"pattern has {h.k} > {MAX_PATTERN} vertices")
    if s.k > MAX_HOST:
        raise ValueError(f"host has {s.k} > {MAX_HOST} vertices")
    if h.k > s.k:
        raise ValueError("pattern is larger than host")


def count_copies(h: Tournament, s: Tournament) -> int:
    """Number of ``|h|``-subsets of ``s`` inducing a copy of ``h``."""
    _check_sizes(h, s)
    return kernels.count_matches(s.out, s.k, h.k, pattern_table(h))


def density(h: Tournament, g: Tournament) -> Fraction:
    if h.k > g.k:
        return Fraction(0)
    return Fraction(count_copies(h, g), comb(g.k, h.k))


def expected_density(h: Tournament) -> Fraction:
    """Density of ``h`` in a uniformly random tournament: k!/|Aut(h)| * 2^-C(k,2)."""
    k = h.k
    return Fraction(factorial(k), automorphism_count(h) * 2 ** comb(k, 2))


def blowup_threshold(h: Tournament, s_size: int) -> Fraction:
    return Fraction(s_size ** h.k, 2 ** comb(h.k, 2))


def count_embeddings(h: Tournament, s: Tournament) -> int:
    """Injective orientation-preserving maps V(h) -> V(s), by brute force."""
    k = h.k
    return sum(
        all(h.beats(a, b) == s.beats(image[a], image[b]) for a in range(k) for b in range(a + 1, k))
        for image in itertools.permutations(range(s.k), k)
    )


class CopyCounter:
    """Running n(h, host) under single-edge reversals.

    Owns its host; not meant to be shared between threads.
    """

    def __init__(self, h: Tournament, host: Tournament):
        _check_sizes(h, host)
        self.pattern = h
        self.k = h.k
        self.s = host.k
        self.table = pattern_table(h)
        self.out = list(host.out)
        self.count = kernels.count_matches(self.out, self.s, self.k, self.table)

    @property
    def host(self) -> Tournament:
        return Tournament(self.s, self.out)

    def flip_deltas(self) -> list[int]:
        return kernels.flip_deltas(self.out, self.s, self.k, self.table)

    def delta(self, u: int, v: int) -> int:
        before = kernels.count_through(self.out, self.s, self.k, self.table, u, v)
        self._toggle(u, v)
        after = kernels.count_through(self.out, self.s, self.k, self.table, u, v)
        self._toggle(u, v)
        return after - before

    def flip(self, u: int, v: int) -> int:
        """Reverse the edge ``uv`` and return the new count."""
        before = kernels.count_through(self.out, self.s, self.k, self.table, u, v)
        self._toggle(u, v)
        self.count += kernels.count_through(self.out, self.s, self.k, self.table, u, v) - before
        return self.count

    def _toggle(self, u: int, v: int) -> None:
        self.out[u] ^= 1 << v
        self.out[v] ^= 1 << u

    def recount(self) -> int:
        return kernels.count_matches(self.out, self.s, self.k, self.table)
