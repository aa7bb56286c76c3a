"""Tournaments on at most 16 labeled vertices.

A tournament is stored as a tuple of out-neighbourhood bitmasks: bit ``v`` of
``out[u]`` is set iff the edge between ``u`` and ``v`` is oriented ``u -> v``.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterator, Sequence

MAX_VERTICES = 16


class CodeError(ValueError):
    """Raised for malformed upper-triangle code strings."""


class Tournament:
    __slots__ = ("k", "out", "_hash")

    def __init__(self, k: int, out: Sequence[int]):
        if not 1 <= k <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {k}")
        if len(out) != k:
            raise ValueError("need one out-mask per vertex")
        full = (1 << k) - 1
        for u in range(k):
            if out[u] >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            if out[u] & ~full:
                raise ValueError(f"out-mask of {u} names a vertex >= {k}")
        for u in range(k):
            for v in range(u + 1, k):
                if (out[u] >> v & 1) == (out[v] >> u & 1):
                    raise ValueError(f"pair {u},{v} is not oriented exactly once")
        self.k = k
        self.out = tuple(out)
        self._hash = hash((k, self.out))

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int | bool]]) -> "Tournament":
        k = len(adj)
        return cls(k, [sum(1 << v for v in range(k) if adj[u][v]) for u in range(k)])

    @classmethod
    def from_edges(cls, k: int, edges) -> "Tournament":
        out = [0] * k
        for u, v in edges:
            out[u] |= 1 << v
        return cls(k, out)

    @classmethod
    def transitive(cls, k: int) -> "Tournament":
        """T_k with every edge pointing from the lower to the higher index."""
        return cls(k, [((1 << k) - 1) & ~((1 << (u + 1)) - 1) for u in range(k)])

    def beats(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    @property
    def adj(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.beats(u, v) for v in range(self.k)) for u in range(self.k))

    def out_degree(self, u: int) -> int:
        return bin(self.out[u]).count("1")

    def scores(self) -> tuple[int, ...]:
        return tuple(self.out_degree(u) for u in range(self.k))

    def in_mask(self, u: int) -> int:
        return ((1 << self.k) - 1) & ~self.out[u] & ~(1 << u)

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Vertex ``u`` of the result is vertex ``perm[u]`` of ``self``."""
        k = self.k
        return Tournament(
            k,
            [sum(1 << v for v in range(k) if self.beats(perm[u], perm[v])) for u in range(k)],
        )

    def induced(self, vertices: Sequence[int]) -> "Tournament":
        return Tournament(
            len(vertices),
            [sum(1 << j for j, b in enumerate(vertices) if self.beats(a, b)) for a in vertices],
        )

    def flipped(self, u: int, v: int) -> "Tournament":
        out = list(self.out)
        out[u] ^= 1 << v
        out[v] ^= 1 << u
        return Tournament(self.k, out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tournament) and self.k == other.k and self.out == other.out

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tournament({format_code(self)!r})"


# -- codec -------------------------------------------------------------------

_CODE_CHARS = re.compile(r"^[01,\[\]]*$")


def parse_code(text: str) -> Tournament:
    """Parse ``"0010,001,00,0"`` style codes (rows of the upper triangle)."""
    s = re.sub(r"\s+", "", text)
    if not _CODE_CHARS.match(s):
        raise CodeError(f"unexpected characters in code {text!r}")
    if s.startswith("["):
        if not s.endswith("]"):
            raise CodeError(f"unbalanced brackets in {text!r}")
        s = s[1:-1]
    if "[" in s or "]" in s:
        raise CodeError(f"misplaced brackets in {text!r}")
    if s == "":
        return Tournament(1, [0])
    groups = s.split(",")
    k = len(groups) + 1
    if k > MAX_VERTICES:
        raise CodeError(f"code describes {k} > {MAX_VERTICES} vertices")
    out = [0] * k
    for i, row in enumerate(groups):
        if len(row) != k - 1 - i:
            raise CodeError(f"row {i + 1} of {text!r} has length {len(row)}, expected {k - 1 - i}")
        for off, ch in enumerate(row):
            j = i + 1 + off
            if ch == "1":
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return Tournament(k, out)


def format_code(t: Tournament) -> str:
    k = t.k
    return ",".join(
        "".join("1" if t.beats(i, j) else "0" for j in range(i + 1, k)) for i in range(k - 1)
    )


def reverse(t: Tournament) -> Tournament:
    k = t.k
    return Tournament(k, [t.in_mask(u) for u in range(k)])


# -- structural predicates ---------------------------------------------------


def _reach(t: Tournament, start: int, forward: bool) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= t.out[u] if forward else t.in_mask(u)
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(t: Tournament) -> bool:
    full = (1 << t.k) - 1
    return _reach(t, 0, True) == full and _reach(t, 0, False) == full


def is_transitive(t: Tournament) -> bool:
    # A tournament is acyclic iff its score sequence is 0, 1, ..., k-1.
    return sorted(t.scores()) == list(range(t.k))


def strong_components(t: Tournament) -> list[list[int]]:
    """Strong components in dominance order: earlier components beat later ones."""
    k = t.k
    remaining = (1 << k) - 1
    comps: list[list[int]] = []
    while remaining:
        # pick a vertex whose component is dominating among the remaining ones:
        # the one with the largest out-degree inside the remaining set
        u = max(
            (v for v in range(k) if remaining >> v & 1),
            key=lambda v: bin(t.out[v] & remaining).count("1"),
        )
        comp_mask = _reach_within(t, u, True, remaining) & _reach_within(t, u, False, remaining)
        comps.append([v for v in range(k) if comp_mask >> v & 1])
        remaining &= ~comp_mask
    return comps


def _reach_within(t: Tournament, start: int, forward: bool, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= t.out[u] if forward else t.in_mask(u)
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def twin_pairs(t: Tournament) -> list[tuple[int, int]]:
    pairs = []
    for u in range(t.k):
        for v in range(u + 1, t.k):
            outside = ~((1 << u) | (1 << v))
            if t.out[u] & outside == t.out[v] & outside:
                pairs.append((u, v))
    return pairs


def has_twins(t: Tournament) -> bool:
    return bool(twin_pairs(t))


# -- isomorphism -------------------------------------------------------------


def isomorphisms(a: Tournament, b: Tournament) -> Iterator[tuple[int, ...]]:
    """Yield every bijection ``m`` with ``a.beats(u, v) == b.beats(m[u], m[v])``."""
    if a.k != b.k or sorted(a.scores()) != sorted(b.scores()):
        return
    k = a.k
    sa, sb = a.scores(), b.scores()
    # fix vertices of ``a`` in order of rarest score first
    freq: dict[int, int] = {}
    for s in sa:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(k), key=lambda u: (freq[sa[u]], sa[u], u))
    image = [-1] * k
    used = 0

    def extend(depth: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if depth == k:
            yield tuple(image)
            return
        u = order[depth]
        for cand in range(k):
            if used >> cand & 1 or sb[cand] != sa[u]:
                continue
            ok = True
            for prev in order[:depth]:
                if a.beats(u, prev) != b.beats(cand, image[prev]):
                    ok = False
                    break
            if not ok:
                continue
            image[u] = cand
            used |= 1 << cand
            yield from extend(depth + 1)
            used &= ~(1 << cand)
            image[u] = -1

    yield from extend(0)


def is_isomorphic(a: Tournament, b: Tournament) -> bool:
    return next(isomorphisms(a, b), None) is not None


def automorphisms(t: Tournament) -> list[tuple[int, ...]]:
    return list(isomorphisms(t, t))


def automorphism_count(t: Tournament) -> int:
    return sum(1 for _ in isomorphisms(t, t))


def canonical_form(t: Tournament) -> tuple[str, tuple[int, ...]]:
    """Lexicographically smallest code over all relabelings and a labeling attaining it.

    Choosing the vertex for position ``i`` fixes row ``i`` of the code up to
    the order inside each cell of still-interchangeable positions; that row is
    smallest when every cell lists the vertices that beat the chosen one
    first.  Only choices realising the smallest row are explored.
    """
    k = t.k
    best_code: list[str] = []
    best_perm: list[tuple[int, ...]] = []

    def search(prefix: list[int], cells: list[list[int]], rows: list[str]) -> None:
        if not cells:
            code = ",".join(rows)
            if not best_code or code < best_code[0]:
                best_code[:] = [code]
                best_perm[:] = [tuple(prefix)]
            return
        options = []
        for v in cells[0]:
            row = []
            split = []
            for i, cell in enumerate(cells):
                members = [x for x in cell if x != v] if i == 0 else cell
                ins = [x for x in members if t.beats(x, v)]
                outs = [x for x in members if not t.beats(x, v)]
                row.append("0" * len(ins) + "1" * len(outs))
                split.extend(c for c in (ins, outs) if c)
            options.append(("".join(row), v, split))
        least = min(o[0] for o in options)
        depth = len(rows)
        if best_code and depth < k - 1:
            # compare the partial code against the incumbent
            partial = ",".join(rows + [least])
            if partial > best_code[0][: len(partial)]:
                return
        for row, v, split in options:
            if row != least:
                continue
            new_rows = rows + [row] if depth < k - 1 else rows
            search(prefix + [v], split, new_rows)

    search([], [list(range(k))], [])
    return best_code[0], best_perm[0]


@lru_cache(maxsize=None)
def canonical_code(t: Tournament) -> str:
    return canonical_form(t)[0]


def canonical(t: Tournament) -> Tournament:
    """The relabeling of ``t`` whose code is :func:`canonical_code`."""
    return parse_code(canonical_code(t)) if t.k > 1 else t


# -- enumeration and Paley tournaments --------------------------------------


@lru_cache(maxsize=None)
def _classes(k: int) -> tuple[Tournament, ...]:
    if k == 1:
        return (Tournament(1, [0]),)
    seen: dict[str, Tournament] = {}
    for base in _classes(k - 1):
        for mask in range(1 << (k - 1)):
            # new vertex k-1 beats exactly the old vertices in ``mask``
            out = [o | (0 if mask >> u & 1 else 1 << (k - 1)) for u, o in enumerate(base.out)]
            out.append(mask)
            code = canonical_code(Tournament(k, out))
            if code not in seen:
                seen[code] = parse_code(code)
    return tuple(seen[c] for c in sorted(seen))


def enumerate_tournaments(k: int) -> list[Tournament]:
    """One canonical representative per isomorphism class, sorted by code."""
    if not 1 <= k <= 7:
        raise ValueError(f"enumeration supports 1..7 vertices, got {k}")
    return list(_classes(k))


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def paley_residues(q: int) -> frozenset[int]:
    if not is_prime(q) or q % 4 != 3:
        raise ValueError(f"Paley tournaments need a prime q = 3 mod 4, got {q}")
    if q > 31:
        raise ValueError("q must be at most 31")
    return frozenset((x * x) % q for x in range(1, q))


def paley_tournament(q: int, vertices: int | None = None) -> Tournament:
    """Paley tournament on Z_q, or its subtournament on ``0..vertices-1``."""
    residues = paley_residues(q)
    n = q if vertices is None else vertices
    if n > MAX_VERTICES:
        raise ValueError(f"Paley tournament on {n} vertices exceeds the {MAX_VERTICES}-vertex limit")
    return Tournament(n, [sum(1 << j for j in range(n) if (j - i) % q in residues) for i in range(n)])


def all_relabelings(t: Tournament) -> Iterator[Tournament]:
    for perm in itertools.permutations(range(t.k)):
        yield t.relabel(perm)
