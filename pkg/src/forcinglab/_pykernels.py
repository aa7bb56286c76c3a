"""Pure-Python subset-matching kernels (fallback for ``_ckernels``).

Every kernel takes a host as a sequence of out-neighbourhood bitmasks and a
pattern lookup ``table``: a bytes-like object indexed by the upper-triangle
code of a ``k``-vertex labeled tournament, nonzero iff that labeled
tournament is a copy of the pattern.  The code of a sorted vertex subset
``v_0 < ... < v_{k-1}`` has bit ``pair_index(k, i, j)`` set iff ``v_i -> v_j``.
"""

from __future__ import annotations

from itertools import combinations


def pair_index(k: int, i: int, j: int) -> int:
    return i * (2 * k - i - 1) // 2 + (j - i - 1)


def _pairs(k: int) -> list[tuple[int, int, int]]:
    return [(i, j, 1 << pair_index(k, i, j)) for i in range(k) for j in range(i + 1, k)]


def subset_code(out, verts) -> int:
    k = len(verts)
    code = 0
    for i, j, bit in _pairs(k):
        if out[verts[i]] >> verts[j] & 1:
            code |= bit
    return code


def count_matches(out, s: int, k: int, table) -> int:
    pairs = _pairs(k)
    total = 0
    for verts in combinations(range(s), k):
        code = 0
        for i, j, bit in pairs:
            if out[verts[i]] >> verts[j] & 1:
                code |= bit
        if table[code]:
            total += 1
    return total


def count_through(out, s: int, k: int, table, u: int, v: int) -> int:
    """Matching subsets that contain both ``u`` and ``v``."""
    pairs = _pairs(k)
    rest = [x for x in range(s) if x != u and x != v]
    total = 0
    for others in combinations(rest, k - 2):
        verts = sorted((u, v, *others))
        code = 0
        for i, j, bit in pairs:
            if out[verts[i]] >> verts[j] & 1:
                code |= bit
        if table[code]:
            total += 1
    return total


def flip_deltas(out, s: int, k: int, table) -> list[int]:
    """Change in the match count caused by reversing each edge.

    Returns a flat ``s*s`` list; entry ``u*s + v`` (``u < v``) is the delta
    for reversing the edge between ``u`` and ``v``.
    """
    pairs = _pairs(k)
    deltas = [0] * (s * s)
    for verts in combinations(range(s), k):
        code = 0
        for i, j, bit in pairs:
            if out[verts[i]] >> verts[j] & 1:
                code |= bit
        base = 1 if table[code] else 0
        for i, j, bit in pairs:
            d = (1 if table[code ^ bit] else 0) - base
            if d:
                deltas[verts[i] * s + verts[j]] += d
    return deltas
