"""d*(H, M_x) as an exact polynomial in x for affinely parametrised matrices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .polynomial import RationalPolynomial
from .stepton import StochasticVector, TournamentMatrix, d_star
from .tournament import Tournament

Affine = tuple[Fraction, Fraction]

HALF = Fraction(1, 2)
DOMAIN = (Fraction(-1, 2), Fraction(1, 2))


@dataclass(frozen=True)
class ParamMatrix:
    """Square matrix of affine forms ``c0 + c1*x``."""

    entries: tuple[tuple[Affine, ...], ...]
    name: str = ""

    def __post_init__(self):
        rows = tuple(tuple((Fraction(c0), Fraction(c1)) for c0, c1 in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("parametrised matrix must be square")
        for i in range(n):
            for j in range(n):
                (a0, a1), (b0, b1) = rows[i][j], rows[j][i]
                if a0 + b0 != 1 or a1 + b1 != 0:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) do not sum to 1")
                lo, hi = (a0 + a1 * x for x in DOMAIN)
                if not (0 <= lo <= 1 and 0 <= hi <= 1):
                    raise ValueError(f"entry ({i},{j}) leaves [0,1] on the domain")
        object.__setattr__(self, "entries", rows)

    @property
    def order(self) -> int:
        return len(self.entries)

    def at(self, x: Fraction) -> TournamentMatrix:
        x = Fraction(x)
        return TournamentMatrix(tuple(tuple(c0 + c1 * x for c0, c1 in row) for row in self.entries))

    def transpose(self) -> "ParamMatrix":
        n = self.order
        return ParamMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    def reflected(self) -> "ParamMatrix":
        """The matrix with ``x`` replaced by ``-x``."""
        return ParamMatrix(tuple(tuple((c0, -c1) for c0, c1 in row) for row in self.entries))


def _pm(signs: Sequence[str], name: str) -> ParamMatrix:
    forms = {"0": (HALF, 0), "-": (HALF, -1), "+": (HALF, 1)}
    return ParamMatrix(tuple(tuple(forms[ch] for ch in row) for row in signs), name)


A_X = _pm(["0-", "+0"], "A_x")
B_X = _pm(["0-+", "+0-", "-+0"], "B_x")
C_X = _pm(["0-+-", "+0--", "-+0-", "+++0"], "C_x")


def builtin_matrices() -> dict[str, ParamMatrix]:
    return {"A_x": A_X, "B_x": B_X, "C_x": C_X}


def d_star_poly(h: Tournament, m: ParamMatrix) -> RationalPolynomial:
    """Exact d*(h, M_x) under uniform weights, expanded in x."""
    n, k = m.order, h.k
    if n > 4 or k > 6:
        raise ValueError("supported sizes are at most 4 blocks and 6 vertices")
    edges = [(u, v) if h.beats(u, v) else (v, u) for u in range(k) for v in range(u + 1, k)]
    # each map contributes a product of affine forms; only the multiset matters
    forms = sorted({e for row in m.entries for e in row})
    index = {e: i for i, e in enumerate(forms)}
    ids = [[index[e] for e in row] for row in m.entries]
    signatures: Counter[tuple[int, ...]] = Counter()
    for f in product(range(n), repeat=k):
        counts = [0] * len(forms)
        for u, v in edges:
            counts[ids[f[u]][f[v]]] += 1
        signatures[tuple(counts)] += 1
    base = [RationalPolynomial.affine(c0, c1) for c0, c1 in forms]
    powers: dict[tuple[int, int], RationalPolynomial] = {}

    def power(i: int, e: int) -> RationalPolynomial:
        if (i, e) not in powers:
            powers[i, e] = base[i] ** e
        return powers[i, e]

    total = RationalPolynomial()
    for counts, mult in signatures.items():
        term = RationalPolynomial([mult])
        for i, e in enumerate(counts):
            if e:
                term = term * power(i, e)
        total = total + term
    return Fraction(1, n**k) * total


def evaluate(p: RationalPolynomial, x) -> Fraction:
    return p(Fraction(x))


def d_star_at(h: Tournament, m: ParamMatrix, x) -> Fraction:
    """Same quantity as ``d_star_poly(h, m)(x)`` by direct summation."""
    return d_star(h, m.at(Fraction(x)), StochasticVector.uniform(m.order))


def find_exceeding(
    p: RationalPolynomial,
    threshold,
    domain: tuple = DOMAIN,
    grid: int = 10**4,
    seeds: Iterable = (),
) -> Fraction | None:
    """First grid point (seeds first) with ``p(x) > threshold``, or ``None``."""
    lo, hi = Fraction(domain[0]), Fraction(domain[1])
    threshold = Fraction(threshold)
    for x in seeds:
        x = Fraction(x)
        if lo <= x <= hi and p(x) > threshold:
            return x
    for i in range(grid + 1):
        x = lo + (hi - lo) * i / grid
        if p(x) > threshold:
            return x
    return None


def value_table(p: RationalPolynomial, domain: tuple = DOMAIN, points: int = 101) -> list[tuple[Fraction, Fraction]]:
    lo, hi = Fraction(domain[0]), Fraction(domain[1])
    return [(x, p(x)) for x in (lo + (hi - lo) * i / (points - 1) for i in range(points))]
