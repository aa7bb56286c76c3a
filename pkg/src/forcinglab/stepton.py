"""Step tournamentons W[A, w] and the density certificates built on them.

``d_star`` is the labeled map-sum

    sum over f: V(H) -> [l] of  prod_v w[f(v)] * prod_{u->v} A[f(u)][f(v)]

and the density of H in W[A, w] is ``k!/|Aut(H)|`` times it.  Blocks may
also be *transitive*: inside such a block the kernel is the transitive
tournamenton (1 if x > y, 0 if x < y), which contributes ``w_b^m / m!`` when
the ``m`` vertices mapped there induce a transitive subtournament and 0
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Callable, Sequence

from .certificate import Certificate, Rejected
from .polynomial import RationalPolynomial
from .subcount import blowup_threshold, count_copies, expected_density
from .tournament import (
    Tournament,
    automorphism_count,
    automorphisms,
    format_code,
    is_strongly_connected,
    is_transitive,
    strong_components,
    twin_pairs,
)

HALF = Fraction(1, 2)
UNIFORM = "uniform"
TRANSITIVE = "transitive"


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class TournamentMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("tournament matrix must be square and non-empty")
        for i in range(n):
            for j in range(n):
                if not 0 <= rows[i][j] <= 1:
                    raise ValueError(f"entry ({i},{j}) = {rows[i][j]} outside [0,1]")
                if rows[i][j] + rows[j][i] != 1:
                    raise ValueError(f"A[{i}][{j}] + A[{j}][{i}] != 1")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def constant_half(cls, order: int) -> "TournamentMatrix":
        return cls(tuple(tuple(HALF for _ in range(order)) for _ in range(order)))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries[ij[0]][ij[1]]

    def transpose(self) -> "TournamentMatrix":
        n = self.order
        return TournamentMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    def permuted(self, perm: Sequence[int]) -> "TournamentMatrix":
        """Row/column ``i`` of the result is row/column ``perm[i]`` of ``self``."""
        return TournamentMatrix(tuple(tuple(self.entries[p][q] for q in perm) for p in perm))

    def is_constant_half(self) -> bool:
        return all(x == HALF for row in self.entries for x in row)


@dataclass(frozen=True)
class StochasticVector:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(Fraction(x) for x in self.weights)
        if not ws:
            raise DimensionError("empty weight vector")
        if any(x < 0 for x in ws):
            raise ValueError("weights must be non-negative")
        if sum(ws) != 1:
            raise ValueError(f"weights sum to {sum(ws)}, not 1")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def uniform(cls, n: int) -> "StochasticVector":
        return cls(tuple(Fraction(1, n) for _ in range(n)))

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        return self.weights[i]

    @property
    def positive(self) -> bool:
        return all(x > 0 for x in self.weights)

    def permuted(self, perm: Sequence[int]) -> "StochasticVector":
        return StochasticVector(tuple(self.weights[p] for p in perm))


@dataclass(frozen=True)
class ExtendedStepTournamenton:
    matrix: TournamentMatrix
    weights: StochasticVector
    kinds: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.matrix.order
        if len(self.weights) != n:
            raise DimensionError("matrix and weights differ in order")
        kinds = tuple(self.kinds) or (UNIFORM,) * n
        if len(kinds) != n or any(x not in (UNIFORM, TRANSITIVE) for x in kinds):
            raise ValueError(f"bad block kinds {self.kinds!r}")
        object.__setattr__(self, "kinds", kinds)

    @property
    def order(self) -> int:
        return self.matrix.order


def _check_dims(a: TournamentMatrix, w: StochasticVector) -> None:
    if a.order != len(w):
        raise DimensionError(f"matrix order {a.order} but {len(w)} weights")


def _edges(h: Tournament) -> list[list[tuple[int, bool]]]:
    """For each vertex v, the earlier vertices u with whether u -> v."""
    return [[(u, h.beats(u, v)) for u in range(v)] for v in range(h.k)]


def d_star(h: Tournament, a: TournamentMatrix, w: StochasticVector | None = None) -> Fraction:
    """Exact d*(h, A, w); ``w`` defaults to uniform weights."""
    if w is None:
        w = StochasticVector.uniform(a.order)
    _check_dims(a, w)
    n, k = a.order, h.k
    # scale to integers so the inner loop never touches Fraction
    da = lcm(*(x.denominator for row in a.entries for x in row))
    dw = lcm(*(x.denominator for x in w.weights))
    ai = [[int(x * da) for x in row] for row in a.entries]
    wi = [int(x * dw) for x in w.weights]
    back = _edges(h)
    f = [0] * k

    def walk(v: int, acc: int) -> int:
        if v == k:
            return acc
        total = 0
        for b in range(n):
            val = acc * wi[b]
            if not val:
                continue
            for u, forward in back[v]:
                val *= ai[f[u]][b] if forward else ai[b][f[u]]
                if not val:
                    break
            else:
                f[v] = b
                total += walk(v + 1, val)
        return total

    return Fraction(walk(0, 1), dw**k * da ** comb(k, 2))


def _map_sum(
    h: Tournament,
    a: TournamentMatrix,
    weights: Sequence[Fraction],
    kinds: Sequence[str],
    tracked: int | None = None,
) -> dict[int, Fraction]:
    """Map-sum with transitive blocks, split by how many vertices land in ``tracked``."""
    n, k = a.order, h.k
    back = _edges(h)
    f = [0] * k
    trans = [kind == TRANSITIVE for kind in kinds]
    result: dict[int, Fraction] = {}

    def leaf(acc: Fraction) -> None:
        divisor = 1
        for b in range(n):
            if not trans[b]:
                continue
            members = [v for v in range(k) if f[v] == b]
            if len(members) > 2 and not is_transitive(h.induced(members)):
                return
            divisor *= factorial(len(members))
        m = sum(1 for v in range(k) if f[v] == tracked) if tracked is not None else 0
        result[m] = result.get(m, Fraction(0)) + acc / divisor

    def walk(v: int, acc: Fraction) -> None:
        if v == k:
            leaf(acc)
            return
        for b in range(n):
            val = acc * weights[b]
            if not val:
                continue
            for u, forward in back[v]:
                if f[u] == b and trans[b]:
                    continue  # handled by the ordering indicator at the leaf
                val *= a.entries[f[u]][b] if forward else a.entries[b][f[u]]
                if not val:
                    break
            else:
                f[v] = b
                walk(v + 1, val)

    walk(0, Fraction(1))
    return result


def d_step(h: Tournament, W: ExtendedStepTournamenton) -> Fraction:
    """Density d(h, W) = k!/|Aut(h)| * (map-sum)."""
    sums = _map_sum(h, W.matrix, W.weights.weights, W.kinds)
    total = sum(sums.values(), Fraction(0))
    return Fraction(factorial(h.k), automorphism_count(h)) * total


def blowup_matrix(s: Tournament) -> TournamentMatrix:
    return TournamentMatrix(
        tuple(
            tuple(HALF if i == j else Fraction(int(s.beats(i, j))) for j in range(s.k))
            for i in range(s.k)
        )
    )


def blowup(s: Tournament) -> ExtendedStepTournamenton:
    return ExtendedStepTournamenton(blowup_matrix(s), StochasticVector.uniform(s.k))


def _matrix_payload(a: TournamentMatrix) -> list[list[str]]:
    return [[f"{x.numerator}/{x.denominator}" for x in row] for row in a.entries]


def _weights_payload(w: StochasticVector) -> list[str]:
    return [f"{x.numerator}/{x.denominator}" for x in w.weights]


def _require_non_transitive(h: Tournament) -> None:
    if is_transitive(h):
        raise ValueError("pattern is transitive")


def labelled_threshold(k: int) -> Fraction:
    return Fraction(1, 2 ** comb(k, 2))


def check_prop4(
    h: Tournament, a: TournamentMatrix, w: StochasticVector | None = None, *, witness_extra=None
) -> Certificate:
    """Certificate that d*(h, A, w) >= 2^-C(k,2) with A not constantly 1/2."""
    _require_non_transitive(h)
    if w is None:
        w = StochasticVector.uniform(a.order)
    _check_dims(a, w)
    if not w.positive:
        raise ValueError("weights must be strictly positive")
    value = d_star(h, a, w)
    threshold = labelled_threshold(h.k)
    if a.is_constant_half():
        raise Rejected("matrix is constantly 1/2", dstar=value, threshold=threshold)
    if value < threshold:
        raise Rejected("d* below threshold", dstar=value, threshold=threshold, margin=value - threshold)
    witness = {"matrix": _matrix_payload(a), "weights": _weights_payload(w)}
    witness.update(witness_extra or {})
    return Certificate(format_code(h), h.k, "param_matrix", witness, value, threshold)


def check_prop7(h: Tournament, s: Tournament) -> Certificate:
    """Certificate that n(h, s) >= s^k 2^-C(k,2)."""
    _require_non_transitive(h)
    if s.k <= h.k:
        raise ValueError(f"host must have more than {h.k} vertices")
    n = count_copies(h, s)
    threshold = blowup_threshold(h, s.k)
    if n < threshold:
        raise Rejected(
            f"{n} copies below threshold {threshold}", copies=n, threshold=threshold, margin=n - threshold
        )
    return Certificate(
        format_code(h), h.k, "blowup_witness", {"host": format_code(s), "copies": n}, Fraction(n), threshold
    )


SPLIT_MATRIX = TournamentMatrix(((HALF, Fraction(1)), (Fraction(0), HALF)))


def dominance_splits(h: Tournament) -> list[tuple[list[int], list[int]]]:
    """Every split (X1, X2) with all edges oriented from X1 to X2."""
    comps = strong_components(h)
    splits = []
    for cut in range(1, len(comps)):
        x1 = sorted(v for c in comps[:cut] for v in c)
        x2 = sorted(v for c in comps[cut:] for v in c)
        splits.append((x1, x2))
    return splits


def split_weights(alpha: Fraction) -> StochasticVector:
    return StochasticVector((alpha, 1 - alpha))


def split_certificate(h: Tournament, grid: int = 1000) -> Certificate:
    """Certificate from the two-part matrix ((1/2, 1), (0, 1/2)) with weights (a, 1-a)."""
    _require_non_transitive(h)
    if is_strongly_connected(h):
        raise ValueError("pattern is strongly connected")
    k = h.k
    threshold = labelled_threshold(k)
    x1, x2 = min(dominance_splits(h), key=lambda s: (abs(len(s[0]) - len(s[1])), len(s[0])))
    candidates = [HALF] + [Fraction(i, grid) for i in range(1, grid)]
    for alpha in candidates:
        value = d_star(h, SPLIT_MATRIX, split_weights(alpha))
        if value > threshold:
            witness = {"partition": [x1, x2], "alpha": f"{alpha.numerator}/{alpha.denominator}"}
            return Certificate(format_code(h), k, "split_weights", witness, value, threshold)
    raise RuntimeError(f"no alpha on the 1/{grid} grid beats the threshold for {format_code(h)}")


TWIN_BOUND = Fraction(2, 6**6)


def twin_automorphism_certificate(h: Tournament, kind: str | None = None) -> Certificate:
    """Blow-up of ``h`` itself; valid when ``h`` has twins or a non-trivial automorphism.

    ``kind`` selects ``"twins"`` or ``"nontrivial_automorphism"``; by default
    twins are preferred.
    """
    if h.k != 6:
        raise ValueError("defined for 6-vertex patterns")
    _require_non_transitive(h)
    pairs = twin_pairs(h)
    auts = [p for p in automorphisms(h) if any(p[i] != i for i in range(h.k))]
    if kind is None:
        kind = "twins" if pairs else "nontrivial_automorphism"
    if kind == "twins":
        if not pairs:
            raise Rejected("pattern has no twins")
        witness = {"pair": list(pairs[0])}
    elif kind == "nontrivial_automorphism":
        if not auts:
            raise Rejected("pattern is rigid")
        witness = {"automorphism": list(min(auts))}
    else:
        raise ValueError(f"unknown kind {kind!r}")
    value = d_star(h, blowup_matrix(h))
    threshold = labelled_threshold(6)
    if value < TWIN_BOUND:
        raise Rejected("d* below 2*6^-6", dstar=value)
    witness["bound"] = f"{TWIN_BOUND.numerator}/{TWIN_BOUND.denominator}"
    return Certificate(format_code(h), 6, kind, witness, value, threshold)


# -- interpolation towards the transitive tournamenton ----------------------


def u_alpha(W: ExtendedStepTournamenton, alpha: Fraction) -> ExtendedStepTournamenton:
    """W squeezed onto [0, alpha] followed by a transitive block of weight 1 - alpha.

    The transitive block sits above every W block, so edges point from it
    into W.
    """
    n = W.order
    rows = [list(row) + [Fraction(0)] for row in W.matrix.entries]
    rows.append([Fraction(1)] * n + [HALF])
    weights = [alpha * x for x in W.weights.weights] + [1 - alpha]
    return ExtendedStepTournamenton(
        TournamentMatrix(tuple(map(tuple, rows))),
        StochasticVector(tuple(weights)),
        W.kinds + (TRANSITIVE,),
    )


def u_alpha_polynomial(h: Tournament, W: ExtendedStepTournamenton) -> RationalPolynomial:
    """d(h, U_alpha) as an exact polynomial in alpha."""
    if W.order > 8:
        raise DimensionError("at most 8 blocks")
    family = u_alpha(W, Fraction(1, 2))
    weights = list(W.weights.weights) + [Fraction(1)]
    sums = _map_sum(h, family.matrix, weights, family.kinds, tracked=W.order)
    k = h.k
    a = RationalPolynomial([0, 1])
    poly = RationalPolynomial()
    for m, c in sums.items():
        poly = poly + c * a ** (k - m) * (1 - a) ** m
    return Fraction(factorial(k), automorphism_count(h)) * poly


@dataclass
class EqualityWitness:
    low: Fraction
    high: Fraction
    polynomial: RationalPolynomial
    target: Fraction
    family: Callable[[Fraction], ExtendedStepTournamenton]


def equality_witness(
    h: Tournament, W: ExtendedStepTournamenton, width: Fraction = Fraction(1, 10**9)
) -> EqualityWitness:
    """Bracket an alpha in (0, 1] with d(h, U_alpha) equal to the random density."""
    _require_non_transitive(h)
    target = expected_density(h)
    poly = u_alpha_polynomial(h, W)
    if poly(1) < target:
        raise ValueError("d(h, W) is below the random density")
    g = poly - target
    lo, hi = Fraction(0), Fraction(1)
    if g(hi) == 0:
        lo = hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return EqualityWitness(lo, hi, poly, target, lambda alpha: u_alpha(W, alpha))
