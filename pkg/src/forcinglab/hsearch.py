"""Hill climbing over host tournaments to maximise the copies of a pattern."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb

from .certificate import Certificate, Rejected
from .certify import parallel_map
from .stepton import check_prop7
from .subcount import CopyCounter
from .tournament import Tournament, is_prime, canonical_code, format_code, paley_tournament


@dataclass
class SearchConfig:
    pattern: Tournament
    host_size: int
    restarts: int = 10
    max_plateau_steps: int = 50
    seed: int = 0
    warm_start: bool = True
    max_steps: int = 5000
    check_every: int = 0  # recount from scratch every n flips; 0 disables

    def __post_init__(self):
        if not self.pattern.k < self.host_size <= 16:
            raise ValueError(f"host size must be in {self.pattern.k + 1}..16")
        if self.restarts < 1:
            raise ValueError("need at least one restart")


@dataclass
class RestartResult:
    index: int
    start: str
    host: Tournament
    copies: int
    flips: int
    best_trajectory: list[int] = field(default_factory=list)


@dataclass
class SearchResult:
    host: Tournament
    copies: int
    restarts: list[RestartResult]
    seconds: float

    @property
    def total_flips(self) -> int:
        return sum(r.flips for r in self.restarts)


def random_tournament(s: int, rng: random.Random) -> Tournament:
    out = [0] * s
    for u in range(s):
        for v in range(u + 1, s):
            if rng.random() < 0.5:
                out[u] |= 1 << v
            else:
                out[v] |= 1 << u
    return Tournament(s, out)


def paley_start(s: int) -> Tournament:
    """Paley tournament on the smallest admissible prime >= s, cut down to s vertices."""
    q = s
    while not (is_prime(q) and q % 4 == 3):
        q += 1
    return paley_tournament(q, vertices=s)


def _climb(cfg: SearchConfig, index: int) -> RestartResult:
    rng = random.Random(f"{cfg.seed}/{index}")
    s, k = cfg.host_size, cfg.pattern.k
    if cfg.warm_start and index % 2 == 1:
        start, host = "paley", paley_start(s)
    else:
        start, host = "random", random_tournament(s, rng)
    counter = CopyCounter(cfg.pattern, host)
    best, best_host = counter.count, counter.host
    trajectory = [best]
    ceiling = comb(s, k)
    plateau = 0
    last = None
    flips = 0
    while flips < cfg.max_steps and best < ceiling:
        deltas = counter.flip_deltas()
        moves = [(u, v, deltas[u * s + v]) for u in range(s) for v in range(u + 1, s)]
        top = max(d for _, _, d in moves)
        if top > 0:
            choices = [(u, v) for u, v, d in moves if d == top]
            plateau = 0
        elif top == 0 and plateau < cfg.max_plateau_steps:
            choices = [(u, v) for u, v, d in moves if d == 0 and (u, v) != last]
            plateau += 1
        else:
            break
        if not choices:
            break
        u, v = rng.choice(choices)
        counter.flip(u, v)
        last = (u, v)
        flips += 1
        if cfg.check_every and flips % cfg.check_every == 0:
            fresh = counter.recount()
            if fresh != counter.count:
                raise AssertionError(f"incremental count {counter.count} != recount {fresh}")
        if counter.count > best:
            best, best_host = counter.count, counter.host
        trajectory.append(best)
    return RestartResult(index, start, best_host, best, flips, trajectory)


def _tie_key(t: Tournament) -> str:
    return canonical_code(t) if t.k <= 8 else format_code(t)


class _Restart:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg

    def __call__(self, index: int) -> RestartResult:
        return _climb(self.cfg, index)


def local_search(cfg: SearchConfig) -> SearchResult:
    """Best host over ``cfg.restarts`` independent climbs; deterministic in ``cfg.seed``."""
    t0 = time.perf_counter()
    results = parallel_map(_Restart(cfg), range(cfg.restarts))
    best = max(results, key=lambda r: r.copies).copies
    winner = min((r for r in results if r.copies == best), key=lambda r: _tie_key(r.host))
    return SearchResult(winner.host, winner.copies, results, time.perf_counter() - t0)


def certify_search_result(pattern: Tournament, host: Tournament) -> Certificate:
    if host.k <= pattern.k:
        raise ValueError("host must have more vertices than the pattern")
    try:
        return check_prop7(pattern, host)
    except Rejected as exc:
        margin = exc.details.get("margin")
        raise Rejected(f"{exc} (margin {margin})", **exc.details) from None
