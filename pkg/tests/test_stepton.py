import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcinglab.catalog import catalog
from forcinglab.certificate import Rejected
from forcinglab.stepton import (
    SPLIT_MATRIX,
    TRANSITIVE,
    DimensionError,
    ExtendedStepTournamenton,
    StochasticVector,
    TournamentMatrix,
    blowup,
    blowup_matrix,
    check_prop4,
    check_prop7,
    d_star,
    d_step,
    dominance_splits,
    equality_witness,
    split_certificate,
    split_weights,
    u_alpha,
    u_alpha_polynomial,
)
from forcinglab.subcount import expected_density
from forcinglab.tournament import Tournament, enumerate_tournaments, is_strongly_connected, is_transitive

import oracles
from test_tournament import tournaments


def random_matrix(n, rnd, denom=8):
    rows = [[Fraction(1, 2)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        x = Fraction(rnd.randint(0, denom), denom)
        rows[i][j], rows[j][i] = x, 1 - x
    return TournamentMatrix(tuple(map(tuple, rows)))


def random_weights(n, rnd):
    raw = [rnd.randint(1, 6) for _ in range(n)]
    return StochasticVector(tuple(Fraction(r, sum(raw)) for r in raw))


def test_matrix_validation():
    with pytest.raises(ValueError):
        TournamentMatrix(((Fraction(1, 2), Fraction(1)), (Fraction(1), Fraction(1, 2))))
    with pytest.raises(ValueError):
        TournamentMatrix(((Fraction(1, 2), Fraction(3, 2)), (Fraction(-1, 2), Fraction(1, 2))))
    with pytest.raises(DimensionError):
        TournamentMatrix(((Fraction(1, 2),), (Fraction(1, 2),)))
    with pytest.raises(ValueError):
        StochasticVector((Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(DimensionError):
        d_star(catalog("C_3"), TournamentMatrix.constant_half(2), StochasticVector.uniform(3))


@settings(max_examples=30, deadline=None)
@given(tournaments(min_k=3, max_k=5), st.integers(1, 3), st.randoms(use_true_random=False))
def test_dstar_matches_bruteforce(h, n, rnd):
    a, w = random_matrix(n, rnd), random_weights(n, rnd)
    assert d_star(h, a, w) == oracles.brute_dstar(oracles.adjacency(h), a.entries, w.weights)


@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_half_baseline_all_six_vertex_classes(order):
    a = TournamentMatrix.constant_half(order)
    for h in enumerate_tournaments(6):
        assert d_star(h, a) == oracles.threshold(6)


def test_relabeling_invariance():
    rnd = random.Random(11)
    classes = [t for t in enumerate_tournaments(6) if not is_transitive(t)]
    for _ in range(100):
        h = rnd.choice(classes)
        n = rnd.randint(2, 3)
        a, w = random_matrix(n, rnd, 4), random_weights(n, rnd)
        perm = list(range(6))
        rnd.shuffle(perm)
        bperm = list(range(n))
        rnd.shuffle(bperm)
        base = d_star(h, a, w)
        assert d_star(h.relabel(perm), a, w) == base
        assert d_star(h, a.permuted(bperm), w.permuted(bperm)) == base


def test_blowup_of_host_counts_copies():
    # d_step(h, blow-up of S) >= n(h, S) * k! / s^k since vertex-injective maps alone contribute that
    h, s = catalog("H_5"), catalog("S_7")
    w = blowup(s)
    assert d_step(h, w) >= Fraction(21 * 120, 7**5)


def test_goodman_type_bounds():
    rnd = random.Random(5)
    c3, c4 = catalog("C_3"), catalog("C_4")
    worst3 = worst4 = Fraction(0)
    for _ in range(1000):
        n = rnd.randint(1, 4)
        w = ExtendedStepTournamenton(random_matrix(n, rnd, 6), random_weights(n, rnd))
        worst3 = max(worst3, d_step(c3, w))
        worst4 = max(worst4, d_step(c4, w))
    assert worst3 <= Fraction(1, 4)
    assert worst4 <= Fraction(1, 2)


def test_transitive_block():
    tb = ExtendedStepTournamenton(TournamentMatrix.constant_half(1), StochasticVector.uniform(1), (TRANSITIVE,))
    assert d_step(Tournament.transitive(4), tb) == 1
    assert d_step(catalog("C_3"), tb) == 0
    assert d_step(catalog("H_5"), tb) == 0


def test_densities_of_step_tournamenton_sum_to_one():
    rnd = random.Random(2)
    w = ExtendedStepTournamenton(random_matrix(3, rnd), random_weights(3, rnd))
    for k in (3, 4):
        assert sum(d_step(h, w) for h in enumerate_tournaments(k)) == 1
    ext = u_alpha(w, Fraction(2, 5))
    assert sum(d_step(h, ext) for h in enumerate_tournaments(4)) == 1


def test_u_alpha_polynomial_matches_direct():
    h = catalog("H_5")
    w = blowup(catalog("S_7"))
    p = u_alpha_polynomial(h, w)
    for alpha in (Fraction(1, 3), Fraction(3, 4)):
        assert p(alpha) == d_step(h, u_alpha(w, alpha))


def test_equality_witness_endpoints():
    h, w = catalog("H_5"), blowup(catalog("S_7"))
    ew = equality_witness(h, w)
    assert ew.polynomial(0) == 0
    assert ew.polynomial(1) == d_step(h, w)
    assert ew.high - ew.low <= Fraction(1, 10**9)
    assert ew.polynomial(ew.low) <= expected_density(h) <= ew.polynomial(ew.high)


def test_prop4_and_prop7_checks():
    h = catalog("H_6^14")
    with pytest.raises(Rejected):
        check_prop4(h, TournamentMatrix.constant_half(2))
    with pytest.raises(ValueError):
        check_prop4(Tournament.transitive(4), SPLIT_MATRIX)
    cert = check_prop7(catalog("H_5"), catalog("S_7"))
    assert cert.witness["copies"] == 21
    with pytest.raises(Rejected) as exc:
        check_prop7(catalog("H_6^1"), catalog("S_7"))
    assert exc.value.details["margin"] < 0


def test_split_certificates_on_all_disconnected_classes():
    hits = 0
    for h in enumerate_tournaments(6):
        if is_transitive(h) or is_strongly_connected(h):
            continue
        hits += 1
        cert = split_certificate(h)
        assert cert.dstar > oracles.threshold(6)
        for x1, x2 in dominance_splits(h):
            k1, k2 = len(x1), len(x2)
            assert all(h.beats(u, v) for u in x1 for v in x2)
            if 2 <= k1 <= 4:
                bound = (1 + Fraction(1, 2**k1) + Fraction(1, 2**k2)) * oracles.threshold(6)
                assert d_star(h, SPLIT_MATRIX, split_weights(Fraction(1, 2))) >= bound
    assert hits == 20
    with pytest.raises(ValueError):
        split_certificate(catalog("H_6^1"))
