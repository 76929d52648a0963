import itertools
from math import comb

import pytest

from folideg.errors import WeightSearchExhausted
from folideg.weights import (
    WeightVector,
    default_plane_weights,
    monomial_weights,
    random_valid_weights,
    validate_conic_weights,
    validate_distinct_weights,
)

W013 = WeightVector((0, 1, 3))


def brute_monomial_weights(e, J, w):
    return sorted(
        sum(a * w[j] for a, j in zip(exps, J))
        for exps in itertools.product(range(e + 1), repeat=len(J))
        if sum(exps) == e
    )


@pytest.mark.parametrize("w,ok", [((0, 1, 3), True), ((0, 1, 2), False), ((0, 0, 1), False), ((5, -2, 9), True)])
def test_validate_conic_weights(w, ok):
    assert validate_conic_weights(WeightVector(w)) is ok


def test_monomial_weights_examples():
    assert monomial_weights(1, (0, 1, 2), W013) == [0, 1, 3]
    assert sorted(monomial_weights(2, (1, 2), W013)) == [2, 4, 6]
    assert monomial_weights(0, (1,), W013, shift=5) == [5]
    assert monomial_weights(0, (0, 2), W013, shift=5) == [5]


def test_monomial_weights_lex_order():
    # z0^2, z0z1, z0z2, z1^2, z1z2, z2^2
    assert monomial_weights(2, (0, 1, 2), W013) == [0, 1, 3, 2, 4, 6]


def test_monomial_weights_cardinality_exhaustive():
    w = WeightVector((2, -3, 7, 11))
    for r in range(1, 5):
        J = tuple(range(r))
        for e in range(13):
            assert len(monomial_weights(e, J, w)) == comb(e + r - 1, r - 1)


def test_monomial_weights_match_brute_force():
    w = WeightVector((2, -3, 7, 11))
    for J in [(0,), (1, 3), (0, 2, 3), (0, 1, 2, 3)]:
        for e in range(7):
            assert sorted(monomial_weights(e, J, w)) == brute_monomial_weights(e, J, w)


def test_monomial_weight_sum_formula():
    for w in [(0, 1, 3), (4, -1, 9), (2, 5, -7, 1)]:
        wv = WeightVector(w)
        n = wv.n
        for e in range(9):
            total = sum(brute_monomial_weights(e, tuple(range(n + 1)), wv))
            assert sum(monomial_weights(e, tuple(range(n + 1)), wv)) == total
            assert total * (n + 1) == sum(w) * e * comb(e + n, n)


def test_shift_is_elementwise():
    w = WeightVector((3, -1, 8))
    for e in range(5):
        base = monomial_weights(e, (0, 1, 2), w)
        assert monomial_weights(e, (0, 1, 2), w, shift=-4) == [x - 4 for x in base]


def test_random_valid_weights_deterministic():
    a = random_valid_weights(2, validate_conic_weights, seed=1)
    assert a == random_valid_weights(2, validate_conic_weights, seed=1)
    assert validate_conic_weights(a)
    b = random_valid_weights(3, validate_distinct_weights, seed=7)
    assert len(b) == 4 and len(set(b)) == 4


def test_random_valid_weights_exhaustion():
    with pytest.raises(WeightSearchExhausted):
        random_valid_weights(2, lambda w: False, seed=0)


def test_default_plane_weights():
    w = default_plane_weights(4)
    assert w.w == (0, 1, 3, 7, 15)
    diffs = [a - b for a, b in itertools.permutations(w.w, 2)]
    assert len(set(diffs)) == len(diffs)


def test_parse_and_bound():
    assert WeightVector.parse("0, 1,3").w == (0, 1, 3)
    with pytest.raises(ValueError):
        WeightVector((0, 2**21))
