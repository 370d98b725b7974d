import random
from fractions import Fraction
from math import gcd

import pytest

import twistk as tk
from twistk.groups import cyclic, direct_product, symmetric
from twistk.multipliers import (
    DomainMismatch,
    KleinMultiplier,
    SimilarityWitness,
    TableMultiplier,
    bilinear_multiplier,
    coboundary_twist,
    is_similar,
    klein,
    normalize,
    random_coboundary,
    trivial_multiplier,
    validate,
)
from twistk.regularity import is_regular_element
from twistk.torus import ZERO, rot


def test_klein_values():
    s = klein(2, 1)
    # packing: (a1, a2) -> a1 * n + a2
    assert s.value(0 * 2 + 1, 1 * 2 + 0) == rot("1/2")
    assert s.value(1 * 2 + 1, 1 * 2 + 1) == rot("1/2")
    s42 = klein(4, 2)
    assert s42.value(0 * 4 + 1, 1 * 4 + 0) == rot("1/2")
    assert s42.value(0 * 4 + 1, 2 * 4 + 0) == ZERO
    s32 = klein(3, 2)
    assert s32.value(0 * 3 + 2, 2 * 3 + 0) == rot("2/3")


def test_identity_rows_all_families():
    for s in (klein(3, 2), trivial_multiplier(symmetric(3))):
        e = s.group.identity
        for b in s.group.elements():
            assert s.value(e, b).is_integral()
            assert s.value(b, e).is_integral()


def test_klein_bad_range():
    with pytest.raises(ValueError):
        klein(1, 0)
    with pytest.raises(ValueError):
        klein(4, 4)
    with pytest.raises(ValueError):
        klein(4, -1)


def test_klein_zero_is_trivial():
    s = klein(2, 0)
    assert all(s.value(a, b).is_integral() for a in s.group.elements() for b in s.group.elements())


@pytest.mark.parametrize("n", range(2, 7))
def test_validate_klein_exhaustive(n):
    for k in range(n):
        report = validate(klein(n, k))
        assert report.ok and report.mode == "exhaustive"
        assert report.checked == n**6


def test_validate_reports_perturbation_witness():
    s = klein(2, 1).to_table()
    values = [list(row) for row in s.values]
    values[3][3] = values[3][3] + rot("1/3")
    broken = TableMultiplier(s.group, values)
    report = validate(broken)
    assert not report.ok
    assert report.witness is not None
    a, b, c = report.witness
    lhs = broken.value(a, b) + broken.value(broken.group.mul(a, b), c)
    rhs = broken.value(a, broken.group.mul(b, c)) + broken.value(b, c)
    assert lhs != rhs


def test_validate_trivial_passes():
    assert validate(trivial_multiplier(symmetric(3))).ok


def test_table_shape_mismatch():
    with pytest.raises(DomainMismatch):
        TableMultiplier(cyclic(3), [[ZERO] * 2 for _ in range(2)])


def test_is_similar_identity_witness():
    s = klein(2, 1)
    assert is_similar(s, s, SimilarityWitness([ZERO] * 4))


def test_is_similar_wrong_beta():
    s = klein(2, 1)
    beta = [ZERO, rot("1/2"), ZERO, ZERO]
    assert not is_similar(s, s, SimilarityWitness(beta))


def test_coboundary_twist_is_similar_and_valid():
    rng = random.Random(11)
    for base in (klein(3, 1), trivial_multiplier(symmetric(3))):
        beta = random_coboundary(base.group, rng)
        tau = coboundary_twist(base, beta)
        assert validate(tau).ok
        assert is_similar(base, tau, SimilarityWitness(beta))


def test_normalize_already_normalized_is_stable():
    s, _ = normalize(klein(4, 2))
    again, witness = normalize(s)
    assert again.values == s.values
    assert all(witness(a).is_integral() for a in s.group.elements())


@pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 2), (5, 3), (6, 4)])
def test_normalize_klein(n, k):
    s = klein(n, k)
    normalized, witness = normalize(s)
    g = s.group
    for a in g.elements():
        assert normalized.value(a, g.inv(a)).is_integral()
    assert validate(normalized).ok
    assert is_similar(s, normalized, witness)


def test_normalize_z2_halving_example():
    g = cyclic(2)
    s = TableMultiplier(g, [[ZERO, ZERO], [ZERO, rot("1/2")]])
    assert validate(s).ok
    normalized, witness = normalize(s)
    assert witness(1) == -rot("1/2").halve() == rot("3/4")
    assert normalized.value(1, 1).is_integral()


def test_similarity_preserves_regularity():
    rng = random.Random(13)
    for base in (klein(4, 2), klein(6, 3), trivial_multiplier(symmetric(3))):
        tau = coboundary_twist(base, random_coboundary(base.group, rng))
        for a in base.group.elements():
            assert is_regular_element(base, a) == is_regular_element(tau, a)


def test_bilinear_multiplier():
    s = bilinear_multiplier([2, 2], [[Fraction(0), Fraction(0)], [Fraction(1, 2), Fraction(0)]])
    k = klein(2, 1)
    assert s.values == k.to_table().values
    with pytest.raises(ValueError):
        bilinear_multiplier([2, 3], [[Fraction(1, 2), Fraction(1, 2)], [Fraction(0), Fraction(0)]])


def test_to_table_round_trip():
    s = klein(3, 2)
    t = s.to_table()
    assert all(
        t.value(a, b) == s.value(a, b) for a in s.group.elements() for b in s.group.elements()
    )


def test_is_normalized_flags():
    assert not klein(2, 1).is_normalized()
    assert trivial_multiplier(cyclic(5)).is_normalized()
