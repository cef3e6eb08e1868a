import random
from fractions import Fraction

import pytest

from fibquat import (
    DomainError,
    LinearRelation,
    QuadExt,
    binet_general,
    fib,
    ratio_limit,
    relation_seq,
)
from fibquat.genseq import Side


def test_relation_seq_reference_values():
    rel = LinearRelation(1, 1)
    assert relation_seq(rel, 0, 1, "Left", 10) == 55
    assert relation_seq(rel, 0, 1, "Left", 0) == 0
    assert relation_seq(rel, 7, 3, "Right", 0) == 7
    pell = LinearRelation(2, 1)
    assert [relation_seq(pell, 0, 1, "Left", n) for n in range(6)] == [
        0, 1, 2, 5, 12, 29,
    ]


def test_left_right_difference_witness():
    rel = LinearRelation(2, 1)
    assert relation_seq(rel, 1, 1, "Left", 3) == 7
    assert relation_seq(rel, 1, 1, "Right", 3) == 5


def test_sides_coincide_when_coefficients_match():
    rng = random.Random(61)
    for _ in range(20):
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        rel = LinearRelation(c, c)
        s0, s1 = rng.randint(-5, 5), rng.randint(-5, 5)
        n = rng.randint(0, 25)
        left = relation_seq(rel, s0, s1, Side.LEFT, n)
        right = relation_seq(rel, s0, s1, Side.RIGHT, n)
        assert left == right


def test_side_parsing():
    assert Side.parse("left") is Side.LEFT
    assert Side.parse("RIGHT") is Side.RIGHT
    assert Side.parse(Side.LEFT) is Side.LEFT
    with pytest.raises(DomainError):
        Side.parse("middle")


def test_binet_reference_values():
    fib_rel = LinearRelation(1, 1)
    value = binet_general(fib_rel, 0, 1, 10)
    assert value.u == 55 and value.v == 0 and value.delta == 5
    pell = LinearRelation(2, 1)
    value = binet_general(pell, 0, 1, 5)
    assert value.u == 29 and value.v == 0 and value.delta == 8
    seed = binet_general(pell, Fraction(3, 2), -4, 1)
    assert seed.u == -4 and seed.v == 0


def test_binet_matches_recursion_rational_coefficients():
    rng = random.Random(62)
    built = 0
    while built < 25:
        rel = LinearRelation(
            Fraction(rng.randint(-7, 7), rng.randint(1, 3)),
            Fraction(rng.randint(-7, 7), rng.randint(1, 3)),
        )
        if rel.delta <= 0:
            continue
        s0 = Fraction(rng.randint(-4, 4), rng.randint(1, 2))
        s1 = Fraction(rng.randint(-4, 4), rng.randint(1, 2))
        for n in (0, 1, 2, 3, 11, 27, 40):
            closed = binet_general(rel, s0, s1, n)
            assert closed.is_rational
            assert closed.u == relation_seq(rel, s0, s1, "Left", n)
        built += 1


def test_binet_rejects_nonreal_roots():
    with pytest.raises(DomainError):
        binet_general(LinearRelation(1, -1), 0, 1, 4)  # delta = -3
    with pytest.raises(DomainError):
        binet_general(LinearRelation(2, -1), 0, 1, 4)  # delta = 0, double root


def test_ratio_limit_classics():
    golden = ratio_limit(LinearRelation(1, 1), 0, 1)
    assert abs(golden.limit - 1.618033988749895) < 1e-12
    assert golden.empirical_error < 1e-12
    silver = ratio_limit(LinearRelation(2, 1), 0, 1)
    assert abs(silver.limit - (1 + 2**0.5)) < 1e-12


def test_ratio_limit_rejects_degeneracies():
    rel = LinearRelation(1, 1)
    beta = (QuadExt.rational(1, rel.delta) - QuadExt.sqrt_delta(rel.delta)) * Fraction(
        1, 2
    )
    with pytest.raises(DomainError):
        ratio_limit(rel, 1, beta)  # alpha-coefficient vanishes exactly
    with pytest.raises(DomainError):
        ratio_limit(rel, 0, 0)  # zero sequence locks onto beta too
    with pytest.raises(DomainError):
        ratio_limit(LinearRelation(0, 3), 0, 1)  # |alpha| = |beta|
    with pytest.raises(DomainError):
        ratio_limit(LinearRelation(-1, 1), 0, 1)  # beta dominates
    with pytest.raises(DomainError):
        ratio_limit(LinearRelation(1, -1), 0, 1)  # complex roots


def test_quadext_seeds_must_share_delta():
    rel = LinearRelation(1, 1)
    alien = QuadExt(1, 1, 7)
    with pytest.raises(DomainError):
        ratio_limit(rel, alien, 1)


def test_index_bounds():
    rel = LinearRelation(1, 1)
    with pytest.raises(DomainError):
        relation_seq(rel, 0, 1, "Left", -1)
    with pytest.raises(DomainError):
        relation_seq(rel, 0, 1, "Left", 10**5 + 1)
    with pytest.raises(DomainError):
        binet_general(rel, 0, 1, 10**4 + 1)
    assert relation_seq(rel, 0, 1, "Left", 90) == fib(90)
