import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexfan import (
    DimensionMismatch,
    LexVec,
    LexfanError,
    Multiplier,
    TowerProfile,
    apply_multiplier,
    arch_level,
    epsilon,
    is_monotone_multiplier,
    lex_cmp,
    truncate,
)
from oracles import monotone_by_oracle

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def lexvecs(k):
    return st.lists(rationals, min_size=k, max_size=k).map(LexVec)


def test_lex_cmp_examples():
    assert lex_cmp(LexVec([0, 5]), LexVec([1, -100])) == -1
    assert lex_cmp(LexVec([2, 3]), LexVec([2, 3])) == 0
    assert lex_cmp(LexVec([1, -1]), LexVec([1, -2])) == 1


def test_lex_cmp_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        lex_cmp(LexVec([1]), LexVec([1, 2]))


@given(lexvecs(3), lexvecs(3), lexvecs(3))
def test_lex_order_compatible_with_addition(a, b, c):
    if a >= b:
        assert a + c >= b + c


@given(lexvecs(3), st.fractions(min_value=Fraction(1, 6), max_value=5, max_denominator=6))
def test_positive_scaling_preserves_sign(a, q):
    if a >= LexVec.zero(3):
        assert a.scale(q) >= LexVec.zero(3)


def test_monotone_examples():
    assert is_monotone_multiplier(Multiplier([1, 1])) == (True, None)
    ok, wit = is_monotone_multiplier(Multiplier([1, -5]))
    assert not ok and wit == LexVec([0, 1])
    assert apply_multiplier(Multiplier([1, -5]), wit) == LexVec([0, -5])
    assert is_monotone_multiplier(Multiplier([2, 3, 0]))[0]
    ok, wit = is_monotone_multiplier(Multiplier([1, 0, 1]))
    assert not ok and wit == LexVec([0, 1, -1])


def test_monotone_witness_is_a_counterexample():
    rng = random.Random(7)
    for _ in range(300):
        k = rng.randint(1, 4)
        r = Multiplier([Fraction(rng.randint(-2, 2), rng.choice((1, 2))) for _ in range(k)])
        ok, wit = is_monotone_multiplier(r)
        if not ok:
            assert wit >= LexVec.zero(k)
            assert apply_multiplier(r, wit) < LexVec.zero(k)


def test_characterization_matches_sign_pattern_oracle():
    rng = random.Random(11)
    zero3 = LexVec.zero(3)
    for _ in range(200):
        r = Multiplier([Fraction(rng.randint(-2, 2), rng.choice((1, 2))) for _ in range(3)])
        ok, _ = is_monotone_multiplier(r)
        assert ok == monotone_by_oracle(r)[0]
        if ok:
            for _ in range(20):
                s = LexVec([rng.randint(-3, 3) for _ in range(3)])
                if s >= zero3:
                    assert apply_multiplier(r, s) >= zero3


def test_monotone_randomized_nonnegativity():
    # positive-prefix multipliers map 1000 random nonnegative vectors to >= 0
    rng = random.Random(13)
    r = Multiplier([2, Fraction(1, 2), 0])
    zero = LexVec.zero(3)
    count = 0
    while count < 1000:
        s = LexVec([Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3))) for _ in range(3)])
        if s >= zero:
            count += 1
            assert apply_multiplier(r, s) >= zero


def test_monoid_closure():
    rng = random.Random(17)
    for _ in range(200):
        k = rng.randint(1, 4)

        def rand_monotone():
            m = rng.randint(0, k)
            return Multiplier(
                [Fraction(rng.randint(1, 3), rng.choice((1, 2))) for _ in range(m)]
                + [0] * (k - m)
            )

        r, s = rand_monotone(), rand_monotone()
        assert is_monotone_multiplier(r)[0] and is_monotone_multiplier(s)[0]
        assert is_monotone_multiplier(r.compose(s))[0]


def test_apply_multiplier_examples():
    assert apply_multiplier(Multiplier([1, 1]), LexVec([3, -7])) == LexVec([3, -7])
    assert apply_multiplier(Multiplier([1, 0]), LexVec([3, 7])) == LexVec([3, 0])
    assert apply_multiplier(Multiplier([2, 5]), LexVec([1, -1])) == LexVec([2, -5])
    with pytest.raises(DimensionMismatch):
        apply_multiplier(Multiplier([1]), LexVec([1, 2]))


def test_epsilon_examples():
    assert epsilon(TowerProfile.full(2), 1) == Multiplier([1, 0])
    assert epsilon(TowerProfile.full(3), 0) == Multiplier([1, 1, 1])
    assert epsilon(TowerProfile.full(2), 2) == Multiplier([0, 0])
    with pytest.raises(LexfanError):
        epsilon(TowerProfile.full(2), 3)


def test_tower_profile_rejects_partial_towers():
    with pytest.raises(LexfanError):
        TowerProfile(3, n=2)
    with pytest.raises(LexfanError):
        TowerProfile(3, j=[0, 2, 3])
    p = TowerProfile.full(3)
    assert p.n == 3 and p.j == (0, 1, 2, 3)


def test_epsilon_composition_law():
    profile = TowerProfile.full(4)
    for i in range(5):
        for m in range(5):
            lhs = epsilon(profile, i).compose(epsilon(profile, m))
            assert lhs == epsilon(profile, max(i, m))


@given(lexvecs(4), st.integers(min_value=0, max_value=4))
@settings(max_examples=60)
def test_epsilon_depends_on_leading_coordinates(g, i):
    bumped = LexVec(
        [e if c < 4 - i else e + 1 for c, e in enumerate(g.entries)]
    )
    assert truncate(g, i) == truncate(bumped, i)


def test_arch_level_examples():
    assert arch_level(LexVec([5, 0])) == 0
    assert arch_level(LexVec([0, 0, 3, -1])) == 2
    assert arch_level(LexVec([0, 0])) == 2


def test_arch_level_matches_trailing_subgroup_membership():
    rng = random.Random(19)
    for _ in range(200):
        k = rng.randint(1, 4)
        g = LexVec([rng.choice((0, 0, 1, -2)) for _ in range(k)])
        lvl = arch_level(g)
        # g lies in the trailing-coordinate subgroup Q^(k-l) and no smaller one
        assert all(e == 0 for e in g.entries[:lvl])
        if lvl < k:
            assert g.entries[lvl] != 0
        for i in range(k + 1):
            assert (truncate(g, i).is_zero()) == (lvl >= k - i)


def test_commuting_square_shadow():
    # if the truncation of g is positive, g dominates everything of high arch level
    rng = random.Random(23)
    k = 3
    profile = TowerProfile.full(k)
    for _ in range(300):
        g = LexVec([rng.randint(-2, 2) for _ in range(k)])
        for i in range(k + 1):
            if truncate(g, i) > LexVec.zero(k):
                for _ in range(10):
                    tail = [0] * (k - i) + [rng.randint(-3, 3) for _ in range(i)]
                    delta = LexVec(tail)
                    assert arch_level(delta) >= k - i or delta.is_zero()
                    assert g > delta
