import math
import random
from fractions import Fraction

import pytest

from harmonicknots.exact import RationalAngle, compare_cos, sign_cos, sign_sin


def test_sign_sin_examples():
    assert sign_sin(RationalAngle(3, 10)) == 1
    assert sign_sin(RationalAngle(-4, 5)) == -1
    assert sign_sin(RationalAngle(2, 1)) == 0


def test_sign_cos_examples():
    assert sign_cos(RationalAngle(1, 2)) == 0
    assert sign_cos(RationalAngle(1, 3)) == 1
    assert sign_cos(RationalAngle(4, 5)) == -1


def test_compare_cos_examples():
    assert compare_cos(RationalAngle(1, 4), RationalAngle(1, 3)) == 1
    assert compare_cos(RationalAngle(1, 5), RationalAngle(9, 5)) == 0
    assert compare_cos(RationalAngle(2, 3), RationalAngle(1, 2)) == -1


def test_angles_stay_unreduced():
    x = RationalAngle(2, 4)
    assert (x.p, x.q) == (2, 4)
    assert x.fraction() == Fraction(1, 2)


def test_invalid_denominator():
    with pytest.raises(ValueError):
        RationalAngle(1, 0)


def test_of_coercions():
    assert RationalAngle.of(Fraction(3, 7)) == RationalAngle(3, 7)
    assert RationalAngle.of(2) == RationalAngle(2, 1)
    assert RationalAngle.of((5, 9)) == RationalAngle(5, 9)


def test_sign_sin_symmetry_and_period():
    rng = random.Random(101)
    for _ in range(500):
        q = rng.randint(1, 400)
        p = rng.randint(-400, 400)
        if p % q == 0:
            continue
        a = RationalAngle(p, q)
        assert sign_sin(a) == -sign_sin(RationalAngle(-p, q))
        assert sign_sin(a) == sign_sin(RationalAngle(p + 2 * q, q))


def test_sign_sin_matches_float():
    rng = random.Random(7)
    for _ in range(2000):
        q = rng.randint(1, 1000)
        p = rng.randint(-3000, 3000)
        value = math.sin(math.pi * p / q)
        if abs(value) < 1e-9:
            continue
        assert sign_sin(RationalAngle(p, q)) == (1 if value > 0 else -1)


def test_folded_range_and_cos_value():
    rng = random.Random(13)
    for _ in range(1000):
        q = rng.randint(1, 500)
        p = rng.randint(-2000, 2000)
        f = RationalAngle(p, q).folded()
        assert 0 <= f <= 1
        assert math.cos(math.pi * float(f)) == pytest.approx(
            math.cos(math.pi * p / q), abs=1e-9)


def test_compare_cos_against_double_precision():
    rng = random.Random(42)
    checked = 0
    for _ in range(10_000):
        q1, q2 = rng.randint(1, 10**6), rng.randint(1, 10**6)
        p1, p2 = rng.randint(-3 * 10**6, 3 * 10**6), rng.randint(-3 * 10**6, 3 * 10**6)
        a, b = RationalAngle(p1, q1), RationalAngle(p2, q2)
        ca, cb = math.cos(math.pi * p1 / q1), math.cos(math.pi * p2 / q2)
        if abs(ca - cb) <= 1e-9:
            continue
        checked += 1
        assert compare_cos(a, b) == (1 if ca > cb else -1)
    assert checked > 9000


def test_compare_cos_total_order():
    rng = random.Random(3)
    angles = [RationalAngle(rng.randint(-50, 50), rng.randint(1, 30))
              for _ in range(60)]
    for a in angles:
        assert compare_cos(a, a) == 0
        for b in angles:
            assert compare_cos(a, b) == -compare_cos(b, a)
            for c in angles:
                if compare_cos(a, b) >= 0 and compare_cos(b, c) >= 0:
                    assert compare_cos(a, c) >= 0
