import random

import pytest

from harmonicknots.chebgeom import HarmonicTriple
from harmonicknots.diagram import GaussCode, GaussEntry, build_gauss_code
from harmonicknots.invariants import (
    LaurentPoly, MalformedCodeError, _det_bareiss_poly, _det_by_interpolation,
    _alexander_minor, alexander, alexander_of_fraction, determinant,
    factor_square, wirtinger)


def poly(*coeffs):
    return LaurentPoly.from_coeffs(coeffs)


class TestLaurentPoly:
    def test_arithmetic(self):
        p = poly(1, -1, 1)
        q = poly(0, 1)
        assert p * q == LaurentPoly.from_coeffs([0, 1, -1, 1])
        assert (p + (-p)).is_zero
        assert p - q == poly(1, -2, 1)
        assert p(2) == 3
        assert poly(1, -3, 1)(-1) == 5

    def test_shifted_and_normalized(self):
        p = LaurentPoly.from_coeffs([1, -1, 1], offset=-3)
        assert p.min_exp == -3
        n = p.normalized()
        assert n.min_exp == 0 and n.coefficient_list() == [1, -1, 1]
        assert LaurentPoly.from_coeffs([-1, 3, -1]).normalized() \
            .coefficient_list() == [1, -3, 1]

    def test_coefficient_map(self):
        p = LaurentPoly.from_coeffs([2, 0, -1], offset=1)
        assert p.coefficient_map() == {1: 2, 3: -1}

    def test_str(self):
        assert str(poly(1, -3, 1)) == "1 - 3t + t^2"
        assert str(poly(2, -3, 2)) == "2 - 3t + 2t^2"
        assert str(LaurentPoly.from_coeffs([])) == "0"


def kink_code(sign=1):
    return GaussCode((GaussEntry(1, "O", sign), GaussEntry(1, "U", sign)),
                     closure="plat")


class TestWirtinger:
    def test_trefoil_structure(self):
        wp = wirtinger(build_gauss_code(HarmonicTriple(3, 4, 5)))
        assert wp.arc_count == 3 and len(wp.relations) == 3

    def test_figure_eight_structure(self):
        wp = wirtinger(build_gauss_code(HarmonicTriple(3, 5, 7)))
        assert wp.arc_count == 4 and len(wp.relations) == 4

    def test_kink_gives_trivial_polynomial(self):
        for sign in (1, -1):
            assert alexander(kink_code(sign)) == poly(1)

    def test_malformed_code(self):
        with pytest.raises(MalformedCodeError):
            wirtinger(GaussCode((GaussEntry(1, "O", 1), GaussEntry(1, "O", 1))))


class TestAlexander:
    def test_curve_fixtures(self):
        assert alexander(build_gauss_code(HarmonicTriple(3, 4, 5))) == \
            poly(1, -1, 1)
        assert alexander(build_gauss_code(HarmonicTriple(3, 5, 7))) == \
            poly(1, -3, 1)
        assert alexander(build_gauss_code(HarmonicTriple(5, 7, 11))) == \
            poly(1, -3, 1) * poly(1, -3, 1)

    def test_fraction_oracle_fixtures(self):
        assert alexander_of_fraction([3]) == poly(1, -1, 1)
        assert alexander_of_fraction([2, 2]) == poly(1, -3, 1)
        assert alexander_of_fraction([3, 2]) == poly(2, -3, 2)
        assert alexander_of_fraction([3, 2])(-1) == 7

    def test_normalization_and_symmetry(self):
        for t in [(3, 4, 5), (3, 7, 8), (4, 5, 7), (4, 7, 9), (5, 6, 7),
                  (5, 7, 11), (6, 7, 11)]:
            d = alexander(build_gauss_code(HarmonicTriple(*t)))
            assert d.min_exp == 0
            coeffs = d.coefficient_list()
            assert coeffs[-1] > 0
            assert abs(sum(coeffs)) == 1
            assert coeffs == coeffs[::-1], t

    def test_invariance_under_reversal_and_mirror(self):
        for t in [(3, 5, 7), (4, 5, 7), (5, 6, 7)]:
            gc = build_gauss_code(HarmonicTriple(*t))
            d = alexander(gc)
            assert alexander(gc.reversed()) == d
            assert alexander(gc.mirrored()) == d

    def test_determinant_is_alexander_at_minus_one(self):
        for t in [(3, 4, 5), (3, 5, 7), (4, 7, 9), (5, 6, 7), (5, 7, 9),
                  (6, 7, 11)]:
            gc = build_gauss_code(HarmonicTriple(*t))
            assert determinant(gc) == abs(alexander(gc)(-1)), t

    def test_elimination_and_interpolation_agree(self):
        for t in [(3, 5, 7), (4, 7, 9), (5, 6, 7), (4, 9, 11)]:
            minor = _alexander_minor(build_gauss_code(HarmonicTriple(*t)))
            assert _det_bareiss_poly(minor) == _det_by_interpolation(minor), t


class TestFactorSquare:
    def test_constructed_squares(self):
        sq = poly(1, -3, 1) * poly(1, -3, 1)
        assert factor_square(sq) == poly(1, -3, 1)
        sq = poly(1, -1, 1) * poly(1, -1, 1)
        assert factor_square(sq) == poly(1, -1, 1)

    def test_non_squares(self):
        assert factor_square(poly(1, -1, 1)) is None
        assert factor_square(poly(1, -3, 1)) is None
        assert factor_square(poly(1, -1, 1) * poly(1, -3, 1)) is None

    def test_random_squares_roundtrip(self):
        rng = random.Random(67)
        for _ in range(50):
            coeffs = [rng.randint(-4, 4) for _ in range(rng.randint(1, 5))]
            coeffs.append(1)
            q = LaurentPoly.from_coeffs(coeffs)
            if abs(sum(q.coeffs)) != 1:
                continue
            got = factor_square(q * q)
            assert got is not None and got * got == (q * q).normalized()
