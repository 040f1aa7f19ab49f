"""Exact geometry of the plane Chebyshev curve x = T_a(t), y = T_b(t).

The (a-1)(b-1)/2 double points are parametrized by integer pairs (h, k)
with k/a + h/b < 1, at parameters t = cos((k/a + h/b)pi) and
s = cos((k/a - h/b)pi).  The z-coordinate T_c(t) decides over/under and
crossing signs, all computed exactly through sine signs of rational angles.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exact import RationalAngle, _sign_sin_frac


class InvalidTripleError(ValueError):
    """The degrees are not pairwise coprime (or not normally ordered)."""


class DegenerateSignError(ValueError):
    """A sine factor vanished; only possible for non-coprime degrees."""


@dataclass(frozen=True)
class HarmonicTriple:
    """Pairwise coprime degrees (a, b, c) of the space curve
    (T_a(t), T_b(t), T_c(t)), with a < b.  c is unconstrained."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise InvalidTripleError("degrees must be positive integers")
        if self.a >= self.b:
            raise InvalidTripleError(
                f"expected a < b, got a={self.a}, b={self.b}")
        for x, y in ((self.a, self.b), (self.a, self.c), (self.b, self.c)):
            if gcd(x, y) != 1:
                raise InvalidTripleError(f"{x},{y} not coprime")

    @property
    def crossing_count(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2


@dataclass(frozen=True)
class Crossing:
    """One double point of the plane projection.

    ``sign`` is the twist sign (+1 for a right twist, i.e. D > 0 for
    D = (z(t)-z(s)) x'(t) y'(t)); ``oriented_sign`` is the crossing sign of
    the oriented diagram, which the Alexander machinery needs.  ``x_order``
    ranks the crossing by decreasing x (symmetric partners share a rank),
    and ``y_level`` is the index j of the horizontal line y = cos(j pi / a)
    carrying the point.
    """

    h: int
    k: int
    t_angle: RationalAngle
    s_angle: RationalAngle
    sign: int
    oriented_sign: int
    over_at_t: bool
    x_order: int
    y_level: int


def _sine_signs(K: HarmonicTriple, h: int, k: int) -> tuple[int, int, int, int]:
    """Signs of sin(ch/b pi), sin(ck/a pi), sin(ah/b pi), sin(bk/a pi)."""
    a, b, c = K.a, K.b, K.c
    signs = (
        _sign_sin_frac(c * h, b),
        _sign_sin_frac(c * k, a),
        _sign_sin_frac(a * h, b),
        _sign_sin_frac(b * k, a),
    )
    if 0 in signs:
        raise DegenerateSignError(
            f"zero sine at crossing (h={h}, k={k}) of H{(a, b, c)}")
    return signs


def _zdiff_sign(K: HarmonicTriple, h: int, k: int) -> int:
    """Sign of z(t) - z(s) = -sin(ch/b pi) sin(ck/a pi) up to positives."""
    s_chb, s_cka, _, _ = _sine_signs(K, h, k)
    return -s_chb * s_cka


def crossing_sign(K: HarmonicTriple, h: int, k: int) -> int:
    """Twist sign: +1 iff D = (z(t)-z(s)) x'(t) y'(t) > 0.

    x'(t) y'(t) carries the sign (-1)^(h+k) sin(ah/b pi) sin(bk/a pi).
    """
    s_chb, s_cka, s_ahb, s_bka = _sine_signs(K, h, k)
    parity = -1 if (h + k) % 2 else 1
    return (-s_chb * s_cka) * parity * s_ahb * s_bka


def oriented_sign(K: HarmonicTriple, h: int, k: int) -> int:
    """Crossing sign of the oriented diagram (writhe contribution).

    Equals the twist sign times the sign of sin((k/a - h/b)pi), which is
    the sign of kb - ha; the extra factor converts the same-parameter
    derivative product in D into the cross product of the two tangents.
    """
    return crossing_sign(K, h, k) * (1 if k * K.b > h * K.a else -1)


def over_strand(K: HarmonicTriple, h: int, k: int) -> bool:
    """True iff the strand at parameter t passes over (z(t) > z(s))."""
    return _zdiff_sign(K, h, k) > 0


def crossing_parameters(K: HarmonicTriple) -> list[tuple[int, int]]:
    """All (h, k) with h, k >= 1 and k/a + h/b < 1, i.e. kb + ha < ab."""
    a, b = K.a, K.b
    return [(h, k) for h in range(1, b) for k in range(1, a)
            if k * b + h * a < a * b]


def enumerate_crossings(K: HarmonicTriple) -> list[Crossing]:
    """All crossings, sorted by decreasing x-coordinate.

    Ties in x (symmetric partners, only for even a) are broken by the
    folded y angle, so the output order is deterministic.
    """
    a, b = K.a, K.b
    ab = a * b
    records = []
    for h, k in crossing_parameters(K):
        t_angle = RationalAngle(k * b + h * a, ab)
        s_angle = RationalAngle(k * b - h * a, ab)
        # x = cos(((kb+ha)/b) pi), y = cos(((kb+ha)/a) pi)
        x_fold = RationalAngle(k * b + h * a, b).folded()
        y_fold = RationalAngle(k * b + h * a, a).folded()
        y_level = int(y_fold * a)
        records.append((x_fold, y_fold, h, k, t_angle, s_angle, y_level))
    records.sort(key=lambda r: (r[0], r[1]))
    crossings = []
    rank = -1
    last_fold = None
    for x_fold, _, h, k, t_angle, s_angle, y_level in records:
        if x_fold != last_fold:
            rank += 1
            last_fold = x_fold
        crossings.append(Crossing(
            h=h, k=k, t_angle=t_angle, s_angle=s_angle,
            sign=crossing_sign(K, h, k),
            oriented_sign=oriented_sign(K, h, k),
            over_at_t=over_strand(K, h, k),
            x_order=rank, y_level=y_level))
    expected = K.crossing_count
    if len(crossings) != expected:
        raise DegenerateSignError(
            f"found {len(crossings)} crossings, expected {expected}")
    return crossings
