"""SVG drawings: the xy plane diagram and the billiard representation.

The billiard picture applies F(x) = (2/pi)*arccos(x) - 1, the affine map
in arccos taking [-1, 1] onto [-1, 1]; under (x, y) -> (b F(x), a F(y))
the curve becomes a billiard trajectory in the rectangle
(-b, b) x (-a, a) whose segments all have slope exactly +1 or -1, with
vertices on the integer lattice.  Vertices and crossing positions are
computed in exact rational arithmetic and only converted to floats when
written out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, pi

import numpy as np

from .chebgeom import HarmonicTriple, enumerate_crossings
from .exact import RationalAngle


@dataclass(frozen=True)
class RenderOptions:
    width: int = 520
    stroke: float = 2.2
    gap: float = 1.0          # under-strand gap, relative to default size
    annotate_signs: bool = False
    samples: int = 2400
    margin: float = 0.10


def _fmt(x: float) -> str:
    return f"{x:.4f}".rstrip("0").rstrip(".")


def _svg_document(width: int, height: int, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _polyline(points: list[tuple[float, float]], stroke: float,
              color: str = "#1a1a1a") -> str:
    text = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    return (f'<polyline fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(stroke)}" stroke-linecap="round" '
            f'points="{text}"/>')


# ---------------------------------------------------------------------------
# The xy diagram


def render_xy(K: HarmonicTriple, options: RenderOptions | None = None) -> str:
    """Plane diagram with the under-strand broken at every crossing.

    The curve is sampled as (cos(a u), cos(b u)) for u in [0, pi]; each
    under-passage removes a parameter window around its crossing, so the
    drawing consists of crossing_count + 1 polyline pieces.
    """
    opt = options or RenderOptions()
    crossings = enumerate_crossings(K)
    unders = sorted(
        (c.s_angle if c.over_at_t else c.t_angle).folded()
        for c in crossings)
    # Window half-width: stay clear of neighbouring passages.
    angles = sorted({c.t_angle.folded() for c in crossings}
                    | {c.s_angle.folded() for c in crossings})
    min_sep = min((float(b - a) for a, b in zip(angles, angles[1:])),
                  default=1.0)
    half = min(0.012, 0.35 * min_sep) * opt.gap

    n = max(opt.samples, 400)
    u = np.linspace(0.0, 1.0, n)
    keep = np.ones(n, dtype=bool)
    for v in unders:
        keep &= np.abs(u - float(v)) > half
    xs = np.cos(K.a * u * pi)
    ys = np.cos(K.b * u * pi)

    scale = opt.width / (2 + 2 * opt.margin)
    off = (1 + opt.margin) * scale

    def to_px(x: float, y: float) -> tuple[float, float]:
        return off + scale * x, off - scale * y

    pieces: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    for i in range(n):
        if keep[i]:
            current.append(to_px(xs[i], ys[i]))
        elif current:
            pieces.append(current)
            current = []
    if current:
        pieces.append(current)

    body = [_polyline(p, opt.stroke) for p in pieces if len(p) > 1]
    if opt.annotate_signs:
        for c in crossings:
            x = cos(pi * float(RationalAngle(
                c.t_angle.p * K.a, c.t_angle.q).folded()))
            y = cos(pi * float(RationalAngle(
                c.t_angle.p * K.b, c.t_angle.q).folded()))
            px, py = to_px(x, y)
            body.append(
                f'<text x="{_fmt(px + 5)}" y="{_fmt(py - 5)}" '
                f'font-size="{_fmt(scale * 0.05)}">'
                f'{"+" if c.sign > 0 else chr(0x2212)}</text>')
    return _svg_document(opt.width, opt.width, body)


# ---------------------------------------------------------------------------
# The billiard representation


def _fold01(x: Fraction) -> Fraction:
    r = x % 2
    return 2 - r if r > 1 else r


def billiard_point(K: HarmonicTriple, v: Fraction) -> tuple[Fraction, Fraction]:
    """Image of the curve point of parameter t = cos(v pi) in billiard
    coordinates; exact."""
    return (K.b * (2 * _fold01(Fraction(K.a) * v) - 1),
            K.a * (2 * _fold01(Fraction(K.b) * v) - 1))


def billiard_polyline(K: HarmonicTriple) -> list[tuple[int, int]]:
    """Trajectory vertices (reflection points and endpoints), in order.

    Vertices sit where the parameter v passes a multiple of 1/a or 1/b;
    all coordinates are integers and consecutive differences have
    |dx| = |dy|, i.e. slope exactly +-1.
    """
    ab = K.a * K.b
    breaks = sorted({0, ab} | {m for m in range(1, ab)
                               if m % K.a == 0 or m % K.b == 0})
    points = []
    for m in breaks:
        x, y = billiard_point(K, Fraction(m, ab))
        points.append((int(x), int(y)))
    return points


def render_billiard(K: HarmonicTriple,
                    options: RenderOptions | None = None) -> str:
    """Billiard trajectory in the (-b, b) x (-a, a) rectangle.

    The under-strand is broken by removing half a lattice step of the
    trajectory on each side of every under-passage; crossings are marked
    with dots (and signs, if requested).
    """
    opt = options or RenderOptions()
    a, b = K.a, K.b
    ab = a * b
    crossings = enumerate_crossings(K)
    under_ms = []
    marks = []
    for c in crossings:
        under = c.s_angle if c.over_at_t else c.t_angle
        under_ms.append(int(under.folded() * ab))
        marks.append((billiard_point(K, c.t_angle.folded()), c.sign))

    delta = min(Fraction(opt.gap).limit_denominator(64) / 2, Fraction(9, 10))
    cut = {m: delta for m in under_ms}
    grid = [(Fraction(m), billiard_point(K, Fraction(m, ab)))
            for m in range(ab + 1)]

    pieces: list[list[tuple[Fraction, Fraction]]] = [[]]
    for i, (m, pt) in enumerate(grid):
        delta = cut.get(int(m))
        if delta is None:
            pieces[-1].append(pt)
            continue
        # Interpolate the window edges inside the two adjacent segments.
        before = billiard_point(K, Fraction(int(m) - 1, ab))
        after = billiard_point(K, Fraction(int(m) + 1, ab))
        left = (pt[0] + (before[0] - pt[0]) * delta,
                pt[1] + (before[1] - pt[1]) * delta)
        right = (pt[0] + (after[0] - pt[0]) * delta,
                 pt[1] + (after[1] - pt[1]) * delta)
        pieces[-1].append(left)
        pieces.append([right])

    pad = 1 + 2 * opt.margin
    scale = opt.width / (2 * b * pad)
    height = int(round(2 * a * pad * scale))
    offx = opt.width / 2
    offy = height / 2

    def to_px(p: tuple[Fraction, Fraction]) -> tuple[float, float]:
        return offx + scale * float(p[0]), offy - scale * float(p[1])

    body = [
        f'<rect x="{_fmt(offx - scale * b)}" y="{_fmt(offy - scale * a)}" '
        f'width="{_fmt(2 * scale * b)}" height="{_fmt(2 * scale * a)}" '
        f'fill="none" stroke="#999" stroke-width="1"/>'
    ]
    body += [_polyline([to_px(p) for p in piece], opt.stroke)
             for piece in pieces if len(piece) > 1]
    for (pt, sign) in marks:
        px, py = to_px(pt)
        body.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" '
                    f'r="{_fmt(opt.stroke)}" fill="#c22"/>')
        if opt.annotate_signs:
            body.append(
                f'<text x="{_fmt(px + 4)}" y="{_fmt(py - 4)}" '
                f'font-size="{_fmt(scale * 0.6)}">'
                f'{"+" if sign > 0 else chr(0x2212)}</text>')
    return _svg_document(opt.width, height, body)
