"""Parameter reduction, canonical forms, family predictions and analysis.

The degree c of a curve reduces whenever c = lam*a + mu*b with lam, mu > 0
(the reduced curve is the mirror image); iterating this and, for a = 4,
the two canonical moves c -> |c - 2b| and c -> |c - 6b| yields canonical
parameters.  ``analyze`` is the composition root that turns a degree
triple into a full report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .cfrac import (SchubertFraction, SignChangeProfile, evaluate,
                    evaluate_projective, expand_1212, positive_cf,
                    sign_change_profile, two_bridge_equivalent)
from .chebgeom import Crossing, HarmonicTriple, enumerate_crossings
from .diagram import (GaussCode, build_gauss_code, conway_form_h4,
                      read_conway_from_diagram)
from .errors import InternalError
from .invariants import (LaurentPoly, alexander, alexander_of_fraction,
                         determinant, factor_square)
from . import knotnames


class InvalidInputError(ValueError):
    """Degrees fail the parity or coprimality requirements."""


# ---------------------------------------------------------------------------
# Degree reduction


@dataclass(frozen=True)
class ReductionStep:
    """One application of c = lam*a + mu*b -> c' = |lam*a - mu*b|.

    ``mirrored`` is the cumulative mirror parity after this step (every
    step mirrors the knot once).
    """

    from_c: int
    to_c: int
    lam: int
    mu: int
    mirrored: bool


def _smallest_reduction(a: int, b: int, c: int) -> tuple[int, int] | None:
    """(lam, mu) with lam, mu > 0, c = lam*a + mu*b minimizing |lam*a - mu*b|."""
    best = None
    lam = 1
    while lam * a < c:
        rest = c - lam * a
        if rest % b == 0:
            mu = rest // b
            cand = abs(lam * a - mu * b)
            if best is None or cand < best[0]:
                best = (cand, lam, mu)
        lam += 1
    if best is None:
        return None
    return best[1], best[2]


def reduce_c(K: HarmonicTriple) -> list[ReductionStep]:
    """Reduce c while it is a positive combination of a and b.

    Among the available (lam, mu) the one minimizing the new degree is
    taken (any choice preserves the knot class, so the fastest descent is
    free).  The final step's degrees give an irreducible triple.
    """
    steps: list[ReductionStep] = []
    a, b, c = K.a, K.b, K.c
    mirrored = False
    while True:
        rep = _smallest_reduction(a, b, c)
        if rep is None:
            return steps
        lam, mu = rep
        new_c = abs(lam * a - mu * b)
        mirrored = not mirrored
        steps.append(ReductionStep(c, new_c, lam, mu, mirrored))
        c = new_c


def reduced_triple(K: HarmonicTriple) -> tuple[HarmonicTriple, bool]:
    """The irreducible triple and whether it is the mirror of K."""
    steps = reduce_c(K)
    if not steps:
        return K, False
    return HarmonicTriple(K.a, K.b, steps[-1].to_c), steps[-1].mirrored


# ---------------------------------------------------------------------------
# Canonical parameters for the two-bridge family a = 4


@dataclass(frozen=True)
class CanonicalH4:
    """Canonical odd pair b' < c' < 3b', b' != c' (mod 4), with the fraction
    and crossing number of the curve with degrees (4, b', c')."""

    b_prime: int
    c_prime: int
    mirrored: bool
    fraction: SchubertFraction
    crossing_number: int


def canonical_h4(b: int, c: int) -> CanonicalH4:
    """Canonicalize the odd degree pair of a (4, b, c) curve.

    Moves: swap to b < c (a coordinate swap mirrors the curve); while
    c = b (mod 4) replace c by |c - 2b|; while c > 3b (and c != b mod 4)
    replace c by |c - 6b|; each replacement mirrors.  Terminates with
    either the canonical window b < c < 3b, b != c (mod 4), or the
    degenerate pair (1, c) describing an unknotted curve.
    """
    if b % 2 == 0 or c % 2 == 0 or b < 1 or c < 1:
        raise InvalidInputError(f"degrees must be positive odd, got ({b}, {c})")
    if gcd(b, c) != 1:
        raise InvalidInputError(f"{b},{c} not coprime")
    if b == c:
        raise InvalidInputError("degrees must differ")
    mirrored = False
    guard = 0
    while True:
        guard += 1
        if guard > 10_000:
            raise InternalError(f"canonicalization of ({b}, {c}) diverged")
        if c < b:
            b, c = c, b
            mirrored = not mirrored
        if b == 1:
            return CanonicalH4(1, c, mirrored, SchubertFraction(1, 0), 0)
        if (c - b) % 4 == 0:
            c, mirrored = abs(c - 2 * b), not mirrored
        elif c > 3 * b:
            c, mirrored = abs(c - 6 * b), not mirrored
        else:
            break
    fraction = evaluate(conway_form_h4(b, c))
    return CanonicalH4(b, c, mirrored, fraction, (3 * b + c - 2) // 4)


# ---------------------------------------------------------------------------
# Families with predicted two-bridge forms


@dataclass(frozen=True)
class ExpectedIdentity:
    """A two-bridge form that a family identity predicts for this curve.

    The prediction is a claim to verify (the analysis checks Alexander
    polynomial and determinant), never a substitute for computing them.
    """

    kind: str
    n: int
    h4_pair: tuple[int, int] | None = None
    conway: tuple[int, ...] | None = None

    def describe(self) -> str:
        if self.h4_pair:
            return f"two-bridge curve with degrees (4, {self.h4_pair[0]}, {self.h4_pair[1]})"
        return f"two-bridge form C{tuple(self.conway)}"


def predict_family(K: HarmonicTriple) -> ExpectedIdentity | None:
    a, b, c = K.a, K.b, K.c
    if b == a + 1 and c == a + 2 and a % 2 == 1 and a >= 3:
        n = (a + 1) // 2
        pair = (2 * n - 1, 2 * n + 1) if n % 2 else (2 * n + 1, 2 * n - 1)
        return ExpectedIdentity("consecutive", n, h4_pair=pair)
    if a == 5 and c == b + 1:
        if b % 5 == 1:
            n = b // 5
            return ExpectedIdentity("fifth-plus-one", n,
                                    conway=(2 * n + 1, 2 * n))
        if b % 5 == 3:
            n = (b - 3) // 5
            return ExpectedIdentity("fifth-plus-three", n,
                                    conway=(2 * n + 1, 2 * n + 2))
    return None


# ---------------------------------------------------------------------------
# Exclusion reports


@dataclass(frozen=True)
class FractionCandidate:
    beta: int
    beta_sq_mod: int
    passes_beta_sq: bool
    expansion: tuple[int, ...] | None
    profile: SignChangeProfile | None
    obstructed: bool


@dataclass(frozen=True)
class TwistKnotReport:
    """Eligibility of the twist knot C(n, 2) for the a = 4 harmonic family."""

    n: int
    alpha: int
    candidates: tuple[FractionCandidate, ...]
    harmonic_h4_eligible: bool


def _candidate_report(alpha: int, beta: int) -> FractionCandidate:
    sq = (beta * beta) % alpha
    passes = sq in (2 % alpha, (-2) % alpha)
    expansion = profile = None
    obstructed = False
    if passes:
        # The expansion of the mirror has the same change positions, so
        # the obstruction may be read off alpha/|beta|.
        expansion = tuple(expand_1212(SchubertFraction(alpha, abs(beta) % alpha)))
        profile = sign_change_profile(expansion)
        obstructed = profile.max_run >= 2
    return FractionCandidate(beta, sq, passes, expansion, profile, obstructed)


def twist_knot_check(n: int) -> TwistKnotReport:
    """Test whether C(n, 2) (fraction (2n+1)/2) can have a = 4 degrees.

    The even-denominator fractions of the knot are (2n+1)/2 and
    (2n+1)/(n+1) for odd n or (2n+1)/(-n) for even n; eligibility needs
    one of them to satisfy beta^2 = +-2 (mod alpha) with an expansion free
    of two consecutive sign changes.  Only n in {1, 3} survive.
    """
    if n < 1:
        raise InvalidInputError("twist knots need n >= 1")
    alpha = 2 * n + 1
    betas = [2, (n + 1) if n % 2 else -n]
    seen = set()
    candidates = []
    for beta in betas:
        key = beta % alpha
        if key in seen:
            continue
        seen.add(key)
        candidates.append(_candidate_report(alpha, beta))
    eligible = any(c.passes_beta_sq and not c.obstructed for c in candidates)
    return TwistKnotReport(n, alpha, tuple(candidates), eligible)


@dataclass(frozen=True)
class DenominatorFamilyReport:
    """The fraction (2n^2+1)/(2n): beta^2 = -2 always, yet obstructed for
    n > 1 by two consecutive sign changes."""

    n: int
    fraction: SchubertFraction
    beta_sq_is_minus_two: bool
    construction: tuple[int, ...]
    construction_matches: bool
    expansion: tuple[int, ...]
    obstructed: bool


def non_harmonic_family_check(n: int) -> DenominatorFamilyReport:
    """Verify the (2n^2+1)/(2n) family and its sign-change obstruction.

    The expansion is produced structurally by composing the blocks
    C = [1,2,-1,2] (adds 2), D = [1,-2,1,2] (x -> x/(4x+1)) and
    F = [1,2] ((3x+1)/(2x+1)): n = 2k gives C^k D^k, n = 2k+1 gives
    C^k F D^k; the composition is cross-checked by exact evaluation.
    """
    if n < 1:
        raise InvalidInputError("family is indexed by n >= 1")
    fraction = SchubertFraction(2 * n * n + 1, 2 * n)
    k = n // 2
    blocks = [1, 2, -1, 2] * k
    if n % 2:
        blocks = blocks + [1, 2]
    construction = tuple(blocks + [1, -2, 1, 2] * k)
    matches = evaluate(construction) == fraction
    expansion = tuple(expand_1212(fraction))
    profile = sign_change_profile(expansion)
    return DenominatorFamilyReport(
        n=n,
        fraction=fraction,
        beta_sq_is_minus_two=(4 * n * n) % fraction.alpha
        == (fraction.alpha - 2) % fraction.alpha,
        construction=construction,
        construction_matches=matches and construction == expansion,
        expansion=expansion,
        obstructed=profile.max_run >= 2,
    )


# ---------------------------------------------------------------------------
# Full analysis


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the toolkit can say about one degree triple.

    Diagram-derived fields describe the reduced (irreducible) triple; the
    reductions list records how it was reached, with mirror parity.
    """

    triple: tuple[int, int, int]
    reduced: tuple[int, int, int]
    reductions: tuple[ReductionStep, ...]
    mirrored: bool
    crossings: tuple[Crossing, ...]
    gauss_code: GaussCode
    conway: tuple[int, ...] | None
    fraction: SchubertFraction | None
    fraction_source: str | None
    crossing_number: int | None
    crossing_bound: int
    alexander: LaurentPoly
    determinant: int
    name: str | None
    starred: bool
    composite_square_root: LaurentPoly | None
    notes: tuple[str, ...] = field(default=())


def _verify_expectation(expect: ExpectedIdentity, delta: LaurentPoly,
                        det: int) -> tuple[str, ...]:
    if expect.h4_pair:
        b, c = expect.h4_pair
        other = canonical_h4(b, c)
        ref_delta = alexander_of_fraction(
            conway_form_h4(other.b_prime, other.c_prime))
        ref_det = other.fraction.alpha
    else:
        ref_delta = alexander_of_fraction(list(expect.conway))
        ref_det = abs(evaluate_projective(list(expect.conway)).alpha)
    status = "verified" if (ref_delta == delta and ref_det == det) \
        else "FAILED"
    return (f"family prediction: isotopic to {expect.describe()}"
            f" ({status}: matching Alexander polynomial and determinant)",)


def analyze(K: HarmonicTriple) -> AnalysisReport:
    """Reduce, classify and compute all invariants of one curve."""
    steps = reduce_c(K)
    reduced, mirrored = reduced_triple(K)
    crossings = tuple(enumerate_crossings(reduced))
    gc = build_gauss_code(reduced)
    delta = alexander(gc)
    det = determinant(gc)
    notes: list[str] = []

    conway = fraction = crossing_number = None
    fraction_source = None
    record = None
    if reduced.a in (3, 4) and reduced.b > 1:
        conway = tuple(read_conway_from_diagram(reduced))
        fraction = evaluate_projective(conway)
        fraction_source = "computed"
        if fraction.alpha != det:
            raise InternalError(
                f"fraction {fraction.alpha} vs determinant {det} mismatch")
        if reduced.a == 4:
            canon = canonical_h4(reduced.b, reduced.c)
            crossing_number = canon.crossing_number
            if not two_bridge_equivalent(fraction, canon.fraction,
                                         up_to_mirror=True):
                raise InternalError("diagram and closed-form fractions differ")
        elif fraction.alpha > 1:
            crossing_number = sum(positive_cf(
                SchubertFraction(fraction.alpha,
                                 min(fraction.equivalence_class()))))
            if (reduced.b + reduced.c) % 3 == 0 and \
                    crossing_number != (reduced.b + reduced.c) // 3:
                raise InternalError("crossing number routes disagree")
        record = knotnames.name_by_fraction(fraction) \
            if fraction.alpha > 1 else None
        if fraction.alpha == 1:
            notes.append("unknotted curve")
    else:
        source = f"H({reduced.a},{reduced.b},{reduced.c})"
        record = next((r for r in knotnames.records() if r.source == source),
                      None)
        if record is not None and (record.alexander != delta
                                   or record.determinant != det):
            raise InternalError(f"table row {source} disagrees with pipeline")
        if record is None:
            record = knotnames.name_by_invariants(delta, det, len(crossings))
        if record is not None and record.fraction is not None:
            fraction = record.fraction
            fraction_source = "table"

    composite = factor_square(delta)
    if composite is not None and len(delta.coeffs) > 1:
        notes.append("Alexander polynomial is a perfect square "
                     f"(({composite})^2): candidate connected sum")
    expect = predict_family(K)
    if expect is not None:
        notes.extend(_verify_expectation(expect, delta, det))

    return AnalysisReport(
        triple=(K.a, K.b, K.c),
        reduced=(reduced.a, reduced.b, reduced.c),
        reductions=tuple(steps),
        mirrored=mirrored,
        crossings=crossings,
        gauss_code=gc,
        conway=conway,
        fraction=fraction,
        fraction_source=fraction_source,
        crossing_number=crossing_number,
        crossing_bound=len(crossings),
        alexander=delta,
        determinant=det,
        name=record.name if record else None,
        starred=record.starred if record else False,
        composite_square_root=composite,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# The reference selection of small curves


def enumerate_table_triples(max_ab: int = 30) -> list[tuple[int, int, int]]:
    """All (a, b, c) with 3 <= a < b, (a-1)(b-1) <= max_ab, b < c < ab,
    gcd(c, ab) = 1 and c not a positive combination of a and b.

    These are exactly the irreducible small curves; every larger c with
    gcd(c, ab) = 1 reduces to one of them.
    """
    triples = []
    a = 3
    while (a - 1) * a <= max_ab:  # need some b > a
        for b in range(a + 1, max_ab // (a - 1) + 2):
            if (a - 1) * (b - 1) > max_ab or gcd(a, b) != 1:
                continue
            for c in range(b + 1, a * b):
                if gcd(c, a * b) != 1:
                    continue
                if _smallest_reduction(a, b, c) is not None:
                    continue
                triples.append((a, b, c))
        a += 1
    return sorted(triples)
