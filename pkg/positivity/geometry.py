"""
Point-line arrangements and the construction of TP matrices whose entries
equal to 1 sit exactly at the point-line incidences.

Lines are non-vertical, stored in slope-intercept form y = m x + b. The
vertical distance a_ij = m_j x_i + b_j - y_i is positive when point i lies
below line j and zero exactly at an incidence.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator, Optional, Sequence, Tuple

from django.conf import settings

from .configurations import BinaryConfiguration
from .exact import ExactMatrix, TpConstruction, parse_rational, second_differences, tp_from_exponents
from .exceptions import BudgetExhausted, InputError, PreconditionError

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]
Line = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Arrangement:
    points: Tuple[Point, ...]
    lines: Tuple[Line, ...]

    def __post_init__(self):
        points = tuple((parse_rational(x), parse_rational(y)) for x, y in self.points)
        lines = tuple((parse_rational(m), parse_rational(b)) for m, b in self.lines)
        if not points or not lines:
            raise InputError("An arrangement needs at least one point and one line")
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'lines', lines)


@dataclass(frozen=True)
class GeneralPositionReport:
    distinct_x: bool
    distinct_slopes: bool
    no_vertical: bool = True

    @property
    def ok(self) -> bool:
        return self.distinct_x and self.distinct_slopes and self.no_vertical


def general_position_report(arrangement: Arrangement) -> GeneralPositionReport:
    xs = [x for x, _ in arrangement.points]
    slopes = [m for m, _ in arrangement.lines]
    return GeneralPositionReport(len(set(xs)) == len(xs), len(set(slopes)) == len(slopes))


def incidence_matrix(arrangement: Arrangement) -> BinaryConfiguration:
    """Rows are points, columns are lines, both in input order."""
    return BinaryConfiguration.from_rows([
        [y == m * x + b for m, b in arrangement.lines] for x, y in arrangement.points
    ])


def incidence_count(arrangement: Arrangement) -> int:
    return incidence_matrix(arrangement).weight


def grid_arrangement(k: int) -> Arrangement:
    """
    Points {(a, b): a in [k], b in [2k^2]} and lines {y = m x + c: m in [k],
    c in [k^2]}; every line passes through exactly k points, k^4 incidences.
    """
    if k < 1:
        raise InputError(f"Grid parameter must be positive, got {k}")
    points = tuple((a, b) for a in range(1, k + 1) for b in range(1, 2 * k * k + 1))
    lines = tuple((m, c) for m in range(1, k + 1) for c in range(1, k * k + 1))
    return Arrangement(points, lines)


# ==================== NORMALIZATION ====================

def _projective_image(arrangement: Arrangement, shear: Fraction, tilt: Fraction) -> Optional[Arrangement]:
    """
    Apply H = [[1, s, 0], [0, 1, 0], [u, u*s, 1]] to points and H^-1 to lines.

    With the bottom row tied to the shear, a point maps to
    (z / w, y / w) with z = x + s y and w = 1 + u z, and a line y = m x + b
    maps to slope (m - u b) / (1 + m s) and intercept b / (1 + m s).
    Returns None when a point goes to infinity or a line turns vertical.
    """
    points = []
    for x, y in arrangement.points:
        z = x + shear * y
        w = 1 + tilt * z
        if w == 0:
            return None
        points.append((z / w, y / w))
    lines = []
    for m, b in arrangement.lines:
        denominator = 1 + m * shear
        if denominator == 0:
            return None
        lines.append(((m - tilt * b) / denominator, b / denominator))
    return Arrangement(tuple(points), tuple(lines))


def _tightest_denominators(arrangement: Arrangement) -> Tuple[int, int]:
    """
    Smallest a with 1/a * |dy| < |dx| for every pair of points with distinct
    x, and smallest b with 1/b * |db| < |dm| for every pair of lines with
    distinct slopes. A shear of 1/a then separates points sharing an x
    without reordering the others; a tilt of 1/b does the same for slopes.
    """
    def bound(pairs) -> int:
        ratios = [abs(dv / du) for du, dv in pairs if du != 0]
        return int(max(ratios, default=Fraction(0))) + 1

    points, lines = arrangement.points, arrangement.lines
    a = bound(
        (second[0] - first[0], second[1] - first[1])
        for index, first in enumerate(points) for second in points[index + 1:]
    )
    b = bound(
        (second[0] - first[0], second[1] - first[1])
        for index, first in enumerate(lines) for second in lines[index + 1:]
    )
    return a, b


def _candidate_maps(arrangement: Arrangement, seed: int, retry_budget: int) -> Iterator[Tuple[Fraction, Fraction]]:
    """
    (shear, tilt) pairs: the tightest map and its near neighbours in a
    seeded order, then seeded draws of looser maps with either tilt sign.
    """
    rng = random.Random(seed)
    a, b = _tightest_denominators(arrangement)
    near = [(a + i, b + step - i) for step in range(3) for i in range(step + 1)]
    rng.shuffle(near)
    drawn = 0
    for shear_denominator, tilt_denominator in near:
        if drawn == retry_budget:
            return
        drawn += 1
        yield Fraction(1, shear_denominator), Fraction(1, tilt_denominator)
    while drawn < retry_budget:
        drawn += 1
        sign = rng.choice((1, -1))
        yield Fraction(1, a + rng.randint(0, 4 * a)), Fraction(sign, b + rng.randint(0, 4 * b))


def general_position_candidates(
    arrangement: Arrangement,
    seed: int = 0,
    retry_budget: int = 64,
) -> Iterator[Arrangement]:
    """
    Every general-position image of the arrangement reached within the
    retry budget, in attempt order. An arrangement already in general
    position is its only candidate.
    """
    if general_position_report(arrangement).ok:
        yield arrangement
        return
    before = incidence_count(arrangement)
    for attempt, (shear, tilt) in enumerate(_candidate_maps(arrangement, seed, retry_budget), start=1):
        candidate = _projective_image(arrangement, shear, tilt)
        if candidate is None:
            logger.info(f"Projective map {attempt} sends a point to infinity, retrying")
            continue
        if not general_position_report(candidate).ok:
            logger.info(f"Projective map {attempt} leaves coincident x-values or slopes, retrying")
            continue
        if incidence_count(candidate) != before:
            logger.warning(f"Projective map {attempt} changed the incidence count, retrying")
            continue
        logger.info(f"General position reached on attempt {attempt} (shear {shear}, tilt {tilt})")
        yield candidate


def normalize_general_position(
    arrangement: Arrangement,
    seed: int = 0,
    retry_budget: int = 64,
) -> Arrangement:
    """
    Move the arrangement into general position (distinct x-coordinates,
    distinct slopes) by a seeded rational projective map that keeps every
    incidence. Point and line order is preserved.
    """
    for candidate in general_position_candidates(arrangement, seed, retry_budget):
        return candidate
    raise BudgetExhausted(f"No general-position projective map found in {retry_budget} attempts")


# ==================== VERTICAL DISTANCES ====================

@dataclass(frozen=True)
class VerticalDistances:
    matrix: ExactMatrix
    row_order: Tuple[int, ...]
    col_order: Tuple[int, ...]


def vertical_distance_matrix(arrangement: Arrangement) -> VerticalDistances:
    """
    a_ij = m_j x_i + b_j - y_i with rows sorted by increasing x and columns
    by increasing slope. The orderings hold the original 1-based indices.
    """
    report = general_position_report(arrangement)
    if not report.ok:
        raise PreconditionError(
            f"Arrangement is not in general position "
            f"(distinct x: {report.distinct_x}, distinct slopes: {report.distinct_slopes})"
        )
    row_order = tuple(sorted(range(1, len(arrangement.points) + 1), key=lambda i: arrangement.points[i - 1][0]))
    col_order = tuple(sorted(range(1, len(arrangement.lines) + 1), key=lambda j: arrangement.lines[j - 1][0]))
    rows = []
    for i in row_order:
        x, y = arrangement.points[i - 1]
        rows.append([arrangement.lines[j - 1][0] * x + arrangement.lines[j - 1][1] - y for j in col_order])
    return VerticalDistances(ExactMatrix.from_rows(rows), row_order, col_order)


def exp_matrix_tp(
    arrangement: Arrangement,
    base: Fraction = Fraction(2),
    cap: int = 64,
    ceiling: int = 4096,
) -> TpConstruction:
    """
    TP matrix with b_ij = base^(s * a_ij) raised to the schedule-minimal
    Hadamard power; its 1-entries are the incidences under the sort orders.
    """
    distances = vertical_distance_matrix(arrangement)
    rows = distances.matrix.to_rows()
    if any(d <= 0 for row in second_differences(rows) for d in row):
        raise PreconditionError("Vertical distances have a non-positive second difference")
    construction = tp_from_exponents(rows, base=base, cap=cap, ceiling=ceiling)
    return TpConstruction(
        construction.matrix, construction.exponents, construction.base,
        construction.hadamard_exponent, distances.row_order, distances.col_order,
    )


def second_difference_spread(arrangement: Arrangement) -> Fraction:
    """
    Summed over smallest second difference of the vertical distances. The
    rounded exponents, and so the bit size of the constructed matrix, grow
    with it.
    """
    rows = vertical_distance_matrix(arrangement).matrix.to_rows()
    differences = [d for row in second_differences(rows) for d in row]
    if not differences:
        return Fraction(0)
    return sum(differences) / min(differences)


def above_below_counts(arrangement: Arrangement) -> Tuple[int, int, int]:
    """(point below line, point above line, incident) pair counts."""
    values = vertical_distance_matrix(arrangement).matrix.entries
    below = sum(1 for a in values if a > 0)
    above = sum(1 for a in values if a < 0)
    return below, above, len(values) - below - above


def sorted_incidences(arrangement: Arrangement, row_order: Sequence[int], col_order: Sequence[int]) -> BinaryConfiguration:
    """Incidence matrix with rows and columns permuted into the given orders."""
    incidences = incidence_matrix(arrangement)
    return BinaryConfiguration.from_rows([[incidences.bit(i, j) for j in col_order] for i in row_order])


# ==================== SERVICE ====================

class ConstructionService:
    """
    Runs the normalize -> vertical distances -> exponential -> Hadamard
    pipeline with the project's configured budgets.
    """

    def __init__(
        self,
        base: Fraction = None,
        cap: int = None,
        retry_budget: int = None,
        ceiling: int = None,
        candidates: int = None,
    ):
        self._load_defaults()
        if base is not None:
            self.base = parse_rational(base)
        if cap is not None:
            self.cap = cap
        if retry_budget is not None:
            self.retry_budget = retry_budget
        if ceiling is not None:
            self.ceiling = ceiling
        if candidates is not None:
            self.candidates = candidates

    def _load_defaults(self):
        """
        Load defaults from Django settings.

        In settings.py:
            TPM_EXP_BASE = '2'
            TPM_EVENTUAL_TP_CAP = 64
            TPM_NORMALIZE_RETRY_BUDGET = 64
            TPM_NORMALIZE_CANDIDATES = 6
            TPM_EXACT_EXPONENT_CEILING = 4096
        """
        self.base = parse_rational(getattr(settings, 'TPM_EXP_BASE', '2'))
        self.cap = getattr(settings, 'TPM_EVENTUAL_TP_CAP', 64)
        self.retry_budget = getattr(settings, 'TPM_NORMALIZE_RETRY_BUDGET', 64)
        self.candidates = getattr(settings, 'TPM_NORMALIZE_CANDIDATES', 6)
        self.ceiling = getattr(settings, 'TPM_EXACT_EXPONENT_CEILING', 4096)

    def normalize(self, arrangement: Arrangement, seed: int) -> Arrangement:
        return normalize_general_position(arrangement, seed=seed, retry_budget=self.retry_budget)

    def best_normalization(self, arrangement: Arrangement, seed: int) -> Arrangement:
        """The least-spread of the first few general-position images."""
        candidates = list(islice(
            general_position_candidates(arrangement, seed, self.retry_budget), max(1, self.candidates),
        ))
        if not candidates:
            raise BudgetExhausted(f"No general-position projective map found in {self.retry_budget} attempts")
        spreads = [second_difference_spread(candidate) for candidate in candidates]
        best = spreads.index(min(spreads))
        logger.info(f"Kept normalization {best + 1} of {len(candidates)} (spread {float(spreads[best]):.1f})")
        return candidates[best]

    def build(self, arrangement: Arrangement, seed: int) -> Tuple[Arrangement, TpConstruction]:
        normalized = self.best_normalization(arrangement, seed)
        logger.info(
            f"Building TP matrix for {len(normalized.points)} points and {len(normalized.lines)} lines"
        )
        construction = exp_matrix_tp(normalized, base=self.base, cap=self.cap, ceiling=self.ceiling)
        return normalized, construction


def get_construction_service(**overrides) -> ConstructionService:
    """Factory function to get the construction service"""
    return ConstructionService(**overrides)
