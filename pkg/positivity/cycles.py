"""
Orthogonal cycles, the weight function F, positive collections and the
linear-programming test for whether a 0-1 matrix carries one.

Positions are 1-based (row, col) pairs. A cycle is stored in open form
(p_0, ..., p_{2k-1}); the closing position p_{2k} = p_0 is implicit.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .configurations import BinaryConfiguration, has_all_ones_2x2
from .exact import ExactMatrix, TpConstruction, format_rational, second_differences, tp_from_exponents
from .exceptions import BudgetExhausted, InputError, PositivityError, PreconditionError
from .simplex import find_feasible_point

logger = logging.getLogger(__name__)

Position = Tuple[int, int]


# ==================== CYCLES ====================

@dataclass(frozen=True)
class OrthogonalCycle:
    positions: Tuple[Position, ...]
    frame: Tuple[int, int]

    def __post_init__(self):
        positions = tuple((int(r), int(c)) for r, c in self.positions)
        if len(positions) < 2 or len(positions) % 2:
            raise InputError(f"A cycle needs an even, positive number of positions, got {len(positions)}")
        m, n = self.frame
        for r, c in positions:
            if not (1 <= r <= m and 1 <= c <= n):
                raise InputError(f"Position ({r},{c}) outside {m}x{n} frame")
        size = len(positions)
        for t in range(0, size, 2):
            here, there, after = positions[t], positions[t + 1], positions[(t + 2) % size]
            if here[0] != there[0]:
                raise InputError(f"Positions p_{t} and p_{t + 1} are not in the same row")
            if there[1] != after[1]:
                raise InputError(f"Positions p_{t + 1} and p_{(t + 2) % size} are not in the same column")
        object.__setattr__(self, 'positions', positions)

    @classmethod
    def from_sequence(cls, positions: Sequence[Sequence[int]], frame: Tuple[int, int] = None) -> 'OrthogonalCycle':
        """Accepts the open form or the closed form with p_{2k} = p_0 repeated."""
        positions = [tuple(p) for p in positions]
        if len(positions) > 1 and len(positions) % 2 == 1 and positions[0] == positions[-1]:
            positions = positions[:-1]
        if not positions:
            raise InputError("Empty cycle")
        if frame is None:
            frame = (max(r for r, _ in positions), max(c for _, c in positions))
        return cls(tuple(positions), tuple(frame))

    @property
    def half_length(self) -> int:
        return len(self.positions) // 2

    @property
    def evens(self) -> Tuple[Position, ...]:
        return self.positions[0::2]

    @property
    def odds(self) -> Tuple[Position, ...]:
        return self.positions[1::2]

    def reversed(self) -> 'OrthogonalCycle':
        """q_t = p_{(1 - t) mod 2k}: the same cycle walked backwards, row move first."""
        size = len(self.positions)
        return OrthogonalCycle(tuple(self.positions[(1 - t) % size] for t in range(size)), self.frame)

    def rotated(self, offset: int) -> 'OrthogonalCycle':
        if offset % 2:
            raise InputError("Cycles can only be rotated by an even offset")
        offset %= len(self.positions)
        return OrthogonalCycle(self.positions[offset:] + self.positions[:offset], self.frame)

    def closed(self) -> List[Position]:
        return list(self.positions) + [self.positions[0]]


def weight_function(cycle: OrthogonalCycle, i: int, j: int) -> int:
    """
    F(i,j): even positions minus odd positions inside P(i,j) = {(u,v): u > i, v > j}.
    """
    m, n = cycle.frame
    if not (0 <= i <= m and 0 <= j <= n):
        raise InputError(f"({i},{j}) outside 0..{m} x 0..{n}")
    inside = lambda p: p[0] > i and p[1] > j
    return sum(map(inside, cycle.evens)) - sum(map(inside, cycle.odds))


def weight_table(cycle: OrthogonalCycle, frame: Tuple[int, int] = None) -> List[List[int]]:
    """F over all (i,j) in 0..m x 0..n."""
    m, n = frame or cycle.frame
    counts = [[0] * (n + 2) for _ in range(m + 2)]
    for r, c in cycle.evens:
        counts[r][c] += 1
    for r, c in cycle.odds:
        counts[r][c] -= 1
    # Suffix sums give the quadrant counts
    table = [[0] * (n + 1) for _ in range(m + 1)]
    suffix = [[0] * (n + 2) for _ in range(m + 2)]
    for u in range(m, 0, -1):
        for v in range(n, 0, -1):
            suffix[u][v] = counts[u][v] + suffix[u + 1][v] + suffix[u][v + 1] - suffix[u + 1][v + 1]
    for i in range(m + 1):
        for j in range(n + 1):
            table[i][j] = suffix[i + 1][j + 1]
    return table


@dataclass(frozen=True)
class CycleCollection:
    cycles: Tuple[OrthogonalCycle, ...]

    def __post_init__(self):
        if not self.cycles:
            raise InputError("A collection needs at least one cycle")
        object.__setattr__(self, 'cycles', tuple(self.cycles))

    @property
    def frame(self) -> Tuple[int, int]:
        return (max(c.frame[0] for c in self.cycles), max(c.frame[1] for c in self.cycles))

    def weight_sums(self) -> List[List[int]]:
        m, n = self.frame
        total = [[0] * (n + 1) for _ in range(m + 1)]
        for cycle in self.cycles:
            for i, row in enumerate(weight_table(cycle, (m, n))):
                for j, value in enumerate(row):
                    total[i][j] += value
        return total


def collection_is_positive(collection: CycleCollection) -> bool:
    """All summed weights nonnegative and at least one strictly positive."""
    values = [v for row in collection.weight_sums() for v in row]
    return all(v >= 0 for v in values) and any(v > 0 for v in values)


def simple_cycles(M: BinaryConfiguration) -> List[OrthogonalCycle]:
    """
    All simple orthogonal cycles (each row and column used by one move) on
    the ones of M, in both orientations, each listed once up to rotation.
    """
    ones = set(M.ones())
    found = {}

    def canonical(path):
        rotations = [tuple(path[t:] + path[:t]) for t in range(0, len(path), 2)]
        return min(rotations)

    def extend(path, used_rows, used_cols):
        last = path[-1]
        if len(path) % 2 == 1:
            row = last[0]
            for col in range(1, M.cols + 1):
                if col == last[1] or (row, col) not in ones:
                    continue
                if col == path[0][1] and len(path) >= 3:
                    key = canonical(path + [(row, col)])
                    found.setdefault(key, key)
                elif col not in used_cols:
                    extend(path + [(row, col)], used_rows, used_cols | {col})
        else:
            col = last[1]
            for row in range(1, M.rows + 1):
                if row != last[0] and row not in used_rows and (row, col) in ones:
                    extend(path + [(row, col)], used_rows | {row}, used_cols)

    for start in sorted(ones):
        extend([start], {start[0]}, {start[1]})
    return [OrthogonalCycle(key, (M.rows, M.cols)) for key in sorted(found)]


# ==================== PATTERNS ====================

@dataclass(frozen=True)
class PartialPattern:
    """Grid of specified / unspecified cells; a specified cell may carry a value."""
    rows: int
    cols: int
    specified: Tuple[bool, ...]
    values: Tuple[Optional[Fraction], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError(f"Pattern must be nonempty, got {self.rows}x{self.cols}")
        if len(self.specified) != self.rows * self.cols or len(self.values) != self.rows * self.cols:
            raise InputError("Pattern cell count does not match its dimensions")

    def mask(self) -> BinaryConfiguration:
        return BinaryConfiguration(self.rows, self.cols, self.specified)

    def without(self, i: int, j: int) -> 'PartialPattern':
        """The same pattern with cell (i,j) made unspecified."""
        index = (i - 1) * self.cols + (j - 1)
        specified = list(self.specified)
        values = list(self.values)
        specified[index], values[index] = False, None
        return PartialPattern(self.rows, self.cols, tuple(specified), tuple(values))


# ==================== LINEAR PROGRAM ====================

@dataclass(frozen=True)
class FeasibilityCertificate:
    """
    Either an exponent table E (zeros at the ones of M, every contiguous
    second difference at least margin) or nonnegative dual weights y on the
    second-difference constraints whose combination vanishes on every free
    exponent.
    """
    feasible: bool
    exponents: Optional[ExactMatrix] = None
    margin: Optional[Fraction] = None
    dual_weights: Optional[Tuple[Tuple[Fraction, ...], ...]] = None

    def verify(self, M: BinaryConfiguration) -> bool:
        if self.feasible:
            E = self.exponents
            if E is None or E.shape != (M.rows, M.cols) or not self.margin or self.margin <= 0:
                return False
            if any(E.entry(i, j) != 0 for i, j in M.ones()):
                return False
            return all(d >= self.margin for row in second_differences(E.to_rows()) for d in row)
        y = self.dual_weights
        if y is None or any(w < 0 for row in y for w in row) or sum(w for row in y for w in row) != 1:
            return False
        g = dual_combination(y, M.rows, M.cols)
        return all(g[i - 1][j - 1] == 0 for i in range(1, M.rows + 1) for j in range(1, M.cols + 1) if not M.bit(i, j))

    def as_dict(self):
        if self.feasible:
            return {
                'feasible': True,
                'exponents': self.exponents.to_rows(),
                'margin': self.margin,
            }
        return {'feasible': False, 'dual_weights': [list(row) for row in self.dual_weights]}


def _coefficient(i: int, j: int, u: int, v: int) -> int:
    """Coefficient of e_uv in d_ij."""
    if (u, v) in ((i, j), (i + 1, j + 1)):
        return 1
    if (u, v) in ((i + 1, j), (i, j + 1)):
        return -1
    return 0


def dual_combination(y: Sequence[Sequence[Fraction]], m: int, n: int) -> List[List[Fraction]]:
    """Coefficient of every e_uv in sum_ij y_ij d_ij (the second difference of y)."""
    def weight(i, j):
        if 1 <= i <= m - 1 and 1 <= j <= n - 1:
            return Fraction(y[i - 1][j - 1])
        return Fraction(0)
    return [
        [weight(u - 1, v - 1) + weight(u, v) - weight(u - 1, v) - weight(u, v - 1) for v in range(1, n + 1)]
        for u in range(1, m + 1)
    ]


def exists_positive_collection(M: BinaryConfiguration) -> Tuple[bool, FeasibilityCertificate]:
    """
    True iff some collection of orthogonal cycles of M is positive.

    Decided through the exponent system d_ij(E) >= 1 with e = 0 at the ones
    of M: a positive collection exists exactly when that system has no
    solution, and then the Farkas weights are returned instead.
    """
    m, n = M.rows, M.cols
    free = [(u, v) for u in range(1, m + 1) for v in range(1, n + 1) if not M.bit(u, v)]
    interior = [(i, j) for i in range(1, m) for j in range(1, n)]

    if not interior:
        zero = ExactMatrix.constant(m, n, 0)
        return False, FeasibilityCertificate(True, zero, Fraction(1))

    # Variables: e+ and e- per free position, then one surplus per constraint
    num_vars = 2 * len(free) + len(interior)
    constraints, rhs = [], []
    for row_index, (i, j) in enumerate(interior):
        row = [Fraction(0)] * num_vars
        for t, (u, v) in enumerate(free):
            coefficient = _coefficient(i, j, u, v)
            row[2 * t] = Fraction(coefficient)
            row[2 * t + 1] = Fraction(-coefficient)
        row[2 * len(free) + row_index] = Fraction(-1)
        constraints.append(row)
        rhs.append(Fraction(1))

    point = find_feasible_point(constraints, rhs, num_vars)
    if point is not None:
        values = {(u, v): point[2 * t] - point[2 * t + 1] for t, (u, v) in enumerate(free)}
        E = ExactMatrix.from_rows([
            [values.get((u, v), Fraction(0)) for v in range(1, n + 1)] for u in range(1, m + 1)
        ])
        margin = min(d for row in second_differences(E.to_rows()) for d in row)
        logger.debug(f"Exponent system feasible on {m}x{n} mask, margin {margin}")
        return False, FeasibilityCertificate(True, E, margin)

    # Farkas alternative: y >= 0, sum y = 1, combination vanishes on free exponents
    dual_constraints = [[Fraction(1)] * len(interior)]
    dual_rhs = [Fraction(1)]
    for u, v in free:
        dual_constraints.append([Fraction(_coefficient(i, j, u, v)) for i, j in interior])
        dual_rhs.append(Fraction(0))
    weights = find_feasible_point(dual_constraints, dual_rhs, len(interior))
    if weights is None:
        logger.error(f"Neither the exponent system nor its alternative is feasible on a {m}x{n} mask")
        raise PositivityError("Farkas alternative infeasible", code='internal_error')
    table = tuple(tuple(weights[i * (n - 1):(i + 1) * (n - 1)]) for i in range(m - 1))
    return True, FeasibilityCertificate(False, dual_weights=table)


# ==================== ORACLES ====================

def bounded_positive_collection(M: BinaryConfiguration, bound: int = 4) -> Optional[List[List[int]]]:
    """
    Exhaustive search for a positive collection whose summed F table has
    entries in 0..bound.

    A nonzero table y >= 0 is the summed F of a collection of cycles of M
    exactly when its second difference is supported on the ones of M, since
    an integer matrix with zero line sums splits into orthogonal cycles.
    Returns the first such table found, or None.
    """
    m, n = M.rows, M.cols
    cells = (m - 1) * (n - 1)
    if cells == 0:
        return None
    ones = set(M.ones())
    for flat in product(range(bound + 1), repeat=cells):
        if not any(flat):
            continue
        y = [list(flat[i * (n - 1):(i + 1) * (n - 1)]) for i in range(m - 1)]
        g = dual_combination(y, m, n)
        if all(g[u - 1][v - 1] == 0 or (u, v) in ones for u in range(1, m + 1) for v in range(1, n + 1)):
            return y
    return None


def support_masks(m: int, n: int, bound: int = 4) -> Dict[int, List[List[int]]]:
    """
    Every distinct support (as a row-major bitmask) of the second difference
    of a nonzero table in 0..bound, with one table realizing it. Lets a
    sweep over many masks share the enumeration.
    """
    cells = (m - 1) * (n - 1)
    supports = {}
    for flat in product(range(bound + 1), repeat=cells):
        if not any(flat):
            continue
        y = [list(flat[i * (n - 1):(i + 1) * (n - 1)]) for i in range(m - 1)]
        g = dual_combination(y, m, n)
        bits = 0
        for u in range(m):
            for v in range(n):
                if g[u][v] != 0:
                    bits |= 1 << (u * n + v)
        supports.setdefault(bits, y)
    return supports


def simple_cycle_collection_search(
    M: BinaryConfiguration,
    multiplicity: int = 2,
    max_cycles: int = 12,
) -> Optional[Dict[OrthogonalCycle, int]]:
    """
    Brute force over collections of simple cycles of M with each cycle used
    at most multiplicity times. Only for small frames: raises
    BudgetExhausted when M carries more than max_cycles simple cycles.
    """
    cycles = simple_cycles(M)
    if len(cycles) > max_cycles:
        raise BudgetExhausted(f"{len(cycles)} simple cycles exceed the search limit {max_cycles}")
    m, n = M.rows, M.cols
    tables = [weight_table(c, (m, n)) for c in cycles]
    for counts in product(range(multiplicity + 1), repeat=len(cycles)):
        if not any(counts):
            continue
        sums = [
            sum(k * tables[t][i][j] for t, k in enumerate(counts))
            for i in range(m + 1) for j in range(n + 1)
        ]
        if all(s >= 0 for s in sums) and any(s > 0 for s in sums):
            return {cycles[t]: k for t, k in enumerate(counts) if k}
    return None


# ==================== OBSTRUCTIONS AND CONSTRUCTIONS ====================

@dataclass(frozen=True)
class ObstructionVerdict:
    obstructed: bool
    certificate: FeasibilityCertificate

    @property
    def label(self) -> str:
        return 'Obstructed' if self.obstructed else 'NoObstruction'


def pattern_obstruction(pattern: PartialPattern) -> ObstructionVerdict:
    """
    A positive collection on the specified cells certifies that the pattern
    is not TP2 (hence not TP) completable.
    """
    mask = pattern.mask()
    has_block, witness = has_all_ones_2x2(mask)
    if has_block:
        rows, cols = witness
        raise PreconditionError(
            f"Pattern has a fully specified 2x2 submatrix at rows {list(rows)} cols {list(cols)}"
        )
    obstructed, certificate = exists_positive_collection(mask)
    return ObstructionVerdict(obstructed, certificate)


def change_to_tp(
    M: BinaryConfiguration,
    base: Fraction = Fraction(2),
    cap: int = 64,
    ceiling: int = 4096,
) -> TpConstruction:
    """
    Build a TP matrix B with configuration(B, 1) = M, possible exactly when
    M carries no positive collection.

    Exponents left at zero on 0-positions are moved to margin/8, which
    shifts every second difference by at most margin/2.
    """
    exists, certificate = exists_positive_collection(M)
    if exists:
        raise PreconditionError("The mask carries a positive collection of orthogonal cycles")
    nudge = certificate.margin / 8
    E = [
        [e if (e != 0 or M.bit(i, j)) else nudge for j, e in enumerate(row, start=1)]
        for i, row in enumerate(certificate.exponents.to_rows(), start=1)
    ]
    logger.info(f"Changing {M.rows}x{M.cols} mask to TP with margin {format_rational(certificate.margin)}")
    return tp_from_exponents(E, base=base, cap=cap, ceiling=ceiling)
