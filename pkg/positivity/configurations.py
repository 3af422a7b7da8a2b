"""
Entry configurations of a matrix: where a value sits, how often, and how
the smallest (or largest) values spread over the diagonals of a TP matrix.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import ExactMatrix, initial_minors_positive, parse_rational
from .exceptions import InputError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryConfiguration:
    """0-1 matrix: configurations, masks, incidence matrices, cycle supports."""
    rows: int
    cols: int
    bits: Tuple[bool, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError(f"Configuration must be nonempty, got {self.rows}x{self.cols}")
        bits = tuple(bool(b) for b in self.bits)
        if len(bits) != self.rows * self.cols:
            raise InputError(f"Expected {self.rows * self.cols} bits, got {len(bits)}")
        object.__setattr__(self, 'bits', bits)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> 'BinaryConfiguration':
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise InputError("Configuration must be nonempty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise InputError("Ragged configuration: rows have different lengths")
        return cls(len(rows), len(rows[0]), tuple(bool(b) for r in rows for b in r))

    @classmethod
    def from_text(cls, text: str) -> 'BinaryConfiguration':
        """m lines of n characters from {0,1}, no separators."""
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        for line in lines:
            if set(line) - {'0', '1'}:
                raise InputError(f"Configuration line {line!r} has characters other than 0 and 1")
        return cls.from_rows([[c == '1' for c in line] for line in lines])

    @classmethod
    def from_positions(cls, rows: int, cols: int, positions) -> 'BinaryConfiguration':
        ones = set(positions)
        for i, j in ones:
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise InputError(f"Position ({i},{j}) outside {rows}x{cols} frame")
        return cls(rows, cols, tuple((i, j) in ones for i in range(1, rows + 1) for j in range(1, cols + 1)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'BinaryConfiguration':
        return cls(rows, cols, (False,) * (rows * cols))

    def bit(self, i: int, j: int) -> bool:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise InputError(f"Index ({i},{j}) outside {self.rows}x{self.cols} configuration")
        return self.bits[(i - 1) * self.cols + (j - 1)]

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def ones(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.rows + 1) for j in range(1, self.cols + 1) if self.bit(i, j)]

    def row_sums(self) -> List[int]:
        return [sum(self.bit(i, j) for j in range(1, self.cols + 1)) for i in range(1, self.rows + 1)]

    def col_sums(self) -> List[int]:
        return [sum(self.bit(i, j) for i in range(1, self.rows + 1)) for j in range(1, self.cols + 1)]

    def transpose(self) -> 'BinaryConfiguration':
        return BinaryConfiguration.from_positions(self.cols, self.rows, [(j, i) for i, j in self.ones()])

    def to_text(self) -> str:
        return '\n'.join(
            ''.join('1' if self.bit(i, j) else '0' for j in range(1, self.cols + 1))
            for i in range(1, self.rows + 1)
        )

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class EntryRankReport:
    k: int
    largest: bool
    values: Tuple[Fraction, ...]
    per_diagonal_counts: Dict[int, int] = field(hash=False)
    total: int
    diagonal_bound: int
    total_bound: int

    @property
    def diagonals_within_bound(self) -> bool:
        return all(count <= self.diagonal_bound for count in self.per_diagonal_counts.values())

    @property
    def total_within_bound(self) -> bool:
        return self.total <= self.total_bound


def configuration(A: ExactMatrix, x) -> BinaryConfiguration:
    """C_x(A): bit (i,j) set iff a_ij = x."""
    x = parse_rational(x)
    return BinaryConfiguration(A.rows, A.cols, tuple(e == x for e in A.entries))


def multiplicity(A: ExactMatrix, x) -> int:
    return configuration(A, x).weight


def kth_smallest_value(A: ExactMatrix, k: int, largest: bool = False) -> Fraction:
    values = A.values()
    if k < 1 or k > len(values):
        raise InputError(f"Matrix has {len(values)} distinct values, cannot take rank {k}")
    return values[-k] if largest else values[k - 1]


def value_rank(A: ExactMatrix, x) -> Tuple[int, int]:
    """(k, r): x is the k-th smallest and the r-th largest distinct value of A."""
    x = parse_rational(x)
    values = A.values()
    if x not in values:
        raise InputError(f"Value {x} does not occur in the matrix")
    position = values.index(x)
    return position + 1, len(values) - position


def has_all_ones_2x2(M: BinaryConfiguration) -> Tuple[bool, Optional[Tuple[Tuple[int, int], Tuple[int, int]]]]:
    """
    Look for a 2×2 submatrix of ones. The witness is the first (rows, cols)
    pair found scanning row pairs in lexicographic order.
    """
    row_supports = [
        {j for j in range(1, M.cols + 1) if M.bit(i, j)} for i in range(1, M.rows + 1)
    ]
    for r1, r2 in combinations(range(1, M.rows + 1), 2):
        shared = sorted(row_supports[r1 - 1] & row_supports[r2 - 1])
        if len(shared) >= 2:
            return True, ((r1, r2), (shared[0], shared[1]))
    return False, None


def diagonal_offset(i: int, j: int, n: int, anti: bool = False) -> int:
    """Diagonal d_c = {(i,j): i = c + j}; anti-diagonals shifted to the same range."""
    return i + j - n - 1 if anti else i - j


def smallest_k_audit(A: ExactMatrix, k: int, largest: bool = False) -> EntryRankReport:
    """
    Count, per diagonal (or anti-diagonal when largest), the entries among
    the k smallest (largest) distinct values of a square TP matrix, and
    compare against 2^k - 1 per diagonal and (2^k - 1)(2n - 1) in total.
    """
    if not A.is_square:
        raise InputError(f"Audit needs a square matrix, got {A.rows}x{A.cols}")
    if k < 1:
        raise InputError(f"Audit rank must be positive, got {k}")
    is_tp, witness = initial_minors_positive(A)
    if not is_tp:
        raise PreconditionError(
            f"Matrix is not TP (minor rows {list(witness.rows)} cols {list(witness.cols)} is not positive)"
        )
    n = A.rows
    distinct = A.values()
    # More ranks than values: every value counts
    chosen = distinct[-k:][::-1] if largest else distinct[:k]
    selected = set(chosen)

    counts = {c: 0 for c in range(1 - n, n)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if A.entry(i, j) in selected:
                counts[diagonal_offset(i, j, n, anti=largest)] += 1

    bound = 2 ** k - 1
    report = EntryRankReport(
        k=k,
        largest=largest,
        values=tuple(sorted(chosen)),
        per_diagonal_counts=counts,
        total=sum(counts.values()),
        diagonal_bound=bound,
        total_bound=bound * (2 * n - 1),
    )
    if not report.diagonals_within_bound:
        logger.warning(f"Diagonal bound {bound} exceeded on a TP matrix (k={k}, largest={largest})")
    return report
