"""
Exact rational matrices and total-positivity decision procedures.

All arithmetic is done with ``fractions.Fraction``; determinants are taken
by fraction-free (Bareiss) elimination after clearing denominators row by
row, so no floating point ever enters a sign decision. TP itself is decided
from the contiguous minors, all of which come out of one condensation pass.

Index sets passed to and returned from this module are 1-based, matching
the usual minor notation (rows {1,2}, cols {1,3}).
"""

import logging
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Iterator, List, Optional, Sequence, Tuple

from .exceptions import BudgetExhausted, InputError, PositivityError, PreconditionError

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


# ==================== RATIONALS ====================

def parse_rational(value) -> Fraction:
    """
    Parse an integer or a "p/q" literal into a canonical Fraction.

    Floats are rejected: every scalar must be exact.
    """
    if isinstance(value, bool):
        raise InputError(f"Not a rational literal: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = RATIONAL_PATTERN.match(value)
        if not match:
            raise InputError(f"Not a rational literal: {value!r}")
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            raise InputError(f"Zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator or 1))
    raise InputError(f"Not a rational literal: {value!r}")


def format_rational(value: Fraction):
    """Integers stay integers, everything else becomes "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


# ==================== MATRICES ====================

@dataclass(frozen=True)
class ExactMatrix:
    """Dense m×n matrix of rationals stored row-major."""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError(f"Matrix must be nonempty, got {self.rows}x{self.cols}")
        entries = tuple(parse_rational(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise InputError(
                f"Expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} "
                f"matrix, got {len(entries)}"
            )
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> 'ExactMatrix':
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise InputError("Matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("Ragged matrix: rows have different lengths")
        return cls(len(rows), width, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> 'ExactMatrix':
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def constant(cls, m: int, n: int, value=1) -> 'ExactMatrix':
        return cls(m, n, (value,) * (m * n))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Fraction:
        """1-based entry access."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise InputError(f"Index ({i},{j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        start = (i - 1) * self.cols
        return self.entries[start:start + self.cols]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(1, self.rows + 1)]

    def values(self) -> List[Fraction]:
        """Distinct entry values in increasing order."""
        return sorted(set(self.entries))

    def submatrix(self, row_set: Sequence[int], col_set: Sequence[int]) -> 'ExactMatrix':
        _check_index_set(row_set, self.rows, 'row')
        _check_index_set(col_set, self.cols, 'column')
        return ExactMatrix(
            len(row_set), len(col_set),
            tuple(self.entry(i, j) for i in row_set for j in col_set),
        )

    def transpose(self) -> 'ExactMatrix':
        return ExactMatrix(
            self.cols, self.rows,
            tuple(self.entry(i, j) for j in range(1, self.cols + 1) for i in range(1, self.rows + 1)),
        )

    def map(self, func) -> 'ExactMatrix':
        return ExactMatrix(self.rows, self.cols, tuple(func(e) for e in self.entries))

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if self.cols != other.rows:
            raise InputError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        left, right = self.to_rows(), other.to_rows()
        product = [
            [sum((left[i][k] * right[k][j] for k in range(self.cols)), Fraction(0))
             for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return ExactMatrix.from_rows(product)

    def __str__(self):
        return '\n'.join(
            ' '.join(str(format_rational(e)) for e in self.row(i))
            for i in range(1, self.rows + 1)
        )


def _check_index_set(indices: Sequence[int], bound: int, label: str):
    if not indices:
        raise InputError(f"Empty {label} index set")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise InputError(f"{label.capitalize()} index set {list(indices)} is not strictly increasing")
    if indices[0] < 1 or indices[-1] > bound:
        raise InputError(f"{label.capitalize()} index set {list(indices)} outside 1..{bound}")


# ==================== DETERMINANTS ====================

def _clear_denominators(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], List[int]]:
    """Scale each row to integers. Returns the integer rows and the per-row scale."""
    integer_rows, scales = [], []
    for row in rows:
        scale = lcm(*(Fraction(x).denominator for x in row))
        integer_rows.append([x.numerator * (scale // x.denominator) for x in map(Fraction, row)])
        scales.append(scale)
    return integer_rows, scales


def _bareiss(matrix: List[List[int]]) -> int:
    n = len(matrix)
    a = [row[:] for row in matrix]
    sign, previous = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // previous
        previous = pivot
    return sign * a[n - 1][n - 1]


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square array of rationals."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise InputError("Determinant needs a nonempty square array")
    if n == 1:
        return Fraction(rows[0][0])
    if n == 2:
        return Fraction(rows[0][0]) * rows[1][1] - Fraction(rows[0][1]) * rows[1][0]
    integer_rows, scales = _clear_denominators(rows)
    scale = 1
    for s in scales:
        scale *= s
    return Fraction(_bareiss(integer_rows), scale)


def leading_minors(rows: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """
    Leading principal minors of orders 1..min(m, n), from one unpivoted
    Bareiss sweep. Stops after the first zero minor, since the sweep cannot
    continue past a zero pivot.
    """
    size = min(len(rows), len(rows[0]))
    integer_rows, scales = _clear_denominators([list(r[:size]) for r in rows[:size]])
    a = integer_rows
    minors = []
    previous, scale = 1, 1
    for k in range(size):
        scale *= scales[k]
        pivot = a[k][k]
        minors.append(Fraction(pivot, scale))
        if pivot == 0:
            break
        for i in range(k + 1, size):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // previous
        previous = pivot
    return minors


def minor(A: ExactMatrix, row_set: Sequence[int], col_set: Sequence[int]) -> Fraction:
    """Determinant of A[row_set | col_set] (1-based, strictly increasing index sets)."""
    row_set, col_set = list(row_set), list(col_set)
    if len(row_set) != len(col_set):
        raise InputError(f"Row set {row_set} and column set {col_set} differ in size")
    _check_index_set(row_set, A.rows, 'row')
    _check_index_set(col_set, A.cols, 'column')
    return determinant([[A.entry(i, j) for j in col_set] for i in row_set])


# ==================== MATRIX CLASSES ====================

@dataclass(frozen=True)
class MatrixClass:
    tag: str
    k: Optional[int] = None

    TAGS = ('tp', 'tn', 'tpk', 'tp2', 'tns')

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise InputError(f"Unknown matrix class {self.tag!r}")
        if self.tag == 'tpk' and (self.k is None or self.k < 1):
            raise InputError("TPk needs a positive k")

    @classmethod
    def parse(cls, text: str) -> 'MatrixClass':
        """Accepts tp, tn, tp2, tns and tpk:<k>."""
        text = text.strip().lower()
        if text.startswith('tpk:'):
            try:
                return cls('tpk', int(text[4:]))
            except ValueError:
                raise InputError(f"Bad TPk order in {text!r}")
        return cls(text)

    def __str__(self):
        return f"tpk:{self.k}" if self.tag == 'tpk' else self.tag


@dataclass(frozen=True)
class MinorWitness:
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    value: Fraction

    def as_dict(self):
        return {'rows': list(self.rows), 'cols': list(self.cols), 'value': self.value}


@dataclass(frozen=True)
class Classification:
    member: bool
    matrix_class: MatrixClass
    witness: Optional[MinorWitness]
    method: str


def iter_minors(A: ExactMatrix, orders: Sequence[int] = None) -> Iterator[MinorWitness]:
    """All minors in lexicographic (order, rows, cols) order."""
    if orders is None:
        orders = range(1, min(A.rows, A.cols) + 1)
    for k in orders:
        for row_set in combinations(range(1, A.rows + 1), k):
            for col_set in combinations(range(1, A.cols + 1), k):
                yield MinorWitness(row_set, col_set, minor(A, row_set, col_set))


def _first_failing(A: ExactMatrix, failing, orders=None) -> Optional[MinorWitness]:
    for witness in iter_minors(A, orders):
        if failing(witness.value):
            return witness
    return None


def _sweep(A: ExactMatrix, start_row: int, start_col: int) -> Optional[MinorWitness]:
    """Check the contiguous minors anchored at (start_row, start_col)."""
    block = [list(A.row(i)[start_col - 1:]) for i in range(start_row, A.rows + 1)]
    for order, value in enumerate(leading_minors(block), start=1):
        if value <= 0:
            return MinorWitness(
                tuple(range(start_row, start_row + order)),
                tuple(range(start_col, start_col + order)),
                value,
            )
    return None


def initial_minors_positive(A: ExactMatrix) -> Tuple[bool, Optional[MinorWitness]]:
    """
    TP certificate: every initial minor is positive.

    Initial minors are contiguous with the row block or the column block
    starting at 1; they come out of m + n - 1 Bareiss sweeps.
    """
    anchors = [(r, 1) for r in range(1, A.rows + 1)] + [(1, c) for c in range(2, A.cols + 1)]
    for start_row, start_col in anchors:
        witness = _sweep(A, start_row, start_col)
        if witness is not None:
            logger.debug(f"Initial minor sweep failed at rows {witness.rows} cols {witness.cols}")
            return False, witness
    return True, None


def _bit_size(rows: Sequence[Sequence[Fraction]]) -> int:
    return sum(e.numerator.bit_length() + e.denominator.bit_length() for row in rows for e in row)


def _diagonally_normalized(A: ExactMatrix) -> List[List[Fraction]]:
    """
    Rows of D1 A D2 with first row and column scaled to the corner entry,
    when that is smaller than A itself. Needs a positive first row and column.
    """
    rows = A.to_rows()
    corner = rows[0][0]
    if any(row[0] <= 0 for row in rows) or any(e <= 0 for e in rows[0]):
        return rows
    scaled = [[e * corner / (row[0] * rows[0][j]) for j, e in enumerate(row)] for row in rows]
    return scaled if _bit_size(scaled) < _bit_size(rows) else rows


def contiguous_minors_positive(A: ExactMatrix) -> Tuple[bool, Optional[MinorWitness]]:
    """
    Positivity of every contiguous square minor, which is equivalent to TP.

    All contiguous minors come out of one condensation pass: the minors of
    order k + 1 are (C(i,j) C(i+1,j+1) - C(i,j+1) C(i+1,j)) / C'(i+1,j+1)
    with C of order k and C' of order k - 1. A level is only condensed
    once all of its minors are positive, so every division is exact.
    Positive diagonal scaling keeps every minor's sign, and the pass runs
    on whichever of A and its normalized form is smaller.

    The witness has the least failing order (no minor of smaller order is
    non-positive), then the first position in row-major order.
    """
    current, _ = _clear_denominators(_diagonally_normalized(A))
    previous = [[1] * (A.cols + 1) for _ in range(A.rows + 1)]
    order = 1
    while True:
        for i, row in enumerate(current):
            for j, value in enumerate(row):
                if value <= 0:
                    rows = tuple(range(i + 1, i + order + 1))
                    cols = tuple(range(j + 1, j + order + 1))
                    return False, MinorWitness(rows, cols, minor(A, rows, cols))
        if order == min(A.rows, A.cols):
            return True, None
        condensed = [
            [
                (current[i][j] * current[i + 1][j + 1] - current[i][j + 1] * current[i + 1][j])
                // previous[i + 1][j + 1]
                for j in range(len(current[0]) - 1)
            ]
            for i in range(len(current) - 1)
        ]
        previous, current = current, condensed
        order += 1


def all_minors_positive(A: ExactMatrix) -> Tuple[bool, Optional[MinorWitness]]:
    """Exhaustive oracle; the witness is the lexicographically least failure."""
    witness = _first_failing(A, lambda v: v <= 0)
    return witness is None, witness


def is_tp2(A: ExactMatrix) -> Tuple[bool, Optional[MinorWitness]]:
    """All entries positive and all contiguous 2×2 minors positive."""
    for i in range(1, A.rows + 1):
        for j in range(1, A.cols + 1):
            if A.entry(i, j) <= 0:
                return False, MinorWitness((i,), (j,), A.entry(i, j))
    for i in range(1, A.rows):
        for j in range(1, A.cols):
            value = A.entry(i, j) * A.entry(i + 1, j + 1) - A.entry(i, j + 1) * A.entry(i + 1, j)
            if value <= 0:
                return False, MinorWitness((i, i + 1), (j, j + 1), value)
    return True, None


def classify(A: ExactMatrix, matrix_class: MatrixClass, exhaustive_cap: int = 10) -> Classification:
    """
    Decide whether A belongs to matrix_class.

    TP and TP2 use polynomial certificates; TN, TNS and TPk (k below full
    order) enumerate minors exhaustively in lexicographic order. A failing
    certificate already names the least failing order; on matrices within
    exhaustive_cap the witness is then moved to the lexicographically first
    failing minor of that order.
    """
    size = min(A.rows, A.cols)
    tag = matrix_class.tag
    if tag == 'tpk' and matrix_class.k > size:
        raise InputError(f"TPk order {matrix_class.k} exceeds min(m,n) = {size}")

    certificate = None
    if tag == 'tp' or (tag == 'tpk' and matrix_class.k == size):
        member, witness = contiguous_minors_positive(A)
        certificate = 'contiguous-minors'
    elif tag == 'tp2' or (tag == 'tpk' and matrix_class.k == 2):
        member, witness = is_tp2(A)
        certificate = 'contiguous-2x2'
    if certificate is not None:
        if witness is not None and max(A.rows, A.cols) <= exhaustive_cap:
            witness = _first_failing(A, lambda v: v <= 0, [len(witness.rows)])
        return Classification(member, matrix_class, witness, certificate)

    if max(A.rows, A.cols) > exhaustive_cap:
        logger.warning(
            f"Exhaustive minor enumeration on a {A.rows}x{A.cols} matrix "
            f"({sum(comb(A.rows, k) * comb(A.cols, k) for k in range(1, size + 1))} minors)"
        )
    if tag == 'tpk':
        witness = _first_failing(A, lambda v: v <= 0, range(1, matrix_class.k + 1))
    elif tag == 'tn':
        witness = _first_failing(A, lambda v: v < 0)
    else:
        witness = _first_failing(A, lambda v: v == 0)
    return Classification(witness is None, matrix_class, witness, 'exhaustive')


# ==================== DERIVED MATRICES ====================

def kth_compound(A: ExactMatrix, k: int) -> ExactMatrix:
    """Matrix of all k×k minors, index sets in lexicographic order."""
    if not 1 <= k <= min(A.rows, A.cols):
        raise InputError(f"Compound order {k} outside 1..{min(A.rows, A.cols)}")
    row_sets = list(combinations(range(1, A.rows + 1), k))
    col_sets = list(combinations(range(1, A.cols + 1), k))
    return ExactMatrix(
        len(row_sets), len(col_sets),
        tuple(minor(A, I, J) for I in row_sets for J in col_sets),
    )


def hadamard_power(A: ExactMatrix, t: int) -> ExactMatrix:
    if t < 0:
        raise InputError(f"Hadamard exponent must be nonnegative, got {t}")
    return A.map(lambda e: e ** t)


def eventual_tp_exponent(A: ExactMatrix, cap: int = 64) -> int:
    """
    Smallest t in the schedule 1, 2, 4, ... (up to cap) with A^(t) TP.

    Raises PreconditionError when A is not TP2 (no Hadamard power can be
    TP) and BudgetExhausted when the cap is passed.
    """
    member, witness = is_tp2(A)
    if not member:
        raise PreconditionError(
            f"Matrix is not TP2 (minor rows {list(witness.rows)} cols {list(witness.cols)} "
            f"= {format_rational(witness.value)}), so no Hadamard power is TP"
        )
    t = 1
    while t <= cap:
        if contiguous_minors_positive(hadamard_power(A, t))[0]:
            return t
        logger.info(f"Hadamard power {t} is not TP, doubling")
        t *= 2
    raise BudgetExhausted(f"No Hadamard power up to {cap} is TP")


# ==================== EXPONENT MATRICES ====================

@dataclass(frozen=True)
class IntegerExponents:
    exponents: Tuple[Tuple[int, ...], ...]
    scale: Fraction
    method: str


def second_differences(E: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """d_ij = e_{i+1,j+1} - e_{i+1,j} - e_{i,j+1} + e_ij over contiguous 2×2 blocks."""
    return [
        [E[i + 1][j + 1] - E[i + 1][j] - E[i][j + 1] + E[i][j] for j in range(len(E[0]) - 1)]
        for i in range(len(E) - 1)
    ]


def integer_exponents(E: Sequence[Sequence[Fraction]], ceiling: int = 4096) -> IntegerExponents:
    """
    Integer exponent table with the same zero pattern and strictly positive
    contiguous second differences.

    Exact scaling by the common denominator when the scaled magnitudes stay
    within ceiling. Otherwise sign(e) * ceil(S * |e|) with S found by
    doubling until every second difference is >= 1, then bisected back
    towards the last failing power of two.
    """
    E = [[Fraction(e) for e in row] for row in E]
    differences = [d for row in second_differences(E) for d in row]
    if any(d <= 0 for d in differences):
        raise PreconditionError("Exponent table has a non-positive second difference")

    common = lcm(*(e.denominator for row in E for e in row))
    largest = max(abs(e) for row in E for e in row)
    if common * largest <= ceiling or not differences:
        exponents = tuple(tuple(int(e * common) for e in row) for row in E)
        return IntegerExponents(exponents, Fraction(common), 'exact')

    def rounded(value: Fraction, scale: int) -> int:
        magnitude = -((-abs(value) * scale) // 1)
        return magnitude if value >= 0 else -magnitude

    def rounded_table(scale: int) -> Optional[List[List[int]]]:
        table = [[rounded(e, scale) for e in row] for row in E]
        if all(d >= 1 for row in second_differences(table) for d in row):
            return table
        return None

    smallest = min(differences)
    scale = 1
    while scale * smallest < 1:
        scale *= 2
    while scale < common:
        candidate = rounded_table(scale)
        if candidate is not None:
            # Bisect back towards the last failing power of two
            low = scale // 2
            while scale - low > max(1, scale // 16):
                middle = (low + scale) // 2
                tighter = rounded_table(middle)
                if tighter is None:
                    low = middle
                else:
                    scale, candidate = middle, tighter
            logger.info(f"Rounded exponents with scale {scale} (common denominator {common})")
            return IntegerExponents(tuple(map(tuple, candidate)), Fraction(scale), 'rounded')
        scale *= 2
    exponents = tuple(tuple(int(e * common) for e in row) for row in E)
    return IntegerExponents(exponents, Fraction(common), 'exact')


def exponential_matrix(exponents: Sequence[Sequence[int]], base: Fraction) -> ExactMatrix:
    """b_ij = base ** e_ij, exactly."""
    base = Fraction(base)
    return ExactMatrix.from_rows([[base ** e for e in row] for row in exponents])


# ==================== TEST FIXTURE GENERATOR ====================

def random_tp(m: int, n: int, seed: int = 0) -> ExactMatrix:
    """
    Random TP matrix from a full elementary bidiagonal factorization with
    positive rational parameters drawn from seed.

    An N×N product with N = max(m, n) is built and its leading m×n block
    returned.
    """
    if m < 1 or n < 1:
        raise InputError(f"Dimensions must be positive, got {m}x{n}")
    rng = random.Random(seed)
    size = max(m, n)

    def draw() -> Fraction:
        return Fraction(rng.randint(1, 9), rng.randint(1, 9))

    product = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]

    def add_column(target: int, source: int, factor: Fraction):
        for row in product:
            row[target] += factor * row[source]

    # Lower factors L_i = I + l E_{i,i-1}, grouped (L_N..L_2)(L_N..L_3)...(L_N)
    for group in range(1, size):
        for i in range(size - 1, group - 1, -1):
            add_column(i - 1, i, draw())
    for j in range(size):
        factor = draw()
        for row in product:
            row[j] *= factor
    # Upper factors U_i = I + u E_{i-1,i}, grouped (U_N)(U_{N-1} U_N)...(U_2..U_N)
    for group in range(size - 1, 0, -1):
        for i in range(group, size):
            add_column(i, i - 1, draw())

    result = ExactMatrix.from_rows([row[:n] for row in product[:m]])
    if not initial_minors_positive(result)[0]:
        logger.error(f"random_tp produced a non-TP matrix for seed {seed}")
        raise PositivityError("Bidiagonal product failed TP verification", code='internal_error')
    return result


@dataclass(frozen=True)
class TpConstruction:
    """A TP matrix built as a Hadamard power of base ** E."""
    matrix: ExactMatrix
    exponents: IntegerExponents
    base: Fraction
    hadamard_exponent: int
    row_order: Tuple[int, ...] = ()
    col_order: Tuple[int, ...] = ()


def tp_from_exponents(
    E: Sequence[Sequence[Fraction]],
    base: Fraction = Fraction(2),
    cap: int = 64,
    ceiling: int = 4096,
) -> TpConstruction:
    """
    Exponentiate an exponent table with positive second differences and
    take the schedule-minimal Hadamard power that is TP. Entries equal to
    1 sit exactly at the zero exponents.
    """
    base = Fraction(base)
    if base <= 1:
        raise InputError(f"Exponential base must exceed 1, got {format_rational(base)}")
    exponents = integer_exponents(E, ceiling=ceiling)
    B = exponential_matrix(exponents.exponents, base)
    t = eventual_tp_exponent(B, cap=cap)
    logger.info(f"Exponential matrix became TP at Hadamard power {t} ({exponents.method} exponents)")
    return TpConstruction(hadamard_power(B, t), exponents, base, t)
