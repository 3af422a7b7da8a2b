"""
Bruhat order on permutations and on the classes A(R,S) of 0-1 matrices
with prescribed line sums, and its link with cycle positivity.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, List, Tuple

from .configurations import BinaryConfiguration
from .cycles import CycleCollection, OrthogonalCycle, collection_is_positive
from .exceptions import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """One-line notation, 1-based: images[i-1] = p(i)."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InputError(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        """"3412" for n < 10, or comma-separated images such as "10,2,...,1"."""
        text = text.strip()
        try:
            if ',' in text:
                return cls(tuple(int(x) for x in text.split(',')))
            return cls(tuple(int(c) for c in text))
        except ValueError:
            raise InputError(f"Cannot read permutation {text!r}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> 'Permutation':
        inverse = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            inverse[image - 1] = i
        return Permutation(tuple(inverse))

    def __str__(self):
        if self.size < 10:
            return ''.join(map(str, self.images))
        return ','.join(map(str, self.images))


@dataclass(frozen=True)
class RSClass:
    """A(R,S): 0-1 matrices with row sums R and column sums S."""
    R: Tuple[int, ...]
    S: Tuple[int, ...]

    def __post_init__(self):
        if any(r < 0 for r in self.R) or any(s < 0 for s in self.S):
            raise InputError("Line sums must be nonnegative")
        if sum(self.R) != sum(self.S):
            raise InputError(f"Row sums total {sum(self.R)} but column sums total {sum(self.S)}")

    @classmethod
    def of(cls, M: BinaryConfiguration) -> 'RSClass':
        return cls(tuple(M.row_sums()), tuple(M.col_sums()))

    def contains(self, M: BinaryConfiguration) -> bool:
        return tuple(M.row_sums()) == tuple(self.R) and tuple(M.col_sums()) == tuple(self.S)


def permutation_matrix(p: Permutation) -> BinaryConfiguration:
    return BinaryConfiguration.from_positions(p.size, p.size, [(i, p(i)) for i in range(1, p.size + 1)])


def _prefix_counts(M: BinaryConfiguration) -> List[List[int]]:
    """counts[i][j] = ones of M in rows 1..i, cols 1..j."""
    counts = [[0] * (M.cols + 1) for _ in range(M.rows + 1)]
    for i in range(1, M.rows + 1):
        for j in range(1, M.cols + 1):
            counts[i][j] = counts[i - 1][j] + counts[i][j - 1] - counts[i - 1][j - 1] + M.bit(i, j)
    return counts


def _corner_counts(M: BinaryConfiguration) -> List[List[int]]:
    """counts[i][j] = ones of M in rows > i, cols > j."""
    counts = [[0] * (M.cols + 2) for _ in range(M.rows + 2)]
    for i in range(M.rows, 0, -1):
        for j in range(M.cols, 0, -1):
            counts[i - 1][j - 1] = (
                counts[i][j - 1] + counts[i - 1][j] - counts[i][j] + M.bit(i, j)
            )
    return [row[:M.cols + 1] for row in counts[:M.rows + 1]]


def bruhat_leq_perm(p: Permutation, q: Permutation) -> bool:
    """p <= q iff every prefix rectangle of M(p) holds at least as many ones as M(q)."""
    if p.size != q.size:
        raise InputError(f"Permutations of different sizes {p.size} and {q.size}")
    mine, theirs = _prefix_counts(permutation_matrix(p)), _prefix_counts(permutation_matrix(q))
    return all(a >= b for row_a, row_b in zip(mine, theirs) for a, b in zip(row_a, row_b))


@dataclass(frozen=True)
class BruhatComparison:
    dominates: bool
    strict: bool

    @property
    def holds(self) -> bool:
        return self.dominates and self.strict


def compare_ars(A1: BinaryConfiguration, A2: BinaryConfiguration, rs_class: RSClass) -> BruhatComparison:
    """Complementary-corner dominance of A1 over A2, and whether it is strict anywhere."""
    for label, M in (('first', A1), ('second', A2)):
        if not rs_class.contains(M):
            raise InputError(
                f"The {label} matrix has line sums {M.row_sums()} / {M.col_sums()}, "
                f"not {list(rs_class.R)} / {list(rs_class.S)}"
            )
    mine, theirs = _corner_counts(A1), _corner_counts(A2)
    pairs = [(a, b) for row_a, row_b in zip(mine, theirs) for a, b in zip(row_a, row_b)]
    return BruhatComparison(all(a >= b for a, b in pairs), any(a > b for a, b in pairs))


def bruhat_leq_ars(A1: BinaryConfiguration, A2: BinaryConfiguration, rs_class: RSClass) -> bool:
    return compare_ars(A1, A2, rs_class).dominates


# ==================== CYCLES AS PERMUTATION PAIRS ====================

@dataclass(frozen=True)
class PermutationPair:
    pi: Permutation
    sigma: Permutation
    normalized: OrthogonalCycle
    p0_left_of_p1: bool
    row_labels: Tuple[int, ...]
    col_labels: Tuple[int, ...]


def cycle_to_permutation_pair(cycle: OrthogonalCycle) -> PermutationPair:
    """
    Split a two-regular cycle into pi (even positions) and sigma (odd
    positions).

    Rows and columns the cycle never visits are dropped, so a cycle on k
    rows gives permutations of 1..k. The cycle is rotated so p_0 is the
    even position of the topmost row; it is never reversed, since reversal
    swaps pi and sigma.
    """
    positions = cycle.positions
    if len(set(positions)) != len(positions):
        raise InputError("Cycle repeats a position")
    rows = sorted({r for r, _ in positions})
    cols = sorted({c for _, c in positions})
    for r in rows:
        if sum(1 for p in positions if p[0] == r) != 2:
            raise InputError(f"Cycle does not visit row {r} exactly twice")
    for c in cols:
        if sum(1 for p in positions if p[1] == c) != 2:
            raise InputError(f"Cycle does not visit column {c} exactly twice")
    if len(rows) != len(cols):
        raise InputError("Cycle visits different numbers of rows and columns")

    top = next(t for t in range(0, len(positions), 2) if positions[t][0] == rows[0])
    normalized = cycle.rotated(top)
    row_rank = {r: k for k, r in enumerate(rows, start=1)}
    col_rank = {c: k for k, c in enumerate(cols, start=1)}
    pi, sigma = [0] * len(rows), [0] * len(rows)
    for r, c in normalized.evens:
        pi[row_rank[r] - 1] = col_rank[c]
    for r, c in normalized.odds:
        sigma[row_rank[r] - 1] = col_rank[c]
    p0, p1 = normalized.positions[0], normalized.positions[1]
    return PermutationPair(
        Permutation(tuple(pi)), Permutation(tuple(sigma)), normalized,
        p0[1] < p1[1], tuple(rows), tuple(cols),
    )


def cycle_positive_iff_bruhat(cycle: OrthogonalCycle) -> Tuple[bool, bool]:
    """(cycle is positive, pi <= sigma); the two always agree."""
    pair = cycle_to_permutation_pair(cycle)
    return collection_is_positive(CycleCollection((cycle,))), bruhat_leq_perm(pair.pi, pair.sigma)


def cycle_from_permutation_pair(pi: Permutation, sigma: Permutation) -> OrthogonalCycle:
    """
    Walk the cycle whose even positions are (r, pi(r)) and odd positions
    (r, sigma(r)), starting from row 1. Input error unless the walk visits
    every row.
    """
    if pi.size != sigma.size:
        raise InputError("Permutations of different sizes")
    n = pi.size
    pi_inverse = pi.inverse()
    positions, row = [], 1
    for _ in range(n):
        positions.extend([(row, pi(row)), (row, sigma(row))])
        row = pi_inverse(sigma(row))
        if row == 1:
            break
    if len(positions) != 2 * n or row != 1:
        raise InputError(f"pi={pi} and sigma={sigma} do not form a single cycle")
    return OrthogonalCycle(tuple(positions), (n, n))


def enumerate_two_regular_cycles(n: int) -> Iterator[OrthogonalCycle]:
    """Every cycle visiting each row and column of an n×n frame twice, p_0 in row 1."""
    for pi_images in permutations(range(1, n + 1)):
        pi = Permutation(pi_images)
        pi_inverse = pi.inverse()
        for sigma_images in permutations(range(1, n + 1)):
            sigma = Permutation(sigma_images)
            row, steps = 1, 0
            while True:
                row = pi_inverse(sigma(row))
                steps += 1
                if row == 1:
                    break
            if steps == n and all(pi(r) != sigma(r) for r in range(1, n + 1)):
                yield cycle_from_permutation_pair(pi, sigma)


# ==================== COLLECTIONS ====================

@dataclass(frozen=True)
class CollectionComparison:
    even_matrix: BinaryConfiguration
    odd_matrix: BinaryConfiguration
    is_positive: bool
    comparison: BruhatComparison

    @property
    def sides_agree(self) -> bool:
        return self.is_positive == self.comparison.holds


def collection_to_matrix_pair(collection: CycleCollection) -> CollectionComparison:
    """
    M2 collects the even positions and M1 the odd positions of every cycle.
    The collection is positive exactly when M2 <= M1 with a strict corner
    inequality somewhere; strictness is checked, not assumed.
    """
    m, n = collection.frame
    evens = [p for c in collection.cycles for p in c.evens]
    odds = [p for c in collection.cycles for p in c.odds]
    if len(set(evens)) != len(evens):
        raise InputError("Even positions repeat across the collection")
    if len(set(odds)) != len(odds):
        raise InputError("Odd positions repeat across the collection")
    M2 = BinaryConfiguration.from_positions(m, n, evens)
    M1 = BinaryConfiguration.from_positions(m, n, odds)
    comparison = compare_ars(M2, M1, RSClass.of(M2))
    return CollectionComparison(M2, M1, collection_is_positive(collection), comparison)
