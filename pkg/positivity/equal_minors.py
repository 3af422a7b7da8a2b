"""
Equal 2×2 minors of 2×n TP matrices and realizations of outerplanar graphs.

A realization of a graph G is a 2×n TP matrix A with a labeling of the
vertices by columns such that every edge (u, v) selects a pair of columns
whose 2×2 minor equals the same alpha.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exact import ExactMatrix, all_minors_positive, format_rational, is_tp2, parse_rational
from .exceptions import InputError, PositivityError, PreconditionError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

BASE_COLUMNS = ((Fraction(1), Fraction(6)), (Fraction(2), Fraction(18)), (Fraction(1), Fraction(12)))
BASE_ALPHA = Fraction(6)


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ==================== ALPHA SETS ====================

@dataclass(frozen=True)
class AlphaSet:
    alpha: Fraction
    pairs: FrozenSet[Edge]

    def __post_init__(self):
        if self.alpha <= 0:
            raise InputError(f"alpha must be positive, got {format_rational(self.alpha)}")
        object.__setattr__(self, 'pairs', frozenset(self.pairs))


def _pair_minor(A: ExactMatrix, i: int, j: int) -> Fraction:
    return A.entry(1, i) * A.entry(2, j) - A.entry(1, j) * A.entry(2, i)


def alpha_set(A: ExactMatrix, alpha) -> AlphaSet:
    """Column pairs (i, j), i < j, with det A[1,2 | i,j] = alpha."""
    alpha = parse_rational(alpha)
    if A.rows != 2:
        raise InputError(f"alpha sets are defined for 2xn matrices, got {A.rows}x{A.cols}")
    is_tp, witness = is_tp2(A)
    if not is_tp:
        raise PreconditionError(
            f"Matrix is not TP (minor at cols {list(witness.cols)} = {format_rational(witness.value)})"
        )
    pairs = {(i, j) for i, j in combinations(range(1, A.cols + 1), 2) if _pair_minor(A, i, j) == alpha}
    return AlphaSet(alpha, frozenset(pairs))


@dataclass(frozen=True)
class Violation:
    pattern: int
    quadruple: Tuple[int, int, int, int]


def forbidden_quadruples(S: AlphaSet, n: int) -> List[Violation]:
    """
    Quadruples i < j < k < w where all four pairs of
    {(i,j),(i,k),(j,w),(k,w)} (pattern 1) or {(i,k),(i,w),(j,k),(j,w)}
    (pattern 2) lie in S. No TP matrix has such an alpha set.
    """
    pairs = S.pairs
    violations = []
    for i, j, k, w in combinations(range(1, n + 1), 4):
        if {(i, j), (i, k), (j, w), (k, w)} <= pairs:
            violations.append(Violation(1, (i, j, k, w)))
        if {(i, k), (i, w), (j, k), (j, w)} <= pairs:
            violations.append(Violation(2, (i, j, k, w)))
    return violations


def surviving_labelings(n: int, edges: Sequence[Edge]) -> List[Tuple[int, ...]]:
    """
    Labelings (vertex v -> column labeling[v-1]) under which the edge set
    hits no forbidden quadruple. An empty list proves the graph is not TP
    attainable.
    """
    edges = [_edge(u, v) for u, v in edges]
    survivors = []
    for labeling in permutations(range(1, n + 1)):
        image = AlphaSet(Fraction(1), frozenset(_edge(labeling[u - 1], labeling[v - 1]) for u, v in edges))
        if not forbidden_quadruples(image, n):
            survivors.append(labeling)
    return survivors


# ==================== OUTERPLANAR GRAPHS ====================

def _crosses(order_index: Dict[int, int], first: Edge, second: Edge) -> bool:
    if set(first) & set(second):
        return False
    a, b = sorted(order_index[v] for v in first)
    c, d = sorted(order_index[v] for v in second)
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class OuterplanarInput:
    """
    Outerplanar graph given by its outer-face cyclic order and chords. The
    edge set is the outer cycle together with the chords.
    """
    n: int
    outer_order: Tuple[int, ...]
    chords: FrozenSet[Edge]

    def __post_init__(self):
        order = tuple(int(v) for v in self.outer_order)
        if self.n < 2:
            raise InputError(f"Outerplanar graphs here need at least 2 vertices, got {self.n}")
        if sorted(order) != list(range(1, self.n + 1)):
            raise InputError(f"Outer-face order {list(order)} is not a permutation of 1..{self.n}")
        outer = self._outer_edges(order)
        chords = set()
        for u, v in self.chords:
            if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InputError(f"Invalid chord ({u},{v})")
            edge = _edge(u, v)
            if edge not in outer:
                chords.add(edge)
        index = {v: t for t, v in enumerate(order)}
        for first, second in combinations(sorted(chords), 2):
            if _crosses(index, first, second):
                raise InputError(f"Chords {first} and {second} cross")
        object.__setattr__(self, 'outer_order', order)
        object.__setattr__(self, 'chords', frozenset(chords))

    @staticmethod
    def _outer_edges(order: Sequence[int]) -> FrozenSet[Edge]:
        if len(order) == 2:
            return frozenset({_edge(order[0], order[1])})
        return frozenset(_edge(order[t], order[(t + 1) % len(order)]) for t in range(len(order)))

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._outer_edges(self.outer_order) | self.chords

    @property
    def is_maximal(self) -> bool:
        return self.n <= 3 or len(self.edges) == 2 * self.n - 3


def triangulate_outerplanar(graph: OuterplanarInput) -> OuterplanarInput:
    """Add chords until every bounded face is a triangle; outer order unchanged."""
    chords = set(graph.chords)

    def split(polygon: List[int]):
        if len(polygon) <= 3:
            return
        position = {v: t for t, v in enumerate(polygon)}
        for u, v in sorted(chords):
            if u in position and v in position:
                a, b = sorted((position[u], position[v]))
                if b - a > 1 and not (a == 0 and b == len(polygon) - 1):
                    split(polygon[a:b + 1])
                    split(polygon[b:] + polygon[:a + 1])
                    return
        # Chord-free face: fan from its first vertex
        for t in range(2, len(polygon) - 1):
            chords.add(_edge(polygon[0], polygon[t]))

    split(list(graph.outer_order))
    return OuterplanarInput(graph.n, graph.outer_order, frozenset(chords))


def outerplanar_order(n: int, edges: Sequence[Edge]) -> Optional[Tuple[int, ...]]:
    """
    A cyclic vertex order in which no two edges cross as chords, or None if
    the graph is not outerplanar. Tries every order.
    """
    edges = sorted({_edge(u, v) for u, v in edges})
    for order in permutations(range(1, n + 1)):
        index = {v: t for t, v in enumerate(order)}
        if not any(_crosses(index, e, f) for e, f in combinations(edges, 2)):
            return order
    return None


def random_maximal_outerplanar(n: int, seed: int = 0) -> OuterplanarInput:
    """Seeded random triangulated polygon with shuffled vertex names."""
    if n < 2:
        raise InputError(f"Need at least 2 vertices, got {n}")
    rng = random.Random(seed)
    names = list(range(1, n + 1))
    rng.shuffle(names)
    chords = set()

    def split(polygon: List[int]):
        if len(polygon) <= 3:
            return
        a = rng.randrange(len(polygon))
        candidates = [b for b in range(len(polygon)) if (b - a) % len(polygon) not in (0, 1, len(polygon) - 1)]
        b = rng.choice(candidates)
        a, b = sorted((a, b))
        chords.add(_edge(polygon[a], polygon[b]))
        split(polygon[a:b + 1])
        split(polygon[b:] + polygon[:a + 1])

    split(names)
    return OuterplanarInput(n, tuple(names), frozenset(chords))


# ==================== REALIZATION ====================

@dataclass(frozen=True)
class Realization:
    matrix: ExactMatrix
    alpha: Fraction
    labeling: Dict[int, int]
    graph: OuterplanarInput
    rescalings: int = 0

    def column_of(self, vertex: int) -> int:
        return self.labeling[vertex]


def _det(p, q) -> Fraction:
    return p[0] * q[1] - p[1] * q[0]


def _rescale_until_dominant(columns: List[Tuple[Fraction, Fraction]]) -> Tuple[List[Tuple[Fraction, Fraction]], int]:
    """
    Rewrite every column as k p + l q over the first and last columns, then
    double p and halve q until p > q entrywise. Every 2×2 minor is kept.
    """
    p, q = columns[0], columns[-1]
    base = _det(p, q)
    coordinates = [(_det(c, q) / base, _det(p, c) / base) for c in columns]
    steps = 0
    while not (p[0] > q[0] and p[1] > q[1]):
        p = (2 * p[0], 2 * p[1])
        q = (q[0] / 2, q[1] / 2)
        steps += 1
    rescaled = [(k * p[0] + l * q[0], k * p[1] + l * q[1]) for k, l in coordinates]
    for (a, b) in combinations(range(len(columns)), 2):
        if _det(rescaled[a], rescaled[b]) != _det(columns[a], columns[b]):
            raise PositivityError("Rescaling changed a 2x2 minor", code='internal_error')
    return rescaled, steps


def _realize_maximal(order: List[int], edges: FrozenSet[Edge]) -> Tuple[List[Tuple[Fraction, Fraction]], List[int], int]:
    """Columns and clockwise column order for a maximal outerplanar graph."""
    if len(order) == 2:
        return list(BASE_COLUMNS[:2]), list(order), 0
    if len(order) == 3:
        return list(BASE_COLUMNS), list(order), 0

    degree = {v: sum(1 for e in edges if v in e) for v in order}
    position = next(t for t, v in enumerate(order) if degree[v] == 2)
    ear = order[position]
    before, after = order[position - 1], order[(position + 1) % len(order)]
    remaining = order[:position] + order[position + 1:]
    columns, labeling, rescalings = _realize_maximal(remaining, frozenset(e for e in edges if ear not in e))

    u, w = labeling.index(before), labeling.index(after)
    if w == u + 1:
        # Case a: the new column is the sum of its two neighbours
        merged = (columns[u][0] + columns[w][0], columns[u][1] + columns[w][1])
        return columns[:w] + [merged] + columns[w:], labeling[:w] + [ear] + labeling[w:], rescalings
    if u == len(labeling) - 1 and w == 0:
        # Case b: make the first column dominate the last, then prepend p - q
        columns, steps = _rescale_until_dominant(columns)
        p, q = columns[0], columns[-1]
        return [(p[0] - q[0], p[1] - q[1])] + columns, [ear] + labeling, rescalings + steps
    raise InputError(f"Neighbours {before} and {after} of ear {ear} are not consecutive")


def realize_outerplanar(graph: OuterplanarInput) -> Realization:
    """
    Realize an outerplanar graph: triangulate, then peel degree-2 vertices
    (first in outer order) and rebuild the 2×n matrix column by column.
    alpha stays 6 throughout.
    """
    triangulated = triangulate_outerplanar(graph)
    columns, order, rescalings = _realize_maximal(list(triangulated.outer_order), triangulated.edges)
    matrix = ExactMatrix.from_rows([[c[0] for c in columns], [c[1] for c in columns]])
    labeling = {vertex: column for column, vertex in enumerate(order, start=1)}
    logger.info(f"Realized {graph.n}-vertex outerplanar graph with {rescalings} rescaling steps")
    return Realization(matrix, BASE_ALPHA, labeling, triangulated, rescalings)


@dataclass(frozen=True)
class RealizationCheck:
    tp_by_contiguity: bool
    tp_by_enumeration: bool
    missing_edges: Tuple[Edge, ...]

    @property
    def ok(self) -> bool:
        return self.tp_by_contiguity and self.tp_by_enumeration and not self.missing_edges


def check_realization(realization: Realization, edges: Sequence[Edge] = None) -> RealizationCheck:
    """Verify TP two ways and that every edge lands in the alpha set."""
    A = realization.matrix
    edges = realization.graph.edges if edges is None else edges
    contiguous, _ = is_tp2(A)
    exhaustive, _ = all_minors_positive(A)
    missing = tuple(sorted(
        _edge(u, v) for u, v in edges
        if _pair_minor(A, *sorted((realization.column_of(u), realization.column_of(v)))) != realization.alpha
    ))
    return RealizationCheck(contiguous, exhaustive, missing)
