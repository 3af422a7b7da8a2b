"""Exact phase-one simplex over the rationals (Bland's rule)."""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from .exceptions import InputError

logger = logging.getLogger(__name__)


def find_feasible_point(
    constraints: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    num_vars: int,
) -> Optional[List[Fraction]]:
    """
    Return x >= 0 with constraints · x = rhs, or None if no such x exists.

    Phase one with one artificial variable per row; the entering column is
    the lowest-index column with positive reduced cost and ties in the
    ratio test go to the lowest basic index, so the method cannot cycle.
    """
    if any(len(row) != num_vars for row in constraints) or len(constraints) != len(rhs):
        raise InputError("Constraint system has inconsistent dimensions")
    m = len(constraints)
    if m == 0:
        return [Fraction(0)] * num_vars

    width = num_vars + m + 1
    tableau = []
    for i, (row, b) in enumerate(zip(constraints, rhs)):
        sign = -1 if b < 0 else 1
        line = [Fraction(sign * a) for a in row] + [Fraction(0)] * m + [Fraction(sign * b)]
        line[num_vars + i] = Fraction(1)
        tableau.append(line)
    basis = [num_vars + i for i in range(m)]
    cost = [sum((tableau[i][j] for i in range(m)), Fraction(0)) for j in range(width)]
    for i in range(m):
        cost[num_vars + i] = Fraction(0)

    pivots = 0
    while True:
        entering = next((j for j in range(num_vars) if cost[j] > 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving is None:
            # Phase-one objective is bounded below by zero
            break
        _pivot(tableau, cost, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    logger.debug(f"Phase one finished after {pivots} pivots, residual {cost[-1]}")
    if cost[-1] != 0:
        return None
    point = [Fraction(0)] * num_vars
    for i, var in enumerate(basis):
        if var < num_vars:
            point[var] = tableau[i][-1]
    return point


def _pivot(tableau: List[List[Fraction]], cost: List[Fraction], row: int, col: int):
    pivot_row = tableau[row]
    pivot = pivot_row[col]
    tableau[row] = pivot_row = [a / pivot for a in pivot_row]
    for i, line in enumerate(tableau):
        if i != row and line[col] != 0:
            factor = line[col]
            tableau[i] = [a - factor * p for a, p in zip(line, pivot_row)]
    if cost[col] != 0:
        factor = cost[col]
        cost[:] = [a - factor * p for a, p in zip(cost, pivot_row)]
