"""
Totally nonsingular fill of a 0-1 mask.

Given a mask with no 2×2 block of ones and a nonzero value b, build a
matrix that equals b exactly at the ones and is totally nonsingular.
Entries at the zeros are drawn from a lattice inside (b - eps, b + eps)
and the result is verified by exhaustive minor enumeration; a failed
draw is retried with the next values of the same seeded stream.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from django.conf import settings

from .configurations import BinaryConfiguration, has_all_ones_2x2
from .exact import ExactMatrix, MatrixClass, classify, format_rational, parse_rational
from .exceptions import BudgetExhausted, InputError, PreconditionError

logger = logging.getLogger(__name__)

# Perturbations are b + eps * r / LATTICE with r in [-(LATTICE-1), LATTICE-1] \ {0}
LATTICE = 64


@dataclass(frozen=True)
class TnsFillRequest:
    mask: BinaryConfiguration
    b: Fraction
    seed: int = 0
    eps: Optional[Fraction] = None
    retry_budget: int = 16

    def __post_init__(self):
        b = parse_rational(self.b)
        if b == 0:
            raise InputError("The prescribed value b must be nonzero")
        eps = abs(b) / 2 if self.eps is None else parse_rational(self.eps)
        if eps <= 0:
            raise InputError(f"Radius must be positive, got {format_rational(eps)}")
        if self.retry_budget < 1:
            raise InputError(f"Retry budget must be positive, got {self.retry_budget}")
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'eps', eps)


@dataclass(frozen=True)
class TnsFill:
    matrix: ExactMatrix
    attempts: int


def fill_to_tns(request: TnsFillRequest, exhaustive_cap: int = 10) -> TnsFill:
    """
    Fill the mask into a totally nonsingular matrix with value b at its ones.

    Raises PreconditionError if the mask has a 2×2 block of ones and
    BudgetExhausted if every draw in the retry budget produced a zero minor.
    """
    mask = request.mask
    has_block, witness = has_all_ones_2x2(mask)
    if has_block:
        rows, cols = witness
        raise PreconditionError(
            f"Mask has a 2x2 block of ones at rows {list(rows)} cols {list(cols)}; "
            f"no totally nonsingular matrix has equal entries there"
        )
    rng = random.Random(request.seed)
    b, eps = request.b, request.eps
    for attempt in range(1, request.retry_budget + 1):
        entries = []
        for bit in mask.bits:
            if bit:
                entries.append(b)
            else:
                r = rng.choice([k for k in range(-(LATTICE - 1), LATTICE) if k != 0])
                entries.append(b + eps * Fraction(r, LATTICE))
        candidate = ExactMatrix(mask.rows, mask.cols, tuple(entries))
        result = classify(candidate, MatrixClass('tns'), exhaustive_cap=exhaustive_cap)
        if result.member:
            logger.info(f"Totally nonsingular fill found on attempt {attempt}")
            return TnsFill(candidate, attempt)
        logger.info(
            f"Draw {attempt} has a zero minor at rows {list(result.witness.rows)} "
            f"cols {list(result.witness.cols)}, retrying"
        )
    raise BudgetExhausted(f"No totally nonsingular fill in {request.retry_budget} draws")


class TnsFillService:
    """Builds fill requests with the project's configured budgets."""

    def __init__(self):
        self._load_defaults()

    def _load_defaults(self):
        self.retry_budget = getattr(settings, 'TPM_TNS_RETRY_BUDGET', 16)
        self.size_warning = getattr(settings, 'TPM_TNS_SIZE_WARNING', 8)
        self.exhaustive_cap = getattr(settings, 'TPM_EXHAUSTIVE_MINOR_CAP', 10)

    def fill(self, mask: BinaryConfiguration, b, seed: int = 0, eps=None, retry_budget: int = None) -> TnsFill:
        if max(mask.rows, mask.cols) > self.size_warning:
            logger.warning(
                f"Filling a {mask.rows}x{mask.cols} mask: exhaustive verification "
                f"grows combinatorially beyond {self.size_warning}"
            )
        request = TnsFillRequest(
            mask=mask,
            b=b,
            seed=seed,
            eps=eps,
            retry_budget=retry_budget or self.retry_budget,
        )
        return fill_to_tns(request, exhaustive_cap=max(self.exhaustive_cap, self.size_warning))


def get_tns_fill_service() -> TnsFillService:
    """Factory function to get the fill service"""
    return TnsFillService()
