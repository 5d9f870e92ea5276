"""Unit-fraction combinatorics behind the Fano types of P^n.

Every search here is exact (``Fraction``) and returns tuples in lexicographic
order, so repeated runs produce identical output.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from orbicurves.core import Classification, OrbifoldType, classify
from orbicurves.errors import InvalidInput, NotDeficitForm, SearchLimitExceeded

logger = logging.getLogger(__name__)

DEFAULT_BOUND_LIMIT = 5


@dataclass(frozen=True)
class UnitFractionTuple:
    """Nondecreasing integers a_j >= 2, read as the sum of the 1/a_j."""

    terms: Tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(a) for a in self.terms)
        if any(a < 2 for a in terms):
            raise InvalidInput(f"Unit fraction denominators must be >= 2, got {terms}")
        object.__setattr__(self, "terms", tuple(sorted(terms)))

    @property
    def sum(self) -> Fraction:
        return sum((Fraction(1, a) for a in self.terms), Fraction(0))

    @property
    def last(self) -> int:
        return self.terms[-1] if self.terms else 2

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)


class TailBound(Enum):
    UNBOUNDED = "Unbounded"
    NO_TAIL = "NoTail"


def deficit_denominator(total: Fraction) -> Optional[int]:
    """b with total = 1 - 1/b and b >= 2 integral, else None."""
    gap = 1 - total
    if gap <= 0 or gap.numerator != 1 or gap.denominator < 2:
        return None
    return gap.denominator


def sylvester_extend(t: UnitFractionTuple, steps: int) -> UnitFractionTuple:
    """Append ``steps`` terms b+1 while keeping sum = 1 - 1/b, with b <- b(b+1)."""
    if steps <= 0:
        raise InvalidInput(f"steps must be positive, got {steps}")
    b = deficit_denominator(t.sum)
    if b is None:
        raise NotDeficitForm(f"Sum {t.sum} of {t.terms} is not of the form 1 - 1/b", sum=t.sum)

    terms = list(t.terms)
    for _ in range(steps):
        terms.append(b + 1)
        b *= b + 1
    return UnitFractionTuple(tuple(terms))


def max_fano_tail(prefix: UnitFractionTuple) -> Union[int, TailBound]:
    """Largest m >= max(last, 2) with sum(prefix) + 1/m > 1."""
    total = prefix.sum
    if total >= 1:
        return TailBound.UNBOUNDED
    # strict inequality: m < 1/(1 - total)
    largest = math.ceil(1 / (1 - total)) - 1
    if largest < max(prefix.last, 2):
        return TailBound.NO_TAIL
    return largest


def tail_bound(N: int, bound: Optional[Fraction] = None) -> int:
    """Bound 1 + 1/(1 - B_{N-1}) on the last term of a maximal sub-unit N-tuple."""
    if N < 1:
        raise InvalidInput(f"N must be positive, got {N}")
    previous = bound if bound is not None else (compute_bound_BN(N - 1) if N > 1 else Fraction(0))
    return math.floor(1 + 1 / (1 - previous))


def compute_bound_BN(N: int, limit: int = DEFAULT_BOUND_LIMIT) -> Fraction:
    """B_N = max sum(1/a_j) over nondecreasing N-tuples of integers >= 2 with sum < 1.

    Branch and bound seeded with the greedy (Sylvester) value. The last term is
    always the smallest one keeping the sum below 1: any larger last term can be
    decreased, which strictly raises the sum.
    """
    if N < 1:
        raise InvalidInput(f"N must be positive, got {N}")
    if N > limit:
        raise SearchLimitExceeded(f"N = {N} exceeds the search limit {limit}", N=N, limit=limit)

    greedy = sylvester_extend(UnitFractionTuple((2,)), N - 1).sum if N > 1 else Fraction(1, 2)
    best = [greedy]
    visited = [0]

    def search(partial: Fraction, previous: int, remaining: int) -> None:
        visited[0] += 1
        first = max(previous, math.floor(1 / (1 - partial)) + 1)
        if remaining == 1:
            candidate = partial + Fraction(1, first)
            if candidate > best[0]:
                best[0] = candidate
            return
        a = first
        # remaining terms are each at most 1/a
        while partial + Fraction(remaining, a) > best[0]:
            search(partial + Fraction(1, a), a, remaining - 1)
            a += 1

    search(Fraction(0), 2, N)
    logger.debug("B_%s search visited %s nodes", N, visited[0])
    return best[0]


def subunit_prefixes(N: int, cap: int) -> List[UnitFractionTuple]:
    """All nondecreasing N-tuples with entries in [2, cap] and sum < 1."""
    if N < 1:
        raise InvalidInput(f"N must be positive, got {N}")
    found: List[UnitFractionTuple] = []

    def search(prefix: Tuple[int, ...], partial: Fraction) -> None:
        if len(prefix) == N:
            found.append(UnitFractionTuple(prefix))
            return
        remaining = N - len(prefix)
        for a in range(prefix[-1] if prefix else 2, cap + 1):
            # the cheapest completion repeats the largest allowed term
            if partial + Fraction(1, a) + Fraction(remaining - 1, cap) >= 1:
                continue
            search(prefix + (a,), partial + Fraction(1, a))

    search((), Fraction(0))
    return found


def enumerate_types(n: int, k: int, cap: int, kind: Classification) -> List[OrbifoldType]:
    """Integral types (m_0 <= ... <= m_{k-1}) on P^n with entries in [2, cap] of the given class."""
    if k < 0 or cap < 2:
        raise InvalidInput(f"Need k >= 0 and cap >= 2, got k={k}, cap={cap}")
    # classify(t) is Fano iff sum(1/m_j) > k - (n+1)
    threshold = Fraction(k - (n + 1))
    found: List[OrbifoldType] = []

    def search(prefix: Tuple[int, ...], partial: Fraction) -> None:
        remaining = k - len(prefix)
        if remaining == 0:
            t = OrbifoldType(n, prefix)
            if classify(t) is kind:
                found.append(t)
            return
        for a in range(prefix[-1] if prefix else 2, cap + 1):
            upper = partial + Fraction(remaining, a)
            if kind is not Classification.GENERAL_TYPE and upper < threshold:
                break
            if kind is Classification.FANO and upper == threshold:
                break
            lower = partial + Fraction(1, a) + Fraction(remaining - 1, cap)
            if kind is Classification.GENERAL_TYPE and lower >= threshold:
                continue
            if kind is Classification.TRIVIAL_CANONICAL and lower > threshold:
                continue
            search(prefix + (a,), partial + Fraction(1, a))

    search((), Fraction(0))
    logger.info("Enumerated %s %s types on P^%s with k=%s, cap=%s", len(found), kind.value, n, k, cap)
    return found


def extension_family_type(n: int) -> OrbifoldType:
    """(n, ..., n, n+1, n(n+1)+1, tail): n-1 copies of n extended twice, then the largest Fano tail."""
    if n < 2:
        raise InvalidInput(f"The extension family needs n >= 2, got {n}")
    prefix = sylvester_extend(UnitFractionTuple((n,) * (n - 1)), 2)
    tail = max_fano_tail(prefix)
    if not isinstance(tail, int):
        raise InvalidInput(f"No finite Fano tail for prefix {prefix.terms}")
    return OrbifoldType(n, prefix.terms + (tail,))


def unit_sum(terms: Sequence[int]) -> Fraction:
    return sum((Fraction(1, a) for a in terms), Fraction(0))
