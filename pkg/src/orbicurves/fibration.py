"""Orbifold base of a fibration and local generators of orbifold symmetric differentials."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from orbicurves.core import Multiplicity, ONE, RationalLike, to_rational
from orbicurves.errors import DuplicateLabel, InvalidInput


@dataclass(frozen=True)
class FiberComponentData:
    """A component D_k of f*(E): its multiplicity t in f*(E) and its Delta-multiplicity."""

    t: int
    m_delta: Multiplicity = ONE

    def __post_init__(self):
        try:
            integral = not isinstance(self.t, bool) and int(self.t) == self.t
        except (TypeError, ValueError):
            integral = False
        if not integral or self.t < 1:
            raise InvalidInput(f"Fiber multiplicity t must be a positive integer, got {self.t!r}")
        object.__setattr__(self, "m_delta", Multiplicity.of(self.m_delta))


@dataclass(frozen=True)
class BaseDivisorRecord:
    label: str
    components: Tuple[FiberComponentData, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if not components:
            raise InvalidInput(f"Divisor {self.label!r} needs at least one fiber component")
        object.__setattr__(self, "components", components)


def base_multiplicity(r: BaseDivisorRecord) -> Multiplicity:
    """inf over components of t * m_Delta (infinite only when every term is)."""
    return min(component.m_delta.times(component.t) for component in r.components)


def orbifold_base(records: Sequence[BaseDivisorRecord]) -> List[Tuple[str, Fraction]]:
    labels = [r.label for r in records]
    duplicates = sorted({label for label in labels if labels.count(label) > 1})
    if duplicates:
        raise DuplicateLabel(f"Duplicate divisor labels: {', '.join(duplicates)}")

    base = []
    for record in records:
        m = base_multiplicity(record)
        if m != ONE:
            base.append((record.label, m.coefficient))
    return base


def _coefficients(a: Sequence[RationalLike]) -> List[Fraction]:
    values = [to_rational(x) for x in a]
    if any(not 0 <= x <= 1 for x in values):
        raise InvalidInput(f"Boundary coefficients must lie in [0, 1], got {[str(x) for x in values]}")
    return values


def _compositions(m: int, n: int) -> List[Tuple[int, ...]]:
    """All n-tuples of nonnegative integers summing to m, lexicographically decreasing."""
    result = []
    # stars and bars: positions of the n-1 bars among m+n-1 slots
    for bars in itertools.combinations(range(m + n - 1), n - 1):
        cuts = (-1,) + bars + (m + n - 1,)
        result.append(tuple(cuts[i + 1] - cuts[i] - 1 for i in range(n)))
    return sorted(result, reverse=True)


def symdiff_generators(a: Sequence[RationalLike], m: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Generators dx^(N) of S^m(Omega^1(X | Delta)) with their pole orders floor(a_j N_j)."""
    coefficients = _coefficients(a)
    if m < 1 or not coefficients:
        raise InvalidInput(f"Need m >= 1 and at least one coordinate, got m={m}, n={len(coefficients)}")
    return [
        (N, tuple(math.floor(aj * Nj) for aj, Nj in zip(coefficients, N)))
        for N in _compositions(m, len(coefficients))
    ]


def canonical_power_exponents(a: Sequence[RationalLike], m: int) -> List[int]:
    """Pole orders of the generator of m(K_X + Delta): floor(a_j m) for each coordinate."""
    coefficients = _coefficients(a)
    if m < 1:
        raise InvalidInput(f"m must be positive, got {m}")
    return [math.floor(aj * m) for aj in coefficients]
