"""Delta-rational and Delta-elliptic curves, and which Fano types they prove uniruled."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from orbicurves.core import Classification, Multiplicity, OrbifoldType, ONE, canonical_degree, classify
from orbicurves.enumfrac import unit_sum
from orbicurves.errors import (
    DivisibilityViolation,
    IndexOutOfRange,
    InfiniteMultiplicity,
    InvalidInput,
    UnsupportedMultiplicity,
    WrongCount,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContactRecord:
    """A point of the curve and the boundary divisors it touches, with contact orders."""

    point_id: str
    contacts: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        contacts = tuple((int(j), int(order)) for j, order in self.contacts)
        if not contacts:
            raise InvalidInput(f"Point {self.point_id!r} has no contacts")
        indices = [j for j, _ in contacts]
        if len(set(indices)) != len(indices):
            raise InvalidInput(f"Point {self.point_id!r} lists a divisor twice")
        if any(order < 1 for _, order in contacts):
            raise InvalidInput(f"Point {self.point_id!r} has a non-positive contact order")
        object.__setattr__(self, "contacts", contacts)


@dataclass(frozen=True)
class MarkedCurve:
    genus: int
    records: Tuple[ContactRecord, ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise InvalidInput(f"Genus must be nonnegative, got {self.genus}")
        records = tuple(self.records)
        ids = [r.point_id for r in records]
        if len(set(ids)) != len(ids):
            raise InvalidInput("Contact points must be pairwise distinct")
        object.__setattr__(self, "records", records)


@dataclass(frozen=True)
class CurveOrbifoldDivisor:
    genus: int
    points: Tuple[Tuple[str, Multiplicity], ...]

    @property
    def degree(self) -> Fraction:
        """deg(K_C + Delta_g) = 2g - 2 + sum(1 - 1/m)."""
        return 2 * self.genus - 2 + sum((m.coefficient for _, m in self.points), Fraction(0))

    @property
    def is_empty(self) -> bool:
        return all(m == ONE for _, m in self.points)

    def to_json(self) -> list:
        return [{"point": point, "multiplicity": m.to_json()} for point, m in self.points]


class CurveKind(str, Enum):
    DELTA_RATIONAL = "DeltaRational"
    DELTA_ELLIPTIC = "DeltaElliptic"
    NEITHER = "Neither"


def delta_g(c: MarkedCurve, t: OrbifoldType, virtual: bool = False) -> CurveOrbifoldDivisor:
    """Per point, the max over touched divisors of m_j/t (at least 1 unless virtual)."""
    points = []
    for record in c.records:
        candidates = []
        for j, order in record.contacts:
            if not 0 <= j < t.k:
                raise IndexOutOfRange(f"Divisor index {j} out of range for {t.k} multiplicities", index=j)
            quotient = t.mults[j].divided_by(order)
            candidates.append(quotient if virtual else quotient.at_least_one())
        points.append((record.point_id, max(candidates)))
    return CurveOrbifoldDivisor(c.genus, tuple(points))


def curve_kind(c: MarkedCurve, t: OrbifoldType, virtual: bool = False) -> Tuple[CurveKind, Fraction]:
    degree = delta_g(c, t, virtual).degree
    if degree < 0 and c.genus == 0:
        return CurveKind.DELTA_RATIONAL, degree
    if degree == 0 and c.genus <= 1:
        return CurveKind.DELTA_ELLIPTIC, degree
    return CurveKind.NEITHER, degree


def is_delta_nice(c: MarkedCurve, t: OrbifoldType) -> bool:
    return delta_g(c, t, virtual=False).is_empty


def rnc_curve(t: OrbifoldType) -> MarkedCurve:
    """Degree-n rational normal curve meeting each of the n+2 hyperplanes once, with contact n."""
    if t.k != t.n + 2:
        raise WrongCount(f"Need n+2 = {t.n + 2} multiplicities, got {t.k}", n=t.n, k=t.k)
    return MarkedCurve(0, tuple(ContactRecord(f"a{j}", ((j, t.n),)) for j in range(t.k)))


def line_curve(n: int, hits: Sequence[int]) -> MarkedCurve:
    """A general line meeting the listed hyperplanes transversally at distinct points."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInput(f"Dimension must be a positive integer, got {n!r}")
    if len(set(hits)) != len(hits):
        raise InvalidInput(f"Hyperplane indices must be distinct, got {list(hits)}")
    if any(j < 0 for j in hits):
        raise IndexOutOfRange(f"Negative hyperplane index in {list(hits)}")
    return MarkedCurve(0, tuple(ContactRecord(f"h{j}", ((j, 1),)) for j in hits))


def rnc_actual_kind(t: OrbifoldType) -> CurveKind:
    """Kind of the rational normal curve itself, from sum 1/max(m_j, n)."""
    if t.k != t.n + 2:
        raise WrongCount(f"Need n+2 = {t.n + 2} multiplicities, got {t.k}", n=t.n, k=t.k)
    if any(m.is_infinite for m in t.mults):
        raise InfiniteMultiplicity(f"{t} has an infinite multiplicity")
    total = sum((1 / max(m.value, Fraction(t.n)) for m in t.mults), Fraction(0))
    if total > 1:
        return CurveKind.DELTA_RATIONAL
    if total == 1:
        return CurveKind.DELTA_ELLIPTIC
    return CurveKind.NEITHER


def rnc_actual_check(t: OrbifoldType) -> bool:
    return rnc_actual_kind(t) is CurveKind.DELTA_RATIONAL


class VerdictStatus(str, Enum):
    NOT_FANO = "NotFano"
    PROVABLE = "Provable"
    EXCEPTIONAL = "Exceptional"


class Method(str, Enum):
    FEW_HYPERPLANES = "FewHyperplanes"
    PENCIL_INDUCTION = "PencilInduction"
    RATIONAL_NORMAL_CURVE = "RationalNormalCurve"
    TANGENT_CONIC = "TangentConic"


@dataclass(frozen=True)
class UniruledVerdict:
    status: VerdictStatus
    method: Optional[Method] = None

    def to_json(self) -> dict:
        payload = {"status": self.status.value}
        if self.method is not None:
            payload["method"] = self.method.value
        return payload


def _require_integral(t: OrbifoldType) -> None:
    for m in t.mults:
        if m.is_infinite or not m.is_integral or m.value < 2:
            raise UnsupportedMultiplicity(f"Uniruledness needs integral multiplicities >= 2, got {m} in {t}")


def uniruledness_verdict(t: OrbifoldType) -> UniruledVerdict:
    """Try, in order: few hyperplanes, tangent conics, pencil induction, rational normal curves."""
    _require_integral(t)
    if classify(t) is not Classification.FANO:
        return UniruledVerdict(VerdictStatus.NOT_FANO)
    if t.k <= t.n + 1:
        # lines through a point of the intersection of the hyperplanes
        return UniruledVerdict(VerdictStatus.PROVABLE, Method.FEW_HYPERPLANES)
    if t.k > t.n + 2:
        return UniruledVerdict(VerdictStatus.EXCEPTIONAL)
    if t.n == 2:
        return UniruledVerdict(VerdictStatus.PROVABLE, Method.TANGENT_CONIC)
    if t.n >= 3:
        # pencil through H_n and H_{n+1}: drop the second largest entry
        reduced = t.drop(t.n)
        if reduced.reciprocal_sum > 1 and uniruledness_verdict(reduced).status is VerdictStatus.PROVABLE:
            return UniruledVerdict(VerdictStatus.PROVABLE, Method.PENCIL_INDUCTION)
    if rnc_actual_check(t):
        return UniruledVerdict(VerdictStatus.PROVABLE, Method.RATIONAL_NORMAL_CURVE)
    return UniruledVerdict(VerdictStatus.EXCEPTIONAL)


@dataclass(frozen=True)
class ExceptionalFamily:
    prefix: Tuple[int, ...]
    min_tail: int

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "min_tail": self.min_tail}


@dataclass(frozen=True)
class ExceptionalCensus:
    sporadic: Tuple[OrbifoldType, ...]
    families: Tuple[ExceptionalFamily, ...]

    def to_json(self) -> dict:
        return {
            "sporadic": [[m.to_json() for m in t.mults] for t in self.sporadic],
            "families": [family.to_json() for family in self.families],
        }


def _exceptional(n: int, terms: Tuple[int, ...]) -> bool:
    return uniruledness_verdict(OrbifoldType(n, terms)).status is VerdictStatus.EXCEPTIONAL


def _family_min_tail(prefix: Tuple[int, ...]) -> Optional[int]:
    """Smallest m_4 from which (prefix, m_4) meets every exceptional condition on P^3."""
    without_largest = unit_sum(prefix[:3])
    starred = sum((Fraction(1, max(m, 3)) for m in prefix), Fraction(0))
    if without_largest >= 1 or starred >= 1:
        return None
    # sum without m_3 <= 1 and starred sum <= 1, both monotone in m_4
    return max(prefix[3], math.ceil(1 / (1 - without_largest)), math.ceil(1 / (1 - starred)))


def enumerate_exceptional_p3() -> ExceptionalCensus:
    """All Fano types on P^3 with five hyperplanes whose uniruledness no method proves.

    Prefixes whose first two or three reciprocals already reach 1 are skipped:
    pencil induction applies to them. A four-term prefix with sum < 1 leaves
    finitely many Fano tails (sporadic types); one with sum >= 1 gives a family.
    """
    n = 3
    sporadic: List[OrbifoldType] = []
    families: List[ExceptionalFamily] = []

    def search(prefix: Tuple[int, ...], partial: Fraction) -> None:
        if len(prefix) == 4:
            if partial >= 1:
                min_tail = _family_min_tail(prefix)
                if min_tail is not None and _exceptional(n, prefix + (min_tail,)):
                    families.append(ExceptionalFamily(prefix, min_tail))
                return
            # Fano tails: m_4 < 1/(1 - partial)
            upper = math.ceil(1 / (1 - partial)) - 1
            for tail in range(prefix[-1], upper + 1):
                if _exceptional(n, prefix + (tail,)):
                    sporadic.append(OrbifoldType(n, prefix + (tail,)))
            return
        remaining = 5 - len(prefix)
        a = prefix[-1] if prefix else 2
        # Fano needs partial + remaining/a > 1
        while partial + Fraction(remaining, a) > 1:
            if len(prefix) == 3 or partial + Fraction(1, a) < 1:
                search(prefix + (a,), partial + Fraction(1, a))
            a += 1

    search((), Fraction(0))
    logger.info("P^3 census: %s sporadic types, %s families", len(sporadic), len(families))
    return ExceptionalCensus(tuple(sporadic), tuple(families))


@dataclass(frozen=True)
class NiceFamilyDimension:
    expected_dimension: Fraction
    condition_count: Fraction

    @property
    def with_parametrizations(self) -> Fraction:
        return self.expected_dimension + 3


def expected_nice_family_dimension(n: int, d: int, t: OrbifoldType) -> NiceFamilyDimension:
    """-(K_X + Delta).C for a degree-d rational curve meeting each H_j with contact m_j."""
    if t.n != n:
        raise InvalidInput(f"Type lives on P^{t.n}, not P^{n}")
    if t.k > n + 2:
        raise WrongCount(f"At most n+2 = {n + 2} hyperplanes, got {t.k}", n=n, k=t.k)
    if d < 1:
        raise InvalidInput(f"Degree must be positive, got {d}")
    for m in t.mults:
        if not m.is_integral or d % m.as_int() != 0:
            raise DivisibilityViolation(f"Multiplicity {m} does not divide the degree {d}", m=m, d=d)
    condition_count = d * sum((m.coefficient for m in t.mults), Fraction(0))
    return NiceFamilyDimension(
        expected_dimension=-d * canonical_degree(t),
        condition_count=condition_count,
    )
