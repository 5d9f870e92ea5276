"""Exact data model: multiplicities, orbifold types and hyperplane arrangements on P^n.

All quantities are exact. ``Rational`` is :class:`fractions.Fraction`; exact
linear algebra (determinants, solves, inverses) goes through :mod:`sympy`.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

import sympy as sp

from orbicurves.errors import InvalidInput, NotGeneralPosition, UnsupportedMultiplicity, WrongCount

Rational = Fraction
RationalLike = Union[int, str, Fraction]

INFINITY_TOKENS = {"inf", "infinity", "+inf", "oo", "∞"}


def to_rational(value: RationalLike) -> Fraction:
    """Parse an int, Fraction or "p/q" string exactly; floats are refused."""
    if isinstance(value, bool):
        raise InvalidInput(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInput(f"Not a rational number: {value!r}") from e
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    raise InvalidInput(f"Not an exact rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@functools.total_ordering
@dataclass(frozen=True)
class Multiplicity:
    """A multiplicity m >= 1 or infinity; the boundary coefficient is 1 - 1/m.

    ``virtual`` multiplicities (quotients m/t on a curve) may fall below 1.
    """

    value: Optional[Fraction]
    virtual: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.value is None:
            return
        value = to_rational(self.value)
        object.__setattr__(self, "value", value)
        if value <= 0:
            raise InvalidInput(f"Multiplicity must be positive, got {format_rational(value)}")
        if not self.virtual and value < 1:
            raise InvalidInput(f"Multiplicity must be at least 1, got {format_rational(value)}")

    @classmethod
    def of(cls, value: Union["Multiplicity", RationalLike, float]) -> "Multiplicity":
        if isinstance(value, Multiplicity):
            return value
        if isinstance(value, float) and math.isinf(value) and value > 0:
            return INFINITY
        if isinstance(value, str) and value.strip().lower() in INFINITY_TOKENS:
            return INFINITY
        return cls(to_rational(value))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_integral(self) -> bool:
        return self.value is not None and self.value.denominator == 1

    @property
    def reciprocal(self) -> Fraction:
        return Fraction(0) if self.value is None else 1 / self.value

    @property
    def coefficient(self) -> Fraction:
        return 1 - self.reciprocal

    def as_int(self) -> int:
        if not self.is_integral:
            raise UnsupportedMultiplicity(f"Expected an integral multiplicity, got {self}")
        return self.value.numerator

    def divided_by(self, t: int) -> "Multiplicity":
        """The virtual multiplicity m/t; infinity stays infinite."""
        if t <= 0:
            raise InvalidInput(f"Contact order must be positive, got {t}")
        if self.value is None:
            return INFINITY
        return Multiplicity(self.value / t, virtual=True)

    def at_least_one(self) -> "Multiplicity":
        if self.value is not None and self.value < 1:
            return ONE
        return Multiplicity(self.value)

    def times(self, t: int) -> "Multiplicity":
        return INFINITY if self.value is None else Multiplicity(self.value * t, virtual=self.virtual)

    def _key(self) -> Tuple[int, Fraction]:
        return (1, Fraction(0)) if self.value is None else (0, self.value)

    def __lt__(self, other: "Multiplicity") -> bool:
        if not isinstance(other, Multiplicity):
            return NotImplemented
        return self._key() < other._key()

    def to_json(self) -> Union[int, str]:
        if self.value is None:
            return "inf"
        if self.value.denominator == 1:
            return self.value.numerator
        return format_rational(self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else format_rational(self.value)


INFINITY = Multiplicity(None)
ONE = Multiplicity(Fraction(1))


def parse_multiplicity(text: Union[int, str, Multiplicity]) -> Multiplicity:
    return Multiplicity.of(text)


class Classification(str, Enum):
    FANO = "Fano"
    TRIVIAL_CANONICAL = "TrivialCanonical"
    GENERAL_TYPE = "GeneralType"


@dataclass(frozen=True)
class OrbifoldType:
    """(P^n | Delta) with Delta supported on hyperplanes in general position."""

    n: int
    mults: Tuple[Multiplicity, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"Dimension must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "mults", tuple(sorted(Multiplicity.of(m) for m in self.mults)))

    @classmethod
    def parse(cls, n: int, text: str) -> "OrbifoldType":
        items = [item for item in text.replace(" ", "").split(",") if item]
        return cls(n, tuple(parse_multiplicity(item) for item in items))

    @property
    def k(self) -> int:
        return len(self.mults)

    @property
    def reciprocal_sum(self) -> Fraction:
        return sum((m.reciprocal for m in self.mults), Fraction(0))

    def drop(self, index: int) -> "OrbifoldType":
        """The type on P^{n-1} left after removing the entry at ``index``."""
        return OrbifoldType(self.n - 1, self.mults[:index] + self.mults[index + 1:])

    def to_json(self) -> dict:
        return {"n": self.n, "type": [m.to_json() for m in self.mults]}

    def __str__(self) -> str:
        return f"P^{self.n}({', '.join(str(m) for m in self.mults)})"


def canonical_degree(t: OrbifoldType) -> Fraction:
    """Degree of K + Delta in hyperplane units: -(n+1) + sum(1 - 1/m_j)."""
    return -(t.n + 1) + sum((m.coefficient for m in t.mults), Fraction(0))


def classify(t: OrbifoldType) -> Classification:
    degree = canonical_degree(t)
    if degree < 0:
        return Classification.FANO
    if degree == 0:
        return Classification.TRIVIAL_CANONICAL
    return Classification.GENERAL_TYPE


def is_logarithmic(t: OrbifoldType) -> bool:
    return all(m.is_infinite for m in t.mults)


Covector = Tuple[Fraction, ...]


def normalize_covector(entries: Iterable[RationalLike]) -> Covector:
    """Integral primitive representative with first nonzero entry positive."""
    values = [to_rational(x) for x in entries]
    if not any(values):
        raise InvalidInput("The zero covector does not define a hyperplane")
    scale = math.lcm(*(v.denominator for v in values))
    integers = [int(v * scale) for v in values]
    content = math.gcd(*integers)
    sign = 1 if next(x for x in integers if x) > 0 else -1
    return tuple(Fraction(sign * x // content) for x in integers)


def _to_sympy(rows: Sequence[Sequence[Fraction]]) -> sp.Matrix:
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row] for row in rows])


def _from_sympy(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    return _from_sympy(_to_sympy(rows).det())


@dataclass(frozen=True)
class ArrangementOrbifold:
    """Hyperplanes of P^n given by covectors, each with its multiplicity."""

    n: int
    hyperplanes: Tuple[Covector, ...]
    mults: Tuple[Multiplicity, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"Dimension must be a positive integer, got {self.n!r}")
        hyperplanes = tuple(normalize_covector(h) for h in self.hyperplanes)
        for h in hyperplanes:
            if len(h) != self.n + 1:
                raise InvalidInput(f"Covector {list(map(str, h))} needs {self.n + 1} homogeneous entries")
        mults = tuple(Multiplicity.of(m) for m in self.mults)
        if len(mults) != len(hyperplanes):
            raise InvalidInput(f"{len(hyperplanes)} hyperplanes but {len(mults)} multiplicities")
        object.__setattr__(self, "hyperplanes", hyperplanes)
        object.__setattr__(self, "mults", mults)

    @classmethod
    def standard(cls, n: int, mults: Sequence[Union[Multiplicity, RationalLike]]) -> "ArrangementOrbifold":
        """X_0, ..., X_n and X_0 + ... + X_n with the given multiplicities."""
        rows = [tuple(Fraction(int(i == j)) for i in range(n + 1)) for j in range(n + 1)]
        rows.append(tuple(Fraction(1) for _ in range(n + 1)))
        return cls(n, tuple(rows), tuple(mults))

    @property
    def k(self) -> int:
        return len(self.hyperplanes)

    @property
    def orbifold_type(self) -> OrbifoldType:
        return OrbifoldType(self.n, self.mults)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "hyperplanes": [[format_rational(x) for x in h] for h in self.hyperplanes],
            "mults": [m.to_json() for m in self.mults],
        }


def is_general_position(a: ArrangementOrbifold) -> bool:
    size = a.n + 1
    if a.k <= size:
        return _to_sympy(a.hyperplanes).rank() == a.k
    return all(determinant(subset) != 0 for subset in itertools.combinations(a.hyperplanes, size))


@dataclass(frozen=True)
class Homography:
    """Invertible projective change of coordinates X = M x."""

    matrix: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        matrix = tuple(tuple(to_rational(x) for x in row) for row in self.matrix)
        if any(len(row) != len(matrix) for row in matrix):
            raise InvalidInput("Homography matrix must be square")
        if determinant(matrix) == 0:
            raise InvalidInput("Homography matrix must be invertible")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls, n: int) -> "Homography":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n + 1)) for i in range(n + 1)))

    @property
    def determinant(self) -> Fraction:
        return determinant(self.matrix)

    def inverse(self) -> "Homography":
        inv = _to_sympy(self.matrix).inv()
        size = len(self.matrix)
        return Homography(tuple(tuple(_from_sympy(inv[i, j]) for j in range(size)) for i in range(size)))

    def apply_point(self, point: Sequence) -> tuple:
        """M x; works for exact and floating (complex) coordinates alike."""
        return tuple(sum(m * x for m, x in zip(row, point)) for row in self.matrix)

    def apply_covector(self, covector: Sequence[Fraction]) -> Covector:
        """The covector l M^{-1}, so that it vanishes on M x iff l vanishes on x."""
        inv = self.inverse().matrix
        size = len(inv)
        return tuple(sum((covector[i] * inv[i][j] for i in range(size)), Fraction(0)) for j in range(size))

    def to_json(self) -> list:
        return [[format_rational(x) for x in row] for row in self.matrix]


def standardize(a: ArrangementOrbifold) -> Tuple[Homography, ArrangementOrbifold]:
    """Move n+2 hyperplanes in general position to X_j = 0 and X_0 + ... + X_n = 0."""
    if a.k != a.n + 2:
        raise WrongCount(f"standardize needs n+2 = {a.n + 2} hyperplanes, got {a.k}", n=a.n, k=a.k)
    if not is_general_position(a):
        raise NotGeneralPosition("Hyperplanes are not in general position")

    basis = a.hyperplanes[:-1]
    # columns are the basis covectors: sum_j lambda_j l_j = l_{n+1}
    system = _to_sympy(basis).T
    rhs = _to_sympy([a.hyperplanes[-1]]).T
    solution = system.LUsolve(rhs)
    lambdas = [_from_sympy(solution[j, 0]) for j in range(a.n + 1)]
    if any(lam == 0 for lam in lambdas):
        raise NotGeneralPosition("Last hyperplane lies in the pencil of fewer than n+1 others")

    homography = Homography(tuple(tuple(lam * x for x in row) for lam, row in zip(lambdas, basis)))
    images = tuple(homography.apply_covector(h) for h in a.hyperplanes)
    return homography, ArrangementOrbifold(a.n, images, a.mults)
