from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from orbicurves.core import ArrangementOrbifold, Homography, standardize, to_rational
from orbicurves.errors import InvalidInput, NoConvergence, OrbicurvesError, PointOnArrangement, WrongCount
from orbicurves.rncsolver.phi import hierarchical_seed
from orbicurves.rncsolver.tracker import PathTracker
from orbicurves.settings import SolverConfig

logger = logging.getLogger(__name__)

REAL_TOLERANCE = 1e-9
NUMERIC_ZERO = 1e-14


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def format_complex(z: complex) -> dict:
    return {"re": format_float(z.real), "im": format_float(z.imag)}


def coordinate_polynomial(a_j: complex, b_j: complex, n: int) -> np.ndarray:
    """Ascending coefficients of b_j (t + a_j)^n."""
    return b_j * P.polypow(np.array([a_j, 1], dtype=complex), n)


@dataclass(frozen=True)
class RncSolution:
    """Parametrization t -> (b_j (t + a_j)^n)_j in standardized coordinates."""

    n: int
    a: Tuple[complex, ...]
    b: Tuple[complex, ...]
    coordinate_polynomials: Tuple[Tuple[complex, ...], ...]
    original_polynomials: Tuple[Tuple[complex, ...], ...]
    homography: Homography
    residual_report: float
    is_real: bool
    restarts: int = 0
    path_steps: int = 0

    @classmethod
    def from_parameters(cls, a: Sequence[complex], b: Sequence[complex],
                        homography: Optional[Homography] = None, *, restarts: int = 0,
                        path_steps: int = 0) -> "RncSolution":
        a = np.asarray(a, dtype=complex)
        b = np.asarray(b, dtype=complex)
        if a.size != b.size or a.size < 2:
            raise WrongCount(f"Need n+1 >= 2 parameters a_j and b_j, got {a.size} and {b.size}")
        n = a.size - 1
        homography = homography or Homography.identity(n)
        polys = np.array([coordinate_polynomial(aj, bj, n) for aj, bj in zip(a, b)])
        inverse = np.array([[float(x) for x in row] for row in homography.inverse().matrix])
        original = inverse @ polys
        scaled = a / a[0]
        is_real = bool(np.all(np.abs(scaled.imag) <= REAL_TOLERANCE * np.maximum(1.0, np.abs(scaled))))
        return cls(
            n=n,
            a=tuple(complex(x) for x in a),
            b=tuple(complex(x) for x in b),
            coordinate_polynomials=tuple(tuple(complex(c) for c in row) for row in polys),
            original_polynomials=tuple(tuple(complex(c) for c in row) for row in original),
            homography=homography,
            residual_report=low_order_residual(a, b),
            is_real=is_real,
            restarts=restarts,
            path_steps=path_steps,
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": [format_complex(x) for x in self.a],
            "b": [format_complex(x) for x in self.b],
            "coordinate_polynomials": [[format_complex(c) for c in row] for row in self.coordinate_polynomials],
            "original_polynomials": [[format_complex(c) for c in row] for row in self.original_polynomials],
            "homography": self.homography.to_json(),
            "residual_report": format_float(self.residual_report),
            "is_real": self.is_real,
            "restarts": self.restarts,
            "path_steps": self.path_steps,
        }


def sum_polynomial(a: Sequence[complex], b: Sequence[complex]) -> np.ndarray:
    """Ascending coefficients of Q(t) = sum_j b_j (t + a_j)^n."""
    n = len(a) - 1
    return np.sum([coordinate_polynomial(aj, bj, n) for aj, bj in zip(a, b)], axis=0)


def low_order_residual(a: Sequence[complex], b: Sequence[complex]) -> float:
    """max_{i < n} |[t^i] Q| / max_i |[t^i] Q|."""
    q = sum_polynomial(a, b)
    scale = float(np.max(np.abs(q)))
    if scale == 0:
        return float("inf")
    return float(np.max(np.abs(q[:-1])) / scale)


def standardized_point(homography: Homography, p: Sequence) -> np.ndarray:
    """Coordinates T p, rejecting points on any of the n+2 hyperplanes."""
    try:
        exact = [to_rational(x) for x in p]
    except (InvalidInput, TypeError):
        exact = None

    if exact is not None:
        if not any(exact):
            raise InvalidInput("The zero vector is not a point")
        image = homography.apply_point(exact)
        if any(x == 0 for x in image) or sum(image, Fraction(0)) == 0:
            raise PointOnArrangement("Point lies on a hyperplane of the arrangement")
        return np.array([complex(float(x)) for x in image])

    matrix = np.array([[float(x) for x in row] for row in homography.matrix])
    image = matrix @ np.asarray(p, dtype=complex)
    scale = float(np.max(np.abs(image)))
    if scale == 0:
        raise InvalidInput("The zero vector is not a point")
    if np.min(np.abs(image)) <= NUMERIC_ZERO * scale or abs(np.sum(image)) <= NUMERIC_ZERO * scale:
        raise PointOnArrangement("Point lies on a hyperplane of the arrangement")
    return image


def _seeds(n: int, config: SolverConfig):
    """The deterministic hierarchical seed, then max_restarts randomized ones."""
    yield hierarchical_seed(n, config.seed_M)
    rng = np.random.default_rng(config.rng_seed)
    for _ in range(config.max_restarts):
        phases = rng.uniform(0, 2 * np.pi, n)
        radii = rng.uniform(0.5, 2.0, n)
        yield hierarchical_seed(n, config.seed_M, phases=phases, radii=radii)


def solve_rnc(a: ArrangementOrbifold, p: Sequence, config: Optional[SolverConfig] = None) -> RncSolution:
    """Rational normal curve of degree n through p meeting each of the n+2 hyperplanes once."""
    config = config or SolverConfig()
    if len(p) != a.n + 1:
        raise InvalidInput(f"Point needs {a.n + 1} homogeneous coordinates, got {len(p)}")
    homography, _ = standardize(a)
    point = standardized_point(homography, p)
    u_target = point[1:] / point[0]

    tracker = PathTracker(config, logger)
    best_residual = float("inf")
    for attempt, seed in enumerate(_seeds(a.n, config)):
        try:
            result = tracker.track(seed, u_target)
        except OrbicurvesError as e:
            logger.info("Attempt %s aborted: %s", attempt, e)
            continue
        if not result.success:
            logger.info("Attempt %s failed: %s", attempt, result.reason)
            continue

        a_std = np.concatenate([[1.0 + 0j], 1 / result.y])
        solution = RncSolution.from_parameters(
            a_std, point, homography, restarts=attempt, path_steps=result.steps,
        )
        if solution.residual_report <= config.verify_tolerance:
            logger.info("Solved n=%s after %s restarts, residual %.3g", a.n, attempt, solution.residual_report)
            return solution
        best_residual = min(best_residual, solution.residual_report)
        logger.info("Attempt %s rejected: residual %.3g", attempt, solution.residual_report)

    raise NoConvergence(
        f"No rational normal curve found after {config.max_restarts} restarts",
        best_residual=best_residual,
    )
