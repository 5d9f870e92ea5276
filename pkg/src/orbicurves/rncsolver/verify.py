from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from orbicurves.core import ArrangementOrbifold, to_rational
from orbicurves.errors import InvalidInput
from orbicurves.rncsolver.solver import RncSolution, coordinate_polynomial, format_float, sum_polynomial

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    passed: bool
    checks: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    @property
    def failed_checks(self) -> list:
        return [name for name, check in self.checks.items() if not check["passed"]]

    def to_json(self) -> dict:
        return {
            "status": "PASS" if self.passed else "FAIL",
            "checks": {
                name: {"passed": check["passed"], "value": format_float(check["value"])}
                for name, check in self.checks.items()
            },
        }


def _taylor_at(coefficients: np.ndarray, root: complex, order: int) -> np.ndarray:
    """Taylor coefficients of order 0..order-1 of the polynomial at ``root``."""
    values = []
    current = coefficients
    for k in range(order):
        values.append(P.polyval(root, current) / np.prod(np.arange(1, k + 1), dtype=float))
        current = P.polyder(current)
    return np.array(values, dtype=complex)


def _relative_taylor(coefficients: np.ndarray, root: complex, order: int) -> float:
    """Largest low-order Taylor coefficient at ``root`` relative to the polynomial's size there."""
    n = len(coefficients) - 1
    shifted = _taylor_at(coefficients, root, n + 1)
    scale = float(np.max(np.abs(shifted)))
    if scale == 0:
        return float("inf")
    return float(np.max(np.abs(shifted[:order])) / scale) if order else 0.0


def verify_rnc(s: RncSolution, a: ArrangementOrbifold, p: Sequence, tol: float = 1e-8) -> VerificationReport:
    n = s.n
    q = sum_polynomial(s.a, s.b)
    scale = float(np.max(np.abs(q)))
    checks: Dict[str, Dict[str, Any]] = {}

    # (i) Q(t) = b t^n: all lower coefficients vanish
    low = float(np.max(np.abs(q[:-1])) / scale) if scale else float("inf")
    checks["low_order_coefficients"] = {"value": low, "passed": low <= tol}

    # (ii) leading coefficient sum_j b_j away from zero
    b = np.asarray(s.b, dtype=complex)
    b_scale = float(np.max(np.abs(b)))
    leading = abs(complex(np.sum(b))) / b_scale if b_scale else 0.0
    checks["leading_coefficient"] = {"value": leading, "passed": leading > tol}

    # (iii) each stored coordinate polynomial is b_j (t + a_j)^n, vanishing to order n at -a_j
    structural = 0.0
    for a_j, b_j, stored in zip(s.a, s.b, s.coordinate_polynomials):
        stored = np.asarray(stored, dtype=complex)
        expected = coordinate_polynomial(a_j, b_j, n)
        size = float(np.max(np.abs(expected))) or 1.0
        structural = max(structural, float(np.max(np.abs(stored - expected))) / size)
        structural = max(structural, _relative_taylor(stored, -a_j, n))
    checks["contact_structure"] = {"value": structural, "passed": structural <= tol}

    # (iv) t -> infinity lands on p
    leading_original = np.array([row[-1] for row in s.original_polynomials], dtype=complex)
    target = np.asarray(_as_numbers(p), dtype=complex)
    mismatch = _projective_distance(leading_original, target)
    checks["limit_point"] = {"value": mismatch, "passed": mismatch <= tol}

    # each input hyperplane meets the curve in a single point of contact order n
    contact = _arrangement_contact(s, a)
    checks["arrangement_contacts"] = {"value": contact, "passed": contact <= tol}

    passed = all(check["passed"] for check in checks.values())
    if not passed:
        logger.warning("RNC verification failed: %s", [name for name, c in checks.items() if not c["passed"]])
    return VerificationReport(passed, checks)


def _as_numbers(p: Sequence) -> list:
    numbers = []
    for x in p:
        try:
            numbers.append(float(to_rational(x)))
        except (InvalidInput, TypeError):
            numbers.append(complex(x))
    return numbers


def _projective_distance(x: np.ndarray, y: np.ndarray) -> float:
    """max |x_i y_k - x_k y_i| / (|x| |y|), zero iff proportional."""
    norm = float(np.max(np.abs(x)) * np.max(np.abs(y)))
    if norm == 0:
        return float("inf")
    cross = np.outer(x, y) - np.outer(y, x)
    return float(np.max(np.abs(cross)) / norm)


def _arrangement_contact(s: RncSolution, a: ArrangementOrbifold) -> float:
    """For each hyperplane l, l(x(t)) must be a multiple of a single n-th power.

    The first n+1 hyperplanes are matched with the roots -a_j; the last one
    with the contact at t = 0.
    """
    if a.k != s.n + 2:
        return float("inf")
    curve = np.array(s.original_polynomials, dtype=complex)
    worst = 0.0
    roots = list(-np.asarray(s.a, dtype=complex)) + [0j]
    for covector, root in zip(a.hyperplanes, roots):
        restricted = np.array([float(x) for x in covector]) @ curve
        worst = max(worst, _relative_taylor(restricted, root, s.n))
    return worst

