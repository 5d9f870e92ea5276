"""The map Psi whose inversion yields rational normal curves through a point.

With a_0 = 1, y_j = 1/a_j and the translation putting the contact point with
X_0 + ... + X_n = 0 at t = 0, the curve (b_j (t + a_j)^n)_j passes through p at
t = infinity exactly when u_j := p_j / p_0 = Psi_j(y), where

    Psi_j(y) = -y_j^n * prod_{h >= 1, h != j} (1 - y_h) / (y_j - y_h).
"""
from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from orbicurves.errors import InvalidInput, SingularInput

SINGULAR_THRESHOLD = 1e-300

GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))


def _validated(y: Sequence[complex]) -> np.ndarray:
    y = np.asarray(y, dtype=complex).ravel()
    if y.size == 0:
        raise InvalidInput("Psi needs at least one coordinate")
    if np.any(np.abs(y) < SINGULAR_THRESHOLD):
        raise SingularInput("Some y_j vanishes")
    if np.any(np.abs(1 - y) < SINGULAR_THRESHOLD):
        raise SingularInput("Some y_j equals 1")
    gaps = np.abs(y[:, None] - y[None, :])
    np.fill_diagonal(gaps, np.inf)
    if np.any(gaps < SINGULAR_THRESHOLD):
        raise SingularInput("The y_j are not pairwise distinct")
    return y


def phi_map(y: Sequence[complex]) -> np.ndarray:
    y = _validated(y)
    n = y.size
    one_minus = 1 - y
    diff = y[:, None] - y[None, :]
    u = np.empty(n, dtype=complex)
    for j in range(n):
        others = np.arange(n) != j
        u[j] = -y[j] ** n * np.prod(one_minus[others] / diff[j, others])
    return u


def scaled_log_jacobian(y: Sequence[complex]) -> np.ndarray:
    """L_jk = (y_k / u_j) du_j/dy_k, from the logarithmic derivatives of Psi."""
    y = _validated(y)
    n = y.size
    one_minus = 1 - y
    # ratio[j, k] = y_j / y_k
    ratio = y[:, None] / y[None, :]
    gap = 1 - ratio
    np.fill_diagonal(gap, 1)

    L = -one_minus[:, None] / (one_minus[None, :] * gap)
    inverse_gap = 1 / gap
    np.fill_diagonal(inverse_gap, 0)
    # diagonal: n - sum_{h != j} (1 - y_h/y_j)^{-1}, i.e. a column sum of inverse_gap
    np.fill_diagonal(L, n - inverse_gap.sum(axis=0))
    return L


def phi_jacobian(y: Sequence[complex]) -> np.ndarray:
    """du_j/dy_k = (u_j / y_k) L_jk."""
    y = _validated(y)
    u = phi_map(y)
    return u[:, None] * scaled_log_jacobian(y) / y[None, :]


def normalized_determinant(y: Sequence[complex]) -> complex:
    """det(J) y_1...y_n / (u_1...u_n), which tends to n! on hierarchical points."""
    return complex(np.linalg.det(scaled_log_jacobian(y)))


def hierarchical_seed(n: int, M: float, phases: Optional[Sequence[float]] = None,
                      radii: Optional[Sequence[float]] = None) -> np.ndarray:
    """y_j = M^(j-n-1) e^(i theta_j): |y_j| = M |y_{j-1}| and M |y_n| = 1.

    Phases default to multiples of the golden angle; ``radii`` (each in [1/2, 2])
    jitter the magnitudes for randomized restarts.
    """
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    if M <= 1:
        raise InvalidInput(f"M must exceed 1, got {M}")
    if phases is None:
        phases = [GOLDEN_ANGLE * j for j in range(1, n + 1)]
    if radii is None:
        radii = [1.0] * n
    exponents = np.arange(1, n + 1) - n - 1
    return np.asarray(radii, dtype=float) * np.power(float(M), exponents) * np.exp(1j * np.asarray(phases, dtype=float))


def forward_point(a: Sequence[complex]) -> np.ndarray:
    """p_j = prod_{h != j} a_h / (a_h - a_j): the point reached at t = infinity."""
    a = np.asarray(a, dtype=complex).ravel()
    size = a.size
    p = np.empty(size, dtype=complex)
    for j in range(size):
        others = np.arange(size) != j
        p[j] = np.prod(a[others] / (a[others] - a[j]))
    return p


def random_instance(n: int, rng: np.random.Generator, min_gap: float = 0.1) -> tuple:
    """Random distinct nonzero complex a_j (a_0 = 1) and the point p they produce."""
    while True:
        a = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
        a = a / a[0]
        gaps = np.abs(a[:, None] - a[None, :])
        np.fill_diagonal(gaps, np.inf)
        if np.min(np.abs(a)) > min_gap and np.min(gaps) > min_gap and np.max(np.abs(a)) < 1 / min_gap:
            return a, forward_point(a)
