from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from orbicurves.errors import SingularInput
from orbicurves.rncsolver.phi import phi_map, scaled_log_jacobian
from orbicurves.settings import SolverConfig

# corrector settings for intermediate points of the path
STEP_CORRECTOR_ITERS = 4
STEP_CORRECTOR_TOL = 1e-9
MAX_LOG_STEP = 0.5


@dataclass
class TrackResult:
    y: Optional[np.ndarray]
    residual: float
    steps: int
    reason: str = ""

    @property
    def success(self) -> bool:
        return self.y is not None


def relative_residual(y: np.ndarray, u: np.ndarray) -> float:
    """max_j |u_j - Psi_j(y)| / |u_j|."""
    return float(np.max(np.abs(phi_map(y) / u - 1)))


class PathTracker:
    """Predictor-corrector continuation of Psi(y) = u(s) in logarithmic charts.

    Unknowns are w = log y and the path is log u(s) = log u_0 + s log(u_1 / u_0),
    a straight segment in log-u coordinates. The Jacobian of log Psi in these
    charts is the scaled logarithmic Jacobian L.
    """

    def __init__(self, config: SolverConfig, logger: Optional[logging.Logger] = None):
        self.config = config
        self.logger = logger or logging.getLogger(__name__)

    def track(self, y_start: np.ndarray, u_target: np.ndarray) -> TrackResult:
        y = np.asarray(y_start, dtype=complex)
        u_start = phi_map(y)
        direction = np.log(u_target / u_start)

        def target(s: float) -> np.ndarray:
            return u_start * np.exp(s * direction)

        max_step = 1.0 / self.config.homotopy_steps
        s, h, steps, streak = 0.0, max_step, 0, 0
        while s < 1.0:
            h = min(h, 1.0 - s)
            candidate = self._step(y, direction, h, target(s + h))
            steps += 1
            if candidate is None:
                h /= 2
                streak = 0
                if h < self.config.min_step:
                    return TrackResult(None, float("inf"), steps, f"step size underflow at s={s:.6g}")
                self.logger.debug("Halving step to %.3g at s=%.6g", h, s)
                continue
            y, s = candidate, s + h
            streak += 1
            if streak >= 3:
                h, streak = min(2 * h, max_step), 0

        return self._polish(y, u_target, steps)

    def _newton_update(self, y: np.ndarray, u: np.ndarray) -> np.ndarray:
        log_residual = np.log(phi_map(y) / u)
        return np.linalg.solve(scaled_log_jacobian(y), -log_residual)

    def _step(self, y: np.ndarray, direction: np.ndarray, h: float, u_next: np.ndarray) -> Optional[np.ndarray]:
        try:
            # Euler predictor: L dw/ds = d log u / ds
            dw = np.linalg.solve(scaled_log_jacobian(y), h * direction)
            if not np.all(np.isfinite(dw)) or np.max(np.abs(dw)) > MAX_LOG_STEP:
                return None
            y_next = y * np.exp(dw)
            previous = np.inf
            for _ in range(STEP_CORRECTOR_ITERS):
                dw = self._newton_update(y_next, u_next)
                size = float(np.max(np.abs(dw)))
                if not np.isfinite(size) or size > MAX_LOG_STEP or size >= previous:
                    return None
                y_next = y_next * np.exp(dw)
                if size < STEP_CORRECTOR_TOL:
                    return y_next
                previous = size
            if relative_residual(y_next, u_next) < STEP_CORRECTOR_TOL:
                return y_next
            return None
        except (SingularInput, np.linalg.LinAlgError, FloatingPointError, ZeroDivisionError):
            return None

    def _polish(self, y: np.ndarray, u: np.ndarray, steps: int) -> TrackResult:
        try:
            for _ in range(self.config.max_newton_iters):
                residual = relative_residual(y, u)
                if residual < self.config.newton_tolerance:
                    return TrackResult(y, residual, steps)
                y = y * np.exp(self._newton_update(y, u))
            residual = relative_residual(y, u)
        except (SingularInput, np.linalg.LinAlgError, FloatingPointError, ZeroDivisionError):
            return TrackResult(None, float("inf"), steps, "singular point during final Newton")
        if residual < self.config.newton_tolerance:
            return TrackResult(y, residual, steps)
        return TrackResult(None, residual, steps, f"final residual {residual:.3g} above tolerance")
