from .phi import (
    forward_point,
    hierarchical_seed,
    normalized_determinant,
    phi_jacobian,
    phi_map,
    random_instance,
    scaled_log_jacobian,
)
from .tracker import PathTracker, TrackResult
from .solver import RncSolution, solve_rnc
from .verify import VerificationReport, verify_rnc

__all__ = [
    'phi_map', 'phi_jacobian', 'scaled_log_jacobian', 'normalized_determinant', 'hierarchical_seed',
    'forward_point', 'random_instance', 'PathTracker', 'TrackResult', 'RncSolution', 'solve_rnc',
    'VerificationReport', 'verify_rnc',
]
