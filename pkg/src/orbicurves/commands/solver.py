import argparse

from orbicurves.loaders import load_arrangement, parse_point
from orbicurves.rncsolver import solve_rnc, verify_rnc
from orbicurves.settings import with_overrides

from .base import BaseCommand, CommandResult


class RncSolveCommand(BaseCommand):
    """Rational normal curve through a point meeting n+2 hyperplanes with maximal contact."""

    name = "rnc-solve"
    help = "Construct and verify the rational normal curve through a point"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--arrangement", help="Arrangement file (JSON or YAML)")
        parser.add_argument("--point", help="Homogeneous coordinates 'p0:p1:...'")
        parser.add_argument("--seed", type=int, help="Seed of the randomized restarts")
        parser.add_argument("--tol", type=float, help="Acceptance and verification tolerance")

    def run(self, args: argparse.Namespace) -> CommandResult:
        self.require(args, "arrangement", "point")
        arrangement = load_arrangement(args.arrangement)
        point = parse_point(args.point)
        config = with_overrides(self.settings.solver, rng_seed=args.seed, verify_tolerance=args.tol)

        solution = solve_rnc(arrangement, point, config)
        report = verify_rnc(solution, arrangement, point, tol=config.verify_tolerance)
        diagnostics = [f"restarts={solution.restarts}", f"path_steps={solution.path_steps}"]
        if not report.passed:
            diagnostics.append(f"failed_checks={','.join(report.failed_checks)}")
            self.logger.warning(f"Verification failed: {report.failed_checks}")
        return CommandResult.success(
            {"solution": solution.to_json(), "verification": report.to_json()},
            diagnostics=diagnostics,
        )
