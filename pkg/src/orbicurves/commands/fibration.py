import argparse

from orbicurves.core import format_rational
from orbicurves.fibration import canonical_power_exponents, orbifold_base, symdiff_generators
from orbicurves.loaders import load_records, parse_coefficients

from .base import BaseCommand, CommandResult


class OrbifoldBaseCommand(BaseCommand):
    name = "orbifold-base"
    help = "Boundary coefficients of the orbifold base of a fibration"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--records", help="Divisor records file (JSON or YAML)")

    def run(self, args: argparse.Namespace) -> CommandResult:
        self.require(args, "records")
        records = load_records(args.records)
        base = orbifold_base(records)
        payload = [{"label": label, "coefficient": format_rational(c)} for label, c in base]
        return CommandResult.success(
            payload,
            diagnostics=[f"records={len(records)}", f"dropped={len(records) - len(base)}"],
            rows=[[label, format_rational(c)] for label, c in base],
        )


class SymdiffCommand(BaseCommand):
    """Local generators of the m-th orbifold symmetric differentials for boundary coefficients a."""

    name = "symdiff"
    help = "Local generators of orbifold symmetric differentials"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--coefficients", help="Comma separated coefficients in [0, 1], e.g. 1/2,0")
        parser.add_argument("--m", type=int, help="Symmetric power")

    def run(self, args: argparse.Namespace) -> CommandResult:
        self.require(args, "coefficients", "m")
        a = parse_coefficients(args.coefficients)
        generators = symdiff_generators(a, args.m)
        payload = {
            "generators": [{"N": list(N), "poles": list(poles)} for N, poles in generators],
            "canonical": canonical_power_exponents(a, args.m),
        }
        return CommandResult.success(
            payload,
            diagnostics=[f"count={len(generators)}"],
            rows=[list(N) + ["->"] + list(poles) for N, poles in generators],
        )
