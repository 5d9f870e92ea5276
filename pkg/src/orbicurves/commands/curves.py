import argparse

from orbicurves.core import format_rational
from orbicurves.curves import curve_kind, delta_g, enumerate_exceptional_p3, is_delta_nice, uniruledness_verdict
from orbicurves.loaders import load_curve

from .base import BaseCommand, CommandResult, add_type_arguments


class CurveCheckCommand(BaseCommand):
    """Delta_g of a marked curve and whether it is Delta-rational or Delta-elliptic."""

    name = "curve-check"
    help = "Compute Delta_g and the kind of a marked curve against an orbifold type"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        add_type_arguments(parser)
        parser.add_argument("--curve", help="Marked curve file (JSON or YAML)")
        parser.add_argument("--virtual", action="store_true", help="Keep virtual multiplicities m/t below 1")

    def run(self, args: argparse.Namespace) -> CommandResult:
        self.require(args, "curve")
        t = self.parse_type(args)
        curve = load_curve(args.curve)
        divisor = delta_g(curve, t, virtual=args.virtual)
        kind, degree = curve_kind(curve, t, virtual=args.virtual)
        payload = {
            "kind": kind.value,
            "degree": format_rational(degree),
            "genus": curve.genus,
            "delta_g": divisor.to_json(),
            "nice": is_delta_nice(curve, t),
            "virtual": args.virtual,
        }
        return CommandResult.success(payload)


class UniruledCommand(BaseCommand):
    name = "uniruled"
    help = "Decide which method, if any, proves a Fano type uniruled"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        add_type_arguments(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        t = self.parse_type(args)
        verdict = uniruledness_verdict(t)
        self.logger.info(f"Verdict for {t}: {verdict.status.value}")
        return CommandResult.success(verdict.to_json())


class CensusCommand(BaseCommand):
    name = "census"
    help = "Exceptional Fano types on P^3 with five hyperplanes"

    def run(self, args: argparse.Namespace) -> CommandResult:
        census = enumerate_exceptional_p3()
        rows = [["sporadic"] + [m.to_json() for m in t.mults] for t in census.sporadic]
        rows += [["family"] + list(family.prefix) + [f"min_tail={family.min_tail}"] for family in census.families]
        return CommandResult.success(
            census.to_json(),
            diagnostics=[f"sporadic={len(census.sporadic)}", f"families={len(census.families)}"],
            rows=rows,
        )
