import argparse

from orbicurves.core import Classification, canonical_degree, classify, format_rational
from orbicurves.enumfrac import (
    UnitFractionTuple,
    compute_bound_BN,
    enumerate_types,
    subunit_prefixes,
    sylvester_extend,
    tail_bound,
)
from orbicurves.errors import InvalidInput, UsageError

from .base import BaseCommand, CommandResult, add_type_arguments

SUBUNIT_KIND = "SubUnit"


class ClassifyCommand(BaseCommand):
    """Sign of K + Delta for a type: Fano, TrivialCanonical or GeneralType."""

    name = "classify"
    help = "Classify an orbifold type by the sign of its canonical degree"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        add_type_arguments(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        t = self.parse_type(args)
        degree = canonical_degree(t)
        kind = classify(t)
        self.logger.info(f"{t} has canonical degree {format_rational(degree)}: {kind.value}")
        return CommandResult.success(
            kind.value,
            diagnostics=[f"canonical_degree={format_rational(degree)}", f"reciprocal_sum={format_rational(t.reciprocal_sum)}"],
        )


class EnumerateCommand(BaseCommand):
    name = "enumerate"
    help = "List integral types of one class, or sub-unit prefixes, up to an entry cap"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--n", type=int, help="Dimension of the projective space")
        parser.add_argument("--k", type=int, help="Number of multiplicities (default n+2)")
        parser.add_argument(
            "--kind",
            default=Classification.FANO.value,
            choices=[c.value for c in Classification] + [SUBUNIT_KIND],
            help="Class to list; SubUnit lists k-tuples with reciprocal sum below 1",
        )
        parser.add_argument("--cap", type=int, help="Largest allowed entry (default from config)")

    def run(self, args: argparse.Namespace) -> CommandResult:
        cap = args.cap if args.cap is not None else self.settings.search.fano_cap
        if args.kind == SUBUNIT_KIND:
            self.require(args, "k")
            prefixes = subunit_prefixes(args.k, cap)
            rows = [list(p.terms) for p in prefixes]
            return CommandResult.success(rows, diagnostics=[f"count={len(rows)}"], rows=rows)

        self.require(args, "n")
        k = args.k if args.k is not None else args.n + 2
        types = enumerate_types(args.n, k, cap, Classification(args.kind))
        rows = [[m.to_json() for m in t.mults] for t in types]
        return CommandResult.success(rows, diagnostics=[f"count={len(rows)}", f"cap={cap}"], rows=rows)


class SylvesterCommand(BaseCommand):
    name = "sylvester"
    help = "Extend a tuple with sum 1 - 1/b by the Sylvester recursion"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--start", default="2", help="Comma separated starting terms (default 2)")
        parser.add_argument("--steps", type=int, help="Number of terms to append")

    def run(self, args: argparse.Namespace) -> CommandResult:
        self.require(args, "steps")
        try:
            start = tuple(int(x) for x in args.start.split(",") if x.strip())
        except ValueError as e:
            raise InvalidInput(f"Starting terms must be integers, got {args.start!r}") from e
        if not start:
            raise UsageError("--start needs at least one term")
        extended = sylvester_extend(UnitFractionTuple(start), args.steps)
        terms = list(extended.terms)
        return CommandResult.success(terms, diagnostics=[f"sum={format_rational(extended.sum)}"], rows=[terms])


class BoundCommand(BaseCommand):
    name = "bound-bn"
    help = "Largest sum of N unit fractions staying below 1"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--N", type=int, help="Number of unit fractions")

    def run(self, args: argparse.Namespace) -> CommandResult:
        self.require(args, "N")
        limit = self.settings.search.bound_limit
        bound = compute_bound_BN(args.N, limit=limit)
        previous = compute_bound_BN(args.N - 1, limit=limit) if args.N > 1 else None
        payload = {
            "N": args.N,
            "bound": format_rational(bound),
            "tail_bound": tail_bound(args.N, previous),
        }
        return CommandResult.success(payload, diagnostics=[f"search_limit={limit}"])
