from __future__ import annotations

import logging
from typing import Optional

from orbicurves.errors import UsageError
from orbicurves.settings import Settings

from .base import BaseCommand, CommandResult
from .arithmetic import BoundCommand, ClassifyCommand, EnumerateCommand, SylvesterCommand
from .curves import CensusCommand, CurveCheckCommand, UniruledCommand
from .fibration import OrbifoldBaseCommand, SymdiffCommand
from .solver import RncSolveCommand
from .tables import PaperTablesCommand

COMMANDS = [
    ClassifyCommand,
    EnumerateCommand,
    SylvesterCommand,
    BoundCommand,
    CurveCheckCommand,
    UniruledCommand,
    CensusCommand,
    RncSolveCommand,
    OrbifoldBaseCommand,
    SymdiffCommand,
    PaperTablesCommand,
]


def create_command(name: str, settings: Settings, logger: Optional[logging.Logger] = None) -> BaseCommand:
    match name.strip().lower():
        case "classify":
            return ClassifyCommand(settings, logger)
        case "enumerate":
            return EnumerateCommand(settings, logger)
        case "sylvester":
            return SylvesterCommand(settings, logger)
        case "bound-bn":
            return BoundCommand(settings, logger)
        case "curve-check":
            return CurveCheckCommand(settings, logger)
        case "uniruled":
            return UniruledCommand(settings, logger)
        case "census":
            return CensusCommand(settings, logger)
        case "rnc-solve":
            return RncSolveCommand(settings, logger)
        case "orbifold-base":
            return OrbifoldBaseCommand(settings, logger)
        case "symdiff":
            return SymdiffCommand(settings, logger)
        case "paper-tables":
            return PaperTablesCommand(settings, logger)
        case other:
            raise UsageError(
                f"Unknown command '{other}'. Supported commands: {', '.join(c.name for c in COMMANDS)}"
            )


__all__ = ["BaseCommand", "CommandResult", "COMMANDS", "create_command"]
