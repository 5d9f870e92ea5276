import argparse
import json
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, List, Optional, Sequence

from orbicurves.core import OrbifoldType
from orbicurves.errors import OrbicurvesError, UsageError
from orbicurves.settings import Settings


@dataclass
class CommandResult:
    """Outcome of one subcommand: the JSON payload or a structured error."""

    status: str
    payload: Any = None
    diagnostics: List[str] = field(default_factory=list)
    code: Optional[str] = None
    exit_code: int = 0
    rows: Optional[List[Sequence[Any]]] = None
    tsv: bool = False
    out: Optional[Path] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    @classmethod
    def success(cls, payload: Any, diagnostics: Optional[List[str]] = None,
                rows: Optional[List[Sequence[Any]]] = None) -> "CommandResult":
        return cls("ok", payload, list(diagnostics or []), rows=rows)

    @classmethod
    def from_error(cls, error: OrbicurvesError, diagnostics: Optional[List[str]] = None) -> "CommandResult":
        details = error.to_dict()
        notes = list(diagnostics or [])
        notes.extend(f"{key}={value}" for key, value in details.get("details", {}).items())
        exit_code = 2 if isinstance(error, UsageError) else 1
        return cls("error", {"message": details["message"]}, notes, code=error.code, exit_code=exit_code)

    @classmethod
    def internal(cls, error: Exception) -> "CommandResult":
        return cls("error", {"message": f"{type(error).__name__}: {error}"}, [], code="internal", exit_code=1)

    def to_json(self) -> Any:
        if self.ok:
            return self.payload
        document = {"status": "error", "code": self.code, "message": self.payload["message"]}
        if self.diagnostics:
            document["diagnostics"] = self.diagnostics
        return document

    def render(self) -> str:
        if self.ok and self.tsv:
            return to_tsv(self.rows if self.rows is not None else self.payload)
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)


def to_tsv(data: Any) -> str:
    """Lossy tab-separated projection of a payload."""
    if isinstance(data, dict):
        lines = [f"{key}\t{_cell(value)}" for key, value in data.items()]
    elif isinstance(data, list) and all(isinstance(row, (list, tuple)) for row in data):
        lines = ["\t".join(_cell(x) for x in row) for row in data]
    elif isinstance(data, list):
        lines = ["\t".join(_cell(x) for x in data)]
    else:
        lines = [_cell(data)]
    return "\n".join(lines)


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"), ensure_ascii=False)
    return str(value)


class BaseCommand(ABC):
    """Abstract base class for subcommands."""

    name: str = ""
    help: str = ""

    def __init__(self, settings: Settings, logger: Optional[logging.Logger] = None):
        self.settings = settings
        self.logger = logger or logging.getLogger(__name__)

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """Register the subcommand's own flags."""

    @abstractmethod
    def run(self, args: argparse.Namespace) -> CommandResult:
        """Execute the command and return its result."""
        pass

    @staticmethod
    def require(args: argparse.Namespace, *names: str) -> None:
        missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
        if missing:
            raise UsageError(f"Missing required flags: {', '.join(missing)}")

    def parse_type(self, args: argparse.Namespace) -> OrbifoldType:
        self.require(args, "n", "type")
        return OrbifoldType.parse(args.n, args.type)


def add_type_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, help="Dimension of the projective space")
    parser.add_argument("--type", help="Comma separated multiplicities, e.g. 2,3,7,42 ('inf' allowed where legal)")
