import json
import yaml
from pathlib import Path
from typing import Any, List, Union

from orbicurves.core import ArrangementOrbifold, Multiplicity, to_rational
from orbicurves.curves import ContactRecord, MarkedCurve
from orbicurves.errors import InvalidInput, OrbicurvesError
from orbicurves.fibration import BaseDivisorRecord, FiberComponentData


def load_document(path: Union[str, Path]) -> Any:
    """Read a JSON file, or YAML when the suffix is .yaml/.yml."""
    path = Path(path)
    if not path.exists():
        raise InvalidInput(f"Input file not found: {path}")
    try:
        with open(path, 'r') as f:
            if path.suffix.lower() in ('.yaml', '.yml'):
                return yaml.safe_load(f)
            return json.load(f)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise InvalidInput(f"Could not parse {path}: {e}") from e


def _require(data: Any, key: str, source: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise InvalidInput(f"{source}: missing field {key!r}")
    return data[key]


def _exact(value: Any) -> Any:
    # JSON floats carry no exact value; integral ones are accepted
    if isinstance(value, float):
        if value.is_integer():
            return int(value)
        raise InvalidInput(f"Use a 'p/q' string instead of the float {value!r}")
    return value


def arrangement_from_dict(data: Any, source: str = "arrangement") -> ArrangementOrbifold:
    n = _require(data, "n", source)
    hyperplanes = _require(data, "hyperplanes", source)
    mults = _require(data, "mults", source)
    if not isinstance(n, int) or not isinstance(hyperplanes, list) or not isinstance(mults, list):
        raise InvalidInput(f"{source}: expected an integer n and lists of hyperplanes and mults")
    try:
        return ArrangementOrbifold(
            n,
            tuple(tuple(to_rational(_exact(x)) for x in row) for row in hyperplanes),
            tuple(Multiplicity.of(_exact(m)) for m in mults),
        )
    except TypeError as e:
        raise InvalidInput(f"{source}: malformed hyperplane list ({e})") from e


def load_arrangement(path: Union[str, Path]) -> ArrangementOrbifold:
    return arrangement_from_dict(load_document(path), str(path))


def curve_from_dict(data: Any, source: str = "curve") -> MarkedCurve:
    genus = _require(data, "genus", source)
    contacts = data.get("contacts", [])
    if not isinstance(contacts, list):
        raise InvalidInput(f"{source}: contacts must be a list")
    records = []
    for entry in contacts:
        point = str(_require(entry, "point", source))
        pairs = _require(entry, "pairs", source)
        try:
            records.append(ContactRecord(point, tuple((j, order) for j, order in pairs)))
        except (TypeError, ValueError) as e:
            if isinstance(e, OrbicurvesError):
                raise
            raise InvalidInput(f"{source}: pairs of point {point!r} must be [index, order] lists") from e
    if isinstance(genus, bool) or not isinstance(genus, int):
        raise InvalidInput(f"{source}: genus must be an integer")
    return MarkedCurve(genus, tuple(records))


def load_curve(path: Union[str, Path]) -> MarkedCurve:
    return curve_from_dict(load_document(path), str(path))


def records_from_list(data: Any, source: str = "records") -> List[BaseDivisorRecord]:
    if not isinstance(data, list):
        raise InvalidInput(f"{source}: expected a list of divisor records")
    records = []
    for entry in data:
        label = str(_require(entry, "label", source))
        components = _require(entry, "components", source)
        if not isinstance(components, list):
            raise InvalidInput(f"{source}: components of {label!r} must be a list")
        records.append(BaseDivisorRecord(label, tuple(
            FiberComponentData(_require(c, "t", source), Multiplicity.of(_exact(c.get("m", 1))))
            for c in components
        )))
    return records


def load_records(path: Union[str, Path]) -> List[BaseDivisorRecord]:
    return records_from_list(load_document(path), str(path))


def parse_point(text: str) -> list:
    """Homogeneous coordinates "p0:p1:..."; exact rationals stay exact, others become complex."""
    items = [item.strip() for item in text.split(":")]
    if len(items) < 2 or any(not item for item in items):
        raise InvalidInput(f"Point must look like 'p0:p1:...', got {text!r}")
    point = []
    for item in items:
        try:
            point.append(to_rational(item))
        except InvalidInput:
            try:
                point.append(complex(item.replace(" ", "")))
            except ValueError as e:
                raise InvalidInput(f"Not a coordinate: {item!r}") from e
    return point


def parse_coefficients(text: str) -> List[Any]:
    return [to_rational(item) for item in text.split(",") if item.strip()]
