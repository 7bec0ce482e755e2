"""File formats: JSON records for the domain objects, CSV for tables.

Rationals travel as "num/den" strings (integers are accepted on input).
All writers are deterministic: fixed key order, fixed column order, "\n"
line endings, reals printed with 12 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .bubble import Configuration
from .cremona import Characteristic
from .hypgraph import FiniteMetric
from .lattice import PicardManinClass
from .voronoi import GermSet

Q = Fraction


def rational_to_str(value) -> str:
    q = Q(value)
    return f"{q.numerator}/{q.denominator}"


def rational_from(value) -> Q:
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        return Q(value)
    raise ValueError(f"not a rational: {value!r}")


def real_to_str(value: float) -> str:
    return format(float(value), ".12g")


# ---------------------------------------------------------------------------
# JSON records


def class_to_record(c: PicardManinClass) -> dict:
    return {
        "degree": rational_to_str(c.degree),
        "mults": [{"point": p, "mult": rational_to_str(v)} for p, v in sorted(c.mults.items())],
    }


def class_from_record(record: dict) -> PicardManinClass:
    mults = {int(entry["point"]): rational_from(entry["mult"]) for entry in record.get("mults", [])}
    return PicardManinClass(rational_from(record["degree"]), mults)


def configuration_to_record(config: Configuration) -> dict:
    points = []
    for pid in config.point_ids:
        parent = config.parent(pid)
        points.append({"id": pid} if parent is None else {"id": pid, "parent": parent})
    return {
        "points": points,
        "collinear": sorted(sorted(s) for s in config.collinear_sets),
        "conics": sorted(sorted(s) for s in config.conic_sets),
    }


def configuration_from_record(record: dict) -> Configuration:
    points = [(entry["id"], entry.get("parent")) for entry in record.get("points", [])]
    return Configuration(
        points,
        collinear=record.get("collinear", ()),
        conics=record.get("conics", ()),
    )


def characteristic_to_record(char: Characteristic) -> dict:
    record = {
        "degree": char.degree,
        "base": [{"point": p, "mult": m} for p, m in char.base],
        "inverse_base": [{"point": q, "mult": m} for q, m in char.inverse_base],
    }
    if char.resolution is not None:
        record["resolution"] = [[rational_to_str(x) for x in row] for row in char.resolution]
    return record


def characteristic_from_record(record: dict) -> Characteristic:
    resolution = record.get("resolution")
    if resolution is not None:
        resolution = [[rational_from(x) for x in row] for row in resolution]
    return Characteristic(
        int(record["degree"]),
        base=[(e["point"], e["mult"]) for e in record.get("base", [])],
        inverse_base=[(e["point"], e["mult"]) for e in record.get("inverse_base", [])],
        resolution=resolution,
    )


def germset_to_record(germs: GermSet) -> dict:
    return {
        "germs": [
            {"label": label, "class": class_to_record(cls)}
            for label, cls in zip(germs.labels, germs.classes)
        ]
    }


def germset_from_record(record: dict) -> GermSet:
    return GermSet(
        (entry["label"], class_from_record(entry["class"])) for entry in record.get("germs", [])
    )


@dataclass(frozen=True)
class RunConfig:
    """Parsed run configuration: points, maps, germ sets, parameters."""

    configuration: Optional[Configuration] = None
    characteristics: Tuple[Tuple[str, Characteristic], ...] = ()
    germ_sets: Tuple[Tuple[str, GermSet], ...] = ()
    parameters: Dict[str, object] = field(default_factory=dict)

    def characteristic(self, label: str) -> Characteristic:
        for name, char in self.characteristics:
            if name == label:
                return char
        raise KeyError(f"no characteristic labeled {label!r}")


def runconfig_from_record(record: dict) -> RunConfig:
    configuration = None
    if "configuration" in record:
        configuration = configuration_from_record(record["configuration"])
    characteristics = []
    for entry in record.get("characteristics", []):
        label = str(entry.get("label", f"map{len(characteristics)}"))
        characteristics.append((label, characteristic_from_record(entry)))
    germ_sets = []
    for label, entry in sorted(record.get("germ_sets", {}).items()):
        germ_sets.append((label, germset_from_record(entry)))
    parameters = dict(record.get("parameters", {}))
    for key, value in parameters.items():
        if key in ("k_max", "n_max", "jobs") and (not isinstance(value, int) or value < 1):
            raise ValueError(f"parameter {key} must be a positive integer, got {value!r}")
    return RunConfig(
        configuration=configuration,
        characteristics=tuple(characteristics),
        germ_sets=tuple(germ_sets),
        parameters=parameters,
    )


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def load_runconfig(path: str) -> RunConfig:
    return runconfig_from_record(load_json(path))


# ---------------------------------------------------------------------------
# CSV


def metric_from_csv(path: str) -> FiniteMetric:
    """Headered square matrix: label row, then one row of entries per label."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        table = [row for row in reader if row]
    if not table:
        raise ValueError(f"{path}: empty metric file")
    labels = [cell.strip() for cell in table[0]]
    body = table[1:]
    if len(body) != len(labels):
        raise ValueError(f"{path}: expected {len(labels)} data rows, found {len(body)}")
    matrix = []
    for row in body:
        if len(row) != len(labels):
            raise ValueError(f"{path}: ragged row {row!r}")
        matrix.append([rational_from(cell.strip()) for cell in row])
    return FiniteMetric(matrix, labels=labels)


def csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow(["" if x is None else str(x) for x in row])
    return buffer.getvalue()
