"""JSON file formats and exact-rational report rendering.

All rationals travel as strings ("p/q" or a bare integer string) so that
exactness survives round trips; float literals are rejected everywhere.
Reports are plain dicts with deterministic key order, rendered either as
canonical JSON or as an indented text listing.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

from .errors import DuplicatePoint, ParseError
from .geometry import IntMat2, Polygon, Vec2
from .blowup import CornerCut
from .counting import ScalarPoly, VecPoly
from .stability import PointConfiguration, SymmetryGroup


def parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: expected an exact rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: not a rational: {value!r}") from exc
    raise ParseError(f"{where}: expected an exact rational string, got {value!r}")


def fmt_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fmt_vec(v: Vec2) -> list[str]:
    return [fmt_rational(v.x), fmt_rational(v.y)]


def fmt_scalar_poly(p: ScalarPoly) -> dict[str, str]:
    return {"i2": fmt_rational(p.c2), "i1": fmt_rational(p.c1), "const": fmt_rational(p.c0)}


def fmt_vec_poly(p: VecPoly) -> dict[str, list[str]]:
    return {"i2": fmt_vec(p.c2), "i1": fmt_vec(p.c1), "const": fmt_vec(p.c0)}


def fmt_mat(m: IntMat2) -> list[list[int]]:
    return [[m.a, m.b], [m.c, m.d]]


def _load_json(path: str | Path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _coordinate_pair(raw, where: str) -> Vec2:
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise ParseError(f"{where}: expected a coordinate pair, got {raw!r}")
    return Vec2(parse_rational(raw[0], f"{where}[0]"), parse_rational(raw[1], f"{where}[1]"))


def load_polytope(path: str | Path) -> Polygon:
    """Read {"vertices": [["0","0"], ...]} into a canonical polygon."""
    data = _load_json(path)
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError(f"{path}: expected an object with a 'vertices' key")
    raw = data["vertices"]
    if not isinstance(raw, list) or len(raw) < 3:
        raise ParseError(f"{path}: 'vertices' must list at least three coordinate pairs")
    points = [
        _coordinate_pair(entry, f"{path}: vertices[{idx}]") for idx, entry in enumerate(raw)
    ]
    return Polygon.from_coords([p.as_tuple() for p in points])


def load_cuts(path: str | Path) -> list[CornerCut]:
    """Read {"cuts": [{"vertex": ["0","0"], "depth": "1/2"}, ...]}."""
    data = _load_json(path)
    if not isinstance(data, dict) or "cuts" not in data:
        raise ParseError(f"{path}: expected an object with a 'cuts' key")
    raw = data["cuts"]
    if not isinstance(raw, list):
        raise ParseError(f"{path}: 'cuts' must be a list")
    cuts = []
    for idx, entry in enumerate(raw):
        where = f"{path}: cuts[{idx}]"
        if not isinstance(entry, dict) or "vertex" not in entry or "depth" not in entry:
            raise ParseError(f"{where}: expected keys 'vertex' and 'depth'")
        vertex = _coordinate_pair(entry["vertex"], f"{where}.vertex")
        depth = parse_rational(entry["depth"], f"{where}.depth")
        cuts.append(CornerCut(vertex, depth))
    return cuts


def load_points(path: str | Path) -> PointConfiguration:
    """Read {"points": [["1","0","0"], ...]} into a point configuration."""
    data = _load_json(path)
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError(f"{path}: expected an object with a 'points' key")
    raw = data["points"]
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{path}: 'points' must be a non-empty list")
    rows = []
    for idx, entry in enumerate(raw):
        where = f"{path}: points[{idx}]"
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ParseError(f"{where}: expected a projective triple")
        rows.append([parse_rational(c, f"{where}[{j}]") for j, c in enumerate(entry)])
    try:
        return PointConfiguration.of(rows)
    except (ValueError, DuplicatePoint) as exc:
        raise ParseError(f"{path}: {exc}") from exc


def load_group(path: str | Path) -> SymmetryGroup:
    """Read {"generators": [[[0,-1],[1,-1]], ...]} (row-major matrices)."""
    data = _load_json(path)
    if not isinstance(data, dict) or "generators" not in data:
        raise ParseError(f"{path}: expected an object with a 'generators' key")
    raw = data["generators"]
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{path}: 'generators' must be a non-empty list")
    generators = []
    for idx, entry in enumerate(raw):
        where = f"{path}: generators[{idx}]"
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or any(not isinstance(row, (list, tuple)) or len(row) != 2 for row in entry)
        ):
            raise ParseError(f"{where}: expected a 2x2 integer matrix in row-major form")
        values = [c for row in entry for c in row]
        if any(isinstance(c, (float, bool)) or not isinstance(c, int) for c in values):
            raise ParseError(f"{where}: matrix entries must be integers")
        generators.append(IntMat2.from_rows(entry[0], entry[1]))
    try:
        return SymmetryGroup.generated_by(generators)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def file_digest(path: str | Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def render_report(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    lines: list[str] = []

    def emit(key: str, value, indent: int) -> None:
        pad = "  " * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for sub_key, sub_value in value.items():
                emit(str(sub_key), sub_value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for entry in value:
                lines.append(f"{pad}  -")
                for sub_key, sub_value in entry.items():
                    emit(str(sub_key), sub_value, indent + 2)
        else:
            lines.append(f"{pad}{key}: {_flat(value)}")

    def _flat(value) -> str:
        if isinstance(value, list):
            return "(" + ", ".join(_flat(v) for v in value) + ")"
        if isinstance(value, bool):
            return "yes" if value else "no"
        return str(value)

    for key, value in report.items():
        emit(str(key), value, 0)
    return "\n".join(lines) + "\n"
