"""JSON file formats for modules, critical sets, and switch-point CSV.

Numbers in the JSON formats are integers or strings "p/q" in lowest
terms, so exact values survive the file boundary.  CSV output carries
numerator/denominator columns for the same reason.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Sequence, Set, Tuple, Union

from .geometry import Point
from .persistence import Rect, RectModule
from .switchpoints import FINITE, SwitchPoint, switch_point_sort_key

MODULE_TAG = "rectmod-v1"
CRITSET_TAG = "critset-v1"


class FormatError(ValueError):
    """Raised for any malformed input file; the message says what broke."""


def parse_rat(value) -> Fraction:
    if isinstance(value, bool):
        raise FormatError(f"expected a rational number, got boolean {value}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational string {value!r}: {exc}") from exc
    raise FormatError(
        f"expected an integer or 'p/q' string, got {type(value).__name__} {value!r}"
    )


def rat_to_json(value: Fraction) -> Union[int, str]:
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _parse_point(value, where: str) -> Point:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise FormatError(f"{where}: expected a [x, y] pair, got {value!r}")
    return (parse_rat(value[0]), parse_rat(value[1]))


def _load_json(data) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top-level JSON value must be an object")
    return doc


def parse_module_file(data) -> RectModule:
    doc = _load_json(data)
    tag = doc.get("format")
    if tag != MODULE_TAG:
        raise FormatError(f"wrong format tag: expected {MODULE_TAG!r}, got {tag!r}")
    rects_json = doc.get("rectangles")
    if not isinstance(rects_json, list):
        raise FormatError("'rectangles' must be a list")
    rects = []
    for i, rj in enumerate(rects_json):
        where = f"rectangles[{i}]"
        if not isinstance(rj, dict):
            raise FormatError(f"{where}: expected an object")
        lower = _parse_point(rj.get("lower"), f"{where}.lower")
        upper = _parse_point(rj.get("upper"), f"{where}.upper")
        mult = rj.get("multiplicity", 1)
        if isinstance(mult, bool) or not isinstance(mult, int):
            raise FormatError(f"{where}: multiplicity must be an integer")
        try:
            rects.append(Rect(lower, upper, mult))
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from exc
    return RectModule(tuple(rects))


def serialize_module_file(mod: RectModule) -> str:
    doc = {
        "format": MODULE_TAG,
        "rectangles": [
            {
                "lower": [rat_to_json(r.lower[0]), rat_to_json(r.lower[1])],
                "upper": [rat_to_json(r.upper[0]), rat_to_json(r.upper[1])],
                "multiplicity": r.multiplicity,
            }
            for r in mod.rectangles
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_crit_file(data) -> Set[Point]:
    doc = _load_json(data)
    tag = doc.get("format")
    if tag != CRITSET_TAG:
        raise FormatError(f"wrong format tag: expected {CRITSET_TAG!r}, got {tag!r}")
    pts_json = doc.get("points")
    if not isinstance(pts_json, list):
        raise FormatError("'points' must be a list")
    return {_parse_point(p, f"points[{i}]") for i, p in enumerate(pts_json)}


def serialize_crit_file(points: Sequence[Point]) -> str:
    doc = {
        "format": CRITSET_TAG,
        "points": [
            [rat_to_json(p[0]), rat_to_json(p[1])] for p in sorted(set(points))
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_input_file(data):
    """Parse either supported input format: ('module', RectModule) or ('critset', points)."""
    doc = _load_json(data)
    tag = doc.get("format")
    if tag == MODULE_TAG:
        return "module", parse_module_file(data)
    if tag == CRITSET_TAG:
        return "critset", parse_crit_file(data)
    raise FormatError(
        f"wrong format tag: expected {MODULE_TAG!r} or {CRITSET_TAG!r}, got {tag!r}"
    )


def points_to_csv(points: Sequence[Point]) -> str:
    lines = ["x_num,x_den,y_num,y_den"]
    for p in sorted(set((Fraction(a), Fraction(b)) for a, b in points)):
        lines.append(
            f"{p[0].numerator},{p[0].denominator},{p[1].numerator},{p[1].denominator}"
        )
    return "\n".join(lines) + "\n"


def switch_points_to_csv(sps: Sequence[SwitchPoint]) -> str:
    """CSV rows: kind plus exact coordinates (finite) or slope (at infinity)."""
    lines = ["kind,x_num,x_den,y_num,y_den,m_num,m_den"]
    for sp in sorted(sps, key=switch_point_sort_key):
        if sp.kind == FINITE:
            lines.append(
                f"finite,{sp.x.numerator},{sp.x.denominator},"
                f"{sp.y.numerator},{sp.y.denominator},,"
            )
        else:
            lines.append(f"slope,,,,,{sp.slope.numerator},{sp.slope.denominator}")
    return "\n".join(lines) + "\n"


def switch_points_to_json(sps: Sequence[SwitchPoint]) -> str:
    finite: List[Tuple] = []
    slopes: List = []
    for sp in sorted(sps, key=switch_point_sort_key):
        if sp.kind == FINITE:
            finite.append([rat_to_json(sp.x), rat_to_json(sp.y)])
        else:
            slopes.append(rat_to_json(sp.slope))
    return (
        json.dumps(
            {"format": "switchpoints-v1", "finite": finite, "slopes": slopes},
            indent=2,
        )
        + "\n"
    )
