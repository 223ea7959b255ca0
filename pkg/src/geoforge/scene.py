"""Scene files: the JSON input format shared by all subcommands.

A scene is a single JSON object with any of the keys "points",
"segments", "polygons" and "bbox"; nothing else.  Parsing is strict:
unknown keys, malformed JSON and invalid geometry are all rejected with
messages that name the offending entry.  Serialization writes polygons
counterclockwise, so parse(serialize(scene)) == scene.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import jsontext
from .core import BBox, GeometryError, Point, Polygon, Segment

_ALLOWED_KEYS = ("points", "segments", "polygons", "bbox")


class SceneError(ValueError):
    """A scene file failed to parse or validate."""


@dataclass(frozen=True)
class Scene:
    points: tuple[Point, ...] = ()
    segments: tuple[Segment, ...] = ()
    polygons: tuple[Polygon, ...] = ()
    bbox: BBox | None = None

    def is_empty(self) -> bool:
        return not (self.points or self.segments or self.polygons)


def parse_scene(text: str) -> Scene:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise SceneError(
            "malformed scene: %s at line %d column %d"
            % (err.msg, err.lineno, err.colno)
        ) from None
    if not isinstance(data, dict):
        raise SceneError("scene must be a JSON object")
    for key in data:
        if key not in _ALLOWED_KEYS:
            raise SceneError("unknown scene key %r" % key)
    points = tuple(
        _parse_point(v, "points[%d]" % i) for i, v in enumerate(_entry_list(data, "points"))
    )
    segments = tuple(
        _parse_segment(v, "segments[%d]" % i)
        for i, v in enumerate(_entry_list(data, "segments"))
    )
    polygons = tuple(
        _parse_polygon(v, "polygons[%d]" % i)
        for i, v in enumerate(_entry_list(data, "polygons"))
    )
    bbox = None
    if "bbox" in data:
        bbox = _parse_bbox(data["bbox"])
    return Scene(points=points, segments=segments, polygons=polygons, bbox=bbox)


def _entry_list(data: dict, key: str) -> list:
    value = data.get(key, [])
    if not isinstance(value, list):
        raise SceneError("%s must be a list" % key)
    return value


def _parse_coords(value, where: str) -> tuple[float, float]:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise SceneError("%s: expected [x, y] numbers" % where)
    return float(value[0]), float(value[1])


def _parse_point(value, where: str) -> Point:
    x, y = _parse_coords(value, where)
    try:
        return Point(x, y)
    except GeometryError as err:
        raise SceneError("%s: %s" % (where, err)) from None


def _parse_segment(value, where: str) -> Segment:
    if not isinstance(value, list) or len(value) != 2:
        raise SceneError("%s: expected [[x, y], [x, y]]" % where)
    a = _parse_point(value[0], where)
    b = _parse_point(value[1], where)
    try:
        return Segment(a, b)
    except GeometryError as err:
        raise SceneError("%s: %s" % (where, err)) from None


def _parse_polygon(value, where: str) -> Polygon:
    if not isinstance(value, list) or len(value) < 3:
        raise SceneError("%s: expected a list of at least 3 vertices" % where)
    verts = [_parse_point(v, where) for v in value]
    try:
        return Polygon(tuple(verts))
    except GeometryError as err:
        raise SceneError("%s: %s" % (where, err)) from None


def _parse_bbox(value) -> BBox:
    if (
        not isinstance(value, list)
        or len(value) != 4
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise SceneError("bbox: expected [xmin, ymin, xmax, ymax]")
    try:
        return BBox(*(float(v) for v in value))
    except GeometryError as err:
        raise SceneError("bbox: %s" % err) from None


def serialize_scene(scene: Scene) -> str:
    data: dict = {}
    if scene.points:
        data["points"] = [[p.x, p.y] for p in scene.points]
    if scene.segments:
        data["segments"] = [[[s.a.x, s.a.y], [s.b.x, s.b.y]] for s in scene.segments]
    if scene.polygons:
        data["polygons"] = [
            [[v.x, v.y] for v in poly.vertices] for poly in scene.polygons
        ]
    if scene.bbox is not None:
        b = scene.bbox
        data["bbox"] = [b.xmin, b.ymin, b.xmax, b.ymax]
    return jsontext.dumps(data)
