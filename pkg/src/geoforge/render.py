"""SVG and Ipe figure output.

Both emitters consume the same drawables: the scene's own geometry first,
then layers extracted from a structure dump (the plain-data form each
module produces).  Layers cycle through the style's palette.  Output is
deterministic: fixed element order and fixed coordinate formatting.

SVG uses fixed 6-decimal coordinates and flips the y axis so figures read
in math orientation.  Ipe files carry no stylesheet and use only the
elements ipe, page, path, use and group, which Ipe 7.2.x opens with its
defaults; coordinates are trimmed to at most 6 decimals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GeometryError
from .scene import Scene

IPE_VERSION = "70218"
IPE_CREATOR = "geoforge"

_IPE_COLORS = {
    "black": "black",
    "red": "1 0 0",
    "blue": "0 0 1",
    "green": "0 1 0",
    "orange": "1 0.647 0",
    "purple": "0.627 0.125 0.941",
}


@dataclass(frozen=True)
class RenderStyle:
    stroke_width: float = 1.0
    mark_radius: float = 2.0
    layer_colors: tuple[str, ...] = ("black", "red", "blue", "green", "orange", "purple")

    def __post_init__(self) -> None:
        if not (self.stroke_width > 0 and self.mark_radius > 0):
            raise GeometryError("stroke width and mark radius must be positive")
        if not self.layer_colors:
            raise GeometryError("palette must not be empty")

    def color(self, layer: int) -> str:
        return self.layer_colors[layer % len(self.layer_colors)]


@dataclass(frozen=True)
class Mark:
    x: float
    y: float


@dataclass(frozen=True)
class Stroke:
    points: tuple[tuple[float, float], ...]
    closed: bool


def _rect(x0, y0, x1, y1) -> Stroke:
    return Stroke(((x0, y0), (x1, y0), (x1, y1), (x0, y1)), closed=True)


def _scene_layer(scene: Scene) -> list:
    layer: list = []
    for s in scene.segments:
        layer.append(Stroke(((s.a.x, s.a.y), (s.b.x, s.b.y)), closed=False))
    for poly in scene.polygons:
        layer.append(Stroke(tuple((v.x, v.y) for v in poly.vertices), closed=True))
    for p in scene.points:
        layer.append(Mark(p.x, p.y))
    return layer


def _result_layers(results, scene: Scene) -> list[list]:
    if results is None:
        return []
    if isinstance(results, list):
        return _onion_layers(results)
    if not isinstance(results, dict):
        raise GeometryError("cannot render results of type %r" % type(results).__name__)
    keys = set(results)
    if keys == {"kind", "root"}:
        return _quadtree_layers(results)
    if keys == {"kind", "depth", "cells"}:
        return [[Stroke(tuple((x, y) for x, y in cell), closed=True) for cell in results["cells"]]]
    if keys == {"bbox", "segments", "extensions", "trapezoids"}:
        return _trapmap_layers(results)
    if keys == {"points", "edges"}:
        pts = results["points"]
        edges = [
            Stroke(((pts[i][0], pts[i][1]), (pts[j][0], pts[j][1])), closed=False)
            for i, j in results["edges"]
        ]
        marks = [Mark(x, y) for x, y in pts]
        return [edges, marks]
    if keys == {"delta", "dupin", "convex_fb", "is_dupin_convex"}:
        return _floating_layers(results)
    if keys == {"triangles", "samples"}:
        return _triangulation_layers(results, scene)
    raise GeometryError("cannot render this dump")


def _onion_layers(layers_data: list) -> list[list]:
    out: list[list] = []
    for layer_pts in layers_data:
        layer: list = []
        pts = [(x, y) for x, y in layer_pts]
        if len(pts) >= 3:
            layer.append(Stroke(tuple(pts), closed=True))
        elif len(pts) == 2:
            layer.append(Stroke(tuple(pts), closed=False))
        layer.extend(Mark(x, y) for x, y in pts)
        out.append(layer)
    return out


def _quadtree_layers(data: dict) -> list[list]:
    lines: list = []
    marks: list = []
    root = data["root"]
    if data["kind"] == "point":
        if root is not None:
            bounds = _point_tree_bounds(root)
            lines.append(_rect(*bounds))
            _point_tree_lines(root, bounds, lines, marks)
    elif data["kind"] == "pr":
        _pr_tree_lines(root, lines, marks)
    else:
        raise GeometryError("cannot render this dump")
    return [lines, marks]


def _point_tree_bounds(root: dict) -> tuple[float, float, float, float]:
    sites: list[tuple[float, float]] = []

    def walk(node):
        if node is None:
            return
        sites.append(tuple(node["site"]))
        for key in ("nw", "ne", "sw", "se"):
            walk(node[key])

    walk(root)
    xs = [s[0] for s in sites]
    ys = [s[1] for s in sites]
    cx = (min(xs) + max(xs)) / 2.0
    cy = (min(ys) + max(ys)) / 2.0
    side = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    half = side * 1.10 / 2.0
    return (cx - half, cy - half, cx + half, cy + half)


def _point_tree_lines(node, bounds, lines: list, marks: list) -> None:
    if node is None:
        return
    x0, y0, x1, y1 = bounds
    sx, sy = node["site"]
    lines.append(Stroke(((sx, y0), (sx, y1)), closed=False))
    lines.append(Stroke(((x0, sy), (x1, sy)), closed=False))
    marks.append(Mark(sx, sy))
    _point_tree_lines(node["nw"], (x0, sy, sx, y1), lines, marks)
    _point_tree_lines(node["ne"], (sx, sy, x1, y1), lines, marks)
    _point_tree_lines(node["sw"], (x0, y0, sx, sy), lines, marks)
    _point_tree_lines(node["se"], (sx, y0, x1, sy), lines, marks)


def _pr_tree_lines(node, lines: list, marks: list) -> None:
    lines.append(_rect(*node["region"]))
    if "points" in node:
        marks.extend(Mark(x, y) for x, y in node["points"])
        return
    for child in node["children"]:
        _pr_tree_lines(child, lines, marks)


def _trapmap_layers(data: dict) -> list[list]:
    base: list = [_rect(*data["bbox"])]
    for (ax, ay), (bx, by) in data["segments"]:
        base.append(Stroke(((ax, ay), (bx, by)), closed=False))
    ext: list = []
    for e in data["extensions"]:
        ox, oy = e["origin"]
        ux, uy = e["up_hit"]
        dx, dy = e["down_hit"]
        ext.append(Stroke(((dx, dy), (ox, oy), (ux, uy)), closed=False))
    return [base, ext]


def _floating_layers(data: dict) -> list[list]:
    out: list[list] = []
    dupin = [(x, y) for x, y in data["dupin"]]
    layer: list = []
    if len(dupin) >= 3:
        layer.append(Stroke(tuple(dupin), closed=True))
    elif len(dupin) == 2:
        layer.append(Stroke(tuple(dupin), closed=False))
    elif dupin:
        layer.append(Mark(*dupin[0]))
    out.append(layer)
    fb = data["convex_fb"]
    out.append([] if fb is None else [Stroke(tuple((x, y) for x, y in fb), closed=True)])
    return out


def _triangulation_layers(data: dict, scene: Scene) -> list[list]:
    if not scene.polygons:
        raise GeometryError("cannot render a triangulation without its polygon")
    verts = scene.polygons[0].vertices
    tris: list = []
    for i, j, k in data["triangles"]:
        tris.append(
            Stroke(
                ((verts[i].x, verts[i].y), (verts[j].x, verts[j].y), (verts[k].x, verts[k].y)),
                closed=True,
            )
        )
    marks = [Mark(x, y) for x, y in data["samples"]]
    return [tris, marks]


def _gather_layers(scene: Scene, results) -> list[list]:
    layers = [_scene_layer(scene)] + _result_layers(results, scene)
    if not any(layers):
        raise GeometryError("nothing to render")
    return layers


def _bounds(scene: Scene, layers: list[list]) -> tuple[float, float, float, float]:
    if scene.bbox is not None:
        b = scene.bbox
        return b.xmin, b.ymin, b.xmax, b.ymax
    xs: list[float] = []
    ys: list[float] = []
    for layer in layers:
        for item in layer:
            if isinstance(item, Mark):
                xs.append(item.x)
                ys.append(item.y)
            else:
                xs.extend(p[0] for p in item.points)
                ys.extend(p[1] for p in item.points)
    return min(xs), min(ys), max(xs), max(ys)


def _padded(bounds, frac: float = 0.05) -> tuple[float, float, float, float]:
    x0, y0, x1, y1 = bounds
    pad_x = frac * (x1 - x0) if x1 > x0 else 1.0
    pad_y = frac * (y1 - y0) if y1 > y0 else 1.0
    return x0 - pad_x, y0 - pad_y, x1 + pad_x, y1 + pad_y


def _fmt_svg(v: float) -> str:
    s = "%.6f" % v
    return "0.000000" if s == "-0.000000" else s


def _fmt_ipe(v: float) -> str:
    s = ("%.6f" % v).rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def emit_svg(scene: Scene, results=None, style: RenderStyle | None = None) -> str:
    """Render a scene plus an optional structure dump as an SVG document."""
    style = style or RenderStyle()
    layers = _gather_layers(scene, results)
    x0, y0, x1, y1 = _padded(_bounds(scene, layers))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="%s %s %s %s">'
        % (_fmt_svg(x0), _fmt_svg(y0), _fmt_svg(x1 - x0), _fmt_svg(y1 - y0)),
        '<g transform="matrix(1 0 0 -1 0 %s)">' % _fmt_svg(y0 + y1),
    ]
    for index, layer in enumerate(layers):
        color = style.color(index)
        for item in layer:
            if isinstance(item, Mark):
                lines.append(
                    '<circle cx="%s" cy="%s" r="%s" fill="%s"/>'
                    % (_fmt_svg(item.x), _fmt_svg(item.y), _fmt_svg(style.mark_radius), color)
                )
            else:
                parts = []
                for i, (px, py) in enumerate(item.points):
                    parts.append("%s %s %s" % ("M" if i == 0 else "L", _fmt_svg(px), _fmt_svg(py)))
                if item.closed:
                    parts.append("Z")
                lines.append(
                    '<path d="%s" fill="none" stroke="%s" stroke-width="%s"/>'
                    % (" ".join(parts), color, _fmt_svg(style.stroke_width))
                )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_ipe(scene: Scene, results=None, style: RenderStyle | None = None) -> str:
    """Render a scene plus an optional structure dump as an Ipe document."""
    style = style or RenderStyle()
    layers = _gather_layers(scene, results)
    lines = [
        '<?xml version="1.0"?>',
        '<!DOCTYPE ipe SYSTEM "ipe.dtd">',
        '<ipe version="%s" creator="%s">' % (IPE_VERSION, IPE_CREATOR),
        "<page>",
    ]
    for index, layer in enumerate(layers):
        color = _IPE_COLORS.get(style.color(index), "black")
        for item in layer:
            if isinstance(item, Mark):
                lines.append(
                    '<use name="mark/disk(sx)" pos="%s %s" size="normal" stroke="%s"/>'
                    % (_fmt_ipe(item.x), _fmt_ipe(item.y), color)
                )
            else:
                lines.append('<path stroke="%s">' % color)
                for i, (px, py) in enumerate(item.points):
                    lines.append(
                        "%s %s %s" % (_fmt_ipe(px), _fmt_ipe(py), "m" if i == 0 else "l")
                    )
                if item.closed:
                    lines.append("h")
                lines.append("</path>")
    lines.append("</page>")
    lines.append("</ipe>")
    return "\n".join(lines) + "\n"
