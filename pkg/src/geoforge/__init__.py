"""Planar geometry structures with JSON, SVG and Ipe output.

The package builds classic figure-friendly structures over points,
segments and polygons: point and PR quadtrees, trapezoidal maps, onion
decompositions, beta-skeletons, floating bodies of convex polygons,
ear-clipping triangulations with uniform sampling, and Sierpinski
fractals.  Every structure has a canonical JSON dump and can be drawn to
SVG or Ipe, either from Python or through the geoforge CLI.
"""

from .beta_skeleton import BetaParameter, ProximityGraph, beta_skeleton, theta_of_beta
from .core import (
    COORD_LIMIT,
    EPS_AREA,
    EPS_DIST,
    BBox,
    GeometryError,
    Halfplane,
    Orientation,
    Point,
    PointLocation,
    Polygon,
    Segment,
    angle_at,
    clip_halfplane,
    convex_hull,
    orientation,
    point_in_polygon,
    polygon_area,
    polygon_bbox,
    polygon_is_convex,
)
from .floating_body import (
    AreaFraction,
    FloatingBodyResult,
    chord_midpoint,
    cut_halfplane,
    dupin_floating_body,
)
from .fractals import FractalKind, FractalOutput, sierpinski_carpet, sierpinski_triangle
from .onion import OnionDecomposition, onion_decomposition
from .quadtree import (
    MAX_DEPTH,
    PointQuadtree,
    PRQuadtree,
    build_point_quadtree,
    build_pr_quadtree,
    parse_quadtree_array,
    quadtree_to_array,
)
from .render import RenderStyle, emit_ipe, emit_svg
from .scene import Scene, SceneError, parse_scene, serialize_scene
from .trapmap import (
    Trapezoid,
    TrapezoidalMap,
    VerticalExtension,
    Wall,
    build_trapezoidal_map,
    locate,
    trapezoid_area,
)
from .triangulation import (
    SampleRequest,
    Triangulation,
    sample_points,
    triangulate,
)

__version__ = "0.1.0"

__all__ = [
    "AreaFraction",
    "BBox",
    "BetaParameter",
    "COORD_LIMIT",
    "EPS_AREA",
    "EPS_DIST",
    "FloatingBodyResult",
    "FractalKind",
    "FractalOutput",
    "GeometryError",
    "Halfplane",
    "MAX_DEPTH",
    "OnionDecomposition",
    "Orientation",
    "Point",
    "PointLocation",
    "PointQuadtree",
    "PRQuadtree",
    "Polygon",
    "ProximityGraph",
    "RenderStyle",
    "SampleRequest",
    "Scene",
    "SceneError",
    "Segment",
    "Trapezoid",
    "TrapezoidalMap",
    "Triangulation",
    "VerticalExtension",
    "Wall",
    "angle_at",
    "beta_skeleton",
    "build_point_quadtree",
    "build_pr_quadtree",
    "build_trapezoidal_map",
    "chord_midpoint",
    "clip_halfplane",
    "convex_hull",
    "cut_halfplane",
    "dupin_floating_body",
    "emit_ipe",
    "emit_svg",
    "locate",
    "onion_decomposition",
    "orientation",
    "parse_quadtree_array",
    "parse_scene",
    "point_in_polygon",
    "polygon_area",
    "polygon_bbox",
    "polygon_is_convex",
    "quadtree_to_array",
    "sample_points",
    "serialize_scene",
    "sierpinski_carpet",
    "sierpinski_triangle",
    "theta_of_beta",
    "trapezoid_area",
    "triangulate",
]
