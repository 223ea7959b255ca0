"""Circle-based beta-skeletons for beta >= ~0 (finite positive).

An edge {v1, v2} survives when no third point sees it under an angle of
theta(beta) or more; the forbidden neighbourhood is treated as closed, so
a witness exactly on the critical circle removes the edge.  beta = 1
gives the Gabriel graph, beta = 2 the relative neighbourhood graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import EPS_DIST, GeometryError, Point

EPS_ANGLE = 1e-9


@dataclass(frozen=True)
class BetaParameter:
    beta: float

    def __post_init__(self) -> None:
        b = float(self.beta)
        if not (math.isfinite(b) and b > 0.0):
            raise GeometryError("beta must be a finite real > 0")
        object.__setattr__(self, "beta", b)


@dataclass(frozen=True)
class ProximityGraph:
    vertices: tuple[Point, ...]
    edges: frozenset  # of (i, j) pairs with i < j

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _beta_value(beta) -> float:
    if isinstance(beta, BetaParameter):
        return beta.beta
    return BetaParameter(beta).beta


def theta_of_beta(beta: float) -> float:
    """Critical angle of the beta-neighbourhood.

    arcsin(1/beta) for beta >= 1 and pi - arcsin(beta) for beta <= 1;
    the two branches agree (pi/2) at beta = 1.
    """
    b = _beta_value(beta)
    if b >= 1.0:
        return math.asin(1.0 / b)
    return math.pi - math.asin(b)


def beta_skeleton(points, beta: float) -> ProximityGraph:
    """Brute-force beta-skeleton: every pair tested against every witness.

    Duplicate points (under the distance epsilon) are rejected.  A set of
    exactly two points yields the single edge between them.
    """
    pts = tuple(points)
    n = len(pts)
    if n < 2:
        raise GeometryError("beta skeleton needs at least 2 points")
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    eps2 = EPS_DIST * EPS_DIST
    for i in range(n):
        for j in range(i + 1, n):
            dx = xs[i] - xs[j]
            dy = ys[i] - ys[j]
            if dx * dx + dy * dy <= eps2:
                raise GeometryError("duplicate point")
    theta = theta_of_beta(beta)
    # angle >= theta - EPS_ANGLE  <=>  cos(angle) <= cos(theta - EPS_ANGLE)
    c = math.cos(theta - EPS_ANGLE)
    c2 = c * c
    edges = set()
    for i in range(n):
        xi, yi = xs[i], ys[i]
        for j in range(i + 1, n):
            xj, yj = xs[j], ys[j]
            alive = True
            for k in range(n):
                if k == i or k == j:
                    continue
                ax = xi - xs[k]
                ay = yi - ys[k]
                bx = xj - xs[k]
                by = yj - ys[k]
                dot = ax * bx + ay * by
                if c >= 0.0:
                    if dot <= 0.0 or dot * dot <= c2 * (ax * ax + ay * ay) * (bx * bx + by * by):
                        alive = False
                        break
                elif dot < 0.0 and dot * dot >= c2 * (ax * ax + ay * ay) * (bx * bx + by * by):
                    alive = False
                    break
            if alive:
                edges.add((i, j))
    return ProximityGraph(vertices=pts, edges=frozenset(edges))


def graph_to_dict(g: ProximityGraph) -> dict:
    return {
        "points": [[p.x, p.y] for p in g.vertices],
        "edges": [[i, j] for i, j in g.edge_list()],
    }
