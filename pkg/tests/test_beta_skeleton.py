"""Beta-skeletons: the angle rule, its special cases, and its limits."""

from __future__ import annotations

import math
import random

import pytest

import geomgen
from geoforge import BetaParameter, GeometryError, Point, beta_skeleton, theta_of_beta
from geoforge.beta_skeleton import graph_to_dict


def test_theta_special_values():
    assert theta_of_beta(1.0) == pytest.approx(math.pi / 2, abs=1e-12)
    assert theta_of_beta(2.0) == pytest.approx(math.pi / 6, abs=1e-12)
    assert theta_of_beta(0.5) == pytest.approx(5 * math.pi / 6, abs=1e-12)


def test_theta_is_monotone_decreasing():
    betas = [0.05, 0.2, 0.6, 0.9, 1.0, 1.1, 1.7, 2.0, 5.0, 50.0]
    thetas = [theta_of_beta(b) for b in betas]
    for a, b in zip(thetas, thetas[1:]):
        assert b < a
    assert thetas[-1] < 0.03  # theta -> 0 as beta grows
    assert thetas[0] > 3.0  # theta -> pi as beta -> 0


def test_theta_branch_gap_scales_like_sqrt():
    # near beta = 1 the two branches drift apart like 2*sqrt(2*eps)
    for eps in (1e-4, 1e-6, 1e-8, 1e-10):
        gap = abs(theta_of_beta(1.0 - eps) - theta_of_beta(1.0 + eps))
        model = 2.0 * math.sqrt(2.0 * eps)
        assert gap == pytest.approx(model, rel=5e-2)


def test_beta_parameter_validation():
    assert BetaParameter(2).beta == 2.0
    for bad in (0.0, -3.0, math.inf, math.nan):
        with pytest.raises(GeometryError):
            BetaParameter(bad)


def test_two_points_always_connected():
    g = beta_skeleton([Point(0, 0), Point(1, 0)], 7.5)
    assert g.edge_list() == [(0, 1)]


def test_right_angle_witness_is_inside_closed_gabriel_region():
    # the apex of a right triangle sits exactly on the diametral circle
    # of the hypotenuse; a closed region means the hypotenuse dies
    g = beta_skeleton([Point(0, 0), Point(1, 0), Point(0, 1)], 1.0)
    assert g.edge_list() == [(0, 1), (0, 2)]


def test_input_validation():
    with pytest.raises(GeometryError):
        beta_skeleton([Point(0, 0)], 1.0)
    with pytest.raises(GeometryError):
        beta_skeleton([Point(0, 0), Point(0, 0), Point(1, 1)], 1.0)


def test_matches_gabriel_oracle():
    rng = random.Random(611)
    for _ in range(100):
        n = rng.randint(2, 40)
        raw = geomgen.random_points(rng, n)
        got = beta_skeleton([Point(x, y) for x, y in raw], 1.0).edges
        assert set(got) == geomgen.gabriel_oracle(raw)


def test_matches_independent_angle_oracle():
    rng = random.Random(612)
    for beta in (0.3, 0.7, 1.0, 1.3, 2.0, 4.0):
        for _ in range(20):
            n = rng.randint(2, 30)
            raw = geomgen.random_points(rng, n)
            got = beta_skeleton([Point(x, y) for x, y in raw], beta).edges
            want = geomgen.angle_skeleton_oracle(raw, theta_of_beta(beta))
            assert set(got) == want


def test_edges_shrink_as_beta_grows():
    rng = random.Random(613)
    for _ in range(25):
        raw = geomgen.random_points(rng, 25)
        pts = [Point(x, y) for x, y in raw]
        e_half = beta_skeleton(pts, 0.5).edges
        e_one = beta_skeleton(pts, 1.0).edges
        e_two = beta_skeleton(pts, 2.0).edges
        assert e_two <= e_one <= e_half


def test_beta_two_is_subgraph_of_lune_rng():
    # the angle rule's forbidden region at beta=2 strictly contains the
    # RNG lune, so its edges form a subset of the lune-based RNG
    rng = random.Random(614)
    strict_somewhere = False
    for _ in range(40):
        n = rng.randint(3, 30)
        raw = geomgen.random_points(rng, n)
        got = set(beta_skeleton([Point(x, y) for x, y in raw], 2.0).edges)
        lune = geomgen.rng_lune_oracle(raw)
        assert got <= lune
        if got != lune:
            strict_somewhere = True
    assert strict_somewhere


def test_closest_pair_connected_for_beta_at_most_one():
    rng = random.Random(615)
    for _ in range(25):
        n = rng.randint(2, 30)
        raw = geomgen.random_points(rng, n)
        pts = [Point(x, y) for x, y in raw]
        best = min(
            ((i, j) for i in range(n) for j in range(i + 1, n)),
            key=lambda ij: geomgen.dist2(raw[ij[0]], raw[ij[1]]),
        )
        for beta in (0.4, 0.8, 1.0):
            assert best in beta_skeleton(pts, beta).edges


def test_similarity_invariance():
    rng = random.Random(616)
    raw = geomgen.random_points(rng, 20)
    base = beta_skeleton([Point(x, y) for x, y in raw], 1.4).edges
    t = 0.7
    ct, st = math.cos(t), math.sin(t)
    moved = [
        Point(3.0 * (ct * x - st * y) + 11.0, 3.0 * (st * x + ct * y) - 4.0)
        for x, y in raw
    ]
    assert beta_skeleton(moved, 1.4).edges == base


def test_graph_dict_shape():
    d = graph_to_dict(beta_skeleton([Point(0, 0), Point(2, 0), Point(1, 3)], 1.0))
    assert d["points"] == [[0.0, 0.0], [2.0, 0.0], [1.0, 3.0]]
    assert all(i < j for i, j in d["edges"])
