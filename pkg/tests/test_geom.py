import math

import numpy as np
import pytest

from boolgrain._geom import (
    ball_overlap,
    centered_cube_tail_volume,
    interval_union_length,
    rect_in_disk_area,
    rect_tail_volume,
    unit_ball_volume,
    uniform_in_ball,
)


def test_unit_ball_volumes():
    assert unit_ball_volume(1) == pytest.approx(2.0)
    assert unit_ball_volume(2) == pytest.approx(math.pi)
    assert unit_ball_volume(3) == pytest.approx(4.0 * math.pi / 3.0)


def test_ball_overlap_closed_forms():
    # full overlap at zero separation
    for nu in (1, 2, 3):
        assert ball_overlap(nu, 1.3, 0.0) == pytest.approx(unit_ball_volume(nu) * 1.3 ** nu)
        assert ball_overlap(nu, 1.3, 2.6) == 0.0
        assert ball_overlap(nu, 1.3, 5.0) == 0.0
    # unit disks at separation 1: standard lens area
    assert ball_overlap(2, 1.0, 1.0) == pytest.approx(2 * math.pi / 3 - math.sqrt(3) / 2)


@pytest.mark.parametrize("nu", [1, 2, 3])
def test_ball_overlap_against_mc(nu):
    rng = np.random.default_rng(41 + nu)
    a, d = 1.2, 0.9
    pts = uniform_in_ball(rng, 200_000, nu, a)
    shift = np.zeros(nu)
    shift[0] = d
    frac = np.mean(np.linalg.norm(pts + shift, axis=1) < a)
    mc = frac * unit_ball_volume(nu) * a ** nu
    assert ball_overlap(nu, a, d) == pytest.approx(mc, rel=0.02)


def test_rect_in_disk_area_against_mc():
    rng = np.random.default_rng(7)
    for (w, h, r) in [(1.3, 3.7, 2.9), (0.5, 0.5, 2.0), (4.0, 1.0, 1.5)]:
        x = rng.random(300_000) * w
        y = rng.random(300_000) * h
        mc = np.mean(x * x + y * y <= r * r) * w * h
        assert rect_in_disk_area(w, h, r) == pytest.approx(mc, abs=3e-2)


def test_rect_tail_volume_edges():
    # rectangle entirely inside the disk
    assert rect_tail_volume(1.0, 1.0, 5.0) == pytest.approx(0.0, abs=1e-12)
    # disk of radius 0: everything is outside
    assert rect_tail_volume(2.0, 3.0, 0.0) == pytest.approx(6.0)


def test_centered_cube_tail_volume():
    # nu=1 interval (-1, 1) outside radius 0.25: two stubs of 0.75
    assert centered_cube_tail_volume(2.0, 0.25, 1) == pytest.approx(1.5)
    # nu=2 against MC
    rng = np.random.default_rng(3)
    side, lam = 1.4, 0.9
    pts = (rng.random((300_000, 2)) - 0.5) * side
    mc = np.mean(np.linalg.norm(pts, axis=1) > lam) * side * side
    assert centered_cube_tail_volume(side, lam, 2) == pytest.approx(mc, abs=3e-2)


def test_interval_union_length():
    lo = np.array([0.0, 0.5, 3.0])
    hi = np.array([1.0, 2.0, 4.0])
    assert interval_union_length(lo, hi) == pytest.approx(3.0)
    assert interval_union_length(np.array([]), np.array([])) == 0.0


def test_uniform_in_ball_radial_law():
    rng = np.random.default_rng(11)
    pts = uniform_in_ball(rng, 100_000, 2, 2.0)
    r = np.linalg.norm(pts, axis=1)
    assert r.max() <= 2.0
    # P(|X| <= t) = (t/2)^2 for uniform on the disk
    assert np.mean(r <= 1.0) == pytest.approx(0.25, abs=0.01)
