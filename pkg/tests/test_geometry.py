"""Spatial primitives: hyperplane witnesses, Petty sets, strings, grids."""

import numpy as np
import pytest
from scipy.optimize import linprog

from proxitop import (
    Hyperplane,
    Region,
    SphereGrid,
    StringPath,
    Worldsheet,
    antipodal_point_witness,
    petty_antipodal_set,
    polyline_min_distance,
    sphere_sample,
    strings_antipodal,
    worldsheet_cover_check,
    worldsheets_antipodal,
)


def test_hyperplane_normalizes_and_measures():
    h = Hyperplane([3.0, 4.0], 10.0)
    assert np.allclose(h.normal, [0.6, 0.8])
    # offset rescales with the normal, so the plane is unchanged
    assert h.offset == pytest.approx(2.0)
    assert h.signed_distance([0.0, 0.0]) == pytest.approx(-2.0)
    assert h.contains([2.0, 1.0])


def test_hyperplane_rejects_zero_normal():
    with pytest.raises(ValueError):
        Hyperplane([0.0, 0.0], 1.0)


def test_witness_for_distinct_points():
    w = antipodal_point_witness([0.0, 0.0], [3.0, 4.0])
    assert w is not None
    ha, hb = w
    assert np.allclose(ha.normal, [0.6, 0.8])
    assert np.allclose(hb.normal, [0.6, 0.8])
    assert ha.offset == pytest.approx(0.0)
    assert hb.offset == pytest.approx(5.0)
    # each plane passes through its own point and strictly misses the other
    assert ha.contains([0.0, 0.0]) and hb.contains([3.0, 4.0])
    assert abs(ha.signed_distance([3.0, 4.0])) > 1e-6


def test_witness_none_for_coincident_points():
    assert antipodal_point_witness([1.0, 2.0], [1.0, 2.0]) is None
    assert antipodal_point_witness([1.0, 2.0], [1.0, 2.0 + 1e-12]) is None


# -- Petty antipodality -----------------------------------------------------


def _petty_oracle(points, tol=1e-9):
    """LP check: every pair sits on parallel supporting planes with a gap.

    For each ordered pair (p, q), look for a direction v with v.x >= v.p for
    all x (p minimal) and v.x <= v.q for all x (q maximal) and v.(q - p) = 1
    (normalization forcing a strict gap). Feasibility of the LP is exactly
    the supported-pair condition on point sets.
    """
    pts = np.asarray(points, dtype=float)
    m, n = pts.shape
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            p, q = pts[i], pts[j]
            # variables: v in R^n; constraints (x - p).v >= 0, (x - q).v <= 0
            rows = []
            for x in pts:
                rows.append(-(x - p))  # -(x-p).v <= 0
                rows.append(x - q)  # (x-q).v <= 0
            a_ub = np.array(rows)
            b_ub = np.zeros(a_ub.shape[0])
            a_eq = (q - p).reshape(1, n)
            b_eq = np.array([1.0])
            res = linprog(
                np.zeros(n),
                A_ub=a_ub,
                b_ub=b_ub,
                A_eq=a_eq,
                b_eq=b_eq,
                bounds=[(None, None)] * n,
                method="highs",
            )
            if not res.success:
                return False
    return True


def test_petty_square_true():
    assert petty_antipodal_set([[1, 1], [1, -1], [-1, 1], [-1, -1]])


def test_petty_two_points_true():
    assert petty_antipodal_set([[0.0, 0.0], [2.0, 1.0]])


def test_petty_collinear_triple_false():
    # middle point can never be extreme in any direction
    assert not petty_antipodal_set([[0, 0], [1, 0], [2, 0]])


def test_petty_obtuse_triangle_true():
    # needs oblique support directions that axis/difference vectors miss
    pts = [[0.0, 0.0], [2.0, 0.0], [3.0, 2.0]]
    assert petty_antipodal_set(pts)
    assert _petty_oracle(pts)


def test_petty_agrees_with_lp_oracle():
    rng = np.random.default_rng(42)
    cells = [(i, j) for i in range(5) for j in range(5)]
    for trial in range(25):
        k = int(rng.integers(2, 7))
        idx = rng.choice(len(cells), size=k, replace=False)
        pts = np.array([cells[i] for i in idx], dtype=float)
        assert petty_antipodal_set(pts) == _petty_oracle(pts), pts.tolist()


def test_petty_duplicate_points_false():
    assert not petty_antipodal_set([[0, 0], [0, 0], [1, 1]])


# -- strings ----------------------------------------------------------------


def test_string_path_basic():
    s = StringPath([[0, 0], [1, 0], [1, 1]])
    assert s.vertex_count == 3
    assert not s.closed
    segs = s.segments()
    assert segs.shape == (2, 2, 2)


def test_string_path_closed_adds_wrap_edge():
    s = StringPath([[0, 0], [1, 0], [0, 1]], closed=True)
    assert s.segments().shape == (3, 2, 2)


def test_string_path_rejects_repeated_vertex():
    with pytest.raises(ValueError):
        StringPath([[0, 0], [0, 0], [1, 1]])


def test_strings_antipodal_by_symmetric_difference():
    a = StringPath([[0, 0], [1, 0]])
    b = StringPath([[0, 0], [2, 0]])
    assert strings_antipodal(a, b)
    # identical vertex sets are not antipodal
    c = StringPath([[0, 0], [1, 0]])
    assert not strings_antipodal(a, c)
    # same set, opposite orientation
    d = StringPath([[1, 0], [0, 0]])
    assert not strings_antipodal(a, d)


def test_polyline_min_distance_parallel_segments():
    a = StringPath([[0, 0], [1, 0]])
    b = StringPath([[0, 1], [1, 1]])
    assert polyline_min_distance(a, b) == pytest.approx(1.0)


def test_polyline_min_distance_crossing_is_zero():
    a = StringPath([[-1, 0], [1, 0]])
    b = StringPath([[0, -1], [0, 1]])
    assert polyline_min_distance(a, b) == pytest.approx(0.0, abs=1e-12)


def test_worldsheets_antipodal():
    a1 = StringPath([[0, 0], [1, 0]])
    a2 = StringPath([[0, 0.1], [1, 0.1]])
    b1 = StringPath([[0, 5], [1, 5]])
    ws_a = Worldsheet(Region.from_points([[0, 0], [1, 0], [0, 0.1], [1, 0.1]]), (a1, a2), 0.5)
    ws_b = Worldsheet(Region.from_points([[0, 5], [1, 5]]), (b1,), 0.5)
    assert worldsheets_antipodal(ws_a, ws_b)
    # a single-string sheet touches itself everywhere
    assert not worldsheets_antipodal(ws_b, ws_b)


def test_worldsheet_cover_check_flags_uncovered_points():
    pts = [[0, 0], [1, 0], [0, 3]]
    strings = (StringPath([[0, 0], [1, 0]]),)
    ws = Worldsheet(Region.from_points(pts), strings, cover_tolerance=0.5)
    ok, uncovered = worldsheet_cover_check(ws)
    assert not ok
    assert uncovered.shape == (1, 2)
    assert np.allclose(uncovered[0], [0, 3])
    ws2 = Worldsheet(Region.from_points([[0, 0], [1, 0]]), strings, cover_tolerance=0.5)
    ok2, uncovered2 = worldsheet_cover_check(ws2)
    assert ok2 and uncovered2.shape[0] == 0


# -- sphere grids -----------------------------------------------------------


def test_circle_grid_density_two_exact():
    g = sphere_sample(1, 2)
    assert g.size == 4
    want = np.array([[1, 0], [0, 1], [-1, 0], [0, -1]], dtype=float)
    assert np.allclose(g.samples, want, atol=1e-15)
    assert g.antipode_index.tolist() == [2, 3, 0, 1]
    assert g.antipodal_pairs().tolist() == [[0, 2], [1, 3]]


@pytest.mark.parametrize("n,density", [(1, 5), (1, 32), (2, 16), (2, 33), (3, 10)])
def test_sphere_sample_properties(n, density):
    g = sphere_sample(n, density)
    assert g.size == 2 * density
    assert g.dimension == n
    assert g.ambient_dimension == n + 1
    norms = np.linalg.norm(g.samples, axis=1)
    assert np.max(np.abs(norms - 1.0)) <= 1e-12
    idx = g.antipode_index
    # fixed-point-free involution with exact negation
    assert np.all(idx[idx] == np.arange(g.size))
    assert np.all(idx != np.arange(g.size))
    assert np.array_equal(g.samples[idx], -g.samples)


def test_sphere_grid_validates_involution():
    pts = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        SphereGrid(1, pts, np.array([1, 0, 2]))  # index 2 is a fixed point


def test_sphere_grid_validates_negation():
    pts = np.array([[1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        SphereGrid(1, pts, np.array([1, 0]))
