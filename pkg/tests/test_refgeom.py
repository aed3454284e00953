"""Reference-geometry tests: lattice generation against independent
enumeration oracles, two-layer assembly, and perpendicular distances."""

import itertools
import math

import numpy as np
import pytest

from wmofss.refgeom import (
    ReferenceLine,
    ReferenceSet,
    generate_simplex_lattice,
    generate_two_layer,
    perpendicular_distance,
    perpendicular_distance_matrix,
)


def lattice_count_oracle(m: int, p: int) -> int:
    # DP recurrence over the first coordinate, independent of the binomial
    # closed form used nowhere in the implementation either
    if m == 1:
        return 1
    return sum(lattice_count_oracle(m - 1, p - lead) for lead in range(p + 1))


def lattice_enumeration_oracle(m: int, p: int) -> set:
    # every way to drop p units into m slots, as exact rational multiples
    out = set()
    for slots in itertools.combinations_with_replacement(range(m), p):
        counts = [0] * m
        for s in slots:
            counts[s] += 1
        out.add(tuple(counts))
    return out


def test_lattice_counts_match_dp_oracle_and_closed_form():
    for m in range(2, 8):
        for p in range(1, 9):
            pts = generate_simplex_lattice(m, p)
            assert pts.shape == (lattice_count_oracle(m, p), m)
            assert pts.shape[0] == math.comb(p + m - 1, m - 1)


def test_lattice_rows_match_enumeration_exactly():
    for m, p in [(2, 5), (3, 4), (4, 3), (5, 2)]:
        pts = generate_simplex_lattice(m, p)
        got = {tuple(np.rint(row * p).astype(int)) for row in pts}
        assert got == lattice_enumeration_oracle(m, p)


def test_lattice_rows_sum_to_one_and_are_grid_multiples():
    pts = generate_simplex_lattice(6, 7)
    assert np.allclose(pts.sum(axis=1), 1.0, atol=1e-12)
    assert np.all(pts >= 0.0)
    assert np.allclose(pts * 7, np.rint(pts * 7), atol=1e-12)


def test_lattice_order_is_stable_and_starts_at_first_axis():
    a = generate_simplex_lattice(4, 5)
    b = generate_simplex_lattice(4, 5)
    np.testing.assert_array_equal(a, b)
    np.testing.assert_allclose(a[0], [1, 0, 0, 0])
    # lexicographic descending: first column never increases
    assert np.all(np.diff(a[:, 0]) <= 0)


def test_lattice_rejects_bad_arguments():
    with pytest.raises(ValueError):
        generate_simplex_lattice(1, 3)
    with pytest.raises(ValueError):
        generate_simplex_lattice(3, 0)


def test_two_layer_default_sizes():
    # the division choices used by the experiment defaults
    assert len(generate_two_layer(3, 12, 0)) == 91
    assert len(generate_two_layer(5, 6, 0)) == 210
    assert len(generate_two_layer(10, 3, 2)) == 275
    assert len(generate_two_layer(3, 4, 0)) == 15
    assert len(generate_two_layer(5, 3, 0)) == 35
    assert len(generate_two_layer(10, 2, 1)) == 65


def test_two_layer_inner_shrink_hand_case():
    # inner point (1,0,0) moves halfway to the centroid: ((1+1/3)/2, 1/6, 1/6)
    refs = generate_two_layer(3, 1, 1)
    inner_rows = refs.directions[~np.isclose(refs.directions, 0.0).any(axis=1)]
    expect = np.array([2 / 3, 1 / 6, 1 / 6])
    found = np.isclose(inner_rows, expect, atol=1e-12).all(axis=1)
    assert found.any()


def test_two_layer_merges_coincident_points():
    # m=2, p_inner=2: the shrunk (0.5, 0.5) lands exactly on the outer point
    refs = generate_two_layer(2, 2, 2)
    assert len(refs) == 5
    uniq = np.unique(np.round(refs.directions, 12), axis=0)
    assert uniq.shape[0] == len(refs)


def test_two_layer_metadata_and_line_accessors():
    refs = generate_two_layer(3, 2, 0)
    assert refs.m == 3
    assert refs.layer_params == (2, 0)
    assert len(refs.lines) == len(refs) == 6
    line = refs.line(2)
    assert line.id == 2
    np.testing.assert_array_equal(line.direction, refs.directions[2])


def test_two_layer_rejects_negative_inner_divisions():
    with pytest.raises(ValueError):
        generate_two_layer(3, 2, -1)


def test_reference_line_rejects_zero_direction():
    with pytest.raises(ValueError):
        ReferenceLine(direction=np.zeros(3))


def test_perpendicular_distance_hand_cases():
    line = ReferenceLine(direction=np.array([1.0, 1.0]))
    # point on the line
    assert perpendicular_distance(np.array([0.3, 0.3]), line) == pytest.approx(0.0, abs=1e-15)
    # (1,0) against the diagonal: residual is half the anti-diagonal
    assert perpendicular_distance(np.array([1.0, 0.0]), line) == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    # invariant to scaling the direction
    long_line = ReferenceLine(direction=np.array([7.0, 7.0]))
    assert perpendicular_distance(np.array([1.0, 0.0]), long_line) == pytest.approx(math.sqrt(2) / 2, abs=1e-12)


def test_perpendicular_distance_dimension_mismatch():
    line = ReferenceLine(direction=np.array([1.0, 1.0, 1.0]))
    with pytest.raises(ValueError):
        perpendicular_distance(np.array([1.0, 0.0]), line)


def test_distance_matrix_matches_scalar_function():
    rng = np.random.default_rng(7)
    points = rng.uniform(0, 2, size=(40, 4))
    directions = rng.uniform(0.1, 1, size=(9, 4))
    D = perpendicular_distance_matrix(points, directions)
    assert D.shape == (40, 9)
    assert np.all(D >= 0.0)
    for i in [0, 13, 39]:
        for j in [0, 4, 8]:
            want = perpendicular_distance(points[i], ReferenceLine(direction=directions[j]))
            assert D[i, j] == pytest.approx(want, abs=1e-10)


def test_distance_matrix_zero_for_points_on_their_line():
    directions = np.eye(3)
    points = 0.7 * directions
    D = perpendicular_distance_matrix(points, directions)
    np.testing.assert_allclose(np.diag(D), 0.0, atol=1e-12)
