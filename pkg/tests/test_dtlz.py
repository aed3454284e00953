"""DTLZ evaluator tests: analytic front identities, hand-computed values,
equivalences between family members, and input validation."""

import numpy as np
import pytest

from wmofss.dtlz import (
    FAMILIES,
    evaluate,
    front_targets,
    ideal_point,
    make_problem,
    sample_true_pf,
    write_front_csv,
)


def on_front_inputs(spec, count, rng):
    # distance variables at 0.5 zero out g for every family, so the result
    # lies exactly on the analytic front whatever the position variables
    X = rng.uniform(0.0, 1.0, size=(count, spec.n))
    X[:, spec.m - 1 :] = 0.5
    return X


def test_make_problem_fills_conventional_defaults():
    p1 = make_problem("dtlz1", 3)
    assert (p1.k, p1.n) == (5, 7)
    for fam in ("dtlz2", "dtlz3", "dtlz4"):
        p = make_problem(fam, 5)
        assert (p.k, p.n) == (10, 14)
    assert make_problem("dtlz4", 3).alpha_bias == 100.0
    assert make_problem("DTLZ2", 3).family == "dtlz2"


def test_make_problem_rejects_bad_arguments():
    with pytest.raises(ValueError):
        make_problem("dtlz9", 3)
    with pytest.raises(ValueError):
        make_problem("dtlz1", 1)
    with pytest.raises(ValueError):
        make_problem("dtlz1", 3, k=0)
    with pytest.raises(ValueError):
        make_problem("dtlz4", 3, alpha_bias=0.0)


def test_linear_front_identity_dtlz1():
    spec = make_problem("dtlz1", 4)
    rng = np.random.default_rng(11)
    F = evaluate(spec, on_front_inputs(spec, 1000, rng))
    np.testing.assert_allclose(F.sum(axis=1), 0.5, atol=1e-9)
    assert np.all(F >= 0.0)


@pytest.mark.parametrize("family", ["dtlz2", "dtlz3", "dtlz4"])
def test_spherical_front_identity(family):
    spec = make_problem(family, 4)
    rng = np.random.default_rng(12)
    F = evaluate(spec, on_front_inputs(spec, 1000, rng))
    np.testing.assert_allclose(np.einsum("ij,ij->i", F, F), 1.0, atol=1e-9)
    assert np.all(F >= 0.0)


def test_dtlz4_with_unit_bias_equals_dtlz2():
    spec4 = make_problem("dtlz4", 5, alpha_bias=1.0)
    spec2 = make_problem("dtlz2", 5)
    rng = np.random.default_rng(13)
    X = rng.uniform(0.0, 1.0, size=(1000, spec2.n))
    np.testing.assert_allclose(evaluate(spec4, X), evaluate(spec2, X), atol=1e-12)


def test_dtlz2_hand_value():
    # position (0.5, 0.5): angles pi/4, so f = (1/2, 1/2, sqrt(2)/2)
    spec = make_problem("dtlz2", 3)
    f = evaluate(spec, np.full(spec.n, 0.5))
    np.testing.assert_allclose(f, [0.5, 0.5, 0.7071067811865476], atol=1e-12)


def test_dtlz1_hand_values():
    spec = make_problem("dtlz1", 2)
    # g = 0, position 1.0: all mass on f1
    x = np.full(spec.n, 0.5)
    x[0] = 1.0
    np.testing.assert_allclose(evaluate(spec, x), [0.5, 0.0], atol=1e-12)
    # distance block at 0: each of the 5 vars adds 0.25 - cos(-10*pi) = -0.75
    # to the sum, so g = 100*(5 - 3.75) = 125 and f = 0.5*126*(x1, 1-x1)
    x = np.zeros(spec.n)
    x[0] = 0.5
    np.testing.assert_allclose(evaluate(spec, x), [31.5, 31.5], atol=1e-9)


def test_multimodal_g_is_zero_only_at_half():
    spec = make_problem("dtlz3", 3)
    base = np.full(spec.n, 0.5)
    f0 = evaluate(spec, base)
    assert np.linalg.norm(f0) == pytest.approx(1.0, abs=1e-12)
    # one distance variable one ripple off: still a local basin, g >> 0
    shifted = base.copy()
    shifted[-1] = 0.6
    assert np.linalg.norm(evaluate(spec, shifted)) > 1.5


def test_evaluate_single_and_batch_shapes_agree():
    spec = make_problem("dtlz2", 3)
    rng = np.random.default_rng(5)
    X = rng.uniform(0, 1, size=(8, spec.n))
    F = evaluate(spec, X)
    assert F.shape == (8, 3)
    for i in range(8):
        np.testing.assert_allclose(evaluate(spec, X[i]), F[i], atol=1e-15)


def test_evaluate_rejects_out_of_bounds_naming_coordinate():
    spec = make_problem("dtlz2", 3)
    x = np.full(spec.n, 0.5)
    x[4] = 1.2
    with pytest.raises(ValueError, match="coordinate 4"):
        evaluate(spec, x)
    with pytest.raises(ValueError, match="expected 12"):
        evaluate(spec, np.zeros(5))


def test_sample_true_pf_identities_and_determinism():
    for family, check in [
        ("dtlz1", lambda F: np.allclose(F.sum(axis=1), 0.5, atol=1e-12)),
        ("dtlz2", lambda F: np.allclose(np.linalg.norm(F, axis=1), 1.0, atol=1e-12)),
    ]:
        spec = make_problem(family, 6)
        F = sample_true_pf(spec, 500, np.random.default_rng(3))
        assert F.shape == (500, 6)
        assert check(F)
        assert np.all(F >= 0.0)
        again = sample_true_pf(spec, 500, np.random.default_rng(3))
        np.testing.assert_array_equal(F, again)
    with pytest.raises(ValueError):
        sample_true_pf(make_problem("dtlz1", 3), 0, np.random.default_rng(0))


def test_front_targets_scales_directions_onto_front():
    directions = np.array([[1.0, 0.0, 0.0], [1.0, 1.0, 1.0], [0.2, 0.3, 0.5]])
    t1 = front_targets(make_problem("dtlz1", 3), directions)
    np.testing.assert_allclose(t1.sum(axis=1), 0.5, atol=1e-15)
    np.testing.assert_allclose(t1[0], [0.5, 0, 0], atol=1e-15)
    t2 = front_targets(make_problem("dtlz2", 3), directions)
    np.testing.assert_allclose(np.linalg.norm(t2, axis=1), 1.0, atol=1e-15)
    np.testing.assert_allclose(t2[0], [1, 0, 0], atol=1e-15)
    with pytest.raises(ValueError):
        front_targets(make_problem("dtlz2", 3), directions[:, :2])


def test_ideal_point_is_origin_for_all_families():
    for family in FAMILIES:
        np.testing.assert_array_equal(ideal_point(make_problem(family, 4)), np.zeros(4))


def test_write_front_csv_format(tmp_path):
    path = tmp_path / "front.csv"
    write_front_csv(path, np.array([[0.125, 1.0], [3.5e-4, 2.0]]))
    text = path.read_text()
    lines = text.split("\n")
    assert lines[0] == "f1,f2"
    assert lines[1] == "1.25000000e-01,1.00000000e+00"
    assert lines[2] == "3.50000000e-04,2.00000000e+00"
    assert text.endswith("\n") and "\r" not in text
