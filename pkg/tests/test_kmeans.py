import numpy as np
import pytest

from SPD_Kmeans.SPD_utils.src.clustering.kmeans import (
    ClusterModel,
    KmeansConfig,
    assign,
    fit,
    fit_spd,
    objective,
)
from SPD_Kmeans.SPD_utils.src.metrics.agreement import adjusted_rand
from SPD_Kmeans.SPD_utils.src.spd import embed, embed_batch, frechet_mean, sample_spd_batch
from SPD_Kmeans.SPD_utils.src.spd.errors import (
    DimensionMismatch,
    EmptyInput,
    InvalidParameter,
    KExceedsN,
    NonFiniteValues,
)


def test_config_defaults_and_validation():
    cfg = KmeansConfig(k=3)
    assert (cfg.max_iters, cfg.rel_tol, cfg.restarts, cfg.seed) == (300, 1e-6, 8, 0)
    for bad in ({"k": 0}, {"k": 2, "restarts": 0}, {"k": 2, "rel_tol": -1.0}, {"k": 2, "seed": -1}):
        with pytest.raises(InvalidParameter):
            KmeansConfig(**bad)


def test_with_k_keeps_other_fields():
    cfg = KmeansConfig(k=2, restarts=3, seed=5).with_k(4)
    assert (cfg.k, cfg.restarts, cfg.seed) == (4, 3, 5)
    assert KmeansConfig(k=2, seed=5).with_k(3, seed=9).seed == 9


def test_fit_two_point_pairs():
    model = fit([[0.0], [0.1], [10.0], [10.1]], KmeansConfig(k=2))
    assert model.objective == pytest.approx(0.0025, rel=1e-12)
    assert model.labels[0] == model.labels[1] != model.labels[2] == model.labels[3]
    np.testing.assert_allclose(np.sort(model.centroids[:, 0]), [0.05, 10.05])


def test_fit_is_deterministic():
    X = np.random.default_rng(0).standard_normal((60, 3))
    a = fit(X, KmeansConfig(k=4, seed=13))
    b = fit(X, KmeansConfig(k=4, seed=13))
    np.testing.assert_array_equal(a.labels, b.labels)
    np.testing.assert_array_equal(a.centroids, b.centroids)
    assert a.objective == b.objective


def test_fit_does_not_depend_on_executor(monkeypatch):
    X = np.random.default_rng(1).standard_normal((50, 6))
    serial = fit(X, KmeansConfig(k=3, seed=2))
    monkeypatch.setenv("SPD_KMEANS_EXECUTOR", "thread")
    threaded = fit(X, KmeansConfig(k=3, seed=2))
    np.testing.assert_array_equal(serial.labels, threaded.labels)
    assert serial.restart_objectives == threaded.restart_objectives


def test_objective_history_is_non_increasing():
    X = np.random.default_rng(3).standard_normal((80, 2))
    model = fit(X, KmeansConfig(k=5, rel_tol=0.0))
    history = np.array(model.objective_history)
    assert np.all(np.diff(history) <= 1e-12)
    assert history[-1] == pytest.approx(model.objective)


def test_best_restart_has_lowest_objective():
    X = np.random.default_rng(4).standard_normal((40, 3))
    model = fit(X, KmeansConfig(k=6, restarts=5))
    assert len(model.restart_objectives) == 5
    assert model.objective == min(model.restart_objectives)
    assert model.restart_objectives.index(model.objective) == model.restart_of_best


def test_model_is_consistent_with_assign_and_objective():
    X = np.random.default_rng(5).standard_normal((30, 3))
    model = fit(X, KmeansConfig(k=3))
    np.testing.assert_array_equal(assign(X, model.centroids), model.labels)
    assert objective(X, model.centroids) == pytest.approx(model.objective, rel=1e-12)
    assert model.counts.sum() == 30
    assert isinstance(model, ClusterModel)


def test_converged_fit_is_a_fixed_point():
    X = np.random.default_rng(9).standard_normal((40, 3))
    model = fit(X, KmeansConfig(k=4, rel_tol=0.0))
    labels = assign(X, model.centroids)
    np.testing.assert_array_equal(labels, model.labels)
    for j in np.unique(labels):
        np.testing.assert_allclose(model.centroids[j], X[labels == j].mean(axis=0), atol=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_default_tolerance_returns_member_means(seed):
    X = np.random.default_rng(100 + seed).standard_normal((20000, 6))
    model = fit(X, KmeansConfig(k=5, restarts=1, seed=seed))
    np.testing.assert_array_equal(assign(X, model.centroids), model.labels)
    for j in range(model.k):
        np.testing.assert_allclose(model.centroids[j], X[model.labels == j].mean(axis=0), atol=1e-12)


def test_iteration_cap_still_returns_member_means():
    X = np.random.default_rng(8).standard_normal((500, 2))
    model = fit(X, KmeansConfig(k=6, max_iters=1, restarts=2))
    for j in range(model.k):
        np.testing.assert_allclose(model.centroids[j], X[model.labels == j].mean(axis=0), atol=1e-12)
    assert model.objective == pytest.approx(objective(X, model.centroids), rel=1e-12)


def test_fit_spd_centers_are_member_means_at_default_tolerance():
    mats = sample_spd_batch(3, 600, seed=31, spread=0.8)
    model, centers = fit_spd(mats, KmeansConfig(k=4, restarts=2, seed=2))
    for j, center in enumerate(centers):
        members = [S for S, lab in zip(mats, model.labels) if lab == j]
        np.testing.assert_allclose(center.entries, frechet_mean(members).entries, rtol=1e-9, atol=1e-12)


def test_assign_breaks_ties_toward_lowest_index():
    labels = assign([[0.0], [1.0]], [[0.5], [0.5], [2.0]])
    np.testing.assert_array_equal(labels, [0, 0])


def test_k_equal_n_gives_zero_objective():
    X = np.arange(5, dtype=float)[:, None]
    model = fit(X, KmeansConfig(k=5))
    assert model.objective == 0.0
    assert sorted(model.labels.tolist()) == [0, 1, 2, 3, 4]


def test_k_one_centroid_is_the_mean():
    X = np.random.default_rng(6).standard_normal((25, 3))
    model = fit(X, KmeansConfig(k=1))
    np.testing.assert_allclose(model.centroids[0], X.mean(axis=0), rtol=1e-12)
    assert np.all(model.labels == 0)


def test_duplicate_points_with_k_above_distinct_count(caplog):
    X = np.array([[1.0], [1.0], [1.0], [2.0]])
    model = fit(X, KmeansConfig(k=3))
    assert model.objective == 0.0
    assert model.k == 3
    assert "duplicate centroids" in caplog.text


def test_fit_errors():
    with pytest.raises(EmptyInput):
        fit([], KmeansConfig(k=1))
    with pytest.raises(KExceedsN):
        fit([[0.0], [1.0]], KmeansConfig(k=3))
    with pytest.raises(NonFiniteValues):
        fit([[0.0], [np.nan]], KmeansConfig(k=1))
    with pytest.raises(DimensionMismatch):
        assign([[0.0, 1.0]], [[0.0]])


def test_fit_accepts_embedded_points(two_blob_matrices):
    mats, _ = two_blob_matrices
    model = fit([embed(S) for S in mats], KmeansConfig(k=2))
    assert model.dim_m == 3
    assert model.centroid_points[0].dim_m == 3


def test_fit_spd_recovers_two_blobs(two_blob_matrices):
    mats, truth = two_blob_matrices
    model, centers = fit_spd(mats, KmeansConfig(k=2, seed=1))
    assert adjusted_rand(truth, model.labels) == pytest.approx(1.0)
    for j, center in enumerate(centers):
        members = [S for S, lab in zip(mats, model.labels) if lab == j]
        np.testing.assert_allclose(center.entries, frechet_mean(members).entries, rtol=1e-10, atol=1e-12)


def test_fit_spd_matches_fit_on_embedded_points(two_blob_matrices):
    mats, _ = two_blob_matrices
    cfg = KmeansConfig(k=2, seed=4)
    model, _ = fit_spd(mats, cfg)
    direct = fit(embed_batch(mats), cfg)
    np.testing.assert_array_equal(model.labels, direct.labels)
    assert model.objective == direct.objective
