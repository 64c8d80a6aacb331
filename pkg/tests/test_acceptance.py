"""
Property and Monte-Carlo suites for the geometry, clustering and metrics.

The heavier suites are marked ``slow``; deselect them with ``-m "not slow"``.
``test_reference_scene`` only runs when ``SPD_KMEANS_REFERENCE_DATA`` names a
directory holding ``cc.spdk``, ``vh.spdk`` and ``gdv.spdk`` TensorFiles of the
2044×1433 scene.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd
import pytest
from scipy.optimize import linear_sum_assignment, minimize

from SPD_Kmeans import cli, settings
from SPD_Kmeans.SPD_utils.src.clustering.kmeans import KmeansConfig, fit, fit_array
from SPD_Kmeans.SPD_utils.src.clustering.model_select import select_k_embedded
from SPD_Kmeans.SPD_utils.src.features import FeatureConfig, RasterStack, build_features
from SPD_Kmeans.SPD_utils.src.features.autocov import autocov_matrix, autocov_toeplitz
from SPD_Kmeans.SPD_utils.src.io.tensor_file import read_tensor, write_tensor
from SPD_Kmeans.SPD_utils.src.metrics import adjusted_rand, anova_r2, overlap_report, sargde_raster, sweep
from SPD_Kmeans.SPD_utils.src.features.patching import patch_average, patch_labels
from SPD_Kmeans.SPD_utils.src.spd import (
    cholesky,
    embed,
    embed_batch,
    frechet_mean,
    frechet_variance,
    from_cholesky,
    log_cholesky_distance,
    sample_spd,
    sample_spd_batch,
    unembed,
)

MIXTURE_CENTERS = np.array(
    [
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 3.0, 0.0],
    ]
)


def _mixture(n: int, seed: int, spread: float) -> np.ndarray:
    """Embedded points of an equal-weight three-component mixture of 3×3 SPD matrices."""
    sizes = [n // 3 + (1 if j < n % 3 else 0) for j in range(3)]
    parts = [
        embed_batch(sample_spd_batch(3, size, seed=seed * 10 + j, spread=spread, center=center))
        for j, (size, center) in enumerate(zip(sizes, MIXTURE_CENTERS))
    ]
    return np.concatenate(parts)


def _relative_error(A: np.ndarray, B: np.ndarray) -> float:
    return float(np.linalg.norm(A - B) / np.linalg.norm(B))


@pytest.mark.slow
def test_geometry_round_trips():
    for m in range(1, 21):
        for seed in range(50):
            S = sample_spd(m, seed=1000 * m + seed, spread=0.3)
            assert _relative_error(from_cholesky(cholesky(S)).entries, S.entries) <= 1e-10
            assert _relative_error(unembed(embed(S)).entries, S.entries) <= 1e-10


@pytest.mark.slow
def test_distance_is_euclidean_after_embedding_and_satisfies_triangle_inequality():
    A = sample_spd_batch(4, 10_000, seed=1, spread=0.8)
    B = sample_spd_batch(4, 10_000, seed=2, spread=0.8)
    C = sample_spd_batch(4, 10_000, seed=3, spread=0.8)
    VA, VB = embed_batch(A), embed_batch(B)
    for i in range(10_000):
        d_ab = log_cholesky_distance(A[i], B[i])
        assert abs(d_ab - np.linalg.norm(VA[i] - VB[i])) <= 1e-12
        d_ac = log_cholesky_distance(A[i], C[i])
        d_bc = log_cholesky_distance(B[i], C[i])
        assert d_ac <= d_ab + d_bc + 1e-12


def _dispersion_from_coords(coords: np.ndarray, factors: np.ndarray, m: int) -> float:
    """``Σ d²(a, S_i)`` with ``a`` given by its Cholesky coordinates, from the factors directly."""
    L = np.zeros((m, m))
    cols, rows = np.triu_indices(m, 1)  # column-major strict lower
    L[rows, cols] = coords[: m * (m - 1) // 2]
    strict = np.tril(factors, -1) - L
    log_diag = np.log(np.diagonal(factors, axis1=1, axis2=2)) - coords[m * (m - 1) // 2 :]
    return float(np.sum(strict * strict) + np.sum(log_diag * log_diag))


@pytest.mark.slow
def test_frechet_mean_matches_numerical_minimizer():
    rng = np.random.default_rng(0)
    for trial in range(50):
        m = int(rng.integers(1, 6))
        size = int(rng.integers(1, 31))
        Z = sample_spd_batch(m, size, seed=trial, spread=0.7)
        factors = np.stack([S.factor for S in Z])

        mean = frechet_mean(Z)
        start = np.zeros(m * (m + 1) // 2)
        res = minimize(
            _dispersion_from_coords,
            start,
            args=(factors, m),
            method="Powell",
            options={"xtol": 1e-10, "ftol": 1e-15, "maxfev": 200_000},
        )
        np.testing.assert_allclose(embed(mean).coords, res.x, atol=1e-6)

        best = frechet_variance(mean, Z)
        center = embed(mean).coords
        for _ in range(200):
            other = unembed(center + 0.1 * rng.standard_normal(center.size), m)
            assert frechet_variance(other, Z) >= best - 1e-12


def _optimal_objective(X: np.ndarray, k: int) -> float:
    """Global k-means optimum by enumerating every assignment (first point fixed to cluster 0)."""
    n = X.shape[0]
    codes = np.arange(k ** (n - 1))
    labels = np.zeros((codes.size, n), dtype=np.int8)
    labels[:, 1:] = (codes[:, None] // k ** np.arange(n - 1)) % k
    sq = np.einsum("ij,ij->i", X, X)
    total = np.zeros(codes.size)
    for j in range(k):
        member = (labels == j).astype(np.float64)
        counts = member.sum(axis=1)
        sums = member @ X
        sse = member @ sq - np.einsum("ij,ij->i", sums, sums) / np.maximum(counts, 1.0)
        total += sse
    return float(total.min() / n)


@pytest.mark.slow
def test_kmeans_reaches_global_optimum_on_small_instances():
    rng = np.random.default_rng(1)
    hits = 0
    for trial in range(50):
        k = int(rng.integers(1, 4))
        n = int(rng.integers(k, 13))
        d = int(rng.integers(1, 4))
        X = rng.standard_normal((n, d))
        model = fit(X, KmeansConfig(k=k, restarts=16, seed=trial, rel_tol=0.0))
        if abs(model.objective - _optimal_objective(X, k)) <= 1e-9:
            hits += 1
    assert hits >= 49


def _center_error(X: np.ndarray, seed: int) -> float:
    model = fit_array(X, 3, KmeansConfig(k=3, restarts=4, seed=seed))
    cost = np.linalg.norm(model.centroids[:, None, :] - MIXTURE_CENTERS[None, :, :], axis=2)
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].mean())


@pytest.mark.slow
def test_center_estimates_are_consistent():
    errors = []
    for n in (500, 2000, 8000):
        errors.append(np.median([_center_error(_mixture(n, seed, 0.5), seed) for seed in range(20)]))
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] / errors[0] <= 0.5


@pytest.mark.slow
def test_cluster_count_is_recovered():
    failures = []
    for n in (150, 600, 2400):
        chosen = [
            select_k_embedded(_mixture(n, seed, 0.3), 3, range(1, 9), KmeansConfig(k=1, restarts=4, seed=seed)).chosen_k
            for seed in range(20)
        ]
        failures.append(sum(k != 3 for k in chosen))
    assert failures[1] <= 2
    assert failures[0] >= failures[1] >= failures[2]


def _pair_counting_ari(a: np.ndarray, b: np.ndarray) -> float:
    i, j = np.triu_indices(a.size, 1)
    same_a, same_b = a[i] == a[j], b[i] == b[j]
    n11 = int(np.sum(same_a & same_b))
    n00 = int(np.sum(~same_a & ~same_b))
    n10 = int(np.sum(same_a & ~same_b))
    n01 = int(np.sum(~same_a & same_b))
    den = (n11 + n10) * (n10 + n00) + (n11 + n01) * (n01 + n00)
    return 0.0 if den == 0 else 2 * (n11 * n00 - n10 * n01) / den


def test_adjusted_rand_matches_pair_counting():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(2, 201))
        a = rng.integers(0, int(rng.integers(1, 6)), n)
        b = rng.integers(0, int(rng.integers(1, 6)), n)
        assert adjusted_rand(a, b) == pytest.approx(_pair_counting_ari(a, b), abs=1e-12)
    assert adjusted_rand([1, 1, 2, 2], [1, 1, 2, 3]) == pytest.approx(4.0 / 7.0, abs=1e-12)


@pytest.mark.slow
def test_autocovariance_is_positive_semidefinite():
    rng = np.random.default_rng(3)
    for _ in range(10_000):
        lag = int(rng.integers(0, 9))
        T = int(rng.integers(lag + 2, 65))
        x = rng.standard_normal(T) * rng.uniform(0.01, 100.0)
        M = autocov_toeplitz(x, lag)
        assert np.linalg.eigvalsh(M).min() >= -1e-12 * M[0, 0]
        autocov_matrix(x, lag)
    np.testing.assert_array_equal(autocov_toeplitz([1.0, 3.0], 0), [[1.0]])
    np.testing.assert_array_equal(autocov_toeplitz([0.0, 1.0, 0.0, 1.0], 1), [[0.25, -0.1875], [-0.1875, 0.25]])


def _synthetic_scene(tmp_path: Path) -> tuple[dict[str, Path], np.ndarray]:
    """30×60×60 stack in three vertical stripes of growing amplitude; the right stripe is positive."""
    rng = np.random.default_rng(4)
    T, H, W = 30, 60, 60
    classes = np.repeat([0, 1, 2], 20)[None, :].repeat(H, axis=0)
    amplitude = np.array([1.0, 2.0, 4.0])[classes]
    phase = rng.uniform(0.0, 2 * np.pi, (H, W))
    t = np.arange(T)[:, None, None]
    wave = np.sin(0.5 * t + phase)
    cc = 0.5 + 0.1 * amplitude * wave + 0.005 * rng.standard_normal((T, H, W))
    vh = 1.0 + 0.2 * np.cos(0.3 * t + phase) + 0.01 * rng.standard_normal((T, H, W))
    truth = (classes == 2).astype(float)
    files = {
        "CC": write_tensor(tmp_path / "cc.spdk", cc),
        "VH": write_tensor(tmp_path / "vh.spdk", vh),
        "truth": write_tensor(tmp_path / "truth.spdk", truth),
    }
    return files, classes


def _run_chain(files: dict[str, Path], out: Path) -> list[Path]:
    out.mkdir()
    feat, kcsv = out / "feat.spdk", out / "k.csv"
    labels, centroids, overlap = out / "labels.csv", out / "centroids.csv", out / "overlap.csv"
    assert cli.main(["features", "--band", str(files["CC"]), "--lag", "1", "--out", str(feat)]) == 0
    assert cli.main(["select_k", "--features", str(feat), "--kmin", "1", "--kmax", "6", "--out", str(kcsv)]) == 0
    k_star = int(pd.read_csv(kcsv).query("chosen == 1")["k"].iloc[0])
    assert cli.main(
        ["cluster", "--features", str(feat), "--k", str(k_star), "--out", str(labels), "--centroids", str(centroids)]
    ) == 0
    assert cli.main(
        [
            "report", "--labels", str(labels), "--truth", str(files["truth"]),
            "--sargde", f"CC={files['CC']},VH={files['VH']}", "--out", str(overlap),
        ]
    ) == 0
    return [
        feat, out / "feat.pixels.csv", kcsv, labels, centroids, overlap,
        out / "overlap.sargde.csv", out / "overlap.anova.csv",
    ]


@pytest.mark.slow
def test_cli_pipeline_is_deterministic_and_recovers_labels(tmp_path, capsys):
    files, classes = _synthetic_scene(tmp_path)
    first = _run_chain(files, tmp_path / "a")
    second = _run_chain(files, tmp_path / "b")
    capsys.readouterr()

    for a, b in zip(first, second):
        assert a.read_bytes() == b.read_bytes(), a.name

    labels = pd.read_csv(tmp_path / "a" / "labels.csv")
    generating = classes[labels["row"].to_numpy(), labels["col"].to_numpy()]
    assert adjusted_rand(generating, labels["label"]) > 0.95


@pytest.mark.slow
@pytest.mark.skipif(not settings.REFERENCE_DATA.get(), reason="SPD_KMEANS_REFERENCE_DATA is not set")
def test_reference_scene():
    root = Path(settings.REFERENCE_DATA.get())
    cc = RasterStack.from_tensor_file(root / "cc.spdk", band_name="CC")
    vh = RasterStack.from_tensor_file(root / "vh.spdk", band_name="VH")
    gdv = read_tensor(root / "gdv.spdk")

    grid = sweep({"CC": cc}, gdv, [1, 2, 3, 4, 5], range(4, 11), range(2, 9), KmeansConfig(k=1, restarts=2))
    assert (grid.best.lag, grid.best.patch) == (1, 9)

    features = build_features(cc, FeatureConfig(lag=1, patch=9))
    report = select_k_embedded(features.coords, features.m, range(1, 51), KmeansConfig(k=1, restarts=2))
    assert report.chosen_k == 15

    rows, cols = features.pixel_index[:, 0], features.pixel_index[:, 1]
    index = sargde_raster(patch_average(cc, 9), patch_average(vh, 9))[rows, cols]
    finite = np.isfinite(index)
    r2_adj = anova_r2(index[finite], report.models[15].labels[finite]).r2_adjusted
    assert r2_adj == pytest.approx(0.532, abs=0.02)

    truth = patch_labels(gdv, 9)[rows, cols]
    flagged = [r for r in overlap_report(report.models[15].labels, truth, 0.05) if r.flagged]
    assert len(flagged) == 4
