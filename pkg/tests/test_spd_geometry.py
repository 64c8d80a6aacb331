import numpy as np
import pytest

from SPD_Kmeans.SPD_utils.src.spd import (
    CholFactor,
    EmbeddedPoint,
    SpdMatrix,
    cholesky,
    embed,
    embed_batch,
    embedding_dim,
    frechet_mean,
    frechet_variance,
    from_cholesky,
    identity,
    log_cholesky_distance,
    matrix_dim_from_embedding,
    matrix_function,
    sample_spd,
    sample_spd_batch,
    unembed,
    unembed_batch,
)
from SPD_Kmeans.SPD_utils.src.spd.errors import (
    DimensionMismatch,
    EmptyInput,
    InvalidParameter,
    MalformedInputError,
    NonFiniteValues,
    NotPositiveDefinite,
    NotSymmetric,
)

LOG2 = float(np.log(2.0))


def test_embedding_dim_round_trips_triangular_numbers():
    for m in range(1, 8):
        assert matrix_dim_from_embedding(embedding_dim(m)) == m
    with pytest.raises(DimensionMismatch):
        matrix_dim_from_embedding(4)


def test_spd_matrix_symmetrizes_round_off():
    S = SpdMatrix([[2.0, 1.0 + 1e-12], [1.0, 2.0]])
    np.testing.assert_array_equal(S.entries, S.entries.T)
    assert S.dim == 2
    assert SpdMatrix.from_array(S.entries) == S


def test_spd_matrix_rejects_asymmetric_input():
    with pytest.raises(NotSymmetric):
        SpdMatrix([[1.0, 0.0], [1.0, 1.0]])


def test_spd_matrix_rejects_indefinite_input():
    with pytest.raises(NotPositiveDefinite):
        SpdMatrix([[1.0, 2.0], [2.0, 1.0]])


def test_spd_matrix_rejects_nan_and_non_square():
    with pytest.raises(NonFiniteValues):
        SpdMatrix([[np.nan, 0.0], [0.0, 1.0]])
    with pytest.raises(DimensionMismatch):
        SpdMatrix(np.ones((2, 3)))


def test_malformed_input_errors_share_an_exit_code():
    assert NotSymmetric.exit_code == NotPositiveDefinite.exit_code == MalformedInputError.exit_code == 2


def test_cholesky_of_known_matrix(spd_2x2):
    L = cholesky(spd_2x2)
    np.testing.assert_allclose(L.entries, [[2.0, 0.0], [1.0, 2.0]])
    np.testing.assert_allclose(from_cholesky(L).entries, spd_2x2.entries)


def test_chol_factor_requires_positive_lower_triangular():
    with pytest.raises(DimensionMismatch):
        CholFactor([[1.0, 1.0], [0.0, 1.0]])
    with pytest.raises(NotPositiveDefinite):
        CholFactor([[1.0, 0.0], [0.5, -1.0]])


def test_embed_known_matrix(spd_2x2):
    v = embed(spd_2x2)
    assert v.dim_m == 2
    np.testing.assert_allclose(v.coords, [1.0, LOG2, LOG2], rtol=1e-12)
    np.testing.assert_allclose(v.strict_lower, [1.0])
    np.testing.assert_allclose(v.log_diagonal, [LOG2, LOG2])


def test_identity_embeds_to_origin():
    np.testing.assert_array_equal(embed(identity(4)).coords, np.zeros(10))


def test_unembed_inverts_embed():
    for seed in range(5):
        S = sample_spd(4, seed=seed, spread=0.7)
        back = unembed(embed(S))
        np.testing.assert_allclose(back.entries, S.entries, rtol=1e-10, atol=1e-12)


def test_unembed_infers_dimension_from_plain_coordinates():
    S = unembed([1.0, LOG2, LOG2])
    np.testing.assert_allclose(S.entries, [[4.0, 2.0], [2.0, 5.0]], rtol=1e-12)
    with pytest.raises(DimensionMismatch):
        unembed([0.0, 0.0, 0.0, 0.0])


def test_unembed_applies_the_pivot_test():
    with pytest.raises(NotPositiveDefinite):
        unembed([0.0, 0.0, -30.0])
    with pytest.raises(NotPositiveDefinite):
        SpdMatrix.from_array(np.diag([1.0, np.exp(-60.0)]))
    with pytest.raises(NonFiniteValues):
        unembed([0.0, 0.0, 400.0])
    np.testing.assert_allclose(unembed([0.0, 0.0, -5.0]).entries, np.diag([1.0, np.exp(-10.0)]), rtol=1e-12)


def test_embedded_point_validates_length():
    with pytest.raises(DimensionMismatch):
        EmbeddedPoint([0.0, 0.0], dim_m=2)


def test_embed_batch_matches_single_embeddings():
    mats = sample_spd_batch(3, 6, seed=3, spread=0.5)
    batch = embed_batch(mats)
    assert batch.shape == (6, 6)
    for row, S in zip(batch, mats):
        np.testing.assert_allclose(row, embed(S).coords, rtol=1e-12, atol=1e-14)
    stack = np.stack([S.entries for S in mats])
    np.testing.assert_allclose(embed_batch(stack), batch, rtol=1e-12, atol=1e-14)
    np.testing.assert_allclose(unembed_batch(batch, 3), stack, rtol=1e-10, atol=1e-12)


def test_embed_batch_of_empty_stack():
    assert embed_batch(np.empty((0, 2, 2))).shape == (0, 3)


def test_embed_batch_rejects_indefinite_member():
    stack = np.stack([np.eye(2), [[1.0, 2.0], [2.0, 1.0]]])
    with pytest.raises(NotPositiveDefinite, match="matrix 1"):
        embed_batch(stack)


def test_distance_to_identity(spd_2x2):
    expected = np.sqrt(1.0 + 2.0 * LOG2**2)
    assert log_cholesky_distance(identity(2), spd_2x2) == pytest.approx(expected, rel=1e-12)


def test_distance_is_a_metric():
    A, B, C = sample_spd_batch(3, 3, seed=5, spread=1.0)
    assert log_cholesky_distance(A, A) == 0.0
    assert log_cholesky_distance(A, B) == pytest.approx(log_cholesky_distance(B, A), rel=1e-14)
    assert log_cholesky_distance(A, C) <= log_cholesky_distance(A, B) + log_cholesky_distance(B, C) + 1e-12


def test_distance_is_euclidean_in_embedded_coordinates():
    A, B = sample_spd_batch(4, 2, seed=9, spread=0.8)
    expected = np.linalg.norm(embed(A).coords - embed(B).coords)
    assert log_cholesky_distance(A, B) == pytest.approx(expected, rel=1e-12)


def test_distance_rejects_mixed_dimensions():
    with pytest.raises(DimensionMismatch):
        log_cholesky_distance(identity(2), identity(3))


def test_frechet_mean_of_scalars():
    mean = frechet_mean([SpdMatrix([[1.0]]), SpdMatrix([[4.0]])])
    np.testing.assert_allclose(mean.entries, [[2.0]], rtol=1e-12)


@pytest.mark.parametrize("seed", range(12))
def test_frechet_mean_constructions_agree(seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, 11))
    size = int(rng.integers(1, 101))
    mats = sample_spd_batch(m, size, seed=seed, spread=float(rng.uniform(0.1, 1.0)))
    a = frechet_mean(mats, method="embedded")
    b = frechet_mean(mats, method="cholesky")
    np.testing.assert_allclose(a.entries, b.entries, rtol=1e-12, atol=1e-12)


def test_frechet_mean_minimizes_dispersion():
    mats = sample_spd_batch(2, 15, seed=4, spread=0.5)
    mean = frechet_mean(mats)
    best = frechet_variance(mean, mats)
    for other in sample_spd_batch(2, 10, seed=99, spread=0.3, center=mean):
        assert frechet_variance(other, mats) >= best - 1e-12


def test_frechet_mean_of_single_matrix_is_itself(spd_2x2):
    np.testing.assert_allclose(frechet_mean([spd_2x2]).entries, spd_2x2.entries, rtol=1e-12)


def test_frechet_mean_errors():
    with pytest.raises(EmptyInput):
        frechet_mean([])
    with pytest.raises(DimensionMismatch):
        frechet_mean([identity(2), identity(3)])
    with pytest.raises(ValueError, match="Unknown"):
        frechet_mean([identity(2)], method="karcher")


def test_matrix_function_round_trips_log_and_exp():
    S = sample_spd(3, seed=2, spread=0.5)
    log_S = matrix_function(S, np.log)
    np.testing.assert_allclose(matrix_function(log_S, np.exp), S.entries, rtol=1e-10, atol=1e-12)


def test_matrix_function_handles_non_diagonal_input():
    S = np.array([[2.0, 1.0], [1.0, 2.0]])
    root = matrix_function(S, np.sqrt)
    np.testing.assert_allclose(root @ root, S, rtol=1e-12)


def test_matrix_function_rejects_non_finite_results():
    with pytest.raises(NonFiniteValues):
        matrix_function([[-1.0, 0.0], [0.0, 1.0]], np.log)


def test_sampling_is_seeded():
    a = sample_spd(3, seed=17, spread=0.4)
    b = sample_spd(3, seed=17, spread=0.4)
    np.testing.assert_array_equal(a.entries, b.entries)
    assert len(sample_spd_batch(2, 0, seed=1, spread=1.0)) == 0


@pytest.mark.slow
def test_sample_mean_of_embedded_draws_is_near_zero():
    n, spread = 100_000, 0.7
    coords = embed_batch(sample_spd_batch(2, n, seed=2024, spread=spread))
    assert np.all(np.abs(coords.mean(axis=0)) <= 3.0 * spread / np.sqrt(n))


def test_sampling_validates_arguments():
    with pytest.raises(InvalidParameter):
        sample_spd(2, seed=0, spread=0.0)
    with pytest.raises(DimensionMismatch):
        sample_spd(2, seed=0, spread=1.0, center=np.zeros(6))
