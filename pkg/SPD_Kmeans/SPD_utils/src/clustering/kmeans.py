# SPD_Kmeans/SPD_utils/src/clustering/kmeans.py

"""
Lloyd k-means on log-Cholesky coordinates.

Under the log-Cholesky metric the Fréchet k-means of SPD matrices is exactly
the Euclidean k-means of their embedded coordinates, so everything here works
on an ``(n, d)`` float array. :func:`fit_spd` does the embedding and maps the
centroids back to matrices.

Each restart seeds its centroids by squared-distance weighting (k-means++),
then alternates the centroid update, empty-cluster repair and nearest-centroid
assignment until the labels stop changing, the objective stops decreasing by
more than ``rel_tol`` relative to its previous value, or ``max_iters`` is
reached. A run stopped early by ``rel_tol`` or ``max_iters`` then keeps taking
plain Lloyd steps until the labels repeat, so every returned centroid is the
mean of the points labelled with it. Restarts draw their generators from spawned
:class:`numpy.random.SeedSequence` children of the configured seed, run through
:func:`~SPD_Kmeans.SPD_utils.src.parallel.ordered_map`, and are reduced in
restart order, so the result does not depend on the executor.

The stored objective is the 1/n-normalized mean of squared nearest-centroid
distances.

Classes
-------
:class:`KmeansConfig`
    Validated k-means parameters.
:class:`ClusterModel`
    Result of a fit.

Functions
---------
:func:`fit`, :func:`fit_spd`, :func:`assign`, :func:`objective`
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import partial
from typing import Optional, Sequence, Union

import numpy as np
from numpy.typing import ArrayLike

from SPD_Kmeans.logging_utils import get_logger
from SPD_Kmeans.SPD_utils.src.parallel import ordered_map
from SPD_Kmeans.SPD_utils.src.spd.errors import (
    DimensionMismatch,
    EmptyInput,
    InvalidParameter,
    KExceedsN,
    NonFiniteValues,
)
from SPD_Kmeans.SPD_utils.src.spd.geometry import embed_batch, unembed
from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import EmbeddedPoint, SpdMatrix, matrix_dim_from_embedding

logger = get_logger(__name__)

PointsLike = Union[ArrayLike, Sequence[EmbeddedPoint]]

# Bound on the Lloyd steps taken after an early stop.
MAX_SETTLE_STEPS = 10_000


@dataclass(frozen=True)
class KmeansConfig:
    """
    Parameters of a k-means fit.

    Attributes
    ----------
    k : :class:`int`
        Number of clusters, at least 1.
    max_iters : :class:`int`
        Maximum number of Lloyd iterations per restart before the run settles
        its labels. Defaults to 300.
    rel_tol : :class:`float`
        Stop when the objective decreases by less than ``rel_tol`` times its
        previous value. Defaults to ``1e-6``; ``0`` iterates until the labels
        are stable.
    restarts : :class:`int`
        Number of independently seeded runs. Defaults to 8.
    seed : :class:`int`
        Non-negative base seed. Defaults to 0.

    Raises
    ------
    InvalidParameter
        If any field is out of range.
    """

    k: int
    max_iters: int = 300
    rel_tol: float = 1e-6
    restarts: int = 8
    seed: int = 0

    def __post_init__(self) -> None:
        if int(self.k) != self.k or self.k < 1:
            raise InvalidParameter(f"k must be a positive integer, got {self.k}")
        if int(self.max_iters) != self.max_iters or self.max_iters < 1:
            raise InvalidParameter(f"max_iters must be a positive integer, got {self.max_iters}")
        if not (self.rel_tol >= 0.0):
            raise InvalidParameter(f"rel_tol must be non-negative, got {self.rel_tol}")
        if int(self.restarts) != self.restarts or self.restarts < 1:
            raise InvalidParameter(f"restarts must be a positive integer, got {self.restarts}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise InvalidParameter(f"seed must be a non-negative integer, got {self.seed}")

    def with_k(self, k: int, seed: Optional[int] = None) -> "KmeansConfig":
        """Return a copy with another ``k`` (and optionally another seed)."""
        return replace(self, k=k, seed=self.seed if seed is None else seed)


@dataclass(frozen=True, eq=False)
class ClusterModel:
    """
    Fitted k-means model.

    Attributes
    ----------
    centroids : :class:`numpy.ndarray`
        ``(k, d)`` embedded centroids.
    labels : :class:`numpy.ndarray`
        Per-point cluster index in ``range(k)``.
    objective : :class:`float`
        Mean squared distance of each point to its nearest centroid.
    iters_run : :class:`int`
        Lloyd iterations performed by the winning restart, settling steps
        included.
    restart_of_best : :class:`int`
        Index of the winning restart.
    dim_m : :class:`int` or None
        Source matrix dimension, when ``d`` is a triangular number.
    objective_history : :class:`tuple` of :class:`float`
        Objective after seeding and after every iteration of the winning
        restart; non-increasing.
    restart_objectives : :class:`tuple` of :class:`float`
        Final objective of every restart, in restart order.
    """

    centroids: np.ndarray
    labels: np.ndarray
    objective: float
    iters_run: int
    restart_of_best: int
    dim_m: Optional[int] = None
    objective_history: tuple = field(default=(), repr=False)
    restart_objectives: tuple = field(default=(), repr=False)

    @property
    def k(self) -> int:
        return int(self.centroids.shape[0])

    @property
    def counts(self) -> np.ndarray:
        """:class:`numpy.ndarray`: number of points in each cluster."""
        return np.bincount(self.labels, minlength=self.k)

    @property
    def centroid_points(self) -> list[EmbeddedPoint]:
        """:class:`list` of :class:`EmbeddedPoint`: the centroids as embedded points."""
        return [EmbeddedPoint(c, dim_m=self.dim_m) for c in self.centroids]


def as_point_array(points: PointsLike) -> tuple[np.ndarray, Optional[int]]:
    """Return an ``(n, d)`` float array and the matrix dimension it embeds, if any."""
    if isinstance(points, (list, tuple)) and points and isinstance(points[0], EmbeddedPoint):
        dims = {p.dim_m for p in points}
        if len(dims) != 1:
            raise DimensionMismatch(f"points come from matrices of mixed dimensions {sorted(dims)}")
        return np.stack([p.coords for p in points]), dims.pop()

    X = np.asarray(points, dtype=np.float64)
    if X.ndim == 1 and X.size == 0:
        X = X.reshape(0, 0)
    if X.ndim != 2:
        raise DimensionMismatch(f"points must form an (n, d) array, got shape {X.shape}")
    if X.shape[0] == 0:
        raise EmptyInput("k-means needs at least one point")
    if not np.all(np.isfinite(X)):
        raise NonFiniteValues("points contain NaN or infinite coordinates")
    try:
        dim_m = matrix_dim_from_embedding(X.shape[1])
    except DimensionMismatch:
        dim_m = None
    return X, dim_m


def _squared_distances(X: np.ndarray, C: np.ndarray) -> np.ndarray:
    # direct differences; the expanded |x|^2 - 2x.c + |c|^2 form loses exact zeros
    out = np.empty((X.shape[0], C.shape[0]))
    for j in range(C.shape[0]):
        diff = X - C[j]
        out[:, j] = np.einsum("ij,ij->i", diff, diff)
    return out


def assign(points: PointsLike, centroids: PointsLike) -> np.ndarray:
    """
    Label every point with the index of its nearest centroid.

    Parameters
    ----------
    points : array-like or sequence of :class:`EmbeddedPoint`
        ``(n, d)`` points.
    centroids : array-like or sequence of :class:`EmbeddedPoint`
        ``(k, d)`` centroids, ``k >= 1``.

    Returns
    -------
    :class:`numpy.ndarray`
        Integer labels; equidistant points take the lowest centroid index.

    Raises
    ------
    DimensionMismatch
        If points and centroids have different widths.
    EmptyInput
        If there are no points or no centroids.
    """
    X, _ = as_point_array(points)
    C, _ = as_point_array(centroids)
    if X.shape[1] != C.shape[1]:
        raise DimensionMismatch(f"points have {X.shape[1]} coordinates, centroids have {C.shape[1]}")
    return np.argmin(_squared_distances(X, C), axis=1)


def objective(points: PointsLike, centroids: PointsLike) -> float:
    """
    Recompute the normalized k-means objective from data and centroids.

    Parameters
    ----------
    points, centroids : array-like or sequence of :class:`EmbeddedPoint`

    Returns
    -------
    :class:`float`
        ``(1/n) Σ_i min_j ‖x_i − c_j‖²``.
    """
    X, _ = as_point_array(points)
    C, _ = as_point_array(centroids)
    if X.shape[1] != C.shape[1]:
        raise DimensionMismatch(f"points have {X.shape[1]} coordinates, centroids have {C.shape[1]}")
    return float(np.mean(np.min(_squared_distances(X, C), axis=1)))


def _seed_centroids(X: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = X.shape[0]
    chosen = [int(rng.integers(n))]
    closest = _squared_distances(X, X[chosen])[:, 0]
    for _ in range(1, k):
        total = closest.sum()
        if total > 0.0:
            nxt = int(rng.choice(n, p=closest / total))
        else:
            nxt = int(rng.integers(n))
        chosen.append(nxt)
        closest = np.minimum(closest, _squared_distances(X, X[nxt : nxt + 1])[:, 0])
    return X[chosen].copy()


def _update_centroids(X: np.ndarray, labels: np.ndarray, C: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cluster means, with empty clusters moved to the worst-served points."""
    k, d = C.shape
    counts = np.bincount(labels, minlength=k)
    sums = np.zeros((k, d))
    np.add.at(sums, labels, X)
    filled = counts > 0
    new = C.copy()
    new[filled] = sums[filled] / counts[filled, None]

    empty = np.flatnonzero(~filled)
    for j in empty:
        served = np.flatnonzero(filled)
        nearest = np.min(_squared_distances(X, new[served]), axis=1)
        far = int(np.argmax(nearest))
        logger.debug("Cluster %d is empty; moving its centroid to point %d.", j, far)
        new[j] = X[far]
        filled[j] = True
    return new, empty


def _lloyd(X: np.ndarray, k: int, max_iters: int, rel_tol: float, seed_seq: np.random.SeedSequence) -> dict:
    """One seeded Lloyd run."""
    rng = np.random.default_rng(seed_seq)
    n = X.shape[0]
    rows = np.arange(n)

    C = _seed_centroids(X, k, rng)
    D = _squared_distances(X, C)
    labels = np.argmin(D, axis=1)
    obj = float(np.mean(D[rows, labels]))
    history = [obj]

    iters = 0
    stable = obj == 0.0
    while iters < max_iters and not stable:
        iters += 1
        C, _ = _update_centroids(X, labels, C)
        D = _squared_distances(X, C)
        new_labels = np.argmin(D, axis=1)
        new_obj = float(np.mean(D[rows, new_labels]))
        history.append(new_obj)

        stable = np.array_equal(new_labels, labels)
        small_step = (obj - new_obj) < rel_tol * obj
        labels, obj = new_labels, new_obj
        if small_step:
            break

    # C must be the mean of its members: finish an early stop with plain
    # Lloyd steps until the labels repeat.
    settle = 0
    while not stable and settle < MAX_SETTLE_STEPS:
        settle += 1
        C, _ = _update_centroids(X, labels, C)
        D = _squared_distances(X, C)
        new_labels = np.argmin(D, axis=1)
        stable = np.array_equal(new_labels, labels)
        labels = new_labels
        obj = float(np.mean(D[rows, labels]))
        history.append(obj)
    if not stable:
        logger.warning("Lloyd run did not reach stable labels after %d extra steps.", settle)
        C, _ = _update_centroids(X, labels, C)
        obj = float(np.mean(np.min(_squared_distances(X, C), axis=1)))

    return {
        "centroids": C,
        "labels": labels,
        "objective": obj,
        "iters": iters + settle,
        "history": tuple(history),
    }


def fit_array(X: np.ndarray, dim_m: Optional[int], cfg: KmeansConfig) -> ClusterModel:
    """Fit an already validated ``(n, d)`` array; shared by model selection and the sweep."""
    n = X.shape[0]
    if cfg.k > n:
        raise KExceedsN(f"k={cfg.k} exceeds the number of points n={n}")

    children = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    run = partial(_lloyd, X, cfg.k, cfg.max_iters, cfg.rel_tol)
    runs = ordered_map(run, children)

    best = 0
    for i, r in enumerate(runs):
        if r["objective"] < runs[best]["objective"]:
            best = i
    winner = runs[best]

    if cfg.k > 1 and len(np.unique(winner["centroids"], axis=0)) < cfg.k:
        logger.warning("k=%d fit ended with duplicate centroids; the data has fewer distinct points.", cfg.k)
    logger.info(
        "k-means k=%d n=%d: restart %d of %d won with objective %.6g after %d iterations.",
        cfg.k, n, best, cfg.restarts, winner["objective"], winner["iters"],
    )
    logger.debug("Restart objectives: %s", [r["objective"] for r in runs])

    return ClusterModel(
        centroids=winner["centroids"],
        labels=winner["labels"],
        objective=winner["objective"],
        iters_run=winner["iters"],
        restart_of_best=best,
        dim_m=dim_m,
        objective_history=winner["history"],
        restart_objectives=tuple(r["objective"] for r in runs),
    )


def fit(points: PointsLike, cfg: KmeansConfig) -> ClusterModel:
    """
    Best-of-restarts k-means on embedded points.

    Parameters
    ----------
    points : array-like or sequence of :class:`EmbeddedPoint`
        ``n >= 1`` points of equal width.
    cfg : :class:`KmeansConfig`
        Fit parameters.

    Returns
    -------
    :class:`ClusterModel`
        The lowest-objective restart; ties go to the earliest restart. The
        result is a deterministic function of the point order and ``cfg``.

    Raises
    ------
    EmptyInput
        If there are no points.
    DimensionMismatch
        If the points have mixed dimensions.
    KExceedsN
        If ``cfg.k`` exceeds the number of points.

    Examples
    --------
    >>> model = fit([[0.0], [0.1], [10.0], [10.1]], KmeansConfig(k=2))
    >>> round(model.objective, 12)
    0.0025
    """
    if isinstance(points, (list, tuple)) and not points:
        raise EmptyInput("k-means needs at least one point")
    X, dim_m = as_point_array(points)
    return fit_array(X, dim_m, cfg)


def fit_spd(matrices: Sequence[SpdMatrix], cfg: KmeansConfig) -> tuple[ClusterModel, list[SpdMatrix]]:
    """
    k-means of SPD matrices under the log-Cholesky metric.

    Parameters
    ----------
    matrices : sequence of :class:`SpdMatrix`
        Matrices of equal dimension.
    cfg : :class:`KmeansConfig`

    Returns
    -------
    tuple
        ``(model, centers)`` where ``centers`` are the unembedded centroids.
        Each center is the log-Cholesky Fréchet mean of its cluster.
    """
    matrices = list(matrices)
    if not matrices:
        raise EmptyInput("k-means needs at least one matrix")
    X = embed_batch(matrices)
    model = fit_array(X, matrices[0].dim, cfg)
    return model, [unembed(p) for p in model.centroid_points]
