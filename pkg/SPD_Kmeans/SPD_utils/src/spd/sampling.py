# SPD_Kmeans/SPD_utils/src/spd/sampling.py

"""
Seeded SPD test-data generators.

Matrices are drawn by sampling log-Cholesky coordinates from an isotropic
Gaussian and mapping them back with
:func:`~SPD_Kmeans.SPD_utils.src.spd.geometry.unembed`, so every draw is SPD
by construction and the embedded sample has a density. Translating the
Gaussian by an embedded ``center`` gives the mixture components used by the
clustering tests and the synthetic raster generators.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from SPD_Kmeans.SPD_utils.src.spd.errors import DimensionMismatch, InvalidParameter
from SPD_Kmeans.SPD_utils.src.spd.geometry import embed, unembed
from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import EmbeddedPoint, SpdMatrix, embedding_dim


def _check_args(m: int, spread: float) -> None:
    if m < 1:
        raise DimensionMismatch(f"matrix dimension must be positive, got {m}")
    if not spread > 0:
        raise InvalidParameter(f"spread must be positive, got {spread}")


def _center_coords(center: Optional[ArrayLike], m: int) -> np.ndarray:
    d = embedding_dim(m)
    if center is None:
        return np.zeros(d)
    if isinstance(center, SpdMatrix):
        center = embed(center)
    coords = np.asarray(center, dtype=np.float64).ravel()
    if coords.size != d:
        raise DimensionMismatch(f"center has {coords.size} coordinates, expected {d} for m={m}")
    return coords


def sample_spd(m: int, seed: int, spread: float, center: Optional[ArrayLike] = None) -> SpdMatrix:
    """
    Draw one SPD matrix with Gaussian log-Cholesky coordinates.

    Parameters
    ----------
    m : :class:`int`
        Matrix dimension.
    seed : :class:`int`
        Seed of the :func:`numpy.random.default_rng` generator. Equal
        arguments give identical matrices.
    spread : :class:`float`
        Standard deviation of every coordinate.
    center : array-like or :class:`SpdMatrix`, optional
        Mean of the coordinates, given in embedded form or as a matrix.
        Defaults to the origin (the identity matrix).

    Returns
    -------
    :class:`SpdMatrix`

    Raises
    ------
    InvalidParameter
        If ``spread`` is not positive.
    """
    _check_args(m, spread)
    rng = np.random.default_rng(seed)
    coords = _center_coords(center, m) + spread * rng.standard_normal(embedding_dim(m))
    return unembed(EmbeddedPoint(coords, dim_m=m))


def sample_spd_batch(
    m: int,
    n: int,
    seed: int,
    spread: float,
    center: Optional[ArrayLike] = None,
) -> list[SpdMatrix]:
    """
    Draw ``n`` SPD matrices from a single seeded generator.

    Parameters
    ----------
    m : :class:`int`
        Matrix dimension.
    n : :class:`int`
        Number of draws.
    seed : :class:`int`
        Generator seed.
    spread : :class:`float`
        Coordinate standard deviation.
    center : array-like or :class:`SpdMatrix`, optional
        Coordinate mean; see :func:`sample_spd`.

    Returns
    -------
    :class:`list` of :class:`SpdMatrix`
    """
    _check_args(m, spread)
    if n < 0:
        raise InvalidParameter(f"number of draws must be non-negative, got {n}")
    rng = np.random.default_rng(seed)
    coords = _center_coords(center, m) + spread * rng.standard_normal((n, embedding_dim(m)))
    return [unembed(EmbeddedPoint(row, dim_m=m)) for row in coords]
