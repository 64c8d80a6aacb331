# SPD_Kmeans/SPD_utils/src/spd/geometry.py

"""
Log-Cholesky geometry of SPD matrices.

The Cholesky map sends an SPD matrix ``S`` to its lower factor ``L`` and is a
diffeomorphism onto lower triangular matrices with positive diagonal. The
log-Cholesky distance between ``A`` and ``B`` combines the Frobenius distance
of the strict lower parts of their factors with the Frobenius distance of the
logs of their diagonals. Stacking those two pieces into one vector gives the
embedding :func:`embed` into ``R^(m(m+1)/2)``, under which the distance is the
plain Euclidean one and the Fréchet mean is the arithmetic mean mapped back
with :func:`unembed`.

Every function here is pure. The diagonal ``Exp``/``Log`` used by the mean and
the embedding act on diagonal matrices only and are computed as elementwise
scalar ``exp``/``log``; :func:`matrix_function` is the general eigensolver
based tool for arbitrary symmetric arguments.

**Functions**

- :func:`identity`, :func:`cholesky`, :func:`from_cholesky`
- :func:`embed`, :func:`unembed`, :func:`embed_batch`, :func:`unembed_batch`
- :func:`log_cholesky_distance`
- :func:`frechet_mean`, :func:`frechet_variance`
- :func:`matrix_function`
"""

from __future__ import annotations

from typing import Callable, Literal, Sequence, Union

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike

from SPD_Kmeans.SPD_utils.src.spd.errors import (
    DimensionMismatch,
    EigenFailure,
    EmptyInput,
    NonFiniteValues,
    NotPositiveDefinite,
)
from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import (
    CholFactor,
    EmbeddedPoint,
    SpdMatrix,
    embedding_dim,
    matrix_dim_from_embedding,
    strict_lower_indices,
    symmetrize,
)

MeanMethod = Literal["embedded", "cholesky"]


def identity(m: int) -> SpdMatrix:
    """
    Return the m×m identity as an :class:`SpdMatrix`.

    Parameters
    ----------
    m : :class:`int`
        Matrix dimension, at least 1.

    Returns
    -------
    :class:`SpdMatrix`
    """
    if m < 1:
        raise DimensionMismatch(f"matrix dimension must be positive, got {m}")
    eye = np.eye(m)
    return SpdMatrix._from_factor(eye, eye)


def cholesky(S: SpdMatrix) -> CholFactor:
    """
    Send an SPD matrix to its Cholesky factor.

    Parameters
    ----------
    S : :class:`SpdMatrix`
        Input matrix. Its factor was computed (with the relative pivot
        tolerance) when ``S`` was constructed.

    Returns
    -------
    :class:`CholFactor`
        ``L`` with ``L Lᵀ == S`` and strictly positive diagonal.
    """
    return CholFactor(S.factor)


def from_cholesky(L: CholFactor) -> SpdMatrix:
    """
    Inverse of :func:`cholesky`: return ``L Lᵀ``, symmetrized exactly.

    Parameters
    ----------
    L : :class:`CholFactor`

    Returns
    -------
    :class:`SpdMatrix`
    """
    factor = L.entries
    product = factor @ factor.T
    return SpdMatrix._from_factor((product + product.T) / 2.0, factor)


def _coords_from_factor(factor: np.ndarray) -> np.ndarray:
    rows, cols = strict_lower_indices(factor.shape[-1])
    diag = np.diagonal(factor, axis1=-2, axis2=-1)
    return np.concatenate([factor[..., rows, cols], np.log(diag)], axis=-1)


def _factor_from_coords(coords: np.ndarray, m: int) -> np.ndarray:
    rows, cols = strict_lower_indices(m)
    q = coords.shape[-1] - m
    factor = np.zeros(coords.shape[:-1] + (m, m))
    factor[..., rows, cols] = coords[..., :q]
    diag_idx = np.arange(m)
    factor[..., diag_idx, diag_idx] = np.exp(coords[..., q:])
    return factor


def embed(S: SpdMatrix) -> EmbeddedPoint:
    """
    Map an SPD matrix to its log-Cholesky coordinates.

    The coordinates are the strict lower entries of the Cholesky factor in
    column-major order, followed by the logs of its diagonal entries.

    Parameters
    ----------
    S : :class:`SpdMatrix`

    Returns
    -------
    :class:`EmbeddedPoint`
        Vector of length ``m(m+1)/2``.

    Examples
    --------
    >>> embed(SpdMatrix([[4.0, 2.0], [2.0, 5.0]])).coords
    array([1.        , 0.69314718, 0.69314718])
    """
    return EmbeddedPoint(_coords_from_factor(S.factor), dim_m=S.dim)


def unembed(v: Union[EmbeddedPoint, ArrayLike], dim_m: int | None = None) -> SpdMatrix:
    """
    Inverse of :func:`embed`.

    The diagonal of the rebuilt factor is ``exp`` of the last ``m``
    coordinates, so the factor is always positive definite in exact
    arithmetic. The product still passes the relative pivot test of
    :class:`SpdMatrix`, which rejects coordinates whose extreme log-diagonal
    leaves the matrix numerically singular or overflows it.

    Parameters
    ----------
    v : :class:`EmbeddedPoint` or array-like
        Coordinates. Plain arrays are validated through :class:`EmbeddedPoint`.
    dim_m : :class:`int`, optional
        Matrix dimension for plain arrays; inferred when omitted.

    Returns
    -------
    :class:`SpdMatrix`

    Raises
    ------
    DimensionMismatch
        If the coordinate count is not ``m(m+1)/2``.
    NotPositiveDefinite
        If a pivot falls below the relative tolerance.
    NonFiniteValues
        If the rebuilt matrix overflows.
    """
    if not isinstance(v, EmbeddedPoint):
        v = EmbeddedPoint(v, dim_m=dim_m)
    factor = _factor_from_coords(v.coords, v.dim_m)
    product = factor @ factor.T
    return SpdMatrix._from_factor((product + product.T) / 2.0, factor)


def embed_batch(matrices: ArrayLike) -> np.ndarray:
    """
    Vectorized :func:`embed` over a stack of symmetric matrices.

    Parameters
    ----------
    matrices : array-like
        Array of shape ``(N, m, m)``; each slice must be symmetric positive
        definite. :class:`SpdMatrix` sequences are accepted too.

    Returns
    -------
    :class:`numpy.ndarray`
        Array of shape ``(N, m(m+1)/2)`` with the same layout as :func:`embed`.

    Raises
    ------
    DimensionMismatch
        If ``matrices`` is not a stack of square matrices.
    NotPositiveDefinite
        If any slice fails the factorization or the relative pivot test; the
        message names the first failing index.
    """
    if isinstance(matrices, (list, tuple)) and matrices and isinstance(matrices[0], SpdMatrix):
        _check_same_dim(matrices)
        return np.stack([_coords_from_factor(S.factor) for S in matrices])

    stack = np.asarray(matrices, dtype=np.float64)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise DimensionMismatch(f"expected an (N, m, m) stack, got shape {stack.shape}")
    n, m, _ = stack.shape
    if n == 0:
        return np.empty((0, embedding_dim(m)))
    if not np.all(np.isfinite(stack)):
        raise NonFiniteValues("matrix stack contains NaN or infinite entries")

    try:
        factors = np.linalg.cholesky(stack)
    except np.linalg.LinAlgError:
        # find the offender for a useful message
        for i in range(n):
            try:
                np.linalg.cholesky(stack[i])
            except np.linalg.LinAlgError as exc:
                raise NotPositiveDefinite(f"matrix {i} of the stack is not positive definite") from exc
        raise

    pivots = np.diagonal(factors, axis1=1, axis2=2) ** 2
    tol = m * np.finfo(np.float64).eps * np.max(np.abs(stack), axis=(1, 2))
    bad = np.flatnonzero(~np.all(pivots > tol[:, None], axis=1))
    if bad.size:
        raise NotPositiveDefinite(f"matrix {int(bad[0])} of the stack has a pivot below tolerance")
    return _coords_from_factor(factors)


def unembed_batch(coords: ArrayLike, dim_m: int | None = None) -> np.ndarray:
    """
    Vectorized :func:`unembed`.

    Parameters
    ----------
    coords : array-like
        Array of shape ``(N, m(m+1)/2)``.
    dim_m : :class:`int`, optional
        Matrix dimension; inferred from the column count when omitted.

    Returns
    -------
    :class:`numpy.ndarray`
        Exactly symmetric stack of shape ``(N, m, m)``.
    """
    arr = np.asarray(coords, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected an (N, d) coordinate array, got shape {arr.shape}")
    m = matrix_dim_from_embedding(arr.shape[1]) if dim_m is None else dim_m
    if arr.shape[1] != embedding_dim(m):
        raise DimensionMismatch(f"{arr.shape[1]} coordinates do not match matrix dimension {m}")
    factors = _factor_from_coords(arr, m)
    products = factors @ np.swapaxes(factors, 1, 2)
    return (products + np.swapaxes(products, 1, 2)) / 2.0


def _check_same_dim(matrices: Sequence[SpdMatrix]) -> int:
    dims = {S.dim for S in matrices}
    if len(dims) != 1:
        raise DimensionMismatch(f"matrices have mixed dimensions {sorted(dims)}")
    return dims.pop()


def log_cholesky_distance(A: SpdMatrix, B: SpdMatrix) -> float:
    """
    Log-Cholesky distance between two SPD matrices.

    ``d(A, B)² = ‖⌊L_A⌋ − ⌊L_B⌋‖²_F + ‖log D(L_A) − log D(L_B)‖²_F`` where
    ``⌊·⌋`` keeps the strict lower triangle and ``D(·)`` the diagonal.

    Parameters
    ----------
    A, B : :class:`SpdMatrix`
        Matrices of equal dimension.

    Returns
    -------
    :class:`float`
        Non-negative distance; symmetric in its arguments.

    Raises
    ------
    DimensionMismatch
        If the dimensions differ.
    """
    if A.dim != B.dim:
        raise DimensionMismatch(f"cannot compare a {A.dim}x{A.dim} matrix with a {B.dim}x{B.dim} matrix")
    La, Lb = A.factor, B.factor
    strict = np.tril(La, k=-1) - np.tril(Lb, k=-1)
    log_diag = np.log(np.diag(La)) - np.log(np.diag(Lb))
    return float(np.sqrt(np.sum(strict * strict) + np.sum(log_diag * log_diag)))


def frechet_mean(Z: Sequence[SpdMatrix], method: MeanMethod = "embedded") -> SpdMatrix:
    """
    Closed-form log-Cholesky Fréchet mean of a finite set of SPD matrices.

    Two constructions are available and agree to round-off:

    - ``"embedded"``: the arithmetic mean of the embedded points, mapped back
      with :func:`unembed`;
    - ``"cholesky"``: the factor built from the averaged strict lower parts
      plus ``Exp`` of the averaged ``Log`` diagonals, then ``L Lᵀ``.

    Parameters
    ----------
    Z : sequence of :class:`SpdMatrix`
        Non-empty set of matrices of equal dimension.
    method : {"embedded", "cholesky"}, optional
        Construction path. Defaults to ``"embedded"``.

    Returns
    -------
    :class:`SpdMatrix`
        The unique minimizer of :func:`frechet_variance` over SPD matrices.

    Raises
    ------
    EmptyInput
        If ``Z`` is empty.
    DimensionMismatch
        If the matrices have different dimensions.
    ValueError
        If ``method`` is unknown.
    """
    Z = list(Z)
    if not Z:
        raise EmptyInput("the Fréchet mean of an empty set is undefined")
    m = _check_same_dim(Z)

    if method == "embedded":
        coords = np.stack([_coords_from_factor(S.factor) for S in Z])
        return unembed(EmbeddedPoint(coords.mean(axis=0), dim_m=m))

    if method == "cholesky":
        factors = np.stack([S.factor for S in Z])
        strict = np.tril(factors, k=-1).mean(axis=0)
        log_diag = np.log(np.diagonal(factors, axis1=1, axis2=2)).mean(axis=0)
        return from_cholesky(CholFactor(strict + np.diag(np.exp(log_diag))))

    raise ValueError(f"Unknown Fréchet mean method {method!r}; expected 'embedded' or 'cholesky'")


def frechet_variance(a: SpdMatrix, Z: Sequence[SpdMatrix]) -> float:
    """
    Dispersion ``σ²(a, Z) = (1/|Z|) Σ d²(a, S_i)``.

    Parameters
    ----------
    a : :class:`SpdMatrix`
        Candidate center.
    Z : sequence of :class:`SpdMatrix`
        Non-empty set of matrices with the dimension of ``a``.

    Returns
    -------
    :class:`float`
    """
    Z = list(Z)
    if not Z:
        raise EmptyInput("the dispersion of an empty set is undefined")
    return float(np.mean([log_cholesky_distance(a, S) ** 2 for S in Z]))


def matrix_function(S: Union[SpdMatrix, ArrayLike], f: Callable[[float], float]) -> np.ndarray:
    """
    Apply a scalar function to a symmetric matrix through its eigendecomposition.

    ``f(S) = U f(Λ) Uᵀ`` with ``S = U Λ Uᵀ`` from a symmetric eigensolver, so
    the result is correct for any symmetric argument, not only diagonal ones.

    Parameters
    ----------
    S : :class:`SpdMatrix` or array-like
        Symmetric matrix. Plain arrays are symmetrized and checked with the
        same round-off tolerance as :class:`SpdMatrix`, but need not be
        positive definite (``matrix_function(log(S), exp)`` is allowed).
    f : callable
        Scalar function defined on every eigenvalue of ``S``.

    Returns
    -------
    :class:`numpy.ndarray`
        Exactly symmetric matrix ``f(S)``.

    Raises
    ------
    EigenFailure
        If the eigensolver does not converge.
    NonFiniteValues
        If ``f`` returns a non-finite value on an eigenvalue.
    """
    arr = S.entries if isinstance(S, SpdMatrix) else symmetrize(S)
    try:
        eigvals, eigvecs = scipy.linalg.eigh(arr, check_finite=False)
    except scipy.linalg.LinAlgError as exc:
        raise EigenFailure(f"symmetric eigensolver did not converge: {exc}") from exc

    f_vals = np.array([f(float(w)) for w in eigvals], dtype=np.float64)
    if not np.all(np.isfinite(f_vals)):
        raise NonFiniteValues("function is not finite on every eigenvalue")
    result = (eigvecs * f_vals) @ eigvecs.T
    return (result + result.T) / 2.0
