from __future__ import annotations

import logging
from pathlib import Path
import sys

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import numpy as np
import pytest

from SPD_Kmeans.logging_utils import PACKAGE_LOGGER_NAME
from SPD_Kmeans.SPD_utils.src.io.tensor_file import write_tensor
from SPD_Kmeans.SPD_utils.src.spd import SpdMatrix, sample_spd_batch


@pytest.fixture(autouse=True)
def serial_executor(monkeypatch):
    """Run k-means restarts inline; results do not depend on the executor."""
    monkeypatch.setenv("SPD_KMEANS_EXECUTOR", "serial")
    monkeypatch.delenv("SPD_KMEANS_SEED", raising=False)


@pytest.fixture(autouse=True)
def reset_package_logger():
    """Undo :func:`configure_logging` calls made by CLI tests so caplog keeps working."""
    yield
    package = logging.getLogger(PACKAGE_LOGGER_NAME)
    package.handlers = [h for h in package.handlers if isinstance(h, logging.NullHandler)]
    package.setLevel(logging.NOTSET)
    package.propagate = True


@pytest.fixture
def spd_2x2() -> SpdMatrix:
    """``[[4, 2], [2, 5]]``, whose Cholesky factor is ``[[2, 0], [1, 2]]``."""
    return SpdMatrix([[4.0, 2.0], [2.0, 5.0]])


@pytest.fixture
def two_blob_matrices() -> tuple[list[SpdMatrix], np.ndarray]:
    """Twenty 3×3 matrices around the identity and twenty around a far center."""
    far = np.array([2.0, 0.0, 0.0, 1.5, 0.0, 1.0])
    near = sample_spd_batch(3, 20, seed=11, spread=0.05)
    away = sample_spd_batch(3, 20, seed=12, spread=0.05, center=far)
    truth = np.repeat([0, 1], 20)
    return near + away, truth


def _ar1(rng: np.random.Generator, phi: float, n_series: int, T: int) -> np.ndarray:
    x = np.empty((n_series, T))
    x[:, 0] = rng.standard_normal(n_series)
    for t in range(1, T):
        x[:, t] = phi * x[:, t - 1] + rng.standard_normal(n_series)
    return x


@pytest.fixture
def labeled_band() -> tuple[np.ndarray, np.ndarray]:
    """
    A 40×6×8 band whose left half is persistent and right half alternating.

    Returns the ``T×H×W`` values and the ``H×W`` truth (0 left, 1 right).
    """
    rng = np.random.default_rng(7)
    T, H, W = 40, 6, 8
    values = np.empty((T, H, W))
    values[:, :, :4] = _ar1(rng, 0.8, H * 4, T).T.reshape(T, H, 4)
    values[:, :, 4:] = _ar1(rng, -0.8, H * 4, T).T.reshape(T, H, 4)
    truth = np.zeros((H, W))
    truth[:, 4:] = 1.0
    return values, truth


@pytest.fixture
def band_files(tmp_path, labeled_band) -> dict[str, Path]:
    """The labeled band, its truth and a second band written as TensorFiles."""
    values, truth = labeled_band
    rng = np.random.default_rng(8)
    vh = 2.0 + values + 0.1 * rng.standard_normal(values.shape)
    return {
        "CC": write_tensor(tmp_path / "cc.spdk", values),
        "VH": write_tensor(tmp_path / "vh.spdk", vh),
        "truth": write_tensor(tmp_path / "truth.spdk", truth),
    }
