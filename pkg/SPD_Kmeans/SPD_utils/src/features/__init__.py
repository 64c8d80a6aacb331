"""
Raster time-series features: patch averaging, autocovariance matrices and
their log-Cholesky embedding.

**Submodules**
--------------
- :mod:`.raster`: :class:`RasterStack`.
- :mod:`.patching`: :func:`patch_average`, :func:`patch_labels`.
- :mod:`.autocov`: :func:`autocov_matrix`, :func:`autocov_toeplitz`, :func:`autocov_batch`.
- :mod:`.build`: :class:`FeatureConfig`, :class:`FeatureSet`, :func:`build_features`.
- :mod:`.store`: :func:`save_features`, :func:`load_features` (feature files and their sidecars).
"""

from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack  # noqa: F401
from SPD_Kmeans.SPD_utils.src.features.patching import patch_average, patch_labels  # noqa: F401
from SPD_Kmeans.SPD_utils.src.features.autocov import (  # noqa: F401
    autocov_batch,
    autocov_matrix,
    autocov_toeplitz,
)
from SPD_Kmeans.SPD_utils.src.features.build import FeatureConfig, FeatureSet, build_features  # noqa: F401
from SPD_Kmeans.SPD_utils.src.features.store import load_features, pixels_path, save_features  # noqa: F401
