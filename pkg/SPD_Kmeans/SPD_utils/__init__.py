"""
Implementation of the SPD_Kmeans library.

The subpackages live under :mod:`SPD_Kmeans.SPD_utils.src`; the names most
scripts need are re-exported here.
"""

from SPD_Kmeans.SPD_utils.src.spd import (  # noqa: F401
    SpdMatrix,
    embed,
    log_cholesky_distance,
    unembed,
)
from SPD_Kmeans.SPD_utils.src.clustering import KmeansConfig, fit, select_k  # noqa: F401
from SPD_Kmeans.SPD_utils.src.features import FeatureConfig, RasterStack, build_features  # noqa: F401
from SPD_Kmeans.SPD_utils.src.metrics import adjusted_rand, sweep  # noqa: F401
