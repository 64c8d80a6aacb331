"""
k-means of SPD matrices and selection of the number of clusters.

**Submodules**
--------------
- :mod:`.kmeans`: :class:`KmeansConfig`, :class:`ClusterModel`, :func:`fit`, :func:`fit_spd`, :func:`assign`.
- :mod:`.model_select`: :func:`select_k`, :func:`select_k_embedded` and the BIC-style penalty.
"""

from SPD_Kmeans.SPD_utils.src.clustering.kmeans import (  # noqa: F401
    ClusterModel,
    KmeansConfig,
    assign,
    fit,
    fit_spd,
    objective,
)
from SPD_Kmeans.SPD_utils.src.clustering.model_select import (  # noqa: F401
    KCandidate,
    KSelectionReport,
    bic_penalty,
    select_k,
    select_k_embedded,
)
