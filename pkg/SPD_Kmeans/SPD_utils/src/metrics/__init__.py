"""
Evaluation metrics and the hyperparameter sweep.

**Submodules**
--------------
- :mod:`.agreement`: :func:`adjusted_rand` and the contingency table.
- :mod:`.anova`: :func:`anova_r2`, :func:`anova_comparison`.
- :mod:`.sargde`: the SARGDE_v1 index per pixel and its quartile classes.
- :mod:`.overlap`: per-cluster overlap with the positive ground-truth class.
- :mod:`.sweep`: ARI over a ``(band, lag, patch, k)`` grid.
"""

from SPD_Kmeans.SPD_utils.src.metrics.agreement import adjusted_rand, contingency_table  # noqa: F401
from SPD_Kmeans.SPD_utils.src.metrics.anova import AnovaResult, anova_comparison, anova_r2  # noqa: F401
from SPD_Kmeans.SPD_utils.src.metrics.overlap import OverlapRecord, overlap_frame, overlap_report  # noqa: F401
from SPD_Kmeans.SPD_utils.src.metrics.sargde import (  # noqa: F401
    sargde_quartile_classes,
    sargde_raster,
    sargde_v1,
)
from SPD_Kmeans.SPD_utils.src.metrics.sweep import (  # noqa: F401
    SweepCell,
    SweepResult,
    cell_seed,
    sweep,
    sweep_cell,
)
