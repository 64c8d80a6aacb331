"""
Internal implementation package.

Most users should import through :mod:`SPD_Kmeans.SPD_utils` or use the
command-line interface.

Subpackages
-----------
:mod:`.spd`
    SPD matrix types, log-Cholesky geometry, sampling and the error hierarchy.
:mod:`.clustering`
    k-means on embedded matrices and selection of the number of clusters.
:mod:`.features`
    Raster stacks, patching, autocovariance features and feature files.
:mod:`.metrics`
    Adjusted Rand index, ANOVA, SARGDE, overlap reports and the sweep.
:mod:`.io`
    TensorFile codec, CSV tables and run manifests.
"""
