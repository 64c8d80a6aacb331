"""
SPD_Kmeans: k-means clustering of symmetric positive definite matrices under
the log-Cholesky metric.

This package provides tools for:

- Mapping SPD matrices to and from their log-Cholesky coordinates
- Computing log-Cholesky distances and closed-form Fréchet means
- Running seeded, multi-restart k-means on the embedded matrices
- Selecting the number of clusters with a BIC-style penalized objective
- Turning pixel time-series rasters into autocovariance features
- Scoring clusterings against ground truth (adjusted Rand index, ANOVA,
  overlap reports, SARGDE index) and sweeping pipeline hyperparameters

Environment-dependent configuration lives in :mod:`SPD_Kmeans.settings`.
"""

from __future__ import annotations

import logging
from SPD_Kmeans._version import __version__

logging.getLogger(__name__).addHandler(logging.NullHandler())
import SPD_Kmeans.settings  # noqa: E402,F401
