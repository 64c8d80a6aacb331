"""
SPD matrix types and log-Cholesky geometry.

**Submodules**
--------------
- :mod:`.errors`: Exception hierarchy shared by the whole package, with CLI exit codes.
- :mod:`.spd_matrix`: :class:`SpdMatrix`, :class:`CholFactor` and :class:`EmbeddedPoint`.
- :mod:`.geometry`: Cholesky map, embedding, distance, Fréchet mean, matrix functions.
- :mod:`.sampling`: Seeded generators of random SPD matrices.
"""

from SPD_Kmeans.SPD_utils.src.spd.spd_matrix import (  # noqa: F401
    CholFactor,
    EmbeddedPoint,
    SpdMatrix,
    embedding_dim,
    matrix_dim_from_embedding,
)
from SPD_Kmeans.SPD_utils.src.spd.geometry import (  # noqa: F401
    cholesky,
    embed,
    embed_batch,
    frechet_mean,
    frechet_variance,
    from_cholesky,
    identity,
    log_cholesky_distance,
    matrix_function,
    unembed,
    unembed_batch,
)
from SPD_Kmeans.SPD_utils.src.spd.sampling import sample_spd, sample_spd_batch  # noqa: F401
