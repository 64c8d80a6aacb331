"""
File formats: TensorFile arrays, deterministic CSV tables and run manifests.
"""

from SPD_Kmeans.SPD_utils.src.io.tensor_file import read_tensor, write_tensor  # noqa: F401
from SPD_Kmeans.SPD_utils.src.io.tables import read_csv, write_csv  # noqa: F401
from SPD_Kmeans.SPD_utils.src.io.manifest import RunManifest, file_sha256, manifest_path  # noqa: F401
