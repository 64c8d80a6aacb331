"""
CLI command that runs k-means on a feature file.

``cluster`` fits seeded, multi-restart k-means to the embedded points of a
feature file and writes:

- the labels CSV (``point_index, row, col, label``)
- the centroids CSV (``label``, the embedded coordinates ``coord_*`` and the
  entries ``entry_i_j`` of the centroid SPD matrix)
- ``<out name>.manifest.yaml``

The best-of-restarts objective is printed as ``objective=<value>``.

Constants
---------
:data:`COMMAND`
    Declarative command specification.

Functions
---------
:func:`labels_frame`
    Labels table of a fit.
:func:`centroids_frame`
    Centroids table of a fit.
:func:`cli_handler`
    Execute the command.
"""

from __future__ import annotations

import argparse

import numpy as np
import pandas as pd

from SPD_Kmeans.commands.cli_core import CommandSpec, command_params, existing_file, resolve_seed
from SPD_Kmeans.logging_utils import log_invocation
from SPD_Kmeans.SPD_utils.src.clustering.kmeans import ClusterModel, KmeansConfig, fit
from SPD_Kmeans.SPD_utils.src.features.build import FeatureSet
from SPD_Kmeans.SPD_utils.src.features.store import load_features
from SPD_Kmeans.SPD_utils.src.io.manifest import RunManifest
from SPD_Kmeans.SPD_utils.src.io.tables import write_csv
from SPD_Kmeans.SPD_utils.src.spd.geometry import unembed_batch

LABEL_COLUMNS = ["point_index", "row", "col", "label"]

COMMAND = CommandSpec(
    name="cluster",
    help="Cluster embedded SPD features with log-Cholesky k-means.",
    args=[
        {"flags": ["--features"], "type": existing_file, "required": True, "help": "Feature TensorFile."},
        {"flags": ["--k"], "type": int, "required": True, "help": "Number of clusters."},
        {"flags": ["--restarts"], "type": int, "default": 8, "help": "Independently seeded k-means++ restarts."},
        {
            "flags": ["--seed"],
            "type": int,
            "default": None,
            "help": "Base seed (default: SPD_KMEANS_SEED, else 0).",
        },
        {"flags": ["--max-iters"], "type": int, "default": 300, "help": "Lloyd iterations per restart."},
        {
            "flags": ["--rel-tol"],
            "type": float,
            "default": 1e-6,
            "help": "Stop when the objective improves by less than this fraction.",
        },
        {"flags": ["--out"], "required": True, "help": "Labels CSV."},
        {"flags": ["--centroids"], "required": True, "help": "Centroids CSV."},
        {"flags": ["--verbose"], "action": "store_true", "help": "Enable verbose logging (INFO level)."},
    ],
)


def labels_frame(features: FeatureSet, model: ClusterModel) -> pd.DataFrame:
    """Table ``point_index, row, col, label`` of a fitted feature set."""
    return pd.DataFrame(
        {
            "point_index": np.arange(features.n_points, dtype=np.int64),
            "row": features.pixel_index[:, 0],
            "col": features.pixel_index[:, 1],
            "label": model.labels.astype(np.int64),
        },
        columns=LABEL_COLUMNS,
    )


def centroids_frame(model: ClusterModel, m: int) -> pd.DataFrame:
    """
    Table of centroids in embedded and matrix form.

    Columns are ``label``, ``coord_0 … coord_{d-1}`` and ``entry_i_j`` for the
    ``m×m`` centroid matrix in row-major order.
    """
    d = model.centroids.shape[1]
    matrices = unembed_batch(model.centroids, m).reshape(model.k, m * m)
    frame = pd.DataFrame({"label": np.arange(model.k, dtype=np.int64)})
    coords = pd.DataFrame(model.centroids, columns=[f"coord_{j}" for j in range(d)])
    entries = pd.DataFrame(matrices, columns=[f"entry_{i}_{j}" for i in range(m) for j in range(m)])
    return pd.concat([frame, coords, entries], axis=1)


def cli_handler(args: argparse.Namespace) -> None:
    """
    CLI handler for the ``cluster`` command.

    Parameters
    ----------
    args : :class:`argparse.Namespace`
        Parsed command-line arguments.
    """
    seed = resolve_seed(args.seed)
    cfg = KmeansConfig(k=args.k, max_iters=args.max_iters, rel_tol=args.rel_tol, restarts=args.restarts, seed=seed)
    manifest = RunManifest.collect("cluster", command_params(args, seed=seed), inputs={"features": args.features}, seed=seed)
    log_invocation(manifest.command, manifest.params)

    features = load_features(args.features)
    model = fit(features.coords, cfg)

    write_csv(labels_frame(features, model), args.out)
    write_csv(centroids_frame(model, features.m), args.centroids)
    manifest.extra = {
        "k": model.k,
        "n_points": features.n_points,
        "objective": model.objective,
        "iters_run": model.iters_run,
        "restart_of_best": model.restart_of_best,
        "counts": model.counts.tolist(),
    }
    manifest.write(args.out)
    print(f"objective={model.objective:.17g}")
