"""
CLI command that turns one raster band into log-Cholesky features.

``features`` reads a ``T×H×W`` TensorFile, optionally averages ``p×p``
patches, computes the ``(lag+1)×(lag+1)`` autocovariance matrix of every
patched pixel and writes their log-Cholesky coordinates as a 2-D TensorFile.
The pixel sidecar ``<out stem>.pixels.csv`` and the manifest
``<out name>.manifest.yaml`` are written next to it.

Constants
---------
:data:`COMMAND`
    Declarative command specification.

Functions
---------
:func:`cli_handler`
    Execute the command.
"""

from __future__ import annotations

import argparse

from SPD_Kmeans.commands.cli_core import CommandSpec, command_params, existing_file
from SPD_Kmeans.logging_utils import log_invocation
from SPD_Kmeans.SPD_utils.src.features.autocov import DEFAULT_JITTER
from SPD_Kmeans.SPD_utils.src.features.build import FeatureConfig, build_features
from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack
from SPD_Kmeans.SPD_utils.src.features.store import save_features
from SPD_Kmeans.SPD_utils.src.io.manifest import RunManifest

COMMAND = CommandSpec(
    name="features",
    help="Build log-Cholesky autocovariance features from a T×H×W band.",
    args=[
        {
            "flags": ["--band"],
            "type": existing_file,
            "required": True,
            "help": "Input band, a 3-D TensorFile (T×H×W, NaN = nodata).",
        },
        {
            "flags": ["--lag"],
            "type": int,
            "required": True,
            "help": "Largest autocovariance lag; matrices are (lag+1)×(lag+1).",
        },
        {
            "flags": ["--patch"],
            "type": int,
            "default": 1,
            "help": "Side of the square patches averaged before the autocovariance.",
        },
        {
            "flags": ["--jitter"],
            "type": float,
            "default": DEFAULT_JITTER,
            "help": "Relative diagonal regularization (times the lag-0 autocovariance).",
        },
        {
            "flags": ["--border"],
            "choices": ["drop", "avg"],
            "default": "drop",
            "help": "Partial patches at the raster border: drop them or average the pixels they have.",
        },
        {
            "flags": ["--name"],
            "default": None,
            "help": "Band name recorded with the features (default: input file stem).",
        },
        {
            "flags": ["--out"],
            "required": True,
            "help": "Output 2-D TensorFile of embedded points.",
        },
        {
            "flags": ["--verbose"],
            "action": "store_true",
            "help": "Enable verbose logging (INFO level).",
        },
    ],
)


def cli_handler(args: argparse.Namespace) -> None:
    """
    CLI handler for the ``features`` command.

    Prints ``points=<n>`` on success.

    Parameters
    ----------
    args : :class:`argparse.Namespace`
        Parsed command-line arguments.
    """
    cfg = FeatureConfig(lag=args.lag, patch=args.patch, jitter=args.jitter, border_policy=args.border)
    manifest = RunManifest.collect("features", command_params(args), inputs={"band": args.band})
    log_invocation(manifest.command, manifest.params)

    stack = RasterStack.from_tensor_file(args.band, band_name=args.name)
    features = build_features(stack, cfg)
    save_features(features, args.out)

    manifest.extra = {
        "m": features.m,
        "grid_dims": list(features.grid_dims),
        "band": features.band_name,
        "n_points": features.n_points,
    }
    manifest.write(args.out)
    print(f"points={features.n_points}")
