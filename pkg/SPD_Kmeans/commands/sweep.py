"""
CLI command that sweeps bands, lags, patch sizes and cluster counts.

Every cell of the ``band × patch × lag × k`` grid is clustered and scored by
its adjusted Rand index against the ground-truth raster. The grid CSV has
columns ``band, lag, patch, k, ari``; the best cell is printed as
``best=band=<b>,lag=<l>,patch=<p>,k=<k>,ari=<v>``.
"""

from __future__ import annotations

import argparse

from SPD_Kmeans.commands.cli_core import (
    CommandSpec,
    command_params,
    existing_file,
    int_list,
    named_path,
    resolve_seed,
)
from SPD_Kmeans.logging_utils import log_invocation
from SPD_Kmeans.SPD_utils.src.clustering.kmeans import KmeansConfig
from SPD_Kmeans.SPD_utils.src.features.autocov import DEFAULT_JITTER
from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack
from SPD_Kmeans.SPD_utils.src.io.manifest import RunManifest
from SPD_Kmeans.SPD_utils.src.io.tables import write_csv
from SPD_Kmeans.SPD_utils.src.io.tensor_file import read_tensor
from SPD_Kmeans.SPD_utils.src.metrics.sweep import sweep
from SPD_Kmeans.SPD_utils.src.spd.errors import InvalidParameter, TensorFormatError

COMMAND = CommandSpec(
    name="sweep",
    help="Score a band × lag × patch × k grid by adjusted Rand index against ground truth.",
    args=[
        {
            "flags": ["--bands"],
            "type": named_path,
            "nargs": "+",
            "required": True,
            "help": "Bands as NAME=FILE, e.g. CC=cc.spdk VH=vh.spdk.",
        },
        {
            "flags": ["--truth"],
            "type": existing_file,
            "required": True,
            "help": "Ground truth, a 2-D TensorFile of integer labels (NaN = unlabeled).",
        },
        {"flags": ["--lags"], "type": int_list, "required": True, "help": "Comma-separated lags, e.g. 1,2,3."},
        {"flags": ["--patches"], "type": int_list, "required": True, "help": "Comma-separated patch sizes."},
        {"flags": ["--ks"], "type": int_list, "required": True, "help": "Comma-separated cluster counts."},
        {"flags": ["--restarts"], "type": int, "default": 8, "help": "Restarts per cell."},
        {"flags": ["--seed"], "type": int, "default": None, "help": "Base seed (default: SPD_KMEANS_SEED, else 0)."},
        {"flags": ["--border"], "choices": ["drop", "avg"], "default": "drop", "help": "Partial-patch policy."},
        {"flags": ["--jitter"], "type": float, "default": DEFAULT_JITTER, "help": "Autocovariance jitter."},
        {"flags": ["--out"], "required": True, "help": "Grid CSV."},
        {"flags": ["--progress"], "action": "store_true", "help": "Show a progress bar over cells."},
        {"flags": ["--verbose"], "action": "store_true", "help": "Enable verbose logging (INFO level)."},
    ],
)


def cli_handler(args: argparse.Namespace) -> None:
    """
    CLI handler for the ``sweep`` command.

    Parameters
    ----------
    args : :class:`argparse.Namespace`
        Parsed command-line arguments.
    """
    bands = dict(args.bands)
    if len(bands) != len(args.bands):
        raise InvalidParameter("band names given to --bands must be unique")

    seed = resolve_seed(args.seed)
    template = KmeansConfig(k=1, restarts=args.restarts, seed=seed)
    inputs = {f"band_{name}": path for name, path in bands.items()}
    inputs["truth"] = args.truth
    manifest = RunManifest.collect(
        "sweep", command_params(args, bands=bands, seed=seed), inputs=inputs, seed=seed
    )
    log_invocation(manifest.command, manifest.params)

    truth = read_tensor(args.truth)
    if truth.ndim != 2:
        raise TensorFormatError(f"{args.truth}: truth must be a 2-D TensorFile, got {truth.ndim} dimensions")
    stacks = {name: RasterStack.from_tensor_file(path, band_name=name) for name, path in bands.items()}

    result = sweep(
        stacks,
        truth,
        args.lags,
        args.patches,
        args.ks,
        template,
        border_policy=args.border,
        jitter=args.jitter,
        progress=args.progress,
    )

    write_csv(result.to_frame(), args.out)
    best = result.best
    manifest.extra = {
        "cells": len(result.grid),
        "best": {"band": best.band, "lag": best.lag, "patch": best.patch, "k": best.k, "ari": best.ari},
    }
    manifest.write(args.out)
    print(f"best=band={best.band},lag={best.lag},patch={best.patch},k={best.k},ari={best.ari:.17g}")
