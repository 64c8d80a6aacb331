"""
CLI command that reports a clustering against ground truth and SARGDE.

``report`` joins a labels CSV (as written by ``cluster``) with the ground
truth raster on ``(row, col)`` and writes, per cluster, the fraction of
members in the positive class (``cluster, size, overlap_fraction, flagged``).
Flagged clusters are printed as ``flagged=<comma list>``.

With ``--sargde CC=FILE,VH=FILE`` it also computes the SARGDE_v1 index per
point (written to ``<out stem>.sargde.csv`` with its quartile class) and how
much of its variance the clustering explains (``<out stem>.anova.csv``).
Further labelings given with ``--compare`` (for example a ``k = 2`` fit of the
same features) add rows to the ANOVA table.

``--patch``/``--border`` must match the values used to build the features:
the truth is brought to the patched grid by majority vote and the SARGDE bands
by patch averaging.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np
import pandas as pd

from SPD_Kmeans.commands.cli_core import CommandSpec, command_params, existing_file, named_paths, sibling_path
from SPD_Kmeans.commands.cluster import LABEL_COLUMNS
from SPD_Kmeans.logging_utils import get_logger, log_invocation
from SPD_Kmeans.SPD_utils.src.features.patching import patch_average, patch_labels
from SPD_Kmeans.SPD_utils.src.features.raster import RasterStack, normalize_border_policy
from SPD_Kmeans.SPD_utils.src.io.manifest import RunManifest
from SPD_Kmeans.SPD_utils.src.io.tables import read_csv, write_csv
from SPD_Kmeans.SPD_utils.src.io.tensor_file import read_tensor
from SPD_Kmeans.SPD_utils.src.metrics.anova import anova_comparison
from SPD_Kmeans.SPD_utils.src.metrics.overlap import overlap_frame, overlap_report
from SPD_Kmeans.SPD_utils.src.metrics.sargde import sargde_quartile_classes, sargde_raster
from SPD_Kmeans.SPD_utils.src.spd.errors import (
    DimensionMismatch,
    InvalidParameter,
    LengthMismatch,
    TensorFormatError,
)

logger = get_logger(__name__)

COMMAND = CommandSpec(
    name="report",
    help="Report cluster overlap with ground truth and, optionally, SARGDE statistics.",
    args=[
        {"flags": ["--labels"], "type": existing_file, "required": True, "help": "Labels CSV from the cluster command."},
        {
            "flags": ["--truth"],
            "type": existing_file,
            "required": True,
            "help": "Ground truth, a 2-D TensorFile at the original resolution (values > 0 are positive).",
        },
        {
            "flags": ["--sargde"],
            "type": named_paths,
            "default": None,
            "help": "Coherence and VH bands as CC=FILE,VH=FILE.",
        },
        {
            "flags": ["--compare"],
            "type": existing_file,
            "nargs": "*",
            "default": [],
            "help": "Other labels CSVs of the same pixels to compare in the ANOVA table.",
        },
        {
            "flags": ["--threshold"],
            "type": float,
            "default": 0.05,
            "help": "Flag clusters whose positive fraction is strictly above this value.",
        },
        {"flags": ["--patch"], "type": int, "default": 1, "help": "Patch size the labels were computed with."},
        {"flags": ["--border"], "choices": ["drop", "avg"], "default": "drop", "help": "Partial-patch policy."},
        {"flags": ["--out"], "required": True, "help": "Overlap report CSV."},
        {"flags": ["--verbose"], "action": "store_true", "help": "Enable verbose logging (INFO level)."},
    ],
)


def _pixel_coords(labels: pd.DataFrame, grid_shape: tuple[int, int], source: Path) -> tuple[np.ndarray, np.ndarray]:
    rows = labels["row"].to_numpy(dtype=np.int64)
    cols = labels["col"].to_numpy(dtype=np.int64)
    if np.any(rows < 0) or np.any(cols < 0):
        raise DimensionMismatch(
            f"{source} has no pixel coordinates (row/col = -1); keep the features' .pixels.csv next to them"
        )
    H, W = grid_shape
    if rows.size and (rows.max() >= H or cols.max() >= W):
        raise DimensionMismatch(
            f"{source} addresses pixel ({rows.max()}, {cols.max()}) outside the {H}×{W} patched grid; "
            "check --patch and --border"
        )
    return rows, cols


def _aligned_labels(base: pd.DataFrame, path: Path) -> np.ndarray:
    other = read_csv(path, required=LABEL_COLUMNS)
    merged = base[["row", "col"]].merge(other[["row", "col", "label"]], on=["row", "col"], how="left")
    if merged["label"].isna().any():
        raise LengthMismatch(f"{path} does not label every pixel of the main labels file")
    return merged["label"].to_numpy(dtype=np.int64)


def cli_handler(args: argparse.Namespace) -> None:
    """
    CLI handler for the ``report`` command.

    Parameters
    ----------
    args : :class:`argparse.Namespace`
        Parsed command-line arguments.
    """
    policy = normalize_border_policy(args.border)
    sargde_inputs = args.sargde or {}
    if sargde_inputs and set(sargde_inputs) != {"CC", "VH"}:
        raise InvalidParameter(f"--sargde needs exactly CC=FILE,VH=FILE, got {', '.join(sorted(sargde_inputs))}")

    inputs = {"labels": args.labels, "truth": args.truth}
    inputs.update({f"sargde_{name}": path for name, path in sargde_inputs.items()})
    inputs.update({f"compare_{i}": path for i, path in enumerate(args.compare)})
    manifest = RunManifest.collect("report", command_params(args), inputs=inputs)
    log_invocation(manifest.command, manifest.params)

    labels = read_csv(args.labels, required=LABEL_COLUMNS).sort_values("point_index").reset_index(drop=True)
    truth = read_tensor(args.truth)
    if truth.ndim != 2:
        raise TensorFormatError(f"{args.truth}: truth must be a 2-D TensorFile, got {truth.ndim} dimensions")
    patched_truth = patch_labels(truth, args.patch, policy)
    rows, cols = _pixel_coords(labels, patched_truth.shape, args.labels)
    cluster = labels["label"].to_numpy(dtype=np.int64)

    records = overlap_report(cluster, patched_truth[rows, cols], args.threshold)
    write_csv(overlap_frame(records), args.out)
    flagged = [r.cluster for r in records if r.flagged]
    manifest.extra = {"clusters": len(records), "flagged": flagged}

    if sargde_inputs:
        cc = patch_average(RasterStack.from_tensor_file(sargde_inputs["CC"], band_name="CC"), args.patch, policy)
        vh = patch_average(RasterStack.from_tensor_file(sargde_inputs["VH"], band_name="VH"), args.patch, policy)
        index = sargde_raster(cc, vh)
        if index.shape != patched_truth.shape:
            raise DimensionMismatch(f"SARGDE grid {index.shape} does not match the truth grid {patched_truth.shape}")
        values = index[rows, cols]

        per_point = labels[LABEL_COLUMNS].copy()
        per_point["sargde"] = values
        per_point["sargde_quartile"] = sargde_quartile_classes(values)
        write_csv(per_point, sibling_path(args.out, ".sargde.csv"))

        finite = np.isfinite(values)
        if not finite.all():
            logger.warning("SARGDE is undefined for %d of %d points; they are left out of the ANOVA.",
                           int((~finite).sum()), finite.size)
        by_name = {Path(args.labels).stem: cluster[finite]}
        for path in args.compare:
            by_name[Path(path).stem] = _aligned_labels(labels, path)[finite]
        anova = anova_comparison(values[finite], by_name)
        write_csv(anova, sibling_path(args.out, ".anova.csv"))
        manifest.extra["anova"] = anova.to_dict(orient="records")

    manifest.write(args.out)
    print("flagged=" + ",".join(str(c) for c in flagged))
