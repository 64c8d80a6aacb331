import logging

import pytest

from SPD_Kmeans import cli
from SPD_Kmeans.logging_utils import (
    PACKAGE_LOGGER_NAME,
    configure_logging,
    get_logger,
    log_invocation,
    resolve_level,
)


def test_get_logger_stays_in_package_namespace():
    assert get_logger().name == PACKAGE_LOGGER_NAME
    assert get_logger("SPD_Kmeans.cli").name == "SPD_Kmeans.cli"
    assert get_logger("commands.cluster").name == "SPD_Kmeans.commands.cluster"


def test_resolve_level_prefers_explicit_level():
    assert resolve_level() == logging.WARNING
    assert resolve_level(verbose=True) == logging.INFO
    assert resolve_level("debug", verbose=True) == logging.DEBUG
    assert resolve_level("ERROR", verbose=True) == logging.ERROR
    with pytest.raises(ValueError, match="Unknown logging level"):
        resolve_level("chatty")


def test_configure_logging_installs_a_single_handler():
    logger = configure_logging("INFO")
    configure_logging(logging.DEBUG)
    streams = [h for h in logger.handlers if isinstance(h, logging.StreamHandler)]
    assert len(streams) == 1
    assert logger.level == logging.DEBUG
    assert not logger.propagate


def test_log_invocation_sorts_parameters(caplog):
    with caplog.at_level(logging.INFO, logger=PACKAGE_LOGGER_NAME):
        log_invocation("cluster", {"seed": 3, "k": 2})
    assert "cluster: k=2, seed=3" in caplog.text


def test_verbose_flag_shows_info_on_stderr(tmp_path, band_files, capsys):
    code = cli.main(
        ["features", "--band", str(band_files["CC"]), "--lag", "1", "--out", str(tmp_path / "f.spdk"), "--verbose"]
    )
    err = capsys.readouterr().err
    assert code == 0
    assert "INFO:SPD_Kmeans.commands.features:features: " in err
    assert "lag=1" in err
