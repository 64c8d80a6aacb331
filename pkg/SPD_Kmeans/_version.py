"""
Installed version of SPD_Kmeans.

The value comes from the package metadata, so it is the version setuptools-scm
stamped at install time. Run manifests record it next to the parameters. A
source tree that was never installed reports ``"dev"``.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("SPD_Kmeans")
except PackageNotFoundError:
    __version__ = "dev"
