"""
Exception hierarchy shared by every SPD_Kmeans module.

All domain failures derive from :class:`SPDKmeansError`. The three
intermediate classes group failures by what the command line should do about
them, and carry the process exit code used by :func:`SPD_Kmeans.cli.main`:

- :class:`MalformedInputError` (exit code 2): the data itself is invalid.
- :class:`InvalidConfigurationError` (exit code 3): the data is fine but the
  requested configuration cannot be applied to it.
- :class:`InfeasibleClusteringError` (exit code 4): the clustering problem
  is under-determined.

Concrete classes additionally subclass a builtin (:class:`ValueError` or
:class:`ArithmeticError`) so library users can catch them without importing
this module.

**Classes**

- :class:`NotPositiveDefinite`, :class:`NotSymmetric`, :class:`DimensionMismatch`,
  :class:`LengthMismatch`, :class:`TensorFormatError`, :class:`NonFiniteValues`,
  :class:`InvalidLabels`, :class:`TableFormatError`
- :class:`InvalidParameter`, :class:`DegenerateOutput`, :class:`ConstantSeries`, :class:`DegenerateGroups`,
  :class:`DegenerateSeries`, :class:`EigenFailure`
- :class:`EmptyInput`, :class:`KExceedsN`
"""


class SPDKmeansError(Exception):
    """
    Base class of all SPD_Kmeans errors.

    Attributes
    ----------
    exit_code : :class:`int`
        Process exit status used when the error reaches the command line.
    """

    exit_code = 1


class MalformedInputError(SPDKmeansError):
    """Input data violates a structural invariant (exit code 2)."""

    exit_code = 2


class InvalidConfigurationError(SPDKmeansError):
    """A parameter cannot be applied to otherwise valid data (exit code 3)."""

    exit_code = 3


class InfeasibleClusteringError(SPDKmeansError):
    """The clustering problem has too few points (exit code 4)."""

    exit_code = 4


class NotPositiveDefinite(MalformedInputError, ValueError):
    """
    Raised when a Cholesky pivot is not safely positive.

    A pivot is accepted only when it exceeds ``dim * eps * max|S|``; anything
    smaller means the matrix is not numerically SPD.
    """


class NotSymmetric(MalformedInputError, ValueError):
    """Raised when a matrix is further from symmetric than round-off explains."""


class DimensionMismatch(MalformedInputError, ValueError):
    """Raised when array shapes or matrix dimensions are incompatible."""


class LengthMismatch(MalformedInputError, ValueError):
    """Raised when two label or value vectors do not have equal lengths."""


class TensorFormatError(MalformedInputError, ValueError):
    """Raised when a tensor file has a bad magic, version, or payload size."""


class NonFiniteValues(MalformedInputError, ValueError):
    """Raised when NaN or infinite values appear where finite ones are required."""


class InvalidLabels(MalformedInputError, ValueError):
    """Raised when a label raster or label column holds non-integer values."""


class TableFormatError(MalformedInputError, ValueError):
    """Raised when a CSV table is missing, or lacks a required column."""


class InvalidParameter(InvalidConfigurationError, ValueError):
    """Raised when a configuration value is outside its valid range."""


class DegenerateOutput(InvalidConfigurationError, ValueError):
    """Raised when patching would produce an empty grid."""


class ConstantSeries(InvalidConfigurationError, ValueError):
    """Raised when a time-series has zero sample variance."""


class DegenerateGroups(InvalidConfigurationError, ValueError):
    """Raised when an ANOVA has fewer than two groups or too few observations."""


class DegenerateSeries(InvalidConfigurationError, ValueError):
    """Raised when a SARGDE factor (standard deviation or mean) is zero."""


class EigenFailure(InvalidConfigurationError, ArithmeticError):
    """Raised when the symmetric eigensolver does not converge."""


class EmptyInput(InfeasibleClusteringError, ValueError):
    """Raised when an operation receives no points, matrices, or candidates."""


class KExceedsN(InfeasibleClusteringError, ValueError):
    """Raised when more clusters are requested than there are points."""
