"""Exception types raised across the package."""


class TopoStableError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateBasisError(TopoStableError):
    """Candidate neighbors are (numerically) collinear; no independent basis vector."""


class DegenerateComplementError(TopoStableError):
    """Probe point lies (numerically) inside the local subspace; no complement vector."""


class ZeroVectorError(TopoStableError):
    """An angle was requested for a zero-length vector."""


class NotSymmetricError(TopoStableError):
    """Matrix asymmetry exceeds tolerance."""


class ZeroVarianceError(TopoStableError):
    """Correlation is undefined because one input is constant."""


class KTooLargeError(TopoStableError):
    """Requested neighbor count k >= number of points."""


class NonFiniteError(TopoStableError):
    """Matrix contains infinities or NaNs where finite values are required."""


class BadDimError(TopoStableError):
    """Embedding dimension out of range."""


class BadCountError(TopoStableError):
    """Requested sample count below the generator minimum."""


class BadMagicError(TopoStableError):
    """IDX file does not start with the expected magic number."""


class TruncatedFileError(TopoStableError):
    """IDX file ends before the declared payload."""


class DimensionMismatchError(TopoStableError):
    """Label file item count differs from the image count."""


class RaggedRowsError(TopoStableError):
    """CSV rows have differing column counts."""


class NonNumericCellError(TopoStableError):
    """CSV cell could not be parsed as a number."""
