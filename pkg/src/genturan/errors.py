"""Exception types shared across the package."""


class GenTuranError(Exception):
    """Base class for all package errors."""


class InvalidSpec(GenTuranError, ValueError):
    """A construction spec violates its parameter constraints."""


class SizeCap(GenTuranError, ValueError):
    """An input exceeds a hard size limit of the requested operation."""


class MalformedEncoding(GenTuranError, ValueError):
    """A graph6 string could not be decoded."""


class InvalidParams(GenTuranError, ValueError):
    """Parameters fall outside a verification procedure's hypotheses."""


class InternalInconsistency(GenTuranError, RuntimeError):
    """Two computations that must agree did not (indicates a bug)."""
