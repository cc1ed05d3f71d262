"""Exception hierarchy shared by all qnodes modules."""


class QnodesError(Exception):
    """Base class for all library errors."""


class DomainError(QnodesError):
    """An argument is outside its physical or mathematical domain."""


class NormalizationError(QnodesError):
    """A state that must be normalized is not, beyond tolerance."""


class GridError(QnodesError):
    """A grid is structurally invalid or too coarse for the requested operation."""


class ConvergenceError(QnodesError):
    """An iterative solve failed to reach its residual tolerance."""


class DegenerateError(QnodesError):
    """The input is numerically degenerate (e.g. an identically-zero sample)."""


class ConfigError(QnodesError):
    """A sweep/verify configuration is invalid."""
