"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: malformed input -> 1,
infeasible parameters -> 2, capacity refusals -> 3.
"""


class DenseKitError(Exception):
    """Base class for all densekit errors."""


class MalformedInputError(DenseKitError, ValueError):
    """Input text or edge data violates the graph format contract."""


class ParameterError(DenseKitError, ValueError):
    """A parameter is outside its domain (k out of range, empty set, ...)."""


class CapacityError(DenseKitError):
    """A brute-force operation was refused because the instance is too large."""


class OracleContractError(DenseKitError):
    """A plugged-in oracle violated its declared contract."""
