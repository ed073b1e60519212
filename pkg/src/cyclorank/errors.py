"""Exception types shared by every module.

ParameterError means the caller handed us something invalid (bad prime,
exceeded bound, malformed file); ConsistencyError means an internal
self-check failed, which indicates a bug rather than bad input.
"""


class ParameterError(ValueError):
    """Invalid argument or configured bound exceeded."""


class ConsistencyError(RuntimeError):
    """An exact internal invariant did not hold."""
