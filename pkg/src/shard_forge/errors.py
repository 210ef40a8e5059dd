class ShardForgeError(Exception):
    """Base class for library errors."""

    exit_code = 1


class ValidationError(ShardForgeError, ValueError):
    """Malformed input: bad Cartan datum, root string, word syntax, ..."""

    exit_code = 2


class CartanError(ValidationError):
    pass


class RootError(ValidationError):
    """Vector is not a (positive) real root, or a word is not reduced."""


class PreconditionError(ShardForgeError):
    """An operation was applied outside its domain of definition."""

    exit_code = 3


class OracleRangeError(ShardForgeError):
    """Brute-force oracle refused: module too large to enumerate."""

    exit_code = 4
