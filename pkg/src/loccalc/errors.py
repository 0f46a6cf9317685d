"""Exception hierarchy shared by the whole package.

Every error carries the process exit code the CLI maps it to:
2 for usage/parse problems, 3 for violated engine preconditions,
4 for internal invariant violations (bugs, by definition).
"""


class LoccalcError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 3


class UsageError(LoccalcError):
    """Malformed command line or malformed input text."""

    exit_code = 2


class ExprSyntaxError(UsageError):
    """Positioned syntax error from the expression parser.

    `position` is the 0-based offset of the offending character,
    `expected` a set of token descriptions that would have been legal.
    """

    def __init__(self, message, position, expected=()):
        super().__init__(message)
        self.position = position
        self.expected = frozenset(expected)

    def __str__(self):
        base = super().__str__()
        if self.expected:
            opts = ", ".join(sorted(self.expected))
            return f"{base} at offset {self.position} (expected: {opts})"
        return f"{base} at offset {self.position}"


class PreconditionError(LoccalcError):
    """An operation was called with arguments outside its contract."""

    exit_code = 3


class RingMismatchError(PreconditionError):
    """Operands live in different polynomial rings."""


class NotPolynomialError(PreconditionError):
    """A rational function was asked for its polynomial part but has one."""


class NotSymmetricError(PreconditionError):
    """A polynomial expected to be symmetric is not.

    `witness` is a pair (i, j) of 1-based variable indices whose
    transposition changes the polynomial.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(LoccalcError):
    """An internal consistency check failed; this is always a bug."""

    exit_code = 4
