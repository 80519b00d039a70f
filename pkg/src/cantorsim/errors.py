"""Exception types shared across the package; the CLI maps them to exit codes."""

from __future__ import annotations


class CantorsimError(Exception):
    """Base class for all package errors."""


class ParseError(CantorsimError):
    """Malformed input text; carries the source name and line number."""

    def __init__(self, message: str, *, source: str = "<input>", line: int | None = None):
        self.source = source
        self.line = line
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")


class PrefixFreeViolation(ParseError):
    """A machine code duplicates or is a prefix of another code."""


class KraftViolation(ParseError):
    """Machine code lengths overrun the unit halting-mass budget."""


class DomainError(CantorsimError):
    """A value lies outside an operation's mathematical domain."""


class RangeError(CantorsimError):
    """A stage or depth request beyond the available horizon."""


class InputError(CantorsimError):
    """Structurally invalid input (non-monotone approximation, bad item kind, ...)."""


class PreconditionError(CantorsimError):
    """A construction's hypotheses do not hold for the given inputs."""


class CapacityError(CantorsimError):
    """A construction ran out of output slots before the horizon."""


class ContractViolationError(CantorsimError):
    """A caller-supplied generator or picker failed to honour its contract."""
