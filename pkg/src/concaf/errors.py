"""Exception types shared across the package."""


class ConcafError(Exception):
    """Base class for all errors raised by this library."""


class StructuralError(ConcafError):
    """A framework, formula, or argument reference violates a model invariant."""


class ParseError(ConcafError):
    """Malformed input text; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CapacityError(ConcafError):
    """Input exceeds a configured enumeration or search cap."""


class TautologyError(ConcafError):
    """A clause contains a variable in both polarities; carries the clause index."""

    def __init__(self, clause_index: int):
        super().__init__(f"clause {clause_index} is tautological")
        self.clause_index = clause_index


class WitnessVerificationError(ConcafError):
    """A decoded witness failed re-verification; this signals an encoding bug."""
