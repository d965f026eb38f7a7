"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so that batch scans and
the command line can report failures without parsing messages.
"""


class ToricStabError(Exception):
    code = "error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DimensionError(ToricStabError, ValueError):
    code = "dimension_mismatch"


class PolytopeError(ToricStabError, ValueError):
    """Invalid polytope data (degenerate, origin not interior, unbounded...)."""

    code = "invalid_polytope"


class NotReflexiveError(PolytopeError):
    code = "not_reflexive"


class ResourceLimitError(ToricStabError, RuntimeError):
    code = "resource_limit"


class ParseError(ToricStabError, ValueError):
    code = "parse_error"

    def __init__(self, message, code=None, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, code)
        self.line = line


class InvariantViolation(ToricStabError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""

    code = "invariant_violation"
