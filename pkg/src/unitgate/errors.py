"""Shared exception types."""


class HypothesisError(ValueError):
    """A stated precondition of a lemma or criterion fails for the input."""


class LemmaContradiction(RuntimeError):
    """An internally re-verified congruence failed.  This signals either an
    implementation bug or a non-maximal presentation slipping past a
    precondition, never a legitimate result."""


class InputError(ValueError):
    """Malformed user input at the CLI boundary."""
