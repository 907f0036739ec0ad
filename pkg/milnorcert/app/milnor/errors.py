"""Exception types raised by the pipeline; all derive from ValueError or RuntimeError."""
from __future__ import annotations

from typing import Optional


class ArrangementFormatError(ValueError):
    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message)


class InvariantBreach(ValueError):
    """A matrix that should fix the all-ones vector does not."""


class CertificateMismatch(ValueError):
    """Certificate was produced for a different arrangement."""


class GenericityError(RuntimeError):
    def __init__(self, message: str, attempts: int, diagnostics: Optional[dict] = None) -> None:
        self.attempts = attempts
        self.diagnostics = diagnostics or {}
        super().__init__(f"{message} (after {attempts} attempts)")


class StabilizationError(RuntimeError):
    def __init__(self, message: str, refinements: int, centres: Optional[int] = None) -> None:
        self.refinements = refinements
        self.centres = centres
        suffix = f"after {refinements} refinements" if centres is None else f"{centres} projection centres tried"
        super().__init__(f"{message} ({suffix})")
