"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CertError(ValueError):
    """Base class for all library errors."""


class AdmissibilityError(CertError):
    """The base field does not support the requested modulus."""


class DomainError(CertError):
    """An argument lies outside the domain of the operation (e.g. a zero element)."""


class ShapeError(CertError):
    """Operands live in incompatible ambient spaces."""


class PreconditionError(CertError):
    """A documented precondition of the operation is violated."""


class HypothesisError(CertError):
    """A mathematical hypothesis required by a certificate builder fails."""


class UnsupportedError(CertError):
    """The base field kind is outside what the decision procedures cover."""


class ParseError(CertError):
    """Malformed input text; carries the 1-based line and column of the fault."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        before = text[:pos]
        self.line = before.count("\n") + 1
        self.column = pos - (before.rfind("\n") + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")

    def diagnostic(self) -> str:
        """Multi-line message with the offending line and a caret under the fault."""
        lines = self.text.split("\n")
        src = lines[self.line - 1] if lines and self.line - 1 < len(lines) else ""
        return f"{self}\n  {src}\n  {' ' * (self.column - 1)}^"


class SingularModelError(PreconditionError):
    """The real cubic has a repeated root, so the smooth-slice analysis does not apply."""
