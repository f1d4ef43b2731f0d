"""Source positions, diagnostics and the exception hierarchy shared by all stages."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Pos:
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


NOPOS = Pos(0, 0)


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning" | "note"
    message: str
    pos: Pos = NOPOS

    def format(self, filename: str = "<input>") -> str:
        return f"{filename}:{self.pos.line}:{self.pos.col}: {self.severity}: {self.message}"


class FloorplanError(Exception):
    """Base class for every user-facing compile error."""

    def __init__(self, message: str, pos: Optional[Pos] = None):
        super().__init__(message)
        self.message = message
        self.pos = pos or NOPOS

    def diagnostic(self) -> Diagnostic:
        return Diagnostic("error", self.message, self.pos)


class LexError(FloorplanError):
    pass


class ParseError(FloorplanError):
    def __init__(self, message: str, pos: Optional[Pos] = None, expected: frozenset = frozenset()):
        if expected:
            message = f"{message}; expected one of: {', '.join(sorted(expected))}"
        super().__init__(message, pos)
        self.expected = expected


class ExpandError(FloorplanError):
    pass


class ScopeError(FloorplanError):
    pass


class ArithError(FloorplanError):
    pass


class CodegenError(FloorplanError):
    pass


@dataclass
class DiagnosticSink:
    """Collects warnings and notes emitted by passes that do not abort."""

    items: list = field(default_factory=list)

    def warning(self, message: str, pos: Pos = NOPOS) -> None:
        self.items.append(Diagnostic("warning", message, pos))

    def note(self, message: str, pos: Pos = NOPOS) -> None:
        self.items.append(Diagnostic("note", message, pos))

    @property
    def warnings(self) -> list:
        return [d for d in self.items if d.severity == "warning"]
