"""Compiler for a memory layout description language.

Layouts are parsed, macro-expanded, compiled to a small core calculus with
an executable semantics, and turned into typed address-manipulation code.
"""

from .arith import DEFAULT_ARCH, ArchConfig
from .diagnostics import Diagnostic, DiagnosticSink, FloorplanError
from .pipeline import build, check, load
from .syntax import parse

__version__ = "1.0.0"

__all__ = ["ArchConfig", "DEFAULT_ARCH", "Diagnostic", "DiagnosticSink", "FloorplanError",
           "build", "check", "load", "parse"]
