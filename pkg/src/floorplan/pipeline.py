"""The compiler pipeline: parse, expand, scope-check, compile, derive, render."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arith import DEFAULT_ARCH, ArchConfig
from .codegen import GeneratedInterface, derive_interface, dump_interface, render_rust
from .core import CompiledSpec, compile_spec
from .diagnostics import DiagnosticSink
from .expand import check_scopes, expand_macros
from .model.deadcode import DEFAULT_CAP, check_dead_branches
from .syntax import ast as A
from .syntax import parse


@dataclass
class Frontend:
    source: A.SpecAst
    expanded: A.SpecAst
    sink: DiagnosticSink = field(default_factory=DiagnosticSink)


def load(text: str, sink: Optional[DiagnosticSink] = None) -> Frontend:
    """Parse, expand and scope-check. Raises the first FloorplanError."""
    sink = sink if sink is not None else DiagnosticSink()
    spec = parse(text)
    expanded = expand_macros(spec, sink)
    check_scopes(expanded).raise_for_errors()
    return Frontend(spec, expanded, sink)


@dataclass
class Build:
    frontend: Frontend
    compiled: CompiledSpec
    interface: GeneratedInterface
    rust: str
    dump: str

    @property
    def diagnostics(self) -> list:
        return self.frontend.sink.items


def build(text: str, arch: ArchConfig = DEFAULT_ARCH) -> Build:
    fe = load(text)
    compiled = compile_spec(fe.expanded, arch)
    gi = derive_interface(fe.expanded, arch, fe.sink)
    return Build(fe, compiled, gi, render_rust(gi), dump_interface(gi))


def check(text: str, arch: ArchConfig = DEFAULT_ARCH, cap: int = DEFAULT_CAP) -> Frontend:
    """Front end plus compilation and the dead-branch analysis; warnings
    land in the returned sink."""
    fe = load(text)
    compile_spec(fe.expanded, arch)
    check_dead_branches(fe.expanded, arch, cap, fe.sink)
    return fe
