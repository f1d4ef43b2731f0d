"""Consistency check for union branches that can never be part of a layout."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..arith import DEFAULT_ARCH, ArchConfig, eval_bytes
from ..core import Compiler, Exists, FreshSupply, _user_formals, free_formals
from ..diagnostics import Diagnostic, DiagnosticSink
from ..syntax import ast as A
from ..syntax.printer import format_demarc
from .feasibility import AnalysisLimit, UsageFeasibility
from .info import min_size

DEFAULT_CAP = 1 << 16


@dataclass
class _Marking(Compiler):
    """Compiler that remembers every core node built for one AST node."""

    target: int = 0
    marked: list = field(default_factory=list)

    def demarc(self, d):
        out = super().demarc(d)
        if id(d) == self.target:
            self.marked.append(out)
        return out


def _unions_by_owner(spec: A.SpecAst):
    """Yield (union, nearest enclosing decl, nearest decl with a magnitude
    or None) for every union node."""
    def visit(node, decls: list):
        if isinstance(node, A.LayerDecl):
            decls = decls + [node]
        if isinstance(node, A.Union):
            sized = next((d for d in reversed(decls) if d.magnitude is not None), None)
            yield node, decls[-1], sized
        for child in A.children(node):
            yield from visit(child, decls)

    for decl in spec.layers:
        yield from visit(decl, [])


def _branch_label(alt) -> str:
    if isinstance(alt, A.Field):
        return alt.name
    if isinstance(alt, A.LayerDecl):
        return alt.name
    return " ".join(format_demarc(alt).split())


def check_dead_branches(spec: A.SpecAst, arch: ArchConfig = DEFAULT_ARCH,
                        cap: int = DEFAULT_CAP,
                        sink: Optional[DiagnosticSink] = None) -> list[Diagnostic]:
    """Warn about each union branch that no layout of its nearest sized layer
    uses at the declared magnitude, for every aligned start address.

    Returns the warnings; skipped unions are reported as notes to *sink*.
    """
    sink = sink if sink is not None else DiagnosticSink()
    warnings: list[Diagnostic] = []
    for union, owner, sized in _unions_by_owner(spec):
        if sized is None:
            sink.note(f"union in {owner.name} not checked: no enclosing layer declares a "
                      "magnitude", union.pos)
            continue
        magnitude = eval_bytes(sized.magnitude, arch)
        align = eval_bytes(sized.alignment, arch) if sized.alignment is not None else 1
        for alt in union.alts:
            compiler = _Marking(arch, fresh=FreshSupply(_user_formals(sized)), target=id(alt))
            expr = compiler.layer(sized)
            for f in sorted(free_formals(expr), reverse=True):
                expr = Exists(f, expr)
            dead = _is_dead(expr, compiler.marked, magnitude, align, cap)
            if dead is None:
                sink.note(f"union branch {_branch_label(alt)!r} in {sized.name} not checked: "
                          f"magnitude {magnitude} exceeds the analysis budget {cap}", alt.pos)
            elif dead:
                diag = Diagnostic(
                    "warning",
                    f"union branch {_branch_label(alt)!r} is dead: {sized.name} has no "
                    f"layout of its {magnitude}-byte magnitude using it", _pos_of(alt, union))
                warnings.append(diag)
                sink.items.append(diag)
    return warnings


def _pos_of(alt, union):
    pos = getattr(alt, "pos", None)
    return pos if pos is not None and pos.line else union.pos


def _is_dead(expr, marked: list, magnitude: int, align: int, cap: int) -> Optional[bool]:
    if min_size(expr) > magnitude or all(min_size(m) > magnitude for m in marked):
        return True
    if magnitude > cap:
        return None
    feas = UsageFeasibility(magnitude, marked)
    try:
        modulus = feas.info.modulus(expr)
        for r in range(0, modulus, align):
            if feas.used(expr, r, {})[magnitude]:
                return False
    except AnalysisLimit:
        return None
    return True
