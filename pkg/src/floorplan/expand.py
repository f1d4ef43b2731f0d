"""Macro expansion and scope checking.

Macros are top-level layer declarations referenced by name. Expansion is a
purely syntactic pre-processing pass: each reference is replaced by a copy
of the referenced declaration with the supplied arguments substituted for
its leading formals. Unsupplied formals are hoisted onto the nearest
enclosing declaration at the reference site.
"""

from __future__ import annotations

import copy
import itertools
from dataclasses import dataclass, field, replace
from typing import Optional

from .diagnostics import DiagnosticSink, ExpandError, Pos, ScopeError
from .syntax import ast as A

FRESH_SEP = "__"


@dataclass
class MacroTable:
    decls: dict[str, A.LayerDecl]
    refs: dict[str, list[str]]

    @classmethod
    def build(cls, spec: A.SpecAst) -> "MacroTable":
        decls: dict[str, A.LayerDecl] = {}
        for decl in spec.layers:
            if decl.name in decls:
                raise ExpandError(f"duplicate top-level layer {decl.name!r}", decl.pos)
            decls[decl.name] = decl
        refs: dict[str, list[str]] = {}
        for decl in spec.layers:
            names = []
            for node in A.walk(decl.body):
                if isinstance(node, A.Macro):
                    if node.name not in decls:
                        raise ExpandError(f"unknown layer {node.name!r}", node.pos)
                    if node.name not in names:
                        names.append(node.name)
            refs[decl.name] = names
        table = cls(decls, refs)
        table.check_acyclic()
        return table

    def check_acyclic(self) -> None:
        state: dict[str, int] = {}  # 1 = on stack, 2 = done
        path: list[str] = []

        def visit(name: str) -> None:
            state[name] = 1
            path.append(name)
            for dep in self.refs[name]:
                if state.get(dep) == 1:
                    cycle = path[path.index(dep):] + [dep]
                    raise ExpandError("recursive macro cycle: " + " -> ".join(cycle),
                                      self.decls[name].pos)
                if dep not in state:
                    visit(dep)
            path.pop()
            state[name] = 2

        for name in self.decls:
            if name not in state:
                visit(name)


class _Expander:
    def __init__(self, table: MacroTable, sink: DiagnosticSink):
        self.table = table
        self.sink = sink
        self.counter = itertools.count(1)

    def fresh(self, base: str) -> str:
        return f"{base}{FRESH_SEP}{next(self.counter)}"

    # scope: formal names bound by all enclosing declarations
    # hoist: formals to append to the nearest enclosing declaration
    def decl(self, decl: A.LayerDecl, scope: frozenset) -> A.LayerDecl:
        hoist: list[str] = []
        inner_scope = scope | set(decl.formals)
        body = self.val(decl.body, inner_scope, hoist, decl.formals)
        return replace(decl, formals=decl.formals + tuple(hoist), body=body)

    def val(self, node, scope, hoist, own):
        if isinstance(node, A.LayerDecl):
            return self.decl(node, scope)
        if isinstance(node, A.Macro):
            return self.macro(node, scope, hoist, own)
        if isinstance(node, A.Field):
            return replace(node, value=self.val(node.value, scope, hoist, own))
        if isinstance(node, A.Repeat):
            return replace(node, body=self.val(node.body, scope, hoist, own))
        if isinstance(node, A.Seq):
            return replace(node, items=tuple(self.val(i, scope, hoist, own) for i in node.items))
        if isinstance(node, A.Union):
            return replace(node, alts=tuple(self.val(i, scope, hoist, own) for i in node.alts))
        return node

    def macro(self, node: A.Macro, scope, hoist, own) -> A.LayerDecl:
        target = self.table.decls[node.name]
        if len(node.args) > len(target.formals):
            raise ExpandError(f"{node.name} takes {len(target.formals)} argument(s), "
                              f"got {len(node.args)}", node.pos)
        mapping: dict[str, int | str] = dict(zip(target.formals, node.args))
        taken = set(scope) | set(own) | set(hoist)
        for formal in target.formals[len(node.args):]:
            name = formal if formal not in taken else self.fresh(formal)
            taken.add(name)
            hoist.append(name)
            if name != formal:
                mapping[formal] = name
        mono = node.name
        if node.args:
            mono = node.name + "_" + "_".join(str(a) for a in node.args)
            if mono in self.table.decls:
                raise ExpandError(f"expansion name {mono!r} collides with a declared layer",
                                  node.pos)
        body = self.subst(copy.deepcopy(target.body), mapping, node)
        copy_decl = A.LayerDecl(mono, (), target.magnitude, target.alignment, target.contains,
                                body, node.pos, origin=target.name)
        return self.decl(copy_decl, frozenset(scope | set(hoist)))

    def subst(self, node, mapping: dict, site: A.Macro):
        if not mapping:
            return node
        if isinstance(node, A.Repeat):
            count = node.count
            if isinstance(count, str) and count in mapping:
                count = mapping[count]
            return replace(node, count=count, body=self.subst(node.body, mapping, site))
        if isinstance(node, A.Macro):
            args = []
            for arg in node.args:
                if isinstance(arg, str) and arg in mapping:
                    self.sink.warning(f"macro argument {arg!r} of {node.name} resolved "
                                      f"through {site.name} to {mapping[arg]!r}", node.pos)
                    arg = mapping[arg]
                args.append(arg)
            return replace(node, args=tuple(args))
        if isinstance(node, A.LayerDecl):
            inner = {k: v for k, v in mapping.items() if k not in node.formals}
            captured = {v for v in inner.values() if isinstance(v, str) and v in node.formals}
            if captured:
                renames = {v: self.fresh(v) for v in sorted(captured)}
                node = replace(node, formals=tuple(renames.get(f, f) for f in node.formals),
                               body=self.subst(node.body, renames, site))
            return replace(node, body=self.subst(node.body, inner, site))
        if isinstance(node, A.Field):
            return replace(node, value=self.subst(node.value, mapping, site))
        if isinstance(node, A.Seq):
            return replace(node, items=tuple(self.subst(i, mapping, site) for i in node.items))
        if isinstance(node, A.Union):
            return replace(node, alts=tuple(self.subst(i, mapping, site) for i in node.alts))
        return node


def expand_macros(spec: A.SpecAst, sink: Optional[DiagnosticSink] = None) -> A.SpecAst:
    """Replace every macro reference by a substituted copy of its target.

    Raises ExpandError on unknown layers, too many arguments, recursion,
    or a monomorphized name that collides with a declared layer.
    """
    sink = sink if sink is not None else DiagnosticSink()
    table = MacroTable.build(spec)
    expander = _Expander(table, sink)
    return A.SpecAst(tuple(expander.decl(d, frozenset()) for d in spec.layers))


# --- scope checking ----------------------------------------------------------

@dataclass(frozen=True)
class Resolution:
    formal: str
    use_pos: Pos
    binder: str
    binder_pos: Pos


@dataclass
class ScopeReport:
    resolutions: list[Resolution] = field(default_factory=list)
    unresolved: list[ScopeError] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unresolved

    def raise_for_errors(self) -> None:
        if self.unresolved:
            first = self.unresolved[0]
            first.errors = list(self.unresolved)  # type: ignore[attr-defined]
            raise first


def check_scopes(spec: A.SpecAst) -> ScopeReport:
    """Resolve every formal use to its nearest enclosing binder and every
    pointer target to a declared layer or field."""
    report = ScopeReport()
    targets = set()
    for decl in spec.layers:
        for node in A.walk(decl):
            if isinstance(node, (A.LayerDecl, A.Field)):
                targets.add(node.name)

    def resolve(name: str, pos: Pos, binders: list) -> None:
        for decl in reversed(binders):
            if name in decl.formals:
                report.resolutions.append(Resolution(name, pos, decl.name, decl.pos))
                return
        report.unresolved.append(ScopeError(f"unbound formal {name!r}", pos))

    def visit(node, binders: list) -> None:
        if isinstance(node, A.LayerDecl):
            binders = binders + [node]
        elif isinstance(node, A.Repeat) and isinstance(node.count, str) and not node.is_fresh:
            resolve(node.count, node.pos, binders)
        elif isinstance(node, A.Macro):
            for arg in node.args:
                if isinstance(arg, str):
                    resolve(arg, node.pos, binders)
        elif isinstance(node, A.Ptr) and node.target not in targets:
            report.unresolved.append(ScopeError(f"unknown pointer target {node.target!r}",
                                                node.pos))
        for child in A.children(node):
            visit(child, binders)

    for decl in spec.layers:
        visit(decl, [])
    return report
