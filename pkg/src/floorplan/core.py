"""Core calculus and the translation from surface syntax.

Text form (stable, used by golden tests)::

    (prim N)  (con N E)  (align A E)  (concat E E)  (union E E)
    (named "label" E)  (exists f E)  (repeat f E)  (repeat 16 E)

Labels are JSON-quoted. A repeat count is either a formal name or, after
macro substitution of a literal argument, a natural number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .arith import DEFAULT_ARCH, ArchConfig, bits_to_bytes, eval_bits, eval_bytes
from .diagnostics import ArithError
from .syntax import ast as A


@dataclass(frozen=True)
class Prim:
    n: int


@dataclass(frozen=True)
class Con:
    n: int
    body: "CoreExpr"


@dataclass(frozen=True)
class Aligned:
    body: "CoreExpr"
    align: int


@dataclass(frozen=True)
class Concat:
    left: "CoreExpr"
    right: "CoreExpr"


@dataclass(frozen=True)
class Union:
    left: "CoreExpr"
    right: "CoreExpr"


@dataclass(frozen=True)
class Named:
    label: str
    body: "CoreExpr"


@dataclass(frozen=True)
class Exists:
    formal: str
    body: "CoreExpr"


@dataclass(frozen=True)
class Repeat:
    count: str | int
    body: "CoreExpr"


CoreExpr = Prim | Con | Aligned | Concat | Union | Named | Exists | Repeat


def core_children(e: CoreExpr) -> tuple:
    if isinstance(e, (Concat, Union)):
        return (e.left, e.right)
    if isinstance(e, Prim):
        return ()
    return (e.body,)


def core_walk(e: CoreExpr) -> Iterator[CoreExpr]:
    stack = [e]
    while stack:
        cur = stack.pop()
        yield cur
        stack.extend(reversed(core_children(cur)))


def free_formals(e: CoreExpr) -> frozenset:
    if isinstance(e, Repeat):
        inner = free_formals(e.body)
        return inner | {e.count} if isinstance(e.count, str) else inner
    if isinstance(e, Exists):
        return free_formals(e.body) - {e.formal}
    out = frozenset()
    for child in core_children(e):
        out |= free_formals(child)
    return out


def to_text(e: CoreExpr) -> str:
    """Canonical one-line s-expression."""
    if isinstance(e, Prim):
        return f"(prim {e.n})"
    if isinstance(e, Con):
        return f"(con {e.n} {to_text(e.body)})"
    if isinstance(e, Aligned):
        return f"(align {e.align} {to_text(e.body)})"
    if isinstance(e, Concat):
        return f"(concat {to_text(e.left)} {to_text(e.right)})"
    if isinstance(e, Union):
        return f"(union {to_text(e.left)} {to_text(e.right)})"
    if isinstance(e, Named):
        return f"(named {json.dumps(e.label)} {to_text(e.body)})"
    if isinstance(e, Exists):
        return f"(exists {e.formal} {to_text(e.body)})"
    return f"(repeat {e.count} {to_text(e.body)})"


# --- compilation -------------------------------------------------------------

class FreshSupply:
    """Generates f0, f1, ... skipping any name reserved by the user."""

    def __init__(self, reserved=()):
        self.reserved = frozenset(reserved)
        self.next = 0

    def __call__(self) -> str:
        while True:
            name = f"f{self.next}"
            self.next += 1
            if name not in self.reserved:
                return name


def ptr_label(target: str) -> str:
    return f"{target} ptr"


def enum_bytes(nflags: int) -> int:
    """ceil(log2(nflags) / 8) computed exactly over integers."""
    return bits_to_bytes((nflags - 1).bit_length())


def bits_total(bits: A.Bits, arch: ArchConfig) -> int:
    return sum(eval_bits(f.size, arch) for f in bits.fields)


@dataclass
class Compiler:
    """One compilation context. ``tag_pointers`` wraps each pointer in a
    node labelled with its pointee so that unions of a pointer and a
    plain word stay distinguishable; ``overrides`` substitutes AST nodes
    (keyed by ``id``) before they are compiled."""

    arch: ArchConfig = DEFAULT_ARCH
    tag_pointers: bool = True
    overrides: dict = field(default_factory=dict)
    fresh: FreshSupply = field(default_factory=FreshSupply)

    def layer(self, decl: A.LayerDecl) -> CoreExpr:
        e = self.demarc(decl.body)
        if decl.alignment is not None:
            align = eval_bytes(decl.alignment, self.arch)
            if align < 1:
                raise ArithError(f"alignment of {decl.name} must be at least 1 byte",
                                 decl.alignment.pos)
            e = Aligned(e, align)
        if decl.magnitude is not None:
            e = Con(eval_bytes(decl.magnitude, self.arch), e)
        for formal in reversed(decl.formals):
            e = Exists(formal, e)
        return Named(decl.name, e)

    def demarc(self, d) -> CoreExpr:
        d = self.overrides.get(id(d), d)
        if isinstance(d, A.LayerDecl):
            return self.layer(d)
        if isinstance(d, A.Repeat):
            if d.is_fresh:
                f = self.fresh()
                return Exists(f, Repeat(f, self.demarc(d.body)))
            return Repeat(d.count, self.demarc(d.body))
        if isinstance(d, A.Seq):
            return _chain(Concat, [self.demarc(i) for i in d.items])
        if isinstance(d, A.Union):
            return _chain(Union, [self.demarc(i) for i in d.alts])
        if isinstance(d, A.Field):
            return Named(d.name, self.demarc(d.value))
        if isinstance(d, A.Ptr):
            prim = Prim(self.arch.word_bytes)
            return Named(ptr_label(d.target), prim) if self.tag_pointers else prim
        if isinstance(d, A.Enum):
            return Prim(enum_bytes(len(d.flags)))
        if isinstance(d, A.Bits):
            return Prim(bits_to_bytes(bits_total(d, self.arch)))
        if isinstance(d, A.Size):
            return Prim(eval_bytes(d.expr, self.arch))
        if isinstance(d, A.Macro):
            raise TypeError(f"macro {d.name} must be expanded before compilation")
        raise TypeError(f"cannot compile {type(d).__name__}")


def _chain(cls, parts: list) -> CoreExpr:
    out = parts[0]
    for part in parts[1:]:
        out = cls(out, part)
    return out


def _user_formals(node) -> set:
    return {n.count for n in A.walk(node) if isinstance(n, A.Repeat)
            and isinstance(n.count, str)} | {
        f for n in A.walk(node) if isinstance(n, A.LayerDecl) for f in n.formals}


def compile_layer(decl: A.LayerDecl, arch: ArchConfig = DEFAULT_ARCH, *,
                  tag_pointers: bool = True, overrides: Optional[dict] = None) -> CoreExpr:
    """Translate one macro-free, scope-checked declaration."""
    compiler = Compiler(arch, tag_pointers, overrides or {}, FreshSupply(_user_formals(decl)))
    return compiler.layer(decl)


def compile_demarc(d, fresh: Optional[FreshSupply] = None, arch: ArchConfig = DEFAULT_ARCH,
                   *, tag_pointers: bool = True) -> CoreExpr:
    fresh = fresh if fresh is not None else FreshSupply(_user_formals(d))
    return Compiler(arch, tag_pointers, {}, fresh).demarc(d)


@dataclass
class CompiledSpec:
    layers: dict[str, CoreExpr]
    # side tables that the core calculus drops
    contains: dict[str, tuple[str, ...]]
    pointees: list[tuple[str, str]]  # (enclosing field or layer, target)


def compile_spec(spec: A.SpecAst, arch: ArchConfig = DEFAULT_ARCH, *,
                 tag_pointers: bool = True) -> CompiledSpec:
    layers = {d.name: compile_layer(d, arch, tag_pointers=tag_pointers) for d in spec.layers}
    contains = {d.name: d.contains for d in A.iter_layers(spec) if d.contains}
    pointees = []

    def visit(node, owner: str) -> None:
        if isinstance(node, (A.LayerDecl, A.Field)):
            owner = node.name
        if isinstance(node, A.Ptr):
            pointees.append((owner, node.target))
        for child in A.children(node):
            visit(child, owner)

    for decl in spec.layers:
        visit(decl, decl.name)
    return CompiledSpec(layers, contains, pointees)
