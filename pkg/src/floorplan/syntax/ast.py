"""Surface syntax tree for layout specifications.

Nodes are frozen dataclasses. Source positions never take part in
equality, so a re-parsed pretty-print compares equal to the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from ..diagnostics import NOPOS, Pos


def _pos() -> Pos:
    return field(default=NOPOS, compare=False, repr=False)


# --- size arithmetic -------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    binary: bool = False
    pos: Pos = _pos()


@dataclass(frozen=True)
class LitOp:
    op: str  # + - * / ^
    left: "Lit"
    right: "Lit"
    pos: Pos = _pos()


Lit = Num | LitOp


@dataclass(frozen=True)
class Scaled:
    """`<lit-arith>? <unit>`; a missing factor means one."""

    unit: str
    factor: Optional[Lit] = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class SizeOp:
    op: str  # + -
    left: "SizeArith"
    right: "SizeArith"
    pos: Pos = _pos()


SizeArith = Scaled | SizeOp


# --- demarcations ----------------------------------------------------------

@dataclass(frozen=True)
class Enum:
    flags: tuple[str, ...]
    pos: Pos = _pos()


@dataclass(frozen=True)
class BitsField:
    name: str
    size: SizeArith
    pos: Pos = _pos()


@dataclass(frozen=True)
class Bits:
    fields: tuple[BitsField, ...]
    pos: Pos = _pos()


@dataclass(frozen=True)
class Union:
    alts: tuple["Demarc", ...]
    pos: Pos = _pos()


@dataclass(frozen=True)
class Seq:
    items: tuple["Demarc", ...]
    pos: Pos = _pos()


@dataclass(frozen=True)
class Ptr:
    target: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class Size:
    expr: SizeArith
    pos: Pos = _pos()


@dataclass(frozen=True)
class Macro:
    name: str
    args: tuple[int | str, ...] = ()
    pos: Pos = _pos()


@dataclass(frozen=True)
class Repeat:
    """Repetition prefix: `#` (fresh count), a formal-id, or a literal
    count (literals only arise from macro substitution)."""

    count: str | int
    body: "DemarcVal"
    pos: Pos = _pos()

    @property
    def is_fresh(self) -> bool:
        return self.count == "#"


@dataclass(frozen=True)
class LayerDecl:
    name: str
    formals: tuple[str, ...] = ()
    magnitude: Optional[SizeArith] = None
    alignment: Optional[SizeArith] = None
    contains: tuple[str, ...] = ()
    body: "DemarcVal" = None  # type: ignore[assignment]
    pos: Pos = _pos()
    # set by macro expansion: the top-level declaration this copy came from
    origin: Optional[str] = field(default=None, compare=False)


DemarcVal = Enum | Bits | Union | Seq | Ptr | Size | Macro | Repeat | LayerDecl


@dataclass(frozen=True)
class Field:
    name: str
    value: DemarcVal
    pos: Pos = _pos()


Demarc = Field | DemarcVal


@dataclass(frozen=True)
class SpecAst:
    layers: tuple[LayerDecl, ...] = ()

    def layer(self, name: str) -> LayerDecl:
        for decl in self.layers:
            if decl.name == name:
                return decl
        raise KeyError(name)


def children(node) -> tuple:
    """Immediate demarcation children of *node* (no size arithmetic)."""
    if isinstance(node, Field):
        return (node.value,)
    if isinstance(node, Union):
        return node.alts
    if isinstance(node, Seq):
        return node.items
    if isinstance(node, Repeat):
        return (node.body,)
    if isinstance(node, LayerDecl):
        return (node.body,)
    return ()


def walk(node) -> Iterator:
    """Pre-order traversal over demarcation nodes."""
    stack = [node]
    while stack:
        cur = stack.pop()
        yield cur
        stack.extend(reversed(children(cur)))


def iter_layers(spec: SpecAst) -> Iterator[LayerDecl]:
    """Every layer declaration, top-level and nested, in source order."""
    for decl in spec.layers:
        for node in walk(decl):
            if isinstance(node, LayerDecl):
                yield node
