"""Backend-neutral model of a generated library.

Function bodies are short statement lists over a tiny expression language:

========== ==========================================================
op         meaning
========== ==========================================================
self       the receiver address
var        a parameter or let-bound name
lit        an integer literal (``fmt`` "bin" prints it in binary)
const      a named constant, optionally owned by an address type
add sub    integer arithmetic (``div`` floors); ``shl shr and or not``
mul div    are bit operations
rem
eq ne ge   comparisons producing a bool
gt lt le
plus minus address displacement by a byte count, retyped to ``ty``
addr       the numeric value of an address
wrap       an integer reinterpreted as an address of type ``ty``
load       read a value of type ``ty`` at an address
field      a record field of the receiver
tuple      a pair of values
cast       integer or bool conversion to ``ty``
========== ==========================================================

Statements: ``let`` (bind), ``assert`` (debug assertion), ``store`` (write
``args[1]`` of type ``ty`` at address ``args[0]``) and ``return``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Expr:
    op: str
    args: tuple = ()
    value: object = None
    ty: Optional[str] = None
    fmt: Optional[str] = None

    def to_json(self):
        out: dict = {"op": self.op}
        if self.args:
            out["args"] = [a.to_json() for a in self.args]
        if self.value is not None:
            out["value"] = self.value
        if self.ty is not None:
            out["ty"] = self.ty
        return out


@dataclass(frozen=True)
class Stmt:
    op: str  # let | assert | store | return
    args: tuple = ()
    name: Optional[str] = None
    ty: Optional[str] = None

    def to_json(self):
        out: dict = {"op": self.op, "args": [a.to_json() for a in self.args]}
        if self.name is not None:
            out["name"] = self.name
        if self.ty is not None:
            out["ty"] = self.ty
        return out


# expression constructors -------------------------------------------------------

SELF = Expr("self")


def var(name: str) -> Expr:
    return Expr("var", value=name)


def lit(value: int, ty: str = "usize", fmt: Optional[str] = None) -> Expr:
    return Expr("lit", value=value, ty=ty, fmt=fmt)


def const(name: str, owner: Optional[str] = None) -> Expr:
    return Expr("const", value=name, ty=owner)


def binop(op: str, a: Expr, b: Expr) -> Expr:
    return Expr(op, (a, b))


def plus(addr: Expr, nbytes: Expr, ty: str) -> Expr:
    return Expr("plus", (addr, nbytes), ty=ty)


def minus(addr: Expr, nbytes: Expr, ty: str) -> Expr:
    return Expr("minus", (addr, nbytes), ty=ty)


def load(addr: Expr, ty: str) -> Expr:
    return Expr("load", (addr,), ty=ty)


def cast(e: Expr, ty: str) -> Expr:
    return Expr("cast", (e,), ty=ty)


def addr_of(e: Expr) -> Expr:
    return Expr("addr", (e,))


def wrap(e: Expr, ty: str) -> Expr:
    return Expr("wrap", (e,), ty=ty)


def rfield(name: str) -> Expr:
    return Expr("field", value=name)


def tup(a: Expr, b: Expr) -> Expr:
    return Expr("tuple", (a, b))


def let(name: str, e: Expr) -> Stmt:
    return Stmt("let", (e,), name=name)


def check(cond: Expr, message: str) -> Stmt:
    return Stmt("assert", (cond,), name=message)


def store(addr: Expr, value: Expr, ty: str) -> Stmt:
    return Stmt("store", (addr, value), ty=ty)


def ret(e: Expr) -> Stmt:
    return Stmt("return", (e,))


# interface -----------------------------------------------------------------------

@dataclass(frozen=True)
class AddressType:
    name: str
    source: str
    kind: str  # layer | field | builtin
    alignment_bytes: int
    size_bytes: Optional[int]
    align_const: str
    align_log2: bool  # align_const holds log2 of the alignment


@dataclass(frozen=True)
class NamedConstant:
    name: str
    value: int
    ty: str = "usize"
    owner: Optional[str] = None  # address type whose impl scopes it
    fmt: Optional[str] = None  # "bin" for masks


@dataclass(frozen=True)
class Param:
    name: str
    ty: str


@dataclass(frozen=True)
class InterfaceFn:
    kind: str
    owner: str  # address type or record name whose impl holds the function
    name: str
    params: tuple[Param, ...]
    returns: Optional[str]
    body: tuple[Stmt, ...]
    receiver: bool = True  # takes self

    @property
    def debug_assertions(self) -> list[Stmt]:
        return [s for s in self.body if s.op == "assert"]


@dataclass(frozen=True)
class RecordField:
    name: str
    ty: str


@dataclass(frozen=True)
class Record:
    name: str
    fields: tuple[RecordField, ...]
    doc: str = ""


@dataclass
class GeneratedInterface:
    word_bytes: int
    page_bytes: int
    address_types: list[AddressType] = field(default_factory=list)
    constants: list[NamedConstant] = field(default_factory=list)
    records: list[Record] = field(default_factory=list)
    functions: list[InterfaceFn] = field(default_factory=list)

    def type(self, name: str) -> AddressType:
        for t in self.address_types:
            if t.name == name:
                return t
        raise KeyError(name)

    def constant(self, name: str, owner: Optional[str] = None) -> NamedConstant:
        for c in self.constants:
            if c.name == name and (owner is None or c.owner == owner):
                return c
        raise KeyError(name)

    def function(self, owner: str, name: str) -> InterfaceFn:
        for f in self.functions:
            if f.owner == owner and f.name == name:
                return f
        raise KeyError(f"{owner}::{name}")

    def functions_of(self, kind: str) -> list[InterfaceFn]:
        return [f for f in self.functions if f.kind == kind]
