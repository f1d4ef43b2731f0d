"""Rust rendering of a GeneratedInterface."""

from __future__ import annotations

from typing import Optional

from .derive import UINT_TYPES, check_word_width
from .ir import Expr, GeneratedInterface, InterfaceFn, Stmt

HEADER = """\
// Generated by floorplan. Do not edit.
#![allow(dead_code, non_camel_case_types, non_snake_case, non_upper_case_globals, unused_parens)]
"""

PRELUDE = """\
pub(crate) trait Address: Copy + Sized {
    fn from_usize(v: usize) -> Self;
    fn as_usize(self) -> usize;
    fn plus<T: Address>(self, bytes: usize) -> T { T::from_usize(self.as_usize() + bytes) }
    fn sub<T: Address>(self, bytes: usize) -> T { T::from_usize(self.as_usize() - bytes) }
    fn load<V: Copy>(self) -> V { unsafe { core::ptr::read_unaligned(self.as_usize() as *const V) } }
    fn store<V: Copy>(self, val: V) { unsafe { core::ptr::write_unaligned(self.as_usize() as *mut V, val) } }
}

macro_rules! deriveAddr {
    ($t:ident, $align:expr) => {
        impl Address for $t {
            #[inline(always)]
            fn from_usize(v: usize) -> Self {
                debug_assert!(v % ($align) == 0);
                $t(v)
            }
            #[inline(always)]
            fn as_usize(self) -> usize { self.0 }
        }
    };
}
"""

BINOPS = {"add": "+", "sub": "-", "mul": "*", "div": "/", "rem": "%", "shl": "<<",
          "shr": ">>", "and": "&", "or": "|", "eq": "==", "ne": "!=", "ge": ">=", "gt": ">",
          "lt": "<", "le": "<="}


class _Fn:
    def __init__(self, owner: str):
        self.owner = owner

    def ty(self, name: Optional[str]) -> str:
        return "Self" if name == self.owner else str(name)

    def expr(self, e: Expr) -> str:
        op = e.op
        if op == "self":
            return "self"
        if op == "var":
            return str(e.value)
        if op == "lit":
            if e.fmt == "bin":
                width = int(e.ty[1:]) if e.ty in UINT_TYPES.values() else 8
                return f"0b{e.value:0{width}b}"
            return str(e.value)
        if op == "const":
            if e.ty is None:
                return str(e.value)
            return f"{self.ty(e.ty)}::{e.value}"
        if op in BINOPS:
            a, b = e.args
            return f"({self.expr(a)} {BINOPS[op]} {self.expr(b)})"
        if op == "not":
            return f"(!{self.expr(e.args[0])})"
        if op == "plus":
            return f"{self.expr(e.args[0])}.plus::<{self.ty(e.ty)}>({self.expr(e.args[1])})"
        if op == "minus":
            return f"{self.expr(e.args[0])}.sub::<{self.ty(e.ty)}>({self.expr(e.args[1])})"
        if op == "addr":
            return f"{self.expr(e.args[0])}.as_usize()"
        if op == "wrap":
            return f"{self.ty(e.ty)}::from_usize({self.expr(e.args[0])})"
        if op == "load":
            return f"{self.expr(e.args[0])}.load::<{self.ty(e.ty)}>()"
        if op == "field":
            return f"self.{e.value}"
        if op == "tuple":
            return f"({self.expr(e.args[0])}, {self.expr(e.args[1])})"
        if op == "cast":
            return f"({self.expr(e.args[0])} as {e.ty})"
        raise ValueError(f"unknown op {op}")

    def stmt(self, s: Stmt) -> str:
        if s.op == "let":
            return f"let {s.name} = {self.expr(s.args[0])};"
        if s.op == "assert":
            return f"debug_assert!({self.expr(s.args[0])});"
        if s.op == "store":
            return f"{self.expr(s.args[0])}.store::<{self.ty(s.ty)}>({self.expr(s.args[1])});"
        if s.op == "return":
            return self.expr(s.args[0])
        raise ValueError(f"unknown statement {s.op}")


def render_fn(f: InterfaceFn, indent: str = "    ") -> list[str]:
    r = _Fn(f.owner)
    params = (["self"] if f.receiver else []) + [f"{p.name}: {r.ty(p.ty)}" for p in f.params]
    ret = f" -> {_ret_type(r, f.returns)}" if f.returns else ""
    lines = [f"{indent}pub fn {f.name}({', '.join(params)}){ret} {{"]
    lines += [f"{indent}    {r.stmt(s)}" for s in f.body]
    lines.append(f"{indent}}}")
    return lines


def _ret_type(r: _Fn, returns: str) -> str:
    if returns.startswith("("):
        parts = [r.ty(p.strip()) for p in returns.strip("()").split(",")]
        return f"({', '.join(parts)})"
    return r.ty(returns)


def _const_line(c, indent: str = "") -> str:
    if c.fmt == "bin":
        width = int(c.ty[1:]) if c.ty in UINT_TYPES.values() else 8
        value = f"0b{c.value:0{width}b}"
    else:
        value = str(c.value)
    return f"{indent}pub const {c.name}: {c.ty} = {value};"


def render_rust(gi: GeneratedInterface) -> str:
    check_word_width(gi)
    out = [HEADER, PRELUDE]
    globals_ = [c for c in gi.constants if c.owner is None]
    if globals_:
        out += [_const_line(c) for c in globals_]
        out.append("")
    for t in gi.address_types:
        align = f"1 << {t.align_const}" if t.align_log2 else t.align_const
        out += ["#[repr(transparent)]",
                "#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]",
                f"pub struct {t.name}(usize);",
                f"deriveAddr!({t.name}, {align});"]
        consts = [c for c in gi.constants if c.owner == t.name]
        fns = [f for f in gi.functions if f.owner == t.name]
        if consts or fns:
            out.append(f"impl {t.name} {{")
            out += [_const_line(c, "    ") for c in consts]
            for f in fns:
                out += render_fn(f)
            out.append("}")
        out.append("")
    for rec in gi.records:
        if rec.doc:
            out.append(f"/// {rec.doc}")
        out += ["#[derive(Copy, Clone, Debug)]", f"pub struct {rec.name} {{"]
        out += [f"    pub {fld.name}: {fld.ty}," for fld in rec.fields]
        out.append("}")
        fns = [f for f in gi.functions if f.owner == rec.name]
        if fns:
            out.append(f"impl {rec.name} {{")
            for f in fns:
                out += render_fn(f)
            out.append("}")
        out.append("")
    return "\n".join(out).rstrip("\n") + "\n"
