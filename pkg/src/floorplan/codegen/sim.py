"""Interpreter for generated function bodies over a flat little-endian byte store.

Addresses are plain integers. Debug assertions raise DebugAssertion, and
arithmetic that the generated code would trap on (underflow, reading
outside the store) raises SimulationError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .derive import UINT_TYPES
from .ir import Expr, GeneratedInterface, InterfaceFn


class SimulationError(Exception):
    pass


class DebugAssertion(SimulationError):
    pass


@dataclass
class FlatStore:
    size: int
    base: int = 0
    data: bytearray = field(init=False)

    def __post_init__(self):
        self.data = bytearray(self.size)

    def _span(self, addr: int, n: int) -> slice:
        lo = addr - self.base
        if lo < 0 or lo + n > self.size:
            raise SimulationError(f"access of {n} bytes at {addr:#x} is outside the store")
        return slice(lo, lo + n)

    def load(self, addr: int, n: int) -> int:
        return int.from_bytes(self.data[self._span(addr, n)], "little")

    def store(self, addr: int, n: int, value: int) -> None:
        self.data[self._span(addr, n)] = (value % (1 << (8 * n))).to_bytes(n, "little")


class Machine:
    def __init__(self, gi: GeneratedInterface, store: FlatStore):
        self.gi = gi
        self.store = store
        self.consts = {(c.name, c.owner): c.value for c in gi.constants}

    def width(self, ty: Optional[str]) -> int:
        """Byte width of a value type; address types are one word."""
        if ty == "bool":
            return 1
        if ty in UINT_TYPES.values():
            return int(ty[1:]) // 8
        return self.gi.word_bytes

    def call(self, fn: InterfaceFn, receiver=None, record: Optional[dict] = None, **args):
        env = dict(args)
        for s in fn.body:
            if s.op == "let":
                env[s.name] = self.eval(s.args[0], env, receiver, record, fn.owner)
            elif s.op == "assert":
                if not self.eval(s.args[0], env, receiver, record, fn.owner):
                    raise DebugAssertion(f"{fn.owner}::{fn.name}: {s.name}")
            elif s.op == "store":
                addr = self.eval(s.args[0], env, receiver, record, fn.owner)
                val = self.eval(s.args[1], env, receiver, record, fn.owner)
                self.store.store(addr, self.width(s.ty), int(val))
            elif s.op == "return":
                return self.eval(s.args[0], env, receiver, record, fn.owner)
        return None

    def eval(self, e: Expr, env: dict, receiver, record, owner):
        op = e.op
        ev = lambda x: self.eval(x, env, receiver, record, owner)  # noqa: E731
        if op == "self":
            return receiver
        if op == "var":
            return env[e.value]
        if op == "lit":
            return e.value
        if op == "const":
            return self.consts[(e.value, e.ty)]
        if op == "field":
            return record[e.value]
        if op in ("addr", "wrap"):
            return ev(e.args[0])
        if op == "tuple":
            return ev(e.args[0]), ev(e.args[1])
        if op == "load":
            return self.store.load(ev(e.args[0]), self.width(e.ty))
        if op == "cast":
            return int(ev(e.args[0])) % (1 << (8 * self.width(e.ty)))
        if op == "not":
            return ~ev(e.args[0]) % (1 << (8 * self.width(e.ty)))
        a = ev(e.args[0])
        b = ev(e.args[1])
        if op in ("plus", "add"):
            return a + b
        if op in ("minus", "sub"):
            if a < b:
                raise SimulationError(f"arithmetic underflow {a} - {b}")
            return a - b
        table = {"mul": lambda: a * b, "div": lambda: a // b, "rem": lambda: a % b,
                 "shl": lambda: a << b, "shr": lambda: a >> b, "and": lambda: a & b,
                 "or": lambda: a | b, "eq": lambda: a == b, "ne": lambda: a != b,
                 "ge": lambda: a >= b, "gt": lambda: a > b, "lt": lambda: a < b,
                 "le": lambda: a <= b}
        return table[op]()
