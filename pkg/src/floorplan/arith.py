"""Evaluation of size arithmetic to bit and byte counts.

All arithmetic is exact over Python integers. Unit factors are whole bits,
and ``/`` is floor division on unit-free literals, so every intermediate
value is an integer and no rational type is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagnostics import ArithError
from .syntax import ast as A


@dataclass(frozen=True)
class ArchConfig:
    word_bits: int = 64
    page_bits: int = 4096 * 8

    def __post_init__(self):
        if self.word_bits <= 0 or self.word_bits % 8:
            raise ValueError("word_bits must be a positive multiple of 8")
        if self.page_bits <= 0 or self.page_bits % self.word_bits:
            raise ValueError("page_bits must be a positive multiple of word_bits")

    @classmethod
    def from_bytes(cls, word_bytes: int = 8, page_bytes: int = 4096) -> "ArchConfig":
        return cls(word_bits=word_bytes * 8, page_bits=page_bytes * 8)

    @property
    def word_bytes(self) -> int:
        return self.word_bits // 8

    @property
    def page_bytes(self) -> int:
        return self.page_bits // 8

    def unit_bits(self, unit: str) -> int:
        if unit == "bits":
            return 1
        if unit == "bytes":
            return 8
        if unit == "words":
            return self.word_bits
        if unit == "pages":
            return self.page_bits
        raise ValueError(f"unknown unit {unit!r}")


DEFAULT_ARCH = ArchConfig()


def eval_lit(lit: A.Lit) -> int:
    """Unit-free literal arithmetic. May be negative."""
    if isinstance(lit, A.Num):
        return lit.value
    left, right = eval_lit(lit.left), eval_lit(lit.right)
    op = lit.op
    if op == "+":
        return left + right
    if op == "-":
        return left - right
    if op == "*":
        return left * right
    if op == "/":
        if right == 0:
            raise ArithError("division by zero", lit.pos)
        return left // right
    if right < 0:
        raise ArithError("negative exponent", lit.pos)
    return left ** right


def _bits(expr: A.SizeArith, arch: ArchConfig) -> int:
    if isinstance(expr, A.Scaled):
        factor = 1 if expr.factor is None else eval_lit(expr.factor)
        return factor * arch.unit_bits(expr.unit)
    left, right = _bits(expr.left, arch), _bits(expr.right, arch)
    return left + right if expr.op == "+" else left - right


def eval_bits(expr: A.SizeArith, arch: ArchConfig = DEFAULT_ARCH) -> int:
    """Exact size in bits. Intermediate values may go negative; the
    final result may not."""
    value = _bits(expr, arch)
    if value < 0:
        raise ArithError(f"size evaluates to a negative bit count ({value})", expr.pos)
    return value


def bits_to_bytes(bits: int) -> int:
    return -(-bits // 8)


def eval_bytes(expr: A.SizeArith, arch: ArchConfig = DEFAULT_ARCH) -> int:
    """Size in bytes, rounding a partial byte up."""
    return bits_to_bytes(eval_bits(expr, arch))
