"""Static facts about core expressions, cached per node identity."""

from __future__ import annotations

import math
from typing import Optional

from ..core import (Aligned, Con, Concat, CoreExpr, Exists, Named, Prim, Repeat, Union,
                    core_children)

INF = float("inf")
UNKNOWN = -1  # a bound formal whose value is not fixed


class ExprInfo:
    """Per-expression caches keyed by ``id``. The caller keeps the root
    alive for as long as the cache is used."""

    def __init__(self):
        self._free: dict[int, frozenset] = {}
        self._modulus: dict[int, int] = {}
        self._roots: dict[int, frozenset] = {}
        self._rest: dict[int, Repeat] = {}
        self._bounds: dict = {}
        self._keep: list = []

    def repeat_rest(self, e: Repeat) -> Repeat:
        """Shared node for a literal-count repetition after one element."""
        key = id(e)
        if key not in self._rest:
            self._keep.append(e)
            self._rest[key] = Repeat(e.count - 1, e.body)
        return self._rest[key]

    def free(self, e: CoreExpr) -> frozenset:
        key = id(e)
        if key not in self._free:
            self._keep.append(e)
            if isinstance(e, Repeat):
                out = self.free(e.body)
                if isinstance(e.count, str):
                    out = out | {e.count}
            elif isinstance(e, Exists):
                out = self.free(e.body) - {e.formal}
            else:
                out = frozenset()
                for child in core_children(e):
                    out |= self.free(child)
            self._free[key] = out
        return self._free[key]

    def modulus(self, e: CoreExpr) -> int:
        """Least common multiple of every alignment inside *e* (1 if none).
        Denotations depend on the address only modulo this value."""
        key = id(e)
        if key not in self._modulus:
            self._keep.append(e)
            out = 1
            for child in core_children(e):
                out = math.lcm(out, self.modulus(child))
            if isinstance(e, Aligned):
                out = math.lcm(out, e.align)
            self._modulus[key] = out
        return self._modulus[key]

    def roots(self, e: CoreExpr) -> frozenset:
        """Possible root constructors of trees in the denotation:
        "B0", "T" or ("N", label)."""
        key = id(e)
        if key not in self._roots:
            self._keep.append(e)
            if isinstance(e, Prim):
                out = frozenset({"B0" if e.n == 0 else "T"})
            elif isinstance(e, (Concat, Repeat)):
                out = frozenset({"T"})
            elif isinstance(e, Named):
                out = frozenset({("N", e.label)})
            elif isinstance(e, Union):
                out = self.roots(e.left) | self.roots(e.right)
            else:
                out = self.roots(e.body)
            self._roots[key] = out
        return self._roots[key]

    def env_key(self, e: CoreExpr, theta: dict) -> tuple:
        return tuple((f, theta.get(f)) for f in sorted(self.free(e)))

    def bounds(self, e: CoreExpr, theta: dict) -> tuple[float, float]:
        key = (id(e), self.env_key(e, theta))
        hit = self._bounds.get(key)
        if hit is None:
            self._keep.append(e)
            hit = self._bounds[key] = size_bounds(e, {f: theta.get(f) for f in self.free(e)
                                                       if f in theta})
        return hit


def disjoint(a: CoreExpr, b: CoreExpr, info: ExprInfo) -> bool:
    """Conservative proof that a and b never denote a common tree, under
    any configuration. False means "unknown"."""
    if not (info.roots(a) & info.roots(b)):
        return True
    a, b = _peel(a), _peel(b)
    if isinstance(a, Named) and isinstance(b, Named) and a.label == b.label:
        return disjoint(a.body, b.body, info)
    if isinstance(a, Prim) and isinstance(b, Prim):
        return a.n != b.n
    if isinstance(a, Concat) and isinstance(b, Concat):
        return disjoint(a.left, b.left, info) or disjoint(a.right, b.right, info)
    return False


def _peel(e: CoreExpr) -> CoreExpr:
    while isinstance(e, (Con, Aligned)):
        e = e.body
    return e


def determines(e: CoreExpr, f: str, info: ExprInfo) -> bool:
    """Conservative proof that different values of f never yield a common
    tree of e, whatever the other bindings are."""
    if isinstance(e, Repeat):
        return e.count == f
    if isinstance(e, (Named, Con, Aligned)):
        return determines(e.body, f, info)
    if isinstance(e, Concat):
        return determines(e.left, f, info) or determines(e.right, f, info)
    if isinstance(e, Union):
        return (determines(e.left, f, info) and determines(e.right, f, info)
                and disjoint(e.left, e.right, info))
    if isinstance(e, Exists):
        return e.formal != f and determines(e.body, f, info)
    return False


def size_bounds(e: CoreExpr, theta: Optional[dict] = None) -> tuple[float, float]:
    """(lower, upper) bounds on the leaf count of any tree of *e*; (inf,
    -inf) when e denotes nothing at any budget. Formals mapped to UNKNOWN
    may take any value; formals absent from theta are unbound."""
    theta = theta or {}
    if isinstance(e, Prim):
        return e.n, e.n
    if isinstance(e, Con):
        lo, hi = size_bounds(e.body, theta)
        return (e.n, e.n) if lo <= e.n <= hi else (INF, -INF)
    if isinstance(e, (Aligned, Named)):
        return size_bounds(e.body, theta)
    if isinstance(e, Concat):
        (l1, h1), (l2, h2) = size_bounds(e.left, theta), size_bounds(e.right, theta)
        if l1 == INF or l2 == INF:
            return INF, -INF
        return l1 + l2, h1 + h2
    if isinstance(e, Union):
        (l1, h1), (l2, h2) = size_bounds(e.left, theta), size_bounds(e.right, theta)
        return min(l1, l2), max(h1, h2)
    if isinstance(e, Exists):
        return size_bounds(e.body, {**theta, e.formal: UNKNOWN})
    count = e.count if isinstance(e.count, int) else theta.get(e.count)
    if count is None:
        return INF, -INF
    if count == 0:
        return 0, 0
    inner = theta
    if isinstance(e.count, str):
        inner = {**theta, e.count: UNKNOWN}
    lo, hi = size_bounds(e.body, inner)
    if count == UNKNOWN:
        return 0, (0 if hi <= 0 else INF)
    if lo == INF:
        return INF, -INF
    return count * lo, count * hi


def min_size(e: CoreExpr, theta: Optional[dict] = None) -> float:
    return size_bounds(e, theta)[0]
