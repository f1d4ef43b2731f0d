"""Which budgets admit at least one layout.

``Feasibility(limit).rows(e, r, theta)[m]`` is true iff the denotation of
e at budget m is non-empty for every address congruent to r modulo the
expression's modulus. This is the emptiness question of the model
function answered over boolean vectors instead of tree sets, so it scales
to budgets of 2^16 bytes and beyond.

A *family* is a 2-D array whose row r holds the vector for residue r.
"""

from __future__ import annotations

import math

import numpy as np

from .. import kernels
from ..core import (Aligned, Con, Concat, CoreExpr, Exists, Named, Prim, Repeat, Union,
                    core_children)
from .info import UNKNOWN, ExprInfo, min_size


class AnalysisLimit(Exception):
    """Raised when an expression needs more residues than allowed."""


class Feasibility:
    def __init__(self, limit: int, info: ExprInfo | None = None, max_modulus: int = 4096):
        self.limit = limit
        self.info = info or ExprInfo()
        self.max_modulus = max_modulus
        self.memo: dict = {}
        self.families: dict = {}

    # -- helpers -------------------------------------------------------------

    def empty(self) -> np.ndarray:
        return np.zeros(self.limit + 1, dtype=bool)

    def point(self, n: int) -> np.ndarray:
        out = self.empty()
        if 0 <= n <= self.limit:
            out[n] = True
        return out

    def unit_family(self, modulus: int) -> np.ndarray:
        fam = np.zeros((modulus, self.limit + 1), dtype=bool)
        fam[:, 0] = True
        return fam

    def compose_row(self, left: np.ndarray, right_row, right_mod: int, r: int) -> np.ndarray:
        """Concatenation at residue r: the left part starts at r, the right
        part at r plus the left size, seen modulo right_mod."""
        out = self.empty()
        for j in range(right_mod):
            part = np.zeros_like(left)
            part[j::right_mod] = left[j::right_mod]
            if not part.any():
                continue
            right = right_row((r + j) % right_mod)
            if right.any():
                out |= kernels.sumset(part, right, self.limit)
        return out

    def compose(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        mod = math.lcm(len(x), len(y))
        return np.stack([self.compose_row(x[r % len(x)], lambda s: y[s], len(y), r)
                         for r in range(mod)])

    def family(self, e: CoreExpr, theta: dict) -> np.ndarray:
        mod = self.info.modulus(e)
        if mod > self.max_modulus:
            raise AnalysisLimit(f"expression needs {mod} address residues")
        return np.stack([self.rows(e, r, theta) for r in range(mod)])

    # -- the analysis --------------------------------------------------------

    def rows(self, e: CoreExpr, r: int, theta: dict) -> np.ndarray:
        info = self.info
        key = (id(e), r % info.modulus(e), info.env_key(e, theta))
        hit = self.memo.get(key)
        if hit is not None:
            return hit[1]
        out = self._rows(e, r % info.modulus(e), theta)
        self.memo[key] = (e, out)
        return out

    def _rows(self, e: CoreExpr, r: int, theta: dict) -> np.ndarray:
        if isinstance(e, Prim):
            return self.point(e.n)
        if isinstance(e, Con):
            body = self.rows(e.body, r, theta)
            return self.point(e.n) if e.n <= self.limit and body[e.n] else self.empty()
        if isinstance(e, Aligned):
            return self.rows(e.body, r, theta) if r % e.align == 0 else self.empty()
        if isinstance(e, Named):
            return self.rows(e.body, r, theta)
        if isinstance(e, Union):
            return self.rows(e.left, r, theta) | self.rows(e.right, r, theta)
        if isinstance(e, Concat):
            mod = self.info.modulus(e.right)
            return self.compose_row(self.rows(e.left, r, theta),
                                    lambda s: self.rows(e.right, s, theta), mod, r)
        if isinstance(e, Exists):
            return self._exists(e, r, theta)
        return self._repeat_family(e, theta)[r % self.info.modulus(e)]

    def _exists(self, e: Exists, r: int, theta: dict) -> np.ndarray:
        body = e.body
        if (isinstance(body, Repeat) and body.count == e.formal
                and e.formal not in self.info.free(body.body)):
            return self._star(body.body, theta)[r % self.info.modulus(body.body)]
        out = self.empty()
        known = {f: UNKNOWN for f in self.info.free(e)}
        known.update({k: v for k, v in theta.items() if k in known})
        for k in range(self.limit + 1):
            bound = {**theta, e.formal: k}
            if min_size(body, {**known, e.formal: k}) > self.limit:
                break  # min_size is monotone in k
            row = self.rows(body, r, bound).copy()
            row[:k] = False  # the binding ranges over [0, m]
            out |= row
        return out

    def _star(self, body: CoreExpr, theta: dict) -> np.ndarray:
        """Any number of consecutive copies of body, by repeated squaring of
        the one-or-zero family. Zero-sized copies never change the address,
        so at most ``limit`` non-empty copies matter."""
        key = ("star", id(body), self.info.env_key(body, theta))
        hit = self.families.get(key)
        if hit is not None:
            return hit[1]
        fam = self.family(body, theta)
        fam[:, 0] = True
        steps = max(1, self.limit.bit_length())
        for _ in range(steps):
            nxt = self.compose(fam, fam)
            if np.array_equal(nxt, fam):
                break
            fam = nxt
        self.families[key] = (body, fam)
        return fam

    def _repeat_family(self, e: Repeat, theta: dict) -> np.ndarray:
        key = ("rep", id(e), self.info.env_key(e, theta))
        hit = self.families.get(key)
        if hit is not None:
            return hit[1]
        k = e.count if isinstance(e.count, int) else theta.get(e.count)
        mod = self.info.modulus(e)
        if k is None:
            fam = np.zeros((mod, self.limit + 1), dtype=bool)
        elif k == 0:
            fam = self.unit_family(mod)
        elif isinstance(e.count, int) or e.count not in self.info.free(e.body):
            fam = self._power(self.family(e.body, theta), k, mod)
        else:
            # the body sees the count itself; build from the last copy back
            fam = self.unit_family(mod)
            for j in range(1, k + 1):
                fam = self.compose(self.family(e.body, {**theta, e.count: j}), fam)
                if not fam.any():
                    break
        self.families[key] = (e, fam)
        return fam

    def _power(self, base: np.ndarray, k: int, mod: int) -> np.ndarray:
        result = self.unit_family(mod)
        while k:
            if k & 1:
                result = self.compose(result, base)
            k >>= 1
            if k:
                base = self.compose(base, base)
            if not result.any():
                break
        return result


def feasible_budgets(e: CoreExpr, limit: int, address: int = 0, env: dict | None = None):
    """Boolean vector over budgets 0..limit."""
    return Feasibility(limit).rows(e, address, dict(env or {}))


class UsageFeasibility(Feasibility):
    """Feasibility restricted to layouts that use a marked sub-expression.

    ``used(e, r, theta)[m]`` is true iff some layout of e at budget m
    contains at least one instance of a node whose ``id`` is in *marked*.
    Alongside every plain vector P the analysis carries the vector U of
    marked layouts; a sequence is marked when either part is, so
    (P1, U1) then (P2, U2) gives (P1 P2, U1 P2 | P1 U2).
    """

    def __init__(self, limit: int, marked, info: ExprInfo | None = None,
                 max_modulus: int = 4096):
        super().__init__(limit, info, max_modulus)
        self.marked = list(marked)
        self.marked_ids = {id(m) for m in self.marked}
        self.umemo: dict = {}
        self.ufamilies: dict = {}
        self._has: dict = {}

    def has_mark(self, e: CoreExpr) -> bool:
        key = id(e)
        if key not in self._has:
            self._has[key] = key in self.marked_ids or any(
                self.has_mark(c) for c in core_children(e))
        return self._has[key]

    def used_family(self, e: CoreExpr, theta: dict) -> np.ndarray:
        mod = self.info.modulus(e)
        if mod > self.max_modulus:
            raise AnalysisLimit(f"expression needs {mod} address residues")
        return np.stack([self.used(e, r, theta) for r in range(mod)])

    def used(self, e: CoreExpr, r: int, theta: dict) -> np.ndarray:
        if not self.has_mark(e):
            return self.empty()
        if id(e) in self.marked_ids:
            return self.rows(e, r, theta)
        info = self.info
        key = (id(e), r % info.modulus(e), info.env_key(e, theta))
        hit = self.umemo.get(key)
        if hit is not None:
            return hit[1]
        out = self._used(e, r % info.modulus(e), theta)
        self.umemo[key] = (e, out)
        return out

    def _used(self, e: CoreExpr, r: int, theta: dict) -> np.ndarray:
        if isinstance(e, Con):
            body = self.used(e.body, r, theta)
            return self.point(e.n) if e.n <= self.limit and body[e.n] else self.empty()
        if isinstance(e, Aligned):
            return self.used(e.body, r, theta) if r % e.align == 0 else self.empty()
        if isinstance(e, Named):
            return self.used(e.body, r, theta)
        if isinstance(e, Union):
            return self.used(e.left, r, theta) | self.used(e.right, r, theta)
        if isinstance(e, Concat):
            mod = self.info.modulus(e.right)
            return (self.compose_row(self.used(e.left, r, theta),
                                     lambda s: self.rows(e.right, s, theta), mod, r)
                    | self.compose_row(self.rows(e.left, r, theta),
                                       lambda s: self.used(e.right, s, theta), mod, r))
        if isinstance(e, Exists):
            return self._used_exists(e, r, theta)
        return self._used_repeat_family(e, theta)[r % self.info.modulus(e)]

    def _used_exists(self, e: Exists, r: int, theta: dict) -> np.ndarray:
        body = e.body
        if (isinstance(body, Repeat) and body.count == e.formal
                and e.formal not in self.info.free(body.body)):
            star = self._star(body.body, theta)
            fam = self.compose(self.compose(star, self.used_family(body.body, theta)), star)
            return fam[r % len(fam)]
        out = self.empty()
        known = {f: UNKNOWN for f in self.info.free(e)}
        known.update({k: v for k, v in theta.items() if k in known})
        for k in range(self.limit + 1):
            if min_size(body, {**known, e.formal: k}) > self.limit:
                break
            row = self.used(body, r, {**theta, e.formal: k}).copy()
            row[:k] = False
            out |= row
        return out

    def _pair(self, x, y):
        return self.compose(x[0], y[0]), self.compose(x[1], y[0]) | self.compose(x[0], y[1])

    def _used_repeat_family(self, e: Repeat, theta: dict) -> np.ndarray:
        key = ("rep", id(e), self.info.env_key(e, theta))
        hit = self.ufamilies.get(key)
        if hit is not None:
            return hit[1]
        k = e.count if isinstance(e.count, int) else theta.get(e.count)
        mod = self.info.modulus(e)
        result = (self.unit_family(mod), np.zeros((mod, self.limit + 1), dtype=bool))
        if k is not None and k > 0:
            if isinstance(e.count, int) or e.count not in self.info.free(e.body):
                base = (self.family(e.body, theta), self.used_family(e.body, theta))
                while k:
                    if k & 1:
                        result = self._pair(result, base)
                    k >>= 1
                    if k:
                        base = self._pair(base, base)
            else:
                for j in range(1, k + 1):
                    bound = {**theta, e.count: j}
                    result = self._pair((self.family(e.body, bound),
                                         self.used_family(e.body, bound)), result)
        self.ufamilies[key] = (e, result[1])
        return result[1]
