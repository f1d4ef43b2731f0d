"""The model function: address, budget, environment and expression to the
set of layout trees, plus counting and membership in the same terms.

Three independent routes answer questions about a configuration:

* :class:`Evaluator` materializes the tree set.
* :class:`Counter` computes its cardinality over integers, falling back to
  the evaluator only for unions and existentials it cannot prove disjoint.
* :func:`check_membership` decides whether one given tree belongs to the
  set by walking the tree against the expression.
"""

from __future__ import annotations

import sys
import threading
from dataclasses import dataclass, field
from typing import Optional

from ..core import Aligned, Con, Concat, CoreExpr, Exists, Named, Prim, Repeat, Union
from .info import ExprInfo, determines, disjoint
from .values import B0, Leaf, Node, Pair, ValueTree, byte_chain

EMPTY: frozenset = frozenset()
REPEAT_END = Pair(B0, B0)


@dataclass
class Config:
    address: int
    budget: int
    expr: CoreExpr
    env: dict = field(default_factory=dict)


def run_deep(fn, *args):
    """Run fn in a thread with a large stack and recursion limit; long
    repetitions recurse once per element."""
    result: list = []
    error: list = []

    def target():
        try:
            result.append(fn(*args))
        except BaseException as exc:  # re-raised in the caller
            error.append(exc)

    old_limit = sys.getrecursionlimit()
    old_stack = threading.stack_size()
    sys.setrecursionlimit(max(old_limit, 200_000))
    threading.stack_size(512 * 1024 * 1024)
    try:
        worker = threading.Thread(target=target)
        worker.start()
        worker.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    if error:
        raise error[0]
    return result[0]


def _count_of(e: Repeat, theta: dict) -> Optional[int]:
    if isinstance(e.count, int):
        return e.count
    return theta.get(e.count)


def _decrement(e: Repeat, theta: dict, k: int, info: Optional[ExprInfo] = None):
    """The continuation of a repetition after one element."""
    if isinstance(e.count, int):
        return (info.repeat_rest(e) if info else Repeat(k - 1, e.body)), theta
    return e, {**theta, e.count: k - 1}


def split_range(info: ExprInfo, m: int, theta1, e1, theta2, e2) -> range:
    """Sizes of the first part worth trying when splitting budget m; the
    others are excluded by static size bounds."""
    lo1, hi1 = info.bounds(e1, theta1)
    lo2, hi2 = info.bounds(e2, theta2)
    lo = max(0, lo1, m - hi2)
    hi = min(m, hi1, m - lo2)
    if lo > hi:
        return range(0)
    return range(int(lo), int(hi) + 1)


class Evaluator:
    """Memoized tree-set semantics.

    Results are keyed on (node, address mod node modulus, budget, bindings
    of the node's free formals), which is exact because the semantics
    consults the address only through divisibility tests.
    """

    def __init__(self, info: Optional[ExprInfo] = None):
        self.info = info or ExprInfo()
        self.memo: dict = {}

    def __call__(self, alpha: int, m: int, theta: dict, e: CoreExpr) -> frozenset:
        info = self.info
        key = (id(e), alpha % info.modulus(e), m, info.env_key(e, theta))
        hit = self.memo.get(key)
        if hit is not None:
            return hit[1]
        out = self._eval(alpha, m, theta, e)
        self.memo[key] = (e, out)
        return out

    def _eval(self, alpha: int, m: int, theta: dict, e: CoreExpr) -> frozenset:
        if isinstance(e, Prim):
            return frozenset({byte_chain(m)}) if m == e.n else EMPTY
        if isinstance(e, Con):
            return self(alpha, m, theta, e.body) if m == e.n else EMPTY
        if isinstance(e, Aligned):
            return self(alpha, m, theta, e.body) if alpha % e.align == 0 else EMPTY
        if isinstance(e, Named):
            return frozenset(Node(e.label, r) for r in self(alpha, m, theta, e.body))
        if isinstance(e, Union):
            return self(alpha, m, theta, e.left) | self(alpha, m, theta, e.right)
        if isinstance(e, Concat):
            return self._split(alpha, m, theta, e.left, theta, e.right)
        if isinstance(e, Exists):
            out: set = set()
            for i in range(m + 1):
                out |= self(alpha, m, {**theta, e.formal: i}, e.body)
            return frozenset(out)
        k = _count_of(e, theta)
        if k is None:
            return EMPTY
        if k == 0:
            return frozenset({REPEAT_END}) if m == 0 else EMPTY
        rest, theta2 = _decrement(e, theta, k, self.info)
        return self._split(alpha, m, theta, e.body, theta2, rest)

    def _split(self, alpha, m, theta1, e1, theta2, e2) -> frozenset:
        out = set()
        for i in split_range(self.info, m, theta1, e1, theta2, e2):
            lefts = self(alpha, i, theta1, e1)
            if not lefts:
                continue
            for r1 in lefts:
                n = r1.leaves
                for r2 in self(alpha + n, m - n, theta2, e2):
                    out.add(Pair(r1, r2))
        return frozenset(out)


class Counter:
    """Cardinality of the tree set without materializing it where the
    structure proves the summands disjoint."""

    def __init__(self, info: Optional[ExprInfo] = None):
        self.info = info or ExprInfo()
        self.evaluator = Evaluator(self.info)
        self.memo: dict = {}
        self.fallbacks = 0

    def __call__(self, alpha: int, m: int, theta: dict, e: CoreExpr) -> int:
        info = self.info
        key = (id(e), alpha % info.modulus(e), m, info.env_key(e, theta))
        hit = self.memo.get(key)
        if hit is not None:
            return hit[1]
        out = self._count(alpha, m, theta, e)
        self.memo[key] = (e, out)
        return out

    def _count(self, alpha: int, m: int, theta: dict, e: CoreExpr) -> int:
        if isinstance(e, Prim):
            return int(m == e.n)
        if isinstance(e, Con):
            return self(alpha, m, theta, e.body) if m == e.n else 0
        if isinstance(e, Aligned):
            return self(alpha, m, theta, e.body) if alpha % e.align == 0 else 0
        if isinstance(e, Named):
            return self(alpha, m, theta, e.body)
        if isinstance(e, Union):
            if disjoint(e.left, e.right, self.info):
                return self(alpha, m, theta, e.left) + self(alpha, m, theta, e.right)
            return self._fallback(alpha, m, theta, e)
        if isinstance(e, Concat):
            return self._split(alpha, m, theta, e.left, theta, e.right)
        if isinstance(e, Exists):
            if determines(e.body, e.formal, self.info):
                return sum(self(alpha, m, {**theta, e.formal: i}, e.body) for i in range(m + 1))
            return self._fallback(alpha, m, theta, e)
        k = _count_of(e, theta)
        if k is None:
            return 0
        if k == 0:
            return int(m == 0)
        rest, theta2 = _decrement(e, theta, k, self.info)
        return self._split(alpha, m, theta, e.body, theta2, rest)

    def _split(self, alpha, m, theta1, e1, theta2, e2) -> int:
        total = 0
        for i in split_range(self.info, m, theta1, e1, theta2, e2):
            left = self(alpha, i, theta1, e1)
            if left:
                total += left * self(alpha + i, m - i, theta2, e2)
        return total

    def _fallback(self, alpha, m, theta, e) -> int:
        self.fallbacks += 1
        return len(self.evaluator(alpha, m, theta, e))


def evaluate(cfg: Config) -> frozenset:
    """The tree set denoted by *cfg*."""
    return run_deep(Evaluator(), cfg.address, cfg.budget, dict(cfg.env), cfg.expr)


def evaluate_naive(alpha: int, m: int, theta: dict, e: CoreExpr) -> frozenset:
    """Unmemoized, unpruned transcription of the semantic equations; the
    reference the memoized evaluator is tested against."""
    if isinstance(e, Prim):
        return frozenset({byte_chain(m)}) if m == e.n else EMPTY
    if isinstance(e, Con):
        return evaluate_naive(alpha, m, theta, e.body) if m == e.n else EMPTY
    if isinstance(e, Aligned):
        return evaluate_naive(alpha, m, theta, e.body) if alpha % e.align == 0 else EMPTY
    if isinstance(e, Named):
        return frozenset(Node(e.label, r) for r in evaluate_naive(alpha, m, theta, e.body))
    if isinstance(e, Union):
        return evaluate_naive(alpha, m, theta, e.left) | evaluate_naive(alpha, m, theta, e.right)
    if isinstance(e, Exists):
        out: set = set()
        for i in range(m + 1):
            out |= evaluate_naive(alpha, m, {**theta, e.formal: i}, e.body)
        return frozenset(out)
    if isinstance(e, Concat):
        e1, theta2, e2 = e.left, theta, e.right
    else:
        k = _count_of(e, theta)
        if k is None:
            return EMPTY
        if k == 0:
            return frozenset({REPEAT_END}) if m == 0 else EMPTY
        e1 = e.body
        e2, theta2 = _decrement(e, theta, k)
    out = set()
    for i in range(m + 1):
        for r1 in evaluate_naive(alpha, i, theta, e1):
            n = r1.leaves
            for r2 in evaluate_naive(alpha + n, m - n, theta2, e2):
                if n + r2.leaves == m:
                    out.add(Pair(r1, r2))
    return frozenset(out)


def count(cfg: Config) -> int:
    return run_deep(Counter(), cfg.address, cfg.budget, dict(cfg.env), cfg.expr)


# --- membership ----------------------------------------------------------------

def check_membership(t: ValueTree, cfg: Config) -> bool:
    """True iff t belongs to the denotation of cfg, decided by matching the
    tree against the expression rather than by enumeration."""
    memo: dict = {}

    def match(t: ValueTree, alpha: int, m: int, theta: dict, e: CoreExpr) -> bool:
        if t.leaves != m:
            return False
        key = (id(t), id(e), alpha, m, tuple(sorted(theta.items())))
        if key in memo:
            return memo[key]
        memo[key] = out = step(t, alpha, m, theta, e)
        return out

    def step(t, alpha, m, theta, e) -> bool:
        if isinstance(e, Prim):
            if e.n == 0:
                return isinstance(t, Leaf) and t.bit == 0
            node = t
            for _ in range(e.n):
                if not (isinstance(node, Pair) and isinstance(node.left, Leaf)
                        and node.left.bit == 1):
                    return False
                node = node.right
            return isinstance(node, Leaf) and node.bit == 0
        if isinstance(e, Con):
            return m == e.n and match(t, alpha, m, theta, e.body)
        if isinstance(e, Aligned):
            return alpha % e.align == 0 and match(t, alpha, m, theta, e.body)
        if isinstance(e, Named):
            return isinstance(t, Node) and t.label == e.label and \
                match(t.child, alpha, m, theta, e.body)
        if isinstance(e, Union):
            return match(t, alpha, m, theta, e.left) or match(t, alpha, m, theta, e.right)
        if isinstance(e, Exists):
            return any(match(t, alpha, m, {**theta, e.formal: i}, e.body) for i in range(m + 1))
        if isinstance(e, Concat):
            if not isinstance(t, Pair):
                return False
            n = t.left.leaves
            return (match(t.left, alpha, n, theta, e.left)
                    and match(t.right, alpha + n, m - n, theta, e.right))
        k = _count_of(e, theta)
        if k is None:
            return False
        if k == 0:
            return m == 0 and t == REPEAT_END
        if not isinstance(t, Pair):
            return False
        n = t.left.leaves
        rest, theta2 = _decrement(e, theta, k)
        return (match(t.left, alpha, n, theta, e.body)
                and match(t.right, alpha + n, m - n, theta2, rest))

    return run_deep(match, t, cfg.address, cfg.budget, dict(cfg.env), cfg.expr)
