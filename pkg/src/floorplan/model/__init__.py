"""Executable semantics: enumeration, counting, membership and analyses."""

from __future__ import annotations

from typing import Optional

from ..arith import DEFAULT_ARCH, ArchConfig
from ..core import CoreExpr, Exists, Named, compile_layer, free_formals
from ..diagnostics import FloorplanError
from ..syntax import ast as A
from .deadcode import check_dead_branches
from .feasibility import Feasibility, feasible_budgets
from .semantics import (Config, Counter, Evaluator, check_membership, count, evaluate,
                        evaluate_naive)
from .values import B0, B1, Byte0, Byte1, Node, Pair, ValueTree, flatten, leaves, parse_tree, to_text


class ModelError(FloorplanError):
    pass


def find_layer(spec: A.SpecAst, name: str) -> A.LayerDecl:
    for decl in A.iter_layers(spec):
        if decl.name == name:
            return decl
    raise ModelError(f"unknown layer {name!r}")


def layer_expr(spec: A.SpecAst, name: str, bindings: Optional[dict] = None,
               arch: ArchConfig = DEFAULT_ARCH) -> CoreExpr:
    """Compiled layer with the existentials of bound formals removed, so
    that *bindings* fix them, and any formal bound outside a nested layer
    quantified."""
    bindings = bindings or {}
    decl = find_layer(spec, name)
    unknown = set(bindings) - set(decl.formals)
    expr = compile_layer(decl, arch)
    outer = free_formals(expr)
    unknown -= outer
    if unknown:
        raise ModelError(f"{name} has no formal named {sorted(unknown)[0]!r}")
    assert isinstance(expr, Named)
    body = expr.body
    peeled = []
    while isinstance(body, Exists) and body.formal in decl.formals:
        peeled.append(body.formal)
        body = body.body
    for formal in reversed(peeled):
        if formal not in bindings:
            body = Exists(formal, body)
    expr = Named(expr.label, body)
    for formal in sorted(outer - set(bindings), reverse=True):
        expr = Exists(formal, expr)
    return expr


def enumerate_layer(spec: A.SpecAst, layer: str, size: int, address: int = 0,
                    bindings: Optional[dict] = None,
                    arch: ArchConfig = DEFAULT_ARCH) -> frozenset:
    expr = layer_expr(spec, layer, bindings, arch)
    return evaluate(Config(address, size, expr, dict(bindings or {})))


def count_layouts(spec: A.SpecAst, layer: str, size: int, address: int = 0,
                  bindings: Optional[dict] = None,
                  arch: ArchConfig = DEFAULT_ARCH) -> int:
    expr = layer_expr(spec, layer, bindings, arch)
    return count(Config(address, size, expr, dict(bindings or {})))


__all__ = [
    "B0", "B1", "Byte0", "Byte1", "Config", "Counter", "Evaluator", "Feasibility", "ModelError",
    "Node", "Pair", "ValueTree", "check_dead_branches", "check_membership", "count",
    "count_layouts", "enumerate_layer", "evaluate", "evaluate_naive", "feasible_budgets",
    "find_layer", "flatten", "layer_expr", "leaves", "parse_tree", "to_text",
]
