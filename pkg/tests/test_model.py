import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from floorplan.core import Aligned, Con, Concat, Exists, Named, Prim, Repeat, Union
from floorplan.expand import expand_macros
from floorplan.model import (B0, B1, Config, ModelError, Node, Pair, check_membership, count,
                             count_layouts, enumerate_layer, evaluate, evaluate_naive,
                             feasible_budgets, flatten, layer_expr, leaves, parse_tree, to_text)
from floorplan.model.values import byte_chain, normalize_ws
from floorplan.syntax import parse
from gen import core_exprs

K0_LISTING = '''N "K" (T (N "hd" (T (T B1 B0) (T B0 B0)))
  (N "tl" (T (T (N "lft" (T B1 B0)) 
                (N "rgt" (T (T B1 B0)
      (T (T B1 B0) (T (T B1 B0) (T B0 B0)))))
  ) (T B0 B0))))'''


def spec_of(load_fixture, name):
    return expand_macros(parse(load_fixture(name)))


def cfg(e, m, alpha=0, env=None):
    return Config(alpha, m, e, dict(env or {}))


# --- values ------------------------------------------------------------------

def test_byte_chain_shape():
    assert byte_chain(0) == B0
    assert byte_chain(2) == Pair(B1, Pair(B1, B0))
    assert leaves(byte_chain(7)) == 7


def test_tree_text_round_trip():
    t = parse_tree(K0_LISTING)
    assert leaves(t) == 5
    assert to_text(t) == normalize_ws(K0_LISTING)
    assert parse_tree(to_text(t)) == t


def test_flatten_ignores_pair_bracketing():
    a = Pair(Pair(B1, B1), B1)
    b = Pair(B1, Pair(B1, B1))
    assert a != b and flatten(a) == flatten(b)
    assert flatten(Node("x", B1)) == (("<", "x"), 1, (">", "x"))


# --- hand-derived layout counts ------------------------------------------------

@pytest.mark.parametrize("expr,m,expected", [
    (Prim(3), 3, 1),
    (Prim(3), 2, 0),
    (Union(Prim(1), Prim(1)), 1, 1),  # identical trees collapse
    (Union(Named("a", Prim(1)), Named("b", Prim(1))), 1, 2),
    (Exists("n", Repeat("n", Prim(1))), 4, 1),
    (Exists("n", Repeat("n", Union(Named("a", Prim(1)), Named("b", Prim(1))))), 4, 16),
    (Exists("n", Repeat("n", Union(Prim(1), Prim(2)))), 5, 8),  # compositions: Fibonacci(6)
    (Concat(Exists("a", Repeat("a", Prim(1))), Exists("b", Repeat("b", Prim(1)))), 3, 4),
    (Con(2, Exists("n", Repeat("n", Prim(1)))), 2, 1),
    (Con(2, Exists("n", Repeat("n", Prim(1)))), 3, 0),
    (Repeat(3, Prim(2)), 6, 1),
])
def test_small_counts(expr, m, expected):
    assert count(cfg(expr, m)) == expected
    assert len(evaluate(cfg(expr, m))) == expected


def test_alignment_gates_on_the_address():
    e = Aligned(Prim(1), 4)
    assert count(cfg(e, 1, alpha=4)) == 1
    assert count(cfg(e, 1, alpha=6)) == 0


def test_seq_shifts_the_address_for_alignment():
    e = Concat(Prim(1), Aligned(Prim(1), 2))
    assert count(cfg(e, 2, alpha=1)) == 1
    assert count(cfg(e, 2, alpha=0)) == 0


# --- worked examples ------------------------------------------------------------

def test_k_has_three_layouts_at_five_bytes(load_fixture):
    spec = spec_of(load_fixture, "k")
    assert count_layouts(spec, "K", 5) == 3
    trees = enumerate_layer(spec, "K", 5)
    assert len(trees) == 3
    assert parse_tree(K0_LISTING) in trees


def test_k_membership_of_the_worked_tree(load_fixture):
    spec = spec_of(load_fixture, "k")
    e = layer_expr(spec, "K")
    assert check_membership(parse_tree(K0_LISTING), cfg(e, 5))
    assert not check_membership(parse_tree(K0_LISTING), cfg(e, 6))
    for tree in enumerate_layer(spec, "K", 5):
        assert check_membership(tree, cfg(e, 5))


def test_payload_counts(load_fixture):
    assert count_layouts(spec_of(load_fixture, "payload_refs"), "Payload", 56) == 8
    assert count_layouts(spec_of(load_fixture, "payload_union"), "Payload", 56) == 2 ** 7
    assert len(enumerate_layer(spec_of(load_fixture, "payload_refs"), "Payload", 56)) == 8


def test_payload_union_count_by_combinatorics(load_fixture):
    # each of the 7 words is independently a pointer or a plain word
    spec = spec_of(load_fixture, "payload_union")
    for words in range(0, 8):
        assert count_layouts(spec, "Payload", 56) == 2 ** 7
        e = Repeat(words, Union(Named("Cell ptr", Prim(8)), Prim(8)))
        assert count(cfg(e, 8 * words)) == 2 ** words


def test_immix_counts(load_fixture):
    spec = spec_of(load_fixture, "immix")
    assert count_layouts(spec, "Cell", 40) == 2
    assert count_layouts(spec, "Line", 256) == 1
    assert count_layouts(spec, "RefBits", 1) == 1
    assert count_layouts(spec, "LineMark", 1) == 1
    assert count_layouts(spec, "RefBits", 2) == 0


def test_bindings_fix_a_formal(load_fixture):
    spec = spec_of(load_fixture, "k")
    assert count_layouts(spec, "K", 5, bindings={"n": 1}) == 1
    assert count_layouts(spec, "K", 5, bindings={"n": 2}) == 2
    assert count_layouts(spec, "K", 5, bindings={"n": 0}) == 0
    with pytest.raises(ModelError):
        count_layouts(spec, "K", 5, bindings={"zz": 1})


def test_unknown_layer(load_fixture):
    with pytest.raises(ModelError):
        count_layouts(spec_of(load_fixture, "k"), "Nope", 1)


def test_long_repetition_does_not_overflow_the_stack():
    e = Exists("n", Repeat("n", Prim(1)))
    assert count(cfg(e, 5000)) == 1
    assert len(evaluate(cfg(e, 3000))) == 1


# --- properties ------------------------------------------------------------------

budgets = st.integers(0, 8)
addresses = st.integers(0, 7)


@settings(max_examples=300, deadline=None)
@given(core_exprs(4), addresses, budgets)
def test_every_tree_has_budget_many_leaves(e, alpha, m):
    assert all(leaves(t) == m for t in evaluate(cfg(e, m, alpha)))


@settings(max_examples=200, deadline=None)
@given(core_exprs(4), addresses, budgets)
def test_memoized_matches_naive(e, alpha, m):
    assert evaluate(cfg(e, m, alpha)) == evaluate_naive(alpha, m, {}, e)


@settings(max_examples=300, deadline=None)
@given(core_exprs(4), addresses, budgets)
def test_count_matches_enumeration(e, alpha, m):
    assert count(cfg(e, m, alpha)) == len(evaluate(cfg(e, m, alpha)))


@settings(max_examples=200, deadline=None)
@given(core_exprs(4), addresses, budgets)
def test_membership_accepts_exactly_the_enumerated_trees(e, alpha, m):
    trees = evaluate(cfg(e, m, alpha))
    assert all(check_membership(t, cfg(e, m, alpha)) for t in trees)
    others = evaluate(cfg(e, m + 1, alpha))
    assert not any(check_membership(t, cfg(e, m, alpha)) for t in others)


@settings(max_examples=200, deadline=None)
@given(core_exprs(3), core_exprs(3), addresses, budgets)
def test_union_is_symmetric(a, b, alpha, m):
    assert evaluate(cfg(Union(a, b), m, alpha)) == evaluate(cfg(Union(b, a), m, alpha))


@settings(max_examples=200, deadline=None)
@given(core_exprs(3), core_exprs(3), core_exprs(3), addresses, budgets)
def test_concat_is_associative_up_to_bracketing(a, b, c, alpha, m):
    left = {flatten(t) for t in evaluate(cfg(Concat(Concat(a, b), c), m, alpha))}
    right = {flatten(t) for t in evaluate(cfg(Concat(a, Concat(b, c)), m, alpha))}
    assert left == right


@settings(max_examples=200, deadline=None)
@given(core_exprs(4), st.sampled_from([1, 2, 4, 8]), addresses, budgets)
def test_alignment_gating(e, k, alpha, m):
    got = evaluate(cfg(Aligned(e, k), m, alpha))
    assert got == (evaluate(cfg(e, m, alpha)) if alpha % k == 0 else frozenset())


@settings(max_examples=200, deadline=None)
@given(core_exprs(4), st.integers(0, 6), addresses, budgets)
def test_magnitude_gating(e, n, alpha, m):
    got = evaluate(cfg(Con(n, e), m, alpha))
    assert got == (evaluate(cfg(e, m, alpha)) if m == n else frozenset())


@settings(max_examples=150, deadline=None)
@given(core_exprs(4), addresses)
def test_feasibility_agrees_with_the_evaluator(e, alpha):
    limit = 8
    feasible = feasible_budgets(e, limit, alpha)
    for m in range(limit + 1):
        assert bool(feasible[m]) == bool(evaluate(cfg(e, m, alpha))), m


@settings(max_examples=100, deadline=None)
@given(core_exprs(3), st.integers(1, 3))
def test_address_only_matters_modulo_alignment(e, shift):
    from floorplan.model.info import ExprInfo
    mod = ExprInfo().modulus(e)
    for m in range(5):
        a = count(cfg(e, m, 0))
        assert a == count(cfg(e, m, mod * shift))


def test_exact_counts_are_integers_not_floats():
    e = Exists("n", Repeat("n", Union(Named("a", Prim(1)), Named("b", Prim(1)))))
    assert count(cfg(e, 70)) == 2 ** 70
    assert isinstance(count(cfg(e, 70)), int)
    assert math.log2(count(cfg(e, 70))) == 70
