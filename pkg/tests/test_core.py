import itertools

import pytest
from hypothesis import given, strategies as st

from aspdebug.core import (
    Constant,
    Eps,
    InconsistentInterpretationError,
    Interpretation,
    Literal,
    Rule,
    UnboundVariableError,
    Variable,
    apply,
    compare,
    lit,
    order_key,
)


def test_compare_numbers_by_value():
    assert compare(Constant(1), Constant(3)) == -1
    assert compare(Constant(3), Constant(1)) == 1


def test_compare_reflexive():
    assert compare(Constant("m1"), Constant("m1")) == 0


def test_numbers_precede_symbols():
    # by the numbers-first decision even a large number precedes any symbol
    assert compare(Constant(2), Constant("m1")) == -1
    assert compare(Constant(999), Constant("a")) == -1


def test_symbols_lexicographic():
    assert compare(Constant("m1"), Constant("m2")) == -1
    assert compare(Constant("paper"), Constant("pc")) == -1


def _fixture_constants(program):
    return list(program.constants())


def test_compare_total_order_over_fixture_constants(lucy2, patty1, linus1):
    for program in (lucy2, patty1, linus1):
        consts = _fixture_constants(program)
        for a, b in itertools.product(consts, repeat=2):
            ca, cb = compare(a, b), compare(b, a)
            assert ca == -cb  # antisymmetry
            assert (ca == 0) == (a == b)
        for a, b, c in itertools.product(consts, repeat=3):
            if compare(a, b) <= 0 and compare(b, c) <= 0:
                assert compare(a, c) <= 0  # transitivity


def test_apply_lucy_rule(lucy2):
    r1 = lucy2.rules[4]
    theta = {"M": Constant("m2"), "P": Constant("p1"), "X": Constant(1)}
    inst = apply(r1, theta)
    assert inst.head == (lit("some_bid", "m2", "p1"),)
    assert inst.pos == (lit("bid", "m2", "p1", 1),)
    assert inst.is_ground


def test_apply_identity_on_ground_fact():
    fact = Rule(head=(lit("pc", "m1"),))
    assert apply(fact, {}) == fact


def test_apply_patty_constraint(patty1):
    constraint = patty1.rules[8]
    theta = {"P": Constant("p1"), "M": Constant("m1")}
    inst = apply(constraint, theta)
    assert inst.head == ()
    assert inst.pos == (lit("assigned", "p1", "m1"), lit("bid", "m1", "p1", 0))


def test_apply_requires_total_substitution(lucy2):
    r1 = lucy2.rules[4]
    with pytest.raises(UnboundVariableError):
        apply(r1, {"M": Constant("m2"), "P": Constant("p1")})


def test_apply_grounds_every_rule(lucy2, patty1):
    for program in (lucy2, patty1):
        universe = program.constants()
        for rule in program.rules:
            theta = {v: universe[0] for v in rule.variables()}
            assert apply(rule, theta).is_ground


def test_interpretation_rejects_inconsistency():
    with pytest.raises(InconsistentInterpretationError):
        Interpretation(frozenset({lit("a"), lit("a", neg=True)}))


def test_interpretation_rejects_nonground():
    with pytest.raises(ValueError):
        Interpretation(frozenset({Literal(Eps("p", False, 1), (Variable("X"),))}))


names = st.sampled_from(["a", "b", "c"])
signs = st.booleans()


@given(st.sets(st.tuples(names, signs), max_size=6))
def test_interpretation_consistency_property(pairs):
    literals = {lit(n, neg=s) for n, s in pairs}
    inconsistent = any((n, not s) in pairs for n, s in pairs)
    if inconsistent:
        with pytest.raises(InconsistentInterpretationError):
            Interpretation(frozenset(literals))
    else:
        assert len(Interpretation(frozenset(literals))) == len(literals)


def test_rule_rejects_builtin_in_head():
    from aspdebug.core import Builtin

    with pytest.raises(ValueError):
        Rule(head=(Builtin(Constant(1), "=", Constant(1)),), pos=(lit("a"),))


def test_literal_rejects_arith_args():
    from aspdebug.core import ArithExpr

    with pytest.raises(ValueError):
        Literal(Eps("p", False, 1), (ArithExpr("+", Constant(1), Constant(1)),))


def test_order_key_sorts_numbers_before_symbols():
    cs = [Constant("z"), Constant(10), Constant("a"), Constant(2)]
    assert [c.value for c in sorted(cs, key=order_key)] == [2, 10, "a", "z"]
