import random

import pytest

from aspdebug.core import BudgetExceededError, Constant, Interpretation, lit
from aspdebug.explainer import Explanation, explain, find_unfounded_loops, find_unsatisfied
from aspdebug.grounder import ground
from aspdebug.loops import is_loop, dep_graph
from aspdebug.semantics import is_answer_set, satisfies_rule
from aspdebug.unfoundedness import unfounded
from gen import random_interpretation, random_program


def brute_force_unsatisfied(program, interp):
    """Oracle: scan all ground instances with an inline satisfaction check."""
    out = set()
    for gr in ground(program).rules:
        rule = gr.rule
        body = all(b in interp for b in rule.pos_literals) and not any(
            n in interp for n in rule.neg
        )
        if body and not any(h in interp for h in rule.head):
            out.add((gr.rule_index, gr.theta))
    return out


def test_unsatisfied_lucy_e1_exactly_one(lucy2, e1):
    findings = find_unsatisfied(lucy2, e1)
    assert {(f.rule_index, f.theta) for f in findings} == brute_force_unsatisfied(lucy2, e1)
    (f,) = findings
    assert f.rule_index == 5
    assert f.theta_dict() == {"M": Constant("m2"), "P": Constant("p1"), "X": Constant(1)}


def test_unsatisfied_none_for_answer_set(lucy1, s1):
    assert find_unsatisfied(lucy1, s1) == ()


def test_unsatisfied_patty_includes_constraint(patty1, e4):
    findings = find_unsatisfied(patty1, e4)
    assert {(f.rule_index, f.theta) for f in findings} == brute_force_unsatisfied(patty1, e4)
    assert [
        (f.rule_index, f.theta_dict()) for f in findings
    ] == [(9, {"P": Constant("p1"), "M": Constant("m1")})]


def test_unfounded_loops_lucy_e2(lucy2, e2):
    findings = find_unfounded_loops(lucy2, e2)
    assert [f.loop.literals for f in findings] == [frozenset({lit("bid", "m2", "p1", 1)})]


def test_unfounded_loops_none_for_answer_set(lucy1, s1):
    assert find_unfounded_loops(lucy1, s1) == ()


def test_unfounded_loops_patty_e4(patty1, e4):
    findings = find_unfounded_loops(patty1, e4)
    assert [f.loop.literals for f in findings] == [
        frozenset({lit("conflict_of_interest", "m1", "p1"), lit("bid", "m1", "p1", 0)})
    ]


def test_blocked_rule_diagnostics(patty1, e4):
    (finding,) = find_unfounded_loops(patty1, e4)
    blocked = dict(finding.blocked)
    coi = lit("conflict_of_interest", "m1", "p1")
    bid0 = lit("bid", "m1", "p1", 0)
    # the candidate deriving coi from the bid is blocked because its positive
    # body meets the loop (condition iv); the author rule fails its body (i)
    conditions = {(b.rule_index, b.condition) for b in blocked[coi]}
    assert (6, "iv") in conditions
    assert (7, "i") in conditions
    assert {(b.rule_index, b.condition) for b in blocked[bid0]} == {(8, "iv")}


def test_explain_verdicts(lucy1, s1, linus1, e3, patty1, e4):
    assert explain(lucy1, s1).verdict == "is-answer-set"
    exp = explain(linus1, e3)
    assert exp.verdict == "not-answer-set"
    assert len(exp.unsatisfied) == 1 and not exp.unfounded_loops
    assert exp.unsatisfied[0].rule_index == 10
    assert exp.unsatisfied[0].theta_dict() == {"P": Constant("p1"), "M": Constant("m2")}
    exp4 = explain(patty1, e4)
    assert exp4.verdict == "not-answer-set"
    assert len(exp4.unsatisfied) == 1 and len(exp4.unfounded_loops) == 1


def test_explanation_invariant_enforced():
    with pytest.raises(ValueError):
        Explanation(verdict="not-answer-set")


def test_first_flag_stops_early(lucy2, e1, patty1, e4):
    exp = explain(patty1, e4, first=True)
    assert len(exp.unsatisfied) <= 1 and len(exp.unfounded_loops) <= 1
    assert exp.verdict == "not-answer-set"


def test_findings_are_internally_valid(patty1, e4, lucy2, e2):
    for program, interp in ((patty1, e4), (lucy2, e2), (lucy2, e2)):
        gp = ground(program)
        graph = dep_graph(gp, interp)
        exp = explain(program, interp)
        for f in exp.unsatisfied:
            assert not satisfies_rule(interp, f.instance.rule)
        for f in exp.unfounded_loops:
            assert is_loop(f.loop.literals, graph)
            assert unfounded(f.loop.literals, gp, interp)


def test_pair_loop_unfounded_but_singletons_supported():
    # each singleton is supported by the other rule; only the pair is unfounded
    from aspdebug.parser import parse_program

    program = parse_program("a :- b. b :- a.")
    interp = Interpretation(frozenset({lit("a"), lit("b")}))
    findings = find_unfounded_loops(program, interp)
    assert [f.loop.literals for f in findings] == [frozenset({lit("a"), lit("b")})]


def test_minimal_only_is_antichain_and_covers():
    # x never holds, so {a}, {b} and the pair loop {a,b} are all unfounded
    from aspdebug.parser import parse_program

    program = parse_program("a :- b, x. b :- a, x.")
    interp = Interpretation(frozenset({lit("a"), lit("b")}))
    full = find_unfounded_loops(program, interp)
    assert {f.loop.literals for f in full} == {
        frozenset({lit("a")}),
        frozenset({lit("b")}),
        frozenset({lit("a"), lit("b")}),
    }
    minimal = find_unfounded_loops(program, interp, minimal_only=True)
    min_sets = [f.loop.literals for f in minimal]
    assert all(not (s < t or t < s) for s in min_sets for t in min_sets if s != t)
    for f in full:
        assert any(m <= f.loop.literals for m in min_sets)
    assert set(min_sets) == {frozenset({lit("a")}), frozenset({lit("b")})}


def test_budget_propagates():
    from aspdebug.parser import parse_program

    big = Interpretation(frozenset(lit("x", i) for i in range(14)))
    with pytest.raises(BudgetExceededError):
        explain(parse_program("a."), big, loop_cap=5)


def test_minimal_only_fixture_pairs(lucy2, e2, patty1, e4):
    # on the fixtures: an antichain whose members cover every unfounded loop
    for program, interp in ((lucy2, e2), (patty1, e4)):
        full = find_unfounded_loops(program, interp)
        minimal = find_unfounded_loops(program, interp, minimal_only=True)
        min_sets = [f.loop.literals for f in minimal]
        assert all(not (s < t) for s in min_sets for t in min_sets)
        for f in full:
            assert any(m <= f.loop.literals for m in min_sets)


def test_prop1_agreement_random(seed=23):
    rng = random.Random(seed)
    agree = 0
    for _ in range(150):
        program = random_program(rng)
        interp = random_interpretation(rng, program)
        exp = explain(program, interp)
        assert (exp.verdict == "is-answer-set") == is_answer_set(program, interp)
        agree += 1
    assert agree == 150
