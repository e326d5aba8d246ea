import itertools
import random

import pytest

from aspdebug.core import BudgetExceededError, Interpretation, Program, lit
from aspdebug.grounder import ground
from aspdebug.loops import DepGraph, dep_graph, is_loop, loops_within
from gen import random_interpretation, random_program


def brute_force_loops(interp, graph):
    """Oracle: check strong connectivity of every non-empty subset directly,
    using Floyd-Warshall reachability instead of the library's search."""
    lits = sorted(interp.literals, key=str)
    found = set()
    for k in range(1, len(lits) + 1):
        for combo in itertools.combinations(lits, k):
            members = set(combo)
            reach = {(a, b): a == b or (a, b) in graph.edges for a in members for b in members}
            for mid in members:
                for a in members:
                    for b in members:
                        if reach[(a, mid)] and reach[(mid, b)]:
                            reach[(a, b)] = True
            if all(reach[(a, b)] for a in members for b in members):
                found.add(frozenset(members))
    return found


def test_patty_graph_has_two_cycle(patty1, e4):
    graph = dep_graph(ground(patty1), e4)
    coi = lit("conflict_of_interest", "m1", "p1")
    bid0 = lit("bid", "m1", "p1", 0)
    assert (coi, bid0) in graph.edges
    assert (bid0, coi) in graph.edges
    # oracle: recompute the edges from the definition over ground(Q1)
    expected = {
        (h, b)
        for gr in ground(patty1).rules
        for h in gr.rule.head
        for b in gr.rule.pos_literals
    }
    assert graph.edges == frozenset(expected)


def test_empty_graph():
    graph = dep_graph(ground(Program()), Interpretation())
    assert graph.vertices == () and graph.edges == frozenset()


def test_lucy_edge_is_one_directional(lucy2, e2):
    graph = dep_graph(ground(lucy2), e2)
    sb = lit("some_bid", "m2", "p1")
    bid1 = lit("bid", "m2", "p1", 1)
    assert (sb, bid1) in graph.edges
    assert (bid1, sb) not in graph.edges


def test_singleton_is_loop():
    graph = DepGraph(vertices=(lit("a"),), edges=frozenset())
    assert is_loop({lit("a")}, graph)
    assert not is_loop(set(), graph)


def test_patty_pair_is_loop(patty1, e4):
    graph = dep_graph(ground(patty1), e4)
    assert is_loop({lit("conflict_of_interest", "m1", "p1"), lit("bid", "m1", "p1", 0)}, graph)


def test_lucy_pair_is_not_loop(lucy2, e2):
    graph = dep_graph(ground(lucy2), e2)
    assert not is_loop({lit("bid", "m2", "p1", 1), lit("some_bid", "m2", "p1")}, graph)


def test_loops_in_interpretation_without_rules():
    interp = Interpretation(frozenset({lit("a")}))
    graph = dep_graph(ground(Program()), interp)
    assert [lp.literals for lp in loops_within(interp, graph)] == [frozenset({lit("a")})]


def test_loops_within_e2_exactly_singletons(lucy2, e2):
    graph = dep_graph(ground(lucy2), e2)
    loops = loops_within(e2, graph)
    assert {lp.literals for lp in loops} == brute_force_loops(e2, graph)
    assert len(loops) == 7
    assert all(len(lp.literals) == 1 for lp in loops)


def test_loops_within_e4_has_patty_pair(patty1, e4):
    graph = dep_graph(ground(patty1), e4)
    loops = loops_within(e4, graph)
    assert {lp.literals for lp in loops} == brute_force_loops(e4, graph)
    pair = frozenset({lit("conflict_of_interest", "m1", "p1"), lit("bid", "m1", "p1", 0)})
    assert pair in {lp.literals for lp in loops}
    assert len(loops) == 8  # 7 singletons + the pair


def test_every_singleton_reported(linus1, e3):
    graph = dep_graph(ground(linus1), e3)
    loops = {lp.literals for lp in loops_within(e3, graph)}
    for l in e3.literals:
        assert frozenset({l}) in loops


def test_loops_never_span_sccs(lucy2, e2, patty1, e4):
    for program, interp in ((lucy2, e2), (patty1, e4)):
        graph = dep_graph(ground(program), interp)
        for lp in loops_within(interp, graph):
            assert is_loop(lp.literals, graph)


def test_loops_cap():
    lits = frozenset(lit("n", i) for i in range(15))
    interp = Interpretation(lits)
    graph = dep_graph(ground(Program()), interp)
    with pytest.raises(BudgetExceededError):
        loops_within(interp, graph, cap=10)


def test_random_loops_match_brute_force(seed=5):
    rng = random.Random(seed)
    for _ in range(40):
        program = random_program(rng)
        interp = random_interpretation(rng, program, max_size=6)
        graph = dep_graph(ground(program), interp)
        got = {lp.literals for lp in loops_within(interp, graph)}
        assert got == brute_force_loops(interp, graph)
