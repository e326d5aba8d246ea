"""The native debugging engine: why is I not an answer set of P?

Two finding kinds cover every failure: rule instances not satisfied by I,
and loops contained in I that are unfounded by P w.r.t. I.  The verdict is
`is-answer-set` exactly when both lists are empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Constant, Interpretation, Literal, Program
from .grounder import GroundProgram, GroundRule, ground
from .loops import Loop, dep_graph, loops_within, DEFAULT_LOOP_CAP
from .semantics import satisfies_rule
from .unfoundedness import unfounded, violated_condition


@dataclass(frozen=True)
class UnsatisfiedFinding:
    rule_index: int
    theta: tuple[tuple[str, Constant], ...]
    instance: GroundRule
    span: tuple[int, int]

    def theta_dict(self) -> dict[str, Constant]:
        return dict(self.theta)


@dataclass(frozen=True)
class BlockedRule:
    """A candidate supporting instance and the support condition it violates."""

    rule_index: int
    theta: tuple[tuple[str, Constant], ...]
    instance: GroundRule
    condition: str


@dataclass(frozen=True)
class UnfoundedLoopFinding:
    loop: Loop
    blocked: tuple[tuple[Literal, tuple[BlockedRule, ...]], ...] = ()


@dataclass(frozen=True)
class Explanation:
    verdict: str
    unsatisfied: tuple[UnsatisfiedFinding, ...] = ()
    unfounded_loops: tuple[UnfoundedLoopFinding, ...] = ()

    def __post_init__(self) -> None:
        empty = not self.unsatisfied and not self.unfounded_loops
        expected = "is-answer-set" if empty else "not-answer-set"
        if self.verdict != expected:
            raise ValueError(f"verdict {self.verdict!r} contradicts the findings")


def find_unsatisfied(
    program: Program,
    interp: Interpretation,
    gp: Optional[GroundProgram] = None,
    first: bool = False,
) -> tuple[UnsatisfiedFinding, ...]:
    """All (rule, substitution) pairs whose instance I does not satisfy."""
    gp = gp if gp is not None else ground(program)
    found: list[UnsatisfiedFinding] = []
    for gr in gp.rules:
        if not satisfies_rule(interp, gr.rule):
            span = program.rules[gr.rule_index - 1].span
            found.append(
                UnsatisfiedFinding(
                    rule_index=gr.rule_index, theta=gr.theta, instance=gr, span=span
                )
            )
            if first:
                break
    return tuple(found)


def _blocked_rules(
    loop: Loop, gp: GroundProgram, interp: Interpretation
) -> tuple[tuple[Literal, tuple[BlockedRule, ...]], ...]:
    """Per loop literal: candidate head rules and the condition each violates."""
    per_literal: list[tuple[Literal, tuple[BlockedRule, ...]]] = []
    for l in loop.sorted_literals():
        blocked: list[BlockedRule] = []
        for gr in gp.rules:
            if l not in gr.rule.head:
                continue
            cond = violated_condition(gr, loop.literals, interp)
            if cond is not None:
                blocked.append(
                    BlockedRule(
                        rule_index=gr.rule_index,
                        theta=gr.theta,
                        instance=gr,
                        condition=cond,
                    )
                )
        per_literal.append((l, tuple(blocked)))
    return tuple(per_literal)


def find_unfounded_loops(
    program: Program,
    interp: Interpretation,
    minimal_only: bool = False,
    gp: Optional[GroundProgram] = None,
    first: bool = False,
    loop_cap: int = DEFAULT_LOOP_CAP,
) -> tuple[UnfoundedLoopFinding, ...]:
    """All loops of P contained in I that are unfounded by P w.r.t. I."""
    gp = gp if gp is not None else ground(program)
    graph = dep_graph(gp, interp)
    found: list[UnfoundedLoopFinding] = []
    for loop in loops_within(interp, graph, cap=loop_cap):
        if unfounded(loop.literals, gp, interp):
            found.append(
                UnfoundedLoopFinding(loop=loop, blocked=_blocked_rules(loop, gp, interp))
            )
            if first and not minimal_only:
                break
    if minimal_only:
        minimal = [
            f
            for f in found
            if not any(
                g.loop.literals < f.loop.literals for g in found
            )
        ]
        found = minimal[:1] if first else minimal
    return tuple(found)


def explain(
    program: Program,
    interp: Interpretation,
    minimal_only: bool = False,
    first: bool = False,
    loop_cap: int = DEFAULT_LOOP_CAP,
) -> Explanation:
    """Combined explanation; the verdict is is-answer-set iff nothing was found."""
    gp = ground(program)
    unsat = find_unsatisfied(program, interp, gp=gp, first=first)
    loops = find_unfounded_loops(
        program, interp, minimal_only=minimal_only, gp=gp, first=first, loop_cap=loop_cap
    )
    verdict = "is-answer-set" if not unsat and not loops else "not-answer-set"
    return Explanation(verdict=verdict, unsatisfied=unsat, unfounded_loops=loops)


def _subst_json(theta) -> dict:
    return {var: const.value for var, const in theta}


def explanation_payload(program: Program, explanation: Explanation) -> dict:
    """The frozen JSON shape shared by the CLI and the HTTP API."""
    return {
        "verdict": explanation.verdict,
        "unsatisfied": [
            {
                "rule_index": f.rule_index,
                "rule": str(program.rules[f.rule_index - 1]),
                "span": {"start": f.span[0], "end": f.span[1]},
                "substitution": _subst_json(f.theta),
                "instance": str(f.instance.rule),
            }
            for f in explanation.unsatisfied
        ],
        "unfounded_loops": [
            {
                "literals": [str(l) for l in f.loop.sorted_literals()],
                "blocked": [
                    {
                        "literal": str(l),
                        "candidates": [
                            {
                                "rule_index": b.rule_index,
                                "substitution": _subst_json(b.theta),
                                "instance": str(b.instance.rule),
                                "violated": b.condition,
                            }
                            for b in candidates
                        ],
                    }
                    for l, candidates in f.blocked
                ],
            }
            for f in explanation.unfounded_loops
        ],
    }
