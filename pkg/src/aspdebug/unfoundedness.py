"""External support and unfoundedness of a literal set J relative to P and I.

A ground rule r externally supports J w.r.t. I when
  (i)   I |= B+(r) and I and B-(r) are disjoint,
  (ii)  H(r) meets J,
  (iii) the head literals outside J are all false under I,
  (iv)  B+(r) avoids J.
J is unfounded when no rule of ground(P) satisfies all four conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Constant, Interpretation, Literal
from .grounder import GroundProgram, GroundRule

CONDITIONS = ("i", "ii", "iii", "iv")


@dataclass(frozen=True)
class SupportWitness:
    rule_index: int
    theta: tuple[tuple[str, Constant], ...]
    instance: GroundRule


def violated_condition(gr: GroundRule, j: frozenset[Literal], interp: Interpretation) -> Optional[str]:
    """The first external-support condition the instance violates, or None."""
    rule = gr.rule
    if not all(b in interp for b in rule.pos_literals) or any(n in interp for n in rule.neg):
        return "i"
    if not any(h in j for h in rule.head):
        return "ii"
    if any(h in interp for h in rule.head if h not in j):
        return "iii"
    if any(b in j for b in rule.pos_literals):
        return "iv"
    return None


def externally_supported(
    j: Iterable[Literal], gp: GroundProgram, interp: Interpretation
) -> Optional[SupportWitness]:
    """First witness in (rule index, theta) order, or None when J is unfounded."""
    for w in support_witnesses(j, gp, interp):
        return w
    return None


def support_witnesses(
    j: Iterable[Literal], gp: GroundProgram, interp: Interpretation
) -> Iterable[SupportWitness]:
    j_set = frozenset(j)
    if not j_set:
        raise ValueError("external support is defined for non-empty sets")
    for gr in gp.rules:
        if violated_condition(gr, j_set, interp) is None:
            yield SupportWitness(rule_index=gr.rule_index, theta=gr.theta, instance=gr)


def unfounded(j: Iterable[Literal], gp: GroundProgram, interp: Interpretation) -> bool:
    return externally_supported(j, gp, interp) is None
