"""Herbrand universes, substitution enumeration, builtin evaluation, ground(P).

Grounding is deliberately naive: every rule is instantiated over the full
Herbrand universe of the program, with no safety requirement.  An instance is
kept only if all of its builtins evaluate to true; builtins are then dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    ArithExpr,
    Builtin,
    Constant,
    Literal,
    Program,
    Rule,
    Term,
    apply,
    order_key,
)


@dataclass(frozen=True)
class GroundRule:
    """A ground, builtin-free instance with its provenance.

    `rule_index` is 1-based (matching the rule labels r1, r2, ...);
    `theta` lists the bindings sorted by variable name.
    """

    rule_index: int
    theta: tuple[tuple[str, Constant], ...]
    rule: Rule

    def theta_dict(self) -> dict[str, Constant]:
        return dict(self.theta)


@dataclass(frozen=True)
class GroundProgram:
    rules: tuple[GroundRule, ...]

    def __len__(self) -> int:
        return len(self.rules)


def herbrand_universe(program: Program) -> tuple[Constant, ...]:
    """The constants occurring in the program, in canonical order."""
    return program.constants()


def eval_term(t: Term) -> Optional[Constant]:
    """Reduce a ground term over the naturals; None if a sub-term is symbolic."""
    if isinstance(t, Constant):
        return t if t.is_number else t
    if isinstance(t, ArithExpr):
        lhs, rhs = eval_term(t.lhs), eval_term(t.rhs)
        if lhs is None or rhs is None or not lhs.is_number or not rhs.is_number:
            return None
        value = lhs.value + rhs.value if t.op == "+" else lhs.value * rhs.value
        return Constant(value)
    raise ValueError(f"not ground: {t}")


def eval_builtin(b: Builtin) -> bool:
    """Evaluate a ground comparison; arithmetic over a non-numeric operand is false."""
    lhs, rhs = eval_term(b.lhs), eval_term(b.rhs)
    if lhs is None or rhs is None:
        return False
    if (isinstance(b.lhs, ArithExpr) and not lhs.is_number) or (
        isinstance(b.rhs, ArithExpr) and not rhs.is_number
    ):
        return False
    ka, kb = order_key(lhs), order_key(rhs)
    if b.op == "=":
        return ka == kb
    if b.op == "!=":
        return ka != kb
    if b.op == "<":
        return ka < kb
    if b.op == "<=":
        return ka <= kb
    if b.op == ">":
        return ka > kb
    return ka >= kb


def substitutions(variables: tuple[str, ...], universe: tuple[Constant, ...]):
    """All total substitutions, in lexicographic order of the constant order."""
    if not variables:
        yield {}
        return
    for combo in itertools.product(universe, repeat=len(variables)):
        yield dict(zip(variables, combo))


def ground_rule_instances(rule: Rule, index: int, universe: tuple[Constant, ...]):
    """Ground instances of one rule that survive builtin evaluation."""
    for theta in substitutions(rule.variables(), universe):
        instance = apply(rule, theta)
        if all(eval_builtin(b) for b in instance.builtins):
            stripped = Rule(
                head=instance.head,
                pos=tuple(b for b in instance.pos if isinstance(b, Literal)),
                neg=instance.neg,
                span=rule.span,
            )
            yield GroundRule(
                rule_index=index,
                theta=tuple(sorted(theta.items())),
                rule=stripped,
            )


def ground(program: Program) -> GroundProgram:
    universe = herbrand_universe(program)
    out: list[GroundRule] = []
    for i, rule in enumerate(program.rules, start=1):
        out.extend(ground_rule_instances(rule, i, universe))
    return GroundProgram(tuple(out))


def format_ground(gp: GroundProgram) -> str:
    return "".join(str(gr.rule) + "\n" for gr in gp.rules)
