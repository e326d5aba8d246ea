"""Reification of a program and an interpretation as ground facts.

Rules become `rule/1`, `head/2`, `posbody/2`, `negbody/2`, `pred/2`,
`struct/4` and `var/2` facts; the program adds `dom/1` and `arity/2`; the
interpretation adds `int/1` facts; `natNumber/1` supplies 0..N with N the
maximum of |I| and the predicate arities of P.  Constants name themselves;
everything else receives a label from a reserved namespace:

    r<k>      rules, in file order
    l<k>      literals and builtin atoms, interned by printed form
    p_<name>  predicate symbols         n_<name>  strongly negated ones
    v_<Name>  variables

Programs with comparison builtins additionally emit `cmp/3` relation facts
over the program constants plus `plus/3` and `times/3` tables over the
natNumber range; builtin atoms are reified like literals under the reserved
symbols b_eq, b_neq, b_leq, b_lt, b_geq, b_gt.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .core import (
    AspError,
    Builtin,
    Constant,
    Eps,
    Interpretation,
    Literal,
    Program,
    Rule,
    Term,
    Variable,
    literal_key,
    order_key,
)

BUILTIN_EPS_LABELS = {
    "=": "b_eq",
    "!=": "b_neq",
    "<=": "b_leq",
    "<": "b_lt",
    ">=": "b_geq",
    ">": "b_gt",
}
CMP_OP_NAMES = {
    "=": "eq",
    "!=": "neq",
    "<=": "leq",
    "<": "lt",
    ">=": "geq",
    ">": "gt",
}


class LabelCollisionError(AspError):
    """A constant of the input collides with a generated label."""


class ReifyError(AspError):
    """The input is outside the reifiable fragment."""


Arg = Union[str, int]


@dataclass(frozen=True)
class ReifiedFact:
    name: str
    args: tuple[Arg, ...]

    def __str__(self) -> str:
        return f"{self.name}({','.join(str(a) for a in self.args)})."

    def sort_key(self) -> tuple:
        return (self.name, tuple((0, a, "") if isinstance(a, int) else (1, 0, a) for a in self.args))


def fact(name: str, *args: Arg) -> ReifiedFact:
    return ReifiedFact(name, tuple(args))


@dataclass
class Labels:
    """Injective labelling of rules, literals, predicate symbols and variables."""

    rule_labels: dict[int, str] = field(default_factory=dict)
    literal_labels: dict[str, str] = field(default_factory=dict)
    eps_labels: dict[Eps, str] = field(default_factory=dict)
    var_labels: dict[str, str] = field(default_factory=dict)
    literal_by_label: dict[str, Union[Literal, Builtin]] = field(default_factory=dict)

    def rule(self, index: int) -> str:
        return self.rule_labels[index]

    def literal(self, l: Union[Literal, Builtin]) -> str:
        return self.literal_labels[str(l)]

    def eps(self, e: Eps) -> str:
        return self.eps_labels[e]

    def var(self, name: str) -> str:
        return self.var_labels[name]

    def rule_index_of(self, label: str) -> int:
        for idx, lab in self.rule_labels.items():
            if lab == label:
                return idx
        raise KeyError(label)

    def var_name_of(self, label: str) -> str:
        for name, lab in self.var_labels.items():
            if lab == label:
                return name
        raise KeyError(label)


def _eps_of_builtin(b: Builtin) -> str:
    return BUILTIN_EPS_LABELS[b.op]


def _intern_literal(labels: Labels, l: Union[Literal, Builtin]) -> str:
    key = str(l)
    if key not in labels.literal_labels:
        label = f"l{len(labels.literal_labels) + 1}"
        labels.literal_labels[key] = label
        labels.literal_by_label[label] = l
    return labels.literal_labels[key]


def labels(program: Program, interp: Interpretation) -> Labels:
    """Build the shared label table for a program/interpretation pair."""
    table = Labels()
    for i in range(1, len(program.rules) + 1):
        table.rule_labels[i] = f"r{i}"

    arities: dict[tuple[str, bool], set[int]] = {}
    all_literals: list[Literal] = []
    for r in program.rules:
        all_literals.extend(r.literals())
    all_literals.extend(sorted(interp.literals, key=literal_key))
    for l in all_literals:
        arities.setdefault((l.eps.name, l.eps.strong_neg), set()).add(l.eps.arity)

    for r in program.rules:
        for l in r.literals():
            _intern_literal(table, l)
        for b in r.builtins:
            _intern_literal(table, b)
        for v in r.variables():
            table.var_labels.setdefault(v, f"v_{v}")
    for l in sorted(interp.literals, key=literal_key):
        _intern_literal(table, l)

    for l in all_literals:
        e = l.eps
        if e in table.eps_labels:
            continue
        prefix = "n_" if e.strong_neg else "p_"
        if len(arities[(e.name, e.strong_neg)]) > 1:
            table.eps_labels[e] = f"{prefix}{e.name}_{e.arity}"
        else:
            table.eps_labels[e] = f"{prefix}{e.name}"

    _assert_injective(table, program, interp)
    return table


def _assert_injective(table: Labels, program: Program, interp: Interpretation) -> None:
    generated: list[str] = (
        list(table.rule_labels.values())
        + list(table.literal_labels.values())
        + list(table.eps_labels.values())
        + list(table.var_labels.values())
    )
    if len(set(generated)) != len(generated):
        raise LabelCollisionError("duplicate generated label")
    constants = {str(c) for c in program.constants()} | {
        str(a) for l in interp.literals for a in l.args
    }
    clash = constants & set(generated)
    if clash:
        raise LabelCollisionError(
            f"constants collide with generated labels: {sorted(clash)}"
        )


def _term_args(l: Union[Literal, Builtin]) -> tuple[Term, ...]:
    if isinstance(l, Builtin):
        return (l.lhs, l.rhs)
    return l.args


def _struct_facts(label: str, l: Union[Literal, Builtin], table: Labels) -> set[ReifiedFact]:
    out: set[ReifiedFact] = set()
    for i, t in enumerate(_term_args(l), start=1):
        if isinstance(t, Variable):
            out.add(fact("struct", label, i, "var", table.var(t.name)))
        elif isinstance(t, Constant):
            out.add(fact("struct", label, i, "const", t.value))
        else:
            raise ReifyError(
                f"arithmetic term {t} cannot be reified; "
                "the meta path supports plain variables and constants only"
            )
    return out


def reify_rule(rule: Rule, table: Labels, index: int) -> frozenset[ReifiedFact]:
    """The fact families for one rule: rule/head/posbody/negbody/pred/struct/var."""
    r = table.rule(index)
    out: set[ReifiedFact] = {fact("rule", r)}
    for h in rule.head:
        out.add(fact("head", r, table.literal(h)))
    for b in rule.pos:
        out.add(fact("posbody", r, table.literal(b)))
    for n in rule.neg:
        out.add(fact("negbody", r, table.literal(n)))
    for l in rule.literals():
        label = table.literal(l)
        out.add(fact("pred", label, table.eps(l.eps)))
        out.update(_struct_facts(label, l, table))
    for b in rule.builtins:
        label = table.literal(b)
        out.add(fact("pred", label, _eps_of_builtin(b)))
        out.update(_struct_facts(label, b, table))
    for v in rule.variables():
        out.add(fact("var", r, table.var(v)))
    return frozenset(out)


def reify_program(program: Program, table: Labels) -> frozenset[ReifiedFact]:
    """Union of the rule reifications plus dom/1 and arity/2 facts."""
    out: set[ReifiedFact] = set()
    for i, rule in enumerate(program.rules, start=1):
        out.update(reify_rule(rule, table, i))
    for c in program.constants():
        out.add(fact("dom", c.value))
    for rule in program.rules:
        for l in rule.literals():
            out.add(fact("arity", table.eps(l.eps), l.eps.arity))
    return frozenset(out)


def reify_interpretation(interp: Interpretation, table: Labels) -> frozenset[ReifiedFact]:
    """int/1, pred/2 and struct/4 facts for every literal of I."""
    out: set[ReifiedFact] = set()
    for l in interp.literals:
        label = table.literal(l)
        out.add(fact("int", label))
        out.add(fact("pred", label, table.eps(l.eps)))
        out.update(_struct_facts(label, l, table))
    return frozenset(out)


def nat_bound(program: Program, interp: Interpretation) -> int:
    arities = [l.eps.arity for r in program.rules for l in r.literals()]
    return max([len(interp)] + arities, default=0)


def _builtin_support_facts(program: Program, interp: Interpretation) -> set[ReifiedFact]:
    out: set[ReifiedFact] = set()
    dom = program.constants()
    for a in dom:
        for b in dom:
            ka, kb = order_key(a), order_key(b)
            out.add(fact("cmp", "eq" if ka == kb else "neq", a.value, b.value))
            if ka < kb:
                out.update({fact("cmp", "lt", a.value, b.value), fact("cmp", "leq", a.value, b.value)})
            elif ka > kb:
                out.update({fact("cmp", "gt", a.value, b.value), fact("cmp", "geq", a.value, b.value)})
            else:
                out.update({fact("cmp", "leq", a.value, b.value), fact("cmp", "geq", a.value, b.value)})
    n = nat_bound(program, interp)
    for a in range(n + 1):
        for b in range(n + 1):
            if a + b <= n:
                out.add(fact("plus", a, b, a + b))
            if a * b <= n:
                out.add(fact("times", a, b, a * b))
    return out


def reify_input(
    program: Program, interp: Interpretation, table: Optional[Labels] = None
) -> frozenset[ReifiedFact]:
    """The full instance encoding: program and interpretation reifications plus
    the natNumber range, and the comparison tables when builtins occur."""
    table = table if table is not None else labels(program, interp)
    out = set(reify_program(program, table)) | set(reify_interpretation(interp, table))
    for n in range(nat_bound(program, interp) + 1):
        out.add(fact("natNumber", n))
    if any(r.builtins for r in program.rules):
        out.update(_builtin_support_facts(program, interp))
    return frozenset(out)


def format_facts(facts: frozenset[ReifiedFact]) -> str:
    return "".join(str(f) + "\n" for f in sorted(facts, key=ReifiedFact.sort_key))
