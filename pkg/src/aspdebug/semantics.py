"""Classical satisfaction, Gelfond-Lifschitz reduct, and a brute-force
answer-set oracle and enumerator for desk-scale programs.

`is_answer_set` checks minimality literally, over all proper subsets of I.
`enumerate_answer_sets` guesses the truth of the (derivably relevant)
negative-body atoms, enumerates the minimal models of each induced reduct by
branching over disjunctive rule applications, and keeps the self-consistent
candidates.  Every step is bounded by an explicit search budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import (
    BudgetExceededError,
    Interpretation,
    Literal,
    Program,
    Rule,
    literal_key,
)
from .grounder import GroundProgram, ground

DEFAULT_BUDGET = 2**20


class _Budget:
    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise BudgetExceededError(
                "search budget exceeded; the candidate space is too large for the brute-force oracle"
            )


@dataclass(frozen=True)
class Reduct:
    """Negation-free ground rules left after removing rules blocked by I."""

    rules: tuple[Rule, ...]


def satisfies_rule(interp: Interpretation, rule: Rule) -> bool:
    """I |= r for a ground, builtin-free rule."""
    if rule.builtins:
        raise ValueError("satisfaction is defined on builtin-free ground rules")
    if not rule.is_ground:
        raise ValueError(f"rule is not ground: {rule}")
    body_holds = all(b in interp for b in rule.pos_literals) and not any(
        n in interp for n in rule.neg
    )
    return not body_holds or any(h in interp for h in rule.head)


def satisfies_program(interp: Interpretation, gp: GroundProgram) -> bool:
    return all(satisfies_rule(interp, gr.rule) for gr in gp.rules)


def reduct(gp: GroundProgram, interp: Interpretation) -> Reduct:
    """P^I: drop rules whose negative body meets I, strip negation from the rest."""
    kept = [
        Rule(head=gr.rule.head, pos=gr.rule.pos, neg=(), span=gr.rule.span)
        for gr in gp.rules
        if not any(n in interp for n in gr.rule.neg)
    ]
    return Reduct(tuple(kept))


def _models_reduct(lits: frozenset[Literal], rules: Sequence[Rule]) -> bool:
    for r in rules:
        pos = set(r.pos_literals)
        if pos <= lits and not any(h in lits for h in r.head):
            return False
    return True


def is_answer_set(program: Program, interp: Interpretation, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff I is a minimal model of the reduct of ground(P) w.r.t. I.

    Minimality is checked by brute force over all proper subsets of I.
    """
    gp = ground(program)
    if not satisfies_program(interp, gp):
        return False
    red = reduct(gp, interp).rules

    lits = sorted(interp.literals, key=literal_key)
    n = len(lits)
    if n and 2**n > budget:
        raise BudgetExceededError(f"minimality check over 2^{n} subsets exceeds the budget")
    index = {l: i for i, l in enumerate(lits)}

    # bitmask encoding; rules whose positive body leaves I can never fire in a subset
    checks: list[tuple[int, int]] = []
    for r in red:
        pos_mask = 0
        applicable = True
        for b in r.pos_literals:
            if b not in index:
                applicable = False
                break
            pos_mask |= 1 << index[b]
        if not applicable:
            continue
        head_mask = 0
        for h in r.head:
            if h in index:
                head_mask |= 1 << index[h]
        checks.append((pos_mask, head_mask))

    for sub in range((1 << n) - 1):
        ok = True
        for pos_mask, head_mask in checks:
            if pos_mask & ~sub == 0 and head_mask & sub == 0:
                ok = False
                break
        if ok:
            return False
    return True


def _derivable(rules: Sequence[Rule]) -> frozenset[Literal]:
    """Least fixpoint of head literals reachable when default negation is ignored."""
    known: set[Literal] = set()
    changed = True
    while changed:
        changed = False
        for r in rules:
            if not r.head:
                continue
            if all(b in known for b in r.pos_literals):
                for h in r.head:
                    if h not in known:
                        known.add(h)
                        changed = True
    return frozenset(known)


def _minimal_models(rules: Sequence[Rule], budget: _Budget) -> list[frozenset[Literal]]:
    """All minimal models of a positive ground disjunctive program.

    Branch-and-close: fire rules whose body holds, branching over the head
    disjuncts; constraints kill a branch.  Every minimal model appears among
    the leaves; non-minimal leaves are filtered at the end.
    """

    leaves: list[frozenset[Literal]] = []
    stack: list[frozenset[Literal]] = [frozenset()]
    compiled = [(frozenset(r.pos_literals), tuple(r.head)) for r in rules]

    while stack:
        budget.spend()
        state = stack.pop()
        fire: Optional[tuple[frozenset, tuple]] = None
        dead = False
        for pos, head in compiled:
            if pos <= state and not any(h in state for h in head):
                if not head:
                    dead = True
                    break
                if fire is None or len(head) < len(fire[1]):
                    fire = (pos, head)
                    if len(head) == 1:
                        break
        if dead:
            continue
        if fire is None:
            leaves.append(state)
            continue
        for h in fire[1]:
            stack.append(state | {h})

    unique = set(leaves)
    return sorted(
        (s for s in unique if not any(t < s for t in unique)),
        key=lambda s: tuple(sorted(literal_key(l) for l in s)),
    )


def _consistent(lits: frozenset[Literal]) -> bool:
    return not any(l.negated() in lits for l in lits)


def enumerate_answer_sets(
    program: Program,
    base: Optional[Iterable[Literal]] = None,
    limit: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> list[Interpretation]:
    """All answer sets of the program, in a deterministic order.

    `base`, when given, restricts the reported answer sets to subsets of it;
    by default every literal of ground(P) is admissible.
    """
    gp = ground(program)
    rules = [gr.rule for gr in gp.rules]
    tracker = _Budget(budget)

    candidates = _derivable(rules)
    neg_atoms = sorted(
        {n for r in rules for n in r.neg if n in candidates}, key=literal_key
    )
    if neg_atoms and 2 ** len(neg_atoms) > tracker.remaining:
        raise BudgetExceededError(
            f"guessing 2^{len(neg_atoms)} negative-atom combinations exceeds the budget"
        )
    base_set = frozenset(base) if base is not None else None
    neg_set = frozenset(neg_atoms)

    found: list[frozenset[Literal]] = []
    for mask in range(1 << len(neg_atoms)):
        tracker.spend()
        guess = frozenset(neg_atoms[i] for i in range(len(neg_atoms)) if mask >> i & 1)
        red = [
            Rule(head=r.head, pos=r.pos, neg=())
            for r in rules
            if not any(n in guess for n in r.neg)
        ]
        for model in _minimal_models(red, tracker):
            if model & neg_set != guess:
                continue
            if not _consistent(model):
                continue
            if base_set is not None and not model <= base_set:
                continue
            found.append(model)

    found.sort(key=lambda s: (len(s), tuple(sorted(literal_key(l) for l in s))))
    if limit is not None:
        found = found[:limit]
    return [Interpretation(s) for s in found]
