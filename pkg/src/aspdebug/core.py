"""Object language: terms, literals, rules, programs, interpretations, substitutions.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

COMPARISON_OPS = ("=", "!=", "<=", "<", ">=", ">")
ARITH_OPS = ("+", "*")


class AspError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceededError(AspError):
    """An enumeration exceeded its configured search budget."""


class UnboundVariableError(AspError):
    """A substitution is not total on the variables it is applied to."""


class InconsistentInterpretationError(AspError):
    """An interpretation contains both a literal and its strong negation."""


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Constant:
    """A ground constant: a natural number (int) or a symbolic constant (str)."""

    value: Union[int, str]

    def __post_init__(self) -> None:
        if isinstance(self.value, int) and self.value < 0:
            raise ValueError(f"natural numbers are non-negative: {self.value}")

    @property
    def is_number(self) -> bool:
        return isinstance(self.value, int)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ArithExpr:
    """Arithmetic term over two sub-terms; occurs only inside builtin comparisons."""

    op: str
    lhs: "Term"
    rhs: "Term"

    def __post_init__(self) -> None:
        if self.op not in ARITH_OPS:
            raise ValueError(f"unknown arithmetic operator: {self.op}")

    def __str__(self) -> str:
        return f"{self.lhs}{self.op}{self.rhs}"


Term = Union[Variable, Constant, ArithExpr]


@dataclass(frozen=True)
class Eps:
    """Extended predicate symbol: a predicate name, optionally strongly negated.

    Identity is the triple (name, strong_neg, arity); the same name with two
    arities yields two distinct symbols.
    """

    name: str
    strong_neg: bool = False
    arity: int = 0

    def __post_init__(self) -> None:
        if not self.name or not (self.name[0].islower() or self.name[0] == "_"):
            raise ValueError(f"predicate names start with a lowercase letter: {self.name!r}")
        if self.arity < 0:
            raise ValueError("arity is non-negative")

    def __str__(self) -> str:
        return ("-" if self.strong_neg else "") + self.name


@dataclass(frozen=True)
class Literal:
    """Atom possibly preceded by strong negation; arguments are flat terms."""

    eps: Eps
    args: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        if len(self.args) != self.eps.arity:
            raise ValueError(f"{self.eps}: expected {self.eps.arity} arguments, got {len(self.args)}")
        for a in self.args:
            if isinstance(a, ArithExpr):
                raise ValueError("arithmetic terms may occur only inside builtin comparisons")

    @property
    def is_ground(self) -> bool:
        return not any(isinstance(a, Variable) for a in self.args)

    def negated(self) -> "Literal":
        eps = Eps(self.eps.name, not self.eps.strong_neg, self.eps.arity)
        return Literal(eps, self.args)

    def __str__(self) -> str:
        if not self.args:
            return str(self.eps)
        return f"{self.eps}({','.join(str(a) for a in self.args)})"


def lit(name: str, *args: Union[Term, int, str], neg: bool = False) -> Literal:
    """Convenience constructor; bare ints/strs become constants."""
    terms = tuple(a if isinstance(a, (Variable, Constant, ArithExpr)) else Constant(a) for a in args)
    return Literal(Eps(name, neg, len(terms)), terms)


@dataclass(frozen=True)
class Builtin:
    """Comparison atom between two terms; appears only in positive rule bodies."""

    lhs: Term
    op: str
    rhs: Term

    def __post_init__(self) -> None:
        if self.op not in COMPARISON_OPS:
            raise ValueError(f"unknown comparison operator: {self.op}")

    @property
    def is_ground(self) -> bool:
        return not (_has_variable(self.lhs) or _has_variable(self.rhs))

    def __str__(self) -> str:
        return f"{self.lhs}{self.op}{self.rhs}"


def _has_variable(t: Term) -> bool:
    if isinstance(t, Variable):
        return True
    if isinstance(t, ArithExpr):
        return _has_variable(t.lhs) or _has_variable(t.rhs)
    return False


BodyElem = Union[Literal, Builtin]


@dataclass(frozen=True)
class Rule:
    """Disjunctive rule; a constraint has an empty head.

    The fully empty rule `:-.` denotes falsity; it never occurs in source
    programs but can arise when grounding drops a constraint's builtins.
    """

    head: tuple[Literal, ...] = ()
    pos: tuple[BodyElem, ...] = ()
    neg: tuple[Literal, ...] = ()
    span: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        for h in self.head:
            if isinstance(h, Builtin):
                raise ValueError("builtin comparisons may not appear in rule heads")
        for n in self.neg:
            if isinstance(n, Builtin):
                raise ValueError("builtin comparisons may not appear behind default negation")

    @property
    def pos_literals(self) -> tuple[Literal, ...]:
        return tuple(b for b in self.pos if isinstance(b, Literal))

    @property
    def builtins(self) -> tuple[Builtin, ...]:
        return tuple(b for b in self.pos if isinstance(b, Builtin))

    @property
    def is_fact(self) -> bool:
        return len(self.head) == 1 and not self.pos and not self.neg

    @property
    def is_ground(self) -> bool:
        return not self.variables()

    def literals(self) -> Iterator[Literal]:
        yield from self.head
        yield from self.pos_literals
        yield from self.neg

    def variables(self) -> tuple[str, ...]:
        """Variable names occurring anywhere in the rule, sorted."""
        seen: set[str] = set()
        for l in self.literals():
            for a in l.args:
                if isinstance(a, Variable):
                    seen.add(a.name)
        for b in self.builtins:
            seen.update(_term_variables(b.lhs))
            seen.update(_term_variables(b.rhs))
        return tuple(sorted(seen))

    def __str__(self) -> str:
        head = " | ".join(str(h) for h in self.head)
        body = ", ".join([str(b) for b in self.pos] + [f"not {n}" for n in self.neg])
        if not head and not body:
            return ":-."
        if not body:
            return f"{head}."
        if not head:
            return f":- {body}."
        return f"{head} :- {body}."


def _term_variables(t: Term) -> set[str]:
    if isinstance(t, Variable):
        return {t.name}
    if isinstance(t, ArithExpr):
        return _term_variables(t.lhs) | _term_variables(t.rhs)
    return set()


def _term_constants(t: Term) -> set[Constant]:
    if isinstance(t, Constant):
        return {t}
    if isinstance(t, ArithExpr):
        return _term_constants(t.lhs) | _term_constants(t.rhs)
    return set()


@dataclass(frozen=True)
class Program:
    """Finite list of rules; order is stable and defines the rule indices."""

    rules: tuple[Rule, ...] = ()

    def constants(self) -> tuple[Constant, ...]:
        """All constants occurring in the program, in canonical order."""
        seen: set[Constant] = set()
        for r in self.rules:
            for l in r.literals():
                for a in l.args:
                    seen.update(_term_constants(a))
            for b in r.builtins:
                seen.update(_term_constants(b.lhs))
                seen.update(_term_constants(b.rhs))
        return tuple(sorted(seen, key=order_key))

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)


@dataclass(frozen=True)
class Interpretation:
    """Finite consistent set of ground classical literals."""

    literals: frozenset[Literal] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for l in self.literals:
            if not isinstance(l, Literal):
                raise ValueError(f"not a literal: {l!r}")
            if not l.is_ground:
                raise ValueError(f"interpretations contain only ground literals: {l}")
        for l in self.literals:
            if l.negated() in self.literals:
                raise InconsistentInterpretationError(
                    f"inconsistent: contains both {l.negated()} and {l}"
                )

    @staticmethod
    def of(literals: Iterable[Literal]) -> "Interpretation":
        return Interpretation(frozenset(literals))

    def __contains__(self, l: Literal) -> bool:
        return l in self.literals

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(sorted(self.literals, key=literal_key))

    def __str__(self) -> str:
        return "{ " + ", ".join(str(l) for l in self) + " }"


Subst = Mapping[str, Constant]


def order_key(c: Constant) -> tuple:
    """Sort key realising the total constant order: numbers first, by value,
    then symbolic constants in lexicographic byte order."""
    if c.is_number:
        return (0, c.value, "")
    return (1, 0, c.value)


def compare(a: Constant, b: Constant) -> int:
    """Total order on constants: -1, 0 or 1."""
    ka, kb = order_key(a), order_key(b)
    return (ka > kb) - (ka < kb)


def literal_key(l: Literal) -> tuple:
    """Deterministic sort key for ground literals."""
    return (l.eps.name, l.eps.strong_neg, len(l.args), tuple(order_key(a) for a in l.args))


def subst_term(t: Term, theta: Subst) -> Term:
    if isinstance(t, Variable):
        if t.name not in theta:
            raise UnboundVariableError(f"substitution does not bind {t.name}")
        return theta[t.name]
    if isinstance(t, ArithExpr):
        return ArithExpr(t.op, subst_term(t.lhs, theta), subst_term(t.rhs, theta))
    return t


def subst_literal(l: Literal, theta: Subst) -> Literal:
    return Literal(l.eps, tuple(subst_term(a, theta) for a in l.args))


def apply(r: Rule, theta: Subst) -> Rule:
    """Apply a substitution to a rule; theta must be total on the rule's variables."""

    def elem(b: BodyElem) -> BodyElem:
        if isinstance(b, Builtin):
            return Builtin(subst_term(b.lhs, theta), b.op, subst_term(b.rhs, theta))
        return subst_literal(b, theta)

    return Rule(
        head=tuple(subst_literal(h, theta) for h in r.head),
        pos=tuple(elem(b) for b in r.pos),
        neg=tuple(subst_literal(n, theta) for n in r.neg),
        span=r.span,
    )
