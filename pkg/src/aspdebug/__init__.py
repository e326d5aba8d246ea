"""Debugger for non-ground disjunctive answer-set programs.

Explains why an interpretation I is not an answer set of a program P by
reporting unsatisfied rule instances (with witnessing substitutions) and
unfounded loops contained in I, and emits the meta-programming encoding
for cross-validation with an external ASP solver.
"""

from .core import (
    ArithExpr,
    AspError,
    BudgetExceededError,
    Builtin,
    Constant,
    Eps,
    InconsistentInterpretationError,
    Interpretation,
    Literal,
    Program,
    Rule,
    UnboundVariableError,
    Variable,
    apply,
    compare,
    lit,
)
from .explainer import Explanation, UnfoundedLoopFinding, UnsatisfiedFinding, explain
from .grounder import GroundProgram, GroundRule, eval_builtin, ground, herbrand_universe
from .loops import DepGraph, Loop, dep_graph, is_loop, loops_within
from .parser import ParseError, ParseWarning, parse_interpretation, parse_program
from .semantics import Reduct, enumerate_answer_sets, is_answer_set, reduct, satisfies_rule
from .unfoundedness import SupportWitness, externally_supported, unfounded

__version__ = "0.1.0"

__all__ = [
    "ArithExpr",
    "AspError",
    "BudgetExceededError",
    "Builtin",
    "Constant",
    "DepGraph",
    "Eps",
    "Explanation",
    "GroundProgram",
    "GroundRule",
    "InconsistentInterpretationError",
    "Interpretation",
    "Literal",
    "Loop",
    "ParseError",
    "ParseWarning",
    "Program",
    "Reduct",
    "Rule",
    "SupportWitness",
    "UnboundVariableError",
    "UnfoundedLoopFinding",
    "UnsatisfiedFinding",
    "Variable",
    "apply",
    "compare",
    "dep_graph",
    "enumerate_answer_sets",
    "eval_builtin",
    "explain",
    "externally_supported",
    "ground",
    "herbrand_universe",
    "is_answer_set",
    "is_loop",
    "lit",
    "loops_within",
    "parse_interpretation",
    "parse_program",
    "reduct",
    "satisfies_rule",
    "unfounded",
]
