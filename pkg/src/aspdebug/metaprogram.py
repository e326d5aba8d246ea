"""The fixed meta-program for answer-set debugging, and the solver bridge.

Joined with the reified instance facts, the meta-program has an answer set
exactly when I is not an answer set of P; its answer sets carry the findings:

    unsatisfied, guessRule/1, subst/2   -- an unsatisfied rule instance
    isLoop, unfounded, inLoop/1         -- an unfounded loop inside I

The guess/check modules follow the published figures; the auxiliary modules
(true/false evaluation, loop size and mismatch tables, order chains and the
five failed-support conditions) are reconstructed here and validated against
the native engine.  Two reconstruction notes, both load-bearing:

* The rule-instance guess uses 2*|L| index slots rather than |L|.  A loop on
  n literals may need up to 2n-2 witnessing edges (two node-disjoint
  arborescences), and single-edge rules then need more than n instances, so
  the n-slot guess cannot witness every loop.
* Degenerate-input guards: with no guessed rule (empty program) the body
  satisfaction check would fire vacuously, and with no rules at all the
  per-rule unsupportedness chain can never close; `noGuess` and `hasRule`
  cover those cases.

No solver is bundled: `run_meta` and `cross_check` need a command template
(`--solver-cmd` or the ASPDEBUG_SOLVER environment variable) for a
disjunctive-capable ASP solver, e.g. "clingo --models={models} {file}".
"""

from __future__ import annotations

import os
import re
import shlex
import subprocess
import tempfile
from dataclasses import dataclass
from typing import Optional

from .core import AspError, Interpretation, Program
from .explainer import Explanation, explain
from .reifier import Labels, format_facts, labels, reify_input

UNSAT_GUESS = """\
guessRule(R) | nguessRule(R) :- rule(R).
someRule :- guessRule(R).
:- not someRule, rule(R).
:- guessRule(R1), guessRule(R2), R1 != R2.
subst(X,C) | nsubst(X,C) :- guessRule(R), var(R,X), dom(C).
assigned(X) :- subst(X,C).
:- not assigned(X), guessRule(R), var(R,X).
:- subst(X,C1), subst(X,C2), C1 != C2.
"""

UNSAT_CHECK = """\
unsatisfied :- satBody, not satHead.
satBody :- not unsatPosbody, not unsatNegbody.
satHead :- guessRule(R), head(R,A), true(A).
unsatPosbody :- guessRule(R), posbody(R,A), false(A).
unsatNegbody :- guessRule(R), negbody(R,A), true(A).
"""

UNSAT_AUX = """\
litOfGuessed(A) :- guessRule(R), head(R,A).
litOfGuessed(A) :- guessRule(R), posbody(R,A).
litOfGuessed(A) :- guessRule(R), negbody(R,A).
builtinPred(b_eq). builtinPred(b_neq). builtinPred(b_leq).
builtinPred(b_lt). builtinPred(b_geq). builtinPred(b_gt).
cmpOp(b_eq,eq). cmpOp(b_neq,neq). cmpOp(b_leq,leq).
cmpOp(b_lt,lt). cmpOp(b_geq,geq). cmpOp(b_gt,gt).
cmpNegOp(b_eq,neq). cmpNegOp(b_neq,eq). cmpNegOp(b_leq,gt).
cmpNegOp(b_lt,geq). cmpNegOp(b_geq,lt). cmpNegOp(b_gt,leq).
uVal(A,I,C) :- litOfGuessed(A), struct(A,I,const,C).
uVal(A,I,C) :- litOfGuessed(A), struct(A,I,var,X), subst(X,C).
uAgree(A,B,0) :- litOfGuessed(A), int(B), pred(A,T), pred(B,T).
uAgree(A,B,I2) :- uAgree(A,B,I1), natNumber(I1), natNumber(I2), I2 = I1+1, uVal(A,I2,C), struct(B,I2,const,C).
true(A) :- uAgree(A,B,N), pred(A,T), arity(T,N).
true(A) :- litOfGuessed(A), pred(A,OP), cmpOp(OP,CMP), uVal(A,1,C1), uVal(A,2,C2), cmp(CMP,C1,C2).
false(A) :- litOfGuessed(A), not true(A).
noGuess :- not someRule.
unsatPosbody :- noGuess.
"""

LOOP_GUESS = """\
inLoop(X) | outLoop(X) :- int(X).
someInLoop :- inLoop(X).
:- not someInLoop, int(X).
"""

LOOP_CHECK = """\
inRuleSet(N,R) | outRuleSet(N,R) :- slot(N), rule(R).
someRule(N) :- inRuleSet(N,R).
:- not someRule(N), slot(N), rule(R).
:- inRuleSet(N,R1), inRuleSet(N,R2), R1 != R2.
:- inRuleSet(N1,R1), inRuleSet(N2,R2), N1 <= N2, R1 > R2.
loopSubst(N,X,C) | nloopSubst(N,X,C) :- var(R,X), dom(C), inRuleSet(N,R).
loopAssigned(N,X) :- loopSubst(N,X,C).
:- not loopAssigned(N,X), inRuleSet(N,R), var(R,X).
:- loopSubst(N,X,C1), loopSubst(N,X,C2), C1 != C2.
isLoop :- not unreachablePair, inLoop(X).
unreachablePair :- inLoop(X), inLoop(Y), not path(X,Y).
path(X,X) :- inLoop(X).
path(X,Y) :- inLoop(X), inLoop(Y), pred(X,T1), pred(Y,T2), slot(N), head(R,H), inRuleSet(N,R), posbody(R,B), pred(H,T1), pred(B,T2), not differSeq(N,X,H), not differSeq(N,Y,B).
path(X,Z) :- inLoop(X), inLoop(Z), path(X,Y), path(Y,Z).
"""

LOOP_AUX = """\
intLt(X,Y) :- int(X), int(Y), X < Y.
intBetween(X,Z) :- intLt(X,Y), intLt(Y,Z).
intSucc(X,Y) :- intLt(X,Y), not intBetween(X,Y).
intHasPred(Y) :- intLt(X,Y).
intFirst(X) :- int(X), not intHasPred(X).
intHasSucc(X) :- intLt(X,Y).
intLast(X) :- int(X), not intHasSucc(X).
loopCnt(X,1) :- intFirst(X), inLoop(X).
loopCnt(X,0) :- intFirst(X), outLoop(X).
loopCnt(Y,K) :- intSucc(X,Y), loopCnt(X,K), outLoop(Y).
loopCnt(Y,K2) :- intSucc(X,Y), loopCnt(X,K1), inLoop(Y), natNumber(K1), natNumber(K2), K2 = K1+1.
loopSz(K) :- intLast(X), loopCnt(X,K).
slot(J) :- loopSz(S), natNumber(K), 1 <= K, K <= S, J = 2*K.
slot(J) :- loopSz(S), natNumber(K), 1 <= K, K <= S, J2 = 2*K, J = J2+1.
litOfRule(R,A) :- head(R,A).
litOfRule(R,A) :- posbody(R,A).
litOfRule(R,A) :- negbody(R,A).
lVal(N,A,I,C) :- inRuleSet(N,R), litOfRule(R,A), struct(A,I,const,C).
lVal(N,A,I,C) :- inRuleSet(N,R), litOfRule(R,A), struct(A,I,var,X), loopSubst(N,X,C).
lIntVal(A,I,C) :- int(A), struct(A,I,const,C).
differSeq(N,A,B) :- lIntVal(A,I,C1), lVal(N,B,I,C2), C1 != C2.
differSeq(N,A,B) :- int(A), inRuleSet(N,R), litOfRule(R,B), pred(A,T1), pred(B,T2), T1 != T2.
"""

SUPPORT_GUESS = """\
variable(X) :- var(R,X).
suppSubst(X,C) | nsuppSubst(X,C) :- variable(X), dom(C).
saturate :- suppSubst(X,C1), suppSubst(X,C2), C1 != C2.
saturate :- unassigned(X).
unass(X,C) :- first(C), nsuppSubst(X,C).
unass(X,C2) :- succ(C1,C2), unass(X,C1), nsuppSubst(X,C2).
unassigned(X) :- last(C), unass(X,C).
"""

SUPPORT_CHECK = """\
unfounded :- unsupp(R), lastR(R).
unsupp(R) :- firstR(R), unsuppRule(R).
unsupp(R2) :- succR(R1,R2), unsupp(R1), unsuppRule(R2).
saturate :- unfounded.
suppSubst(X,C) :- variable(X), dom(C), saturate.
nsuppSubst(X,C) :- variable(X), dom(C), saturate.
unsuppRule(R) :- c1(R).
unsuppRule(R) :- c2(R).
unsuppRule(R) :- c3(R).
unsuppRule(R) :- c4(R).
unsuppRule(R) :- c5(R).
"""

SUPPORT_AUX = """\
domLt(C1,C2) :- dom(C1), dom(C2), C1 < C2.
domBetween(C1,C3) :- domLt(C1,C2), domLt(C2,C3).
succ(C1,C2) :- domLt(C1,C2), not domBetween(C1,C2).
domHasPred(C) :- domLt(C1,C).
first(C) :- dom(C), not domHasPred(C).
domHasSucc(C) :- domLt(C,C1).
last(C) :- dom(C), not domHasSucc(C).
ruleLt(R1,R2) :- rule(R1), rule(R2), R1 < R2.
ruleBetween(R1,R3) :- ruleLt(R1,R2), ruleLt(R2,R3).
succR(R1,R2) :- ruleLt(R1,R2), not ruleBetween(R1,R2).
ruleHasPred(R) :- ruleLt(R1,R).
firstR(R) :- rule(R), not ruleHasPred(R).
ruleHasSucc(R) :- ruleLt(R,R1).
lastR(R) :- rule(R), not ruleHasSucc(R).
intLt(X,Y) :- int(X), int(Y), X < Y.
intBetween(X,Z) :- intLt(X,Y), intLt(Y,Z).
intSucc(X,Y) :- intLt(X,Y), not intBetween(X,Y).
intHasPred(Y) :- intLt(X,Y).
intFirst(X) :- int(X), not intHasPred(X).
intHasSucc(X) :- intLt(X,Y).
intLast(X) :- int(X), not intHasSucc(X).
pLit(A) :- head(R,A).
pLit(A) :- posbody(R,A).
pLit(A) :- negbody(R,A).
plainLit(A) :- pLit(A), pred(A,T), not builtinPred(T).
sVal(A,I,C) :- pLit(A), struct(A,I,const,C).
sVal(A,I,C) :- pLit(A), struct(A,I,var,X), suppSubst(X,C).
sAgree(A,B,0) :- plainLit(A), int(B), pred(A,T), pred(B,T).
sAgree(A,B,I2) :- sAgree(A,B,I1), natNumber(I1), natNumber(I2), I2 = I1+1, sVal(A,I2,C), struct(B,I2,const,C).
sEqual(A,B) :- sAgree(A,B,N), pred(A,T), arity(T,N).
sDiff(A,B) :- plainLit(A), int(B), pred(A,T1), pred(B,T2), T1 != T2.
sDiff(A,B) :- plainLit(A), int(B), sVal(A,I,C1), struct(B,I,const,C2), C1 != C2.
inInt(A) :- sEqual(A,B).
sDiffUpTo(A,B) :- intFirst(B), sDiff(A,B).
sDiffUpTo(A,B2) :- intSucc(B1,B2), sDiffUpTo(A,B1), sDiff(A,B2).
notInInt(A) :- intLast(B), sDiffUpTo(A,B).
hasInt :- int(B).
noInt :- not hasInt.
notInInt(A) :- plainLit(A), noInt.
outJ(B) :- int(B), not inLoop(B).
notInLoop(A) :- sEqual(A,B), outJ(B).
notInLoop(A) :- notInInt(A).
c1(R) :- posbody(R,A), plainLit(A), notInInt(A).
c1(R) :- posbody(R,A), pred(A,OP), cmpNegOp(OP,CMP), sVal(A,1,C1), sVal(A,2,C2), cmp(CMP,C1,C2).
c2(R) :- negbody(R,A), inInt(A).
hLt(R,A,B) :- head(R,A), head(R,B), A < B.
hBetween(R,A,C) :- hLt(R,A,B), hLt(R,B,C).
hSucc(R,A,B) :- hLt(R,A,B), not hBetween(R,A,B).
hHasPred(R,A) :- hLt(R,B,A).
hFirst(R,A) :- head(R,A), not hHasPred(R,A).
hHasSucc(R,A) :- hLt(R,A,B).
hLast(R,A) :- head(R,A), not hHasSucc(R,A).
hasHead(R) :- head(R,A).
c3UpTo(R,A) :- hFirst(R,A), notInLoop(A).
c3UpTo(R,B) :- hSucc(R,A,B), c3UpTo(R,A), notInLoop(B).
c3(R) :- hLast(R,A), c3UpTo(R,A).
c3(R) :- rule(R), not hasHead(R).
c4(R) :- head(R,A), sEqual(A,B), outJ(B).
c5(R) :- posbody(R,A), sEqual(A,B), inLoop(B).
hasRule :- rule(R).
hasJ :- inLoop(X).
unfounded :- hasJ, not hasRule.
"""

CONS = """\
notAnswerSet :- unsatisfied.
notAnswerSet :- isLoop, unfounded.
:- not notAnswerSet.
"""


@dataclass(frozen=True)
class GammaModule:
    name: str
    text: str


GAMMA_MODULES: tuple[GammaModule, ...] = (
    GammaModule("UNSAT_guess", UNSAT_GUESS),
    GammaModule("UNSAT_check", UNSAT_CHECK),
    GammaModule("UNSAT_aux", UNSAT_AUX),
    GammaModule("LOOP_guess", LOOP_GUESS),
    GammaModule("LOOP_check", LOOP_CHECK),
    GammaModule("LOOP_aux", LOOP_AUX),
    GammaModule("SUPPORT_guess", SUPPORT_GUESS),
    GammaModule("SUPPORT_check", SUPPORT_CHECK),
    GammaModule("SUPPORT_aux", SUPPORT_AUX),
    GammaModule("CONS", CONS),
)


def gamma() -> tuple[GammaModule, ...]:
    """The fixed meta-program, independent of any instance."""
    return GAMMA_MODULES


def gamma_text() -> str:
    parts = [f"% --- {m.name} ---\n{m.text}" for m in GAMMA_MODULES]
    return "\n".join(parts)


class SolverNotConfiguredError(AspError):
    """No external ASP solver command is configured."""


class SolverError(AspError):
    def __init__(self, message: str, stdout: str = "", stderr: str = ""):
        super().__init__(message)
        self.stdout = stdout
        self.stderr = stderr


class BuiltinsNotSupportedError(AspError):
    """The meta path runs builtin-free programs unless explicitly allowed."""


@dataclass(frozen=True)
class MetaAtom:
    name: str
    args: tuple[str, ...] = ()

    def __str__(self) -> str:
        return self.name if not self.args else f"{self.name}({','.join(self.args)})"


MetaAnswerSet = frozenset  # of MetaAtom


def emit_debug_program(
    program: Program, interp: Interpretation, path: Optional[str] = None
) -> str:
    """Concatenation of the meta-program and the reified instance facts."""
    text = gamma_text() + "\n% --- instance facts ---\n" + format_facts(reify_input(program, interp))
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


_ATOM_RE = re.compile(r"(-?[a-z_][A-Za-z0-9_]*)(\(([^()]*)\))?$")


def _parse_atom(token: str) -> Optional[MetaAtom]:
    m = _ATOM_RE.match(token)
    if not m:
        return None
    args = tuple(a.strip() for a in m.group(3).split(",")) if m.group(3) else ()
    return MetaAtom(m.group(1), args)


def parse_answer_sets(stdout: str) -> list[frozenset]:
    """Answer sets from solver output: lines of space-separated ground atoms.

    Lines following a clingo-style `Answer: k` marker are preferred; without
    markers, every line consisting entirely of atoms counts.
    """
    lines = stdout.splitlines()
    marked = [i + 1 for i, line in enumerate(lines) if re.match(r"^Answer:\s*\d+", line)]
    candidates = (
        [lines[i] for i in marked if i < len(lines)]
        if marked
        else [l for l in lines if l.strip()]
    )
    out = []
    for line in candidates:
        tokens = line.split()
        atoms = [_parse_atom(t) for t in tokens]
        if atoms and all(a is not None for a in atoms):
            out.append(frozenset(atoms))
        elif not tokens and marked:
            out.append(frozenset())
    return out


def resolve_solver_cmd(solver_cmd: Optional[str]) -> str:
    cmd = solver_cmd or os.environ.get("ASPDEBUG_SOLVER", "")
    if not cmd:
        raise SolverNotConfiguredError(
            "no solver configured; pass --solver-cmd or set ASPDEBUG_SOLVER, "
            'e.g. "clingo --models={models} {file}"'
        )
    return cmd


def run_meta(
    program: Program,
    interp: Interpretation,
    solver_cmd: Optional[str] = None,
    models: int = 1,
    extra: str = "",
    allow_builtins: bool = False,
) -> list[frozenset]:
    """Answer sets of the meta-program joined with the reified instance.

    `models` limits enumeration (0 = all); `extra` appends query-side rules.
    """
    cmd = resolve_solver_cmd(solver_cmd)
    if not allow_builtins and any(r.builtins for r in program.rules):
        raise BuiltinsNotSupportedError(
            "the program contains builtin comparisons; the meta path treats the "
            "loop check only approximately for those (pass allow_builtins=True to override)"
        )
    text = emit_debug_program(program, interp)
    if extra:
        text += "\n% --- query ---\n" + extra
    with tempfile.NamedTemporaryFile("w", suffix=".lp", delete=False) as fh:
        fh.write(text)
        path = fh.name
    try:
        if "{file}" in cmd:
            rendered = cmd.replace("{models}", str(models)).replace("{file}", path)
            argv = shlex.split(rendered)
        else:
            argv = shlex.split(cmd.replace("{models}", str(models))) + [path]
        proc = subprocess.run(argv, capture_output=True, text=True, timeout=300)
    finally:
        os.unlink(path)
    # clingo exit codes: 10 sat, 20 unsat, 30 sat+exhausted
    if proc.returncode not in (0, 10, 20, 30):
        raise SolverError(
            f"solver failed with exit code {proc.returncode}",
            stdout=proc.stdout,
            stderr=proc.stderr,
        )
    return parse_answer_sets(proc.stdout)


@dataclass(frozen=True)
class CrossCheckReport:
    agree: bool
    native_verdict: str
    meta_verdict: str
    mismatches: tuple[str, ...]
    solver_calls: int


def _force_unsat_query(table: Labels, rule_index: int, theta) -> str:
    lines = [":- not unsatisfied.", f":- not guessRule({table.rule(rule_index)})."]
    for var, const in theta:
        lines.append(f":- not subst({table.var(var)},{const.value}).")
    return "\n".join(lines) + "\n"

def _block_unsat(table: Labels, findings) -> str:
    lines = []
    for f in findings:
        atoms = [f"guessRule({table.rule(f.rule_index)})"] + [
            f"subst({table.var(v)},{c.value})" for v, c in f.theta
        ]
        lines.append(":- " + ", ".join(atoms) + ".")
    return "\n".join(lines) + ("\n" if lines else "")


def _force_loop_query(table: Labels, interp: Interpretation, loop_literals) -> str:
    lines = [":- not isLoop.", ":- not unfounded."]
    for l in sorted(loop_literals, key=str):
        lines.append(f":- not inLoop({table.literal(l)}).")
    for l in sorted(interp.literals - frozenset(loop_literals), key=str):
        lines.append(f":- inLoop({table.literal(l)}).")
    return "\n".join(lines) + "\n"


def _block_loops(table: Labels, interp: Interpretation, loops) -> str:
    lines = []
    for i, loop_literals in enumerate(loops, start=1):
        name = f"xchkDiff{i}"
        for l in sorted(loop_literals, key=str):
            lines.append(f"{name} :- outLoop({table.literal(l)}).")
        for l in sorted(interp.literals - frozenset(loop_literals), key=str):
            lines.append(f"{name} :- inLoop({table.literal(l)}).")
        lines.append(f":- not {name}.")
    return "\n".join(lines) + ("\n" if lines else "")


def cross_check(
    program: Program,
    interp: Interpretation,
    solver_cmd: Optional[str] = None,
    native: Optional[Explanation] = None,
) -> CrossCheckReport:
    """Compare the meta-program's findings with the native explainer.

    Full enumeration of the meta answer sets is intractable (every supporting
    substitution of every loop guess yields its own answer set), so agreement
    is established by targeted satisfiability queries: one per native finding
    (the finding must be witnessed by some meta answer set) and one blocking
    query per finding kind (no meta answer set may witness anything else).
    """
    cmd = resolve_solver_cmd(solver_cmd)
    native = native if native is not None else explain(program, interp)
    table = labels(program, interp)
    mismatches: list[str] = []
    calls = 0

    def sat(extra: str) -> bool:
        nonlocal calls
        calls += 1
        return bool(run_meta(program, interp, cmd, models=1, extra=extra))

    meta_not_answer_set = sat("")
    meta_verdict = "not-answer-set" if meta_not_answer_set else "is-answer-set"
    if meta_verdict != native.verdict:
        mismatches.append(
            f"verdict: native {native.verdict}, meta {meta_verdict}"
        )

    for f in native.unsatisfied:
        if not sat(_force_unsat_query(table, f.rule_index, f.theta)):
            mismatches.append(
                f"meta misses unsatisfied instance (r{f.rule_index}, {dict(f.theta)})"
            )
    if sat(":- not unsatisfied.\n" + _block_unsat(table, native.unsatisfied)):
        mismatches.append("meta reports an unsatisfied instance unknown to the native engine")

    native_loops = [f.loop.literals for f in native.unfounded_loops]
    for loop_literals in native_loops:
        if not sat(_force_loop_query(table, interp, loop_literals)):
            mismatches.append(
                "meta misses unfounded loop {" + ", ".join(sorted(str(l) for l in loop_literals)) + "}"
            )
    if sat(
        ":- not isLoop.\n:- not unfounded.\n" + _block_loops(table, interp, native_loops)
    ):
        mismatches.append("meta reports an unfounded loop unknown to the native engine")

    return CrossCheckReport(
        agree=not mismatches,
        native_verdict=native.verdict,
        meta_verdict=meta_verdict,
        mismatches=tuple(mismatches),
        solver_calls=calls,
    )
