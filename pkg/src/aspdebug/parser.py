"""Parsing of program files and interpretation files.

Surface syntax: `:-` for the arrow, `|` for disjunction, `not` for default
negation, a `-` prefix for strong negation, `%` comments, rules end with `.`.
Comparisons use the ASCII operators `=`, `!=`, `<=`, `<`, `>=`, `>`;
`+` and `*` build arithmetic terms inside comparisons.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Optional

from .core import (
    ArithExpr,
    Builtin,
    Constant,
    Eps,
    InconsistentInterpretationError,
    Interpretation,
    Literal,
    Program,
    Rule,
    Term,
    Variable,
)

ERROR_KINDS = (
    "syntax",
    "builtin-in-head",
    "builtin-in-negative-body",
    "inconsistent-interpretation",
    "builtin-in-interpretation",
    "arity-clash-warning",
)


class ParseError(Exception):
    """Parse failure with a source position and an error kind."""

    def __init__(self, message: str, line: int, col: int, kind: str = "syntax"):
        super().__init__(f"{line}:{col}: {kind}: {message}")
        self.message = message
        self.line = line
        self.col = col
        self.kind = kind


class ParseWarning(UserWarning):
    """Non-fatal parse diagnostics, e.g. arity clashes."""

    def __init__(self, message: str, line: int, col: int, kind: str):
        super().__init__(f"{line}:{col}: {kind}: {message}")
        self.line = line
        self.col = col
        self.kind = kind


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<num>\d+)
  | (?P<ident>[a-z_][A-Za-z0-9_]*)
  | (?P<var>[A-Z][A-Za-z0-9_]*)
  | (?P<arrow>:-)
  | (?P<op>!=|<=|>=|=|<|>)
  | (?P<punct>[().,|+*\-{}])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, linestart = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - linestart + 1)
        kind = m.lastgroup or "ws"
        raw = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, raw, pos, line, pos - linestart + 1))
        line += raw.count("\n")
        if "\n" in raw:
            linestart = pos + raw.rindex("\n") + 1
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> Optional[Token]:
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def next(self) -> Token:
        t = self.peek()
        if t is None:
            line = self.text.count("\n") + 1
            raise ParseError("unexpected end of input", line, 1)
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text!r}", t.line, t.col)
        return t

    def error(self, message: str, kind: str = "syntax") -> ParseError:
        t = self.peek()
        if t is None:
            return ParseError(message, self.text.count("\n") + 1, 1, kind)
        return ParseError(message, t.line, t.col, kind)

    # --- terms -------------------------------------------------------------

    def parse_atomic_term(self) -> Term:
        t = self.next()
        if t.kind == "num":
            return Constant(int(t.text))
        if t.kind == "ident":
            return Constant(t.text)
        if t.kind == "var":
            return Variable(t.text)
        raise ParseError(f"expected a term, found {t.text!r}", t.line, t.col)

    def parse_term(self) -> Term:
        # '*' binds tighter than '+'; both left-associative
        left = self.parse_mul_term()
        while (t := self.peek()) is not None and t.text == "+":
            self.next()
            left = ArithExpr("+", left, self.parse_mul_term())
        return left

    def parse_mul_term(self) -> Term:
        left = self.parse_atomic_term()
        while (t := self.peek()) is not None and t.text == "*":
            self.next()
            left = ArithExpr("*", left, self.parse_atomic_term())
        return left

    # --- literals and builtins ----------------------------------------------

    def parse_literal(self) -> Literal:
        strong_neg = False
        t = self.peek()
        if t is not None and t.text == "-":
            self.next()
            strong_neg = True
            t = self.peek()
        if t is None or t.kind != "ident":
            raise self.error("expected a predicate name")
        name = self.next().text
        args: list[Term] = []
        nxt = self.peek()
        if nxt is not None and nxt.text == "(":
            self.next()
            args.append(self.parse_literal_arg())
            while self.peek() is not None and self.peek().text == ",":
                self.next()
                args.append(self.parse_literal_arg())
            self.expect(")")
        return Literal(Eps(name, strong_neg, len(args)), tuple(args))

    def parse_literal_arg(self) -> Term:
        term = self.parse_term()
        if isinstance(term, ArithExpr):
            raise self.error("arithmetic terms may occur only inside comparisons")
        return term

    def looks_like_builtin(self) -> bool:
        """A comparison operator occurs before the element ends at paren depth 0."""
        depth = 0
        j = self.i
        while j < len(self.tokens):
            t = self.tokens[j]
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                if depth == 0:
                    return False
                depth -= 1
            elif depth == 0:
                if t.kind == "op":
                    return True
                if t.text in (",", ".", "|") or t.kind == "arrow":
                    return False
            j += 1
        return False

    def parse_builtin(self) -> Builtin:
        lhs = self.parse_term()
        t = self.next()
        if t.kind != "op":
            raise ParseError(f"expected a comparison operator, found {t.text!r}", t.line, t.col)
        rhs = self.parse_term()
        return Builtin(lhs, t.text, rhs)

    # --- rules ----------------------------------------------------------------

    def parse_rule(self) -> Rule:
        start_tok = self.peek()
        assert start_tok is not None
        start = start_tok.pos
        head: list[Literal] = []
        pos: list = []
        neg: list[Literal] = []

        if start_tok.kind != "arrow":
            head.append(self.parse_head_elem())
            while self.peek() is not None and self.peek().text == "|":
                self.next()
                head.append(self.parse_head_elem())

        t = self.peek()
        if t is not None and t.kind == "arrow":
            self.next()
            nt = self.peek()
            empty_falsity = not head and nt is not None and nt.text == "."
            while not empty_falsity:
                t = self.peek()
                if t is None:
                    raise self.error("unterminated rule body")
                if t.text == "not":
                    nt = t
                    self.next()
                    if self.looks_like_builtin():
                        raise ParseError(
                            "builtin comparisons may not appear behind 'not'",
                            nt.line,
                            nt.col,
                            "builtin-in-negative-body",
                        )
                    neg.append(self.parse_literal())
                elif self.looks_like_builtin():
                    pos.append(self.parse_builtin())
                else:
                    pos.append(self.parse_literal())
                t = self.peek()
                if t is not None and t.text == ",":
                    self.next()
                    continue
                break
        end_tok = self.expect(".")
        end = end_tok.pos + 1
        try:
            return Rule(head=tuple(head), pos=tuple(pos), neg=tuple(neg), span=(start, end))
        except ValueError as e:
            raise ParseError(str(e), start_tok.line, start_tok.col) from e

    def parse_head_elem(self) -> Literal:
        if self.looks_like_builtin():
            raise self.error("builtin comparisons may not appear in rule heads", "builtin-in-head")
        return self.parse_literal()

    def parse_program(self) -> Program:
        rules: list[Rule] = []
        while self.peek() is not None:
            rules.append(self.parse_rule())
        program = Program(tuple(rules))
        _warn_arity_clashes(program, self.text)
        return program

    # --- interpretations -------------------------------------------------------

    def parse_ground_literal(self) -> Literal:
        tok = self.peek()
        if tok is not None and self.looks_like_builtin():
            raise ParseError(
                "interpretations contain no builtin atoms",
                tok.line,
                tok.col,
                "builtin-in-interpretation",
            )
        lit = self.parse_literal()
        if not lit.is_ground:
            raise ParseError(f"literal is not ground: {lit}", tok.line, tok.col)
        return lit

    def parse_interpretation(self) -> Interpretation:
        literals: list[Literal] = []
        first = self.peek()
        braced = first is not None and first.text == "{"
        if braced:
            self.next()
        while True:
            t = self.peek()
            if t is None:
                break
            if t.text == "}":
                self.next()
                break
            literals.append(self.parse_ground_literal())
            t = self.peek()
            if t is not None and t.text in (",", "."):
                self.next()
        if self.peek() is not None:
            raise self.error("trailing input after interpretation")
        try:
            return Interpretation(frozenset(literals))
        except InconsistentInterpretationError as e:
            raise ParseError(str(e), 1, 1, "inconsistent-interpretation") from e


def _warn_arity_clashes(program: Program, text: str) -> None:
    seen: dict[tuple[str, bool], set[int]] = {}
    for r in program.rules:
        for l in r.literals():
            seen.setdefault((l.eps.name, l.eps.strong_neg), set()).add(l.eps.arity)
    for (name, sneg), arities in sorted(seen.items()):
        if len(arities) > 1:
            shown = ("-" if sneg else "") + name
            warnings.warn(
                ParseWarning(
                    f"predicate {shown} used with arities {sorted(arities)}; "
                    "treated as distinct predicate symbols",
                    1,
                    1,
                    "arity-clash-warning",
                )
            )


def parse_program(text: str) -> Program:
    return _Parser(text).parse_program()


def parse_interpretation(text: str) -> Interpretation:
    return _Parser(text).parse_interpretation()


def format_program(program: Program) -> str:
    return "".join(str(r) + "\n" for r in program.rules)


def format_interpretation(interp: Interpretation) -> str:
    return str(interp) + "\n"
