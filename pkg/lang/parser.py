"""
Parser - tokenizer and precedence-climbing parser for spec files

Grammar:
    spec    := adt* csr* goal
    adt     := "Inductive" UName "=" ctor ("|" ctor)* ";"
    csr     := "Let" LName param+ "=" "match" LName "with" branch+ "end" ";"
    goal    := "Goal" param* "." expr "=" expr ";"
Equations on their own are written "forall param* . expr = expr".
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from lang.canonical import RawBranch, RawCsr, canonicalize_csr
from lang.errors import DuplicateName, SpecSyntaxError
from lang.syntax import (
    AdtDef, BoolConst, BuiltinApp, CsrApp, CtorApp, CtorDef, Equation, IntConst,
    Ite, Spec, Term, Type, Var,
)
from lang.typecheck import typecheck

logger = logging.getLogger(__name__)

# Groups of increasing binding power; all binary operators are left-associative.
OPERATORS = [
    ["||"],
    ["&&"],
    ["<=", "<", "=="],
    ["+", "-"],
    ["*"],
]
OPERATOR_PREC = {op: idx + 1 for idx, group in enumerate(OPERATORS) for op in group}

KEYWORDS = {
    "Inductive", "Let", "match", "with", "end", "Goal", "forall",
    "if", "then", "else", "true", "false",
}

TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>--[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>->|→|<=|≤|==|&&|\|\||[=<+\-*!()|:;.])
    """,
    re.VERBOSE,
)
ALIASES = {"→": "->", "≤": "<="}


@dataclass(frozen=True)
class Token:
    kind: str  # int | name | sym | eof
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = TOKEN_RE.match(source, pos)
        if m is None:
            raise SpecSyntaxError(f"unexpected character {source[pos]!r}", (line, pos - line_start + 1))
        kind = m.lastgroup
        text = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, ALIASES.get(text, text), line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


def _declared_names(tokens: list[Token]) -> tuple[set[str], set[str]]:
    """Pre-scan constructor and CSR names so bodies may refer forward"""
    ctors: set[str] = set()
    csrs: set[str] = set()
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.text == "Let" and tokens[i + 1].kind == "name":
            csrs.add(tokens[i + 1].text)
        elif tok.text == "Inductive":
            j = i + 2
            while j < len(tokens) and tokens[j].text not in (";", "eof"):
                if tokens[j].text in ("=", "|") and tokens[j + 1].kind == "name":
                    ctors.add(tokens[j + 1].text)
                j += 1
            i = j
        i += 1
    return ctors, csrs


class Parser:
    def __init__(self, tokens: list[Token], ctors: set[str], csrs: set[str]):
        self.tokens = tokens
        self.pos = 0
        self.ctors = ctors
        self.csrs = csrs

    # ---- token stream -----------------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> SpecSyntaxError:
        tok = tok or self.peek()
        found = tok.text or "end of input"
        return SpecSyntaxError(f"{message} (found {found!r})", (tok.line, tok.col))

    def expect(self, text: str) -> Token:
        if self.peek().text != text:
            raise self.error(f"expected {text!r}")
        return self.advance()

    def lname(self) -> str:
        tok = self.peek()
        if tok.kind != "name" or not (tok.text[0].islower() or tok.text[0] == "_") or tok.text in KEYWORDS:
            raise self.error("expected a lowercase identifier")
        return self.advance().text

    def uname(self) -> str:
        tok = self.peek()
        if tok.kind != "name" or not tok.text[0].isupper() or tok.text in KEYWORDS:
            raise self.error("expected a type name")
        return self.advance().text

    # ---- declarations -----------------------------------------------------

    def parse_document(self) -> tuple[list[AdtDef], list[RawCsr], Equation]:
        adts: list[AdtDef] = []
        csrs: list[RawCsr] = []
        goal: Equation | None = None
        while self.peek().kind != "eof":
            head = self.peek().text
            if head == "Inductive":
                adts.append(self.parse_adt())
            elif head == "Let":
                csrs.append(self.parse_csr())
            elif head == "Goal":
                if goal is not None:
                    raise self.error("only one Goal is allowed")
                self.advance()
                goal = self.parse_quantified()
                self.expect(";")
            else:
                raise self.error("expected Inductive, Let or Goal")
        if goal is None:
            raise self.error("missing Goal")
        return adts, csrs, goal

    def parse_type(self) -> Type:
        return Type(self.uname())

    def parse_adt(self) -> AdtDef:
        self.expect("Inductive")
        name = self.uname()
        self.expect("=")
        ctors = [self.parse_ctor()]
        while self.peek().text == "|":
            self.advance()
            ctors.append(self.parse_ctor())
        self.expect(";")
        return AdtDef(name, tuple(ctors))

    def parse_ctor(self) -> CtorDef:
        name = self.lname()
        fields: list[Type] = []
        while self.peek().kind == "name" and self.peek().text[0].isupper():
            fields.append(self.parse_type())
        return CtorDef(name, tuple(fields))

    def parse_param(self) -> tuple[str, Type]:
        self.expect("(")
        name = self.lname()
        self.expect(":")
        type_ = self.parse_type()
        self.expect(")")
        return name, type_

    def parse_csr(self) -> RawCsr:
        start = self.expect("Let")
        name = self.lname()
        params = []
        while self.peek().text == "(":
            params.append(self.parse_param())
        if not params:
            raise self.error(f"{name} needs at least one parameter")
        self.expect("=")
        self.expect("match")
        match_var = self.lname()
        self.expect("with")
        branches = []
        while self.peek().text == "|":
            self.advance()
            ctor_tok = self.peek()
            ctor = self.lname()
            binders = []
            while self.peek().text != "->":
                binders.append(self.lname())
            self.advance()
            branches.append(RawBranch(ctor, tuple(binders), self.parse_expr(), (ctor_tok.line, ctor_tok.col)))
        if not branches:
            raise self.error("expected a match branch")
        self.expect("end")
        self.expect(";")
        return RawCsr(name, tuple(params), match_var, tuple(branches), (start.line, start.col))

    def parse_quantified(self) -> Equation:
        """param* "." expr "=" expr"""
        binders = []
        while self.peek().text == "(":
            binders.append(self.parse_param())
        self.expect(".")
        lhs = self.parse_expr()
        self.expect("=")
        rhs = self.parse_expr()
        names = [b[0] for b in binders]
        for n in names:
            if names.count(n) > 1:
                raise DuplicateName(n, "binder")
        return Equation(tuple(binders), lhs, rhs)

    # ---- expressions ------------------------------------------------------

    def parse_expr(self, min_prec: int = 0) -> Term:
        left = self.parse_unary()
        while True:
            op = self.peek().text
            prec = OPERATOR_PREC.get(op) if self.peek().kind == "sym" else None
            if prec is None or prec < min_prec:
                return left
            self.advance()
            right = self.parse_expr(prec + 1)
            left = BuiltinApp(op, (left, right))

    def parse_unary(self) -> Term:
        tok = self.peek()
        if tok.text == "if":
            self.advance()
            cond = self.parse_expr()
            self.expect("then")
            then_branch = self.parse_expr()
            self.expect("else")
            return Ite(cond, then_branch, self.parse_expr())
        if tok.kind == "name" and tok.text not in KEYWORDS and (tok.text in self.ctors or tok.text in self.csrs):
            self.advance()
            args = []
            while self.starts_atom():
                args.append(self.parse_atom())
            if tok.text in self.ctors:
                return CtorApp(tok.text, tuple(args))
            return CsrApp(tok.text, tuple(args))
        atom = self.parse_atom()
        if isinstance(atom, Var) and self.starts_atom():
            raise self.error(f"{atom.name} is not a function")
        return atom

    def starts_atom(self) -> bool:
        tok = self.peek()
        if tok.kind == "int":
            return True
        if tok.kind == "name":
            return tok.text in ("true", "false") or (tok.text not in KEYWORDS and not tok.text[0].isupper())
        return tok.text in ("(", "!")

    def parse_atom(self) -> Term:
        tok = self.advance()
        if tok.kind == "int":
            return IntConst(int(tok.text))
        if tok.text == "true":
            return BoolConst(True)
        if tok.text == "false":
            return BoolConst(False)
        if tok.text == "!":
            return BuiltinApp("!", (self.parse_atom(),))
        if tok.text == "(":
            if self.peek().text == "-" and self.peek(1).kind == "int" and self.peek(2).text == ")":
                self.advance()
                value = -int(self.advance().text)
                self.advance()
                return IntConst(value)
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if tok.kind == "name" and tok.text not in KEYWORDS and not tok.text[0].isupper():
            if tok.text in self.ctors:
                return CtorApp(tok.text, ())
            if tok.text in self.csrs:
                return CsrApp(tok.text, ())
            return Var(tok.text)
        raise self.error("expected an expression", tok)


def parse_spec(text: str) -> Spec:
    """Parse, canonicalize and typecheck a spec file's contents"""
    tokens = tokenize(text)
    ctors, csrs = _declared_names(tokens)
    adts, raw_csrs, goal = Parser(tokens, ctors, csrs).parse_document()
    adt_map = {a.name: a for a in adts}
    canonical = tuple(canonicalize_csr(raw, adt_map) for raw in raw_csrs)
    spec = typecheck(Spec(tuple(adts), canonical, goal))
    logger.debug("parsed spec with %d ADTs and %d CSRs", len(spec.adts), len(spec.csrs))
    return spec


def _parser_for(text: str, spec: Spec) -> Parser:
    return Parser(tokenize(text), set(spec.ctor_map), set(spec.csr_map))


def parse_term(text: str, spec: Spec) -> Term:
    parser = _parser_for(text, spec)
    term = parser.parse_expr()
    if parser.peek().kind != "eof":
        raise parser.error("unexpected trailing input")
    return term


def parse_equation(text: str, spec: Spec) -> Equation:
    """Parse "forall (x: T) ... . lhs = rhs" against the names of spec"""
    parser = _parser_for(text, spec)
    parser.expect("forall")
    eq = parser.parse_quantified()
    if parser.peek().kind != "eof":
        raise parser.error("unexpected trailing input")
    return eq
