"""Concrete syntax for formulas.

Grammar (whitespace-insensitive; "->" is right-associative, precedence
from loosest to tightest: <->, ->, |, &, unary):

    formula := iff
    iff     := imp ("<->" imp)*
    imp     := or ("->" imp)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "[]" unary | "<>" unary | primary
    primary := "true" | "false" | atom | guard | "(" formula ")"
    atom    := "Y_" runname
    runname := "Mo" | "Tu" | "We" | "Th" | "Fr" | "none"
    guard   := "T" ("="|"!="|"<="|">="|"<"|">") runname
             | "T" "in" "{" runname ("," runname)* "}"
             | "D"

Guards are part of the grammar, not a preprocessing pass, so error
positions stay accurate. Every guard desugars to the canonical run-set
disjunction (see ``formula.chi``); repeated "|"/"&"/"<->" nest to the
right, matching the canonical nesting of those disjunctions.
"""

from __future__ import annotations

import re
from typing import Mapping

from .formula import (
    BOT,
    TOP,
    And,
    Atom,
    Box,
    Diamond,
    Formula,
    Iff,
    Implies,
    Neg,
    Or,
    any_day,
    chi,
)
from .runs import RUNS, Run


class ParseError(ValueError):
    """Syntax error with a 1-based character position."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


_TOKEN_RE = re.compile(
    r"\s*(<->|->|<=|>=|!=|\[\]|<>|[(){},|&!=<>]|[A-Za-z_][A-Za-z0-9_]*)"
)

_COMPARISONS = {"=", "!=", "<=", ">=", "<", ">"}
_KEYWORDS = {"true", "false", "T", "D", "in"}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            column = len(text) - len(stripped) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", column)
        tokens.append((match.group(1), match.start(1) + 1))
        pos = match.end()
    return tokens


def parse(text: str, macros: Mapping[str, Formula] | None = None) -> Formula:
    """Parse ``text`` into a formula.

    ``macros`` maps extra identifiers to formulas; a macro name used in
    the input stands for its (already desugared) formula.
    """
    parser = _Parser(_tokenize(text), len(text) + 1, macros or {})
    phi = parser.formula()
    parser.expect_end()
    return phi


class _Parser:
    def __init__(self, tokens: list[tuple[str, int]], end_column: int,
                 macros: Mapping[str, Formula]):
        self.tokens = tokens
        self.pos = 0
        self.end_column = end_column
        self.macros = macros

    def peek(self) -> str | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def column(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return self.end_column

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", self.end_column)
        self.pos += 1
        return token

    def expect(self, token: str) -> None:
        found = self.peek()
        if found != token:
            what = "end of input" if found is None else repr(found)
            raise ParseError(f"expected {token!r}, found {what}", self.column())
        self.pos += 1

    def expect_end(self) -> None:
        if self.peek() is not None:
            raise ParseError(f"unexpected trailing input {self.peek()!r}",
                             self.column())

    def formula(self) -> Formula:
        return self._iff()

    def _iff(self) -> Formula:
        lhs = self._imp()
        if self.peek() == "<->":
            self.take()
            return Iff(lhs, self._iff())
        return lhs

    def _imp(self) -> Formula:
        lhs = self._or()
        if self.peek() == "->":
            self.take()
            return Implies(lhs, self._imp())
        return lhs

    def _or(self) -> Formula:
        lhs = self._and()
        if self.peek() == "|":
            self.take()
            return Or(lhs, self._or())
        return lhs

    def _and(self) -> Formula:
        lhs = self._unary()
        if self.peek() == "&":
            self.take()
            return And(lhs, self._and())
        return lhs

    def _unary(self) -> Formula:
        token = self.peek()
        if token == "!":
            self.take()
            return Neg(self._unary())
        if token == "[]":
            self.take()
            return Box(self._unary())
        if token == "<>":
            self.take()
            return Diamond(self._unary())
        return self._primary()

    def _primary(self) -> Formula:
        token = self.peek()
        if token is None:
            raise ParseError("expected a formula, found end of input",
                             self.end_column)
        if token == "true":
            self.take()
            return TOP
        if token == "false":
            self.take()
            return BOT
        if token == "(":
            self.take()
            phi = self.formula()
            self.expect(")")
            return phi
        if token == "D":
            self.take()
            return any_day()
        if token == "T":
            self.take()
            return self._guard()
        if token.startswith("Y_"):
            column = self.column()
            self.take()
            label = token[2:]
            try:
                return Atom(Run.from_label(label))
            except ValueError:
                raise ParseError(f"unknown run name {label!r}", column) from None
        if token in self.macros:
            self.take()
            return self.macros[token]
        raise ParseError(f"expected a formula, found {token!r}", self.column())

    def _guard(self) -> Formula:
        op = self.peek()
        if op == "in":
            self.take()
            self.expect("{")
            members = {self._runname()}
            while self.peek() == ",":
                self.take()
                members.add(self._runname())
            self.expect("}")
            return chi(members)
        if op in _COMPARISONS:
            self.take()
            r = self._runname()
            if op == "=":
                members = {r}
            elif op == "!=":
                members = {s for s in RUNS if s != r}
            elif op == "<=":
                members = {s for s in RUNS if s <= r}
            elif op == ">=":
                members = {s for s in RUNS if s >= r}
            elif op == "<":
                members = {s for s in RUNS if s < r}
            else:
                members = {s for s in RUNS if s > r}
            return chi(members)
        what = "end of input" if op is None else repr(op)
        raise ParseError(f"expected a comparison or 'in' after 'T', found {what}",
                         self.column())

    def _runname(self) -> Run:
        token = self.peek()
        column = self.column()
        if token is None or not token[0].isalpha():
            what = "end of input" if token is None else repr(token)
            raise ParseError(f"expected a run name, found {what}", column)
        self.take()
        try:
            return Run.from_label(token)
        except ValueError:
            raise ParseError(f"unknown run name {token!r}", column) from None
