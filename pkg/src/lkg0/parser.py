"""Recursive-descent parser for formulas and sequents.

Grammar (whitespace insignificant)::

    formula := imp
    imp     := disj ("->" imp)?
    disj    := conj ("|" conj)*
    conj    := unary ("&" unary)*
    unary   := "~" unary | "(" formula ")" | "T" | "F" | atom
    atom    := ident ( "(" ident ("," ident)* ")" )?
    ident   := [a-zA-Z_][a-zA-Z0-9_]*

A sequent is a comma-separated list of formulas; commas inside an atom's
argument list do not split it. The Unicode connectives (¬ ∧ ∨ → ⊤ ⊥) are
accepted as aliases.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import NamedTuple

from lkg0 import surface as S
from lkg0.formula import Sequent, to_nnf


class ParseError(ValueError):
    def __init__(self, message: str, column: int, line: int | None = None,
                 item: int | None = None):
        self.message = message
        self.column = column
        self.line = line
        self.item = item
        where = f"column {column}"
        if line is not None:
            where = f"line {line}, {where}"
        if item is not None:
            where = f"{where} (formula {item})"
        super().__init__(f"{where}: {message}")


class _Tok(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<imp>->|→)
  | (?P<not>~|¬)
  | (?P<and>&|∧)
  | (?P<or>\||∨)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<comma>,)
  | (?P<top>⊤)
  | (?P<bot>⊥)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
""", re.VERBOSE)

_DESCR = {
    "imp": "'->'", "not": "'~'", "and": "'&'", "or": "'|'", "lp": "'('",
    "rp": "')'", "comma": "','", "ident": "identifier", "eof": "end of input",
    "top": "'T'", "bot": "'F'",
}


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1)
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"expected {expected}, found {found}", t.pos + 1)

    def expect(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            self.fail(_DESCR[kind])
        t = self.tok
        self.i += 1
        return t

    def formula(self) -> S.SurfaceFormula:
        left = self.disj()
        if self.tok.kind == "imp":
            self.i += 1
            return S.Implies(left, self.formula())
        return left

    def disj(self) -> S.SurfaceFormula:
        f = self.conj()
        while self.tok.kind == "or":
            self.i += 1
            f = S.Or(f, self.conj())
        return f

    def conj(self) -> S.SurfaceFormula:
        f = self.unary()
        while self.tok.kind == "and":
            self.i += 1
            f = S.And(f, self.unary())
        return f

    def unary(self) -> S.SurfaceFormula:
        t = self.tok
        if t.kind == "not":
            self.i += 1
            return S.Not(self.unary())
        if t.kind == "lp":
            self.i += 1
            f = self.formula()
            self.expect("rp")
            return f
        if t.kind == "top":
            self.i += 1
            return S.Top()
        if t.kind == "bot":
            self.i += 1
            return S.Bottom()
        if t.kind == "ident":
            if t.text in ("T", "F") and self.peek().kind != "lp":
                self.i += 1
                return S.Top() if t.text == "T" else S.Bottom()
            return self.atom()
        self.fail("formula")

    def atom(self) -> S.Atom:
        name = self.expect("ident").text
        if self.tok.kind != "lp":
            return S.Atom(name)
        self.i += 1
        args = [self.expect("ident").text]
        while self.tok.kind == "comma":
            self.i += 1
            args.append(self.expect("ident").text)
        self.expect("rp")
        return S.Atom(f"{name}({','.join(args)})")


def parse_formula(text: str) -> S.SurfaceFormula:
    p = _Parser(text)
    f = p.formula()
    p.expect("eof")
    return f


def parse_sequent(text: str) -> Sequent:
    """Parse a comma-separated list of formulas and normalize each to NNF."""
    p = _Parser(text)
    items = []
    if p.tok.kind == "eof":
        return Sequent()
    while True:
        try:
            f = to_nnf(p.formula())
            if p.tok.kind not in ("comma", "eof"):
                p.fail("',' or end of input")
        except ParseError as e:
            raise ParseError(e.message, e.column, item=len(items) + 1) from None
        items.append(f)
        if p.tok.kind == "eof":
            return Sequent(items)
        p.i += 1


def parse_sequents(text: str) -> list[tuple[int, Sequent]]:
    """Parse a sequent file: one sequent per line, ``#`` lines are comments.

    Returns ``(line_number, sequent)`` pairs; blank lines are skipped.
    """
    out = []
    for n, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            out.append((n, parse_sequent(line)))
        except ParseError as e:
            raise ParseError(e.message, e.column, line=n, item=e.item) from None
    return out


def read_sequent_file(path: str | Path) -> list[tuple[int, Sequent]]:
    return parse_sequents(Path(path).read_text(encoding="utf-8"))
