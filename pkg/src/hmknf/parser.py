"""Parser for the ``#ontology`` / ``#rules`` text format.

Example::

    #ontology
    -c.
    #rules
    a :- not b.
    b :- not a.
    c :- a.

Formulas use ``-``, ``&``, ``|``, ``->`` (tightest to loosest, ``->`` is
right-associative), parentheses and the constants ``true``/``false``. ``%``
starts a comment. Text before any section header is read as rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .formulas import FALSE, TRUE, And, Atom, Formula, Implies, Not, Or
from .kb import KnowledgeBase, Ontology, Rule


class KBSyntaxError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<header>\#[A-Za-z]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>:-|->|[-&|().,])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise KBSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            toks.append(_Tok("nl", s, line, col))
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                toks.append(_Tok(kind, s, line, col))
            col += len(s)
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    # token helpers skip newlines except where a header demands one
    def peek(self) -> _Tok:
        while self.toks[self.i].kind == "nl":
            self.i += 1
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.next()
        if tok.text != text:
            raise KBSyntaxError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                                tok.line, tok.col)
        return tok

    def atom(self) -> Atom:
        tok = self.next()
        if tok.kind != "ident":
            raise KBSyntaxError(f"expected atom, found {tok.text or 'end of input'!r}",
                                tok.line, tok.col)
        return self._to_atom(tok)

    @staticmethod
    def _to_atom(tok: _Tok) -> Atom:
        if not tok.text[0].islower():
            raise KBSyntaxError(f"identifier {tok.text!r} must start with a lowercase letter",
                                tok.line, tok.col)
        if tok.text in ("not", "true", "false"):
            raise KBSyntaxError(f"reserved word {tok.text!r} used as atom", tok.line, tok.col)
        return Atom(tok.text)

    def header(self) -> _Tok:
        tok = self.next()
        if tok.text not in ("#ontology", "#rules"):
            raise KBSyntaxError(f"unknown section header {tok.text!r}", tok.line, tok.col)
        nxt = self.toks[self.i]
        if nxt.kind not in ("nl", "eof"):
            raise KBSyntaxError("section header must be followed by a newline", nxt.line, nxt.col)
        return tok

    # formulas: imp := or ('->' imp)? ; or := and ('|' and)* ; and := un ('&' un)*
    def formula(self) -> Formula:
        left = self.disj()
        if self.peek().text == "->":
            self.next()
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek().text == "|":
            self.next()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek().text == "&":
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.text == "-":
            self.next()
            return Not(self.unary())
        if tok.text == "(":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        if tok.text == "true":
            self.next()
            return TRUE
        if tok.text == "false":
            self.next()
            return FALSE
        return self.atom()

    def rule(self) -> Rule:
        head: Optional[Atom] = None
        if self.peek().text != ":-":
            head = self.atom()
            if self.peek().text == ".":
                self.next()
                return Rule.of(head)
        self.expect(":-")
        pos: list[Atom] = []
        neg: list[Atom] = []
        if self.peek().text == "." and head is None:
            # empty constraint, only produced by the printer for degenerate reductions
            self.next()
            return Rule.of(None)
        while True:
            tok = self.peek()
            if tok.text == "not":
                self.next()
                neg.append(self.atom())
            else:
                pos.append(self.atom())
            tok = self.next()
            if tok.text == ".":
                break
            if tok.text != ",":
                raise KBSyntaxError(f"expected ',' or '.', found {tok.text or 'end of input'!r}",
                                    tok.line, tok.col)
        return Rule.of(head, pos, neg)

    def parse(self) -> KnowledgeBase:
        formulas: list[Formula] = []
        rules: list[Rule] = []
        seen: list[str] = []
        section = "#rules"
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                break
            if tok.kind == "header":
                h = self.header()
                if h.text in seen:
                    raise KBSyntaxError(f"duplicate section {h.text}", h.line, h.col)
                if h.text == "#ontology" and (seen or rules):
                    raise KBSyntaxError("#ontology must precede #rules", h.line, h.col)
                seen.append(h.text)
                section = h.text
                continue
            if section == "#ontology":
                formulas.append(self.formula())
                self.expect(".")
            else:
                rules.append(self.rule())
        return KnowledgeBase(Ontology(tuple(formulas)), tuple(rules))


def parse_kb(text: str) -> KnowledgeBase:
    """Parse KB source text; raises :class:`KBSyntaxError` with line and column."""
    return _Parser(text).parse()


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    tok = p.peek()
    if tok.kind != "eof":
        raise KBSyntaxError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return f
