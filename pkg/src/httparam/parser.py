"""Recursive-descent parser for ``.htt`` declaration files.

Grammar (ASCII):

    file  ::= { "def" NAME ":" term ":=" term | "axiom" NAME ":" term }
    term  ::= "fun" NAME "=>" term
            | "(" NAME ":" term ")" ("->" term | "*" star)
            | star [ "->" term ]
    star  ::= "(" NAME ":" term ")" "*" star
            | app [ "*" star ]
    app   ::= head { atom }
    head  ::= prefix-former fixed-arity atoms | atom
    atom  ::= NAME | keyword | "(" term ")" | "(" term "," term ")"
            | atom ".1" | atom ".2"

``->`` and ``*`` are right-associative, ``*`` binds tighter; application
is juxtaposition; comments run from ``--`` to end of line.  Identifiers
resolve to the nearest enclosing binder, otherwise to a global constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .syntax import (App, Base, BaseType, CircElim, Const, Declaration,
                     EmptyElim, Fst, Id, J, Lam, Loop, NatElim, Pair, Pi,
                     Refl, Sigma, Snd, Sort, SourceFile, Star, Suc, Term,
                     TwoElim, Two0, Two1, UnitElim, Var, Zero, shift)

_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t\r\n]+)
      | (?P<comment>--[^\n]*)
      | (?P<punct>:=|=>|->|\.1|\.2|[():,*])
      | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
      | (?P<bad>.)""",
    re.VERBOSE,
)

_ATOM_KEYWORDS = {
    "U": Sort("U"), "Type": Sort("Type"),
    "Empty": BaseType("Empty"), "Unit": BaseType("Unit"),
    "Two": BaseType("Two"), "Nat": BaseType("Nat"),
    "Circle": BaseType("Circle"),
    "star": Star(), "two0": Two0(), "two1": Two1(), "zero": Zero(),
    "base": Base(), "loop": Loop(),
}

_PREFIX_ARITY = {
    "Id": 3, "refl": 1, "J": 5, "suc": 1,
    "emptyElim": 2, "unitElim": 3, "twoElim": 4, "natElim": 4, "circElim": 4,
}

_RESERVED = set(_ATOM_KEYWORDS) | set(_PREFIX_ARITY) | {"def", "axiom", "fun"}


class ParseError(Exception):
    def __init__(self, message: str, path: str, line: int, col: int):
        super().__init__(f"{path}:{line}:{col}: {message}")
        self.message = message
        self.path = path
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "punct" | "eof"
    text: str
    line: int
    col: int


def _lex(text: str, path: str) -> list[Token]:
    out: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        chunk = m.group(0)
        kind = m.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {chunk!r}", path, line, col)
        if kind == "punct":
            out.append(Token("punct", chunk, line, col))
        elif kind == "ident":
            out.append(Token("ident", chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


class _Parser:
    def __init__(self, text: str, path: str):
        self.toks = _lex(text, path)
        self.pos = 0
        self.path = path
        self.scope: list[str] = []

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, self.path, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.text != text or t.kind == "eof":
            self.fail(f"expected {text!r}, found {t.text!r}" if t.kind != "eof"
                      else f"expected {text!r}, found end of input")
        return self.next()

    def expect_name(self) -> Token:
        t = self.peek()
        if t.kind != "ident":
            self.fail(f"expected a name, found {t.text!r}")
        if t.text in _RESERVED:
            self.fail(f"{t.text!r} is a keyword")
        return self.next()

    # declarations

    def parse_file(self) -> SourceFile:
        decls: list[Declaration] = []
        seen: set[str] = set()
        while self.peek().kind != "eof":
            t = self.peek()
            if t.text == "def":
                self.next()
                name = self.expect_name()
                self.expect(":")
                ty = self.parse_term()
                self.expect(":=")
                body = self.parse_term()
                d = Declaration(name.text, "def", ty, body, name.line, name.col)
            elif t.text == "axiom":
                self.next()
                name = self.expect_name()
                self.expect(":")
                ty = self.parse_term()
                d = Declaration(name.text, "axiom", ty, None,
                                name.line, name.col)
            else:
                self.fail("expected 'def' or 'axiom'")
            if d.name in seen:
                self.fail(f"duplicate declaration {d.name!r}", name)
            seen.add(d.name)
            decls.append(d)
        return SourceFile(self.path, tuple(decls))

    # terms

    def binder_ahead(self) -> bool:
        return (self.peek().text == "(" and self.peek(1).kind == "ident"
                and self.peek(1).text not in _RESERVED
                and self.peek(2).text == ":")

    def parse_binder(self) -> tuple[str, Term]:
        self.expect("(")
        name = self.expect_name()
        self.expect(":")
        ty = self.parse_term()
        self.expect(")")
        return name.text, ty

    def parse_term(self) -> Term:
        if self.peek().text == "fun":
            self.next()
            name = self.expect_name()
            self.expect("=>")
            self.scope.append(name.text)
            body = self.parse_term()
            self.scope.pop()
            return Lam(name.text, body)
        if self.binder_ahead():
            x, dom = self.parse_binder()
            tok = self.peek()
            if tok.text == "->":
                self.next()
                self.scope.append(x)
                cod = self.parse_term()
                self.scope.pop()
                return Pi(x, dom, cod)
            if tok.text == "*":
                self.next()
                self.scope.append(x)
                snd = self.parse_star()
                self.scope.pop()
                return self.arrow_tail(Sigma(x, dom, snd))
            self.fail("expected '->' or '*' after a binder")
        return self.arrow_tail(self.parse_star())

    def arrow_tail(self, left: Term) -> Term:
        if self.peek().text == "->":
            self.next()
            cod = self.parse_term()
            return Pi("_", left, shift(cod, 1))
        return left

    def parse_star(self) -> Term:
        if self.binder_ahead():
            x, dom = self.parse_binder()
            self.expect("*")
            self.scope.append(x)
            snd = self.parse_star()
            self.scope.pop()
            return Sigma(x, dom, snd)
        left = self.parse_app()
        if self.peek().text == "*":
            self.next()
            snd = self.parse_star()
            return Sigma("_", left, shift(snd, 1))
        return left

    def atom_ahead(self) -> bool:
        t = self.peek()
        if t.kind == "ident":
            return t.text not in {"def", "axiom", "fun"} \
                and t.text not in _PREFIX_ARITY
        return t.text == "("

    def parse_app(self) -> Term:
        head = self.parse_head()
        while self.atom_ahead():
            head = App(head, self.parse_atom())
        return head

    def parse_head(self) -> Term:
        t = self.peek()
        if t.kind == "ident" and t.text in _PREFIX_ARITY:
            self.next()
            args = [self.parse_atom() for _ in range(_PREFIX_ARITY[t.text])]
            match t.text:
                case "Id":
                    return Id(*args)
                case "refl":
                    return Refl(*args)
                case "J":
                    return J(*args)
                case "suc":
                    return Suc(*args)
                case "emptyElim":
                    return EmptyElim(*args)
                case "unitElim":
                    return UnitElim(*args)
                case "twoElim":
                    return TwoElim(*args)
                case "natElim":
                    return NatElim(*args)
                case "circElim":
                    return CircElim(*args)
        return self.parse_atom()

    def parse_atom(self) -> Term:
        t = self.peek()
        atom: Term
        if t.text == "(":
            self.next()
            inner = self.parse_term()
            if self.peek().text == ",":
                self.next()
                snd = self.parse_term()
                self.expect(")")
                atom = Pair(inner, snd)
            else:
                self.expect(")")
                atom = inner
        elif t.kind == "ident":
            if t.text in _ATOM_KEYWORDS:
                self.next()
                atom = _ATOM_KEYWORDS[t.text]
            elif t.text in _RESERVED:
                self.fail(f"keyword {t.text!r} cannot be used here")
            else:
                self.next()
                if t.text in self.scope:
                    idx = len(self.scope) - 1 - \
                        max(i for i, n in enumerate(self.scope)
                            if n == t.text)
                    atom = Var(idx, t.text)
                else:
                    atom = Const(t.text)
        else:
            self.fail(f"expected a term, found {t.text!r}"
                      if t.kind != "eof" else "expected a term, found end of input")
        while self.peek().text in (".1", ".2"):
            proj = self.next()
            atom = Fst(atom) if proj.text == ".1" else Snd(atom)
        return atom


def parse(text: str, path: str = "<string>") -> SourceFile:
    return _Parser(text, path).parse_file()


def parse_term(text: str, path: str = "<string>",
               scope: list[str] | None = None) -> Term:
    p = _Parser(text, path)
    p.scope = list(scope or [])
    t = p.parse_term()
    if p.peek().kind != "eof":
        p.fail(f"trailing input {p.peek().text!r}")
    return t
