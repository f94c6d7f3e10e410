"""Deterministic pretty-printer for the ASCII surface syntax.

``parse(print_term(t))`` is alpha-equal to ``t``: binder names are
freshened with the smallest unused numeric suffix whenever they would
shadow an enclosing binder, collide with a keyword, or capture a global
constant referenced inside the printed term.
"""

from __future__ import annotations

from .syntax import (App, Base, BaseType, CircElim, Const, EmptyElim, Fst, Id,
                     J, Lam, Loop, NatElim, Pair, Pi, Refl, Sigma, Snd, Sort,
                     Star, Suc, Term, TwoElim, Two0, Two1, UnitElim,
                     Var, Zero, const_names, uses_var)

KEYWORDS = frozenset({
    "def", "axiom", "U", "Type", "fun", "Id", "refl", "J",
    "Empty", "Unit", "star", "Two", "two0", "two1", "Nat", "zero", "suc",
    "Circle", "base", "loop",
    "emptyElim", "unitElim", "twoElim", "natElim", "circElim",
})

_BASE_KEYWORD = {"Empty": "Empty", "Unit": "Unit", "Two": "Two",
                 "Nat": "Nat", "Circle": "Circle"}

# precedence levels: 0 arrow/fun, 1 star, 2 application, 3 atom
_ARROW, _STAR, _APP, _ATOM = 0, 1, 2, 3


def freshen(base: str, taken) -> str:
    if base not in taken:
        return base
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def print_term(t: Term, names: list[str] | None = None,
               reserved=()) -> str:
    scope = list(names or [])
    taboo = set(KEYWORDS) | set(reserved) | const_names(t)
    return _pp(t, scope, taboo, _ARROW)


def _bind_name(x: str, body: Term, scope: list[str], taboo) -> str:
    if x == "_" and not uses_var(body, 0):
        return "_"
    base = x if x != "_" else "x"
    return freshen(base, set(scope) | taboo)


def _paren(s: str, ambient: int, mine: int) -> str:
    return f"({s})" if ambient > mine else s


def _pp(t: Term, scope: list[str], taboo, prec: int) -> str:
    match t:
        case Var(i, _):
            return scope[len(scope) - 1 - i]
        case Sort(n):
            return n
        case BaseType(k):
            return _BASE_KEYWORD[k]
        case Star():
            return "star"
        case Two0():
            return "two0"
        case Two1():
            return "two1"
        case Zero():
            return "zero"
        case Base():
            return "base"
        case Loop():
            return "loop"
        case Const(c):
            return c
        case Pi(x, a, b):
            if uses_var(b, 0):
                n = _bind_name(x, b, scope, taboo)
                s = f"({n} : {_pp(a, scope, taboo, _ARROW)}) -> " \
                    f"{_pp(b, scope + [n], taboo, _ARROW)}"
            else:
                s = f"{_pp(a, scope, taboo, _STAR)} -> " \
                    f"{_pp(b, scope + ['_'], taboo, _ARROW)}"
            return _paren(s, prec, _ARROW)
        case Sigma(x, a, b):
            if uses_var(b, 0):
                n = _bind_name(x, b, scope, taboo)
                s = f"({n} : {_pp(a, scope, taboo, _ARROW)}) * " \
                    f"{_pp(b, scope + [n], taboo, _STAR)}"
            else:
                s = f"{_pp(a, scope, taboo, _APP)} * " \
                    f"{_pp(b, scope + ['_'], taboo, _STAR)}"
            return _paren(s, prec, _STAR)
        case Lam(x, b):
            n = _bind_name(x, b, scope, taboo)
            s = f"fun {n} => {_pp(b, scope + [n], taboo, _ARROW)}"
            return _paren(s, prec, _ARROW)
        case App(f, a):
            s = f"{_pp(f, scope, taboo, _APP)} {_pp(a, scope, taboo, _ATOM)}"
            return _paren(s, prec, _APP)
        case Pair(a, b):
            return f"({_pp(a, scope, taboo, _ARROW)}, " \
                   f"{_pp(b, scope, taboo, _ARROW)})"
        case Fst(p):
            return f"{_pp(p, scope, taboo, _ATOM)}.1"
        case Snd(p):
            return f"{_pp(p, scope, taboo, _ATOM)}.2"
        case Id(ty, l, r):
            return _prefix("Id", (ty, l, r), scope, taboo, prec)
        case Refl(a):
            return _prefix("refl", (a,), scope, taboo, prec)
        case J(m, d, l, r, p):
            return _prefix("J", (m, d, l, r, p), scope, taboo, prec)
        case Suc(n):
            return _prefix("suc", (n,), scope, taboo, prec)
        case EmptyElim(m, s):
            return _prefix("emptyElim", (m, s), scope, taboo, prec)
        case UnitElim(m, c, s):
            return _prefix("unitElim", (m, c, s), scope, taboo, prec)
        case TwoElim(m, c0, c1, s):
            return _prefix("twoElim", (m, c0, c1, s), scope, taboo, prec)
        case NatElim(m, z, sc, s):
            return _prefix("natElim", (m, z, sc, s), scope, taboo, prec)
        case CircElim(m, b, l, s):
            return _prefix("circElim", (m, b, l, s), scope, taboo, prec)
    raise AssertionError(f"print_term: unknown term {t!r}")


def _prefix(kw: str, args, scope, taboo, prec: int) -> str:
    body = " ".join([kw] + [_pp(a, scope, taboo, _ATOM) for a in args])
    return _paren(body, prec, _APP)


def print_declaration(d, reserved=()) -> str:
    ty = print_term(d.type, reserved=reserved)
    if d.kind == "axiom":
        return f"axiom {d.name} : {ty}"
    body = print_term(d.body, reserved=reserved)
    return f"def {d.name} : {ty} := {body}"
