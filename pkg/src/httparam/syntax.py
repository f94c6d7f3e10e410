"""Abstract syntax of the object theory.

Terms are nameless: variables carry de Bruijn indices, binders keep a
display name used only for printing.  Display-name fields are excluded
from dataclass comparison, so structural equality of terms *is*
alpha-equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    index: int
    name: str = field(default="_", compare=False)


@dataclass(frozen=True)
class Sort(Term):
    name: str  # "U" (the small univalent universe) or "Type" (the outer sort)


@dataclass(frozen=True)
class Pi(Term):
    binder: str = field(compare=False)
    domain: Term
    codomain: Term  # scoped under one extra binder


@dataclass(frozen=True)
class Lam(Term):
    binder: str = field(compare=False)
    body: Term  # one extra binder


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True)
class Sigma(Term):
    binder: str = field(compare=False)
    first: Term
    second: Term  # one extra binder


@dataclass(frozen=True)
class Pair(Term):
    fst: Term
    snd: Term


@dataclass(frozen=True)
class Fst(Term):
    pair: Term


@dataclass(frozen=True)
class Snd(Term):
    pair: Term


@dataclass(frozen=True)
class Id(Term):
    type: Term
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Refl(Term):
    arg: Term  # the endpoint, kept so Id endpoints need no inference


@dataclass(frozen=True)
class J(Term):
    """Based path induction.

    ``motive`` is a term of type ``(b : A) -> Id A lhs b -> s``; ``base``
    inhabits ``motive lhs (refl lhs)``; ``path : Id A lhs rhs``.  The left
    endpoint is fixed, both endpoints are stored explicitly.
    """

    motive: Term
    base: Term
    lhs: Term
    rhs: Term
    path: Term


@dataclass(frozen=True)
class BaseType(Term):
    kind: str  # Empty | Unit | Two | Nat | Circle


@dataclass(frozen=True)
class Star(Term):
    pass


@dataclass(frozen=True)
class Two0(Term):
    pass


@dataclass(frozen=True)
class Two1(Term):
    pass


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Suc(Term):
    arg: Term


@dataclass(frozen=True)
class Base(Term):
    pass


@dataclass(frozen=True)
class Loop(Term):
    """Primitive constant of type ``Id Circle base base``."""


@dataclass(frozen=True)
class EmptyElim(Term):
    motive: Term
    scrutinee: Term


@dataclass(frozen=True)
class UnitElim(Term):
    motive: Term
    case: Term
    scrutinee: Term


@dataclass(frozen=True)
class TwoElim(Term):
    motive: Term
    case0: Term
    case1: Term
    scrutinee: Term


@dataclass(frozen=True)
class NatElim(Term):
    motive: Term
    zero_case: Term
    suc_case: Term
    scrutinee: Term


@dataclass(frozen=True)
class CircElim(Term):
    motive: Term
    base_case: Term
    loop_case: Term
    scrutinee: Term


@dataclass(frozen=True)
class Const(Term):
    name: str


U = Sort("U")
TYPE = Sort("Type")
EMPTY = BaseType("Empty")
UNIT = BaseType("Unit")
TWO = BaseType("Two")
NAT = BaseType("Nat")
CIRCLE = BaseType("Circle")


def apps(fn: Term, *args: Term) -> Term:
    for a in args:
        fn = App(fn, a)
    return fn


def arrow(a: Term, b: Term) -> Term:
    """Non-dependent function type; ``b`` is weakened under the binder."""
    return Pi("_", a, shift(b, 1))


def map_children(t: Term, f) -> Term:
    """Rebuild ``t`` applying ``f(child, binds)``; ``binds`` counts binders
    the child lies under."""
    match t:
        case Var() | Sort() | BaseType() | Star() | Two0() | Two1() | Zero() \
                | Base() | Loop() | Const():
            return t
        case Pi(x, a, b):
            return Pi(x, f(a, 0), f(b, 1))
        case Lam(x, b):
            return Lam(x, f(b, 1))
        case App(g, u):
            return App(f(g, 0), f(u, 0))
        case Sigma(x, a, b):
            return Sigma(x, f(a, 0), f(b, 1))
        case Pair(a, b):
            return Pair(f(a, 0), f(b, 0))
        case Fst(p):
            return Fst(f(p, 0))
        case Snd(p):
            return Snd(f(p, 0))
        case Id(ty, l, r):
            return Id(f(ty, 0), f(l, 0), f(r, 0))
        case Refl(a):
            return Refl(f(a, 0))
        case J(m, d, l, r, p):
            return J(f(m, 0), f(d, 0), f(l, 0), f(r, 0), f(p, 0))
        case Suc(n):
            return Suc(f(n, 0))
        case EmptyElim(m, s):
            return EmptyElim(f(m, 0), f(s, 0))
        case UnitElim(m, c, s):
            return UnitElim(f(m, 0), f(c, 0), f(s, 0))
        case TwoElim(m, c0, c1, s):
            return TwoElim(f(m, 0), f(c0, 0), f(c1, 0), f(s, 0))
        case NatElim(m, z, sc, s):
            return NatElim(f(m, 0), f(z, 0), f(sc, 0), f(s, 0))
        case CircElim(m, b, l, s):
            return CircElim(f(m, 0), f(b, 0), f(l, 0), f(s, 0))
    raise AssertionError(f"map_children: unknown term {t!r}")


def shift(t: Term, by: int, cutoff: int = 0) -> Term:
    """Add ``by`` to every variable index >= ``cutoff``.

    Negative shifts (strengthening) raise if a variable would fall into the
    removed range; that is a programming fault, not a user error.
    """
    if by == 0:
        return t

    def go(t: Term, c: int) -> Term:
        match t:
            case Var(i, x):
                if i < c:
                    return t
                if by < 0 and i + by < c:
                    raise ValueError(f"illegal strengthening of variable {i}")
                return Var(i + by, x)
            case _:
                return map_children(t, lambda ch, binds: go(ch, c + binds))

    return go(t, cutoff)


def substitute(t: Term, k: int, u: Term) -> Term:
    """Capture-avoiding substitution: replace variable ``k`` in ``t`` by
    ``u`` and tighten every index above ``k``."""

    def go(t: Term, k: int, u: Term) -> Term:
        match t:
            case Var(i, x):
                if i == k:
                    return u
                if i > k:
                    return Var(i - 1, x)
                return t
            case _:
                return map_children(
                    t, lambda ch, binds: go(ch, k + binds, shift(u, binds)))

    return go(t, k, u)


def uses_var(t: Term, k: int) -> bool:
    match t:
        case Var(i, _):
            return i == k
        case _:
            found = False

            def probe(ch, binds):
                nonlocal found
                if not found and uses_var(ch, k + binds):
                    found = True
                return ch

            map_children(t, probe)
            return found


def const_names(t: Term) -> set[str]:
    out: set[str] = set()

    def go(ch, _binds):
        match ch:
            case Const(c):
                out.add(c)
            case _:
                map_children(ch, go)
        return ch

    go(t, 0)
    return out


def alpha_equal(a: Term, b: Term) -> bool:
    """True iff the terms agree up to binder names.

    Display names are excluded from dataclass comparison, so this is plain
    structural equality on the nameless skeletons.
    """
    return a == b


@dataclass(frozen=True)
class Telescope:
    """Ordered context of typed binders; entry k may mention entries 0..k-1."""

    entries: tuple[tuple[str, Term], ...] = ()

    def extended(self, name: str, ty: Term) -> "Telescope":
        return Telescope((*self.entries, (name, ty)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class Declaration:
    name: str
    kind: str  # "def" | "axiom"
    type: Term
    body: Term | None = None
    line: int = 0
    col: int = 0


@dataclass(frozen=True)
class SourceFile:
    path: str
    declarations: tuple[Declaration, ...]
