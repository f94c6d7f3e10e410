"""Bidirectional typechecker with definitional equality by
normalization-by-evaluation.

Semantic values use de Bruijn levels for neutral variables, closures for
binders, and neutral spines for stuck eliminations.  Definitions unfold
during evaluation; axioms stay neutral.  Definitional equality is
type-directed: eta for Pi and Sigma, all Unit values equal, and the
structural comparator eta-expands when a lambda or pair meets a neutral.

Computation rules: beta for application and projections, J on refl,
natElim/twoElim/unitElim on constructors, circElim on base.  circElim
does not compute on the loop; that rule is propositional (the basis
postulates it for the recursor).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .printer import print_term
from .syntax import (App, Base, BaseType, CircElim, Const, Declaration,
                     EmptyElim, Fst, Id, J, Lam, Loop, NatElim, Pair, Pi,
                     Refl, Sigma, Snd, Sort, SourceFile, Star, Suc, Telescope,
                     Term, TwoElim, Two0, Two1, UnitElim, Var, Zero)


class Value:
    pass


@dataclass(frozen=True, eq=False)
class Closure:
    kernel: "Kernel"
    env: tuple
    body: Term

    def apply(self, v: Value) -> Value:
        return self.kernel.eval((*self.env, v), self.body)


@dataclass(frozen=True, eq=False)
class FnClosure:
    fn: object

    def apply(self, v: Value) -> Value:
        return self.fn(v)


@dataclass(frozen=True, eq=False)
class VSort(Value):
    name: str


@dataclass(frozen=True, eq=False)
class VPi(Value):
    binder: str
    domain: Value
    codomain: Closure | FnClosure


@dataclass(frozen=True, eq=False)
class VLam(Value):
    binder: str
    body: Closure | FnClosure


@dataclass(frozen=True, eq=False)
class VSigma(Value):
    binder: str
    first: Value
    second: Closure | FnClosure


@dataclass(frozen=True, eq=False)
class VPair(Value):
    fst: Value
    snd: Value


@dataclass(frozen=True, eq=False)
class VId(Value):
    type: Value
    lhs: Value
    rhs: Value


@dataclass(frozen=True, eq=False)
class VRefl(Value):
    arg: Value


@dataclass(frozen=True, eq=False)
class VBase(Value):
    kind: str


@dataclass(frozen=True, eq=False)
class VStar(Value):
    pass


@dataclass(frozen=True, eq=False)
class VTwo0(Value):
    pass


@dataclass(frozen=True, eq=False)
class VTwo1(Value):
    pass


@dataclass(frozen=True, eq=False)
class VZero(Value):
    pass


@dataclass(frozen=True, eq=False)
class VSuc(Value):
    pred: Value


@dataclass(frozen=True, eq=False)
class VBasePoint(Value):
    pass


# neutral heads


@dataclass(frozen=True, eq=False)
class HVar:
    level: int
    name: str = "_"


@dataclass(frozen=True, eq=False)
class HConst:
    name: str


@dataclass(frozen=True, eq=False)
class HLoop:
    pass


@dataclass(frozen=True, eq=False)
class HStuck:
    """Ill-typed redex kept inert instead of crashing the evaluator."""
    value: Value


# spine eliminations


@dataclass(frozen=True, eq=False)
class EApp:
    arg: Value


@dataclass(frozen=True, eq=False)
class EFst:
    pass


@dataclass(frozen=True, eq=False)
class ESnd:
    pass


@dataclass(frozen=True, eq=False)
class EJ:
    motive: Value
    base: Value
    lhs: Value
    rhs: Value


@dataclass(frozen=True, eq=False)
class EEmptyElim:
    motive: Value


@dataclass(frozen=True, eq=False)
class EUnitElim:
    motive: Value
    case: Value


@dataclass(frozen=True, eq=False)
class ETwoElim:
    motive: Value
    case0: Value
    case1: Value


@dataclass(frozen=True, eq=False)
class ENatElim:
    motive: Value
    zero_case: Value
    suc_case: Value


@dataclass(frozen=True, eq=False)
class ECircElim:
    motive: Value
    base_case: Value
    loop_case: Value


@dataclass(frozen=True, eq=False)
class VNe(Value):
    head: object
    spine: tuple = ()


def fresh(level: int, name: str = "_") -> VNe:
    return VNe(HVar(level, name))


def _push(ne: VNe, elim) -> VNe:
    return VNe(ne.head, (*ne.spine, elim))


def vapp(f: Value, a: Value) -> Value:
    match f:
        case VLam(_, body):
            return body.apply(a)
        case VNe():
            return _push(f, EApp(a))
        case _:
            return VNe(HStuck(f), (EApp(a),))


def vfst(p: Value) -> Value:
    match p:
        case VPair(a, _):
            return a
        case VNe():
            return _push(p, EFst())
        case _:
            return VNe(HStuck(p), (EFst(),))


def vsnd(p: Value) -> Value:
    match p:
        case VPair(_, b):
            return b
        case VNe():
            return _push(p, ESnd())
        case _:
            return VNe(HStuck(p), (ESnd(),))


def vJ(motive: Value, base: Value, lhs: Value, rhs: Value, path: Value) -> Value:
    match path:
        case VRefl(_):
            return base
        case VNe():
            return _push(path, EJ(motive, base, lhs, rhs))
        case _:
            return VNe(HStuck(path), (EJ(motive, base, lhs, rhs),))


def vempty_elim(motive: Value, s: Value) -> Value:
    match s:
        case VNe():
            return _push(s, EEmptyElim(motive))
        case _:
            return VNe(HStuck(s), (EEmptyElim(motive),))


def vunit_elim(motive: Value, case: Value, s: Value) -> Value:
    match s:
        case VStar():
            return case
        case VNe():
            return _push(s, EUnitElim(motive, case))
        case _:
            return VNe(HStuck(s), (EUnitElim(motive, case),))


def vtwo_elim(motive: Value, c0: Value, c1: Value, s: Value) -> Value:
    match s:
        case VTwo0():
            return c0
        case VTwo1():
            return c1
        case VNe():
            return _push(s, ETwoElim(motive, c0, c1))
        case _:
            return VNe(HStuck(s), (ETwoElim(motive, c0, c1),))


def vnat_elim(motive: Value, z: Value, sc: Value, s: Value) -> Value:
    match s:
        case VZero():
            return z
        case VSuc(pred):
            return vapp(vapp(sc, pred), vnat_elim(motive, z, sc, pred))
        case VNe():
            return _push(s, ENatElim(motive, z, sc))
        case _:
            return VNe(HStuck(s), (ENatElim(motive, z, sc),))


def vcirc_elim(motive: Value, b: Value, l: Value, s: Value) -> Value:
    match s:
        case VBasePoint():
            return b
        case VNe():
            return _push(s, ECircElim(motive, b, l))
        case _:
            return VNe(HStuck(s), (ECircElim(motive, b, l),))


class TypeCheckError(Exception):
    """Judgmental failure; renders as
    ``ERROR <file>:<line>:<col> [<kind>] in <decl>: expected <T1>, got <T2>``.
    """

    KINDS = ("mismatch", "not-a-function", "not-a-pair", "not-a-type",
             "unbound", "universe-violation")

    def __init__(self, kind: str, message: str,
                 expected: str | None = None, actual: str | None = None,
                 decl: str | None = None, path: str = "<input>",
                 line: int = 0, col: int = 0):
        assert kind in self.KINDS
        self.kind = kind
        self.message = message
        self.expected = expected
        self.actual = actual
        self.decl = decl
        self.path = path
        self.line = line
        self.col = col
        super().__init__(self.render())

    def render(self) -> str:
        where = self.decl or "?"
        if self.expected is not None and self.actual is not None:
            detail = f"expected {self.expected}, got {self.actual}"
            if self.message:
                detail = f"{self.message}: {detail}"
        else:
            detail = self.message
        return (f"ERROR {self.path}:{self.line}:{self.col} "
                f"[{self.kind}] in {where}: {detail}")


class DuplicateName(Exception):
    def __init__(self, name: str, path: str, line: int, col: int):
        super().__init__(f"{path}:{line}:{col}: duplicate declaration {name!r}")
        self.name = name
        self.path = path
        self.line = line
        self.col = col


@dataclass(frozen=True)
class GlobalInfo:
    name: str
    is_axiom: bool
    type_value: Value
    body_value: Value | None
    type_term: Term
    body_term: Term | None


@dataclass(frozen=True)
class Context:
    names: tuple[str, ...] = ()
    types: tuple[Value, ...] = ()

    def extended(self, name: str, ty: Value) -> "Context":
        return Context((*self.names, name), (*self.types, ty))

    def env(self) -> tuple:
        return tuple(fresh(i, n) for i, n in enumerate(self.names))

    def __len__(self) -> int:
        return len(self.names)


class Kernel:
    def __init__(self):
        self.globals: dict[str, GlobalInfo] = {}
        self.order: list[str] = []

    # evaluation

    def eval(self, env: tuple, t: Term) -> Value:
        match t:
            case Var(i, _):
                return env[len(env) - 1 - i]
            case Sort(n):
                return VSort(n)
            case Pi(x, a, b):
                return VPi(x, self.eval(env, a), Closure(self, env, b))
            case Lam(x, b):
                return VLam(x, Closure(self, env, b))
            case App(f, a):
                return vapp(self.eval(env, f), self.eval(env, a))
            case Sigma(x, a, b):
                return VSigma(x, self.eval(env, a), Closure(self, env, b))
            case Pair(a, b):
                return VPair(self.eval(env, a), self.eval(env, b))
            case Fst(p):
                return vfst(self.eval(env, p))
            case Snd(p):
                return vsnd(self.eval(env, p))
            case Id(ty, l, r):
                return VId(self.eval(env, ty), self.eval(env, l),
                           self.eval(env, r))
            case Refl(a):
                return VRefl(self.eval(env, a))
            case J(m, d, l, r, p):
                return vJ(self.eval(env, m), self.eval(env, d),
                          self.eval(env, l), self.eval(env, r),
                          self.eval(env, p))
            case BaseType(k):
                return VBase(k)
            case Star():
                return VStar()
            case Two0():
                return VTwo0()
            case Two1():
                return VTwo1()
            case Zero():
                return VZero()
            case Suc(n):
                return VSuc(self.eval(env, n))
            case Base():
                return VBasePoint()
            case Loop():
                return VNe(HLoop())
            case EmptyElim(m, s):
                return vempty_elim(self.eval(env, m), self.eval(env, s))
            case UnitElim(m, c, s):
                return vunit_elim(self.eval(env, m), self.eval(env, c),
                                  self.eval(env, s))
            case TwoElim(m, c0, c1, s):
                return vtwo_elim(self.eval(env, m), self.eval(env, c0),
                                 self.eval(env, c1), self.eval(env, s))
            case NatElim(m, z, sc, s):
                return vnat_elim(self.eval(env, m), self.eval(env, z),
                                 self.eval(env, sc), self.eval(env, s))
            case CircElim(m, b, l, s):
                return vcirc_elim(self.eval(env, m), self.eval(env, b),
                                  self.eval(env, l), self.eval(env, s))
            case Const(c):
                info = self.globals.get(c)
                if info is None:
                    raise TypeCheckError("unbound", f"unknown name '{c}'")
                if info.body_value is not None:
                    return info.body_value
                return VNe(HConst(c))
        raise AssertionError(f"eval: unknown term {t!r}")

    # readback (beta-normal, untyped)

    def readback(self, depth: int, v: Value) -> Term:
        match v:
            case VSort(n):
                return Sort(n)
            case VPi(x, a, b):
                return Pi(x, self.readback(depth, a),
                          self.readback(depth + 1, b.apply(fresh(depth, x))))
            case VLam(x, b):
                return Lam(x, self.readback(depth + 1, b.apply(fresh(depth, x))))
            case VSigma(x, a, b):
                return Sigma(x, self.readback(depth, a),
                             self.readback(depth + 1, b.apply(fresh(depth, x))))
            case VPair(a, b):
                return Pair(self.readback(depth, a), self.readback(depth, b))
            case VId(ty, l, r):
                return Id(self.readback(depth, ty), self.readback(depth, l),
                          self.readback(depth, r))
            case VRefl(a):
                return Refl(self.readback(depth, a))
            case VBase(k):
                return BaseType(k)
            case VStar():
                return Star()
            case VTwo0():
                return Two0()
            case VTwo1():
                return Two1()
            case VZero():
                return Zero()
            case VSuc(n):
                return Suc(self.readback(depth, n))
            case VBasePoint():
                return Base()
            case VNe(head, spine):
                match head:
                    case HVar(level, name):
                        t: Term = Var(depth - 1 - level, name)
                    case HConst(c):
                        t = Const(c)
                    case HLoop():
                        t = Loop()
                    case HStuck(inner):
                        t = self.readback(depth, inner)
                for e in spine:
                    t = self._readback_elim(depth, t, e)
                return t
        raise AssertionError(f"readback: unknown value {v!r}")

    def _readback_elim(self, depth: int, t: Term, e) -> Term:
        rb = lambda v: self.readback(depth, v)
        match e:
            case EApp(a):
                return App(t, rb(a))
            case EFst():
                return Fst(t)
            case ESnd():
                return Snd(t)
            case EJ(m, d, l, r):
                return J(rb(m), rb(d), rb(l), rb(r), t)
            case EEmptyElim(m):
                return EmptyElim(rb(m), t)
            case EUnitElim(m, c):
                return UnitElim(rb(m), rb(c), t)
            case ETwoElim(m, c0, c1):
                return TwoElim(rb(m), rb(c0), rb(c1), t)
            case ENatElim(m, z, s):
                return NatElim(rb(m), rb(z), rb(s), t)
            case ECircElim(m, b, l):
                return CircElim(rb(m), rb(b), rb(l), t)
        raise AssertionError(f"readback: unknown elimination {e!r}")

    def normalize(self, env: tuple, t: Term, depth: int | None = None) -> Term:
        return self.readback(len(env) if depth is None else depth,
                             self.eval(env, t))

    # conversion

    def conv(self, depth: int, a: Value, b: Value) -> bool:
        match (a, b):
            case (VSort(x), VSort(y)):
                return x == y
            case (VBase(x), VBase(y)):
                return x == y
            case (VPi(_, d1, c1), VPi(_, d2, c2)):
                x = fresh(depth)
                return self.conv(depth, d1, d2) and \
                    self.conv(depth + 1, c1.apply(x), c2.apply(x))
            case (VSigma(_, d1, c1), VSigma(_, d2, c2)):
                x = fresh(depth)
                return self.conv(depth, d1, d2) and \
                    self.conv(depth + 1, c1.apply(x), c2.apply(x))
            case (VLam(_, b1), VLam(_, b2)):
                x = fresh(depth)
                return self.conv(depth + 1, b1.apply(x), b2.apply(x))
            case (VLam(_, b1), _):
                x = fresh(depth)
                return self.conv(depth + 1, b1.apply(x), vapp(b, x))
            case (_, VLam(_, b2)):
                x = fresh(depth)
                return self.conv(depth + 1, vapp(a, x), b2.apply(x))
            case (VPair(f1, s1), VPair(f2, s2)):
                return self.conv(depth, f1, f2) and self.conv(depth, s1, s2)
            case (VPair(f1, s1), _):
                return self.conv(depth, f1, vfst(b)) and \
                    self.conv(depth, s1, vsnd(b))
            case (_, VPair(f2, s2)):
                return self.conv(depth, vfst(a), f2) and \
                    self.conv(depth, vsnd(a), s2)
            case (VId(t1, l1, r1), VId(t2, l2, r2)):
                return self.conv(depth, t1, t2) and \
                    self.conv(depth, l1, l2) and self.conv(depth, r1, r2)
            case (VRefl(x), VRefl(y)):
                return self.conv(depth, x, y)
            case (VStar(), VStar()) | (VTwo0(), VTwo0()) | \
                 (VTwo1(), VTwo1()) | (VZero(), VZero()) | \
                 (VBasePoint(), VBasePoint()):
                return True
            case (VSuc(m), VSuc(n)):
                return self.conv(depth, m, n)
            case (VNe(h1, s1), VNe(h2, s2)):
                return self._conv_head(depth, h1, h2) and \
                    len(s1) == len(s2) and \
                    all(self._conv_elim(depth, e1, e2)
                        for e1, e2 in zip(s1, s2))
            case _:
                return False

    def _conv_head(self, depth, h1, h2) -> bool:
        match (h1, h2):
            case (HVar(l1, _), HVar(l2, _)):
                return l1 == l2
            case (HConst(c1), HConst(c2)):
                return c1 == c2
            case (HLoop(), HLoop()):
                return True
            case (HStuck(v1), HStuck(v2)):
                return self.conv(depth, v1, v2)
            case _:
                return False

    def _conv_elim(self, depth, e1, e2) -> bool:
        c = lambda x, y: self.conv(depth, x, y)
        match (e1, e2):
            case (EApp(a1), EApp(a2)):
                return c(a1, a2)
            case (EFst(), EFst()) | (ESnd(), ESnd()):
                return True
            case (EJ(m1, d1, l1, r1), EJ(m2, d2, l2, r2)):
                return c(m1, m2) and c(d1, d2) and c(l1, l2) and c(r1, r2)
            case (EEmptyElim(m1), EEmptyElim(m2)):
                return c(m1, m2)
            case (EUnitElim(m1, a1), EUnitElim(m2, a2)):
                return c(m1, m2) and c(a1, a2)
            case (ETwoElim(m1, a1, b1), ETwoElim(m2, a2, b2)):
                return c(m1, m2) and c(a1, a2) and c(b1, b2)
            case (ENatElim(m1, z1, s1), ENatElim(m2, z2, s2)):
                return c(m1, m2) and c(z1, z2) and c(s1, s2)
            case (ECircElim(m1, b1, l1), ECircElim(m2, b2, l2)):
                return c(m1, m2) and c(b1, b2) and c(l1, l2)
            case _:
                return False

    def equal(self, ty: Value, a: Value, b: Value, depth: int = 0) -> bool:
        """Type-directed equality: eta for Pi and Sigma, eta for Unit
        (all Unit values equal), structural with eta-expansion otherwise."""
        match ty:
            case VPi(x, _, cod):
                v = fresh(depth, x)
                return self.equal(cod.apply(v), vapp(a, v), vapp(b, v),
                                  depth + 1)
            case VSigma(_, first, second):
                fa = vfst(a)
                return self.equal(first, fa, vfst(b), depth) and \
                    self.equal(second.apply(fa), vsnd(a), vsnd(b), depth)
            case VBase("Unit"):
                return True
            case _:
                return self.conv(depth, a, b)

    # typing

    def _print(self, ctx: Context, v: Value) -> str:
        return print_term(self.readback(len(ctx), v), list(ctx.names),
                          reserved=self.globals.keys())

    def _err(self, ctx: Context, kind: str, message: str,
             expected: Value | None = None, actual: Value | None = None):
        raise TypeCheckError(
            kind, message,
            None if expected is None else self._print(ctx, expected),
            None if actual is None else self._print(ctx, actual))

    def infer(self, ctx: Context, t: Term) -> Value:
        match t:
            case Var(i, x):
                if not 0 <= i < len(ctx):
                    raise TypeCheckError("unbound", f"variable '{x}' escapes"
                                                    " its scope")
                return ctx.types[len(ctx) - 1 - i]
            case Sort("U"):
                return VSort("Type")
            case Sort("Type"):
                raise TypeCheckError("universe-violation",
                                     "Type is not itself a term")
            case Pi(x, a, b) | Sigma(x, a, b):
                sa = self.check_is_type(ctx, a)
                ctx2 = ctx.extended(x, self.eval(ctx.env(), a))
                sb = self.check_is_type(ctx2, b)
                return VSort("U" if sa == "U" and sb == "U" else "Type")
            case Lam(_, _):
                raise TypeCheckError(
                    "mismatch", "cannot infer the type of a bare function")
            case Pair(_, _):
                raise TypeCheckError(
                    "mismatch", "cannot infer the type of a bare pair")
            case App(f, a):
                tf = self.infer(ctx, f)
                match tf:
                    case VPi(_, dom, cod):
                        self.check(ctx, a, dom)
                        return cod.apply(self.eval(ctx.env(), a))
                    case _:
                        self._err(ctx, "not-a-function",
                                  "application head is not a function",
                                  None, tf)
            case Fst(p):
                tp = self.infer(ctx, p)
                match tp:
                    case VSigma(_, first, _):
                        return first
                    case _:
                        self._err(ctx, "not-a-pair",
                                  "projection of a non-pair", None, tp)
            case Snd(p):
                tp = self.infer(ctx, p)
                match tp:
                    case VSigma(_, _, second):
                        return second.apply(vfst(self.eval(ctx.env(), p)))
                    case _:
                        self._err(ctx, "not-a-pair",
                                  "projection of a non-pair", None, tp)
            case Id(ty, l, r):
                s = self.check_is_type(ctx, ty)
                vty = self.eval(ctx.env(), ty)
                self.check(ctx, l, vty)
                self.check(ctx, r, vty)
                return VSort(s)
            case Refl(a):
                ta = self.infer(ctx, a)
                va = self.eval(ctx.env(), a)
                return VId(ta, va, va)
            case J(m, d, l, r, p):
                tp = self.infer(ctx, p)
                match tp:
                    case VId(vA, vl, vr):
                        pass
                    case _:
                        self._err(ctx, "mismatch",
                                  "J eliminates a path", None, tp)
                env = ctx.env()
                self.check(ctx, l, vA)
                self.check(ctx, r, vA)
                if not self.equal(vA, self.eval(env, l), vl, len(ctx)):
                    self._err(ctx, "mismatch",
                              "stored left endpoint disagrees with the path",
                              VId(vA, vl, vr),
                              VId(vA, self.eval(env, l), self.eval(env, r)))
                if not self.equal(vA, self.eval(env, r), vr, len(ctx)):
                    self._err(ctx, "mismatch",
                              "stored right endpoint disagrees with the path",
                              VId(vA, vl, vr),
                              VId(vA, self.eval(env, l), self.eval(env, r)))
                motive_ty = VPi("b", vA, FnClosure(
                    lambda y: VPi("q", VId(vA, vl, y),
                                  FnClosure(lambda _q: VSort("Type")))))
                self.check(ctx, m, motive_ty)
                vm = self.eval(env, m)
                self.check_value(ctx, d, vapp(vapp(vm, vl), VRefl(vl)))
                return vapp(vapp(vm, vr), self.eval(env, p))
            case BaseType(_):
                return VSort("U")
            case Star():
                return VBase("Unit")
            case Two0() | Two1():
                return VBase("Two")
            case Zero():
                return VBase("Nat")
            case Suc(n):
                self.check(ctx, n, VBase("Nat"))
                return VBase("Nat")
            case Base():
                return VBase("Circle")
            case Loop():
                return VId(VBase("Circle"), VBasePoint(), VBasePoint())
            case EmptyElim(m, s):
                vm = self._check_motive(ctx, m, "Empty")
                self.check(ctx, s, VBase("Empty"))
                return vapp(vm, self.eval(ctx.env(), s))
            case UnitElim(m, c, s):
                vm = self._check_motive(ctx, m, "Unit")
                self.check_value(ctx, c, vapp(vm, VStar()))
                self.check(ctx, s, VBase("Unit"))
                return vapp(vm, self.eval(ctx.env(), s))
            case TwoElim(m, c0, c1, s):
                vm = self._check_motive(ctx, m, "Two")
                self.check_value(ctx, c0, vapp(vm, VTwo0()))
                self.check_value(ctx, c1, vapp(vm, VTwo1()))
                self.check(ctx, s, VBase("Two"))
                return vapp(vm, self.eval(ctx.env(), s))
            case NatElim(m, z, sc, s):
                vm = self._check_motive(ctx, m, "Nat")
                self.check_value(ctx, z, vapp(vm, VZero()))
                suc_ty = VPi("n", VBase("Nat"), FnClosure(
                    lambda k: VPi("ih", vapp(vm, k),
                                  FnClosure(lambda _i: vapp(vm, VSuc(k))))))
                self.check_value(ctx, sc, suc_ty)
                self.check(ctx, s, VBase("Nat"))
                return vapp(vm, self.eval(ctx.env(), s))
            case CircElim(m, b, l, s):
                vm = self._check_motive(ctx, m, "Circle")
                self.check_value(ctx, b, vapp(vm, VBasePoint()))
                vb = self.eval(ctx.env(), b)
                transport_motive = VLam("y", FnClosure(
                    lambda y: VLam("q", FnClosure(lambda _q: vapp(vm, y)))))
                moved = vJ(transport_motive, vb, VBasePoint(), VBasePoint(),
                           VNe(HLoop()))
                self.check_value(ctx, l,
                                 VId(vapp(vm, VBasePoint()), moved, vb))
                self.check(ctx, s, VBase("Circle"))
                return vapp(vm, self.eval(ctx.env(), s))
            case Const(c):
                info = self.globals.get(c)
                if info is None:
                    raise TypeCheckError("unbound", f"unknown name '{c}'")
                return info.type_value
        raise AssertionError(f"infer: unknown term {t!r}")

    def _check_motive(self, ctx: Context, m: Term, kind: str) -> Value:
        self.check(ctx, m, VPi("_", VBase(kind),
                               FnClosure(lambda _x: VSort("Type"))))
        return self.eval(ctx.env(), m)

    def check_is_type(self, ctx: Context, t: Term) -> str:
        """Return the sort ("U" or "Type") classifying the type ``t``."""
        s = self.infer(ctx, t)
        match s:
            case VSort(n):
                return n
            case _:
                self._err(ctx, "not-a-type", "expected a type", None, s)

    def check(self, ctx: Context, t: Term, ty: Value) -> None:
        match (t, ty):
            case (Lam(x, body), VPi(_, dom, cod)):
                v = fresh(len(ctx), x)
                self.check(ctx.extended(x, dom), body, cod.apply(v))
                return
            case (Lam(_, _), _):
                self._err(ctx, "mismatch",
                          "function against a non-function type", ty, None)
            case (Pair(a, b), VSigma(_, first, second)):
                self.check(ctx, a, first)
                self.check(ctx, b, second.apply(self.eval(ctx.env(), a)))
                return
            case (Pair(_, _), _):
                self._err(ctx, "mismatch",
                          "pair against a non-pair type", ty, None)
            case _:
                actual = self.infer(ctx, t)
                if self._subsumes(ctx, ty, actual):
                    return
                if isinstance(ty, VSort) and isinstance(actual, VSort):
                    self._err(ctx, "universe-violation",
                              "wrong universe", ty, actual)
                self._err(ctx, "mismatch", "type mismatch", ty, actual)

    def check_value(self, ctx: Context, t: Term, ty: Value) -> None:
        self.check(ctx, t, ty)

    def _subsumes(self, ctx: Context, expected: Value, actual: Value) -> bool:
        match (expected, actual):
            case (VSort("Type"), VSort("U")):  # small types coerce upward
                return True
            case _:
                return self.conv(len(ctx), expected, actual)

    # declarations

    def classifier(self, ctx: Context, ty: Term) -> Value:
        """Evaluate a declaration's type annotation; the literal sort
        ``Type`` is a valid classifier even though it is not a term."""
        if ty == Sort("Type"):
            return VSort("Type")
        self.check_is_type(ctx, ty)
        return self.eval(ctx.env(), ty)

    def check_telescope(self, tele: Telescope) -> Context:
        ctx = Context()
        for name, ty in tele:
            vty = self.classifier(ctx, ty)
            ctx = ctx.extended(name, vty)
        return ctx

    def load_declaration(self, d: Declaration, path: str = "<input>") -> None:
        if d.name in self.globals:
            raise DuplicateName(d.name, path, d.line, d.col)
        ctx = Context()
        try:
            ty_value = self.classifier(ctx, d.type)
            if d.kind == "axiom":
                body_value = None
            else:
                self.check(ctx, d.body, ty_value)
                body_value = self.eval((), d.body)
        except TypeCheckError as e:
            raise TypeCheckError(e.kind, e.message, e.expected, e.actual,
                                 decl=d.name, path=path,
                                 line=d.line, col=d.col) from None
        self.globals[d.name] = GlobalInfo(
            d.name, d.kind == "axiom", ty_value, body_value,
            d.type, d.body)
        self.order.append(d.name)

    def load(self, source: SourceFile) -> None:
        for d in source.declarations:
            self.load_declaration(d, source.path)
