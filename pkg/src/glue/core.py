"""Raw syntax of the explicit-substitution term calculus plus type synthesis.

Terms use De Bruijn discipline: ``Var`` names the most recent binding, and
deeper variables are spelled ``Sub(Var, Proj o ... o Proj)``.  Substitutions
are first-class trees; ``Comp(outer, inner)`` applies ``inner`` first.
"""

from dataclasses import dataclass

from . import sexp
from .errors import IllTyped, ParseError
from .signature import Arrow, Prod, Ty, lookup_op, ty_of_sexp, ty_to_sexp, ty_well_formed


class Tm:
    __slots__ = ()


class Sb:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Tm):
    """The most recently bound variable."""


@dataclass(frozen=True, slots=True)
class Op(Tm):
    name: str


@dataclass(frozen=True, slots=True)
class Sub(Tm):
    tm: Tm
    sb: Sb


@dataclass(frozen=True, slots=True)
class Lam(Tm):
    dom: Ty
    body: Tm


@dataclass(frozen=True, slots=True)
class App(Tm):
    fn: Tm
    arg: Tm


@dataclass(frozen=True, slots=True)
class Pair(Tm):
    fst: Tm
    snd: Tm


@dataclass(frozen=True, slots=True)
class Fst(Tm):
    tm: Tm


@dataclass(frozen=True, slots=True)
class Snd(Tm):
    tm: Tm


@dataclass(frozen=True, slots=True)
class Id(Sb):
    """Identity substitution; its context comes from the use site."""


@dataclass(frozen=True, slots=True)
class Proj(Sb):
    """Single weakening: forget the most recent binding."""


@dataclass(frozen=True, slots=True)
class Ext(Sb):
    sb: Sb
    tm: Tm


@dataclass(frozen=True, slots=True)
class Comp(Sb):
    outer: Sb
    inner: Sb


VAR = Var()
ID = Id()
PROJ = Proj()


def proj_pow(k):
    """k-fold weakening, right-nested: p^0 = id, p^2 = Comp(p, p)."""
    if k == 0:
        return ID
    s = PROJ
    for _ in range(k - 1):
        s = Comp(PROJ, s)
    return s


def un_proj_pow(s):
    """Inverse of proj_pow; None if s is not a right-nested weakening chain."""
    k = 0
    while True:
        match s:
            case Id():
                return k
            case Proj():
                return k + 1
            case Comp(Proj(), inner):
                k += 1
                s = inner
            case _:
                return None


def var_ix(k):
    """The variable k bindings out: Var for k = 0, else Sub(Var, p^k)."""
    if k == 0:
        return VAR
    return Sub(VAR, proj_pow(k))


def un_var_ix(t):
    """Inverse of var_ix; None if t is not a canonical variable spine."""
    match t:
        case Var():
            return 0
        case Sub(Var(), s):
            k = un_proj_pow(s)
            if k is not None and k > 0:
                return k
    return None


def lift(delta):
    """De Bruijn lifting: if delta : G -> D then lift(delta) : G,s -> D,s."""
    return Ext(Comp(delta, PROJ), VAR)


def infer_tm(sig, ctx, t):
    """Synthesize the unique type of t in ctx, or raise IllTyped."""
    match t:
        case Var():
            if not ctx:
                raise IllTyped("variable in empty context")
            return ctx[-1]
        case Op(name):
            ar = lookup_op(sig, name)
            if tuple(ctx) != ar.args:
                raise IllTyped(
                    f"operation {name} requires context {list(ar.args)}, got {list(ctx)}"
                )
            return ar.result
        case Sub(tm, sb):
            return infer_tm(sig, infer_sb(sig, ctx, sb), tm)
        case Lam(dom, body):
            if not ty_well_formed(sig, dom):
                raise IllTyped(f"lambda domain uses undeclared sort: {dom}")
            return Arrow(dom, infer_tm(sig, (*ctx, dom), body))
        case App(fn, arg):
            fn_ty = infer_tm(sig, ctx, fn)
            if not isinstance(fn_ty, Arrow):
                raise IllTyped(f"application head is not an arrow: {print_tm(fn)}")
            arg_ty = infer_tm(sig, ctx, arg)
            if arg_ty != fn_ty.dom:
                raise IllTyped(f"argument type mismatch in {print_tm(t)}")
            return fn_ty.cod
        case Pair(fst, snd):
            return Prod(infer_tm(sig, ctx, fst), infer_tm(sig, ctx, snd))
        case Fst(tm):
            ty = infer_tm(sig, ctx, tm)
            if not isinstance(ty, Prod):
                raise IllTyped(f"fst of non-product: {print_tm(tm)}")
            return ty.left
        case Snd(tm):
            ty = infer_tm(sig, ctx, tm)
            if not isinstance(ty, Prod):
                raise IllTyped(f"snd of non-product: {print_tm(tm)}")
            return ty.right
    raise TypeError(f"not a term: {t!r}")


def infer_sb(sig, ctx, d):
    """Synthesize the codomain context of d from domain ctx."""
    match d:
        case Id():
            return tuple(ctx)
        case Proj():
            if not ctx:
                raise IllTyped("weakening in empty context")
            return tuple(ctx[:-1])
        case Ext(sb, tm):
            cod = infer_sb(sig, ctx, sb)
            return (*cod, infer_tm(sig, ctx, tm))
        case Comp(outer, inner):
            return infer_sb(sig, infer_sb(sig, ctx, inner), outer)
    raise TypeError(f"not a substitution: {d!r}")


def tm_of_sexp(form):
    match form:
        case "v":
            return VAR
        case ["ix", str(k)] if k.isdigit():
            return var_ix(int(k))
        case ["op", str(name)]:
            return Op(name)
        case ["sub", tm, sb]:
            return Sub(tm_of_sexp(tm), sb_of_sexp(sb))
        case ["lam", ty, tm]:
            return Lam(ty_of_sexp(ty), tm_of_sexp(tm))
        case ["app", fn, arg]:
            return App(tm_of_sexp(fn), tm_of_sexp(arg))
        case ["pair", fst, snd]:
            return Pair(tm_of_sexp(fst), tm_of_sexp(snd))
        case ["fst", tm]:
            return Fst(tm_of_sexp(tm))
        case ["snd", tm]:
            return Snd(tm_of_sexp(tm))
    raise ParseError(f"expected a term, got {sexp.show(form)}")


def sb_of_sexp(form):
    match form:
        case "id":
            return ID
        case "p":
            return PROJ
        case ["ext", sb, tm]:
            return Ext(sb_of_sexp(sb), tm_of_sexp(tm))
        case ["comp", outer, inner]:
            return Comp(sb_of_sexp(outer), sb_of_sexp(inner))
    raise ParseError(f"expected a substitution, got {sexp.show(form)}")


def tm_to_sexp(t):
    k = un_var_ix(t)
    if k is not None and k > 0:
        return ["ix", str(k)]
    match t:
        case Var():
            return "v"
        case Op(name):
            return ["op", name]
        case Sub(tm, sb):
            return ["sub", tm_to_sexp(tm), sb_to_sexp(sb)]
        case Lam(dom, body):
            return ["lam", ty_to_sexp(dom), tm_to_sexp(body)]
        case App(fn, arg):
            return ["app", tm_to_sexp(fn), tm_to_sexp(arg)]
        case Pair(fst, snd):
            return ["pair", tm_to_sexp(fst), tm_to_sexp(snd)]
        case Fst(tm):
            return ["fst", tm_to_sexp(tm)]
        case Snd(tm):
            return ["snd", tm_to_sexp(tm)]
    raise TypeError(f"not a term: {t!r}")


def sb_to_sexp(s):
    match s:
        case Id():
            return "id"
        case Proj():
            return "p"
        case Ext(sb, tm):
            return ["ext", sb_to_sexp(sb), tm_to_sexp(tm)]
        case Comp(outer, inner):
            return ["comp", sb_to_sexp(outer), sb_to_sexp(inner)]
    raise TypeError(f"not a substitution: {s!r}")


def parse_tm(text):
    return tm_of_sexp(sexp.read(text))


def parse_sb(text):
    return sb_of_sexp(sexp.read(text))


def print_tm(t):
    return sexp.show(tm_to_sexp(t))


def print_sb(s):
    return sexp.show(sb_to_sexp(s))
