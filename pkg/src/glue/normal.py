"""Neutral and eta-long normal forms with their typing judgments and readback.

The shift from neutral to normal is only permitted at atomic type, which is
what forces normal forms to be eta-long.  Normal/neutral substitutions are
vectors of entries over a recorded domain context; the domain fixes the
weakening chain that roots the vector when it is read back into raw syntax.
"""

from dataclasses import dataclass

from .core import App, Ext, Fst, Lam, Op, Pair, Snd, Sub, proj_pow, var_ix
from .errors import IllTyped
from .signature import Arrow, Atom, Prod, Ty, lookup_op


class Ne:
    __slots__ = ()


class Nf:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class NVar(Ne):
    ix: int


@dataclass(frozen=True, slots=True)
class NOp(Ne):
    name: str
    args: "NfSb"


@dataclass(frozen=True, slots=True)
class NApp(Ne):
    fn: Ne
    arg: Nf


@dataclass(frozen=True, slots=True)
class NFst(Ne):
    ne: Ne


@dataclass(frozen=True, slots=True)
class NSnd(Ne):
    ne: Ne


@dataclass(frozen=True, slots=True)
class NShift(Nf):
    """A neutral included as a normal form; legal only at atomic type."""

    ne: Ne


@dataclass(frozen=True, slots=True)
class NLam(Nf):
    dom: Ty
    body: Nf


@dataclass(frozen=True, slots=True)
class NPair(Nf):
    fst: Nf
    snd: Nf


@dataclass(frozen=True, slots=True)
class NfSb:
    dom: tuple
    entries: tuple


@dataclass(frozen=True, slots=True)
class NeSb:
    dom: tuple
    entries: tuple


def check_ne(sig, ctx, n):
    """Synthesize the type of a neutral, or raise IllTyped."""
    match n:
        case NVar(ix):
            if not 0 <= ix < len(ctx):
                raise IllTyped(f"neutral variable {ix} out of range")
            return ctx[len(ctx) - ix - 1]
        case NOp(name, args):
            ar = lookup_op(sig, name)
            if args.dom != tuple(ctx):
                raise IllTyped(f"argument vector of {name} recorded for another context")
            if len(args.entries) != len(ar.args):
                raise IllTyped(f"operation {name} applied to wrong number of arguments")
            for entry, ty in zip(args.entries, ar.args):
                if not check_nf(sig, ctx, entry, ty):
                    raise IllTyped(f"ill-typed argument to {name}")
            return ar.result
        case NApp(fn, arg):
            fn_ty = check_ne(sig, ctx, fn)
            if not isinstance(fn_ty, Arrow):
                raise IllTyped("neutral application head is not an arrow")
            if not check_nf(sig, ctx, arg, fn_ty.dom):
                raise IllTyped("ill-typed neutral application argument")
            return fn_ty.cod
        case NFst(ne):
            ty = check_ne(sig, ctx, ne)
            if not isinstance(ty, Prod):
                raise IllTyped("neutral fst of non-product")
            return ty.left
        case NSnd(ne):
            ty = check_ne(sig, ctx, ne)
            if not isinstance(ty, Prod):
                raise IllTyped("neutral snd of non-product")
            return ty.right
    raise TypeError(f"not a neutral: {n!r}")


def check_nf(sig, ctx, n, ty):
    """True iff n is an eta-long normal form of type ty in ctx."""
    match n:
        case NShift(ne):
            if not isinstance(ty, Atom):
                return False
            try:
                return check_ne(sig, ctx, ne) == ty
            except IllTyped:
                return False
        case NLam(dom, body):
            return (
                isinstance(ty, Arrow)
                and dom == ty.dom
                and check_nf(sig, (*ctx, dom), body, ty.cod)
            )
        case NPair(fst, snd):
            return (
                isinstance(ty, Prod)
                and check_nf(sig, ctx, fst, ty.left)
                and check_nf(sig, ctx, snd, ty.right)
            )
    raise TypeError(f"not a normal form: {n!r}")


def check_nfsb(sig, ctx, s, cod):
    """True iff s is a normal substitution ctx -> cod."""
    if s.dom != tuple(ctx) or len(s.entries) != len(cod):
        return False
    return all(check_nf(sig, ctx, e, ty) for e, ty in zip(s.entries, cod))


def id_ne_sub(ctx):
    """The identity substitution, admissible as a neutral substitution."""
    n = len(ctx)
    return NeSb(tuple(ctx), tuple(NVar(n - 1 - j) for j in range(n)))


def readback_ne(n):
    match n:
        case NVar(ix):
            return var_ix(ix)
        case NOp(name, args):
            return Sub(Op(name), readback_nfsb(args))
        case NApp(fn, arg):
            return App(readback_ne(fn), readback_nf(arg))
        case NFst(ne):
            return Fst(readback_ne(ne))
        case NSnd(ne):
            return Snd(readback_ne(ne))
    raise TypeError(f"not a neutral: {n!r}")


def readback_nf(n):
    match n:
        case NShift(ne):
            return readback_ne(ne)
        case NLam(dom, body):
            return Lam(dom, readback_nf(body))
        case NPair(fst, snd):
            return Pair(readback_nf(fst), readback_nf(snd))
    raise TypeError(f"not a normal form: {n!r}")


def readback_nfsb(s):
    """Vector as an extension chain rooted at the |dom|-fold weakening."""
    sb = proj_pow(len(s.dom))
    for entry in s.entries:
        sb = Ext(sb, readback_nf(entry))
    return sb


def ne_to_json(n):
    match n:
        case NVar(ix):
            return {"ne": "var", "ix": ix}
        case NOp(name, args):
            return {"ne": "op", "name": name, "args": nfsb_to_json(args)}
        case NApp(fn, arg):
            return {"ne": "app", "fn": ne_to_json(fn), "arg": nf_to_json(arg)}
        case NFst(ne):
            return {"ne": "fst", "of": ne_to_json(ne)}
        case NSnd(ne):
            return {"ne": "snd", "of": ne_to_json(ne)}
    raise TypeError(f"not a neutral: {n!r}")


def nf_to_json(n):
    match n:
        case NShift(ne):
            return {"nf": "ne", "ne": ne_to_json(ne)}
        case NLam(dom, body):
            return {"nf": "lam", "dom": ty_to_json(dom), "body": nf_to_json(body)}
        case NPair(fst, snd):
            return {"nf": "pair", "fst": nf_to_json(fst), "snd": nf_to_json(snd)}
    raise TypeError(f"not a normal form: {n!r}")


def nfsb_to_json(s):
    return {
        "dom": [ty_to_json(ty) for ty in s.dom],
        "entries": [nf_to_json(e) for e in s.entries],
    }


def ty_to_json(ty):
    match ty:
        case Atom(sort):
            return {"ty": "atom", "sort": sort}
        case Prod(left, right):
            return {"ty": "prod", "left": ty_to_json(left), "right": ty_to_json(right)}
        case Arrow(dom, cod):
            return {"ty": "arr", "dom": ty_to_json(dom), "cod": ty_to_json(cod)}
    raise TypeError(f"not a type: {ty!r}")


def ty_from_json(obj):
    match obj["ty"]:
        case "atom":
            return Atom(obj["sort"])
        case "prod":
            return Prod(ty_from_json(obj["left"]), ty_from_json(obj["right"]))
        case "arr":
            return Arrow(ty_from_json(obj["dom"]), ty_from_json(obj["cod"]))
    raise ValueError(f"bad type tag: {obj!r}")


def ne_from_json(obj):
    match obj["ne"]:
        case "var":
            return NVar(obj["ix"])
        case "op":
            return NOp(obj["name"], nfsb_from_json(obj["args"]))
        case "app":
            return NApp(ne_from_json(obj["fn"]), nf_from_json(obj["arg"]))
        case "fst":
            return NFst(ne_from_json(obj["of"]))
        case "snd":
            return NSnd(ne_from_json(obj["of"]))
    raise ValueError(f"bad neutral tag: {obj!r}")


def nf_from_json(obj):
    match obj["nf"]:
        case "ne":
            return NShift(ne_from_json(obj["ne"]))
        case "lam":
            return NLam(ty_from_json(obj["dom"]), nf_from_json(obj["body"]))
        case "pair":
            return NPair(nf_from_json(obj["fst"]), nf_from_json(obj["snd"]))
    raise ValueError(f"bad normal-form tag: {obj!r}")


def nfsb_from_json(obj):
    return NfSb(
        tuple(ty_from_json(t) for t in obj["dom"]),
        tuple(nf_from_json(e) for e in obj["entries"]),
    )
