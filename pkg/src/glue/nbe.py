"""Normalization by evaluation over Kripke-style glued values.

Semantic values follow the type structure: normal forms at atoms, pairs at
products, and at arrows a glued pair of a syntactic term and a function
applicable at any future world reached by a renaming.  Evaluation interprets
raw syntax in an environment of values; reify extracts eta-long normal forms
and reflect includes neutrals, trading places at each arrow.
"""

from dataclasses import dataclass

from .core import (
    App,
    Comp,
    Ext,
    Fst,
    Id,
    Lam,
    Op,
    Pair,
    Proj,
    Snd,
    Sub,
    Tm,
    Var,
    infer_sb,
    infer_tm,
)
from .errors import IllTyped
from .normal import (
    NApp,
    NFst,
    NLam,
    NOp,
    NPair,
    NShift,
    NSnd,
    NVar,
    Ne,
    NfSb,
    id_ne_sub,
    readback_ne,
    readback_nf,
    readback_nfsb,
)
from .renaming import ren_id, ren_is_id, ren_weaken, rename_ne, rename_nf, rename_tm
from .signature import Arrow, Atom, Prod, Ty, lookup_op


class Val:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class VAtom(Val):
    world: tuple
    ty: Ty
    nf: object


@dataclass(frozen=True, slots=True)
class VPair(Val):
    world: tuple
    ty: Ty
    fst: Val
    snd: Val


@dataclass(frozen=True, slots=True)
class VArrow(Val):
    """Glued arrow value: a definable term tracking a Kripke function."""

    world: tuple
    ty: Ty
    syn: Tm
    fn: object


@dataclass(frozen=True, slots=True)
class Closure:
    """Suspended lambda body over its captured environment."""

    dom: Ty
    body: Tm
    env: "Env"


@dataclass(frozen=True, slots=True)
class NeutralClosure:
    """Kripke function arising from a reflected neutral of arrow type."""

    cod: Ty
    ne: Ne


@dataclass(frozen=True, slots=True)
class Env:
    world: tuple
    entries: tuple

    def ctx(self):
        return tuple(v.ty for v in self.entries)


def env_extend(env, v):
    return Env(env.world, (*env.entries, v))


def rename_val(r, v):
    match v:
        case VAtom(_, ty, nf_):
            return VAtom(r.dom, ty, rename_nf(r, nf_))
        case VPair(_, ty, fst, snd):
            return VPair(r.dom, ty, rename_val(r, fst), rename_val(r, snd))
        case VArrow(_, ty, syn, fn):
            match fn:
                case Closure(dom, body, env):
                    fn2 = Closure(dom, body, rename_env(r, env))
                case NeutralClosure(cod, ne):
                    fn2 = NeutralClosure(cod, rename_ne(r, ne))
            return VArrow(r.dom, ty, rename_tm(r, syn), fn2)
    raise TypeError(f"not a value: {v!r}")


def rename_env(r, env):
    return Env(r.dom, tuple(rename_val(r, v) for v in env.entries))


def apply_fn(sig, fn, r, v):
    """Apply a Kripke function at the future world r.dom, where v lives."""
    match fn:
        case Closure(_, body, env):
            base = env if ren_is_id(r) else rename_env(r, env)
            return eval_tm(sig, env_extend(base, v), body)
        case NeutralClosure(cod, ne):
            ne2 = ne if ren_is_id(r) else rename_ne(r, ne)
            arg = reify(sig, r.dom, v.ty, v)
            return reflect(sig, r.dom, cod, NApp(ne2, arg))
    raise TypeError(f"not a Kripke function: {fn!r}")


def reflect(sig, world, ty, n):
    """Type-directed inclusion of a neutral into the semantic values."""
    match ty:
        case Atom(_):
            return VAtom(world, ty, NShift(n))
        case Prod(left, right):
            return VPair(
                world,
                ty,
                reflect(sig, world, left, NFst(n)),
                reflect(sig, world, right, NSnd(n)),
            )
        case Arrow(_, cod):
            return VArrow(world, ty, readback_ne(n), NeutralClosure(cod, n))
    raise TypeError(f"not a type: {ty!r}")


def reify(sig, world, ty, v):
    """Type-directed extraction of an eta-long normal form from a value."""
    match ty:
        case Atom(_):
            return v.nf
        case Prod(left, right):
            return NPair(reify(sig, world, left, v.fst), reify(sig, world, right, v.snd))
        case Arrow(dom, cod):
            inner = (*world, dom)
            arg = reflect(sig, inner, dom, NVar(0))
            out = apply_fn(sig, v.fn, ren_weaken(world, dom), arg)
            return NLam(dom, reify(sig, inner, cod, out))
    raise TypeError(f"not a type: {ty!r}")


def reify_env(sig, env):
    return NfSb(
        env.world,
        tuple(reify(sig, env.world, v.ty, v) for v in env.entries),
    )


def reflect_env(sig, ctx):
    """Environment of reflected identity-substitution entries."""
    ctx = tuple(ctx)
    ids = id_ne_sub(ctx)
    return Env(
        ctx,
        tuple(reflect(sig, ctx, ty, ne) for ty, ne in zip(ctx, ids.entries)),
    )


def eval_tm(sig, env, t):
    match t:
        case Var():
            return env.entries[-1]
        case Op(name):
            arity = lookup_op(sig, name)
            return reflect(
                sig, env.world, arity.result, NOp(name, reify_env(sig, env))
            )
        case Sub(tm, sb):
            return eval_tm(sig, eval_sb(sig, env, sb), tm)
        case Lam(dom, body):
            body_ty = infer_tm(sig, (*env.ctx(), dom), body)
            syn = Sub(t, readback_nfsb(reify_env(sig, env)))
            return VArrow(env.world, Arrow(dom, body_ty), syn, Closure(dom, body, env))
        case App(fn, arg):
            vf = eval_tm(sig, env, fn)
            va = eval_tm(sig, env, arg)
            return apply_fn(sig, vf.fn, ren_id(env.world), va)
        case Pair(fst, snd):
            vf = eval_tm(sig, env, fst)
            vs = eval_tm(sig, env, snd)
            return VPair(env.world, Prod(vf.ty, vs.ty), vf, vs)
        case Fst(tm):
            return eval_tm(sig, env, tm).fst
        case Snd(tm):
            return eval_tm(sig, env, tm).snd
    raise TypeError(f"not a term: {t!r}")


def eval_sb(sig, env, d):
    match d:
        case Id():
            return env
        case Proj():
            return Env(env.world, env.entries[:-1])
        case Ext(sb, tm):
            return env_extend(eval_sb(sig, env, sb), eval_tm(sig, env, tm))
        case Comp(outer, inner):
            return eval_sb(sig, eval_sb(sig, env, inner), outer)
    raise TypeError(f"not a substitution: {d!r}")


def quote(sig, world, ty, v):
    """Readback of the reified value; the syntactic shadow of v."""
    return readback_nf(reify(sig, world, ty, v))


def nf(sig, ctx, t):
    """Eta-long beta-normal form of a well-typed term."""
    ctx = tuple(ctx)
    ty = infer_tm(sig, ctx, t)
    v = eval_tm(sig, reflect_env(sig, ctx), t)
    return reify(sig, ctx, ty, v)


def nf_sub(sig, ctx, d):
    """Normal form of a substitution: the vector of its normal entries."""
    ctx = tuple(ctx)
    infer_sb(sig, ctx, d)
    env = eval_sb(sig, reflect_env(sig, ctx), d)
    return reify_env(sig, env)


def def_eq(sig, ctx, t1, t2):
    """Decide definitional equality by comparing normal forms."""
    ty1 = infer_tm(sig, ctx, t1)
    ty2 = infer_tm(sig, ctx, t2)
    if ty1 != ty2:
        raise IllTyped("terms compared at different types")
    return nf(sig, ctx, t1) == nf(sig, ctx, t2)
