"""The category of renamings: variable-to-variable context maps.

A renaming from ``dom`` to ``cod`` is a vector with one De Bruijn index into
``dom`` per entry of ``cod``, preserving types.  Renamings act contravariantly
on syntax: a subject well-typed in ``cod`` is relabeled into ``dom``.
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
    proj_pow,
    un_var_ix,
    var_ix,
)
from .errors import IllTyped
from .normal import NApp, NFst, NLam, NOp, NPair, NShift, NSnd, NVar, NfSb


@dataclass(frozen=True, slots=True)
class Ren:
    dom: tuple
    cod: tuple
    map: tuple

    def __post_init__(self):
        if len(self.map) != len(self.cod):
            raise IllTyped("renaming vector length must match codomain")
        n = len(self.dom)
        for j, k in enumerate(self.map):
            if not 0 <= k < n:
                raise IllTyped(f"renaming index {k} out of range")
            if self.dom[n - k - 1] != self.cod[j]:
                raise IllTyped(f"renaming entry {j} changes type")


def ren_id(ctx):
    ctx = tuple(ctx)
    n = len(ctx)
    return Ren(ctx, ctx, tuple(n - j - 1 for j in range(n)))


def ren_is_id(r):
    if r.dom != r.cod:
        return False
    n = len(r.dom)
    return all(k == n - j - 1 for j, k in enumerate(r.map))


def ren_weaken(ctx, ty):
    """The renaming ctx,ty -> ctx shifting every index up by one."""
    ctx = tuple(ctx)
    n = len(ctx)
    return Ren((*ctx, ty), ctx, tuple(n - j for j in range(n)))


def ren_lift(r, ty):
    """Extend a renaming to act under one binder of type ty."""
    return Ren(
        (*r.dom, ty), (*r.cod, ty), tuple(k + 1 for k in r.map) + (0,)
    )


def ren_comp(outer, inner):
    """Composite inner.dom -> outer.cod; inner is applied first."""
    if inner.cod != outer.dom:
        raise IllTyped("renaming composition domain mismatch")
    n = len(inner.cod)
    return Ren(
        inner.dom, outer.cod, tuple(inner.map[n - k - 1] for k in outer.map)
    )


def ren_pop(r):
    """Forget the most recent codomain entry."""
    return Ren(r.dom, r.cod[:-1], r.map[:-1])


def apply_ren(r, k):
    """Image of De Bruijn index k (valid in cod) under the renaming."""
    return r.map[len(r.cod) - k - 1]


def ren_to_sub(r):
    """The substitution representing r: extensions by variables over p^|dom|."""
    sb = proj_pow(len(r.dom))
    for k in r.map:
        sb = Ext(sb, var_ix(k))
    return sb


def _sub_of_ren(r):
    """Like ren_to_sub but emits p^k when r is a plain weakening prefix."""
    n, m = len(r.dom), len(r.cod)
    if r.cod == r.dom[:m] and all(k == n - j - 1 for j, k in enumerate(r.map)):
        return proj_pow(n - m)
    return ren_to_sub(r)


def rename_tm(r, t):
    """Relabel free indices of a raw term through r.

    The result is definitionally equal to Sub(t, ren_to_sub(r)); identity
    renamings leave the term untouched.
    """
    k = un_var_ix(t)
    if k is not None:
        return var_ix(apply_ren(r, k))
    match t:
        case Op(_):
            sb = _sub_of_ren(r)
            return t if sb == Id() else Sub(t, sb)
        case Sub(tm, sb):
            return Sub(tm, rename_sb(r, sb))
        case Lam(dom, body):
            return Lam(dom, rename_tm(ren_lift(r, dom), body))
        case App(fn, arg):
            return App(rename_tm(r, fn), rename_tm(r, arg))
        case Pair(fst, snd):
            return Pair(rename_tm(r, fst), rename_tm(r, snd))
        case Fst(tm):
            return Fst(rename_tm(r, tm))
        case Snd(tm):
            return Snd(rename_tm(r, tm))
    raise TypeError(f"not a term: {t!r}")


def rename_sb(r, s):
    """Precompose a raw substitution with a renaming."""
    match s:
        case Id():
            return _sub_of_ren(r)
        case Proj():
            return _sub_of_ren(ren_pop(r))
        case Ext(sb, tm):
            return Ext(rename_sb(r, sb), rename_tm(r, tm))
        case Comp(outer, inner):
            return Comp(outer, rename_sb(r, inner))
    raise TypeError(f"not a substitution: {s!r}")


def rename_ne(r, n):
    match n:
        case NVar(ix):
            return NVar(apply_ren(r, ix))
        case NOp(name, args):
            return NOp(name, rename_nfsb(r, args))
        case NApp(fn, arg):
            return NApp(rename_ne(r, fn), rename_nf(r, arg))
        case NFst(ne):
            return NFst(rename_ne(r, ne))
        case NSnd(ne):
            return NSnd(rename_ne(r, ne))
    raise TypeError(f"not a neutral: {n!r}")


def rename_nf(r, n):
    match n:
        case NShift(ne):
            return NShift(rename_ne(r, ne))
        case NLam(dom, body):
            return NLam(dom, rename_nf(ren_lift(r, dom), body))
        case NPair(fst, snd):
            return NPair(rename_nf(r, fst), rename_nf(r, snd))
    raise TypeError(f"not a normal form: {n!r}")


def rename_nfsb(r, s):
    return NfSb(r.dom, tuple(rename_nf(r, e) for e in s.entries))
