"""Naive definitional-equality oracle: oriented rewriting plus eta-expansion.

Deliberately a different algorithm family from the semantic normalizer so
that agreement between the two is meaningful evidence.  The pipeline is
push_subst (resolve explicit substitutions), beta_normalize (contract
redexes, innermost first), then eta_expand (type-directed, top-down).

Two derived rules extend the base equation set: ``sb/clos`` fuses nested
substitutions (t[d][x] -> t[d o x]) and ``op/sat`` expands the weakening
root of an operation's argument vector into explicit eta-expanded variables.
Both are consequences of the base equations; without them the oriented
system would leave stuck terms that the equational theory identifies.
"""

from dataclasses import dataclass

from .core import (
    App,
    Comp,
    Ext,
    Fst,
    ID,
    Id,
    Lam,
    Op,
    PROJ,
    Pair,
    Proj,
    Snd,
    Sub,
    VAR,
    Var,
    infer_sb,
    infer_tm,
    lift,
    print_tm,
    proj_pow,
    un_proj_pow,
    un_var_ix,
    var_ix,
)
from .errors import FuelExhausted, IllTyped
from .signature import Arrow, Atom, Prod, lookup_op

FUEL_BUDGET = 1_000_000


@dataclass(frozen=True, slots=True)
class RewriteTrace:
    steps: tuple
    final: object


class _Rewriter:
    """Applies the oriented rules, recording (rule, path) steps and burning fuel."""

    def __init__(self, trace=None, fuel=FUEL_BUDGET):
        self.trace = trace
        self.fuel = fuel

    def fire(self, rule, path):
        self.fuel -= 1
        if self.fuel < 0:
            raise FuelExhausted("rewrite step budget exhausted")
        if self.trace is not None:
            self.trace.append((rule, path))

    # -- substitution pushing ------------------------------------------

    def push_tm(self, t, path=()):
        match t:
            case Var() | Op(_):
                return t
            case Sub(tm, sb):
                return self.apply(tm, self.push_sb(sb, path + (1,)), path)
            case Lam(dom, body):
                return Lam(dom, self.push_tm(body, path + (0,)))
            case App(fn, arg):
                return App(self.push_tm(fn, path + (0,)), self.push_tm(arg, path + (1,)))
            case Pair(fst, snd):
                return Pair(self.push_tm(fst, path + (0,)), self.push_tm(snd, path + (1,)))
            case Fst(tm):
                return Fst(self.push_tm(tm, path + (0,)))
            case Snd(tm):
                return Snd(self.push_tm(tm, path + (0,)))
        raise TypeError(f"not a term: {t!r}")

    def apply(self, tm, s, path):
        """Resolve Sub(tm, s) for an already-resolved s."""
        match tm:
            case Var():
                match s:
                    case Id():
                        self.fire("sb/var/idn", path)
                        return VAR
                    case Ext(_, u):
                        self.fire("sb/var/ext", path)
                        return u
                    case _:
                        return Sub(VAR, s)
            case Op(_):
                return Sub(tm, s)
            case Lam(dom, body):
                self.fire("sb/abs", path)
                lifted = self.push_sb(lift(s), path + (1,))
                return Lam(dom, self.apply(body, lifted, path + (0,)))
            case App(fn, arg):
                self.fire("sb/app", path)
                return App(
                    self.apply(fn, s, path + (0,)), self.apply(arg, s, path + (1,))
                )
            case Pair(fst, snd):
                self.fire("sb/pair", path)
                return Pair(
                    self.apply(fst, s, path + (0,)), self.apply(snd, s, path + (1,))
                )
            case Fst(inner):
                self.fire("sb/proj1", path)
                return Fst(self.apply(inner, s, path + (0,)))
            case Snd(inner):
                self.fire("sb/proj2", path)
                return Snd(self.apply(inner, s, path + (0,)))
            case Sub(inner, s2):
                self.fire("sb/clos", path)
                return self.apply(
                    inner, self.comp(self.push_sb(s2, path + (1,)), s, path), path
                )
        raise TypeError(f"not a term: {tm!r}")

    def push_sb(self, s, path=()):
        match s:
            case Id() | Proj():
                return s
            case Ext(sb, tm):
                return Ext(self.push_sb(sb, path + (0,)), self.push_tm(tm, path + (1,)))
            case Comp(outer, inner):
                return self.comp(
                    self.push_sb(outer, path + (0,)),
                    self.push_sb(inner, path + (1,)),
                    path,
                )
        raise TypeError(f"not a substitution: {s!r}")

    def comp(self, outer, inner, path):
        """Resolve Comp(outer, inner) for already-resolved components."""
        match (outer, inner):
            case (Id(), _):
                self.fire("sb/cmp/idn/l", path)
                return inner
            case (_, Id()):
                self.fire("sb/cmp/idn/r", path)
                return outer
            case (Proj(), Ext(sb, _)):
                self.fire("sb/cmp/proj", path)
                return sb
            case (Proj(), _):
                return Comp(outer, inner)
            case (Ext(sb, tm), _):
                self.fire("sb/cmp/dot", path)
                return Ext(
                    self.comp(sb, inner, path + (0,)),
                    self.apply(tm, inner, path + (1,)),
                )
            case (Comp(head, rest), _):
                self.fire("sb/cmp/assoc", path)
                return self.comp(head, self.comp(rest, inner, path), path)
        raise TypeError(f"not a substitution: {outer!r}")

    # -- beta normalization --------------------------------------------

    def beta_tm(self, t, path=()):
        match t:
            case Var() | Op(_):
                return t
            case Lam(dom, body):
                return Lam(dom, self.beta_tm(body, path + (0,)))
            case App(fn, arg):
                f = self.beta_tm(fn, path + (0,))
                a = self.beta_tm(arg, path + (1,))
                if isinstance(f, Lam):
                    self.fire("app/beta", path)
                    return self.beta_tm(self.apply(f.body, Ext(ID, a), path), path)
                return App(f, a)
            case Pair(fst, snd):
                return Pair(self.beta_tm(fst, path + (0,)), self.beta_tm(snd, path + (1,)))
            case Fst(tm):
                u = self.beta_tm(tm, path + (0,))
                if isinstance(u, Pair):
                    self.fire("fst/beta", path)
                    return u.fst
                return Fst(u)
            case Snd(tm):
                u = self.beta_tm(tm, path + (0,))
                if isinstance(u, Pair):
                    self.fire("snd/beta", path)
                    return u.snd
                return Snd(u)
            case Sub(Op(_) as op, sb):
                return Sub(op, self.beta_sb(sb, path + (1,)))
            case Sub(Var(), _):
                return t
        raise TypeError(f"unexpected pushed term: {t!r}")

    def beta_sb(self, s, path):
        match s:
            case Ext(sb, tm):
                return Ext(self.beta_sb(sb, path + (0,)), self.beta_tm(tm, path + (1,)))
            case _:
                return s

    # -- eta expansion ---------------------------------------------------

    def eta_tm(self, sig, ctx, t, ty, path=()):
        match ty:
            case Arrow(dom, cod):
                if isinstance(t, Lam):
                    return Lam(
                        t.dom, self.eta_tm(sig, (*ctx, dom), t.body, cod, path + (0,))
                    )
                self.fire("abs/eta", path)
                shifted = self.apply(t, PROJ, path)
                return Lam(
                    dom,
                    self.eta_tm(
                        sig, (*ctx, dom), App(shifted, VAR), cod, path + (0,)
                    ),
                )
            case Prod(left, right):
                if isinstance(t, Pair):
                    return Pair(
                        self.eta_tm(sig, ctx, t.fst, left, path + (0,)),
                        self.eta_tm(sig, ctx, t.snd, right, path + (1,)),
                    )
                self.fire("pair/eta", path)
                return Pair(
                    self.eta_tm(sig, ctx, Fst(t), left, path + (0,)),
                    self.eta_tm(sig, ctx, Snd(t), right, path + (1,)),
                )
            case Atom(_):
                expanded, _ = self.eta_spine(sig, ctx, t, path)
                return expanded
        raise TypeError(f"not a type: {ty!r}")

    def eta_spine(self, sig, ctx, t, path):
        """Eta-expand the arguments of a neutral spine; synthesizes its type."""
        k = un_var_ix(t)
        if k is not None:
            return t, ctx[len(ctx) - k - 1]
        match t:
            case Op(name):
                return self.eta_op(sig, ctx, name, ID, path)
            case Sub(Op(name), chain):
                return self.eta_op(sig, ctx, name, chain, path)
            case App(fn, arg):
                head, head_ty = self.eta_spine(sig, ctx, fn, path + (0,))
                if not isinstance(head_ty, Arrow):
                    raise IllTyped(f"spine head is not an arrow: {print_tm(fn)}")
                expanded = self.eta_tm(sig, ctx, arg, head_ty.dom, path + (1,))
                return App(head, expanded), head_ty.cod
            case Fst(tm):
                inner, inner_ty = self.eta_spine(sig, ctx, tm, path + (0,))
                if not isinstance(inner_ty, Prod):
                    raise IllTyped(f"spine head is not a product: {print_tm(tm)}")
                return Fst(inner), inner_ty.left
            case Snd(tm):
                inner, inner_ty = self.eta_spine(sig, ctx, tm, path + (0,))
                if not isinstance(inner_ty, Prod):
                    raise IllTyped(f"spine head is not a product: {print_tm(tm)}")
                return Snd(inner), inner_ty.right
        raise TypeError(f"unexpected neutral spine: {t!r}")

    def eta_op(self, sig, ctx, name, chain, path):
        """Canonicalize an operation's argument vector to a full eta-long one."""
        arity = lookup_op(sig, name)
        entries = []
        root = chain
        while isinstance(root, Ext):
            entries.append(root.tm)
            root = root.sb
        entries.reverse()
        weakenings = un_proj_pow(root)
        if weakenings is None:
            raise TypeError(f"argument vector not in resolved form: {print_tm(chain)}")
        implicit = len(ctx) - weakenings
        if implicit + len(entries) != len(arity.args):
            raise IllTyped(f"operation {name} applied to wrong number of arguments")
        if implicit > 0:
            self.fire("op/sat", path)
            entries = [var_ix(len(ctx) - 1 - j) for j in range(implicit)] + entries
        out = proj_pow(len(ctx))
        for entry, ty in zip(entries, arity.args):
            out = Ext(out, self.eta_tm(sig, ctx, entry, ty, path + (1,)))
        return Sub(Op(name), out), arity.result


def push_subst(t, trace=None):
    """Resolve all explicit substitutions except those rooting var/op spines."""
    return _Rewriter(trace).push_tm(t)


def beta_normalize(t, trace=None):
    """Contract all beta redexes of a substitution-pushed term."""
    return _Rewriter(trace).beta_tm(t)


def eta_expand(sig, ctx, t, ty, trace=None):
    """Fully eta-expand a pushed, beta-normal term checked at ty."""
    return _Rewriter(trace).eta_tm(sig, tuple(ctx), t, ty)


def naive_nf(sig, ctx, t, trace=None):
    """Eta-long beta-normal form by rewriting; the ground-truth normalizer."""
    ctx = tuple(ctx)
    ty = infer_tm(sig, ctx, t)
    rw = _Rewriter(trace)
    pushed = rw.push_tm(t)
    reduced = rw.beta_tm(pushed)
    return rw.eta_tm(sig, ctx, reduced, ty)


def naive_nf_traced(sig, ctx, t):
    steps = []
    final = naive_nf(sig, ctx, t, trace=steps)
    return final, RewriteTrace(tuple(steps), final)


def trace_to_json(trace):
    return {
        "steps": [{"rule": rule, "path": list(path)} for rule, path in trace.steps],
        "final": print_tm(trace.final),
    }


def oracle_eq(sig, ctx, t1, t2):
    """Decide definitional equality by comparing naive normal forms."""
    ty1 = infer_tm(sig, ctx, t1)
    ty2 = infer_tm(sig, ctx, t2)
    if ty1 != ty2:
        raise IllTyped("terms compared at different types")
    return naive_nf(sig, ctx, t1) == naive_nf(sig, ctx, t2)


def _term_positions(sig, ctx, t, path=()):
    """Every term position with its local context, substitution entries included."""
    out = [(path, tuple(ctx), t)]
    match t:
        case Var() | Op(_):
            pass
        case Sub(tm, sb):
            out += _term_positions(sig, infer_sb(sig, ctx, sb), tm, path + (0,))
            out += _sb_positions(sig, ctx, sb, path + (1,))
        case Lam(dom, body):
            out += _term_positions(sig, (*ctx, dom), body, path + (0,))
        case App(fn, arg):
            out += _term_positions(sig, ctx, fn, path + (0,))
            out += _term_positions(sig, ctx, arg, path + (1,))
        case Pair(fst, snd):
            out += _term_positions(sig, ctx, fst, path + (0,))
            out += _term_positions(sig, ctx, snd, path + (1,))
        case Fst(tm) | Snd(tm):
            out += _term_positions(sig, ctx, tm, path + (0,))
    return out


def _sb_positions(sig, ctx, s, path):
    match s:
        case Ext(sb, tm):
            return _sb_positions(sig, ctx, sb, path + (0,)) + _term_positions(
                sig, ctx, tm, path + (1,)
            )
        case Comp(outer, inner):
            mid = infer_sb(sig, ctx, inner)
            return _sb_positions(sig, mid, outer, path + (0,)) + _sb_positions(
                sig, ctx, inner, path + (1,)
            )
        case _:
            return []


def _replace_tm(t, path, new):
    if not path:
        return new
    i, rest = path[0], path[1:]
    match t:
        case Sub(tm, sb):
            if i == 0:
                return Sub(_replace_tm(tm, rest, new), sb)
            return Sub(tm, _replace_sb(sb, rest, new))
        case Lam(dom, body):
            return Lam(dom, _replace_tm(body, rest, new))
        case App(fn, arg):
            return App(_replace_tm(fn, rest, new), arg) if i == 0 else App(
                fn, _replace_tm(arg, rest, new)
            )
        case Pair(fst, snd):
            return Pair(_replace_tm(fst, rest, new), snd) if i == 0 else Pair(
                fst, _replace_tm(snd, rest, new)
            )
        case Fst(tm):
            return Fst(_replace_tm(tm, rest, new))
        case Snd(tm):
            return Snd(_replace_tm(tm, rest, new))
    raise IndexError(f"bad path into {t!r}")


def _replace_sb(s, path, new):
    if not path:
        return new
    i, rest = path[0], path[1:]
    match s:
        case Ext(sb, tm):
            if i == 0:
                return Ext(_replace_sb(sb, rest, new), tm)
            return Ext(sb, _replace_tm(tm, rest, new))
        case Comp(outer, inner):
            if i == 0:
                return Comp(_replace_sb(outer, rest, new), inner)
            return Comp(outer, _replace_sb(inner, rest, new))
    raise IndexError(f"bad path into {s!r}")


def _edits(u, ty, rng):
    """Applicable single-equation edits at a subterm of the given type.

    Every edit preserves the type and the definitional-equality class; most
    run a base equation right to left (expansion), a few run it left to
    right when the subterm happens to match.
    """
    edits = [
        ("sb/cmp/idn-inv", lambda: Sub(u, ID)),
        ("app/beta-inv", lambda: App(Lam(ty, VAR), u)),
        ("fst/beta-inv", lambda: Fst(Pair(u, u))),
        ("snd/beta-inv", lambda: Snd(Pair(u, u))),
    ]
    if isinstance(ty, Arrow):
        edits.append(
            ("abs/eta-inv", lambda: Lam(ty.dom, App(Sub(u, PROJ), VAR)))
        )
    if isinstance(ty, Prod):
        edits.append(("pair/eta-inv", lambda: Pair(Fst(u), Snd(u))))
    match u:
        case Sub(tm, Id()):
            edits.append(("sb/cmp/idn", lambda: tm))
        case Sub(tm, sb):
            edits.append(("sb/cmp/idn/r-inv", lambda: Sub(tm, Comp(sb, ID))))
            edits.append(("sb/cmp/idn/l-inv", lambda: Sub(tm, Comp(ID, sb))))
        case App(Lam(_, body), arg):
            edits.append(("app/beta", lambda: Sub(body, Ext(ID, arg))))
        case Lam(dom, App(Sub(tm, Proj()), Var())):
            edits.append(("abs/eta", lambda: tm))
        case Fst(Pair(fst, _)):
            edits.append(("fst/beta", lambda: fst))
        case Snd(Pair(_, snd)):
            edits.append(("snd/beta", lambda: snd))
    return edits


def perturb(seed, sig, ctx, t, steps):
    """Randomly apply equations in either direction; the result stays
    well-typed at the same type and definitionally equal to t."""
    from .rng import SplitMix64

    rng = SplitMix64(seed)
    ctx = tuple(ctx)
    current = t
    for _ in range(steps):
        positions = _term_positions(sig, ctx, current)
        path, local_ctx, u = rng.choice(positions)
        ty = infer_tm(sig, local_ctx, u)
        _, edit = rng.choice(_edits(u, ty, rng))
        current = _replace_tm(current, path, edit())
    return current
