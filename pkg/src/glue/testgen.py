"""Seeded random generation of well-typed syntax for the property suites.

Everything is driven by splitmix64, so a fixed seed reproduces the same
corpus byte for byte.  Generation is size-bounded with backtracking: a
candidate production that cannot be completed within the remaining budget
raises Uninhabited and the next shuffled candidate is tried.
"""

from dataclasses import dataclass, replace

from .core import Comp, Ext, ID, Lam, Op, Sub, VAR, var_ix, proj_pow
from .core import App, Fst, Pair, Snd
from .errors import Uninhabited
from .normal import NApp, NFst, NLam, NOp, NPair, NShift, NSnd, NVar, NfSb
from .renaming import Ren
from .rng import SplitMix64
from .signature import Arrow, Atom, Prod, Signature


@dataclass(frozen=True)
class GenConfig:
    seed: int
    signature: Signature
    max_size: int = 30
    max_depth: int = 3
    ctx_size: int = 3


def _with_seed(cfg, seed):
    return replace(cfg, seed=seed)


class _GiveUp(Exception):
    """Abort the whole draw: backtracking has used up its attempt budget.

    Deliberately not an Uninhabited subclass so that inner backtracking
    loops cannot swallow it; the public wrappers translate it back.
    """


_ATTEMPT_BUDGET = 400


class _Gen:
    def __init__(self, rng, cfg, inhab_cache=None):
        self.rng = rng
        self.cfg = cfg
        self.sig = cfg.signature
        self.sorts = sorted(cfg.signature.sorts)
        self.ops = list(cfg.signature.ops.items())
        self.attempts = _ATTEMPT_BUDGET
        self.inhab_cache = {} if inhab_cache is None else inhab_cache
        self._inhab_taint = False

    def spend(self):
        self.attempts -= 1
        if self.attempts < 0:
            raise _GiveUp()

    # -- inhabitation pruning ---------------------------------------------

    _INHAB_DEPTH = 3

    def inhab(self, hyps, ty, depth=_INHAB_DEPTH):
        """Depth-bounded derivability of ty from hypothesis types and ops.

        Prunes generation branches that cannot succeed.  The bound applies
        to speculative argument goals (operation arguments, arrow-elimination
        arguments), so the check under-approximates on deeply nested cuts;
        a false negative only costs the generator a retried draw.
        """
        key = (hyps, ty, depth)
        cached = self.inhab_cache.get(key)
        if cached is None:
            cached = self._inhab(hyps, ty, depth)
            self.inhab_cache[key] = cached
        return cached

    def _inhab(self, hyps, ty, depth):
        match ty:
            case Arrow(dom, cod):
                return self.inhab(hyps | {dom}, cod, depth)
            case Prod(left, right):
                return self.inhab(hyps, left, depth) and self.inhab(hyps, right, depth)
        seen = set()
        frontier = list(hyps)
        for _, ar in self.ops:
            if all(self.inhab(hyps, a, depth - 1) for a in ar.args) if depth > 0 else not ar.args:
                frontier.append(ar.result)
        while frontier:
            head = frontier.pop()
            if head in seen:
                continue
            seen.add(head)
            if head == ty:
                return True
            match head:
                case Prod(left, right):
                    frontier += [left, right]
                case Arrow(dom, cod):
                    if depth > 0 and self.inhab(hyps, dom, depth - 1):
                        frontier.append(cod)
        return False

    # -- types and contexts ---------------------------------------------

    def ty(self, depth):
        if not self.sorts:
            raise Uninhabited("signature has no sorts")
        if depth <= 1 or self.rng.chance(1, 2):
            return Atom(self.rng.choice(self.sorts))
        if self.rng.chance(1, 2):
            return Prod(self.ty(depth - 1), self.ty(depth - 1))
        return Arrow(self.ty(depth - 1), self.ty(depth - 1))

    def ctx(self):
        n = self.rng.below(self.cfg.ctx_size + 1)
        return tuple(self.ty(self.cfg.max_depth) for _ in range(n))

    # -- raw terms --------------------------------------------------------

    def tm(self, ctx, ty, fuel):
        """One weighted production per node; a failed cut falls back to a leaf.

        Avoiding exhaustive backtracking keeps each draw linear in the size
        budget; a draw that dead-ends is simply retried from a fresh seed.
        """
        if fuel <= 0:
            raise Uninhabited("size budget exhausted")
        self.spend()
        hyps = frozenset(ctx)
        if not self.inhab(hyps, ty):
            raise Uninhabited("type not inhabited in this context")
        n = len(ctx)
        leaves = []
        for k in range(n):
            if ctx[n - 1 - k] == ty:
                leaves.append(("var", k))
        candidates = [(3, leaf) for leaf in leaves]
        for name, ar in self.ops:
            if ar.result == ty and all(self.inhab(hyps, a) for a in ar.args):
                candidates.append((2, ("op", name, ar)))
        if isinstance(ty, Arrow):
            candidates.append((4, ("lam",)))
        if isinstance(ty, Prod):
            candidates.append((4, ("pair",)))
        if fuel >= 4:
            candidates += [(1, ("app",)), (1, ("proj",)), (1, ("sub",))]
        if not candidates:
            raise Uninhabited("no production available")
        chosen = self._weighted(candidates)
        try:
            return self._tm_cand(chosen, ctx, ty, fuel)
        except Uninhabited:
            if leaves and chosen[0] != "var":
                return self._tm_cand(self.rng.choice(leaves), ctx, ty, fuel)
            raise

    def _weighted(self, pairs):
        total = sum(w for w, _ in pairs)
        roll = self.rng.below(total)
        for w, item in pairs:
            roll -= w
            if roll < 0:
                return item
        raise AssertionError("weights exhausted")

    def _tm_cand(self, cand, ctx, ty, fuel):
        match cand:
            case ("var", k):
                return var_ix(k), fuel - 1
            case ("op", name, ar):
                if self.rng.chance(1, 4) and tuple(ctx) == ar.args:
                    return Op(name), fuel - 1
                sb = proj_pow(len(ctx))
                fuel -= 2
                for arg_ty in ar.args:
                    entry, fuel = self.tm(ctx, arg_ty, fuel)
                    sb = Ext(sb, entry)
                return Sub(Op(name), sb), fuel
            case ("lam",):
                body, fuel = self.tm((*ctx, ty.dom), ty.cod, fuel - 1)
                return Lam(ty.dom, body), fuel
            case ("pair",):
                fst, fuel = self.tm(ctx, ty.left, fuel - 1)
                snd, fuel = self.tm(ctx, ty.right, fuel)
                return Pair(fst, snd), fuel
            case ("app",):
                arg_ty = self.cut_ty(ctx)
                fn, fuel = self.tm(ctx, Arrow(arg_ty, ty), fuel - 1)
                arg, fuel = self.tm(ctx, arg_ty, fuel)
                return App(fn, arg), fuel
            case ("proj",):
                other = self.cut_ty(ctx)
                if self.rng.chance(1, 2):
                    tm, fuel = self.tm(ctx, Prod(ty, other), fuel - 1)
                    return Fst(tm), fuel
                tm, fuel = self.tm(ctx, Prod(other, ty), fuel - 1)
                return Snd(tm), fuel
            case ("sub",):
                sb, mid, fuel = self.sb(ctx, fuel - 1)
                if not self.inhab(frozenset(mid), ty):
                    raise Uninhabited("cut context does not reach the type")
                tm, fuel = self.tm(mid, ty, fuel)
                return Sub(tm, sb), fuel
        raise AssertionError(cand)

    def cut_ty(self, ctx):
        """A plausible cut type: an inhabited context entry or small fresh type."""
        hyps = frozenset(ctx)
        if ctx and self.rng.chance(1, 2):
            pool = [ty for ty in ctx if self.inhab(hyps, ty)]
            if pool:
                return self.rng.choice(pool)
        for _ in range(2):
            ty = self.ty(2)
            if self.inhab(hyps, ty):
                return ty
        raise Uninhabited("no inhabited cut type available")

    def sb(self, ctx, fuel):
        """A substitution out of ctx together with its codomain."""
        if fuel <= 0:
            raise Uninhabited("size budget exhausted")
        self.spend()
        roll = self.rng.below(6)
        if roll == 0:
            return ID, tuple(ctx), fuel - 1
        if roll in (1, 2):
            k = self.rng.below(len(ctx) + 1)
            return proj_pow(k), tuple(ctx[: len(ctx) - k]), fuel - 1
        if roll in (3, 4):
            inner, mid, fuel = self.sb(ctx, fuel - 1)
            ty = self.cut_ty(ctx)
            tm, fuel = self.tm(ctx, ty, fuel)
            return Ext(inner, tm), (*mid, ty), fuel
        inner, mid, fuel = self.sb(ctx, fuel - 1)
        outer, cod, fuel = self.sb(mid, fuel)
        return Comp(outer, inner), cod, fuel

    # -- neutrals and normals ---------------------------------------------

    def nf(self, ctx, ty, fuel):
        if fuel <= 0:
            raise Uninhabited("size budget exhausted")
        self.spend()
        match ty:
            case Arrow(dom, cod):
                body, fuel = self.nf((*ctx, dom), cod, fuel - 1)
                return NLam(dom, body), fuel
            case Prod(left, right):
                fst, fuel = self.nf(ctx, left, fuel - 1)
                snd, fuel = self.nf(ctx, right, fuel)
                return NPair(fst, snd), fuel
            case Atom(_):
                ne, fuel = self.ne_at(ctx, ty, fuel)
                return NShift(ne), fuel
        raise TypeError(f"not a type: {ty!r}")

    def ne_at(self, ctx, target, fuel):
        """A neutral of exactly the target type, via head + elimination plan."""
        if fuel <= 0:
            raise Uninhabited("size budget exhausted")
        self.spend()
        hyps = frozenset(ctx)
        feasible = lambda plan: all(
            self.inhab(hyps, step[1]) for step in plan if step != "fst" and step != "snd"
        )
        n = len(ctx)
        candidates = []
        for k in range(n):
            for plan in _elim_plans(ctx[n - 1 - k], target):
                if feasible(plan):
                    candidates.append((NVar(k), plan, 1))
        for name, ar in self.ops:
            if not all(self.inhab(hyps, a) for a in ar.args):
                continue
            for plan in _elim_plans(ar.result, target):
                if feasible(plan):
                    candidates.append((("op", name, ar), plan, 2))
        for head, plan, cost in self.rng.shuffled(candidates):
            try:
                return self._run_plan(ctx, head, plan, fuel - cost)
            except Uninhabited:
                continue
        raise Uninhabited("no neutral of the requested type")

    def _run_plan(self, ctx, head, plan, fuel):
        if isinstance(head, tuple):
            _, name, ar = head
            entries = []
            for arg_ty in ar.args:
                entry, fuel = self.nf(ctx, arg_ty, fuel)
                entries.append(entry)
            ne = NOp(name, NfSb(tuple(ctx), tuple(entries)))
        else:
            ne = head
        for step in plan:
            if step == "fst":
                ne = NFst(ne)
            elif step == "snd":
                ne = NSnd(ne)
            else:
                arg, fuel = self.nf(ctx, step[1], fuel - 1)
                ne = NApp(ne, arg)
        return ne, fuel

    def ne(self, ctx, fuel):
        """A neutral of arbitrary type: pick a head, eliminate a few times."""
        candidates = [NVar(k) for k in range(len(ctx))]
        candidates += [("op", name, ar) for name, ar in self.ops]
        for head in self.rng.shuffled(candidates):
            try:
                ne, fuel = self._run_plan(ctx, head, (), fuel - 1)
            except Uninhabited:
                continue
            ty = self._head_ty(ctx, head)
            while self.rng.chance(1, 2):
                if isinstance(ty, Arrow):
                    try:
                        arg, fuel = self.nf(ctx, ty.dom, fuel - 1)
                    except Uninhabited:
                        break
                    ne, ty = NApp(ne, arg), ty.cod
                elif isinstance(ty, Prod):
                    if self.rng.chance(1, 2):
                        ne, ty = NFst(ne), ty.left
                    else:
                        ne, ty = NSnd(ne), ty.right
                else:
                    break
            return (ne, ty), fuel
        raise Uninhabited("no neutral available in this context")

    def _head_ty(self, ctx, head):
        if isinstance(head, tuple):
            return head[2].result
        return ctx[len(ctx) - head.ix - 1]

    def ren(self, cod):
        """A renaming into cod: its entries embedded in a noisy domain."""
        noise = [self.ty(self.cfg.max_depth) for _ in range(self.rng.below(3))]
        dom = tuple(self.rng.shuffled(tuple(cod) + tuple(noise)))
        n = len(dom)
        mapping = []
        for ty in cod:
            slots = [i for i, d in enumerate(dom) if d == ty]
            mapping.append(n - 1 - self.rng.choice(slots))
        return Ren(dom, tuple(cod), tuple(mapping))


def _elim_plans(ty, target, prefix=()):
    """All elimination paths from ty down to the target type."""
    plans = []
    if ty == target:
        plans.append(prefix)
    match ty:
        case Prod(left, right):
            plans += _elim_plans(left, target, prefix + ("fst",))
            plans += _elim_plans(right, target, prefix + ("snd",))
        case Arrow(dom, cod):
            plans += _elim_plans(cod, target, prefix + (("app", dom),))
    return plans


def _run(cfg, draw):
    g = _Gen(SplitMix64(cfg.seed), cfg)
    try:
        return draw(g)
    except _GiveUp:
        raise Uninhabited("attempt budget exhausted") from None


def gen_ty(cfg, depth=None):
    return _run(cfg, lambda g: g.ty(cfg.max_depth if depth is None else depth))


def gen_ctx(cfg):
    return _run(cfg, lambda g: g.ctx())


def gen_tm(cfg, ctx, ty):
    return _run(cfg, lambda g: g.tm(tuple(ctx), ty, cfg.max_size)[0])


def gen_ne(cfg, ctx):
    return _run(cfg, lambda g: g.ne(tuple(ctx), cfg.max_size)[0])


def gen_nf(cfg, ctx, ty):
    return _run(cfg, lambda g: g.nf(tuple(ctx), ty, cfg.max_size)[0])


def gen_ren(cfg, cod):
    return _run(cfg, lambda g: g.ren(tuple(cod)))
