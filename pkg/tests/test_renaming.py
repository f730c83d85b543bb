import pytest

from glue.core import Ext, ID, Lam, PROJ, Sub, VAR, infer_tm, var_ix
from glue.errors import IllTyped
from glue.normal import NShift, NVar
from glue.oracle import oracle_eq
from glue.renaming import (
    Ren,
    ren_comp,
    ren_id,
    ren_to_sub,
    ren_weaken,
    rename_ne,
    rename_nf,
    rename_tm,
)
from glue.rng import SplitMix64
from glue.signature import Atom, sig0
from glue.testgen import GenConfig, _Gen

A = Atom("a")
B = Atom("b")


def test_ren_id():
    assert ren_id(()).map == ()
    assert ren_id((A,)).map == (0,)
    assert ren_id((A, B)).map == (1, 0)


def test_ren_weaken():
    assert ren_weaken((), A) == Ren((A,), (), ())
    assert ren_weaken((A,), A).map == (1,)
    assert ren_weaken((A, B), A).map == (2, 1)


def test_ren_type_checked():
    with pytest.raises(IllTyped):
        Ren((A,), (B,), (0,))
    with pytest.raises(IllTyped):
        Ren((A,), (A,), (1,))


def test_ren_comp_identity_laws():
    ctx = (A, B, A)
    rho = Ren(ctx, (B, A), (1, 2))
    assert ren_comp(ren_id((B, A)), rho) == rho
    assert ren_comp(rho, ren_id(ctx)) == rho


def test_ren_comp_two_weakenings():
    ctx = (A, B, A)
    w1 = ren_weaken(ctx[:2], ctx[2])
    w2 = ren_weaken(ctx[:1], ctx[1])
    composed = ren_comp(w2, w1)
    assert composed.dom == ctx and composed.cod == (A,)
    assert composed.map == (2,)


def test_ren_to_sub():
    assert ren_to_sub(ren_id((A,))) == Ext(PROJ, VAR)
    assert ren_to_sub(ren_weaken((), A)) == PROJ
    assert ren_to_sub(ren_id(())) == ID


def test_rename_tm_examples(sig):
    assert rename_tm(ren_id((A,)), VAR) == VAR
    assert rename_tm(ren_weaken((A,), A), VAR) == var_ix(1)
    assert rename_tm(ren_weaken((A,), A), Lam(A, VAR)) == Lam(A, VAR)


def _samples(n, make):
    out = []
    stream = SplitMix64(2024)
    cfg = GenConfig(seed=0, signature=sig0(), max_size=20, max_depth=3)
    while len(out) < n:
        g = _Gen(SplitMix64(stream.next_u64()), cfg)
        try:
            out.append(make(g))
        except Exception:
            continue
    return out


def corpus_with_rens(n):
    def make(g):
        ctx = g.ctx()
        ty = g.ty(3)
        t, _ = g.tm(ctx, ty, 20)
        outer = g.ren(ctx)
        inner = g.ren(outer.dom)
        return ctx, ty, t, outer, inner

    return _samples(n, make)


def test_rename_identity_exact(sig):
    for ctx, ty, t, _, _ in corpus_with_rens(60):
        assert rename_tm(ren_id(ctx), t) == t


def test_rename_tm_matches_substitution(sig):
    for ctx, ty, t, outer, _ in corpus_with_rens(60):
        renamed = rename_tm(outer, t)
        assert infer_tm(sig, outer.dom, renamed) == ty
        assert oracle_eq(sig, outer.dom, renamed, Sub(t, ren_to_sub(outer)))


def test_rename_tm_composition_up_to_oracle(sig):
    for ctx, ty, t, outer, inner in corpus_with_rens(40):
        lhs = rename_tm(ren_comp(outer, inner), t)
        rhs = rename_tm(inner, rename_tm(outer, t))
        assert oracle_eq(sig, inner.dom, lhs, rhs)


def test_rename_nf_functorial_exact(sig):
    from glue.nbe import nf

    for ctx, ty, t, outer, inner in corpus_with_rens(40):
        n = nf(sig, ctx, t)
        assert rename_nf(ren_id(ctx), n) == n
        assert rename_nf(ren_comp(outer, inner), n) == rename_nf(
            inner, rename_nf(outer, n)
        )


def test_rename_ne_functorial_exact(sig):
    cfg = GenConfig(seed=7, signature=sig0(), max_size=20, max_depth=3)

    def make(g):
        ctx = g.ctx()
        (ne, ty), _ = g.ne(ctx, 20)
        outer = g.ren(ctx)
        inner = g.ren(outer.dom)
        return ctx, ne, outer, inner

    for ctx, ne, outer, inner in _samples(40, make):
        assert rename_ne(ren_id(ctx), ne) == ne
        assert rename_ne(ren_comp(outer, inner), ne) == rename_ne(
            inner, rename_ne(outer, ne)
        )


def test_rename_preserves_types(sig):
    for ctx, ty, t, outer, _ in corpus_with_rens(40):
        assert infer_tm(sig, outer.dom, rename_tm(outer, t)) == infer_tm(sig, ctx, t)


def test_rename_nf_on_variable_neutral():
    r = ren_weaken((A,), A)
    assert rename_nf(r, NShift(NVar(0))) == NShift(NVar(1))
