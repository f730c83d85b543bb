import pytest

from glue.core import Lam, Op, VAR, parse_tm, print_tm, var_ix
from glue.errors import IllTyped
from glue.nbe import (
    Env,
    VArrow,
    VAtom,
    VPair,
    def_eq,
    eval_tm,
    nf,
    nf_sub,
    quote,
    reflect,
    reflect_env,
    reify,
)
from glue.normal import (
    NApp,
    NFst,
    NLam,
    NOp,
    NPair,
    NShift,
    NSnd,
    NVar,
    NfSb,
    check_nf,
    readback_nf,
)
from glue.oracle import naive_nf, oracle_eq
from glue.signature import Arrow, Atom, Prod, parse_ty
from glue.rng import SplitMix64
from glue.testgen import GenConfig, _Gen

A = Atom("a")
B = Atom("b")
AA = Arrow(A, A)


def test_reflect_atom(sig):
    v = reflect(sig, (A,), A, NVar(0))
    assert v == VAtom((A,), A, NShift(NVar(0)))


def test_reflect_product(sig):
    pr = Prod(A, B)
    v = reflect(sig, (pr,), pr, NVar(0))
    assert v == VPair(
        (pr,),
        pr,
        VAtom((pr,), A, NShift(NFst(NVar(0)))),
        VAtom((pr,), B, NShift(NSnd(NVar(0)))),
    )


def test_reflect_arrow_glues_readback(sig):
    v = reflect(sig, (AA,), AA, NVar(0))
    assert isinstance(v, VArrow)
    assert v.syn == VAR


def test_reify_reflect_at_atom_is_identity(sig):
    v = reflect(sig, (A,), A, NVar(0))
    assert reify(sig, (A,), A, v) == NShift(NVar(0))


def test_reify_reflect_arrow(sig):
    v = reflect(sig, (AA,), AA, NVar(0))
    assert reify(sig, (AA,), AA, v) == NLam(
        A, NShift(NApp(NVar(1), NShift(NVar(0))))
    )


def test_reify_reflect_product(sig):
    pr = Prod(A, B)
    v = reflect(sig, (pr,), pr, NVar(0))
    assert reify(sig, (pr,), pr, v) == NPair(
        NShift(NFst(NVar(0))), NShift(NSnd(NVar(0)))
    )


def test_eval_var_projects(sig):
    env = reflect_env(sig, (A, B))
    assert eval_tm(sig, env, VAR) == env.entries[-1]


def test_eval_closed_op(sig):
    v = eval_tm(sig, Env((), ()), Op("c"))
    assert v == VAtom((), A, NShift(NOp("c", NfSb((), ()))))


def test_eval_beta_matches_argument(sig):
    env = reflect_env(sig, ())
    lhs = eval_tm(sig, env, parse_tm("(app (lam a v) (op c))"))
    rhs = eval_tm(sig, env, Op("c"))
    assert lhs == rhs


def test_quote_examples(sig):
    assert quote(sig, (A,), A, reflect(sig, (A,), A, NVar(0))) == VAR
    assert quote(sig, (AA,), AA, reflect(sig, (AA,), AA, NVar(0))) == parse_tm(
        "(lam a (app (ix 1) v))"
    )


def test_nf_examples(sig):
    assert nf(sig, (AA,), VAR) == NLam(A, NShift(NApp(NVar(1), NShift(NVar(0)))))
    assert nf(sig, (A,), parse_tm("(app (lam a v) v)")) == NShift(NVar(0))
    assert nf(sig, (Prod(A, B),), VAR) == NPair(
        NShift(NFst(NVar(0))), NShift(NSnd(NVar(0)))
    )
    assert nf(sig, (), parse_tm("(sub (op f) (ext id (op c)))")) == NShift(
        NOp("f", NfSb((), (NShift(NOp("c", NfSb((), ()))),)))
    )


def test_nf_sub_vector(sig):
    from glue.core import Ext, ID, PROJ

    out = nf_sub(sig, (A,), ID)
    assert out.dom == (A,)
    assert out.entries == (NShift(NVar(0)),)
    out = nf_sub(sig, (A,), Ext(PROJ, parse_tm("(app (lam a v) v)")))
    assert out.entries == (NShift(NVar(0)),)


def test_def_eq_examples(sig):
    t = parse_tm("(app (lam a v) v)")
    assert def_eq(sig, (A,), t, t)
    assert def_eq(sig, (AA,), VAR, parse_tm("(lam a (app (ix 1) v))"))
    assert not def_eq(sig, (), Op("c"), parse_tm("(sub (op f) (ext id (op c)))"))


def test_def_eq_type_mismatch(sig):
    with pytest.raises(IllTyped):
        def_eq(sig, (A, B), VAR, var_ix(1))


def _corpus(sig, n, seed, max_size=20):
    stream = SplitMix64(seed)
    cfg = GenConfig(seed=0, signature=sig, max_size=max_size, max_depth=3)
    out = []
    while len(out) < n:
        g = _Gen(SplitMix64(stream.next_u64()), cfg)
        try:
            ctx = g.ctx()
            ty = g.ty(3)
            t, _ = g.tm(ctx, ty, max_size)
        except Exception:
            continue
        out.append((ctx, ty, t))
    return out


def test_nf_always_checks_and_matches_oracle(sig):
    for ctx, ty, t in _corpus(sig, 100, seed=31):
        n = nf(sig, ctx, t)
        assert check_nf(sig, ctx, n, ty)
        assert readback_nf(n) == naive_nf(sig, ctx, t)


def test_def_eq_iff_oracle_eq(sig):
    pairs = _corpus(sig, 60, seed=32)
    for (ctx, ty, t), _ in zip(pairs, range(60)):
        shaken = nf(sig, ctx, t)
        assert def_eq(sig, ctx, readback_nf(shaken), t)
        assert oracle_eq(sig, ctx, readback_nf(shaken), t)
