import pytest

from glue.core import Ext, ID, Lam, Op, PROJ, Sub, VAR, infer_tm, var_ix
from glue.errors import IllTyped
from glue.normal import (
    NApp,
    NFst,
    NLam,
    NOp,
    NPair,
    NShift,
    NSnd,
    NVar,
    NeSb,
    NfSb,
    check_ne,
    check_nf,
    id_ne_sub,
    ne_from_json,
    ne_to_json,
    nf_from_json,
    nf_to_json,
    readback_ne,
    readback_nf,
    readback_nfsb,
)
from glue.rng import SplitMix64
from glue.signature import Arrow, Atom, Prod, parse_ty, sig0
from glue.testgen import GenConfig, _Gen

A = Atom("a")
B = Atom("b")


def test_check_nf_shift_at_atom(sig):
    assert check_nf(sig, (A,), NShift(NVar(0)), A)


def test_check_nf_shift_rejected_at_arrow(sig):
    arr = parse_ty("(arr a a)")
    assert not check_nf(sig, (arr,), NShift(NVar(0)), arr)


def test_check_ne_op_with_singleton_vector(sig):
    ne = NOp("f", NfSb((A,), (NShift(NVar(0)),)))
    assert check_ne(sig, (A,), ne) == A


def test_check_ne_rejects_out_of_range(sig):
    with pytest.raises(IllTyped):
        check_ne(sig, (A,), NVar(3))


def test_check_ne_op_wrong_dom(sig):
    ne = NOp("f", NfSb((B,), (NShift(NVar(0)),)))
    with pytest.raises(IllTyped):
        check_ne(sig, (A,), ne)


def test_id_ne_sub():
    assert id_ne_sub(()) == NeSb((), ())
    assert id_ne_sub((A,)) == NeSb((A,), (NVar(0),))
    assert id_ne_sub((A, B)) == NeSb((A, B), (NVar(1), NVar(0)))


def test_readback_examples():
    assert readback_nf(NShift(NVar(0))) == VAR
    assert readback_nf(NLam(A, NShift(NVar(0)))) == Lam(A, VAR)
    assert readback_ne(NOp("c", NfSb((), ()))) == Sub(Op("c"), ID)


def test_readback_vector_rooted_at_weakenings():
    s = NfSb((A,), (NShift(NVar(0)),))
    assert readback_nfsb(s) == Ext(PROJ, VAR)


def test_readback_preserves_types(sig):
    cfg = GenConfig(seed=5, signature=sig, max_size=16, max_depth=3)
    stream = SplitMix64(11)
    done = 0
    while done < 60:
        g = _Gen(SplitMix64(stream.next_u64()), cfg)
        try:
            ctx = g.ctx()
            ty = g.ty(3)
            n, _ = g.nf(ctx, ty, 16)
        except Exception:
            continue
        done += 1
        assert check_nf(sig, ctx, n, ty)
        assert infer_tm(sig, ctx, readback_nf(n)) == ty


def test_readback_injective_on_generated(sig):
    cfg = GenConfig(seed=9, signature=sig, max_size=16, max_depth=3)
    stream = SplitMix64(13)
    seen = {}
    done = 0
    while done < 120:
        g = _Gen(SplitMix64(stream.next_u64()), cfg)
        try:
            ctx = g.ctx()
            ty = g.ty(3)
            n, _ = g.nf(ctx, ty, 16)
        except Exception:
            continue
        done += 1
        rb = readback_nf(n)
        if rb in seen:
            assert seen[rb] == n
        seen[rb] = n


def test_eta_longness_grammar(sig):
    # a normal form of arrow or product type can never be a bare neutral
    arr = Arrow(A, A)
    pr = Prod(A, B)
    assert not check_nf(sig, (arr,), NShift(NVar(0)), arr)
    assert not check_nf(sig, (pr,), NShift(NVar(0)), pr)
    assert check_nf(
        sig, (pr,), NPair(NShift(NFst(NVar(0))), NShift(NSnd(NVar(0)))), pr
    )


def test_json_roundtrip(sig):
    n = NLam(A, NShift(NApp(NVar(1), NShift(NVar(0)))))
    assert nf_from_json(nf_to_json(n)) == n
    ne = NOp("h", NfSb((A, B), (NShift(NVar(1)), NShift(NVar(0)))))
    assert ne_from_json(ne_to_json(ne)) == ne
