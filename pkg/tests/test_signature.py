import pytest
from hypothesis import given
from hypothesis import strategies as st

from glue.errors import ParseError, UnknownOp
from glue.signature import (
    Arrow,
    Atom,
    Prod,
    Signature,
    lookup_op,
    parse_ctx,
    parse_signature,
    parse_ty,
    print_ctx,
    print_signature,
    print_ty,
    sig0,
    ty_well_formed,
)


def test_parse_sig0():
    sig = parse_signature("(signature (sorts a b) (ops (c () a) (f (a) a) (h (a b) b)))")
    assert sig.sorts == {"a", "b"}
    assert set(sig.ops) == {"c", "f", "h"}
    assert lookup_op(sig, "f").args == (Atom("a"),)
    assert lookup_op(sig, "f").result == Atom("a")
    assert lookup_op(sig, "c").args == ()


def test_parse_empty_signature():
    sig = parse_signature("(signature (sorts) (ops))")
    assert sig.sorts == frozenset()
    assert sig.ops == {}


def test_undeclared_sort_rejected():
    with pytest.raises(ParseError, match="undeclared sort"):
        parse_signature("(signature (sorts a) (ops (c () z)))")


def test_duplicate_sort_rejected():
    with pytest.raises(ParseError, match="duplicate sort"):
        parse_signature("(signature (sorts a a) (ops))")


def test_duplicate_op_rejected():
    with pytest.raises(ParseError, match="duplicate op"):
        parse_signature("(signature (sorts a) (ops (c () a) (c () a)))")


def test_lookup_unknown_op():
    with pytest.raises(UnknownOp):
        lookup_op(sig0(), "q")


def test_ty_well_formed(sig):
    assert ty_well_formed(sig, parse_ty("(arr a (prod a b))"))
    assert not ty_well_formed(sig, Atom("z"))
    assert not ty_well_formed(parse_signature("(signature (sorts) (ops))"), Atom("a"))


def test_ty_well_formed_monotone(sig):
    bigger = Signature(sig.sorts | {"z"}, dict(sig.ops))
    for text in ("a", "(arr a b)", "(prod (arr a a) b)"):
        if ty_well_formed(sig, parse_ty(text)):
            assert ty_well_formed(bigger, parse_ty(text))


def test_signature_roundtrip(sig):
    assert parse_signature(print_signature(sig)) == sig


names = st.from_regex(r"[a-c][a-c0-9_]{0,3}", fullmatch=True)


@st.composite
def signatures(draw):
    sorts = draw(st.lists(names, min_size=1, max_size=3, unique=True))
    tys = st.recursive(
        st.sampled_from([Atom(s) for s in sorts]),
        lambda inner: st.one_of(
            st.builds(Prod, inner, inner), st.builds(Arrow, inner, inner)
        ),
        max_leaves=4,
    )
    from glue.signature import Arity

    op_names = draw(st.lists(names, max_size=3, unique=True))
    ops = {
        name: Arity(tuple(draw(st.lists(tys, max_size=2))), draw(tys))
        for name in op_names
    }
    return Signature(frozenset(sorts), ops)


@given(signatures())
def test_printer_parser_roundtrip_random(sig):
    assert parse_signature(print_signature(sig)) == sig


def test_ty_printer_roundtrip():
    for text in ("a", "(prod a b)", "(arr (prod a a) (arr b b))"):
        assert print_ty(parse_ty(text)) == text


def test_ctx_literals():
    assert parse_ctx("()") == ()
    assert parse_ctx("(a (arr a b))") == (Atom("a"), Arrow(Atom("a"), Atom("b")))
    assert print_ctx(parse_ctx("(a b)")) == "(a b)"
