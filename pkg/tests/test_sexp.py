import pytest
from hypothesis import given
from hypothesis import strategies as st

from glue import sexp
from glue.errors import ParseError

atoms = st.text(
    alphabet="abcABC019_", min_size=1, max_size=6
).filter(lambda s: s not in ("(", ")"))
forms = st.recursive(atoms, lambda inner: st.lists(inner, max_size=4), max_leaves=20)


def test_reads_nesting():
    assert sexp.read("(a (b c) ())") == ["a", ["b", "c"], []]


def test_whitespace_insensitive():
    assert sexp.read(" ( a\n\tb ) ") == ["a", "b"]


@given(forms)
def test_show_read_roundtrip(form):
    assert sexp.read(sexp.show(form)) == form


@pytest.mark.parametrize(
    "bad,fragment",
    [
        ("(a", "unclosed"),
        ("a)", "trailing"),
        (")", "unexpected ')'"),
        ("", "end of input"),
        ("(a) b", "trailing"),
    ],
)
def test_errors_report_position(bad, fragment):
    with pytest.raises(ParseError) as exc:
        sexp.read(bad)
    assert fragment in str(exc.value)
    assert exc.value.line is not None


def test_error_line_column():
    with pytest.raises(ParseError) as exc:
        sexp.read("(a\n   )extra")
    assert exc.value.line == 2
