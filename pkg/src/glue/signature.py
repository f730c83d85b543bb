"""Many-typed signatures and the simple types generated from their sorts.

A signature declares a finite set of atomic sorts plus operation symbols,
each with an arity: a list of argument types and a result type.  Types are
atoms, binary products, and arrows over the declared sorts.
"""

import re
from dataclasses import dataclass, field

from . import sexp
from .errors import ParseError, UnknownOp

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Ty:
    """Base class for simple types."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Atom(Ty):
    sort: str


@dataclass(frozen=True, slots=True)
class Prod(Ty):
    left: Ty
    right: Ty


@dataclass(frozen=True, slots=True)
class Arrow(Ty):
    dom: Ty
    cod: Ty


# Contexts are ordered tuples of types; index 0 is the oldest binding.
Ctx = tuple


@dataclass(frozen=True, slots=True)
class Arity:
    args: tuple
    result: Ty


@dataclass(frozen=True)
class Signature:
    sorts: frozenset
    ops: dict = field(default_factory=dict)

    def __post_init__(self):
        for name, ar in self.ops.items():
            for ty in (*ar.args, ar.result):
                if not ty_well_formed(self, ty):
                    raise ValueError(f"arity of {name} uses an undeclared sort")


def ty_well_formed(sig, ty):
    """True iff every atom in ty names a declared sort."""
    match ty:
        case Atom(sort):
            return sort in sig.sorts
        case Prod(left, right):
            return ty_well_formed(sig, left) and ty_well_formed(sig, right)
        case Arrow(dom, cod):
            return ty_well_formed(sig, dom) and ty_well_formed(sig, cod)
    raise TypeError(f"not a type: {ty!r}")


def lookup_op(sig, name):
    if name not in sig.ops:
        raise UnknownOp(f"unknown operation {name}")
    return sig.ops[name]


def _bad(form, what):
    raise ParseError(f"expected {what}, got {sexp.show(form)}")


def ty_of_sexp(form):
    match form:
        case str(name):
            if not NAME_RE.match(name):
                _bad(form, "a sort name")
            return Atom(name)
        case ["prod", left, right]:
            return Prod(ty_of_sexp(left), ty_of_sexp(right))
        case ["arr", dom, cod]:
            return Arrow(ty_of_sexp(dom), ty_of_sexp(cod))
    _bad(form, "a type")


def ty_to_sexp(ty):
    match ty:
        case Atom(sort):
            return sort
        case Prod(left, right):
            return ["prod", ty_to_sexp(left), ty_to_sexp(right)]
        case Arrow(dom, cod):
            return ["arr", ty_to_sexp(dom), ty_to_sexp(cod)]
    raise TypeError(f"not a type: {ty!r}")


def parse_ty(text):
    return ty_of_sexp(sexp.read(text))


def print_ty(ty):
    return sexp.show(ty_to_sexp(ty))


def parse_ctx(text):
    """Context literal: an S-expression list of types."""
    form = sexp.read(text)
    if isinstance(form, str):
        _bad(form, "a context (list of types)")
    return tuple(ty_of_sexp(f) for f in form)


def print_ctx(ctx):
    return sexp.show([ty_to_sexp(ty) for ty in ctx])


def parse_signature(text):
    """Parse and validate a signature per the fixed S-expression grammar."""
    form = sexp.read(text)
    match form:
        case ["signature", ["sorts", *sort_names], ["ops", *op_decls]]:
            pass
        case _:
            _bad(form, "(signature (sorts ...) (ops ...))")
    sorts = []
    for s in sort_names:
        if not isinstance(s, str) or not NAME_RE.match(s):
            _bad(s, "a sort name")
        if s in sorts:
            raise ParseError(f"duplicate sort {s}")
        sorts.append(s)
    sig = Signature(frozenset(sorts), {})
    ops = {}
    for decl in op_decls:
        match decl:
            case [str(name), list(arg_forms), result_form]:
                if not NAME_RE.match(name):
                    _bad(name, "an operation name")
                if name in ops:
                    raise ParseError(f"duplicate op {name}")
                args = tuple(ty_of_sexp(f) for f in arg_forms)
                result = ty_of_sexp(result_form)
                for ty in (*args, result):
                    if not ty_well_formed(sig, ty):
                        raise ParseError(
                            f"undeclared sort in arity of {name}: {print_ty(ty)}"
                        )
                ops[name] = Arity(args, result)
            case _:
                _bad(decl, "an op declaration (name (tys...) ty)")
    return Signature(frozenset(sorts), ops)


def print_signature(sig, sort_order=None):
    """Canonical printer; parse_signature is a left inverse of this."""
    sorts = sort_order if sort_order is not None else sorted(sig.sorts)
    decls = [
        [name, [ty_to_sexp(a) for a in ar.args], ty_to_sexp(ar.result)]
        for name, ar in sig.ops.items()
    ]
    return sexp.show(["signature", ["sorts", *sorts], ["ops", *decls]])


SIG0_TEXT = "(signature (sorts a b) (ops (c () a) (f (a) a) (h (a b) b)))"


def sig0():
    """The sample signature used throughout the tests and as the fuzz default."""
    return parse_signature(SIG0_TEXT)
