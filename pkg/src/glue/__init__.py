"""Normalization by evaluation for the free lambda-theory over a signature.

The package is organized by subject: ``signature`` (sorts, arities, types),
``core`` (explicit-substitution syntax and typing), ``renaming`` (the index
category and its action), ``normal`` (neutral/eta-long forms and readback),
``nbe`` (the semantic normalizer), ``oracle`` (the independent rewriting
normalizer), ``testgen``/``fuzz`` (seeded property suites), ``cli``.
"""

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
    Var,
    infer_sb,
    infer_tm,
    lift,
    parse_sb,
    parse_tm,
    print_sb,
    print_tm,
    var_ix,
)
from .errors import FuelExhausted, GlueError, IllTyped, ParseError, Uninhabited
from .nbe import def_eq, nf, nf_sub, quote, reflect, reify
from .normal import (
    check_ne,
    check_nf,
    id_ne_sub,
    readback_ne,
    readback_nf,
    readback_nfsb,
)
from .oracle import beta_normalize, eta_expand, naive_nf, oracle_eq, perturb, push_subst
from .renaming import Ren, ren_comp, ren_id, ren_to_sub, ren_weaken, rename_nf, rename_tm
from .signature import (
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

__all__ = [name for name in dir() if not name.startswith("_")]
