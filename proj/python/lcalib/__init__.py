"""Exact symbolic computation for finite Lie conformal algebras.

Thin Python facade over the C++ core: algebra constructors, axiom checks,
derivation-space solvers, and the verification ledger.
"""

from _lca import (
    ConformalAlgebra,
    SolutionSpace,
    cur_sl2,
    cur_sl3,
    direct_sum,
    inner_quotient_dimension,
    ledger,
    parse_algebras,
    solve,
    triple_hom_kinds,
    vir,
)

__all__ = [
    "ConformalAlgebra",
    "SolutionSpace",
    "cur_sl2",
    "cur_sl3",
    "direct_sum",
    "inner_quotient_dimension",
    "ledger",
    "parse_algebras",
    "solve",
    "triple_hom_kinds",
    "vir",
]
