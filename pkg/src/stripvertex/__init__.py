"""Exact computer algebra for open-string partition functions on toric strips."""

from .qdiff import QSeries, log_reduce, sigma_q, u1_reduce, verify_annihilation
from .scalars import (
    SYMBOLIC,
    LaurentScalar,
    NovikovSeries,
    NumericQ,
    Scalar,
    SymbolicQ,
    quantum_integer,
)
from .skein import (
    meridian_eigenvalue,
    psi,
    psi_inverse,
    solution_element,
    solve_recurrence,
    unknot_value,
    verify_dilog_recurrence,
)
from .symfunc import SymFunc, SymFunc2, contract_middle, sym_exp, tensor
from .vertex import (
    StripGeometry,
    closed_form,
    framed_vertex,
    glue_strip,
    mirror_and_quantum,
    one_brane_closed_form,
    strip_params,
    topological_vertex,
    verify_one_brane_match,
    verify_strip_identity,
    verify_two_leg_product,
    z_open,
)

__all__ = [
    "SYMBOLIC",
    "LaurentScalar",
    "NovikovSeries",
    "NumericQ",
    "QSeries",
    "Scalar",
    "StripGeometry",
    "SymFunc",
    "SymFunc2",
    "SymbolicQ",
    "closed_form",
    "contract_middle",
    "framed_vertex",
    "glue_strip",
    "log_reduce",
    "meridian_eigenvalue",
    "mirror_and_quantum",
    "one_brane_closed_form",
    "psi",
    "psi_inverse",
    "quantum_integer",
    "sigma_q",
    "solution_element",
    "solve_recurrence",
    "strip_params",
    "sym_exp",
    "tensor",
    "topological_vertex",
    "u1_reduce",
    "unknot_value",
    "verify_annihilation",
    "verify_dilog_recurrence",
    "verify_one_brane_match",
    "verify_strip_identity",
    "verify_two_leg_product",
    "z_open",
]
