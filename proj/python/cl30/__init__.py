"""Cl(3,0) rotors, the dihedral group D4 and their 2x2 matrix bridge.

Cliffors are 8-element lists [s, v1, v2, v3, b1, b2, b3, p] where b_k is the
coefficient of i e_k.  Vectors are 3-element lists, matrices nested lists.
"""

from ._core import (
    D4_LABELS,
    cliffor_from_matrix,
    compose,
    d4_matrix,
    d4_multiply,
    decompose,
    eval_chain,
    exp_half,
    fermion_dyadic,
    ga_apply,
    geometric_product,
    inverse,
    multiplication_table,
    pauli_rep,
    reverse,
    rotate,
    verify,
)

__all__ = [
    "D4_LABELS",
    "cliffor_from_matrix",
    "compose",
    "d4_matrix",
    "d4_multiply",
    "decompose",
    "eval_chain",
    "exp_half",
    "fermion_dyadic",
    "ga_apply",
    "geometric_product",
    "inverse",
    "multiplication_table",
    "pauli_rep",
    "reverse",
    "rotate",
    "verify",
]
