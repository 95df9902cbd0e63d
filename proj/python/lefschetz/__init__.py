"""Exact inverse-system computations over the rationals.

Hilbert vectors, annihilators, higher Hessians, weak/strong Lefschetz
verdicts, catalecticants, Waring decompositions, Perazzo 3-folds and
self-vanishing systems. Forms are passed as strings over a declared variable
list; exact rationals travel as "num/den" strings.
"""

from lefschetz._core import (
    LefschetzError,
    annihilator_basis,
    border_rank,
    catalecticant,
    hessian_verdict,
    hilbert_vector,
    is_cone,
    is_o_sequence,
    is_si_sequence,
    m_bracket,
    min_relation,
    perazzo_hilbert,
    perazzo_maximal,
    perazzo_minimal,
    secant_position,
    self_vanishing_system,
    slp,
    stanley_doubling,
    sylvester,
    wlp,
)

__all__ = [
    "LefschetzError",
    "annihilator_basis",
    "border_rank",
    "catalecticant",
    "hessian_verdict",
    "hilbert_vector",
    "is_cone",
    "is_o_sequence",
    "is_si_sequence",
    "m_bracket",
    "min_relation",
    "perazzo_hilbert",
    "perazzo_maximal",
    "perazzo_minimal",
    "secant_position",
    "self_vanishing_system",
    "slp",
    "stanley_doubling",
    "sylvester",
    "wlp",
]
