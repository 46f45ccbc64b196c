"""Weak and strong Lefschetz properties of m-primary monomial ideals.

Two independent deciders cross-validate each other: an exact rank oracle
for multiplication maps on the Artinian quotient, and closed-form criteria
(graded Betti numbers for stable/componentwise linear ideals, Hilbert
function arithmetic for Gotzmann and lexsegment ideals).
"""

from .betti import BettiTable, SocleBasis, ek_betti, last_betti_column, socle_basis
from .criteria import (
    CriterionReport,
    cwl_wlp_criterion,
    gotzmann_wlp_criterion,
    lex_slp_criterion,
)
from .generators import random_lexsegment, random_stable, random_strongly_stable
from .hilbert import (
    HilbertVector,
    MacaulayRep,
    binom,
    hilbert_function,
    hilbert_s,
    macaulay_lower,
    macaulay_rep,
)
from .lexsegment import (
    InfeasibleHilbertError,
    is_gotzmann,
    lex_ideal_from_hilbert,
    lex_ideal_of,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    NotMPrimaryError,
    NotStableError,
    PreconditionError,
    Ring,
    degree_basis,
    is_borel_fixed,
    is_lexsegment,
    is_m_primary,
    is_stable,
    is_strongly_stable,
    minimalize,
    monomial_exponents,
)
from .oracle import (
    FieldSpec,
    LefschetzVerdict,
    LinearForm,
    RankEvidence,
    decide_lefschetz,
    is_lefschetz_element,
    mult_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "CriterionReport",
    "FieldSpec",
    "HilbertVector",
    "InfeasibleHilbertError",
    "LefschetzVerdict",
    "LinearForm",
    "MacaulayRep",
    "Monomial",
    "MonomialIdeal",
    "NotMPrimaryError",
    "NotStableError",
    "PreconditionError",
    "RankEvidence",
    "Ring",
    "SocleBasis",
    "binom",
    "cwl_wlp_criterion",
    "decide_lefschetz",
    "degree_basis",
    "ek_betti",
    "gotzmann_wlp_criterion",
    "hilbert_function",
    "hilbert_s",
    "is_borel_fixed",
    "is_gotzmann",
    "is_lefschetz_element",
    "is_lexsegment",
    "is_m_primary",
    "is_stable",
    "is_strongly_stable",
    "last_betti_column",
    "lex_ideal_from_hilbert",
    "lex_ideal_of",
    "lex_slp_criterion",
    "macaulay_lower",
    "macaulay_rep",
    "minimalize",
    "monomial_exponents",
    "mult_matrix",
    "random_lexsegment",
    "random_stable",
    "random_strongly_stable",
    "socle_basis",
]
