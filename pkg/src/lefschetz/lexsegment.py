"""Lexsegment ideals from Hilbert functions, and the Gotzmann growth test."""

from __future__ import annotations

from typing import Sequence

from .hilbert import HilbertVector, hilbert_function, hilbert_s
from .monomials import (
    Monomial,
    MonomialIdeal,
    NotMPrimaryError,
    PreconditionError,
    Ring,
    _ideal_part,
    is_m_primary,
    minimalize,
    monomial_exponents,
)


class InfeasibleHilbertError(PreconditionError):
    """No monomial ideal realizes the requested Hilbert function."""

    def __init__(self, degree: int, message: str):
        super().__init__(f"infeasible Hilbert function at degree {degree}: {message}")
        self.degree = degree


def _shadow(exps, n: int) -> set[tuple[int, ...]]:
    return {u[:i] + (u[i] + 1,) + u[i + 1 :] for u in exps for i in range(n)}


def lex_ideal_from_hilbert(
    h: HilbertVector | Sequence[int], ring: Ring
) -> MonomialIdeal:
    """The unique lexsegment ideal whose quotient has Hilbert function h.

    Degree by degree the ideal's slice is the top (dim - h[j]) monomials in
    descending lex; new generators are the segment members outside the shadow
    of the previous slice.  Construction stops at the first full slice, which
    makes the result m-primary.  Infeasible inputs fail with the first
    offending degree.
    """
    h = HilbertVector.of(h)
    n = ring.n
    if h[0] != 1:
        raise InfeasibleHilbertError(0, f"value must be 1 for a proper ideal, got {h[0]}")
    gens: list[tuple[int, ...]] = []
    prev: tuple[tuple[int, ...], ...] = ()
    j = 0
    while True:
        j += 1
        dim = hilbert_s(n, j)
        size = dim - h[j]
        if size < 0:
            raise InfeasibleHilbertError(j, f"value {h[j]} exceeds the slice dimension {dim}")
        shadow = _shadow(prev, n)
        if len(shadow) > size:
            raise InfeasibleHilbertError(
                j,
                f"growth needs at least {len(shadow)} monomials but the value allows {size}",
            )
        segment = monomial_exponents(n, j)[:size]
        if not shadow <= set(segment):
            # cannot happen for true lex shadows; kept as a constructive guard
            raise InfeasibleHilbertError(j, "previous slice growth escapes the segment")
        gens.extend(e for e in segment if e not in shadow)
        if size == dim:
            break
        prev = segment
    if h.socle_degree > j:
        # the quotient vanished at degree j but h comes back to life later
        offending = next(t for t in range(j + 1, len(h)) if h[t])
        raise InfeasibleHilbertError(
            offending, "nonzero value after the quotient already vanished"
        )
    return minimalize((Monomial(e) for e in gens), ring)


def lex_ideal_of(ideal: MonomialIdeal) -> MonomialIdeal:
    """The lexsegment companion: same ring, same Hilbert function."""
    if not is_m_primary(ideal):
        raise NotMPrimaryError("lexsegment companion is built from the Hilbert function")
    return lex_ideal_from_hilbert(hilbert_function(ideal), ideal.ring)


def _span_size(ideal: MonomialIdeal, j: int) -> int:
    """Number of monomials in S_1 * I_j (the dimension of that span)."""
    return len(_shadow(_ideal_part(ideal, j), ideal.ring.n))


def is_gotzmann(ideal: MonomialIdeal) -> bool:
    """Degreewise growth matches the lexsegment companion's everywhere.

    dim S_1 * (lex companion)_j <= dim S_1 * I_j always holds; Gotzmann
    means equality for every j.  Monomial spans make both sides counts of
    monomials.  Beyond socle degree + 1 both slices fill the whole ring.
    """
    if not is_m_primary(ideal):
        raise NotMPrimaryError("the Gotzmann test is implemented for Artinian quotients")
    companion = lex_ideal_of(ideal)
    top = hilbert_function(ideal).socle_degree
    for j in range(top + 2):
        if _span_size(ideal, j) != _span_size(companion, j):
            return False
    return True
