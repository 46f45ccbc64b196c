"""Graded Betti numbers of stable ideals and socle data for m-primary quotients.

Two independent routes to the last Betti column live here: the
Eliahou-Kervaire generator formula (stable ideals only) and the socle of
S/I (any m-primary monomial ideal), whose graded dimensions are the
beta_{n-1, n+j}.  Their agreement on stable inputs is a standing
cross-check in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hilbert import binom, hilbert_function
from .monomials import (
    Monomial,
    MonomialIdeal,
    NotMPrimaryError,
    NotStableError,
    _ideal_part,
    _quotient_part,
    is_m_primary,
    is_stable,
)


@dataclass
class BettiTable:
    """Nonzero graded Betti numbers keyed by (homological index i, total degree j)."""

    n: int
    entries: dict[tuple[int, int], int]

    def entry(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def shifts(self) -> list[int]:
        """Internal degree shifts j - i present in the table, sorted."""
        return sorted({j - i for (i, j) in self.entries})

    def row(self, shift: int) -> list[int]:
        """beta_{i, i+shift} for i = 0 .. n-1 (one diagram row)."""
        return [self.entry(i, i + shift) for i in range(self.n)]

    def last_column(self) -> dict[int, int]:
        """{socle degree j: beta_{n-1, n+j}} for the nonzero entries at i = n-1."""
        return {
            j - self.n: v for (i, j), v in self.entries.items() if i == self.n - 1
        }


def ek_betti(ideal: MonomialIdeal) -> BettiTable:
    """Betti numbers of a stable ideal from its generators.

    A generator u of degree j with top variable index m contributes
    C(m - 1, i) to beta_{i, i+j}.  Non-stable input is refused: the formula
    would silently produce wrong values.
    """
    if not is_stable(ideal):
        raise NotStableError(
            "the generator formula computes Betti numbers of stable ideals only; "
            "use the socle route for the last column of a general m-primary ideal"
        )
    entries: dict[tuple[int, int], int] = {}
    for g in ideal.gens:
        j = g.degree
        m = g.max_var
        for i in range(m):
            key = (i, i + j)
            entries[key] = entries.get(key, 0) + binom(m - 1, i)
    return BettiTable(ideal.ring.n, entries)


@dataclass
class SocleBasis:
    """Monomial basis of Soc(S/I) with its graded dimensions.

    Members are quotient monomials annihilated by every variable.
    """

    monomials: tuple[Monomial, ...]
    dims: dict[int, int]


def socle_basis(ideal: MonomialIdeal) -> SocleBasis:
    """All quotient monomials u with x_i * u in the ideal for every i."""
    if not is_m_primary(ideal):
        raise NotMPrimaryError("the socle is finite only for m-primary ideals")
    n = ideal.ring.n
    top = hilbert_function(ideal).socle_degree
    monomials: list[Monomial] = []
    dims: dict[int, int] = {}
    for j in range(top + 1):
        above = _ideal_part(ideal, j + 1)
        for e in _quotient_part(ideal, j):
            if all(e[:i] + (e[i] + 1,) + e[i + 1 :] in above for i in range(n)):
                monomials.append(Monomial(e))
                dims[j] = dims.get(j, 0) + 1
    return SocleBasis(tuple(monomials), dims)


def last_betti_column(ideal: MonomialIdeal) -> dict[int, int]:
    """{j: beta_{n-1, n+j}} via the socle; valid for any m-primary monomial ideal."""
    return dict(socle_basis(ideal).dims)
