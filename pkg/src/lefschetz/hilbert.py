"""Hilbert functions of Artinian monomial quotients and Macaulay's binomial calculus.

The binomial expansion machinery follows the classical convention that
C(k, i) is zero whenever i >= 0 and k < i; everything is exact integer
arithmetic (no floats, no overflow).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .monomials import MonomialIdeal, NotMPrimaryError, _quotient_part, is_m_primary


def binom(k: int, i: int) -> int:
    """C(k, i) with the convention that it vanishes for k < i (or negative k)."""
    if i < 0 or k < i:
        return 0
    return comb(k, i)


def hilbert_s(n: int, j: int) -> int:
    """Dimension of the degree-j slice of a polynomial ring in n variables."""
    if j < 0:
        return 0
    return comb(n - 1 + j, j)


@dataclass(frozen=True)
class HilbertVector:
    """Hilbert function of an Artinian quotient: values[j] = dim of degree j.

    The tuple ends at the last nonzero value; indexing past the end (or with
    a negative degree) yields 0.  Use :meth:`of` to normalize raw sequences.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("Hilbert values must be nonnegative")
        if self.values and self.values[-1] == 0:
            raise ValueError("trailing zeros are normalized away; use HilbertVector.of")

    @classmethod
    def of(cls, values: HilbertVector | Sequence[int]) -> HilbertVector:
        if isinstance(values, HilbertVector):
            return values
        vals = list(values)
        while vals and vals[-1] == 0:
            vals.pop()
        return cls(tuple(vals))

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.values):
            return self.values[j]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        """Largest degree with a nonzero value (-1 for the zero quotient)."""
        return len(self.values) - 1


def hilbert_function(ideal: MonomialIdeal) -> HilbertVector:
    """Count quotient monomials degree by degree until a whole slice is swallowed.

    Only m-primary ideals are accepted; otherwise the vector would be infinite.
    """
    if not is_m_primary(ideal):
        raise NotMPrimaryError(
            "Hilbert vector would be infinite: some variable has no pure power in the ideal"
        )
    values = []
    j = 0
    while True:
        v = len(_quotient_part(ideal, j))
        if v == 0:
            break
        values.append(v)
        j += 1
    return HilbertVector(tuple(values))


@dataclass(frozen=True)
class MacaulayRep:
    """The unique expansion a = C(k_d, d) + ... + C(k_1, 1), k_d > ... > k_1 >= 0.

    ``ks`` runs from k_d down to k_1.
    """

    a: int
    d: int
    ks: tuple[int, ...]

    def total(self) -> int:
        return sum(binom(k, i) for k, i in zip(self.ks, range(self.d, 0, -1)))

    def lower(self) -> int:
        """The shifted-down value a^[d] = C(k_d - 1, d - 1) + ... + C(k_1 - 1, 0)."""
        return sum(binom(k - 1, i - 1) for k, i in zip(self.ks, range(self.d, 0, -1)))


def _max_k(a: int, i: int) -> int:
    # largest k with C(k, i) <= a, given a >= 1 (so k >= i)
    if i == 1:
        return a
    lo, hi = i, 2 * i
    while comb(hi, i) <= a:
        lo, hi = hi, 2 * hi
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if comb(mid, i) <= a:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """Greedy (hence the unique) descending binomial expansion of a in degree d.

    For a = 0 every term is a vanishing binomial: ks = (d-1, d-2, ..., 0).
    """
    if d < 1:
        raise ValueError("d must be positive")
    if a < 0:
        raise ValueError("a must be nonnegative")
    ks: list[int] = []
    rem = a
    prev: int | None = None
    for i in range(d, 0, -1):
        if rem == 0:
            k = i - 1
        else:
            k = _max_k(rem, i)
            rem -= comb(k, i)
        assert prev is None or k < prev, "greedy expansion lost strict descent"
        ks.append(k)
        prev = k
    assert rem == 0
    return MacaulayRep(a, d, tuple(ks))


def macaulay_lower(a: int, d: int) -> int:
    """a^[d]: expand a in degree d and shift every binomial down by one."""
    return macaulay_rep(a, d).lower()
