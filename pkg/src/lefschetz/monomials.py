"""Monomials, monomial ideals, and their combinatorial predicates.

A monomial is an exponent vector over a fixed polynomial ring
K[x_1, ..., x_n]; an ideal is represented by its minimal monomial
generating set, and membership is divisibility against that set.  The
variable order x_1 > x_2 > ... > x_n is fixed throughout and is also the
lexicographic order used for canonical sorting and lexsegment tests.

All values are immutable and every operation is a pure function, so the
module is safe for concurrent use without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable


class PreconditionError(ValueError):
    """The input lies outside the class an operation is valid for."""


class NotMPrimaryError(PreconditionError):
    """Raised by operations that need an m-primary (Artinian) ideal."""


class NotStableError(PreconditionError):
    """Raised by operations that need a stable ideal."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin; exact for every m below 3.3e24."""
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d = m - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Ring:
    """K[x_1, ..., x_n] with coefficient characteristic 0 or a prime p.

    ``names`` is display metadata only (the CLI binds declared variable
    names); it never takes part in comparisons or hashing.
    """

    n: int
    char: int = 0
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a ring needs at least one variable")
        if self.char != 0 and not is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or a prime, got {self.char}")
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.n:
                raise ValueError("number of variable names must equal n")

    @property
    def variable_names(self) -> tuple[str, ...]:
        if self.names is not None:
            return self.names
        return tuple(f"x{i}" for i in range(1, self.n + 1))

    def monomial(self, *exponents: int) -> Monomial:
        m = Monomial(tuple(exponents))
        if len(m.exponents) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(m.exponents)}")
        return m

    def variable(self, i: int) -> Monomial:
        """The monomial x_i (1-based)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        return Monomial(tuple(1 if t == i - 1 else 0 for t in range(self.n)))


@dataclass(frozen=True)
class Monomial:
    """An exponent vector; degree and the top dividing variable derive from it."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def max_var(self) -> int:
        """1-based index of the largest variable dividing the monomial, 0 for 1."""
        for i in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[i]:
                return i + 1
        return 0

    def divides(self, other: Monomial) -> bool:
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials live in different rings")
        return _divides(self.exponents, other.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        if len(self.exponents) != len(other.exponents):
            raise ValueError("monomials live in different rings")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _canonical_key(e: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # degree first, then descending lexicographic within a degree
    return (sum(e), tuple(-x for x in e))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored as its minimal generating set.

    ``gens`` is a divisibility antichain sorted by (degree, descending
    lex); build instances through :func:`minimalize` rather than by hand.
    An empty ``gens`` is the zero ideal.
    """

    ring: Ring
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if len(g.exponents) != self.ring.n:
                raise ValueError("generator does not match the ring")

    def __hash__(self) -> int:
        # cached: the graded-slice caches hash ideals heavily
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.ring, self.gens))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def max_gen_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def gens_of_degree(self, j: int) -> tuple[Monomial, ...]:
        return tuple(g for g in self.gens if g.degree == j)

    def contains(self, m: Monomial) -> bool:
        return self.contains_exponents(m.exponents)

    def contains_exponents(self, e: tuple[int, ...]) -> bool:
        d = sum(e)
        for g in self.gens:
            if g.degree > d:
                return False
            if _divides(g.exponents, e):
                return True
        return False


def minimalize(monomials: Iterable[Monomial], ring: Ring) -> MonomialIdeal:
    """The unique minimal generating set of the ideal the input generates.

    Every input monomial is divisible by some output monomial and no output
    divides another; the result is idempotent under re-minimalization.
    """
    exps = set()
    for m in monomials:
        if len(m.exponents) != ring.n:
            raise ValueError(
                f"monomial with {len(m.exponents)} exponents in a {ring.n}-variable ring"
            )
        exps.add(m.exponents)
    kept: list[tuple[int, ...]] = []
    for e in sorted(exps, key=_canonical_key):
        # same-degree divisibility is equality, so only smaller degrees matter
        if not any(_divides(k, e) for k in kept):
            kept.append(e)
    return MonomialIdeal(ring, tuple(Monomial(e) for e in kept))


@lru_cache(maxsize=None)
def monomial_exponents(n: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All degree-``degree`` exponent vectors over n variables, lex descending."""
    if degree < 0:
        return ()
    if n == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in monomial_exponents(n - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=2048)
def _ideal_part(ideal: MonomialIdeal, degree: int) -> frozenset[tuple[int, ...]]:
    """Exponent vectors of the degree-``degree`` monomials lying in the ideal.

    Built degree by degree: the slice is the shadow of the previous slice
    plus the generators of this degree.
    """
    if degree < 0:
        return frozenset()
    n = ideal.ring.n
    part = {g.exponents for g in ideal.gens if g.degree == degree}
    if degree > 0:
        for u in _ideal_part(ideal, degree - 1):
            for i in range(n):
                part.add(u[:i] + (u[i] + 1,) + u[i + 1 :])
    return frozenset(part)


@lru_cache(maxsize=2048)
def _quotient_part(ideal: MonomialIdeal, degree: int) -> tuple[tuple[int, ...], ...]:
    """Degree-``degree`` monomials outside the ideal, in descending lex order."""
    part = _ideal_part(ideal, degree)
    return tuple(e for e in monomial_exponents(ideal.ring.n, degree) if e not in part)


def degree_basis(ideal: MonomialIdeal, degree: int, of_quotient: bool = True) -> list[Monomial]:
    """Monomials of the given degree inside the ideal or inside the quotient.

    The two calls partition the full slice of the ring; output is in the
    canonical (descending lex) order.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if of_quotient:
        return [Monomial(e) for e in _quotient_part(ideal, degree)]
    part = _ideal_part(ideal, degree)
    return [Monomial(e) for e in monomial_exponents(ideal.ring.n, degree) if e in part]


def is_m_primary(ideal: MonomialIdeal) -> bool:
    """True iff some generator is a pure power of every variable."""
    have = [False] * ideal.ring.n
    for g in ideal.gens:
        support = [i for i, e in enumerate(g.exponents) if e]
        if len(support) == 1:
            have[support[0]] = True
    return all(have)


def _exchange(e: tuple[int, ...], k: int, i: int, t: int = 1) -> tuple[int, ...]:
    # replace t copies of x_{k+1} by x_{i+1} (0-based slots)
    v = list(e)
    v[k] -= t
    v[i] += t
    return tuple(v)


def is_stable(ideal: MonomialIdeal) -> bool:
    """Closed under the exchange (x_i / x_top)u for every generator u, i < top.

    Checking generators suffices for the whole ideal.
    """
    for g in ideal.gens:
        e = g.exponents
        k = g.max_var - 1
        for i in range(k):
            if not ideal.contains_exponents(_exchange(e, k, i)):
                return False
    return True


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """Closed under every exchange (x_i / x_k)u with x_k dividing u and i < k."""
    for g in ideal.gens:
        e = g.exponents
        for k in range(len(e)):
            if e[k] == 0:
                continue
            for i in range(k):
                if not ideal.contains_exponents(_exchange(e, k, i)):
                    return False
    return True


def _lucas_nonzero(nu: int, t: int, p: int) -> bool:
    # C(nu, t) != 0 mod p iff each base-p digit of t is <= the digit of nu
    while t:
        if t % p > nu % p:
            return False
        t //= p
        nu //= p
    return True


def is_borel_fixed(ideal: MonomialIdeal, char: int | None = None) -> bool:
    """Invariance under upper-triangular coordinate changes.

    In characteristic 0 this coincides with strong stability.  In
    characteristic p the combinatorial criterion applies: for a generator u
    with x_k-exponent nu and i < k, the monomial x_i^t u / x_k^t must lie in
    the ideal for every 1 <= t <= nu whose binomial C(nu, t) is nonzero mod p
    (the digitwise Lucas test).
    """
    p = ideal.ring.char if char is None else char
    if p == 0:
        return is_strongly_stable(ideal)
    if not is_prime(p):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    for g in ideal.gens:
        e = g.exponents
        for k in range(len(e)):
            nu = e[k]
            if nu == 0:
                continue
            for i in range(k):
                for t in range(1, nu + 1):
                    if _lucas_nonzero(nu, t, p) and not ideal.contains_exponents(
                        _exchange(e, k, i, t)
                    ):
                        return False
    return True


def is_lexsegment(ideal: MonomialIdeal) -> bool:
    """Each graded slice of the ideal is an initial segment in descending lex.

    Slices beyond the top generator degree are shadows of lex segments and
    hence lex segments themselves, so checking up to that degree decides it.
    """
    n = ideal.ring.n
    for j in range(1, ideal.max_gen_degree + 1):
        part = _ideal_part(ideal, j)
        if not part:
            continue
        gap = False
        for e in monomial_exponents(n, j):
            if e in part:
                if gap:
                    return False
            else:
                gap = True
    return True
