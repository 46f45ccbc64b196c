"""Exact decision of the weak/strong Lefschetz property via multiplication maps.

Ground truth for an m-primary monomial ideal I: a linear form l is a weak
(strong) Lefschetz element when every map (S/I)_j -> (S/I)_{j+k},
f -> l^k f, with k = 1 (all k >= 1) has maximal rank.  Ranks are computed
exactly: fraction-free integer elimination for the rationals, modular
elimination for prime fields.  Floating point never enters.

Degree ranges: j runs over [0, socle degree] and k over [1, socle degree];
beyond that the source or target is zero and maximal rank is automatic, so
those pairs never appear in evidence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import NamedTuple

from .betti import socle_basis
from .hilbert import hilbert_function
from .linalg import rank_over
from .monomials import (
    MonomialIdeal,
    NotMPrimaryError,
    _quotient_part,
    is_borel_fixed,
    is_m_primary,
    is_prime,
    is_stable,
)

WEAK = "weak"
STRONG = "strong"

_COEFF_RANGE = 1 << 16  # random witness coefficients are uniform in 1..2^16


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field for rank computations: the rationals or GF(p)."""

    char: int = 0

    def __post_init__(self) -> None:
        if self.char != 0 and not is_prime(self.char):
            raise ValueError(f"field characteristic must be 0 or a prime, got {self.char}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        if p == 0:
            raise ValueError("GF(p) needs a prime p")
        return cls(p)

    @property
    def is_rationals(self) -> bool:
        return self.char == 0

    def __str__(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"


@dataclass(frozen=True)
class LinearForm:
    """a_1 x_1 + ... + a_n x_n with integer coefficients, not all zero."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not any(self.coefficients):
            raise ValueError("a linear form must be nonzero")

    @classmethod
    def variable(cls, n: int, i: int) -> "LinearForm":
        """The form x_i in an n-variable ring (1-based)."""
        return cls(tuple(1 if t == i - 1 else 0 for t in range(n)))

    def render(self, names: tuple[str, ...]) -> str:
        parts: list[str] = []
        for a, name in zip(self.coefficients, names):
            if a == 0:
                continue
            mag = f"{name}" if abs(a) == 1 else f"{abs(a)}*{name}"
            if not parts:
                parts.append(mag if a > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if a > 0 else f"- {mag}")
        return " ".join(parts)


class RankEvidence(NamedTuple):
    """Achieved vs required rank of one multiplication map."""

    j: int
    k: int
    rank: int
    required: int

    @property
    def maximal(self) -> bool:
        return self.rank == self.required


@dataclass(frozen=True)
class LefschetzVerdict:
    """Outcome of a Lefschetz decision.

    ``element`` is a certified witness when ``holds``; for negative verdicts
    it is None (no element exists, exactly or up to the recorded trials).
    Evidence is ordered by increasing (k, j), so the first non-maximal entry
    is the minimal-degree obstruction.
    """

    holds: bool
    mode: str
    element: LinearForm | None
    evidence: tuple[RankEvidence, ...]
    confidence: str  # "exact" | "probabilistic"
    trials: int = 0
    strategy: str = "witness"

    @property
    def first_failure(self) -> RankEvidence | None:
        for ev in self.evidence:
            if not ev.maximal:
                return ev
        return None


def _check_mode(mode: str) -> None:
    if mode not in (WEAK, STRONG):
        raise ValueError(f"mode must be '{WEAK}' or '{STRONG}', got {mode!r}")


def _power_terms(form: LinearForm, k: int, char: int) -> dict[tuple[int, ...], int]:
    """Exponent -> coefficient table of form^k (reduced mod p for prime fields)."""
    n = len(form.coefficients)
    terms: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for _ in range(k):
        nxt: dict[tuple[int, ...], int] = {}
        for e, c in terms.items():
            for i, a in enumerate(form.coefficients):
                if a == 0:
                    continue
                e2 = e[:i] + (e[i] + 1,) + e[i + 1 :]
                nxt[e2] = nxt.get(e2, 0) + c * a
        terms = nxt
    if char:
        terms = {e: c % char for e, c in terms.items()}
    return {e: c for e, c in terms.items() if c}


def mult_matrix(
    ideal: MonomialIdeal,
    form: LinearForm,
    j: int,
    k: int,
    field: FieldSpec = FieldSpec.rationals(),
) -> list[list[int]]:
    """Matrix of multiplication by form^k from (S/I)_j to (S/I)_{j+k}.

    Bases are the quotient monomials in descending lex; rows are indexed by
    the target basis, columns by the source.  Monomials landing in the ideal
    contribute nothing.  An empty target gives a 0 x dim matrix ([]).
    """
    if not is_m_primary(ideal):
        raise NotMPrimaryError("multiplication matrices are built on Artinian quotients")
    if j < 0 or k < 1:
        raise ValueError("need j >= 0 and k >= 1")
    n = ideal.ring.n
    if len(form.coefficients) != n:
        raise ValueError("linear form does not match the ring")
    src = _quotient_part(ideal, j)
    tgt = _quotient_part(ideal, j + k)
    index = {e: r for r, e in enumerate(tgt)}
    rows = [[0] * len(src) for _ in tgt]
    terms = _power_terms(form, k, field.char)
    for cidx, u in enumerate(src):
        for e, c in terms.items():
            r = index.get(tuple(a + b for a, b in zip(u, e)))
            if r is not None:
                rows[r][cidx] += c
    if field.char:
        p = field.char
        for row in rows:
            for t in range(len(row)):
                row[t] %= p
    return rows


def is_lefschetz_element(
    ideal: MonomialIdeal,
    form: LinearForm,
    mode: str = WEAK,
    field: FieldSpec = FieldSpec.rationals(),
) -> LefschetzVerdict:
    """Exact per-witness check: does this specific form have maximal rank everywhere?"""
    _check_mode(mode)
    h = hilbert_function(ideal)
    top = h.socle_degree
    ks = (1,) if mode == WEAK else tuple(range(1, top + 1))
    evidence: list[RankEvidence] = []
    holds = True
    for k in ks:
        for j in range(top - k + 1):
            required = min(h[j], h[j + k])
            rank = rank_over(mult_matrix(ideal, form, j, k, field), field.char)
            evidence.append(RankEvidence(j, k, rank, required))
            if rank != required:
                holds = False
    return LefschetzVerdict(holds, mode, form, tuple(evidence), "exact")


def decide_lefschetz(
    ideal: MonomialIdeal,
    mode: str = WEAK,
    field: FieldSpec = FieldSpec.rationals(),
    trials: int = 8,
    seed: int = 0,
) -> LefschetzVerdict:
    """Decide whether S/I has the weak (strong) Lefschetz property.

    Stable or Borel-fixed ideals (Borel-fixedness taken in the field's
    characteristic) are decided exactly by testing the last variable: x_n is
    a Lefschetz element iff any linear form is.  Otherwise seeded random
    forms are tried; a successful witness is exact, while a negative answer
    is probabilistic with the trial count recorded -- unless a socle element
    below the socle degree certifies the failure exactly (it is killed by
    every linear form, so any map out of its degree that must be injective
    cannot have maximal rank; the evidence entry then records the best rank
    any form can achieve).

    Prime fields are treated as "large enough" for the genericity argument;
    pick p well above the matrix sizes, or check specific witnesses with
    :func:`is_lefschetz_element`.
    """
    _check_mode(mode)
    if not is_m_primary(ideal):
        raise NotMPrimaryError("the Lefschetz property is decided for Artinian quotients")
    n = ideal.ring.n
    stable = is_stable(ideal)
    if stable or is_borel_fixed(ideal, char=field.char):
        xn = LinearForm.variable(n, n)
        verdict = is_lefschetz_element(ideal, xn, mode, field)
        strategy = "stable-last-variable" if stable else "borel-last-variable"
        return replace(
            verdict, element=xn if verdict.holds else None, strategy=strategy
        )
    if trials < 1:
        raise ValueError("non-stable input needs at least one random trial")
    h = hilbert_function(ideal)
    top = h.socle_degree
    soc = socle_basis(ideal).dims
    ks = (1,) if mode == WEAK else tuple(range(1, top + 1))
    for k in ks:
        for j in range(top - k + 1):
            sdim = soc.get(j, 0)
            if sdim and h[j] <= h[j + k]:
                ev = RankEvidence(j, k, h[j] - sdim, h[j])
                return LefschetzVerdict(
                    False, mode, None, (ev,), "exact", 0, "socle-annihilator"
                )
    rng = random.Random(seed)
    verdict = None
    for t in range(1, trials + 1):
        form = LinearForm(tuple(rng.randint(1, _COEFF_RANGE) for _ in range(n)))
        verdict = is_lefschetz_element(ideal, form, mode, field)
        if verdict.holds:
            return replace(verdict, trials=t, strategy="random-witness")
    assert verdict is not None
    return replace(
        verdict,
        element=None,
        confidence="probabilistic",
        trials=trials,
        strategy="random-trials",
    )
