"""Closed-form Lefschetz criteria in terms of Betti numbers and Hilbert functions.

Three families, each with a guarded input class:

* ``cwl_wlp_criterion`` -- weak Lefschetz for componentwise linear ideals,
  read off the graded Betti numbers.  Only stable input is accepted, since
  stability is the certificate of componentwise linearity this toolkit can
  check (the general case reduces to stable via generic initial ideals,
  which are out of scope).
* ``gotzmann_wlp_criterion`` -- weak Lefschetz for Gotzmann ideals, read off
  the Hilbert function alone.
* ``lex_slp_criterion`` -- strong Lefschetz for lexsegment ideals, again
  from the Hilbert function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .betti import ek_betti
from .hilbert import HilbertVector, binom, macaulay_lower
from .lexsegment import lex_ideal_from_hilbert
from .monomials import (
    MonomialIdeal,
    NotMPrimaryError,
    NotStableError,
    Ring,
    is_m_primary,
    is_stable,
)

CWL_VARIANTS = ("b", "c", "star")


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of one closed-form criterion.

    ``d`` is the first shift with a nonzero last Betti column (Betti-based
    criteria); ``t`` is the first degree where the Hilbert value drops to at
    most the degree (Hilbert-based criteria).  ``witness_failures`` lists
    (index, lhs, rhs) for every failed comparison.
    """

    criterion: str  # cwl_b | cwl_c | star | gotzmann_wlp | lex_slp
    holds: bool
    d: int | None = None
    t: int | None = None
    witness_failures: tuple = ()


def _socle_column_threshold(ideal: MonomialIdeal) -> int:
    """First shift with a generator in the last variable; equals the first
    nonzero shift of the table's last column for stable input (asserted)."""
    n = ideal.ring.n
    gen_ds = [g.degree for g in ideal.gens if g.max_var == n]
    assert gen_ds, "an m-primary ideal has a pure power of the last variable"
    d = min(gen_ds)
    table = ek_betti(ideal)
    betti_ds = [j - (n - 1) for (i, j) in table.entries if i == n - 1]
    assert betti_ds and min(betti_ds) == d, "generator and Betti thresholds disagree"
    return d


def cwl_wlp_criterion(ideal: MonomialIdeal, which: str = "b") -> CriterionReport:
    """Weak-Lefschetz test for a stable (hence componentwise linear) ideal.

    With d the first shift whose last Betti column is nonzero, the variants
    check, for every shift j > d:

    * ``b``    -- beta_{n-1, n-1+j} = beta_{0, j};
    * ``c``    -- beta_{i, i+j} = C(n-1, i) * beta_{0, j} for every i;
    * ``star`` -- every generator of degree > d involves the last variable.

    All three are equivalent for stable m-primary input.
    """
    if which not in CWL_VARIANTS:
        raise ValueError(f"which must be one of {CWL_VARIANTS}, got {which!r}")
    if not is_stable(ideal):
        raise NotStableError(
            "the Betti criterion is proved for componentwise linear ideals; "
            "stable input certifies that, non-stable input would need generic "
            "initial ideals (out of scope)"
        )
    if not is_m_primary(ideal):
        raise NotMPrimaryError("the criterion addresses Artinian quotients")
    n = ideal.ring.n
    d = _socle_column_threshold(ideal)
    table = ek_betti(ideal)
    failures: list[tuple] = []
    top = ideal.max_gen_degree
    if which == "star":
        for g in ideal.gens:
            if g.degree > d and g.max_var != n:
                failures.append((g.degree, g.max_var, n))
    else:
        for shift in range(d + 1, top + 1):
            b0 = table.entry(0, shift)
            if which == "b":
                lhs = table.entry(n - 1, n - 1 + shift)
                if lhs != b0:
                    failures.append((shift, lhs, b0))
            else:
                for i in range(n):
                    lhs = table.entry(i, i + shift)
                    rhs = binom(n - 1, i) * b0
                    if lhs != rhs:
                        failures.append(((i, shift), lhs, rhs))
    name = "star" if which == "star" else f"cwl_{which}"
    return CriterionReport(name, not failures, d=d, witness_failures=tuple(failures))


def _coerce_feasible(h: HilbertVector | Sequence[int]) -> HilbertVector:
    h = HilbertVector.of(h)
    # feasibility is constructive: the lexsegment realization must exist
    lex_ideal_from_hilbert(h, Ring(max(h[1], 1)))
    return h


def _surjectivity_threshold(h: HilbertVector) -> int:
    j = 0
    while h[j] > j:
        j += 1
    return j


def gotzmann_wlp_criterion(h: HilbertVector | Sequence[int]) -> CriterionReport:
    """Weak-Lefschetz test for a Gotzmann ideal, from its Hilbert function.

    With t the first degree where h[t] <= t, the condition is
    h[j]^[j] = h[j-1] for 0 < j < t (vacuously true when t <= 1).
    """
    h = _coerce_feasible(h)
    t = _surjectivity_threshold(h)
    failures = []
    for j in range(1, t):
        lhs = macaulay_lower(h[j], j)
        if lhs != h[j - 1]:
            failures.append((j, lhs, h[j - 1]))
    return CriterionReport("gotzmann_wlp", not failures, t=t, witness_failures=tuple(failures))


def lex_slp_criterion(h: HilbertVector | Sequence[int]) -> CriterionReport:
    """Strong-Lefschetz test for a lexsegment ideal, from its Hilbert function.

    If h[1] <= 2 the property holds unconditionally.  Otherwise it holds iff
    h[t] <= 2 and the gotzmann_wlp chain h[j]^[j] = h[j-1] holds for 0 < j < t.
    """
    h = _coerce_feasible(h)
    t = _surjectivity_threshold(h)
    if h[1] <= 2:
        return CriterionReport("lex_slp", True, t=t)
    failures = []
    if h[t] > 2:
        failures.append((t, h[t], 2))
    for j in range(1, t):
        lhs = macaulay_lower(h[j], j)
        if lhs != h[j - 1]:
            failures.append((j, lhs, h[j - 1]))
    return CriterionReport("lex_slp", not failures, t=t, witness_failures=tuple(failures))
