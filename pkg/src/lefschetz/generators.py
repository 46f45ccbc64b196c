"""Seeded random m-primary ideals in the stable, strongly stable and
lexsegment classes, for property-based testing.

Generators are pure functions of (parameters, seed): the same seed always
yields the same ideal, distinct seeds share no state.  No uniformity over
an ideal class is claimed.
"""

from __future__ import annotations

import random

from .hilbert import hilbert_function
from .lexsegment import lex_ideal_from_hilbert
from .monomials import (
    Monomial,
    MonomialIdeal,
    Ring,
    _divides,
    minimalize,
    monomial_exponents,
)

DEFAULT_DENSITY = 0.3


def _sample_seeds(rng: random.Random, n: int, max_deg: int, density: float):
    seeds = set()
    for degree in range(1, max_deg + 1):
        table = monomial_exponents(n, degree)
        for _ in range(n):
            if rng.random() < density:
                seeds.add(table[rng.randrange(len(table))])
    return seeds


def _close(seeds, n: int, strong: bool):
    """Close a set of exponent vectors under the (strongly) stable exchanges.

    Terminates because each exchange moves strictly up in lex at a fixed
    degree.  Redundant members are pruned by the caller's minimalization.
    """
    gens = set(seeds)
    work = list(seeds)
    while work:
        e = work.pop()
        if strong:
            ks = [k for k in range(n) if e[k] > 0]
        else:
            ks = [max(k for k in range(n) if e[k] > 0)] if any(e) else []
        for k in ks:
            for i in range(k):
                v = list(e)
                v[k] -= 1
                v[i] += 1
                v = tuple(v)
                if v not in gens and not any(_divides(g, v) for g in gens):
                    gens.add(v)
                    work.append(v)
    return gens


def random_strongly_stable(
    ring: Ring, max_deg: int, density: float = DEFAULT_DENSITY, seed=0
) -> MonomialIdeal:
    """A random m-primary strongly stable ideal with socle degree <= max_deg.

    Random monomials of degree <= max_deg are closed under every exchange
    (x_i/x_k)u with i < k; adding the full slice of degree max_deg + 1 (the
    closure of any pure power of that degree) forces m-primarity.
    """
    if max_deg < 1:
        raise ValueError("max_deg must be at least 1")
    rng = random.Random(f"strongly-stable:{seed}")
    n = ring.n
    gens = _close(_sample_seeds(rng, n, max_deg, density), n, strong=True)
    gens |= set(monomial_exponents(n, max_deg + 1))
    return minimalize((Monomial(e) for e in gens), ring)


def random_stable(
    ring: Ring,
    max_deg: int,
    density: float = DEFAULT_DENSITY,
    seed=0,
    *,
    closure: bool = True,
) -> MonomialIdeal:
    """A random m-primary stable ideal (socle degree <= max_deg).

    Uses the weaker exchange (x_i/x_top)u only, so outputs are regularly
    stable without being strongly stable.  With ``closure=False`` the seeds
    are not closed at all and only pure powers of degree max_deg + 1 are
    added: a random m-primary monomial ideal with no stability promise.
    """
    if max_deg < 1:
        raise ValueError("max_deg must be at least 1")
    rng = random.Random(f"stable:{seed}")
    n = ring.n
    seeds = _sample_seeds(rng, n, max_deg, density)
    if closure:
        gens = _close(seeds, n, strong=False)
        gens |= set(monomial_exponents(n, max_deg + 1))
    else:
        gens = set(seeds)
        for i in range(n):
            e = [0] * n
            e[i] = max_deg + 1
            gens.add(tuple(e))
    return minimalize((Monomial(e) for e in gens), ring)


def random_lexsegment(
    ring: Ring, max_deg: int, seed=0, density: float = DEFAULT_DENSITY
) -> MonomialIdeal:
    """A random m-primary lexsegment ideal.

    Samples a random m-primary ideal, takes its Hilbert function, and builds
    the lexsegment realization, which reproduces that Hilbert function.
    """
    raw = random_stable(ring, max_deg, density, seed=f"lexsegment:{seed}", closure=False)
    return lex_ideal_from_hilbert(hilbert_function(raw), ring)
