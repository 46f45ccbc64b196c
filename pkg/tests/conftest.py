import pytest

from lefschetz import Monomial, MonomialIdeal, Ring, minimalize, monomial_exponents


def make_ideal(ring: Ring, *exponents) -> MonomialIdeal:
    return minimalize([Monomial(e) for e in exponents], ring)


@pytest.fixture
def kxy() -> Ring:
    return Ring(2)


@pytest.fixture
def kxyz() -> Ring:
    return Ring(3)


@pytest.fixture
def kwxyz() -> Ring:
    return Ring(4, names=("w", "x", "y", "z"))


@pytest.fixture
def three_squares(kxyz) -> MonomialIdeal:
    """(x^2, y^2, z^2): weak Lefschetz over Q, not in characteristic 2."""
    return make_ideal(kxyz, (2, 0, 0), (0, 2, 0), (0, 0, 2))


@pytest.fixture
def pair_a(kxyz) -> MonomialIdeal:
    """(x^2, xy, y^3, y^2 z, x z^3, y z^3, z^4): strongly stable, has SLP."""
    return make_ideal(
        kxyz, (2, 0, 0), (1, 1, 0), (0, 3, 0), (0, 2, 1), (1, 0, 3), (0, 1, 3), (0, 0, 4)
    )


@pytest.fixture
def pair_b(kxyz) -> MonomialIdeal:
    """(x^2, xy, y^3, x z^2, y^2 z^2, y z^3, z^4): lexsegment twin of pair_a, no SLP."""
    return make_ideal(
        kxyz, (2, 0, 0), (1, 1, 0), (0, 3, 0), (1, 0, 2), (0, 2, 2), (0, 1, 3), (0, 0, 4)
    )


@pytest.fixture
def socle_obstruction(kwxyz) -> MonomialIdeal:
    """(w^2, wx, wy, wz, x^2, y^2) plus every degree-3 monomial of K[w,x,y,z]."""
    deg2 = [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 2, 0, 0), (0, 0, 2, 0)]
    return make_ideal(kwxyz, *(deg2 + list(monomial_exponents(4, 3))))


@pytest.fixture
def plane_curve(kxy) -> MonomialIdeal:
    """(x^3, x^2 y, y^3): every nonzero linear form is a weak Lefschetz element."""
    return make_ideal(kxy, (3, 0), (2, 1), (0, 3))


@pytest.fixture
def stable_not_strong(kxyz) -> MonomialIdeal:
    """(x^2, xy, y^2, yz): stable but not strongly stable (not m-primary)."""
    return make_ideal(kxyz, (2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 1, 1))


def char2_borel_ideal(p: int = 2) -> MonomialIdeal:
    """Degree-2p monomials with small last exponent, plus x1^p x3^p and x2^p x3^p.

    Stable and Borel-fixed in characteristic p, but not strongly stable.
    """
    ring = Ring(3, p)
    gens = [e for e in monomial_exponents(3, 2 * p) if e[2] < p]
    gens += [(p, 0, p), (0, p, p)]
    return make_ideal(ring, *gens)
