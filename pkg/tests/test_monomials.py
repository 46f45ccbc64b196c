import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import char2_borel_ideal, make_ideal
from lefschetz import (
    Monomial,
    Ring,
    degree_basis,
    hilbert_s,
    is_borel_fixed,
    is_lexsegment,
    is_m_primary,
    is_stable,
    is_strongly_stable,
    minimalize,
    monomial_exponents,
)
from lefschetz.generators import random_lexsegment, random_stable, random_strongly_stable
from lefschetz.monomials import _divides, is_prime


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring(0)
    with pytest.raises(ValueError):
        Ring(2, 4)
    with pytest.raises(ValueError):
        Ring(2, names=("x",))
    assert Ring(3).variable_names == ("x1", "x2", "x3")
    assert Ring(2, 7, ("a", "b")).char == 7


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 101, 65537, 2147483629}
    for m in list(primes) + [0, 1, 4, 9, 91, 65536, 2147483629 * 3]:
        assert is_prime(m) == (m in primes)


def test_monomial_basics(kxyz):
    u = kxyz.monomial(1, 0, 2)
    assert u.degree == 3
    assert u.max_var == 3
    assert Monomial((0, 0, 0)).max_var == 0
    assert kxyz.monomial(1, 1, 0).divides(kxyz.monomial(2, 1, 1))
    assert not kxyz.monomial(0, 2, 0).divides(kxyz.monomial(1, 1, 1))
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_minimalize_drops_multiples(kxy):
    ideal = make_ideal(kxy, (2, 0), (2, 1), (0, 2))
    assert {g.exponents for g in ideal.gens} == {(2, 0), (0, 2)}


def test_minimalize_empty_is_zero_ideal(kxy):
    zero = minimalize([], kxy)
    assert zero.gens == ()
    assert not is_m_primary(zero)


def test_minimalize_rejects_wrong_length(kxy):
    with pytest.raises(ValueError):
        minimalize([Monomial((1, 0, 0))], kxy)


def test_minimalize_section3_ideal(socle_obstruction):
    # independent route: filter the degree-3 slice by divisibility against
    # the degree-2 generators, then count survivors
    deg2 = {(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 2, 0, 0), (0, 0, 2, 0)}
    survivors = {
        e
        for e in monomial_exponents(4, 3)
        if not any(_divides(g, e) for g in deg2)
    }
    assert survivors == {g.exponents for g in socle_obstruction.gens_of_degree(3)}
    assert len(survivors) == 4  # x*y*z, x*z^2, y*z^2, z^3
    assert len(socle_obstruction.gens) == 10


def test_degree_basis_quotient(three_squares, kxyz):
    quot = degree_basis(three_squares, 2, of_quotient=True)
    assert {m.exponents for m in quot} == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert degree_basis(three_squares, 0) == [Monomial((0, 0, 0))]


def test_degree_basis_ideal_side(pair_b):
    # dim S_3 = 10 and the quotient has 3 monomials there
    assert len(degree_basis(pair_b, 3, of_quotient=False)) == 7


@pytest.mark.parametrize("degree", [0, 1, 2, 3, 5])
def test_degree_basis_partitions_slice(pair_a, degree):
    inside = degree_basis(pair_a, degree, of_quotient=False)
    outside = degree_basis(pair_a, degree, of_quotient=True)
    assert len(inside) + len(outside) == hilbert_s(3, degree)
    assert not {m.exponents for m in inside} & {m.exponents for m in outside}


def test_is_m_primary(kxy, three_squares):
    assert is_m_primary(three_squares)
    assert not is_m_primary(make_ideal(kxy, (1, 1)))
    assert is_m_primary(
        make_ideal(Ring(3), (2, 0, 0), (1, 1, 0), (0, 3, 0), (0, 2, 1), (1, 0, 3), (0, 1, 3), (0, 0, 4))
    )


def test_is_stable(stable_not_strong, plane_curve, three_squares):
    assert is_stable(stable_not_strong)
    assert not is_stable(plane_curve)  # (x/y) * y^3 = x y^2 is not in the ideal
    assert not is_stable(three_squares)
    for p in (2, 3, 5):
        pure = make_ideal(Ring(2, p), (p, 0), (0, p))
        assert not is_stable(pure)


def test_is_strongly_stable(stable_not_strong, pair_a, pair_b):
    assert not is_strongly_stable(stable_not_strong)
    assert is_strongly_stable(pair_a)
    assert is_strongly_stable(pair_b)
    assert not is_strongly_stable(char2_borel_ideal(2))


def test_is_borel_fixed(stable_not_strong):
    assert not is_borel_fixed(stable_not_strong)  # char 0: equals strongly stable
    ideal = char2_borel_ideal(2)
    assert is_stable(ideal)
    assert is_borel_fixed(ideal)
    for p in (2, 3):
        pure = make_ideal(Ring(2, p), (p, 0), (0, p))
        assert is_borel_fixed(pure)
        assert not is_borel_fixed(pure, char=0)
    with pytest.raises(ValueError):
        is_borel_fixed(stable_not_strong, char=6)


def test_is_lexsegment(pair_a, pair_b, kxy):
    assert is_lexsegment(pair_b)
    assert not is_lexsegment(pair_a)
    assert is_lexsegment(make_ideal(kxy, (1, 0)))


exponent_lists = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)).filter(any),
    min_size=1,
    max_size=8,
)


@given(exponent_lists)
def test_minimalize_properties(exps):
    ring = Ring(3)
    ideal = minimalize([Monomial(e) for e in exps], ring)
    gens = [g.exponents for g in ideal.gens]
    # antichain
    for a in gens:
        for b in gens:
            assert a == b or not _divides(a, b)
    # every input is generated
    for e in exps:
        assert ideal.contains_exponents(e)
    # idempotent
    assert minimalize(ideal.gens, ring) == ideal


@given(st.integers(2, 4), st.integers(1, 4), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_class_implications(n, max_deg, seed):
    ring = Ring(n)
    strong = random_strongly_stable(ring, max_deg, seed=seed)
    assert is_strongly_stable(strong)
    assert is_stable(strong)  # strongly stable implies stable
    assert is_borel_fixed(strong, char=5)  # strongly stable is Borel-fixed in any char
    assert is_borel_fixed(strong) == is_strongly_stable(strong)  # char 0

    stable = random_stable(ring, max_deg, seed=seed)
    assert is_stable(stable)
    assert is_m_primary(stable)

    lex = random_lexsegment(ring, max_deg, seed=seed)
    assert is_lexsegment(lex)
    assert is_strongly_stable(lex)  # lexsegment implies strongly stable


def test_monomial_exponents_order_and_count():
    slice3 = monomial_exponents(3, 2)
    assert slice3 == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    for n, j in [(1, 5), (2, 3), (4, 4), (5, 6)]:
        assert len(monomial_exponents(n, j)) == hilbert_s(n, j)
