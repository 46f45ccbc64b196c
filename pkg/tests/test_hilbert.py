import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_ideal
from lefschetz import (
    HilbertVector,
    NotMPrimaryError,
    Ring,
    binom,
    degree_basis,
    hilbert_function,
    hilbert_s,
    macaulay_lower,
    macaulay_rep,
)
from lefschetz.generators import random_lexsegment, random_stable
from lefschetz.monomials import _ideal_part


def test_hilbert_s_values():
    assert hilbert_s(3, 2) == 6
    assert hilbert_s(3, 3) == 10
    assert hilbert_s(1, 9) == 1
    assert hilbert_s(5, 0) == 1
    assert hilbert_s(4, -1) == 0


def test_hilbert_vector_normalization():
    h = HilbertVector.of([1, 3, 3, 1, 0, 0])
    assert h.values == (1, 3, 3, 1)
    assert h[2] == 3 and h[17] == 0 and h[-1] == 0
    assert h.socle_degree == 3
    with pytest.raises(ValueError):
        HilbertVector((1, 0))
    with pytest.raises(ValueError):
        HilbertVector((1, -2, 1))


def test_hilbert_function_examples(three_squares, pair_a, pair_b, socle_obstruction):
    assert tuple(hilbert_function(three_squares)) == (1, 3, 3, 1)
    assert tuple(hilbert_function(pair_a)) == (1, 3, 4, 3)
    assert tuple(hilbert_function(pair_b)) == (1, 3, 4, 3)
    assert tuple(hilbert_function(socle_obstruction)) == (1, 4, 4)


def test_hilbert_function_refuses_non_primary(kxy):
    with pytest.raises(NotMPrimaryError):
        hilbert_function(make_ideal(kxy, (1, 1)))


def test_hilbert_function_counts_complement(pair_a):
    h = hilbert_function(pair_a)
    for j in range(len(h) + 2):
        assert h[j] + len(_ideal_part(pair_a, j)) == hilbert_s(3, j)
        assert h[j] == len(degree_basis(pair_a, j, of_quotient=True))


def test_macaulay_rep_examples():
    assert macaulay_rep(4, 2).ks == (3, 1)  # C(3,2) + C(1,1)
    assert macaulay_rep(3, 3).ks == (3, 2, 1)  # C(3,3) + C(2,2) + C(1,1)
    assert macaulay_rep(0, 4).ks == (3, 2, 1, 0)
    assert macaulay_rep(0, 4).total() == 0
    with pytest.raises(ValueError):
        macaulay_rep(3, 0)
    with pytest.raises(ValueError):
        macaulay_rep(-1, 2)


def test_macaulay_rep_uniqueness_by_enumeration():
    # enumerate all strictly descending tuples of the right length and check
    # exactly one realizes each value
    import itertools

    for d in (1, 2, 3):
        top = {1: 60, 2: 14, 3: 10}[d]
        for a in range(0, 61):
            matches = [
                ks
                for ks in itertools.combinations(range(top, -1, -1), d)
                if sum(binom(k, i) for k, i in zip(ks, range(d, 0, -1))) == a
            ]
            assert len(matches) == 1, (a, d, matches)
            assert macaulay_rep(a, d).ks == matches[0]


def test_macaulay_lower_values():
    assert macaulay_lower(3, 1) == 1  # 3 = C(3,1) -> C(2,0)
    assert macaulay_lower(4, 2) == 3  # C(3,2)+C(1,1) -> C(2,1)+C(0,0)
    assert macaulay_lower(3, 2) == 2  # C(3,2) -> C(2,1), filler term vanishes
    for d in (1, 3, 7):
        assert macaulay_lower(0, d) == 0


@given(st.integers(0, 10**4), st.integers(1, 10))
@settings(max_examples=300, deadline=None)
def test_macaulay_round_trip(a, d):
    rep = macaulay_rep(a, d)
    assert rep.total() == a
    assert len(rep.ks) == d
    assert all(x > y for x, y in zip(rep.ks, rep.ks[1:]))
    assert rep.ks[-1] >= 0


@given(st.integers(2, 4), st.integers(1, 4), st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_last_variable_count_identity(n, max_deg, seed):
    # for a lexsegment ideal, the number of degree-j members divisible by the
    # last variable is H(S, j-1) - H(S/I, j)^[j]
    ring = Ring(n)
    ideal = random_lexsegment(ring, max_deg, seed=seed)
    h = hilbert_function(ideal)
    for j in range(1, h.socle_degree + 3):
        part = _ideal_part(ideal, j)
        if not part:
            continue
        count = sum(1 for e in part if e[n - 1] > 0)
        assert count == hilbert_s(n, j - 1) - macaulay_lower(h[j], j)


@given(st.integers(2, 4), st.integers(1, 4), st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_macaulay_growth_of_real_hilbert_functions(n, max_deg, seed):
    # consecutive values of an actual Hilbert function obey Macaulay's bound
    ideal = random_stable(Ring(n), max_deg, seed=seed, closure=False)
    h = hilbert_function(ideal)
    for j in range(1, len(h)):
        rep = macaulay_rep(h[j], j)
        upper = sum(binom(k + 1, i + 1) for k, i in zip(rep.ks, range(j, 0, -1)))
        assert h[j + 1] <= upper
