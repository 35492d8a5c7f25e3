import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramify.breaks import (
    a_of,
    b_lower,
    b_upper,
    break_sequence,
    c_truncation,
    iter_break_entries,
    prime_to_p_breaks,
)
from ramify.filtration import FieldParams, herbrand_psi, upper_filtration


def test_a_of_known_values():
    assert a_of(1, 7) == 0
    assert a_of(3, 3) == 1
    for i in range(1, 20):
        assert a_of(i, 2) == i - 1


def test_a_of_rejects_zero_index():
    with pytest.raises(ValueError, match="index out of domain"):
        a_of(0, 3)


def test_b_upper_known_values():
    assert b_upper(1, 3) == 1
    assert b_upper(1, 13) == 1
    assert b_upper(6, 5) == 7
    for i in range(1, 20):
        assert b_upper(i, 2) == 2 * i - 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_b_upper_coprime_to_p(p):
    for i in range(1, 200):
        assert b_upper(i, p) % p != 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_b_upper_bijection_onto_prime_to_p(p):
    """i -> b_upper(i) enumerates the prime-to-p naturals in order."""
    values = [b_upper(i, p) for i in range(1, 10001)]
    assert values == sorted(set(values))
    top = values[-1]
    assert values == [n for n in range(1, top + 1) if n % p != 0]


def test_prime_to_p_breaks_known_values():
    assert prime_to_p_breaks(3, 2) == [1, 2]
    assert prime_to_p_breaks(2, 3) == [1, 3, 5]
    assert prime_to_p_breaks(5, 6) == [1, 2, 3, 4, 6, 7]


@pytest.mark.parametrize("p,e", [(3, 4), (5, 8), (2, 5), (7, 12)])
def test_prime_to_p_breaks_characterization(p, e):
    got = prime_to_p_breaks(p, e)
    assert len(got) == e
    bound = p * e / (p - 1)
    assert all(b < bound and b % p != 0 for b in got)


def test_b_lower_known_values():
    assert b_lower(1, 3, 3) == 1
    assert b_lower(1, 5, 25) == 1
    assert b_lower(2, 3, 3) == 4
    assert b_lower(3, 2, 2) == 13


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("fpow", [1, 2])
def test_b_lower_matches_transition_map(p, fpow):
    """Closed form agrees with the piecewise-linear transition evaluated at
    the upper breaks, for an ambient field deep enough to contain them."""
    q = p**fpow
    e = 30 if p > 2 else 30  # e >= i so every break is realized
    params = FieldParams(p=p, f=fpow, e=e, zeta_in_field=(p == 2))
    psi = herbrand_psi(upper_filtration(params))
    for i in range(1, 31):
        assert b_lower(i, p, q) == psi(b_upper(i, p))


def test_c_truncation_known_values():
    assert c_truncation(0, 3) == 0
    assert c_truncation(5, 3) == 4
    for p in (2, 3, 5, 7):
        assert c_truncation(p, p) == p - 1


@given(st.integers(min_value=0, max_value=10**6), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=200)
def test_c_truncation_step_recurrence(m, p):
    assert c_truncation(m + p, p) == c_truncation(m, p) + (p - 1)
    assert c_truncation(m + 1, p) >= c_truncation(m, p)


def test_break_sequence_rows_consistent():
    seq = break_sequence(3, 9, 12)
    assert seq.p == 3 and seq.q == 9
    for i, a, bu, bl in seq.entries:
        assert a == a_of(i, 3)
        assert bu == b_upper(i, 3)
        assert bl == b_lower(i, 3, 9)
    uppers = [row[2] for row in seq.entries]
    lowers = [row[3] for row in seq.entries]
    assert uppers == sorted(uppers) and lowers == sorted(lowers)
    assert lowers[0] == 1


def test_break_sequence_validates_inputs():
    with pytest.raises(ValueError, match="prime"):
        break_sequence(4, 4, 3)
    with pytest.raises(ValueError, match="power of p"):
        break_sequence(3, 8, 3)


def test_iter_break_entries_is_lazy_and_consistent():
    it = iter_break_entries(5, 5)
    first = [next(it) for _ in range(40)]
    assert first == list(break_sequence(5, 5, 40).entries)
