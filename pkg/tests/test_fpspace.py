import random

import pytest

from ramify.fpspace import (
    GroupAlgebraElement,
    apply_idempotent,
    convolve,
    count_lines,
    eigenspace,
    enumerate_lines,
    fp_matrix,
    full_space,
    idempotent,
    identity_matrix,
    mat_inverse,
    mat_mul,
    mat_pow,
    multiplicative_order,
    subspace,
)


def test_count_lines_known_values():
    assert count_lines(0, 5) == 0
    assert count_lines(2, 3) == 4
    assert count_lines(3, 2) == 7


def test_enumerate_lines_small_spaces():
    one = full_space(7, 1)
    assert enumerate_lines(one) == [one]
    lines = enumerate_lines(full_space(3, 2))
    assert len(lines) == 4
    lines5 = enumerate_lines(full_space(2, 5))
    assert len(lines5) == 31


@pytest.mark.parametrize("p,dim", [(2, 6), (3, 4), (5, 3)])
def test_enumerate_lines_distinct_canonical_contained(p, dim):
    ambient = full_space(p, dim)
    lines = enumerate_lines(ambient)
    assert len(lines) == count_lines(dim, p)
    assert len(set(lines)) == len(lines)
    for line in lines:
        assert line.dim == 1
        assert ambient.contains(line)


def test_enumerate_lines_respects_subspace():
    amb = subspace(5, 4, [(1, 0, 0, 2), (0, 1, 0, 3)])
    lines = enumerate_lines(amb)
    assert len(lines) == count_lines(2, 5)
    assert all(amb.contains(l) for l in lines)


def test_enumerate_lines_guard():
    with pytest.raises(ValueError, match="enumeration too large"):
        enumerate_lines(full_space(2, 24))


def test_idempotent_known_values():
    assert idempotent(7, 1, 1).coeffs == (1,)
    assert idempotent(3, 2, 2).coeffs == (2, 1)
    assert idempotent(5, 4, 2).coeffs == (4, 2, 1, 3)


def test_idempotent_rejects_bad_inputs():
    with pytest.raises(ValueError, match="m must divide p - 1"):
        idempotent(5, 3, 2)
    with pytest.raises(ValueError, match="character not faithful"):
        idempotent(5, 4, 4)  # 4 has order 2 mod 5, not 4


def test_convolve_identity_and_squares():
    x = GroupAlgebraElement(p=3, m=2, coeffs=(2, 1))
    delta = GroupAlgebraElement(p=3, m=2, coeffs=(1, 0))
    assert convolve(delta, x) == x
    assert convolve(x, x) == x
    tau = GroupAlgebraElement(p=3, m=2, coeffs=(0, 1))
    assert convolve(tau, tau).coeffs == (1, 0)


def test_convolve_shape_mismatch():
    x = GroupAlgebraElement(p=3, m=2, coeffs=(2, 1))
    y = GroupAlgebraElement(p=7, m=2, coeffs=(2, 1))
    with pytest.raises(ValueError):
        convolve(x, y)


def _generators_of_order(m, p):
    return [g for g in range(1, p) if multiplicative_order(g, p) == m]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_idempotent_is_idempotent_all_characters(p):
    for m in _divisors(p - 1):
        for g in _generators_of_order(m, p):
            eps = idempotent(p, m, g)
            assert convolve(eps, eps) == eps


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_shift_acts_by_character_value(p):
    """Multiplying by the group generator scales the idempotent by omega."""
    for m in _divisors(p - 1):
        for g in _generators_of_order(m, p):
            eps = idempotent(p, m, g)
            tau = GroupAlgebraElement(
                p=p, m=m, coeffs=tuple(1 if k == 1 % m else 0 for k in range(m))
            )
            shifted = convolve(tau, eps)
            scaled = tuple((g * c) % p for c in eps.coeffs)
            assert shifted.coeffs == scaled


def test_eigenspace_known_values():
    assert eigenspace(identity_matrix(3, 2), 1) == full_space(3, 2)
    d = fp_matrix(3, [[1, 0], [0, 2]])
    assert eigenspace(d, 2) == subspace(3, 2, [(0, 1)])
    swap = fp_matrix(3, [[0, 1], [1, 0]])  # order-2 action on F_3^2
    line = eigenspace(swap, 2)
    assert line == subspace(3, 2, [(1, 2)])


def test_eigenspace_rejects_non_square():
    with pytest.raises(ValueError):
        eigenspace(fp_matrix(3, [[1, 0, 0], [0, 1, 0]]), 1)


def test_apply_idempotent_known_values():
    eps1 = idempotent(7, 1, 1)
    assert apply_idempotent(eps1, identity_matrix(7, 3)) == full_space(7, 3)
    eps = idempotent(3, 2, 2)
    d = fp_matrix(3, [[1, 0], [0, 2]])
    assert apply_idempotent(eps, d) == subspace(3, 2, [(0, 1)])
    # no omega-eigenvector: the projector lands on the zero subspace
    zero = apply_idempotent(eps, identity_matrix(3, 2))
    assert zero.dim == 0


def test_apply_idempotent_rejects_wrong_order():
    eps = idempotent(3, 2, 2)
    not_order_2 = fp_matrix(3, [[1, 1], [0, 1]])  # order 3
    with pytest.raises(ValueError, match="not a representation of order"):
        apply_idempotent(eps, not_order_2)


def _random_order_m_rep(rng, p, m, g, dim):
    """Invertible M with M^m = I: conjugate of a diagonal of m-th roots."""
    diag_vals = [pow(g, rng.randrange(m), p) for _ in range(dim)]
    diag = fp_matrix(p, [[diag_vals[r] if r == c else 0 for c in range(dim)] for r in range(dim)])
    while True:
        rows = [[rng.randrange(p) for _ in range(dim)] for _ in range(dim)]
        try:
            basis = fp_matrix(p, rows)
            inv = mat_inverse(basis)
        except ValueError:
            continue
        return mat_mul(mat_mul(basis, diag), inv)


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_projector_equals_eigenspace_on_random_reps(p):
    rng = random.Random(97 * p)
    for m in _divisors(p - 1):
        g = _generators_of_order(m, p)[0]
        eps = idempotent(p, m, g)
        for _ in range(8):
            dim = rng.randrange(1, 6)
            rep = _random_order_m_rep(rng, p, m, g, dim)
            assert mat_pow(rep, m) == identity_matrix(p, dim)
            assert apply_idempotent(eps, rep) == eigenspace(rep, g % p)


def test_subspace_canonical_under_change_of_spanning_set():
    a = subspace(5, 3, [(1, 2, 3), (0, 1, 4)])
    b = subspace(5, 3, [(1, 3, 2 + 5 - 0), (2, 4, 6)])  # same span, messier input
    c = subspace(5, 3, [(2, 4, 6), (1, 3, 7)])
    assert b == c
    assert a.dim == 2 and b.dim == 2


def test_matrix_inverse_round_trip():
    m = fp_matrix(7, [[2, 1, 0], [1, 1, 3], [0, 5, 1]])
    assert mat_mul(m, mat_inverse(m)) == identity_matrix(7, 3)
