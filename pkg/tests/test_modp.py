"""Tests for the internal mod-p linear algebra helpers."""

from fractions import Fraction

import pytest

from hopfcomm._modp import (
    charpoly,
    identity_matrix,
    is_prime,
    lift_root,
    lll_reduce,
    mat_mul,
    mat_vec,
    next_prime_in_ap,
    nullspace,
    poly_eval,
    poly_roots,
    rref,
    solve,
)
from hopfcomm.errors import BadPrime


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 61, 97, 101, 7919}
    for n in range(2, 120):
        assert is_prime(n) == all(n % d for d in range(2, n)) or n in primes
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # 193707721 * 761838257287


def test_next_prime_in_ap():
    # Smallest prime above 2|S4| = 48 congruent to 1 mod exponent 12.
    assert next_prime_in_ap(48, 12) == 61
    assert next_prime_in_ap(24, 6) == 31
    assert next_prime_in_ap(12, 3, 2) == 17


def test_rref_and_solve():
    p = 7
    a = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    rows, pivots = rref(a, p)
    assert pivots == [0, 1]
    x = solve(a, [6, 12 % p, 4], p)
    assert x is not None
    assert mat_vec(a, x, p) == [6, 5, 4]
    assert solve([[1, 1], [1, 1]], [0, 1], p) is None


def test_nullspace():
    p = 11
    a = [[1, 2, 3], [4, 5, 6]]
    basis = nullspace(a, 3, p)
    assert len(basis) == 1
    for v in basis:
        assert mat_vec(a, v, p) == [0, 0]
    assert len(nullspace([], 4, p)) == 4


def test_charpoly_companion():
    # Companion matrix of x^2 - x - 1.
    p = 101
    a = [[0, 1], [1, 1]]
    c = charpoly(a, p)
    assert c == [(-1) % p, (-1) % p, 1]
    with pytest.raises(BadPrime):
        charpoly(identity_matrix(5), 5)


def test_charpoly_diagonal_roots():
    p = 97
    diag = [3, 3, 10]
    a = [[diag[i] if i == j else 0 for j in range(3)] for i in range(3)]
    c = charpoly(a, p)
    assert sorted(poly_roots(c, p)) == [3, 10]
    assert poly_eval(c, 3, p) == 0


def test_mat_mul_identity():
    p = 13
    a = [[1, 2], [3, 4]]
    assert mat_mul(a, identity_matrix(2), p) == a


def test_lift_root():
    r = lift_root([-2, 0, 1], 3, 7, 8)  # sqrt(2) mod 7^8
    assert r % 7 == 3
    assert (r * r - 2) % 7**8 == 0
    with pytest.raises(BadPrime):
        lift_root([0, 0, 1], 0, 7, 4)  # double root of x^2


def test_lll_recognises_cyclotomic_coordinate():
    # Recover x = (2 + 3i)/5 in Q(i) from its residue mod 13^6, where
    # i maps to a lifted square root of -1.
    p, k = 13, 6
    w = lift_root([1, 0, 1], 5, p, k)
    pk = p**k
    c = (2 + 3 * w) * pow(5, -1, pk) % pk
    basis = [[pk, 0, 0], [(-w) % pk, 1, 0], [c, 0, 1]]
    reduced = lll_reduce(basis)
    short = min(reduced, key=lambda v: sum(x * x for x in v))
    if short[2] < 0:
        short = [-x for x in short]
    assert short == [2, 3, 5]


def test_lll_handles_scaled_gcd_lattice():
    reduced = lll_reduce([[12, 0], [13, 1]])
    norms = sorted(sum(x * x for x in v) for v in reduced)
    assert norms[0] <= 2
    assert lll_reduce([[5]]) == [[5]]


def test_lll_preserves_lattice():
    basis = [[4, 1, 0], [1, 3, 1], [0, 1, 5]]
    reduced = lll_reduce(basis)
    # Same determinant up to sign => same lattice volume.
    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    assert abs(det3(reduced)) == abs(det3(basis))


def test_lll_custom_delta():
    basis = [[7, 2], [3, 9]]
    out = lll_reduce(basis, delta=Fraction(99, 100))
    assert len(out) == 2
