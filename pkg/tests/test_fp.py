import itertools

import numpy as np
import pytest

from verlie import fp
from verlie.errors import NotNilpotent


def brute_rank(m, p):
    """Independent oracle: |image| = p^rank, by enumerating all inputs."""
    m = np.asarray(m) % p
    rows, cols = m.shape
    images = {tuple((m @ np.array(x)) % p) for x in itertools.product(range(p), repeat=cols)}
    rank = 0
    while p**rank < len(images):
        rank += 1
    assert p**rank == len(images)
    return rank


def test_rank_zero_matrix():
    assert fp.rank(np.zeros((3, 3), dtype=np.int64), 3) == 0


def test_rank_identity():
    assert fp.rank(np.eye(5, dtype=np.int64), 5) == 5


def test_rank_dependent_rows_mod5():
    m = [[1, 2], [2, 4]]
    assert fp.rank(m, 5) == 1
    assert brute_rank(m, 5) == 1


def test_kernel_identity_empty():
    assert fp.kernel_basis(np.eye(4, dtype=np.int64), 3).shape == (0, 4)


def test_kernel_zero_row():
    basis = fp.kernel_basis(np.zeros((1, 3), dtype=np.int64), 3)
    assert basis.shape == (3, 3)
    assert fp.rank(basis, 3) == 3


def test_kernel_proportional_vector():
    m = np.array([[1, 1], [2, 2]])
    basis = fp.kernel_basis(m, 3)
    assert basis.shape == (1, 2)
    # exhaustive oracle over all 9 vectors of F_3^2
    kernel = [x for x in itertools.product(range(3), repeat=2) if not ((m @ np.array(x)) % 3).any()]
    assert len(kernel) == 3  # 0 and two multiples of (1, -1)
    assert tuple(basis[0]) in kernel
    assert (basis[0][0] - (-basis[0][1])) % 3 == 0  # proportional to (1, -1)


def test_solve_identity():
    b = np.array([2, 0, 4])
    assert np.array_equal(fp.solve(np.eye(3, dtype=np.int64), b, 5), b)


def test_solve_inconsistent():
    assert fp.solve(np.zeros((2, 2), dtype=np.int64), [1, 0], 3) is None


def test_solve_back_substitution():
    x = fp.solve([[1, 1], [0, 1]], [0, 1], 3)
    assert np.array_equal(x, [2, 1])


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        fp.solve(np.eye(2, dtype=np.int64), [1, 2, 3], 3)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_rank_plus_kernel_is_cols(p):
    rng = np.random.default_rng(12345 + p)
    for _ in range(25):
        rows, cols = rng.integers(1, 9, size=2)
        m = rng.integers(0, p, size=(rows, cols))
        assert fp.rank(m, p) + len(fp.kernel_basis(m, p)) == cols
        for row in fp.kernel_basis(m, p):
            assert not ((m @ row) % p).any()


@pytest.mark.parametrize("p", [3, 5])
def test_solve_contract(p):
    rng = np.random.default_rng(99 + p)
    for _ in range(40):
        rows, cols = rng.integers(1, 8, size=2)
        m = rng.integers(0, p, size=(rows, cols))
        b = rng.integers(0, p, size=rows)
        x = fp.solve(m, b, p)
        aug = np.hstack([m, b.reshape(-1, 1)])
        if x is None:
            assert fp.rank(aug, p) > fp.rank(m, p)
        else:
            assert np.array_equal((m @ x) % p, b % p)


def test_inverse_roundtrip():
    rng = np.random.default_rng(7)
    for p in (3, 5):
        while True:
            m = rng.integers(0, p, size=(6, 6))
            if fp.rank(m, p) == 6:
                break
        inv = fp.inverse(m, p)
        assert np.array_equal((m @ inv) % p, np.eye(6, dtype=np.int64))


def test_nilpotency_zero_matrix():
    assert fp.nilpotency_degree(np.zeros((4, 4), dtype=np.int64), 3) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_nilpotency_jordan_block(n):
    block = np.diag(np.ones(n - 1, dtype=np.int64), k=-1) if n > 1 else np.zeros((1, 1), dtype=np.int64)
    assert fp.nilpotency_degree(block, 5) == n


def test_nilpotency_rejects_invertible():
    with pytest.raises(NotNilpotent):
        fp.nilpotency_degree(np.eye(3, dtype=np.int64), 3)


def test_nilpotency_degree_contract():
    rng = np.random.default_rng(31)
    for _ in range(20):
        n = int(rng.integers(2, 7))
        strict = np.triu(rng.integers(0, 3, size=(n, n)), k=1)
        k = fp.nilpotency_degree(strict, 3)
        powk = np.linalg.matrix_power(strict, k) % 3
        assert not powk.any()
        if k > 1:
            assert (np.linalg.matrix_power(strict, k - 1) % 3).any()


def test_nilpotency_g2_adjoint_of_long_root_generator():
    import verlie as v

    alg = v.catalog_algebra("g2", 3)
    _, vec = v.parse_element("e2", alg)
    assert fp.nilpotency_degree(alg.ad(vec), 3) == 3


def test_rref_deterministic():
    m = np.array([[0, 2, 1], [1, 1, 1], [2, 0, 1]])
    r1, piv1 = fp.rref(m, 3)
    r2, piv2 = fp.rref(m, 3)
    assert np.array_equal(r1, r2) and piv1 == piv2
