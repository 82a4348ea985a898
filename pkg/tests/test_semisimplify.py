import numpy as np
import pytest

import verlie as v
from verlie import fp
from verlie.repalpha import ChainDecomposition, JordanChain
from verlie.semisimplify import clebsch_gordan, pairing_vector, prop32_reference, semisimplify
from verlie.superalgebra import center, derived_subalgebra, superdim


def brute_clebsch_gordan(m, n, p):
    """Independent oracle: Jordan block counts of the shift action on
    J_m (x) J_n by the rank formula, with the length-p blocks deleted."""
    dim = m * n
    jm = np.diag(np.ones(m - 1, dtype=np.int64), k=-1) if m > 1 else np.zeros((1, 1), dtype=np.int64)
    jn = np.diag(np.ones(n - 1, dtype=np.int64), k=-1) if n > 1 else np.zeros((1, 1), dtype=np.int64)
    t = (np.kron(jm, np.eye(n, dtype=np.int64)) + np.kron(np.eye(m, dtype=np.int64), jn)) % p
    ranks = [dim]
    power = np.eye(dim, dtype=np.int64)
    for _ in range(p + 1):
        power = power @ t % p
        ranks.append(fp.rank(power, p))
    out = []
    for length in range(1, p):
        count = ranks[length - 1] - 2 * ranks[length] + ranks[length + 1]
        out.extend([length] * count)
    return tuple(sorted(out))


def test_clebsch_gordan_top_pair_p3():
    assert clebsch_gordan(2, 2, 3) == (1,)


def test_clebsch_gordan_unit():
    for p in (3, 5, 7):
        for k in range(1, p):
            assert clebsch_gordan(1, k, p) == (k,)


def test_clebsch_gordan_2_3_mod5():
    assert clebsch_gordan(2, 3, 5) == (2, 4)
    assert brute_clebsch_gordan(2, 3, 5) == (2, 4)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_clebsch_gordan_brute_force(p):
    for m in range(1, p):
        for n in range(1, p):
            assert tuple(sorted(clebsch_gordan(m, n, p))) == brute_clebsch_gordan(m, n, p)


def paper_gl3_chains():
    def E(i, j):
        vec = np.zeros(9, dtype=np.int64)
        vec[(i - 1) * 3 + (j - 1)] = 1
        return vec

    return (
        JordanChain(np.array([E(1, 1)])),
        JordanChain(np.array([(E(1, 1) + E(2, 2) + E(3, 3)) % 3])),
        JordanChain(np.array([E(1, 2), (-E(1, 3)) % 3])),
        JordanChain(np.array([E(3, 1), E(2, 1)])),
        JordanChain(np.array([E(3, 2), (E(2, 2) - E(3, 3)) % 3, E(2, 3)])),
    )


@pytest.fixture(scope="module")
def gl3_setup():
    alg = v.gl(3, 3)
    _, vec = v.parse_element("e2", alg)  # the (2,3) elementary matrix
    realization = v.realize(alg, vec)
    decomp = ChainDecomposition(paper_gl3_chains(), 3, 9)
    decomp.validate(realization.der, 3)
    return realization, decomp


def test_pairing_vector_gl3(gl3_setup):
    realization, decomp = gl3_setup
    out = pairing_vector(realization, decomp.chains[2], decomp.chains[3])
    expected = np.zeros(9, dtype=np.int64)
    expected[0] = expected[4] = expected[8] = 1  # identity matrix
    assert np.array_equal(out, expected)


def test_pairing_vector_symmetric(gl3_setup):
    realization, decomp = gl3_setup
    a = pairing_vector(realization, decomp.chains[2], decomp.chains[3])
    b = pairing_vector(realization, decomp.chains[3], decomp.chains[2])
    assert np.array_equal(a, b)


def test_pairing_vector_against_central_chain():
    alg, der = v.free_nilpotent_example(3)
    realization = v.realize_derivation(alg, der)
    decomp = v.jordan_decompose(realization)
    chains = [c for c in decomp.chains if c.length == 2]
    central = [c for c in chains if not alg.ad(c.vectors[0]).any() and not alg.ad(c.vectors[1]).any()]
    assert central  # the chain through [x,[x,y]] is central
    for other in chains:
        assert not pairing_vector(realization, central[0], other).any()


def test_gl3_exact_constants(gl3_setup):
    realization, decomp = gl3_setup
    ss = semisimplify(realization, decomp)
    assert superdim(ss.algebra) == (2, 2)
    c = ss.algebra.constants
    assert c.get((0, 1), {}) == {}  # [y1, y2] = 0
    assert c[(0, 2)] == {2: 1}  # [y1, y3] = y3
    assert c[(0, 3)] == {3: 2}  # [y1, y4] = -y4
    assert c[(2, 3)] == {1: 1}  # [y3, y4] = y2


def test_gl3_oracle_equality(gl3_setup):
    realization, decomp = gl3_setup
    ss = semisimplify(realization, decomp)
    ref = prop32_reference(realization, decomp)
    assert ref.constants == ss.algebra.constants
    assert np.array_equal(ref.parity, ss.algebra.parity)


def test_gl3_generic_chain_invariants(gl3_setup):
    realization, _ = gl3_setup
    generic = v.jordan_decompose(realization)
    ss = semisimplify(realization, generic)
    assert superdim(ss.algebra) == (2, 2)
    assert center(ss.algebra).dim == 1
    assert derived_subalgebra(ss.algebra).dim == 3
    assert prop32_reference(realization, generic).constants == ss.algebra.constants


def test_superdim_always_n1_np1():
    alg = v.catalog_algebra("g2", 3)
    _, vec = v.parse_element("e2", alg)
    realization = v.realize(alg, vec)
    decomp = v.jordan_decompose(realization)
    ss = semisimplify(realization, decomp)
    counts = decomp.counts()
    assert superdim(ss.algebra) == (counts[0], counts[1])
    assert superdim(ss.algebra) == (3, 4)


def test_image_projection():
    alg = v.catalog_algebra("g2", 3)
    _, vec = v.parse_element("e2", alg)
    realization = v.realize(alg, vec)
    decomp = v.jordan_decompose(realization)
    ss = semisimplify(realization, decomp)
    eye_out = np.eye(ss.algebra.dim, dtype=np.int64)
    for chain_index in ss.even_chains + ss.odd_chains:
        head = decomp.chains[chain_index].head
        assert np.array_equal(ss.image(head), eye_out[ss.basis_index_of_chain(chain_index)])
    # tails of odd chains and every vector of a dead chain project to zero
    for chain_index in ss.odd_chains:
        assert not ss.image(decomp.chains[chain_index].tail).any()
    for chain_index, chain in enumerate(decomp.chains):
        if chain.length == 3:
            for t in range(3):
                assert not ss.image(chain.vectors[t]).any()


def test_functoriality_structured_vs_generic():
    from verlie.verify import certify, functorial_generator_images, tilde_target

    alg = v.catalog_algebra("f4", 3)
    _, vec = v.parse_element("e4", alg)
    realization = v.realize(alg, vec)
    a = semisimplify(realization, v.structured_decompose(realization, (4,)))
    b = semisimplify(realization, v.jordan_decompose(realization))
    assert superdim(a.algebra) == superdim(b.algebra)
    assert center(a.algebra).dim == center(b.algebra).dim
    da, db = derived_subalgebra(a.algebra), derived_subalgebra(b.algebra)
    assert da.dim == db.dim
    # certificate outcomes agree: the functorial generator images certify the
    # same target through either decomposition
    for ss in (a, b):
        gens = functorial_generator_images(ss, (4,))
        cert = certify(ss, gens, tilde_target("g(1,6)", ss, (4,)))
        assert cert.conclusion == "Verified"
    # on the structured path the functorial images coincide with the tagged ones
    tagged = v.generator_images(a, (4,))
    functorial = functorial_generator_images(a, (4,))
    for x, y in zip(tagged.all_vectors(), functorial.all_vectors()):
        assert np.array_equal(x, y)


def test_e8_mod5_superdim():
    alg = v.catalog_algebra("e8", 5)
    _, vec = v.parse_element("e2+e3+e4", alg)
    realization = v.realize(alg, vec)
    decomp = v.jordan_decompose(realization)
    ss = semisimplify(realization, decomp)
    assert superdim(ss.algebra) == (55, 32)


def test_prop32_rejects_p5():
    alg = v.catalog_algebra("e8", 5)
    _, vec = v.parse_element("e2+e3+e4", alg)
    realization = v.realize(alg, vec)
    with pytest.raises(ValueError):
        prop32_reference(realization, v.jordan_decompose(realization))
