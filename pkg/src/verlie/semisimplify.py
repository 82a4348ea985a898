"""Semisimplification of a chain-decomposed realization, projected onto the
supervector-space subcategory.

Length-1 chains survive as even basis vectors, length-(p-1) chains as odd
ones; everything else dies (length p has categorical dimension zero, the
intermediate lengths fall outside the subcategory).  Structure constants
follow the head-coefficient rules; the odd-odd component uses the
alternating splitting vector sum_{a=1}^{p-1} (-1)^a v_a (x) w_{p-a}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fp
from .errors import JacobiViolation, MissingTags
from .repalpha import ChainDecomposition, JordanChain, Realization
from .superalgebra import (
    ModularSuperAlgebra,
    check_super_jacobi,
    check_super_skew,
    make_constants,
)


def clebsch_gordan(m: int, n: int, p: int) -> tuple[int, ...]:
    """Simple factors of L_m (x) L_n: {|m-n| + 2i - 1 : 1 <= i <= min(m, n, p-m, p-n)}."""
    if not (1 <= m <= p - 1 and 1 <= n <= p - 1):
        raise ValueError("labels must lie in 1..p-1")
    top = min(m, n, p - m, p - n)
    return tuple(abs(m - n) + 2 * i - 1 for i in range(1, top + 1))


def pairing_vector(realization: Realization, ci: JordanChain, cj: JordanChain) -> np.ndarray:
    """sum_{a=1}^{p-1} (-1)^a [ci[a], cj[p-a]], computed in the realized algebra."""
    alg = realization.algebra
    p = alg.p
    if ci.length != p - 1 or cj.length != p - 1:
        raise ValueError("pairing needs two chains of length p-1")
    out = np.zeros(alg.dim, dtype=np.int64)
    for a in range(1, p):
        sign = -1 if a % 2 else 1
        out = (out + sign * alg.bracket(ci.vectors[a - 1], cj.vectors[p - a - 1])) % p
    return out


@dataclass
class SemisimplifiedAlgebra:
    """Output superalgebra with provenance back to the input chains.

    Basis order: one even vector per length-1 chain, then one odd vector per
    length-(p-1) chain, both in decomposition order.
    """

    algebra: ModularSuperAlgebra
    realization: Realization
    decomposition: ChainDecomposition
    even_chains: tuple[int, ...]
    odd_chains: tuple[int, ...]
    _binv: np.ndarray = field(repr=False)

    @property
    def p(self) -> int:
        return self.algebra.p

    def superdim(self) -> tuple[int, int]:
        return len(self.even_chains), len(self.odd_chains)

    def image(self, v) -> np.ndarray:
        """Functorial image of a vector: expansion coefficients at the
        length-1 vectors and at the heads of length-(p-1) chains."""
        coords = (self._binv @ fp.normalize(v, self.p)) % self.p
        offsets = self.decomposition.chain_offsets()
        out = np.zeros(self.algebra.dim, dtype=np.int64)
        for a, c in enumerate(self.even_chains):
            out[a] = coords[offsets[c]]
        base = len(self.even_chains)
        for b, c in enumerate(self.odd_chains):
            out[base + b] = coords[offsets[c]]
        return out

    def basis_index_of_chain(self, chain_index: int) -> int:
        if chain_index in self.even_chains:
            return self.even_chains.index(chain_index)
        if chain_index in self.odd_chains:
            return len(self.even_chains) + self.odd_chains.index(chain_index)
        raise KeyError(f"chain {chain_index} does not survive")

    def tagged_basis(self) -> dict[tuple[str, int], int]:
        """Map (generator kind, node) -> output basis index, from chain tags."""
        out = {}
        for ci, chain in enumerate(self.decomposition.chains):
            if chain.tag is not None and chain.length in (1, self.p - 1):
                out[chain.tag] = self.basis_index_of_chain(ci)
        if not out:
            raise MissingTags("decomposition carries no generator tags")
        return out

    def provenance(self) -> list[dict]:
        rows = []
        for a, c in enumerate(self.even_chains):
            rows.append({"index": a, "parity": 0, "chain": c,
                         "vectors": self.decomposition.chains[c].vectors.tolist()})
        for b, c in enumerate(self.odd_chains):
            rows.append({"index": len(self.even_chains) + b, "parity": 1, "chain": c,
                         "vectors": self.decomposition.chains[c].vectors.tolist()})
        return rows

    def to_json_dict(self) -> dict:
        data = self.algebra.to_json_dict()
        data["provenance"] = self.provenance()
        return data


def _chain_labels(decomp: ChainDecomposition, chain_index: int) -> str:
    chain = decomp.chains[chain_index]
    if chain.tag is not None:
        kind, node = chain.tag
        return f"{kind}{node}~"
    return f"chain{chain_index}"


def semisimplify(realization: Realization, decomp: ChainDecomposition) -> SemisimplifiedAlgebra:
    """Apply the semisimplification functor and project onto supervector spaces.

    Raises JacobiViolation if the projected bracket fails super skew or super
    Jacobi; that signals a broken decomposition, not a recoverable state.
    """
    alg = realization.algebra
    p = alg.p
    decomp.validate(realization.der, p)
    even = tuple(i for i, c in enumerate(decomp.chains) if c.length == 1)
    odd = tuple(i for i, c in enumerate(decomp.chains) if c.length == p - 1)
    basis_matrix = decomp.basis_matrix()
    binv = fp.inverse(basis_matrix, p)
    offsets = decomp.chain_offsets()
    even_rows = [offsets[c] for c in even]
    odd_rows = [offsets[c] for c in odd]
    m_even, m_odd = len(even), len(odd)
    m = m_even + m_odd
    heads = np.zeros((alg.dim, m), dtype=np.int64)
    for a, c in enumerate(even):
        heads[:, a] = decomp.chains[c].head
    for b, c in enumerate(odd):
        heads[:, m_even + b] = decomp.chains[c].head

    entries: list[tuple[int, int, int, int]] = []
    for a in range(m):
        a_odd = a >= m_even
        brackets = alg.ad(heads[:, a]) @ heads % p
        coords = binv @ brackets % p
        if not a_odd:
            even_part = coords[even_rows]  # (m_even, m) coefficient rows
            odd_part = coords[odd_rows]
            for b in range(m):
                if b < m_even:
                    for k in np.nonzero(even_part[:, b])[0]:
                        entries.append((a, b, int(k), int(even_part[k, b])))
                else:
                    for k in np.nonzero(odd_part[:, b])[0]:
                        entries.append((a, b, m_even + int(k), int(odd_part[k, b])))
        else:
            odd_part = coords[odd_rows]
            for b in range(m_even):
                for k in np.nonzero(odd_part[:, b])[0]:
                    entries.append((a, b, m_even + int(k), int(odd_part[k, b])))
    # odd-odd components through the splitting vector
    if m_odd:
        layers = []  # layers[s] = matrix of the (s+1)-th vectors of the odd chains
        for s in range(p - 1):
            layer = np.zeros((alg.dim, m_odd), dtype=np.int64)
            for b, c in enumerate(odd):
                layer[:, b] = decomp.chains[c].vectors[s]
            layers.append(layer)
        for a, ca in enumerate(odd):
            pair = np.zeros((alg.dim, m_odd), dtype=np.int64)
            for t in range(1, p):
                sign = -1 if t % 2 else 1
                pair = (pair + sign * (alg.ad(decomp.chains[ca].vectors[t - 1]) @ layers[p - t - 1])) % p
            coords = binv @ pair % p
            even_part = coords[even_rows]
            for b in range(m_odd):
                for k in np.nonzero(even_part[:, b])[0]:
                    entries.append((m_even + a, m_even + b, int(k), int(even_part[k, b])))

    parity = np.array([0] * m_even + [1] * m_odd, dtype=np.int64)
    labels = [_chain_labels(decomp, c) for c in even] + [_chain_labels(decomp, c) for c in odd]
    out = ModularSuperAlgebra(p=p, dim=m, parity=parity,
                              constants=make_constants(entries, p), labels=labels)
    skew = check_super_skew(out)
    if not skew.ok:
        raise JacobiViolation(f"projected bracket is not super skew at {skew.witness}")
    jac = check_super_jacobi(out)
    if not jac.ok:
        raise JacobiViolation(f"projected bracket fails super Jacobi at {jac.witness}")
    return SemisimplifiedAlgebra(
        algebra=out,
        realization=realization,
        decomposition=decomp,
        even_chains=even,
        odd_chains=odd,
        _binv=binv,
    )


def prop32_reference(realization: Realization, decomp: ChainDecomposition) -> ModularSuperAlgebra:
    """Literal three-case transcription of the characteristic-3 structure
    constants, kept as an independent oracle for semisimplify.

    Even y's come from the length-1 chains (their vectors x_i), odd y's from
    the length-2 chains (x_i the head, x_i' the tail); the coefficient of
    x_k means the expansion coordinate at that chain position over the full
    chain basis.
    """
    alg = realization.algebra
    p = alg.p
    if p != 3:
        raise ValueError("the reference formula is specific to characteristic 3")
    decomp.validate(realization.der, p)
    even = [i for i, c in enumerate(decomp.chains) if c.length == 1]
    odd = [i for i, c in enumerate(decomp.chains) if c.length == 2]
    offsets = decomp.chain_offsets()
    binv = fp.inverse(decomp.basis_matrix(), p)
    n1, n2 = len(even), len(odd)
    order = even + odd
    coord_rows = [offsets[c] for c in order]  # where the coefficient of x_k sits
    xmat = np.stack([decomp.chains[c].vectors[0] for c in order], axis=1)
    xpmat = (
        np.stack([decomp.chains[c].vectors[1] for c in odd], axis=1)
        if n2
        else np.zeros((alg.dim, 0), dtype=np.int64)
    )
    entries = []
    for a, ca in enumerate(order):
        ad_xa = alg.ad(decomp.chains[ca].vectors[0])
        plain = binv @ (ad_xa @ xmat) % p  # coords of [x_a, x_b], all b
        if a >= n1:
            ad_xpa = alg.ad(decomp.chains[ca].vectors[1])
            mixed = binv @ ((-(ad_xa @ xpmat) + ad_xpa @ xmat[:, n1:]) % p) % p
        for b in range(n1 + n2):
            a_even, b_even = a < n1, b < n1
            if a_even and b_even:
                coords, targets = plain[:, b], range(n1)
            elif a_even != b_even:
                coords, targets = plain[:, b], range(n1, n1 + n2)
            else:
                # coefficient of x_k in -[x_a, x_b'] + [x_a', x_b]
                coords, targets = mixed[:, b - n1], range(n1)
            for k in targets:
                entries.append((a, b, k, int(coords[coord_rows[k]])))
    parity = np.array([0] * n1 + [1] * n2, dtype=np.int64)
    return ModularSuperAlgebra(p=p, dim=n1 + n2, parity=parity,
                               constants=make_constants(entries, p),
                               labels=[_chain_labels(decomp, c) for c in order])
