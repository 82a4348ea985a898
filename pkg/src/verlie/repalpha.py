"""Realizing a modular Lie algebra as a module over the height-p shift
algebra and decomposing it into Jordan chains.

A Realization packages an algebra with a nilpotent derivation of degree at
most p (usually ad e for a nilpotent element e).  Chains are extracted
either generically (deterministic pivoting) or, for the boundary-node
elements in characteristic 3, in the generator-compatible form whose tagged
chains carry the Chevalley generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import fp
from .errors import DegreeExceedsP, ParseError, PreconditionViolated, UnknownGenerator
from .roots import Root, admissible_subsets, attached_node
from .superalgebra import ModularSuperAlgebra, Subspace

# -- element expressions -----------------------------------------------------


@dataclass(frozen=True)
class GenRef:
    kind: str  # 'e' | 'f' | 'h'
    index: int


@dataclass(frozen=True)
class BracketExpr:
    left: "ElementExpr"
    right: "ElementExpr"


@dataclass(frozen=True)
class ScaledExpr:
    coeff: int
    atom: "ElementExpr"


@dataclass(frozen=True)
class SumExpr:
    terms: tuple[tuple[int, "ElementExpr"], ...]  # (sign, term)


ElementExpr = GenRef | BracketExpr | ScaledExpr | SumExpr


class _Parser:
    """Grammar: expr := term (('+'|'-') term)* ; term := [int '*'] atom ;
    atom := gen | '[' expr ',' expr ']' | '(' expr ')' ; gen := ('e'|'f'|'h') int.
    Whitespace insignificant; e_1 is accepted for e1."""

    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.src[start : self.pos])

    def expr(self) -> SumExpr:
        terms = [(1, self.term())]
        while self.peek() in ("+", "-"):
            sign = 1 if self.peek() == "+" else -1
            self.pos += 1
            terms.append((sign, self.term()))
        return SumExpr(tuple(terms))

    def term(self) -> ElementExpr:
        if self.peek().isdigit():
            coeff = self.integer()
            self.take("*")
            return ScaledExpr(coeff, self.atom())
        return self.atom()

    def atom(self) -> ElementExpr:
        ch = self.peek()
        if ch == "[":
            self.take("[")
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return BracketExpr(left, right)
        if ch == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        if ch in ("e", "f", "h"):
            kind = ch
            self.pos += 1
            if self.peek() == "_":
                self.pos += 1
            return GenRef(kind, self.integer())
        self.error("expected a generator, bracket, or parenthesis")
        raise AssertionError


def evaluate_element(expr: ElementExpr, alg: ModularSuperAlgebra) -> np.ndarray:
    if isinstance(expr, GenRef):
        name = f"{expr.kind}{expr.index}"
        if not alg.gens or name not in alg.gens:
            raise UnknownGenerator(f"algebra has no generator {name}")
        return alg.gens[name].copy()
    if isinstance(expr, ScaledExpr):
        return (expr.coeff * evaluate_element(expr.atom, alg)) % alg.p
    if isinstance(expr, BracketExpr):
        return alg.bracket(evaluate_element(expr.left, alg), evaluate_element(expr.right, alg))
    if isinstance(expr, SumExpr):
        out = np.zeros(alg.dim, dtype=np.int64)
        for sign, term in expr.terms:
            out = (out + sign * evaluate_element(term, alg)) % alg.p
        return out
    raise TypeError(f"not an element expression: {expr!r}")


def parse_element(src: str, alg: ModularSuperAlgebra) -> tuple[ElementExpr, np.ndarray]:
    """Parse an element expression and evaluate it in the algebra."""
    parser = _Parser(src)
    tree = parser.expr()
    parser.skip_ws()
    if parser.pos != len(src):
        parser.error("trailing input")
    return tree, evaluate_element(tree, alg)


# -- realizations -------------------------------------------------------------


@dataclass
class Realization:
    """Algebra plus a nilpotent derivation of degree <= p."""

    algebra: ModularSuperAlgebra
    der: np.ndarray
    degree: int
    element: Optional[np.ndarray] = None

    @property
    def p(self) -> int:
        return self.algebra.p


def _degree_at_most_p(der: np.ndarray, p: int, modulus: int) -> int:
    powers = [np.eye(der.shape[0], dtype=np.int64)]
    for _ in range(p):
        powers.append(powers[-1] @ der % modulus)
        if not powers[-1].any():
            return len(powers) - 1
    fp.nilpotency_degree(der, modulus)  # raises NotNilpotent when appropriate
    raise DegreeExceedsP(f"derivation is nilpotent of degree > {p}")


def realize(alg: ModularSuperAlgebra, v) -> Realization:
    """Realize with respect to the inner derivation ad v."""
    v = fp.normalize(v, alg.p)
    der = alg.ad(v)
    degree = _degree_at_most_p(der, alg.p, alg.p)
    return Realization(algebra=alg, der=der, degree=degree, element=v)


def realize_derivation(alg: ModularSuperAlgebra, der) -> Realization:
    """Escape hatch for outer derivations, validated to satisfy the Leibniz rule."""
    der = fp.normalize(der, alg.p)
    eye = np.eye(alg.dim, dtype=np.int64)
    for i in range(alg.dim):
        adi = alg.ad_basis(i)
        lhs = (der @ adi) % alg.p
        rhs = (alg.ad((der @ eye[i]) % alg.p) + adi @ der) % alg.p
        if not np.array_equal(lhs, rhs):
            raise ValueError(f"matrix is not a derivation (fails at basis vector {i})")
    degree = _degree_at_most_p(der, alg.p, alg.p)
    return Realization(algebra=alg, der=der, degree=degree, element=None)


# -- Jordan chains ------------------------------------------------------------


@dataclass
class JordanChain:
    """v -> Dv -> ... -> D^{l-1}v, with an optional generator tag."""

    vectors: np.ndarray  # (length, dim)
    tag: tuple[str, int] | None = None

    @property
    def length(self) -> int:
        return self.vectors.shape[0]

    @property
    def head(self) -> np.ndarray:
        return self.vectors[0]

    @property
    def tail(self) -> np.ndarray:
        return self.vectors[-1]


@dataclass
class ChainDecomposition:
    chains: tuple[JordanChain, ...]
    p: int
    dim: int

    def counts(self) -> tuple[int, ...]:
        out = [0] * self.p
        for chain in self.chains:
            out[chain.length - 1] += 1
        return tuple(out)

    def basis_matrix(self) -> np.ndarray:
        """Columns are the chain vectors, chain by chain."""
        return np.hstack([chain.vectors.T for chain in self.chains])

    def chain_offsets(self) -> list[int]:
        offsets, total = [], 0
        for chain in self.chains:
            offsets.append(total)
            total += chain.length
        return offsets

    def validate(self, der: np.ndarray, modulus: int):
        total = 0
        for chain in self.chains:
            if not 1 <= chain.length <= self.p:
                raise ValueError(f"chain length {chain.length} outside 1..p")
            for t in range(chain.length - 1):
                if not np.array_equal(der @ chain.vectors[t] % modulus, chain.vectors[t + 1]):
                    raise ValueError("chain is not a D-orbit")
            if (der @ chain.vectors[-1] % modulus).any():
                raise ValueError("chain does not terminate")
            total += chain.length
        if total != self.dim:
            raise ValueError(f"chain lengths sum to {total}, dim is {self.dim}")
        if fp.rank(self.basis_matrix(), modulus) != self.dim:
            raise ValueError("chain vectors are not a basis")


def block_counts(decomp: ChainDecomposition) -> tuple[int, ...]:
    """Multiset of chain lengths as the count vector (n_1, ..., n_p)."""
    return decomp.counts()


def rank_count_vector(der: np.ndarray, p: int, modulus: int) -> tuple[int, ...]:
    """Block counts straight from ranks: n_l = r_{l-1} - 2 r_l + r_{l+1}."""
    dim = der.shape[0]
    ranks = [dim]
    power = np.eye(dim, dtype=np.int64)
    for _ in range(p + 1):
        power = power @ der % modulus
        ranks.append(fp.rank(power, modulus))
    return tuple(ranks[l - 1] - 2 * ranks[l] + ranks[l + 1] for l in range(1, p + 1))


def _chains_of(der: np.ndarray, p: int, modulus: int, dim: int) -> list[JordanChain]:
    """Deterministic chain extraction: for lengths l = p down to 1, heads are
    a complement of (ker D^{l-1} + im D) inside ker D^l, picked by echelon order."""
    if dim == 0:
        return []
    powers = [np.eye(dim, dtype=np.int64)]
    for _ in range(p):
        powers.append(powers[-1] @ der % modulus)
    kernels = [fp.kernel_basis(powers[l], modulus) for l in range(p + 1)]
    image_rows = fp.rref(der.T % modulus, modulus)[0]
    image_rows = image_rows[np.any(image_rows, axis=1)]
    chains: list[JordanChain] = []
    for length in range(p, 0, -1):
        blocked = Subspace.from_vectors(
            np.vstack([kernels[length - 1], image_rows]) if len(kernels[length - 1]) or len(image_rows) else [],
            dim,
            modulus,
        )
        picked: list[np.ndarray] = []
        for candidate in kernels[length]:
            if blocked.reduce(candidate).any():
                picked.append(candidate)
                blocked = blocked.extended([candidate])
        for head in picked:
            vectors = [head % modulus]
            for _ in range(length - 1):
                vectors.append(der @ vectors[-1] % modulus)
            chains.append(JordanChain(np.array(vectors, dtype=np.int64)))
    return chains


def jordan_decompose(realization: Realization) -> ChainDecomposition:
    """Complete chain decomposition of the derivation action."""
    alg = realization.algebra
    chains = _chains_of(realization.der, alg.p, alg.p, alg.dim)
    decomp = ChainDecomposition(tuple(chains), alg.p, alg.dim)
    decomp.validate(realization.der, alg.p)
    if decomp.counts() != rank_count_vector(realization.der, alg.p, alg.p):
        raise AssertionError("chain counts disagree with the rank formula")
    return decomp


def structured_decompose(realization: Realization, subset) -> ChainDecomposition:
    """Generator-compatible decomposition for e = sum of e_i over an
    admissible subset of boundary nodes, characteristic 3.

    Tagged chains: per subset node i with attached node j, a J_2 headed by
    e_j, a J_2 ending at f_j, and the J_3 through (f_i, h_i, -2 e_i); per
    untouched node k, singleton chains for e_k, f_k, h_k; and a singleton
    h_j - h_i per subset node.  The D-stable complement spanned by the
    remaining root vectors is decomposed generically.
    """
    alg = realization.algebra
    integral = alg.origin
    if integral is None or not hasattr(integral, "roots"):
        raise PreconditionViolated("structured decomposition needs a Chevalley-basis algebra")
    if alg.p != 3:
        raise PreconditionViolated("structured decomposition is a characteristic-3 construction")
    subset = tuple(sorted(int(i) for i in subset))
    gcm = integral.gcm
    if subset not in admissible_subsets(gcm):
        raise PreconditionViolated(f"{subset} is not an admissible subset")
    if realization.element is None:
        raise PreconditionViolated("structured decomposition needs an inner realization")
    eye = np.eye(alg.dim, dtype=np.int64)
    expected = np.zeros(alg.dim, dtype=np.int64)
    for i in subset:
        expected = (expected + eye[integral.generator_index("e", i)]) % alg.p
    if not np.array_equal(realization.element % alg.p, expected):
        raise PreconditionViolated("element must be the sum of e_i over the subset")
    der = realization.der
    attached = {i: attached_node(gcm, i) for i in subset}
    chains: list[JordanChain] = []

    def orbit(start: np.ndarray, length: int, tag) -> JordanChain:
        vectors = [start % alg.p]
        for _ in range(length - 1):
            vectors.append(der @ vectors[-1] % alg.p)
        return JordanChain(np.array(vectors, dtype=np.int64), tag=tag)

    touched_roots: set[Root] = set()
    for i in subset:
        j = attached[i]
        alpha_i, alpha_j = integral.roots.simple(i), integral.roots.simple(j)
        touched_roots.update({alpha_i, alpha_j, alpha_i + alpha_j})
        # e_j -> [e, e_j]
        chains.append(orbit(eye[integral.generator_index("e", j)], 2, ("e", j)))
        # [f, f_j] -> f_j
        ff = alg.bracket(eye[integral.generator_index("f", i)], eye[integral.generator_index("f", j)])
        chain = orbit(ff, 2, ("f", j))
        if not np.array_equal(chain.tail, eye[integral.generator_index("f", j)]):
            raise AssertionError("[f, f_j] does not map onto f_j")
        chains.append(chain)
        # f_i -> h_i -> -2 e_i
        chains.append(orbit(eye[integral.generator_index("f", i)], 3, None))
        # h_j - h_i
        hdiff = (eye[integral.generator_index("h", j)] - eye[integral.generator_index("h", i)]) % alg.p
        chains.append(JordanChain(hdiff.reshape(1, -1), tag=("h", j)))
    untouched = [k for k in range(1, gcm.n + 1) if k not in subset and k not in attached.values()]
    for k in untouched:
        chains.append(JordanChain(eye[integral.generator_index("e", k)].reshape(1, -1), tag=("e", k)))
        chains.append(JordanChain(eye[integral.generator_index("f", k)].reshape(1, -1), tag=("f", k)))
        chains.append(JordanChain(eye[integral.generator_index("h", k)].reshape(1, -1), tag=("h", k)))
    # Complement: root spaces the template leaves alone.  Every simple root
    # vector sits in a tagged chain, so only non-simple roots other than the
    # sums alpha_i + alpha_j remain.
    rest_idx = []
    for gi, gamma in enumerate(integral.roots.positive):
        if gamma.height == 1 or gamma in touched_roots:
            continue
        rest_idx.extend([gi, integral.npos + gi])
    rest_idx = sorted(rest_idx)
    sub_der = der[np.ix_(rest_idx, rest_idx)]
    outside = [r for r in range(alg.dim) if r not in set(rest_idx)]
    if der[np.ix_(outside, rest_idx)].any():
        raise AssertionError("complement is not D-stable")
    for chain in _chains_of(sub_der, alg.p, alg.p, len(rest_idx)):
        vectors = np.zeros((chain.length, alg.dim), dtype=np.int64)
        vectors[:, rest_idx] = chain.vectors
        chains.append(JordanChain(vectors))
    decomp = ChainDecomposition(tuple(chains), alg.p, alg.dim)
    decomp.validate(der, alg.p)
    return decomp
