#!/usr/bin/env python3
"""
Brute-force superpolynomials in N noncommuting x's and N anticommuting θ's.

Every monomial is kept in the normal form q θ_{a1}...θ_{ar} x_{b1}...x_{bs}
with a1 < ... < ar. The θ's commute with the x's, anticommute among
themselves and square to zero; nothing else is rewritten.

The expansions here are computed straight from the defining index
conditions of each basis, so they serve as ground truth for the symbolic
algebra.
"""

import logging
from collections import defaultdict
from itertools import permutations, product as cartesian
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from . import combinat as sc
from .bases import Basis
from .combinat import Supercomposition
from .errors import BasisError, InvalidIndexError
from .rational import format_rational, qq

logger = logging.getLogger(__name__)


class SuperMonomial(NamedTuple):
    """θ word (strictly increasing) followed by an x word (any order)"""

    theta: Tuple[int, ...]
    x: Tuple[int, ...]

    def __str__(self) -> str:
        letters = [f"t{a}" for a in self.theta] + [f"x{b}" for b in self.x]
        return " ".join(letters)


def normalize(theta_word: Sequence[int], x_word: Sequence[int], coeff=1) -> Optional[Tuple[SuperMonomial, object]]:
    """Sort the θ word picking up the sign of the sort; None when a θ repeats"""
    if len(set(theta_word)) != len(theta_word):
        return None
    coeff = qq(coeff)
    if sc.inversions(theta_word) % 2:
        coeff = -coeff
    return SuperMonomial(tuple(sorted(theta_word)), tuple(x_word)), coeff


def null_symmetric(monomial: SuperMonomial) -> bool:
    """Two θ indices absent from the x word"""
    free = [a for a in monomial.theta if a not in monomial.x]
    return len(free) >= 2


class OraclePolynomial:
    """A finite sum of super monomials over N variables"""

    def __init__(self, num_vars: int, terms: Optional[Dict[SuperMonomial, object]] = None):
        if num_vars < 1:
            raise ValueError(f"need at least one variable, got {num_vars}")
        self.num_vars = num_vars
        self.terms: Dict[SuperMonomial, object] = {}
        for monomial, coeff in (terms or {}).items():
            if max(monomial.theta + monomial.x, default=0) > num_vars:
                raise InvalidIndexError(f"monomial {monomial} uses more than {num_vars} variables")
            if coeff:
                self.terms[monomial] = qq(coeff)

    @classmethod
    def from_words(cls, num_vars: int,
                   words: Iterable[Tuple[Sequence[int], Sequence[int], object]]) -> "OraclePolynomial":
        acc: Dict[SuperMonomial, object] = defaultdict(lambda: QQ.zero)
        for theta_word, x_word, coeff in words:
            term = normalize(theta_word, x_word, coeff)
            if term is not None:
                acc[term[0]] += term[1]
        return cls(num_vars, acc)

    @classmethod
    def monomial(cls, num_vars: int, theta_word: Sequence[int], x_word: Sequence[int],
                 coeff=1) -> "OraclePolynomial":
        return cls.from_words(num_vars, [(theta_word, x_word, coeff)])

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: SuperMonomial):
        return self.terms.get(monomial, QQ.zero)

    def _check(self, other: "OraclePolynomial"):
        if other.num_vars != self.num_vars:
            raise ValueError(f"variable counts differ: {self.num_vars} and {other.num_vars}")

    def __add__(self, other: "OraclePolynomial") -> "OraclePolynomial":
        self._check(other)
        acc = dict(self.terms)
        for monomial, coeff in other.terms.items():
            acc[monomial] = acc.get(monomial, QQ.zero) + coeff
        return OraclePolynomial(self.num_vars, acc)

    def __neg__(self) -> "OraclePolynomial":
        return self.scale(-1)

    def __sub__(self, other: "OraclePolynomial") -> "OraclePolynomial":
        return self + (-other)

    def scale(self, factor) -> "OraclePolynomial":
        factor = qq(factor)
        return OraclePolynomial(self.num_vars, {k: v * factor for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, OraclePolynomial):
            return self.scale(other)
        self._check(other)
        words = []
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                words.append((left.theta + right.theta, left.x + right.x, a * b))
        return OraclePolynomial.from_words(self.num_vars, words)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OraclePolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    __hash__ = None

    def act(self, s: Sequence[int]) -> "OraclePolynomial":
        """Diagonal action: s[i-1] is the image of index i on both alphabets"""
        if sorted(s) != list(range(1, self.num_vars + 1)):
            raise InvalidIndexError(f"{tuple(s)} is not a permutation of 1..{self.num_vars}")
        words = [(tuple(s[a - 1] for a in mono.theta), tuple(s[b - 1] for b in mono.x), coeff)
                 for mono, coeff in self.terms.items()]
        return OraclePolynomial.from_words(self.num_vars, words)

    def is_symmetric(self) -> bool:
        for i in range(1, self.num_vars):
            s = list(range(1, self.num_vars + 1))
            s[i - 1], s[i] = s[i], s[i - 1]
            if self.act(s) != self:
                return False
        return True

    def items(self) -> List[Tuple[SuperMonomial, object]]:
        return sorted(self.terms.items())

    def lines(self) -> List[str]:
        result = []
        for monomial, coeff in self.items():
            word = str(monomial)
            result.append(f"{format_rational(coeff)} * {word}" if word else format_rational(coeff))
        return result

    def __str__(self) -> str:
        return "\n".join(self.lines()) if self.terms else "0"

    def __repr__(self) -> str:
        return f"OraclePolynomial(N={self.num_vars}, {len(self.terms)} terms)"


# ---------------------------------------------------------------- basis expansions

def _word(K: Supercomposition, values: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Monomial of an assignment of one value per block of K"""
    x = [0] * K.degree
    for block, value in zip(K.blocks, values):
        for j in sc.positive_part(block):
            x[j - 1] = value
    return tuple(values[:K.fermionic_degree]), tuple(x)


def _block_words(K: Supercomposition, N: int, injective: bool) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    if injective:
        assignments = permutations(range(1, N + 1), len(K))
    else:
        assignments = cartesian(range(1, N + 1), repeat=len(K))
    for values in assignments:
        yield _word(K, values)


def _elementary_words(K: Supercomposition, N: int):
    """Values pairwise distinct inside each block, θ index counted as element 0"""
    per_block = [permutations(range(1, N + 1), len(block)) for block in K.blocks]
    for choice in cartesian(*per_block):
        theta = []
        x = [0] * K.degree
        for block, values in zip(K.blocks, choice):
            for element, value in zip(block, values):
                if element == 0:
                    theta.append(value)
                else:
                    x[element - 1] = value
        yield tuple(theta), tuple(x)


def word_supercomposition(theta: Sequence[int], x: Sequence[int]) -> Optional[Supercomposition]:
    """Set supercomposition recording which letters of a word share an index"""
    by_value: Dict[int, List[int]] = defaultdict(list)
    for j, value in enumerate(x, start=1):
        by_value[value].append(j)
    fermionic = [(0,) + tuple(by_value.pop(a, ())) for a in theta]
    if sum(1 for block in fermionic if len(block) == 1) >= 2:
        return None
    bosonic = sorted(tuple(block) for block in by_value.values())
    return Supercomposition(tuple(fermionic) + tuple(bosonic))


def _complete_words(K: Supercomposition, N: int):
    n, m = K.bidegree
    for theta in permutations(range(1, N + 1), m):
        for x in cartesian(range(1, N + 1), repeat=n):
            L = word_supercomposition(theta, x)
            if L is None:
                continue
            yield theta, x, sc.factorial(sc.meet(K, L))


def expand_basis(tag, K: Supercomposition, N: int) -> OraclePolynomial:
    """b_K written out over N variables"""
    basis = Basis.parse(tag)
    if N < 1:
        raise ValueError(f"need at least one variable, got {N}")
    if basis == Basis.M:
        words = ((theta, x, 1) for theta, x in _block_words(K, N, injective=True))
    elif basis == Basis.P:
        words = ((theta, x, 1) for theta, x in _block_words(K, N, injective=False))
    elif basis == Basis.E:
        words = ((theta, x, 1) for theta, x in _elementary_words(K, N))
    elif basis == Basis.H:
        words = _complete_words(K, N)
    else:
        raise BasisError(f"no direct expansion for the {basis.value} family")
    result = OraclePolynomial.from_words(N, words)
    logger.debug("Expanded %s_%s over %d variables: %d terms", basis.value, K, N, len(result.terms))
    return result


def expand_element(el, N: int) -> OraclePolynomial:
    """Expand a symbolic element term by term"""
    total = OraclePolynomial(N)
    for index, coeff in el.terms.items():
        total = total + expand_basis(el.basis, index, N).scale(coeff)
    return total


def standard_word(I: Supercomposition) -> SuperMonomial:
    """θ_1...θ_m x_{c(1)}...x_{c(n)} where block number c(j), counted from 1, holds j"""
    x = [0] * I.degree
    for position, block in enumerate(I.blocks, start=1):
        for j in sc.positive_part(block):
            x[j - 1] = position
    return SuperMonomial(tuple(range(1, I.fermionic_degree + 1)), tuple(x))


def monomial_coefficients(f: OraclePolynomial, n: int, m: int):
    """Read the m-basis expansion of a symmetric polynomial of bidegree (n, m)"""
    from .algebra import SymbolicElement

    terms = {}
    for I in sc.set_superpartitions(n, m):
        if len(I) > f.num_vars:
            raise ValueError(f"{f.num_vars} variables cannot separate the blocks of {I}")
        terms[I] = f.coefficient(standard_word(I))
    return SymbolicElement(Basis.M, terms)
