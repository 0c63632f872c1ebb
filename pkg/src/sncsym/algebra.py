#!/usr/bin/env python3
"""
Symmetric functions in noncommuting variables in superspace.

Elements are finite rational combinations of basis symbols m_I, p_I, e_I,
h_I indexed by set superpartitions. Any formula that produces a partial set
supercomposition index is folded back through bar() with its sign; trivial
indices (two {0} blocks) contribute nothing.
"""

import logging
import threading
from collections import defaultdict
from functools import lru_cache
from itertools import permutations
from math import comb, factorial as _factorial
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from . import combinat as sc
from .bases import Basis, CLASSICAL
from .combinat import Supercomposition
from .errors import BasisError, BidegreeError
from .rational import format_rational, qq
from .superpartition import Superpartition

logger = logging.getLogger(__name__)

Scalar = Union[int, object]


def index_key(index: Supercomposition):
    return index.degree, index.fermionic_degree, index.blocks


def format_terms(symbol: str, items: Iterable[Tuple[object, object]]) -> str:
    pieces = []
    for index, coeff in items:
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        body = f"{symbol}[{index}]"
        if magnitude != 1:
            body = f"{format_rational(magnitude)}*{body}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"


class SymbolicElement:
    """An element of sNCSym written in one classical basis"""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms: Optional[Dict[Supercomposition, object]] = None):
        self.basis = Basis.parse(basis)
        if not self.basis.classical:
            raise BasisError(f"elements are stored in m, p, e or h, not {self.basis.value}")
        self.terms: Dict[Supercomposition, object] = {}
        for index, coeff in (terms or {}).items():
            coeff = qq(coeff)
            if coeff:
                self.terms[index] = coeff

    @classmethod
    def zero(cls, basis) -> "SymbolicElement":
        return cls(basis)

    @classmethod
    def of(cls, basis, index: Supercomposition, coeff: Scalar = 1) -> "SymbolicElement":
        """b_K for any partial set supercomposition K, folded to canonical form"""
        return cls.from_pairs(basis, [(index, coeff)])

    @classmethod
    def from_pairs(cls, basis, pairs: Iterable[Tuple[Supercomposition, Scalar]]) -> "SymbolicElement":
        acc: Dict[Supercomposition, object] = defaultdict(lambda: QQ.zero)
        for index, coeff in pairs:
            term = sc.canonical_term(index)
            if term is None:
                continue
            sign, canonical = term
            acc[canonical] += qq(coeff) * sign
        return cls(basis, acc)

    def items(self) -> List[Tuple[Supercomposition, object]]:
        return sorted(self.terms.items(), key=lambda item: index_key(item[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> set:
        return {index.bidegree for index in self.terms}

    def coefficient(self, index: Supercomposition):
        return self.terms.get(index, QQ.zero)

    def _combine(self, other: "SymbolicElement", factor) -> "SymbolicElement":
        if other.basis != self.basis:
            other = convert(other, self.basis)
        acc = dict(self.terms)
        for index, coeff in other.terms.items():
            acc[index] = acc.get(index, QQ.zero) + factor * coeff
        return SymbolicElement(self.basis, acc)

    def __add__(self, other: "SymbolicElement") -> "SymbolicElement":
        return self._combine(other, QQ.one)

    def __sub__(self, other: "SymbolicElement") -> "SymbolicElement":
        return self._combine(other, -QQ.one)

    def __neg__(self) -> "SymbolicElement":
        return self.scale(-1)

    def scale(self, factor: Scalar) -> "SymbolicElement":
        factor = qq(factor)
        return SymbolicElement(self.basis, {i: c * factor for i, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymbolicElement):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolicElement):
            return NotImplemented
        if other.basis == self.basis:
            return self.terms == other.terms
        return to_monomial(self).terms == to_monomial(other).terms

    __hash__ = None

    def __str__(self) -> str:
        return format_terms(self.basis.value, self.items())

    def __repr__(self) -> str:
        return f"SymbolicElement({self})"


# ---------------------------------------------------------------- expansions in m

@lru_cache(maxsize=None)
def _power_sum_in_monomials(I: Supercomposition) -> Tuple[Tuple[Supercomposition, object], ...]:
    """p_I = sum of m_L over the strong coarsenings L of I"""
    return tuple(SymbolicElement.from_pairs(
        Basis.M, ((L, 1) for L in sc.strong_coarsenings(I))).terms.items())


def _meet_sum(I: Supercomposition, weight) -> Tuple[Tuple[Supercomposition, object], ...]:
    """sum over J and sigma of (-1)^inv(sigma) weight(I meet sigma|>J) m_J"""
    n, m = I.bidegree
    acc: Dict[Supercomposition, object] = defaultdict(lambda: QQ.zero)
    for J in sc.set_superpartitions(n, m):
        for sigma in permutations(range(1, m + 1)):
            value = weight(sc.meet(I, sc.act_fermionic(sigma, J)))
            if value:
                acc[J] += -value if sc.inversions(sigma) % 2 else value
    return tuple(SymbolicElement(Basis.M, acc).terms.items())


@lru_cache(maxsize=None)
def _elementary_in_monomials(I: Supercomposition):
    bottom = sc.zero(*I.bidegree)
    return _meet_sum(I, lambda N: 1 if N == bottom else 0)


@lru_cache(maxsize=None)
def _complete_in_monomials(I: Supercomposition):
    return _meet_sum(I, sc.factorial)


_TO_MONOMIAL = {
    Basis.P: _power_sum_in_monomials,
    Basis.E: _elementary_in_monomials,
    Basis.H: _complete_in_monomials,
}


def to_monomial(el: SymbolicElement) -> SymbolicElement:
    """Expand any classical element in the monomial basis"""
    if el.basis == Basis.M:
        return el
    expand = _TO_MONOMIAL[el.basis]
    acc: Dict[Supercomposition, object] = defaultdict(lambda: QQ.zero)
    for index, coeff in el.terms.items():
        for J, c in expand(index):
            acc[J] += coeff * c
    return SymbolicElement(Basis.M, acc)


# ---------------------------------------------------------------- Mobius inversions

@lru_cache(maxsize=None)
def _monomial_in(target: Basis, I: Supercomposition) -> Tuple[Tuple[Supercomposition, object], ...]:
    pairs = []
    if target == Basis.P:
        for K in sc.strong_coarsenings(I):
            pairs.append((K, sc.mobius(I, K)))
    else:
        for L in sc.strong_coarsenings(I):
            weight = sc.mobius_zero(L)
            if target == Basis.H:
                weight = abs(weight)
            outer = QQ(sc.mobius(I, L), weight)
            for K in sc.strong_refinements(L):
                pairs.append((K, outer * sc.mobius(K, L)))
    return tuple(SymbolicElement.from_pairs(target, pairs).terms.items())


def from_monomial(el: SymbolicElement, target) -> SymbolicElement:
    """Rewrite an m-basis element in p, e or h"""
    target = Basis.parse(target)
    if el.basis != Basis.M:
        raise BasisError(f"from_monomial expects an m-basis element, got {el.basis.value}")
    if target == Basis.M:
        return el
    if target not in CLASSICAL:
        raise BasisError(f"cannot expand in {target.value}")
    acc: Dict[Supercomposition, object] = defaultdict(lambda: QQ.zero)
    for index, coeff in el.terms.items():
        for K, c in _monomial_in(target, index):
            acc[K] += coeff * c
    return SymbolicElement(target, acc)


@lru_cache(maxsize=None)
def _direct(source: Basis, target: Basis, I: Supercomposition):
    pairs = []
    if target == Basis.P:
        # e and h over the refinements of I
        for K in sc.strong_refinements(I):
            weight = sc.mobius_zero(K)
            pairs.append((K, weight if source == Basis.E else abs(weight)))
    elif source == Basis.P:
        weight = sc.mobius_zero(I)
        if target == Basis.H:
            weight = abs(weight)
        for K in sc.strong_refinements(I):
            pairs.append((K, QQ(sc.mobius(K, I), weight)))
    else:
        # e <-> h through the sign of K
        for K in sc.strong_refinements(I):
            for L in sc.strong_refinements(K):
                pairs.append((L, sc.sign(K) * sc.mobius(L, K)))
    return tuple(SymbolicElement.from_pairs(target, pairs).terms.items())


DIRECT_ROUTES = {
    (Basis.E, Basis.P), (Basis.H, Basis.P),
    (Basis.P, Basis.E), (Basis.P, Basis.H),
    (Basis.E, Basis.H), (Basis.H, Basis.E),
}


def convert_direct(el: SymbolicElement, target) -> SymbolicElement:
    """Use the closed e/h/p formulas, which bypass the monomial basis"""
    target = Basis.parse(target)
    if (el.basis, target) not in DIRECT_ROUTES:
        raise BasisError(f"no direct formula from {el.basis.value} to {target.value}")
    acc: Dict[Supercomposition, object] = defaultdict(lambda: QQ.zero)
    for index, coeff in el.terms.items():
        for K, c in _direct(el.basis, target, index):
            acc[K] += coeff * c
    return SymbolicElement(target, acc)


def convert_via_monomial(el: SymbolicElement, target) -> SymbolicElement:
    return from_monomial(to_monomial(el), target)


def convert(el: SymbolicElement, target) -> SymbolicElement:
    """Change of basis between m, p, e and h"""
    target = Basis.parse(target)
    if not target.classical:
        raise BasisError(f"cannot express elements in the {target.value} family")
    if el.basis == target:
        return el
    if (el.basis, target) in DIRECT_ROUTES:
        return convert_direct(el, target)
    if target == Basis.M:
        return to_monomial(el)
    return convert_via_monomial(el, target)


# ---------------------------------------------------------------- transition matrices

_matrix_cache: Dict[Tuple[Basis, Basis, int, int], DomainMatrix] = {}
_matrix_lock = threading.Lock()


def transition_matrix(source, target, n: int, m: int) -> DomainMatrix:
    """Column j holds the target-basis coefficients of the j-th source element.

    Rows and columns follow the enumeration order of set_superpartitions(n, m).
    """
    source, target = Basis.parse(source), Basis.parse(target)
    key = (source, target, n, m)
    matrix = _matrix_cache.get(key)
    if matrix is not None:
        return matrix
    with _matrix_lock:
        matrix = _matrix_cache.get(key)
        if matrix is None:
            indices = sc.set_superpartitions(n, m)
            position = {I: i for i, I in enumerate(indices)}
            rows = [[QQ.zero] * len(indices) for _ in indices]
            for j, I in enumerate(indices):
                image = convert(SymbolicElement.of(source, I), target)
                for J, coeff in image.terms.items():
                    rows[position[J]][j] = coeff
            matrix = DomainMatrix(rows, (len(indices), len(indices)), QQ)
            logger.debug("Built %s->%s transition matrix for bidegree (%d, %d), size %d",
                         source.value, target.value, n, m, len(indices))
            _matrix_cache[key] = matrix
    return matrix


def inverse_matrix(matrix: DomainMatrix) -> DomainMatrix:
    return matrix.inv()


def matrix_entries(matrix: DomainMatrix) -> List[List[object]]:
    """Entries as QQ elements"""
    dense = matrix.to_Matrix()
    return [[QQ.from_sympy(dense[i, j]) for j in range(dense.cols)] for i in range(dense.rows)]


# ---------------------------------------------------------------- products

def shuffle_set(I: Supercomposition, J: Supercomposition) -> List[Supercomposition]:
    """Nontrivial results of matching blocks of I with blocks of J[n], never two fermionic"""
    left = I.blocks
    right = sc.shift(J, I.degree).blocks
    m_left, m_right = I.fermionic_degree, J.fermionic_degree
    result = []

    def extend(a: int, used: Tuple[bool, ...], pairs: Tuple[Tuple[int, int], ...]):
        if a == len(left):
            merged = _assemble(left, right, m_left, m_right, pairs)
            if not merged.is_trivial():
                result.append(merged)
            return
        extend(a + 1, used, pairs)
        for b in range(len(right)):
            if used[b] or (a < m_left and b < m_right):
                continue
            extend(a + 1, used[:b] + (True,) + used[b + 1:], pairs + ((a, b),))

    extend(0, (False,) * len(right), ())
    return result


def _assemble(left, right, m_left, m_right, pairs) -> Supercomposition:
    partner_of_left = dict(pairs)
    partner_of_right = {b: a for a, b in pairs}
    fermionic, bosonic = [], []
    for a, block in enumerate(left):
        merged = block
        if a in partner_of_left:
            merged = tuple(sorted(set(block) | set(right[partner_of_left[a]])))
        if a < m_left:
            fermionic.append(merged)
        elif a in partner_of_left and partner_of_left[a] < m_right:
            continue
        else:
            bosonic.append(merged)
    for b, block in enumerate(right):
        if b < m_right:
            a = partner_of_right.get(b)
            fermionic.append(block if a is None else tuple(sorted(set(block) | set(left[a]))))
        elif b not in partner_of_right:
            bosonic.append(block)
    return Supercomposition(tuple(fermionic) + tuple(sorted(bosonic, key=lambda blk: blk[0])))


def product(f: SymbolicElement, g: SymbolicElement) -> SymbolicElement:
    """Product in the basis of f (g is converted first)"""
    if g.basis != f.basis:
        g = convert(g, f.basis)
    acc: Dict[Supercomposition, object] = defaultdict(lambda: QQ.zero)
    for I, a in f.terms.items():
        for J, b in g.terms.items():
            if f.basis == Basis.M:
                candidates = shuffle_set(I, J)
            else:
                candidates = [sc.over_product(I, J)]
            for K in candidates:
                term = sc.canonical_term(K)
                if term is not None:
                    acc[term[1]] += a * b * term[0]
    return SymbolicElement(f.basis, acc)


# ---------------------------------------------------------------- involution and pairing

def omega(el: SymbolicElement) -> SymbolicElement:
    """omega(e_I) = h_I, omega(h_I) = e_I, omega(p_I) = (-1)^I p_I"""
    if el.basis == Basis.E:
        return SymbolicElement(Basis.H, el.terms)
    if el.basis == Basis.H:
        return SymbolicElement(Basis.E, el.terms)
    if el.basis == Basis.P:
        return SymbolicElement(Basis.P, {I: c * sc.sign(I) for I, c in el.terms.items()})
    return to_monomial(omega(convert(el, Basis.P)))


def pairing_scale(n: int, m: int) -> int:
    """<m_I, h_I> = (-1)^C(m,2) n!"""
    return (-1) ** comb(m, 2) * _factorial(n)


def inner_product(f: SymbolicElement, g: SymbolicElement):
    """Bilinear form with m and h dual up to (-1)^C(m,2) n!"""
    left = to_monomial(f)
    right = convert(g, Basis.H)
    total = QQ.zero
    for I, a in left.terms.items():
        b = right.terms.get(I)
        if b is not None:
            total += a * b * pairing_scale(*I.bidegree)
    return total


def check_homogeneous(el: SymbolicElement) -> Tuple[int, int]:
    bidegrees = el.bidegrees()
    if len(bidegrees) > 1:
        raise BidegreeError(f"element {el} is not homogeneous")
    return bidegrees.pop() if bidegrees else (0, 0)


# ---------------------------------------------------------------- type sums

def signed_type_sum(basis, shape: Superpartition) -> SymbolicElement:
    """sum of (-1)^eps(I) b_I over the set superpartitions of type shape"""
    return SymbolicElement(basis, {
        I: sc.epsilon_sign(I) for I in sc.set_superpartitions_of_type(shape)})


def monomial_type_sum(shape: Superpartition) -> SymbolicElement:
    """The combination Lambda! sum (-1)^eps(I) m_I"""
    return signed_type_sum(Basis.M, shape).scale(shape.factorial())


def basis_elements(basis, n: int, m: int) -> Iterator[SymbolicElement]:
    for I in sc.set_superpartitions(n, m):
        yield SymbolicElement.of(basis, I)
