#!/usr/bin/env python3
"""
Symmetric functions in superspace with commuting x's (sSym).

Bases are indexed by superpartitions. The monomial basis is built by orbit
enumeration; the multiplicative bases come from the generators
p~_k, p_r, e~_k, e_r, h~_k, h_r with the fermionic factors written first.
Transition matrices are never transcribed: both sides are expanded over
n + m variables and read off at the orbit representatives.
"""

import logging
import threading
from collections import defaultdict
from itertools import permutations
from math import comb, factorial
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from . import combinat as sc
from .algebra import SymbolicElement, format_terms, matrix_entries
from .bases import Basis, SymBasis
from .errors import BasisError
from .oracle import OraclePolynomial
from .rational import format_rational, qq
from .superpartition import Superpartition, superpartitions

logger = logging.getLogger(__name__)

GENERATORS = ("ptilde", "p", "etilde", "e", "htilde", "h")


class CommutingMonomial(NamedTuple):
    """θ indices (increasing) and the exponent of each x_1..x_N"""

    theta: Tuple[int, ...]
    exponents: Tuple[int, ...]

    def __str__(self) -> str:
        letters = [f"t{a}" for a in self.theta]
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                letters.append(f"x{i}")
            elif e > 1:
                letters.append(f"x{i}^{e}")
        return " ".join(letters)


class CommutingPolynomial:
    """A superpolynomial in commuting x's and anticommuting θ's"""

    def __init__(self, num_vars: int, terms: Optional[Dict[CommutingMonomial, object]] = None):
        self.num_vars = num_vars
        self.terms: Dict[CommutingMonomial, object] = {}
        for monomial, coeff in (terms or {}).items():
            if coeff:
                self.terms[monomial] = qq(coeff)

    @classmethod
    def from_words(cls, num_vars: int, words) -> "CommutingPolynomial":
        """Accumulate (θ word, exponents, coeff) triples, sorting each θ word"""
        acc: Dict[CommutingMonomial, object] = defaultdict(lambda: QQ.zero)
        for theta, exponents, coeff in words:
            if len(set(theta)) != len(theta):
                continue
            coeff = qq(coeff)
            if sc.inversions(theta) % 2:
                coeff = -coeff
            acc[CommutingMonomial(tuple(sorted(theta)), tuple(exponents))] += coeff
        return cls(num_vars, acc)

    @classmethod
    def one(cls, num_vars: int) -> "CommutingPolynomial":
        return cls(num_vars, {CommutingMonomial((), (0,) * num_vars): QQ.one})

    def coefficient(self, monomial: CommutingMonomial):
        return self.terms.get(monomial, QQ.zero)

    def __add__(self, other: "CommutingPolynomial") -> "CommutingPolynomial":
        acc = dict(self.terms)
        for monomial, coeff in other.terms.items():
            acc[monomial] = acc.get(monomial, QQ.zero) + coeff
        return CommutingPolynomial(self.num_vars, acc)

    def __sub__(self, other: "CommutingPolynomial") -> "CommutingPolynomial":
        return self + other.scale(-1)

    def scale(self, factor) -> "CommutingPolynomial":
        factor = qq(factor)
        return CommutingPolynomial(self.num_vars, {k: v * factor for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CommutingPolynomial):
            return self.scale(other)
        words = []
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                exponents = tuple(x + y for x, y in zip(left.exponents, right.exponents))
                words.append((left.theta + right.theta, exponents, a * b))
        return CommutingPolynomial.from_words(self.num_vars, words)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommutingPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    __hash__ = None

    def act(self, s: Sequence[int]) -> "CommutingPolynomial":
        words = []
        for mono, coeff in self.terms.items():
            exponents = [0] * self.num_vars
            for i, e in enumerate(mono.exponents, start=1):
                exponents[s[i - 1] - 1] = e
            words.append((tuple(s[a - 1] for a in mono.theta), tuple(exponents), coeff))
        return CommutingPolynomial.from_words(self.num_vars, words)

    def is_symmetric(self) -> bool:
        for i in range(1, self.num_vars):
            s = list(range(1, self.num_vars + 1))
            s[i - 1], s[i] = s[i], s[i - 1]
            if self.act(s) != self:
                return False
        return True

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for monomial, coeff in sorted(self.terms.items()):
            word = str(monomial)
            lines.append(f"{format_rational(coeff)} * {word}" if word else format_rational(coeff))
        return "\n".join(lines)


def rho_concrete(f: OraclePolynomial) -> CommutingPolynomial:
    """Let the x's commute"""
    words = []
    for mono, coeff in f.terms.items():
        exponents = [0] * f.num_vars
        for b in mono.x:
            exponents[b - 1] += 1
        words.append((mono.theta, tuple(exponents), coeff))
    return CommutingPolynomial.from_words(f.num_vars, words)


# ---------------------------------------------------------------- elements

class SSymElement:
    """An element of sSym in one basis"""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms: Optional[Dict[Superpartition, object]] = None):
        self.basis = SymBasis.parse(basis)
        self.terms: Dict[Superpartition, object] = {}
        for shape, coeff in (terms or {}).items():
            coeff = qq(coeff)
            if coeff:
                self.terms[shape] = coeff

    @classmethod
    def of(cls, basis, shape: Superpartition, coeff=1) -> "SSymElement":
        return cls(basis, {shape: coeff})

    def items(self):
        return sorted(self.terms.items(), key=lambda item: (item[0].degree, item[0].fermionic_degree,
                                                            [-p for p in item[0].antisym],
                                                            [-p for p in item[0].sym]))

    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> set:
        return {shape.bidegree for shape in self.terms}

    def coefficient(self, shape: Superpartition):
        return self.terms.get(shape, QQ.zero)

    def _combine(self, other: "SSymElement", factor) -> "SSymElement":
        if other.basis != self.basis:
            other = convert_ssym(other, self.basis)
        acc = dict(self.terms)
        for shape, coeff in other.terms.items():
            acc[shape] = acc.get(shape, QQ.zero) + factor * coeff
        return SSymElement(self.basis, acc)

    def __add__(self, other: "SSymElement") -> "SSymElement":
        return self._combine(other, QQ.one)

    def __sub__(self, other: "SSymElement") -> "SSymElement":
        return self._combine(other, -QQ.one)

    def __neg__(self) -> "SSymElement":
        return self.scale(-1)

    def scale(self, factor) -> "SSymElement":
        factor = qq(factor)
        return SSymElement(self.basis, {k: v * factor for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SSymElement):
            return product_ssym(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SSymElement):
            return NotImplemented
        if other.basis == self.basis:
            return self.terms == other.terms
        return convert_ssym(self, SymBasis.M).terms == convert_ssym(other, SymBasis.M).terms

    __hash__ = None

    def __str__(self) -> str:
        return format_terms(self.basis.value, self.items())

    def __repr__(self) -> str:
        return f"SSymElement({self})"


# ---------------------------------------------------------------- concrete expansions

def expand_monomial(shape: Superpartition, N: int) -> CommutingPolynomial:
    """Distinct orbit of θ_1..θ_m x_1^Λ1..x_ℓ^Λℓ, each monomial once"""
    m = shape.fermionic_degree
    parts = shape.components
    terms: Dict[CommutingMonomial, object] = {}
    for positions in permutations(range(1, N + 1), len(parts)):
        theta = positions[:m]
        if sc.inversions(theta) % 2:
            sign = -QQ.one
        else:
            sign = QQ.one
        exponents = [0] * N
        for position, part in zip(positions, parts):
            exponents[position - 1] = part
        terms[CommutingMonomial(tuple(sorted(theta)), tuple(exponents))] = sign
    return CommutingPolynomial(N, terms)


def expand_generator(kind: str, k: int, N: int) -> CommutingPolynomial:
    """One of p~_k, p_r, e~_k, e_r, h~_k, h_r over N variables"""
    if kind == "ptilde":
        words = []
        for i in range(1, N + 1):
            exponents = [0] * N
            exponents[i - 1] = k
            words.append(((i,), tuple(exponents), 1))
        return CommutingPolynomial.from_words(N, words)
    if kind == "p":
        words = []
        for i in range(1, N + 1):
            exponents = [0] * N
            exponents[i - 1] = k
            words.append(((), tuple(exponents), 1))
        return CommutingPolynomial.from_words(N, words)
    if kind == "etilde":
        return expand_monomial(Superpartition((0,), (1,) * k), N)
    if kind == "e":
        return expand_monomial(Superpartition((), (1,) * k), N)
    if kind == "htilde":
        total = CommutingPolynomial(N)
        for shape in superpartitions(k, 1):
            if len(shape) <= N:
                total = total + expand_monomial(shape, N).scale(shape.antisym[0] + 1)
        return total
    if kind == "h":
        total = CommutingPolynomial(N)
        for shape in superpartitions(k, 0):
            if len(shape) <= N:
                total = total + expand_monomial(shape, N)
        return total
    raise BasisError(f"unknown generator {kind!r}; expected one of {', '.join(GENERATORS)}")


_GENERATOR_NAMES = {SymBasis.P: ("ptilde", "p"), SymBasis.E: ("etilde", "e"), SymBasis.H: ("htilde", "h")}


def expand_shape(basis, shape: Superpartition, N: int) -> CommutingPolynomial:
    basis = SymBasis.parse(basis)
    if basis == SymBasis.M:
        return expand_monomial(shape, N)
    if basis.multiplicative:
        fermionic, bosonic = _GENERATOR_NAMES[basis]
        result = CommutingPolynomial.one(N)
        for part in shape.antisym:
            result = result * expand_generator(fermionic, part, N)
        for part in shape.sym:
            result = result * expand_generator(bosonic, part, N)
        return result
    return expand_ssym(convert_ssym(SSymElement.of(basis, shape), SymBasis.M), N)


def expand_ssym(el: SSymElement, N: int) -> CommutingPolynomial:
    total = CommutingPolynomial(N)
    for shape, coeff in el.terms.items():
        total = total + expand_shape(el.basis, shape, N).scale(coeff)
    return total


def representative(shape: Superpartition, N: int) -> CommutingMonomial:
    exponents = list(shape.components) + [0] * (N - len(shape))
    return CommutingMonomial(tuple(range(1, shape.fermionic_degree + 1)), tuple(exponents))


def monomial_expansion(f: CommutingPolynomial, n: int, m: int) -> SSymElement:
    """Read a symmetric polynomial of bidegree (n, m) in the m basis"""
    return SSymElement(SymBasis.M, {
        shape: f.coefficient(representative(shape, f.num_vars)) for shape in superpartitions(n, m)})


# ---------------------------------------------------------------- transitions

_transition_cache: Dict[Tuple[SymBasis, int, int], Tuple[List[List[object]], List[List[object]]]] = {}
_transition_lock = threading.Lock()


def _monomial_columns(basis: SymBasis, n: int, m: int) -> List[List[object]]:
    shapes = superpartitions(n, m)
    if basis in (SymBasis.S, SymBasis.SBAR):
        from .tableaux import kostka

        kind = 1 if basis == SymBasis.S else 2
        return [[qq(kostka(shape, target, kind)) for target in shapes] for shape in shapes]
    N = max(1, n + m)
    columns = []
    for shape in shapes:
        f = expand_shape(basis, shape, N)
        columns.append([f.coefficient(representative(target, N)) for target in shapes])
    return columns


def transitions(basis, n: int, m: int) -> Tuple[List[List[object]], List[List[object]]]:
    """(to_m, from_m) matrices for bidegree (n, m); row/column order is superpartitions(n, m)"""
    basis = SymBasis.parse(basis)
    key = (basis, n, m)
    cached = _transition_cache.get(key)
    if cached is not None:
        return cached
    with _transition_lock:
        cached = _transition_cache.get(key)
        if cached is None:
            columns = _monomial_columns(basis, n, m)
            size = len(columns)
            rows = [[columns[j][i] for j in range(size)] for i in range(size)]
            if size:
                to_m = DomainMatrix(rows, (size, size), QQ)
                from_m = matrix_entries(to_m.inv())
            else:
                from_m = []
            cached = (rows, from_m)
            logger.debug("Built sSym %s transitions for bidegree (%d, %d), size %d",
                         basis.value, n, m, size)
            _transition_cache[key] = cached
    return cached


def _apply(matrix: List[List[object]], vector: List[object]) -> List[object]:
    return [sum((row[j] * vector[j] for j in range(len(vector))), QQ.zero) for row in matrix]


def convert_ssym(el: SSymElement, target) -> SSymElement:
    """Change of basis through the monomial basis"""
    target = SymBasis.parse(target)
    if el.basis == target:
        return el
    acc: Dict[Superpartition, object] = {}
    for n, m in el.bidegrees():
        shapes = superpartitions(n, m)
        vector = [el.coefficient(shape) for shape in shapes]
        if el.basis != SymBasis.M:
            vector = _apply(transitions(el.basis, n, m)[0], vector)
        if target != SymBasis.M:
            vector = _apply(transitions(target, n, m)[1], vector)
        acc.update(zip(shapes, vector))
    return SSymElement(target, acc)


# ---------------------------------------------------------------- products

def _merge_shapes(left: Superpartition, right: Superpartition) -> Tuple[int, Optional[Superpartition]]:
    """Sign and shape of b_left b_right in a multiplicative basis"""
    fermionic = left.antisym + right.antisym
    if len(set(fermionic)) != len(fermionic):
        return 0, None
    # pairs out of decreasing order
    out_of_order = sum(1 for i in range(len(fermionic)) for j in range(i + 1, len(fermionic))
                       if fermionic[i] < fermionic[j])
    return (-1 if out_of_order % 2 else 1), Superpartition.of(fermionic, left.sym + right.sym)


def product_ssym(f: SSymElement, g: SSymElement) -> SSymElement:
    """Product; non-multiplicative bases go through p"""
    if not f.basis.multiplicative:
        return convert_ssym(product_ssym(convert_ssym(f, SymBasis.P), g), f.basis)
    if g.basis != f.basis:
        g = convert_ssym(g, f.basis)
    acc: Dict[Superpartition, object] = defaultdict(lambda: QQ.zero)
    for left, a in f.terms.items():
        for right, b in g.terms.items():
            sign, shape = _merge_shapes(left, right)
            if sign:
                acc[shape] += a * b * sign
    return SSymElement(f.basis, acc)


# ---------------------------------------------------------------- projection and lifting

_PROJECTED = {Basis.M: SymBasis.M, Basis.P: SymBasis.P, Basis.E: SymBasis.E, Basis.H: SymBasis.H}


def rho(el: SymbolicElement) -> SSymElement:
    """Projection to commuting variables"""
    acc: Dict[Superpartition, object] = defaultdict(lambda: QQ.zero)
    for I, coeff in el.terms.items():
        shape = sc.lambda_of(I)
        if shape is None:
            continue
        factor = sc.epsilon_sign(I)
        if el.basis == Basis.M:
            factor *= shape.sym_multiplicity_factorial()
        elif el.basis in (Basis.E, Basis.H):
            factor *= shape.factorial()
        acc[shape] += coeff * factor
    return SSymElement(_PROJECTED[el.basis], acc)


def lift(el: SSymElement) -> SymbolicElement:
    """Lift to sNCSym; non-monomial input is converted to m first"""
    el = convert_ssym(el, SymBasis.M)
    acc: Dict = defaultdict(lambda: QQ.zero)
    for shape, coeff in el.terms.items():
        scale = QQ(shape.factorial(), factorial(shape.degree))
        for I in sc.set_superpartitions_of_type(shape):
            acc[I] += coeff * scale * sc.epsilon_sign(I)
    return SymbolicElement(Basis.M, acc)


def inner_product_ssym(f: SSymElement, g: SSymElement):
    """<m_Λ, h_Ω> = (-1)^C(m,2) δ"""
    left = convert_ssym(f, SymBasis.M)
    right = convert_ssym(g, SymBasis.H)
    total = QQ.zero
    for shape, a in left.terms.items():
        b = right.terms.get(shape)
        if b is not None:
            total += a * b * (-1) ** comb(shape.fermionic_degree, 2)
    return total


def omega_hat(el: SSymElement) -> SSymElement:
    """ω^(p_Λ) = (-1)^(deg - ℓ(Λ^s)) p_Λ, extended linearly"""
    powers = convert_ssym(el, SymBasis.P)
    flipped = SSymElement(SymBasis.P, {
        shape: c * (-1) ** shape.swap_sign_exponent() for shape, c in powers.terms.items()})
    return convert_ssym(flipped, el.basis)


def rho_check(el: SymbolicElement, N: int) -> bool:
    """ρ computed symbolically agrees with commuting the oracle expansion"""
    from .oracle import expand_element

    concrete = rho_concrete(expand_element(el, N))
    return concrete == expand_ssym(rho(el), N)
