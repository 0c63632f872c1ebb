#!/usr/bin/env python3
"""
Super semistandard Young tableaux and the Schur-type functions built on them.

A tableau is a chain of superpartitions from the empty one to its shape.
Each step reads one weight entry, which is either plain (a horizontal strip
of boxes) or barred (the same plus one new circle). Circles keep the label
of the step that created them, so the sign of a tableau is the parity of
its circle-label word.

Two kinds are supported. In the first kind a circle whose row receives
boxes must drop to the end of the next row, a new circle sits in the first
column the strip misses, and the circle word is read top to bottom. In the
second kind such a circle either stays at the end of its row or drops
straight down into the same column, a new circle is the rightmost box of a
horizontal strip of the boxes-plus-circles diagram, and the circle word is
read bottom to top. Second-kind tableaux are distinct fillings: chains that
fill the diagram the same way are counted once.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import factorial, prod
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from . import combinat as sc
from .algebra import SymbolicElement, inner_product, monomial_type_sum, omega
from .bases import Basis, SymBasis
from .combinat import Supercomposition
from .errors import InvalidIndexError
from .oracle import OraclePolynomial
from .superpartition import Superpartition, superpartitions

logger = logging.getLogger(__name__)

FIRST, SECOND = 1, 2


class WeightEntry(NamedTuple):
    value: int
    barred: bool = False

    def __str__(self) -> str:
        return f"~{self.value}" if self.barred else str(self.value)


def weight_of(shape: Superpartition) -> Tuple[WeightEntry, ...]:
    """(~Ω_1, ..., ~Ω_m, Ω_m+1, ..., Ω_k)"""
    return (tuple(WeightEntry(p, True) for p in shape.antisym)
            + tuple(WeightEntry(p) for p in shape.sym))


def parse_weight(text: str) -> Tuple[WeightEntry, ...]:
    entries = []
    for piece in text.strip().strip("()").split(","):
        piece = piece.strip()
        if not piece:
            continue
        barred = piece.startswith("~")
        value = piece[1:] if barred else piece
        if not value.isdigit():
            raise InvalidIndexError(f"bad weight entry {piece!r}")
        entries.append(WeightEntry(int(value), barred))
    return tuple(entries)


# A diagram state: row lengths of the boxes (trailing rows may be empty when
# they carry a circle) and, per row, the label of its circle.
Rows = Tuple[int, ...]
Circles = Tuple[Tuple[int, int], ...]


class State(NamedTuple):
    plus: Rows
    circles: Circles

    def row(self, r: int) -> int:
        return self.plus[r] if r < len(self.plus) else 0

    def circle_rows(self) -> Dict[int, int]:
        return dict(self.circles)

    def oplus(self) -> Rows:
        rows = self.circle_rows()
        height = max([len(self.plus)] + [r + 1 for r in rows])
        return tuple(self.row(r) + (1 if r in rows else 0) for r in range(height))

    def superpartition(self) -> Superpartition:
        return Superpartition.from_diagrams(self.oplus(), self.plus)


EMPTY = State((), ())


def _trim(rows: Sequence[int]) -> Rows:
    rows = list(rows)
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


def _valid(plus: Rows, circles: Dict[int, int]) -> bool:
    """Circles sit at row ends with strictly longer rows above them"""
    def row(r):
        return plus[r] if r < len(plus) else 0
    for r in circles:
        if r > 0 and row(r - 1) <= row(r):
            return False
    return True


def horizontal_strips(mu: Sequence[int], size: int) -> Iterator[Rows]:
    """Partitions nu over mu with nu/mu a horizontal strip of the given size"""
    mu = list(mu) + [0]

    def extend(r: int, remaining: int, acc: List[int]):
        if r == len(mu):
            if remaining == 0:
                yield _trim(acc)
            return
        upper = remaining if r == 0 else min(remaining, mu[r - 1] - mu[r])
        for add in range(upper, -1, -1):
            yield from extend(r + 1, remaining - add, acc + [mu[r] + add])

    yield from extend(0, size, [])


def _strip_columns(mu: Sequence[int], nu: Sequence[int]) -> set:
    columns = set()
    for r, length in enumerate(nu):
        start = mu[r] if r < len(mu) else 0
        columns.update(range(start + 1, length + 1))
    return columns


def _moves(state: State, nu: Rows, kind: int) -> Iterator[Dict[int, int]]:
    """Placements of the existing circles after the boxes of nu/plus are added"""
    options = []
    for r, label in state.circles:
        grew = (nu[r] if r < len(nu) else 0) != state.row(r)
        if not grew:
            options.append([(r, label)])
        elif kind == FIRST:
            options.append([(r + 1, label)])
        elif (nu[r + 1] if r + 1 < len(nu) else 0) == state.row(r):
            # the dropped circle keeps its column
            options.append([(r, label), (r + 1, label)])
        else:
            options.append([(r, label)])
    for choice in cartesian(*options):
        rows = dict(choice)
        if len(rows) == len(choice):
            yield rows


def _is_horizontal_strip(mu: Sequence[int], nu: Sequence[int]) -> bool:
    height = max(len(mu), len(nu))
    mu = list(mu) + [0] * (height - len(mu))
    nu = list(nu) + [0] * (height - len(nu))
    if any(nu[r] < mu[r] for r in range(height)):
        return False
    return all(nu[r] <= mu[r - 1] for r in range(1, height))


def successors(state: State, entry: WeightEntry, label: int, kind: int) -> Iterator[State]:
    """States reachable by reading one weight entry"""
    for nu in horizontal_strips(state.plus, entry.value):
        for circles in _moves(state, nu, kind):
            if not entry.barred:
                if _valid(nu, circles):
                    yield State(nu, tuple(sorted(circles.items())))
                continue
            for row in _new_circle_rows(state, nu, circles, kind):
                placed = dict(circles)
                placed[row] = label
                if _valid(nu, placed):
                    yield State(nu, tuple(sorted(placed.items())))


def _new_circle_rows(state: State, nu: Rows, circles: Dict[int, int], kind: int) -> Iterator[int]:
    def row(r):
        return nu[r] if r < len(nu) else 0

    if kind == FIRST:
        columns = _strip_columns(state.plus, nu)
        column = 1
        while column in columns:
            column += 1
        for r in range(len(nu) + 1):
            if row(r) == column - 1:
                if r not in circles:
                    yield r
                return
        return
    before = state.oplus()
    for r in range(len(nu) + 1):
        if r in circles:
            continue
        after_rows = dict(circles)
        after_rows[r] = -1
        height = max([len(nu)] + [c + 1 for c in after_rows])
        after = tuple(row(c) + (1 if c in after_rows else 0) for c in range(height))
        if not _is_horizontal_strip(before, after) or sum(after) - sum(before) != sum(nu) - sum(state.plus) + 1:
            continue
        # the new circle must be the rightmost box of the strip
        circle_column = row(r) + 1
        strip = _strip_columns(before, after)
        if strip and max(strip) == circle_column:
            yield r


@dataclass(frozen=True)
class SuperTableau:
    """A chain of diagram states with its weight"""

    kind: int
    weight: Tuple[WeightEntry, ...]
    states: Tuple[State, ...]

    @property
    def chain(self) -> Tuple[Superpartition, ...]:
        return tuple(state.superpartition() for state in self.states)

    @property
    def shape(self) -> Superpartition:
        return self.states[-1].superpartition()

    def circle_word(self) -> Tuple[int, ...]:
        """Circle labels top to bottom (first kind) or bottom to top (second kind)"""
        word = tuple(label for _, label in self.states[-1].circles)
        return word if self.kind == FIRST else word[::-1]

    def inv(self) -> int:
        return sc.inversions(self.circle_word())

    def sign(self) -> int:
        return -1 if self.inv() % 2 else 1

    def box_labels(self) -> List[List[int]]:
        """Label of every box, row by row"""
        final = self.states[-1].plus
        rows = [[0] * length for length in final]
        for step in range(1, len(self.states)):
            mu, nu = self.states[step - 1].plus, self.states[step].plus
            for r, length in enumerate(nu):
                start = mu[r] if r < len(mu) else 0
                for c in range(start, length):
                    rows[r][c] = step
        return rows

    def filling(self) -> Tuple[Tuple[Tuple[int, ...], ...], Circles]:
        return tuple(map(tuple, self.box_labels())), self.states[-1].circles


def enumerate_tableaux(shape: Superpartition, weight: Sequence[WeightEntry],
                       kind: int = FIRST) -> List[SuperTableau]:
    """All tableaux of the given shape and weight"""
    if kind not in (FIRST, SECOND):
        raise ValueError(f"tableau kind must be 1 or 2, got {kind}")
    weight = tuple(WeightEntry(*entry) for entry in weight)
    target_plus = shape.plus()
    target = shape
    found: Dict[object, SuperTableau] = {}

    def walk(states: Tuple[State, ...]):
        step = len(states)
        if step == len(weight) + 1:
            if states[-1].plus == target_plus and states[-1].superpartition() == target:
                tableau = SuperTableau(kind, weight, states)
                key = tableau.filling() if kind == SECOND else states
                found.setdefault(key, tableau)
            return
        for nxt in successors(states[-1], weight[step - 1], step, kind):
            if _fits(nxt, target_plus):
                walk(states + (nxt,))

    walk((EMPTY,))
    logger.debug("Shape %s weight %s kind %d: %d tableaux", shape,
                 ",".join(map(str, weight)), kind, len(found))
    return list(found.values())


def _fits(state: State, target_plus: Rows) -> bool:
    if len(state.plus) > len(target_plus):
        return False
    return all(length <= target_plus[r] for r, length in enumerate(state.plus))


@lru_cache(maxsize=None)
def kostka(shape: Superpartition, weight_shape: Superpartition, kind: int = FIRST) -> int:
    """Signed count of tableaux of the given shape and weight_shape's weight"""
    if shape.bidegree != weight_shape.bidegree:
        return 0
    return sum(t.sign() for t in enumerate_tableaux(shape, weight_of(weight_shape), kind))


def kostka_matrix(n: int, m: int, kind: int = FIRST) -> List[List[int]]:
    """Rows indexed by shapes, columns by weights, both in superpartitions(n, m) order"""
    shapes = superpartitions(n, m)
    return [[kostka(shape, weight, kind) for weight in shapes] for shape in shapes]


def schur(shape: Superpartition, kind: int = FIRST) -> SymbolicElement:
    """S_Λ (or the second-kind S̄_Λ) in the monomial basis"""
    total = SymbolicElement(Basis.M)
    for weight in superpartitions(*shape.bidegree):
        coefficient = kostka(shape, weight, kind)
        if coefficient:
            total = total + monomial_type_sum(weight).scale(coefficient)
    return total


def schur_ssym(shape: Superpartition, kind: int = FIRST):
    """s_Λ or s̄_Λ in the monomial basis of the commuting algebra"""
    from .ssym import SSymElement

    return SSymElement(SymBasis.M, {
        weight: kostka(shape, weight, kind) for weight in superpartitions(*shape.bidegree)})


def _weights(n: int, m: int, length: int) -> Iterator[Tuple[WeightEntry, ...]]:
    """Weights with the given length, total n and m barred entries"""
    if length == 0:
        if n == 0 and m == 0:
            yield ()
        return
    for value in range(n, -1, -1):
        for barred in (True, False):
            if barred and m == 0:
                continue
            for rest in _weights(n - value, m - barred, length - 1):
                yield (WeightEntry(value, barred),) + rest


def schur_direct(shape: Superpartition, kind: int, N: int) -> OraclePolynomial:
    """Sum over every tableau with labels in 1..N of its θ word times all x arrangements"""
    words = []
    for weight in _weights(shape.degree, shape.fermionic_degree, N):
        tableaux = enumerate_tableaux(shape, weight, kind)
        if not tableaux:
            continue
        letters = [i for i, entry in enumerate(weight, start=1) for _ in range(entry.value)]
        multiplicity = prod(factorial(entry.value) for entry in weight)
        arrangements = [tuple(w) for w in multiset_permutations(letters)] if letters else [()]
        for tableau in tableaux:
            theta = tableau.circle_word()
            for x in arrangements:
                words.append((theta, x, multiplicity))
    return OraclePolynomial.from_words(N, words)


def positive_form(el: SymbolicElement) -> List[Tuple[Supercomposition, object]]:
    """Absorb negative signs by swapping the first two fermionic blocks"""
    result = []
    for index, coeff in el.items():
        if coeff < 0 and index.fermionic_degree >= 2:
            fermionic = index.fermionic
            swapped = (fermionic[1], fermionic[0]) + fermionic[2:]
            result.append((Supercomposition(swapped + index.bosonic), -coeff))
        else:
            result.append((index, coeff))
    return result


def check_duality(shape: Superpartition, other: Superpartition, kind: int = SECOND):
    """<ω(S̄_Λ'), S_Ω> (kind 2) or <ω(S_Λ'), S̄_Ω> (kind 1)"""
    dual = SECOND if kind == FIRST else FIRST
    return inner_product(omega(schur(shape.conjugate(), kind)), schur(other, dual))


# ---------------------------------------------------------------- rendering

def render_chain(tableau: SuperTableau) -> str:
    pieces = ["[]"] + [str(shape) for shape in tableau.chain[1:]]
    return " -> ".join(pieces)


def render_diagram(shape: Superpartition) -> str:
    """Boxes as '#', circles as 'O'"""
    circles = set(shape.circle_rows())
    plus = shape.plus()
    lines = []
    for r in range(len(shape.oplus())):
        length = plus[r] if r < len(plus) else 0
        lines.append(" ".join(["#"] * length + (["O"] if r in circles else [])))
    return "\n".join(lines)


def render_tableau(tableau: SuperTableau) -> str:
    """Chain, then the filled diagram with circled labels as (k)"""
    labels = tableau.box_labels()
    circles = tableau.states[-1].circle_rows()
    height = max([len(labels)] + [r + 1 for r in circles])
    lines = [render_chain(tableau)]
    for r in range(height):
        cells = [str(v) for v in (labels[r] if r < len(labels) else [])]
        if r in circles:
            cells.append(f"({circles[r]})")
        lines.append(" ".join(cells))
    return "\n".join(lines)
