#!/usr/bin/env python3
"""
Superpartitions: the index objects of the commuting superspace algebra and
of the Schur-type functions.

A superpartition is a pair (antisym; sym) where antisym is a strictly
decreasing list of nonnegative integers (the fermionic components) and sym
is an ordinary partition. Diagrammatically it is the pair (oplus, plus) of
ordinary partitions, where the rows of oplus/plus hold the circles.
"""

from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

from .errors import InvalidIndexError

Partition = Tuple[int, ...]


def partitions(n: int, length: Optional[int] = None) -> Iterator[Partition]:
    """Ordinary partitions of n with at most `length` parts, in decreasing lexicographic order"""
    if n == 0:
        yield ()
        return
    for multiplicities in sympy_partitions(n, m=length):
        yield tuple(part for part, count in sorted(multiplicities.items(), reverse=True)
                    for _ in range(count))


def strict_partitions(total: int, length: int) -> Iterator[Partition]:
    """Strictly decreasing sequences of `length` nonnegative integers summing to total"""
    if length == 0:
        if total == 0:
            yield ()
        return
    staircase = tuple(range(length - 1, -1, -1))
    rest = total - sum(staircase)
    if rest < 0:
        return
    for partition in partitions(rest, length):
        padded = partition + (0,) * (length - len(partition))
        yield tuple(p + s for p, s in zip(padded, staircase))


def conjugate_partition(partition: Sequence[int]) -> Partition:
    """Transpose of a Young diagram"""
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > col) for col in range(parts[0]))


def multiplicity_factorial(partition: Sequence[int]) -> int:
    """lambda^! = product of the factorials of the part multiplicities"""
    return prod(factorial(count) for part, count in Counter(partition).items() if part > 0)


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(p >= 0 for p in parts)


@dataclass(frozen=True)
class Superpartition:
    """A superpartition (antisym; sym)"""

    antisym: Partition
    sym: Partition

    def __post_init__(self):
        if any(not isinstance(p, int) or p < 0 for p in self.antisym):
            raise InvalidIndexError(f"fermionic components must be nonnegative integers: {self.antisym}")
        if any(self.antisym[i] <= self.antisym[i + 1] for i in range(len(self.antisym) - 1)):
            raise InvalidIndexError(f"fermionic components must be distinct and decreasing: {self.antisym}")
        if any(not isinstance(p, int) or p <= 0 for p in self.sym):
            raise InvalidIndexError(f"bosonic components must be positive integers: {self.sym}")
        if not is_partition(self.sym):
            raise InvalidIndexError(f"bosonic components must be weakly decreasing: {self.sym}")

    @classmethod
    def of(cls, antisym: Sequence[int] = (), sym: Sequence[int] = ()) -> "Superpartition":
        """Sort both sides; repeated fermionic components are rejected"""
        fermionic = sorted(antisym, reverse=True)
        if len(set(fermionic)) != len(fermionic):
            raise InvalidIndexError(f"repeated fermionic component in {tuple(antisym)}")
        return cls(tuple(fermionic), tuple(sorted((p for p in sym if p != 0), reverse=True)))

    @classmethod
    def from_diagrams(cls, oplus: Sequence[int], plus: Sequence[int]) -> "Superpartition":
        """Rebuild a superpartition from its pair of diagrams"""
        oplus = [p for p in oplus if p > 0]
        plus = [p for p in plus if p > 0]
        if not is_partition(oplus) or not is_partition(plus):
            raise InvalidIndexError(f"not a pair of partitions: {oplus}, {plus}")
        rows = max(len(oplus), len(plus))
        plus = plus + [0] * (rows - len(plus))
        oplus = oplus + [0] * (rows - len(oplus))
        antisym, sym = [], []
        for big, small in zip(oplus, plus):
            if big == small + 1:
                antisym.append(small)
            elif big == small:
                if small:
                    sym.append(small)
            else:
                raise InvalidIndexError(f"{oplus}/{plus} is not a strip of circles")
        return cls.of(antisym, sym)

    @property
    def degree(self) -> int:
        return sum(self.antisym) + sum(self.sym)

    @property
    def fermionic_degree(self) -> int:
        return len(self.antisym)

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.degree, self.fermionic_degree

    def __len__(self) -> int:
        return len(self.antisym) + len(self.sym)

    @property
    def components(self) -> Partition:
        return self.antisym + self.sym

    def plus(self) -> Partition:
        """Lambda^+: all components sorted, zeros dropped"""
        return tuple(sorted((p for p in self.components if p > 0), reverse=True))

    def oplus(self) -> Partition:
        """Lambda^oplus: fermionic components raised by one, then sorted"""
        return tuple(sorted([p + 1 for p in self.antisym] + list(self.sym), reverse=True))

    def circle_rows(self) -> Tuple[int, ...]:
        """0-based rows of the diagram ending in a circle"""
        oplus = self.oplus()
        plus = self.plus() + (0,) * (len(oplus) - len(self.plus()))
        return tuple(r for r, (big, small) in enumerate(zip(oplus, plus)) if big != small)

    def factorial(self) -> int:
        """Lambda! = product of the factorials of all components"""
        return prod(factorial(p) for p in self.components)

    def sym_multiplicity_factorial(self) -> int:
        """(Lambda^s)^!"""
        return multiplicity_factorial(self.sym)

    def plus_multiplicity_factorial(self) -> int:
        """(Lambda^+)^!"""
        return multiplicity_factorial(self.plus())

    def binomial(self) -> int:
        """Number of set superpartitions of this type: n! / (Lambda! (Lambda^s)^!)"""
        return factorial(self.degree) // (self.factorial() * self.sym_multiplicity_factorial())

    def conjugate(self) -> "Superpartition":
        """Conjugate both diagrams"""
        return Superpartition.from_diagrams(conjugate_partition(self.oplus()),
                                            conjugate_partition(self.plus()))

    def swap_sign_exponent(self) -> int:
        """deg - len(sym), the exponent of the omega-hat sign on p"""
        return self.degree - len(self.sym)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.antisym)) + ";" + ",".join(map(str, self.sym)) + ")"

    def __repr__(self) -> str:
        return f"Superpartition{self}"


def superpartitions(n: int, m: int) -> List[Superpartition]:
    """All superpartitions of bidegree (n, m), in deterministic order"""
    if n < 0 or m < 0:
        return []
    result = []
    min_fermionic = m * (m - 1) // 2
    for fermionic_total in range(n, min_fermionic - 1, -1):
        for antisym in strict_partitions(fermionic_total, m):
            for sym in partitions(n - fermionic_total):
                result.append(Superpartition(antisym, sym))
    return result


def all_superpartitions(n: int) -> List[Superpartition]:
    """Superpartitions of degree n over every fermionic degree"""
    result = []
    m = 0
    while m * (m - 1) // 2 <= n:
        result.extend(superpartitions(n, m))
        m += 1
    return result
