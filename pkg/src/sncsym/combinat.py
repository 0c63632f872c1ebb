#!/usr/bin/env python3
"""
Combinatorics of partial set supercompositions and set superpartitions.

A block is a sorted tuple of nonnegative integers; it is fermionic when it
contains 0, which is then its first element. A partial set supercomposition
lists its fermionic blocks first, in a meaningful order, followed by its
nonfermionic blocks sorted by minimum. A set superpartition is the canonical
representative: distinct blocks, fermionic blocks sorted by the minimum of
their positive part (with min of the empty set taken as 0).

Permutations are tuples in one-line notation with values 1..k.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial as _factorial
from math import prod
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions, multiset_permutations

from .errors import BidegreeError, InvalidIndexError
from .superpartition import Superpartition

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]
Permutation = Tuple[int, ...]


def make_block(elements: Iterable[int]) -> Block:
    """Validate and sort a block"""
    block = tuple(sorted(set(elements)))
    if not block:
        raise InvalidIndexError("blocks must be nonempty")
    if any(not isinstance(e, int) or e < 0 for e in block):
        raise InvalidIndexError(f"block elements must be nonnegative integers: {block}")
    return block


def is_fermionic(block: Block) -> bool:
    return block[0] == 0


def positive_part(block: Block) -> Block:
    return block[1:] if block[0] == 0 else block


def block_key(block: Block) -> int:
    """Minimum of the positive part, 0 for the block {0}"""
    positive = positive_part(block)
    return positive[0] if positive else 0


def oplus(a: Block, b: Block) -> Optional[Block]:
    """Union of two blocks, undefined (None) when both are fermionic"""
    if is_fermionic(a) and is_fermionic(b):
        return None
    return tuple(sorted(set(a) | set(b)))


def inversions(word: Sequence[int]) -> int:
    return sum(1 for i, j in combinations(range(len(word)), 2) if word[i] > word[j])


def sorting_sign(keys: Sequence[int]) -> int:
    """Sign of the permutation that sorts keys increasingly"""
    return -1 if inversions(keys) % 2 else 1


def format_block(block: Block) -> str:
    return "{" + ",".join(map(str, block)) + "}"


@dataclass(frozen=True)
class Supercomposition:
    """A partial set supercomposition (fermionic blocks first)"""

    blocks: Tuple[Block, ...]

    def __post_init__(self):
        seen = set()
        in_fermionic = True
        for block in self.blocks:
            if not block or list(block) != sorted(set(block)) or block[0] < 0:
                raise InvalidIndexError(f"malformed block {block!r}")
            if is_fermionic(block):
                if not in_fermionic:
                    raise InvalidIndexError(f"fermionic block {format_block(block)} after a nonfermionic one")
            else:
                in_fermionic = False
            positive = set(positive_part(block))
            if positive & seen:
                raise InvalidIndexError(f"blocks of {self.blocks} are not disjoint")
            seen |= positive
        bosonic = self.bosonic
        if any(bosonic[i][0] > bosonic[i + 1][0] for i in range(len(bosonic) - 1)):
            raise InvalidIndexError(f"nonfermionic blocks must be sorted by minimum: {self.blocks}")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Supercomposition":
        """Keep the fermionic order, sort the rest by minimum"""
        made = [make_block(b) for b in blocks]
        fermionic = [b for b in made if is_fermionic(b)]
        bosonic = sorted((b for b in made if not is_fermionic(b)), key=lambda b: b[0])
        return cls(tuple(fermionic) + tuple(bosonic))

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "Supercomposition":
        return cls.from_blocks(blocks)

    @property
    def fermionic(self) -> Tuple[Block, ...]:
        return tuple(b for b in self.blocks if b[0] == 0)

    @property
    def bosonic(self) -> Tuple[Block, ...]:
        return tuple(b for b in self.blocks if b[0] != 0)

    @property
    def fermionic_degree(self) -> int:
        return sum(1 for b in self.blocks if b[0] == 0)

    @property
    def degree(self) -> int:
        return sum(len(positive_part(b)) for b in self.blocks)

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.degree, self.fermionic_degree

    def __len__(self) -> int:
        return len(self.blocks)

    def ground(self) -> Tuple[int, ...]:
        return tuple(sorted(e for b in self.blocks for e in positive_part(b)))

    def is_standard(self) -> bool:
        """True when the nonzero elements are exactly 1..n"""
        return self.ground() == tuple(range(1, self.degree + 1))

    def is_trivial(self) -> bool:
        """Two or more {0} blocks"""
        return sum(1 for b in self.blocks if b == (0,)) >= 2

    def is_set_superpartition(self) -> bool:
        keys = [block_key(b) for b in self.fermionic]
        return not self.is_trivial() and keys == sorted(keys)

    def positive_blocks(self) -> List[Block]:
        """The underlying collection K^+ of nonempty positive parts"""
        return [positive_part(b) for b in self.blocks if positive_part(b)]

    def __str__(self) -> str:
        return "(" + ",".join(format_block(b) for b in self.blocks) + ")"

    def __repr__(self) -> str:
        return f"Supercomposition{self}"


SetSuperpartition = Supercomposition


def zero(n: int, m: int) -> Supercomposition:
    """The minimum 0_{n,m}: m blocks {0} then singletons"""
    return Supercomposition(((0,),) * m + tuple((i,) for i in range(1, n + 1)))


def check_bidegree(*items: Supercomposition) -> Tuple[int, int]:
    bidegrees = {item.bidegree for item in items}
    if len(bidegrees) != 1:
        raise BidegreeError(f"bidegrees differ: {', '.join(str(i) for i in items)}")
    return bidegrees.pop()


# ---------------------------------------------------------------- enumeration

def set_partitions(n: int) -> List[Tuple[Block, ...]]:
    """Set partitions of [n] in restricted-growth-string order"""
    if n == 0:
        return [()]
    return [tuple(tuple(part) for part in p) for p in multiset_partitions(list(range(1, n + 1)))]


def _partitions_of(elements: Sequence[int]) -> List[List[List[int]]]:
    if len(elements) == 1:
        return [[list(elements)]]
    return list(multiset_partitions(list(elements)))


def bar(K: Supercomposition) -> Tuple[int, Supercomposition]:
    """Drop repeated {0} blocks and sort the fermionic ones.

    Returns the sign of the sorting permutation with the canonical object.
    """
    fermionic: List[Block] = []
    for block in K.fermionic:
        if block == (0,) and block in fermionic:
            continue
        fermionic.append(block)
    keys = [block_key(b) for b in fermionic]
    sign = sorting_sign(keys)
    ordered = sorted(fermionic, key=block_key)
    return sign, Supercomposition(tuple(ordered) + K.bosonic)


def canonical_term(K: Supercomposition) -> Optional[Tuple[int, Supercomposition]]:
    """(sign, bar(K)), or None when basis functions indexed by K vanish"""
    if K.is_trivial():
        return None
    return bar(K)


def set_superpartitions(n: int, m: int) -> List[Supercomposition]:
    """All of sP_{n,m}.

    Zeros are inserted into blocks of each set partition of [n] following
    lexicographic masks; a leading {0} makes up one missing fermionic block.
    """
    result = []
    for partition in set_partitions(n):
        for mask in product((0, 1), repeat=len(partition)):
            chosen = sum(mask)
            if chosen not in (m, m - 1):
                continue
            blocks = [((0,) + b) if bit else b for b, bit in zip(partition, mask)]
            if chosen == m - 1:
                blocks.insert(0, (0,))
            result.append(bar(Supercomposition.from_blocks(blocks))[1])
    return result


def all_set_superpartitions(n: int) -> List[Supercomposition]:
    result = []
    for m in range(n + 2):
        result.extend(set_superpartitions(n, m))
    return result


def count_set_superpartitions(n: int) -> int:
    return len(all_set_superpartitions(n))


def supercompositions(n: int, m: int) -> List[Supercomposition]:
    """All of sC_{n,m}, trivial ones and every fermionic ordering included"""
    result = []
    for partition in set_partitions(n):
        for j in range(min(m, len(partition)) + 1):
            for chosen in combinations(range(len(partition)), j):
                fermionic = [(0,)] * (m - j) + [(0,) + partition[c] for c in chosen]
                rest = tuple(b for i, b in enumerate(partition) if i not in chosen)
                # distinct blocks get distinct labels so repeated {0} are not permuted
                labels = [0] * (m - j) + list(range(1, j + 1))
                for arrangement in multiset_permutations(labels):
                    blocks = tuple(fermionic[(m - j) + a - 1] if a else (0,) for a in arrangement)
                    result.append(Supercomposition(blocks + rest))
    return result


# ---------------------------------------------------------------- actions

def act_fermionic(sigma: Permutation, K: Supercomposition) -> Supercomposition:
    """sigma |> K: reorder the fermionic blocks as (K_sigma(1), ..., K_sigma(m))"""
    fermionic = K.fermionic
    if sorted(sigma) != list(range(1, len(fermionic) + 1)):
        raise InvalidIndexError(f"{sigma} is not a permutation of the {len(fermionic)} fermionic blocks")
    return Supercomposition(tuple(fermionic[s - 1] for s in sigma) + K.bosonic)


def act_positions(delta: Permutation, K: Supercomposition) -> Supercomposition:
    """delta o K: relabel every nonzero element j as delta(j)"""
    if sorted(delta) != list(range(1, len(delta) + 1)) or len(delta) < max(K.ground(), default=0):
        raise InvalidIndexError(f"{delta} is not a permutation of the ground set of {K}")
    return Supercomposition.from_blocks(
        tuple(delta[e - 1] if e else 0 for e in block) for block in K.blocks)


def shift(K: Supercomposition, r: int) -> Supercomposition:
    """K[r]: add r to every nonzero element"""
    return Supercomposition(tuple(tuple(e + r if e else 0 for e in block) for block in K.blocks))


def restrict(K: Supercomposition, A: Iterable[int]) -> Tuple[Block, ...]:
    """K minus A: remove the nonzero elements of A from every block, dropping emptied blocks"""
    removed = {a for a in A if a != 0}
    blocks = (tuple(e for e in block if e not in removed) for block in K.blocks)
    return tuple(b for b in blocks if b)


def standardize(K: Supercomposition) -> Tuple[Block, ...]:
    """Renumber the zeros 1..m by fermionic position and shift the rest by m"""
    m = K.fermionic_degree
    blocks = []
    for i, block in enumerate(K.blocks):
        renumbered = [i + 1 if e == 0 else e + m for e in block]
        blocks.append(tuple(sorted(renumbered)))
    return tuple(sorted(blocks, key=lambda b: b[0]))


def over_product(I: Supercomposition, J: Supercomposition) -> Supercomposition:
    """I/J: fermionic blocks of I then of J[n], then the remaining blocks"""
    shifted = shift(J, I.degree)
    return Supercomposition(I.fermionic + shifted.fermionic + I.bosonic + shifted.bosonic)


def is_convex(I: Supercomposition) -> bool:
    """Every positive part is an interval of consecutive integers"""
    return all(p[-1] - p[0] + 1 == len(p) for p in I.positive_blocks())


def convex_form(I: Supercomposition) -> Tuple[Permutation, Supercomposition]:
    """Write I as delta o J with J convex: label positive elements block by block"""
    labels = {}
    for block in I.blocks:
        for e in positive_part(block):
            labels[e] = len(labels) + 1
    J = Supercomposition(tuple(
        tuple(labels[e] if e else 0 for e in block) for block in I.blocks))
    delta = tuple(e for e, _ in sorted(labels.items(), key=lambda item: item[1]))
    return delta, J


# ---------------------------------------------------------------- orders

def _containing_block(blocks: Sequence[Block], element: int) -> Optional[int]:
    for index, block in enumerate(blocks):
        if element in block:
            return index
    return None


def is_strongly_coarser(K: Supercomposition, L: Supercomposition) -> bool:
    """K is below L: the i-th fermionic block of K lies in the i-th of L and
    every other block of K lies in some block of L"""
    if K.bidegree != L.bidegree or K.ground() != L.ground():
        return False
    for small, big in zip(K.fermionic, L.fermionic):
        if not set(small) <= set(big):
            return False
    for block in K.bosonic:
        index = _containing_block(L.blocks, block[0])
        if index is None or not set(block) <= set(L.blocks[index]):
            return False
    return True


def fermionic_matching(I: Supercomposition, J: Supercomposition) -> Optional[Permutation]:
    """sigma with I_i inside J_sigma(i) for every fermionic block, if any"""
    small, big = I.fermionic, J.fermionic
    if len(small) != len(big):
        return None
    for sigma in permutations(range(len(big))):
        if all(set(small[i]) <= set(big[sigma[i]]) for i in range(len(small))):
            return tuple(s + 1 for s in sigma)
    return None


def is_coarser(I: Supercomposition, J: Supercomposition) -> bool:
    """I below J by oplus-merging blocks (at most one fermionic per merge)"""
    if I.bidegree != J.bidegree or I.ground() != J.ground():
        return False
    for block in I.bosonic:
        index = _containing_block(J.blocks, block[0])
        if index is None or not set(block) <= set(J.blocks[index]):
            return False
    return fermionic_matching(I, J) is not None


def sigma_perm(I: Supercomposition, J: Supercomposition) -> Permutation:
    """The permutation matching fermionic blocks of I into those of J"""
    if not is_coarser(I, J):
        raise InvalidIndexError(f"{I} is not below {J}")
    return fermionic_matching(I, J)


def inv(I: Supercomposition, J: Supercomposition) -> int:
    return inversions(sigma_perm(I, J))


def meet(K: Supercomposition, L: Supercomposition) -> Supercomposition:
    """Greatest lower bound for the strong order"""
    check_bidegree(K, L)
    if K.ground() != L.ground():
        raise BidegreeError(f"{K} and {L} live on different ground sets")
    fermionic = [tuple(sorted(set(a) & set(b))) for a, b in zip(K.fermionic, L.fermionic)]
    used = {e for block in fermionic for e in block if e}
    left = [set(b) - used for b in K.positive_blocks()]
    right = [set(b) - used for b in L.positive_blocks()]
    rest = []
    for a in left:
        for b in right:
            common = a & b
            if common:
                rest.append(tuple(sorted(common)))
    return Supercomposition(tuple(fermionic) + tuple(sorted(rest, key=lambda b: b[0])))


def strong_refinements(L: Supercomposition) -> List[Supercomposition]:
    """Every K with K below L, L included"""
    choices = []
    for block in L.blocks:
        options = []
        for split in _partitions_of(block):
            parts = [tuple(part) for part in split]
            options.append(parts)
        choices.append(options)
    m = L.fermionic_degree
    result = []
    for pick in product(*choices):
        fermionic, bosonic = [], []
        for index, parts in enumerate(pick):
            for part in parts:
                if index < m and part[0] == 0:
                    fermionic.append(part)
                else:
                    bosonic.append(part)
        result.append(Supercomposition(tuple(fermionic) + tuple(sorted(bosonic, key=lambda b: b[0]))))
    return result


def strong_coarsenings(K: Supercomposition) -> List[Supercomposition]:
    """Every L with K below L, K included"""
    m = K.fermionic_degree
    result = []
    for grouping in _partitions_of(list(range(len(K.blocks)))) if K.blocks else [[]]:
        fermionic_groups = [g for g in grouping if any(i < m for i in g)]
        if any(sum(1 for i in g if i < m) > 1 for g in fermionic_groups):
            continue
        fermionic: List[Block] = [()] * m
        bosonic = []
        for group in grouping:
            merged = tuple(sorted(set().union(*(K.blocks[i] for i in group))))
            leader = [i for i in group if i < m]
            if leader:
                fermionic[leader[0]] = merged
            else:
                bosonic.append(merged)
        result.append(Supercomposition(tuple(fermionic) + tuple(sorted(bosonic, key=lambda b: b[0]))))
    return result


# ---------------------------------------------------------------- Mobius

def factorial(K: Supercomposition) -> int:
    """K! = product of |K_i|!, with 0 counted"""
    return prod(_factorial(len(b)) for b in K.blocks)


def sign(K: Supercomposition) -> int:
    """(-1)^K"""
    return -1 if sum(len(b) - 1 for b in K.blocks) % 2 else 1


def mobius_zero(K: Supercomposition) -> int:
    """mu(0_{n,m}, K)"""
    return prod((-1) ** (len(b) - 1) * _factorial(len(b) - 1) for b in K.blocks)


def mobius(K: Supercomposition, L: Supercomposition) -> int:
    """mu(K, L) in closed form; 0 unless K is below L"""
    if not is_strongly_coarser(K, L):
        return 0
    m = K.fermionic_degree
    counts = [1] * m + [0] * (len(L.blocks) - m)
    for block in K.bosonic:
        counts[_containing_block(L.blocks, block[0])] += 1
    return prod((-1) ** (b - 1) * _factorial(b - 1) for b in counts)


def interval(K: Supercomposition, L: Supercomposition) -> List[Supercomposition]:
    """All N with K below N below L"""
    if not is_strongly_coarser(K, L):
        return []
    return [N for N in strong_refinements(L) if is_strongly_coarser(K, N)]


@lru_cache(maxsize=None)
def mobius_recursive(K: Supercomposition, L: Supercomposition) -> int:
    """mu(K, L) from mu(K, K) = 1 and the vanishing of interval sums"""
    if K == L:
        return 1
    if not is_strongly_coarser(K, L):
        return 0
    return -sum(mobius_recursive(K, N) for N in interval(K, L) if N != L)


def chains(K: Supercomposition, L: Supercomposition) -> Iterator[Tuple[Supercomposition, ...]]:
    """Strictly increasing chains from K to L"""
    if K == L:
        yield (K,)
        return
    for N in interval(K, L):
        if N == K:
            continue
        for tail in chains(N, L):
            yield (K,) + tail


def mobius_by_chains(K: Supercomposition, L: Supercomposition) -> int:
    """Sum over chains of (-1)^(number of steps)"""
    return sum((-1) ** (len(chain) - 1) for chain in chains(K, L))


def count_chains(K: Supercomposition, L: Supercomposition) -> int:
    return sum(1 for _ in chains(K, L))


# ---------------------------------------------------------------- types

def fermionic_sizes(I: Supercomposition) -> List[int]:
    return [len(b) - 1 for b in I.fermionic]


def lambda_of(I: Supercomposition) -> Optional[Superpartition]:
    """Type of I, or None when two fermionic blocks have the same size"""
    sizes = fermionic_sizes(I)
    if len(set(sizes)) != len(sizes):
        return None
    return Superpartition.of(sizes, [len(b) for b in I.bosonic])


def epsilon(I: Supercomposition) -> Optional[int]:
    """Minimal number of transpositions sorting the fermionic sizes decreasingly"""
    sizes = fermionic_sizes(I)
    if len(set(sizes)) != len(sizes):
        return None
    target = {size: rank for rank, size in enumerate(sorted(sizes, reverse=True))}
    image = [target[size] for size in sizes]
    seen = [False] * len(image)
    cycles = 0
    for start in range(len(image)):
        if seen[start]:
            continue
        cycles += 1
        position = start
        while not seen[position]:
            seen[position] = True
            position = image[position]
    return len(image) - cycles


def epsilon_sign(I: Supercomposition) -> int:
    """(-1)^epsilon(I), 0 when the type is undefined"""
    e = epsilon(I)
    if e is None:
        return 0
    return -1 if e % 2 else 1


def set_superpartitions_of_type(shape: Superpartition) -> List[Supercomposition]:
    n, m = shape.bidegree
    return [I for I in set_superpartitions(n, m) if lambda_of(I) == shape]


def type_count(shape: Superpartition) -> int:
    return len(set_superpartitions_of_type(shape))
