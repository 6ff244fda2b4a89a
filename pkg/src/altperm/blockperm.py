"""Block permutations on even index sets.

A permutation of an even-cardinality set of positive integers is written in
two-element-block one-line notation: the entries are grouped into
consecutive pairs, rendered ``a,b/c,d/...`` in text form.  The degree-zero
unit is the empty permutation on the empty index set.

This module provides the combinatorics the rest of the package is built
on: the up-down (alternating) test and basis enumeration, Euler zigzag
numbers, the nested prefix sets attached to each position, the marker
simplex and the oriented cross-polytope cycle of a permutation, the
right-to-left block-sum order, and block normalization.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .chains import Chain, Simplex, Vertex

IndexSet = tuple[int, ...]


@dataclass(frozen=True)
class BlockPerm:
    """A permutation in block one-line notation.

    ``entries`` has even length and lists distinct positive integers; the
    index set is the sorted tuple of entries.

    >>> x = BlockPerm((1, 3, 2, 4))
    >>> str(x)
    '1,3/2,4'
    >>> x.index_set
    (1, 2, 3, 4)
    >>> x.k
    2
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) % 2 != 0:
            raise ValueError(f"odd number of entries: {self.entries}")
        if len(set(self.entries)) != len(self.entries):
            raise ValueError(f"repeated entries: {self.entries}")
        if any(e < 1 for e in self.entries):
            raise ValueError(f"entries must be positive: {self.entries}")

    @property
    def index_set(self) -> IndexSet:
        return tuple(sorted(self.entries))

    @property
    def k(self) -> int:
        return len(self.entries) // 2

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        e = self.entries
        return tuple((e[2 * i], e[2 * i + 1]) for i in range(self.k))

    def __str__(self) -> str:
        return format_perm(self)

    @staticmethod
    def parse(text: str) -> "BlockPerm":
        return parse_perm(text)


EMPTY_PERM = BlockPerm(())


def make_block_perm(index_set: Iterable[int], entries: Sequence[int]) -> BlockPerm:
    """Validated construction against an explicit index set.

    >>> make_block_perm({2, 3, 5, 6, 7, 9}, [7, 9, 5, 6, 2, 3])
    BlockPerm(entries=(7, 9, 5, 6, 2, 3))
    """
    x = BlockPerm(tuple(entries))
    expected = tuple(sorted(index_set))
    if x.index_set != expected:
        raise ValueError(f"entries {tuple(entries)} do not permute {expected}")
    return x


def parse_perm(text: str) -> BlockPerm:
    """Parse the ``a,b/c,d/...`` text form; empty string is the unit."""
    text = text.strip()
    if not text:
        return EMPTY_PERM
    entries: list[int] = []
    for block in text.split("/"):
        parts = [p for p in block.split(",") if p.strip()]
        if len(parts) != 2:
            raise ValueError(f"each block needs two entries: {block!r}")
        entries.extend(int(p) for p in parts)
    return BlockPerm(tuple(entries))


def format_perm(x: BlockPerm) -> str:
    return "/".join(f"{a},{b}" for a, b in x.blocks)


def parse_index_set(text: str) -> IndexSet:
    text = text.strip()
    if not text:
        return ()
    elems = tuple(int(p) for p in text.split(",") if p.strip())
    return validate_index_set(elems)


def format_index_set(I: IndexSet) -> str:
    return ",".join(str(e) for e in I)


def validate_index_set(elems: Iterable[int]) -> IndexSet:
    I = tuple(sorted(elems))
    if len(set(I)) != len(I):
        raise ValueError(f"repeated elements: {elems}")
    if len(I) % 2 != 0:
        raise ValueError(f"index set must have even cardinality: {I}")
    if any(e < 1 for e in I):
        raise ValueError(f"elements must be positive: {I}")
    return I


def is_alternating(x: BlockPerm) -> bool:
    """Up-down test: e1 < e2 > e3 < e4 > ...

    >>> is_alternating(parse_perm("1,3/2,4"))
    True
    >>> is_alternating(parse_perm("1,2/3,4"))
    False
    >>> is_alternating(EMPTY_PERM)
    True
    """
    e = x.entries
    for i in range(len(e) - 1):
        if i % 2 == 0:
            if not e[i] < e[i + 1]:
                return False
        else:
            if not e[i] > e[i + 1]:
                return False
    return True


def prec_key(x: BlockPerm) -> tuple[int, ...]:
    """Block sums read from the last block to the first."""
    return tuple(a + b for a, b in reversed(x.blocks))


def prec_less(x: BlockPerm, y: BlockPerm) -> bool:
    """Strict right-to-left lexicographic order on block sums.

    Permutations with equal block-sum vectors are incomparable.

    >>> prec_less(parse_perm("1,3/2,4"), parse_perm("1,2/3,4"))
    True
    >>> prec_less(parse_perm("1,4/2,3"), parse_perm("2,3/1,4"))
    False
    """
    if x.index_set != y.index_set:
        raise ValueError("comparing permutations on different index sets")
    kx, ky = prec_key(x), prec_key(y)
    return kx != ky and kx < ky


def sort_key(x: BlockPerm) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Deterministic total order refining the block-sum order."""
    return (prec_key(x), x.entries)


def alt_basis(I: Iterable[int]) -> list[BlockPerm]:
    """All alternating permutations on I, largest block-sum vector first.

    Ties in the block-sum vector are broken by ascending entries.

    >>> [str(a) for a in alt_basis({1, 2, 3, 4})]
    ['1,3/2,4', '1,4/2,3', '2,3/1,4', '2,4/1,3', '3,4/1,2']
    >>> alt_basis(()) == [EMPTY_PERM]
    True
    """
    elems = validate_index_set(I)
    out = [BlockPerm(tuple(e)) for e in _alternating_sequences(elems)]
    out.sort(key=lambda a: a.entries)
    out.sort(key=prec_key, reverse=True)
    return out


def _alternating_sequences(elems: IndexSet) -> Iterator[tuple[int, ...]]:
    n = len(elems)
    if n == 0:
        yield ()
        return
    seq: list[int] = []
    used = [False] * n

    def place(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(seq)
            return
        for i in range(n):
            if used[i]:
                continue
            v = elems[i]
            if pos > 0:
                prev = seq[-1]
                if pos % 2 == 1 and not v > prev:
                    continue
                if pos % 2 == 0 and not v < prev:
                    continue
            used[i] = True
            seq.append(v)
            yield from place(pos + 1)
            seq.pop()
            used[i] = False

    yield from place(0)


def all_perms(I: Iterable[int]) -> Iterator[BlockPerm]:
    elems = validate_index_set(I)
    for p in itertools.permutations(elems):
        yield BlockPerm(p)


def ascending_perms(I: Iterable[int]) -> Iterator[BlockPerm]:
    """Permutations whose blocks are internally ascending."""
    for x in all_perms(I):
        if all(a < b for a, b in x.blocks):
            yield x


@lru_cache(maxsize=None)
def euler_zigzag(m: int) -> int:
    """Euler zigzag number a_m via the boustrophedon recurrence.

    Counts the up-down permutations of an m-element totally ordered set.

    >>> [euler_zigzag(m) for m in range(0, 11, 2)]
    [1, 1, 5, 61, 1385, 50521]
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    row = [1]
    for _ in range(m):
        prev = row
        row = [0]
        for v in reversed(prev):
            row.append(row[-1] + v)
    return row[-1]


def prefix_set(x: BlockPerm, i: int) -> Vertex:
    """The nested set attached to 1-based position i.

    Positions 1 and 2 give the singleton; position i >= 3 gives all entries
    of the preceding complete blocks together with the entry at i.

    >>> prefix_set(parse_perm("1,5/3,4"), 3)
    (1, 3, 5)
    >>> prefix_set(parse_perm("1,5/3,4"), 1)
    (1,)
    """
    e = x.entries
    if not 1 <= i <= len(e):
        raise ValueError(f"position {i} out of range 1..{len(e)}")
    if i <= 2:
        return (e[i - 1],)
    head = 2 * ((i - 1) // 2)
    return tuple(sorted(e[:head] + (e[i - 1],)))


def marker_simplex(x: BlockPerm) -> Simplex:
    """The inclusion chain of odd-position prefix sets.

    This simplex detects which cross-polytope cycles contain x's pattern:
    it is a facet of ``cross_cycle(y)``'s support exactly when x arises
    from y by junction and block swaps.

    >>> marker_simplex(parse_perm("7,9/5,6/2,3"))
    ((7,), (5, 7, 9), (2, 5, 6, 7, 9))
    """
    if x.k == 0:
        raise ValueError("the empty permutation has no marker simplex")
    return tuple(prefix_set(x, 2 * i + 1) for i in range(x.k))


def cross_cycle(x: BlockPerm) -> Chain:
    """Oriented fundamental cycle of the cross-polytope boundary.

    The signed expansion of the formal product of (odd prefix set minus
    even prefix set) over the blocks, each simplex listed with vertices in
    block order, which is the inclusion order.

    >>> chain = cross_cycle(parse_perm("1,2"))
    >>> sorted(chain.items())
    [(((1,),), Fraction(1, 1)), (((2,),), Fraction(-1, 1))]
    """
    if x.k == 0:
        raise ValueError("the empty permutation has no cross-polytope cycle")
    pairs = [(prefix_set(x, 2 * i + 1), prefix_set(x, 2 * i + 2)) for i in range(x.k)]
    out: Chain = {}
    for choice in itertools.product((0, 1), repeat=x.k):
        simplex = tuple(pairs[i][c] for i, c in enumerate(choice))
        sign = -1 if sum(choice) % 2 else 1
        out[simplex] = Fraction(sign)
    return out


def block_normalize(x: BlockPerm) -> tuple[BlockPerm, int]:
    """Sort each block ascending; sign is the parity of swapped blocks.

    >>> block_normalize(parse_perm("2,1/3,4"))
    (BlockPerm(entries=(1, 2, 3, 4)), -1)
    >>> block_normalize(parse_perm("2,1/4,3"))
    (BlockPerm(entries=(1, 2, 3, 4)), 1)
    """
    entries: list[int] = []
    swaps = 0
    for a, b in x.blocks:
        if a > b:
            a, b = b, a
            swaps += 1
        entries.extend((a, b))
    return BlockPerm(tuple(entries)), (-1 if swaps % 2 else 1)
