"""Straightening onto the alternating basis.

The quotient of the rational span of all block permutations on an index
set by two relation families:

  (1) swapping the two entries of any block negates a permutation, and
  (2) the five-term Garnir exchange across any junction of two adjacent
      blocks, which rewrites the unique ascending pattern ``(ab/cd)`` with
      a < b < c < d as ``(ac/bd) - (ad/bc) - (bc/ad) + (bd/ac) - (cd/ab)``.

Every class has a unique normal form supported on alternating
permutations; ``normal_form`` computes it by block normalization followed
by repeated Garnir expansion at a violating junction.  All coefficients
are exact rationals.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .blockperm import (
    BlockPerm,
    IndexSet,
    alt_basis,
    block_normalize,
    is_alternating,
    parse_perm,
    prec_key,
    validate_index_set,
)

Coeff = Union[int, Fraction]

RIGHTMOST = "rightmost"
LEFTMOST = "leftmost"


class FormalSum:
    """A finite rational combination of block permutations on one index set.

    Immutable in use: arithmetic returns new sums.  Zero coefficients are
    never stored.
    """

    __slots__ = ("index_set", "_terms")

    def __init__(self, index_set: Iterable[int], terms: Optional[Mapping[BlockPerm, Coeff]] = None):
        self.index_set: IndexSet = validate_index_set(index_set)
        clean: dict[BlockPerm, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            if perm.index_set != self.index_set:
                raise ValueError(f"{perm} is not a permutation of {self.index_set}")
            c = Fraction(coeff)
            if c:
                clean[perm] = c
        self._terms = clean

    @staticmethod
    def single(perm: BlockPerm, coeff: Coeff = 1) -> "FormalSum":
        return FormalSum(perm.index_set, {perm: coeff})

    def items(self):
        return self._terms.items()

    def coeff(self, perm: BlockPerm) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def support(self) -> set[BlockPerm]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_alternating_support(self) -> bool:
        return all(is_alternating(p) for p in self._terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if other.index_set != self.index_set:
            raise ValueError("index set mismatch")
        terms = dict(self._terms)
        for perm, coeff in other.items():
            new = terms.get(perm, 0) + coeff
            if new:
                terms[perm] = new
            else:
                terms.pop(perm, None)
        return FormalSum(self.index_set, terms)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def scale(self, c: Coeff) -> "FormalSum":
        c = Fraction(c)
        return FormalSum(self.index_set, {p: v * c for p, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormalSum)
            and self.index_set == other.index_set
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.index_set, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"FormalSum({self.index_set}, 0)"
        parts = [f"{c}*({p})" for p, c in sorted(self.items(), key=lambda t: t[0].entries)]
        return "FormalSum(" + " + ".join(parts) + ")"

    def to_json(self) -> list[dict]:
        items = sorted(self.items(), key=lambda t: t[0].entries)
        return [{"coeff": str(c), "perm": str(p)} for p, c in items]

    @staticmethod
    def from_json(index_set: Iterable[int], data: Iterable[Mapping]) -> "FormalSum":
        terms: dict[BlockPerm, Fraction] = {}
        for item in data:
            perm = parse_perm(item["perm"])
            terms[perm] = terms.get(perm, Fraction(0)) + Fraction(item["coeff"])
        return FormalSum(index_set, terms)


AltVector = FormalSum  # normal forms: every key passes is_alternating


def garnir_expand(x: BlockPerm, i: int) -> FormalSum:
    """Five-term replacement across the junction of blocks i and i+1.

    Requires blocks internally ascending and the junction violated
    (entry 2i < entry 2i+1, 1-based), so the four active entries read
    a < b < c < d in place.  Every output term is strictly smaller in the
    right-to-left block-sum order.

    >>> s = garnir_expand(parse_perm("1,2/3,4"), 1)
    >>> [(str(p), int(c)) for p, c in sorted(s.items(), key=lambda t: t[0].entries)]
    [('1,3/2,4', 1), ('1,4/2,3', -1), ('2,3/1,4', -1), ('2,4/1,3', 1), ('3,4/1,2', -1)]
    """
    if not 1 <= i <= x.k - 1:
        raise ValueError(f"junction {i} out of range for {x}")
    if not all(a < b for a, b in x.blocks):
        raise ValueError(f"{x} has a descending block")
    e = x.entries
    a, b, c, d = e[2 * i - 2: 2 * i + 2]
    if not b < c:
        raise ValueError(f"junction {i} of {x} is not violated")
    head, tail = e[: 2 * i - 2], e[2 * i + 2:]
    patterns = (
        ((a, c, b, d), 1),
        ((a, d, b, c), -1),
        ((b, c, a, d), -1),
        ((b, d, a, c), 1),
        ((c, d, a, b), -1),
    )
    terms = {BlockPerm(head + mid + tail): Fraction(sign) for mid, sign in patterns}
    return FormalSum(x.index_set, terms)


def _violations(x: BlockPerm) -> list[int]:
    e = x.entries
    return [i for i in range(1, x.k) if e[2 * i - 1] < e[2 * i]]


def normal_form(
    s: Union[FormalSum, BlockPerm],
    strategy: str = RIGHTMOST,
    table: Optional["NormalFormTable"] = None,
) -> FormalSum:
    """Unique alternating-support normal form of a formal sum.

    Block-normalizes every term, then repeatedly expands the chosen
    violating junction (rightmost by default) until every term is
    alternating, combining like terms eagerly.

    >>> nf = normal_form(parse_perm("2,1/3,4"))
    >>> nf.coeff(parse_perm("1,3/2,4"))
    Fraction(-1, 1)
    """
    if isinstance(s, BlockPerm):
        s = FormalSum.single(s)
    if strategy not in (RIGHTMOST, LEFTMOST):
        raise ValueError(f"unknown strategy {strategy!r}")

    pending: dict[BlockPerm, Fraction] = {}
    for perm, coeff in s.items():
        norm, sign = block_normalize(perm)
        new = pending.get(norm, 0) + coeff * sign
        if new:
            pending[norm] = new
        else:
            pending.pop(norm, None)

    if table is not None:
        out = FormalSum(s.index_set)
        for perm, coeff in pending.items():
            out = out + table.lookup(perm).scale(coeff)
        return out

    done: dict[BlockPerm, Fraction] = {}
    while pending:
        perm, coeff = pending.popitem()
        junctions = _violations(perm)
        if not junctions:
            new = done.get(perm, 0) + coeff
            if new:
                done[perm] = new
            else:
                done.pop(perm, None)
            continue
        j = max(junctions) if strategy == RIGHTMOST else min(junctions)
        for term, sign in garnir_expand(perm, j).items():
            new = pending.get(term, 0) + coeff * sign
            if new:
                pending[term] = new
            else:
                pending.pop(term, None)
    return FormalSum(s.index_set, done)


def rewrite_coeff(alpha: BlockPerm, x: BlockPerm, table: Optional["NormalFormTable"] = None) -> Fraction:
    """Coefficient of the alternating permutation alpha in x's normal form."""
    if not is_alternating(alpha):
        raise ValueError(f"{alpha} is not alternating")
    if alpha.index_set != x.index_set:
        raise ValueError("index set mismatch")
    return normal_form(x, table=table).coeff(alpha)


class NormalFormTable:
    """Memoized normal forms of every ascending-block permutation on I.

    Filled lazily in block-sum order; safe to reuse across queries on a
    fixed index set.
    """

    def __init__(self, I: Iterable[int]):
        self.index_set = validate_index_set(I)
        self._cache: dict[BlockPerm, FormalSum] = {}

    def lookup(self, perm: BlockPerm) -> FormalSum:
        if perm.index_set != self.index_set:
            raise ValueError("index set mismatch")
        if not all(a < b for a, b in perm.blocks):
            raise ValueError(f"{perm} has a descending block")
        cached = self._cache.get(perm)
        if cached is not None:
            return cached
        stack = [perm]
        while stack:
            top = stack[-1]
            if top in self._cache:
                stack.pop()
                continue
            junctions = _violations(top)
            if not junctions:
                self._cache[top] = FormalSum.single(top)
                stack.pop()
                continue
            expansion = garnir_expand(top, max(junctions))
            missing = [t for t in expansion.support() if t not in self._cache]
            if missing:
                stack.extend(missing)
                continue
            acc = FormalSum(self.index_set)
            for term, sign in expansion.items():
                acc = acc + self._cache[term].scale(sign)
            self._cache[top] = acc
            stack.pop()
        return self._cache[perm]


def block_swap_relation(x: BlockPerm, i: int) -> FormalSum:
    """Generator of the first relation family at block i (1-based)."""
    if not 1 <= i <= x.k:
        raise ValueError(f"block {i} out of range for {x}")
    e = list(x.entries)
    e[2 * i - 2], e[2 * i - 1] = e[2 * i - 1], e[2 * i - 2]
    return FormalSum(x.index_set, {x: Fraction(1)}) + FormalSum.single(BlockPerm(tuple(e)))


def garnir_relation(x: BlockPerm, i: int) -> FormalSum:
    """Generator of the second relation family at the junction of blocks i, i+1.

    Built from x's four active entries in place, without sorting, so the
    family ranges over all permutations.
    """
    if not 1 <= i <= x.k - 1:
        raise ValueError(f"junction {i} out of range for {x}")
    e = x.entries
    p, q, r, s = e[2 * i - 2: 2 * i + 2]
    head, tail = e[: 2 * i - 2], e[2 * i + 2:]
    patterns = (
        ((p, q, r, s), 1),
        ((p, r, q, s), -1),
        ((p, s, q, r), 1),
        ((q, r, p, s), 1),
        ((q, s, p, r), -1),
        ((r, s, p, q), 1),
    )
    terms: dict[BlockPerm, Fraction] = {}
    for mid, sign in patterns:
        perm = BlockPerm(head + mid + tail)
        terms[perm] = terms.get(perm, Fraction(0)) + sign
    return FormalSum(x.index_set, terms)


def coefficient_table(I: Iterable[int], table: Optional[NormalFormTable] = None) -> dict[BlockPerm, FormalSum]:
    """Normal form of every ascending-block permutation on I."""
    I = validate_index_set(I)
    table = table or NormalFormTable(I)
    from .blockperm import ascending_perms

    return {x: table.lookup(x) for x in ascending_perms(I)}


def zero_sum(I: Iterable[int]) -> FormalSum:
    return FormalSum(I)


def unit_vector(I: Iterable[int]) -> FormalSum:
    """Sum of nothing on a nonempty set, or the unit on the empty set."""
    I = validate_index_set(I)
    if I:
        return FormalSum(I)
    return FormalSum((), {BlockPerm(()): 1})


def alt_coefficients(s: FormalSum) -> list[Fraction]:
    """Coefficient vector of a normal-form sum in alt_basis order."""
    return [s.coeff(a) for a in alt_basis(s.index_set)]
