"""The graded ring on alternating permutations.

A class of ambient rank n is a finite sum of components indexed by even
subsets of [n+1]; each component is a normal-form vector on its index set.
The product of basis elements on disjoint index sets is a signed sum over
the restrictable alternating permutations of the union, the sign being the
parity of the block shuffle that separates the two factors; components on
intersecting index sets multiply to zero.  The symmetric group on [n+1]
acts by relabelling followed by straightening.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .blockperm import (
    BlockPerm,
    IndexSet,
    alt_basis,
    is_alternating,
    parse_index_set,
    parse_perm,
    validate_index_set,
)
from .chains import perm_sign
from .straighten import FormalSum, NormalFormTable, normal_form

Coeff = Union[int, Fraction]


def is_restrictable(z: BlockPerm, I1: Iterable[int], I2: Iterable[int]) -> bool:
    """True when every block of z lies wholly in I1 or wholly in I2.

    >>> is_restrictable(parse_perm("1,4/2,5/3,6"), (1, 3, 4, 6), (2, 5))
    True
    >>> is_restrictable(parse_perm("1,5/3,4/2,6"), (1, 3, 4, 6), (2, 5))
    False
    """
    I1 = validate_index_set(I1)
    I2 = validate_index_set(I2)
    s1, s2 = set(I1), set(I2)
    if s1 & s2:
        raise ValueError("index sets overlap")
    if set(z.entries) != s1 | s2:
        raise ValueError(f"{z} is not a permutation of the union")
    for a, b in z.blocks:
        if not ({a, b} <= s1 or {a, b} <= s2):
            return False
    return True


def restrict_perm(z: BlockPerm, J: Iterable[int]) -> BlockPerm:
    """Subpermutation on J, re-blocked in order.

    >>> str(restrict_perm(parse_perm("1,4/2,5/3,6"), (1, 3, 4, 6)))
    '1,4/3,6'
    """
    J = validate_index_set(J)
    jset = set(J)
    if not jset <= set(z.entries):
        raise ValueError(f"{J} is not contained in the index set of {z}")
    picked = tuple(e for e in z.entries if e in jset)
    return BlockPerm(picked)


def rearrangement_sign(z: BlockPerm, I1: Iterable[int], I2: Iterable[int]) -> int:
    """Sign of the block shuffle separating the I1 blocks from the I2 blocks.

    >>> rearrangement_sign(parse_perm("1,4/2,5/3,6"), (1, 3, 4, 6), (2, 5))
    -1
    """
    if not is_restrictable(z, I1, I2):
        raise ValueError(f"{z} is not restrictable to the given sets")
    s1 = set(validate_index_set(I1))
    labels = [1 if a in s1 else 2 for a, _ in z.blocks]
    positions1 = [i for i, l in enumerate(labels) if l == 1]
    positions2 = [i for i, l in enumerate(labels) if l == 2]
    return perm_sign(positions1 + positions2)


class _CupCache:
    """Per grade pair: the restrictable permutations with their shuffle
    signs and the normal forms of their two restrictions.

    Fills are idempotent; a lock keeps concurrent fills single-writer.
    """

    def __init__(self):
        self._data: dict[tuple[IndexSet, IndexSet], list] = {}
        self._tables: dict[IndexSet, NormalFormTable] = {}
        self._lock = threading.Lock()

    def table(self, I: IndexSet) -> NormalFormTable:
        table = self._tables.get(I)
        if table is None:
            with self._lock:
                table = self._tables.setdefault(I, NormalFormTable(I))
        return table

    def entries(self, I1: IndexSet, I2: IndexSet) -> list:
        key = (I1, I2)
        cached = self._data.get(key)
        if cached is not None:
            return cached
        union = validate_index_set(set(I1) | set(I2))
        t1, t2 = self.table(I1), self.table(I2)
        rows = []
        for z in alt_basis(union):
            if not is_restrictable(z, I1, I2):
                continue
            sign = rearrangement_sign(z, I1, I2)
            r1 = normal_form(restrict_perm(z, I1), table=t1)
            r2 = normal_form(restrict_perm(z, I2), table=t2)
            rows.append((z, sign, r1, r2))
        with self._lock:
            return self._data.setdefault(key, rows)


_CUP_CACHE = _CupCache()


def cup(a: FormalSum, b: FormalSum) -> FormalSum:
    """Product of two normal-form vectors; zero when the grades intersect.

    Bilinear over the basis formula: the coefficient of a restrictable z is
    the shuffle sign times the two straightening coefficients of its
    restrictions.

    >>> one = FormalSum((), {BlockPerm(()): 1})
    >>> v = FormalSum((2, 5), {parse_perm("2,5"): 1})
    >>> cup(one, v) == v
    True
    """
    I1, I2 = a.index_set, b.index_set
    if set(I1) & set(I2):
        diff = validate_index_set(set(I1) ^ set(I2))
        return FormalSum(diff)
    union = validate_index_set(set(I1) | set(I2))
    if a.is_zero() or b.is_zero():
        return FormalSum(union)
    terms: dict[BlockPerm, Fraction] = {}
    for z, sign, r1, r2 in _CUP_CACHE.entries(I1, I2):
        left = sum((c * r1.coeff(p) for p, c in a.items()), Fraction(0))
        if not left:
            continue
        right = sum((c * r2.coeff(p) for p, c in b.items()), Fraction(0))
        value = sign * left * right
        if value:
            terms[z] = value
    return FormalSum(union, terms)


class GradedClass:
    """A finite sum of graded components inside one ambient rank."""

    def __init__(self, n: int, components: Optional[Mapping[IndexSet, FormalSum]] = None):
        if n < 1:
            raise ValueError("ambient rank must be positive")
        self.n = n
        comps: dict[IndexSet, FormalSum] = {}
        for I, vec in (components or {}).items():
            I = validate_index_set(I)
            if any(e > n + 1 for e in I):
                raise ValueError(f"{I} is not a subset of [{n + 1}]")
            if vec.index_set != I:
                raise ValueError("component vector on the wrong index set")
            if not vec.is_zero():
                comps[I] = vec
        self.components = comps

    @staticmethod
    def unit(n: int) -> "GradedClass":
        return GradedClass(n, {(): FormalSum((), {BlockPerm(()): 1})})

    @staticmethod
    def from_perm(n: int, perm: BlockPerm, coeff: Coeff = 1) -> "GradedClass":
        vec = normal_form(FormalSum.single(perm, coeff))
        return GradedClass(n, {perm.index_set: vec})

    def is_zero(self) -> bool:
        return not self.components

    def component(self, I: Iterable[int]) -> FormalSum:
        I = validate_index_set(I)
        return self.components.get(I, FormalSum(I))

    def __add__(self, other: "GradedClass") -> "GradedClass":
        if other.n != self.n:
            raise ValueError("ambient rank mismatch")
        comps = dict(self.components)
        for I, vec in other.components.items():
            comps[I] = comps[I] + vec if I in comps else vec
        return GradedClass(self.n, comps)

    def scale(self, c: Coeff) -> "GradedClass":
        return GradedClass(self.n, {I: v.scale(c) for I, v in self.components.items()})

    def __sub__(self, other: "GradedClass") -> "GradedClass":
        return self + other.scale(-1)

    def __mul__(self, other: "GradedClass") -> "GradedClass":
        if other.n != self.n:
            raise ValueError("ambient rank mismatch")
        out = GradedClass(self.n)
        acc: dict[IndexSet, FormalSum] = {}
        for I1, v1 in self.components.items():
            for I2, v2 in other.components.items():
                if set(I1) & set(I2):
                    continue
                product = cup(v1, v2)
                if product.is_zero():
                    continue
                I = product.index_set
                acc[I] = acc[I] + product if I in acc else product
        return GradedClass(self.n, acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedClass)
            and self.n == other.n
            and self.components == other.components
        )

    def __repr__(self):
        if not self.components:
            return f"GradedClass(n={self.n}, 0)"
        parts = []
        for I in sorted(self.components):
            parts.append(f"[{','.join(map(str, I))}]: {self.components[I]!r}")
        return f"GradedClass(n={self.n}, " + "; ".join(parts) + ")"

    def to_json(self) -> dict:
        comps = []
        for I in sorted(self.components):
            comps.append({
                "index_set": ",".join(str(e) for e in I),
                "terms": self.components[I].to_json(),
            })
        return {"n": self.n, "components": comps}

    @staticmethod
    def from_json(data: Mapping) -> "GradedClass":
        comps: dict[IndexSet, FormalSum] = {}
        for comp in data["components"]:
            I = parse_index_set(comp["index_set"])
            comps[I] = FormalSum.from_json(I, comp["terms"])
        return GradedClass(int(data["n"]), comps)


def ring_multiply(u: GradedClass, v: GradedClass) -> GradedClass:
    return u * v


def apply_relabel(w: Sequence[int], perm: BlockPerm) -> BlockPerm:
    """Relabel entries by the [n+1] bijection w (w[i-1] is the image of i)."""
    return BlockPerm(tuple(w[e - 1] for e in perm.entries))


def weyl_act(w: Sequence[int], u: GradedClass) -> GradedClass:
    """Relabel every basis permutation, then straighten each component.

    >>> u = GradedClass.from_perm(3, parse_perm("1,3/2,4"))
    >>> v = weyl_act((2, 1, 3, 4), u)
    >>> sorted(str(p) for p in v.component((1, 2, 3, 4)).support())
    ['2,3/1,4']
    """
    if sorted(w) != list(range(1, u.n + 2)):
        raise ValueError(f"{w} is not a bijection of [{u.n + 1}]")
    comps: dict[IndexSet, FormalSum] = {}
    for I, vec in u.components.items():
        J = validate_index_set(w[e - 1] for e in I)
        acc = FormalSum(J)
        for perm, coeff in vec.items():
            acc = acc + normal_form(FormalSum.single(apply_relabel(w, perm), coeff))
        comps[J] = comps[J] + acc if J in comps else acc
    return GradedClass(u.n, comps)
