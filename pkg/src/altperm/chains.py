"""Simplices and rational chains over subset-labelled vertices.

A vertex is a finite set of integers, stored as a sorted tuple.  A simplex
is a tuple of distinct vertices listed in canonical order (cardinality
first, lexicographic within equal cardinality); for the flag complexes used
here every simplex is an inclusion chain, so the canonical order coincides
with the inclusion order.  A chain is a dict mapping simplices to nonzero
``Fraction`` coefficients, with orientation signs folded into the
coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

Vertex = tuple[int, ...]
Simplex = tuple[Vertex, ...]
Chain = dict[Simplex, Fraction]

EMPTY_SIMPLEX: Simplex = ()


def vertex(elems: Iterable[int]) -> Vertex:
    return tuple(sorted(elems))


def sort_simplex(vertices: Iterable[Vertex]) -> Optional[tuple[Simplex, int]]:
    """Canonically order a vertex list, returning (simplex, sign).

    The sign is the parity of the sorting permutation.  Returns None for a
    degenerate list (repeated vertex).

    >>> sort_simplex([(3,), (1, 3, 4)])
    (((3,), (1, 3, 4)), 1)
    >>> sort_simplex([(1, 3, 4), (3,)])
    (((3,), (1, 3, 4)), -1)
    >>> sort_simplex([(3,), (3,)]) is None
    True
    """
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return None
    keyed = sorted(range(len(vs)), key=lambda i: (len(vs[i]), vs[i]))
    sign = perm_sign(keyed)
    return tuple(vs[i] for i in keyed), sign


def perm_sign(perm: Iterable[int]) -> int:
    """Sign of a permutation given in one-line form on 0..m-1.

    >>> perm_sign([0, 1, 2])
    1
    >>> perm_sign([1, 0, 2])
    -1
    """
    p = list(perm)
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def add_term(chain: Chain, simplex: Simplex, coeff: Fraction) -> None:
    new = chain.get(simplex, 0) + coeff
    if new:
        chain[simplex] = new
    else:
        chain.pop(simplex, None)


def add_chain(acc: Chain, other: Chain, scale: Fraction = Fraction(1)) -> None:
    for simplex, coeff in other.items():
        add_term(acc, simplex, coeff * scale)


def boundary(chain: Chain) -> Chain:
    """Boundary with the standard alternating face signs.

    The augmentation is included: a single vertex maps to the empty
    simplex, so cycles are reduced cycles.
    """
    out: Chain = {}
    for simplex, coeff in chain.items():
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            add_term(out, face, coeff * (-1) ** i)
    return out


def is_chain_of_simplices(simplex: Simplex) -> bool:
    """True when the vertices form a strict inclusion chain."""
    for a, b in zip(simplex, simplex[1:]):
        if not set(a) < set(b):
            return False
    return True
