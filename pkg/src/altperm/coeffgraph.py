"""Weighted digraph route to straightening coefficients.

Arcs run from alternating permutations to every permutation whose
cross-polytope cycle contains the source's marker simplex as a facet.
Each arc carries a 0/1 weight from the parity of the block-swap part of
the unique (junction swaps, block swaps) factorization connecting the two
permutations.  The signed count of directed walks then reproduces the
straightening coefficients, by two routes: explicit walk enumeration and
a memoized recursion over the acyclic non-loop arcs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .blockperm import (
    BlockPerm,
    IndexSet,
    alt_basis,
    is_alternating,
    prec_key,
    sort_key,
    validate_index_set,
)


@dataclass(frozen=True)
class FaceDecomposition:
    """Junction swaps and block swaps with tau*sigma*source = target.

    ``junction_swaps`` lists the 1-based junctions i whose positions
    2i, 2i+1 are exchanged; ``block_swaps`` lists the 1-based blocks whose
    two entries are exchanged afterwards.
    """

    junction_swaps: tuple[int, ...]
    block_swaps: tuple[int, ...]

    @property
    def tau_parity(self) -> int:
        return len(self.block_swaps) % 2

    def apply(self, x: BlockPerm) -> BlockPerm:
        e = list(x.entries)
        for i in self.junction_swaps:
            e[2 * i - 1], e[2 * i] = e[2 * i], e[2 * i - 1]
        for i in self.block_swaps:
            e[2 * i - 2], e[2 * i - 1] = e[2 * i - 1], e[2 * i - 2]
        return BlockPerm(tuple(e))


def face_decompose(x: BlockPerm, y: BlockPerm) -> Optional[FaceDecomposition]:
    """Junction-by-junction scan; None when x's marker is not a facet of y's cycle.

    Scans the junctions left to right: each one is forced by matching the
    current block against y's block, then the per-block swaps are read off.
    """
    if x.index_set != y.index_set:
        raise ValueError("index set mismatch")
    k = x.k
    if k == 0:
        return FaceDecomposition((), ())
    w = list(x.entries)
    t = y.entries
    junctions = []
    for i in range(1, k):
        lo, hi = 2 * i - 2, 2 * i - 1
        if {w[lo], w[hi]} != {t[lo], t[hi]}:
            w[hi], w[hi + 1] = w[hi + 1], w[hi]
            if {w[lo], w[hi]} != {t[lo], t[hi]}:
                return None
            junctions.append(i)
    if {w[2 * k - 2], w[2 * k - 1]} != {t[2 * k - 2], t[2 * k - 1]}:
        return None
    blocks = tuple(
        i for i in range(1, k + 1) if w[2 * i - 2] != t[2 * i - 2]
    )
    return FaceDecomposition(tuple(junctions), blocks)


def arc_weight(alpha: BlockPerm, x: BlockPerm) -> int:
    """0 when the block-swap part is odd, 1 when it is even."""
    if not is_alternating(alpha):
        raise ValueError(f"{alpha} is not alternating")
    dec = face_decompose(alpha, x)
    if dec is None:
        raise ValueError(f"marker of {alpha} is not a face of the cycle of {x}")
    return 1 if dec.tau_parity == 0 else 0


class CoeffGraph:
    """All arcs out of the alternating permutations on one index set."""

    def __init__(self, index_set: IndexSet, arcs: dict[tuple[BlockPerm, BlockPerm], int]):
        self.index_set = index_set
        self.arcs = arcs
        self.alt = alt_basis(index_set)
        self._out: dict[BlockPerm, list[tuple[BlockPerm, int]]] = {a: [] for a in self.alt}
        for (a, x), w in arcs.items():
            self._out[a].append((x, w))
        for lst in self._out.values():
            lst.sort(key=lambda t: sort_key(t[0]))
        # non-loop arcs into alternating targets, for walk continuation
        self._alt_next: dict[BlockPerm, list[tuple[BlockPerm, int]]] = {
            a: [(y, w) for y, w in self._out[a] if y != a and is_alternating(y)]
            for a in self.alt
        }

    def out_arcs(self, alpha: BlockPerm) -> list[tuple[BlockPerm, int]]:
        return self._out[alpha]

    def alt_out_arcs(self, alpha: BlockPerm) -> list[tuple[BlockPerm, int]]:
        return self._alt_next[alpha]

    def weight(self, alpha: BlockPerm, x: BlockPerm) -> Optional[int]:
        return self.arcs.get((alpha, x))

    def vertices(self) -> list[BlockPerm]:
        seen = {v for pair in self.arcs for v in pair}
        return sorted(seen, key=sort_key)


def build_graph(I: Iterable[int]) -> CoeffGraph:
    """Generate every arc by applying all junction/block swap choices.

    The factorization is unique, so distinct choices give distinct
    targets; the weight is the parity of the number of block swaps.
    """
    I = validate_index_set(I)
    if len(I) < 2:
        raise ValueError("need at least one block")
    k = len(I) // 2
    arcs: dict[tuple[BlockPerm, BlockPerm], int] = {}
    for alpha in alt_basis(I):
        base = alpha.entries
        for jmask in range(1 << (k - 1)):
            w = list(base)
            for i in range(1, k):
                if jmask >> (i - 1) & 1:
                    w[2 * i - 1], w[2 * i] = w[2 * i], w[2 * i - 1]
            for bmask in range(1 << k):
                e = list(w)
                swaps = 0
                for i in range(k):
                    if bmask >> i & 1:
                        e[2 * i], e[2 * i + 1] = e[2 * i + 1], e[2 * i]
                        swaps += 1
                target = BlockPerm(tuple(e))
                arcs[(alpha, target)] = 1 if swaps % 2 == 0 else 0
    return CoeffGraph(I, arcs)


def walk_coeff(graph: CoeffGraph, alpha: BlockPerm, x: BlockPerm) -> Fraction:
    """Signed walk count by explicit depth-first enumeration.

    Walks step through alternating vertices along non-loop arcs and may
    end with a single loop step at an alternating target; the result is
    the negated sum of (-1)**weight over all walks from alpha to x.
    """
    if alpha not in graph._out:
        raise ValueError(f"{alpha} is not an alternating vertex of this graph")
    if x.index_set != graph.index_set:
        raise ValueError("index set mismatch")
    x_alt = is_alternating(x)
    total = 0

    def dfs(v: BlockPerm, parity: int) -> None:
        nonlocal total
        for y, s in graph.out_arcs(v):
            if y == v:
                continue
            p = parity + s
            if y == x:
                total += (-1) ** p
                if x_alt:
                    total += (-1) ** (p + 1)  # same walk extended by the loop at x
            if is_alternating(y):
                dfs(y, p)

    dfs(alpha, 0)
    if alpha == x:
        total += -1  # the bare loop walk of weight 1
    return Fraction(-total)


def walk_coeff_table(graph: CoeffGraph, alpha: BlockPerm) -> dict[BlockPerm, Fraction]:
    """Signed walk counts from alpha to every vertex, one DFS pass.

    Every prefix of a walk is itself a walk ending at its last vertex, so
    a single enumeration accumulates all endpoints at once.
    """
    acc: dict[BlockPerm, int] = {alpha: -1}

    def dfs(v: BlockPerm, parity: int) -> None:
        for y, s in graph.out_arcs(v):
            if y == v:
                continue
            p = parity + s
            contribution = (-1) ** p
            if is_alternating(y):
                acc[y] = acc.get(y, 0)  # loop extension cancels the plain arrival
                dfs(y, p)
            else:
                acc[y] = acc.get(y, 0) + contribution

    dfs(alpha, 0)
    return {v: Fraction(-c) for v, c in acc.items()}


def graph_coeff_table(graph: CoeffGraph, x: BlockPerm) -> dict[BlockPerm, Fraction]:
    """Coefficients of every alternating source in x, by memoized recursion.

    Processes sources in descending block-sum order, which linearizes the
    acyclic non-loop arc relation.
    """
    if x.index_set != graph.index_set:
        raise ValueError("index set mismatch")
    if is_alternating(x):
        return {a: Fraction(1 if a == x else 0) for a in graph.alt}
    table: dict[BlockPerm, Fraction] = {}
    for alpha in sorted(graph.alt, key=prec_key, reverse=True):
        w = graph.weight(alpha, x)
        value = Fraction(0) if w is None else Fraction(-((-1) ** w))
        for beta, s in graph.alt_out_arcs(alpha):
            value += (-1) ** s * table[beta]
        table[alpha] = value
    return table


def graph_coeff(graph: CoeffGraph, alpha: BlockPerm, x: BlockPerm) -> Fraction:
    if alpha not in graph._out:
        raise ValueError(f"{alpha} is not an alternating vertex of this graph")
    return graph_coeff_table(graph, x)[alpha]


def reachable_ascending(graph: CoeffGraph, source: BlockPerm) -> set[BlockPerm]:
    """Vertices with ascending blocks reachable from source by non-loop arcs."""
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        if not is_alternating(v):
            continue
        for y, _ in graph.out_arcs(v):
            if y == v:
                continue
            if not all(a < b for a, b in y.blocks):
                continue
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def emit_dot(graph: CoeffGraph, restrict_to: Optional[Iterable[BlockPerm]] = None,
             include_loops: bool = True) -> str:
    """DOT text with weight labels, vertices in deterministic order."""
    if restrict_to is None:
        vertices = graph.vertices()
    else:
        vertices = sorted(set(restrict_to), key=sort_key)
    allowed = set(vertices)
    lines = ["digraph coeff {"]
    for v in vertices:
        lines.append(f'  "{v}";')
    for (a, x), w in sorted(graph.arcs.items(), key=lambda t: (sort_key(t[0][0]), sort_key(t[0][1]))):
        if a not in allowed or x not in allowed:
            continue
        if a == x and not include_loops:
            continue
        lines.append(f'  "{a}" -> "{x}" [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def arcs_json(graph: CoeffGraph, restrict_to: Optional[Iterable[BlockPerm]] = None) -> list[dict]:
    if restrict_to is None:
        allowed = None
    else:
        allowed = set(restrict_to)
    out = []
    for (a, x), w in sorted(graph.arcs.items(), key=lambda t: (sort_key(t[0][0]), sort_key(t[0][1]))):
        if allowed is not None and (a not in allowed or x not in allowed):
            continue
        out.append({"alpha": str(a), "x": str(x), "weight": w})
    return out
