"""Brute-force simplicial ground truth.

The flag complex of a rank-n type-A reflection arrangement has the
nonempty proper subsets of [n+1] as vertices and the strict inclusion
chains as simplices.  For an even subset I, the induced subcomplex keeps
the vertices with odd intersection against I, and the hat model keeps only
the vertices inside I; the two have the same reduced homology, and every
cross-polytope cycle lives in the hat model.

Everything here is exact: reduced Betti numbers come from integer
fraction-free elimination, basis expansions from a rational solve against
the alternating cycle columns, and the join transport is plain chain
algebra with shuffle signs.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .blockperm import (
    BlockPerm,
    IndexSet,
    alt_basis,
    cross_cycle,
    euler_zigzag,
    validate_index_set,
)
from .chains import Chain, Simplex, Vertex, add_term, boundary
from .linalg import ColumnSolver, int_rank

TensorChain = dict[tuple[Simplex, Simplex], Fraction]


class SimplicialComplex:
    """All simplices of a complex of inclusion chains, grouped by dimension."""

    def __init__(self, vertices: Iterable[Vertex]):
        self.vertices: list[Vertex] = sorted(set(vertices), key=lambda v: (len(v), v))

    @property
    def by_dim(self) -> dict[int, list[Simplex]]:
        cached = getattr(self, "_by_dim", None)
        if cached is not None:
            return cached
        supersets: dict[Vertex, list[Vertex]] = {
            v: [u for u in self.vertices if len(u) > len(v) and set(v) < set(u)]
            for v in self.vertices
        }
        by_dim: dict[int, list[Simplex]] = {}
        stack: list[tuple[Vertex, ...]] = [(v,) for v in self.vertices]
        while stack:
            chain = stack.pop()
            by_dim.setdefault(len(chain) - 1, []).append(chain)
            for u in supersets[chain[-1]]:
                stack.append(chain + (u,))
        for simplices in by_dim.values():
            simplices.sort()
        self._by_dim = by_dim
        return by_dim

    @property
    def dim(self) -> int:
        if not self.vertices:
            return -1
        return max(self.by_dim)

    def simplices(self, d: int) -> list[Simplex]:
        if d == -1:
            return [()]
        return self.by_dim.get(d, [])

    def boundary_rows(self, d: int) -> list[list[int]]:
        """Rows of the d-th boundary map, one row per d-simplex (transposed
        orientation bookkeeping does not affect rank)."""
        if d <= -1:
            return []
        faces = {s: i for i, s in enumerate(self.simplices(d - 1))}
        rows = []
        width = max(len(faces), 1)
        for simplex in self.simplices(d):
            row = [0] * width
            for i in range(len(simplex)):
                face = simplex[:i] + simplex[i + 1:]
                row[faces[face]] = (-1) ** i
            rows.append(row)
        return rows

    def contains_chain(self, chain: Chain) -> bool:
        vertex_set = set(self.vertices)
        return all(set(s) <= vertex_set for s in chain)


def coxeter_vertex_count(n: int) -> int:
    return 2 ** (n + 1) - 2


def induced_vertices(n: int, I: Iterable[int]) -> list[Vertex]:
    """Nonempty proper subsets of [n+1] with odd intersection against I."""
    I = validate_index_set(I)
    ground = range(1, n + 2)
    if any(e > n + 1 for e in I):
        raise ValueError(f"{I} is not a subset of [{n + 1}]")
    iset = set(I)
    out = []
    for r in range(1, n + 1):
        for J in itertools.combinations(ground, r):
            if len(iset.intersection(J)) % 2 == 1:
                out.append(J)
    return out


def build_induced(n: int, I: Iterable[int]) -> SimplicialComplex:
    """Full subcomplex on the odd-intersection vertices.

    Subsets containing n+1 qualify like any others; only the parity of the
    intersection with I decides membership.

    >>> len(build_induced(7, (1, 3, 4, 5)).vertices)
    128
    >>> len(build_induced(3, (1, 2, 3, 4)).vertices)
    8
    """
    return SimplicialComplex(induced_vertices(n, I))


def hat_vertices(I: IndexSet) -> list[Vertex]:
    I = validate_index_set(I)
    out = []
    for r in range(1, len(I) + 1, 2):
        out.extend(itertools.combinations(I, r))
    return out


def build_hat(n: int, I: Iterable[int]) -> SimplicialComplex:
    """Deformation retract of the induced subcomplex: odd subsets of I.

    The result does not depend on n beyond the containment check.
    """
    I = validate_index_set(I)
    if any(e > n + 1 for e in I):
        raise ValueError(f"{I} is not a subset of [{n + 1}]")
    return SimplicialComplex(hat_vertices(I))


def reduced_betti(complex_: SimplicialComplex, d: int) -> int:
    """Rank of reduced rational homology in dimension d.

    The empty-simplex augmentation is included, so the empty complex has
    one unit of homology in dimension -1 and a cone has none anywhere.
    """
    def n_simplices(dim: int) -> int:
        if dim == -1:
            return 1
        return len(complex_.simplices(dim))

    def rank_boundary(dim: int) -> int:
        if dim <= -1:
            return 0
        if dim == 0:
            return 1 if complex_.vertices else 0  # augmentation row
        rows = complex_.boundary_rows(dim)
        return int_rank(rows)

    if d < -1:
        return 0
    return n_simplices(d) - rank_boundary(d) - rank_boundary(d + 1)


@lru_cache(maxsize=32)
def _hat_solver(I: IndexSet) -> tuple[list[BlockPerm], ColumnSolver]:
    """Columns of alternating cross-polytope cycles over the hat facets."""
    basis = alt_basis(I)
    k = len(I) // 2
    complex_ = SimplicialComplex(hat_vertices(I))
    facets = complex_.simplices(k - 1)
    columns = [cross_cycle(a) for a in basis]
    return basis, ColumnSolver(facets, columns)


def express_in_alt_basis(x: BlockPerm, chain: Optional[Chain] = None) -> dict[BlockPerm, Fraction]:
    """Expand a cycle over the alternating cycle basis of its hat model.

    With no explicit chain, x's own cross-polytope cycle is expanded; this
    is the homology-side oracle for straightening coefficients.

    >>> out = express_in_alt_basis(BlockPerm((1, 2, 3, 4)))
    >>> out[BlockPerm((1, 3, 2, 4))]
    Fraction(1, 1)
    """
    I = x.index_set
    if not I:
        raise ValueError("the empty permutation has no cycle to expand")
    basis, solver = _hat_solver(I)
    target = cross_cycle(x) if chain is None else chain
    coeffs = solver.solve(target)
    return dict(zip(basis, coeffs))


def express_chain_in_alt_basis(I: Iterable[int], chain: Chain) -> dict[BlockPerm, Fraction]:
    I = validate_index_set(I)
    basis, solver = _hat_solver(I)
    return dict(zip(basis, solver.solve(chain)))


def homotopy_projection(simplex: Simplex, I: Iterable[int]) -> Optional[Simplex]:
    """Vertex-wise intersection with I; None when the image degenerates.

    Projection preserves inclusion chains, so no reordering sign arises.

    >>> homotopy_projection(((1, 7), (1, 3, 4, 7)), (1, 3, 4, 5))
    ((1,), (1, 3, 4))
    """
    iset = set(validate_index_set(I))
    image = tuple(tuple(sorted(iset.intersection(v))) for v in simplex)
    if any(not v for v in image):
        return None
    if len(set(image)) != len(image):
        return None
    return image


def project_chain(chain: Chain, I: Iterable[int]) -> Chain:
    out: Chain = {}
    for simplex, coeff in chain.items():
        image = homotopy_projection(simplex, I)
        if image is not None:
            add_term(out, image, coeff)
    return out


def join_pushforward(z: BlockPerm, I1: Iterable[int], I2: Iterable[int]) -> TensorChain:
    """Chain-level transport of z's cycle into the join of the two hat models.

    Each simplex's vertices are classified by which factor they meet in odd
    cardinality, reordered first-factor-first with the shuffle sign, and
    projected into the factor hat models; degenerate projections vanish.
    """
    I1 = validate_index_set(I1)
    I2 = validate_index_set(I2)
    if set(I1) & set(I2):
        raise ValueError("factors must be disjoint")
    if set(z.entries) != set(I1) | set(I2):
        raise ValueError(f"{z} is not a permutation of the union")
    set1, set2 = set(I1), set(I2)
    if not I2:
        return {(s, ()): c for s, c in cross_cycle(z).items()}
    if not I1:
        return {((), s): c for s, c in cross_cycle(z).items()}
    out: TensorChain = {}
    for simplex, coeff in cross_cycle(z).items():
        labels = []
        for v in simplex:
            odd1 = len(set1.intersection(v)) % 2 == 1
            odd2 = len(set2.intersection(v)) % 2 == 1
            if odd1 == odd2:
                raise ValueError(f"vertex {v} is odd in both or neither factor")
            labels.append(1 if odd1 else 2)
        # shuffle sign: parity of (factor-2, factor-1) inversions
        inversions = 0
        for i in range(len(labels)):
            if labels[i] == 2:
                inversions += sum(1 for j in range(i + 1, len(labels)) if labels[j] == 1)
        sign = -1 if inversions % 2 else 1
        part1 = tuple(tuple(sorted(set1.intersection(v))) for v, l in zip(simplex, labels) if l == 1)
        part2 = tuple(tuple(sorted(set2.intersection(v))) for v, l in zip(simplex, labels) if l == 2)
        if len(set(part1)) != len(part1) or len(set(part2)) != len(part2):
            continue
        key = (part1, part2)
        new = out.get(key, Fraction(0)) + coeff * sign
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def tensor_cycle(alpha: BlockPerm, beta: BlockPerm) -> TensorChain:
    """The product cycle of two cross-polytope cycles, first factor first."""
    out: TensorChain = {}
    for s1, c1 in cross_cycle(alpha).items():
        for s2, c2 in cross_cycle(beta).items():
            out[(s1, s2)] = c1 * c2
    return out


def pairing_check(alpha: BlockPerm, beta: BlockPerm, z: BlockPerm) -> Fraction:
    """Dual-basis pairing of z's transported cycle against (alpha, beta).

    Expands the pushforward over the tensor basis of alternating cycles by
    two staged solves, one per factor, and reads off the requested
    coefficient.  Independent of the combinatorial product formula.
    """
    I1, I2 = alpha.index_set, beta.index_set
    if set(I1) & set(I2):
        raise ValueError("factors must be disjoint")
    if not I2:
        value = express_in_alt_basis(z)[alpha]
        return value if beta.k == 0 else Fraction(0)
    if not I1:
        value = express_in_alt_basis(z)[beta]
        return value if alpha.k == 0 else Fraction(0)
    pushed = join_pushforward(z, I1, I2)
    if not pushed:
        return Fraction(0)
    basis1, solver1 = _hat_solver(I1)
    basis2, solver2 = _hat_solver(I2)
    # stage 1: expand each second-factor slice over the first-factor basis
    slices: dict[Simplex, Chain] = {}
    for (s1, s2), coeff in pushed.items():
        slices.setdefault(s2, {})[s1] = coeff
    rows: dict[BlockPerm, Chain] = {}
    for s2, chain1 in slices.items():
        for a, c in zip(basis1, solver1.solve(chain1)):
            if c:
                rows.setdefault(a, {})[s2] = c
    # stage 2: expand each first-factor row over the second-factor basis
    row = rows.get(alpha)
    if row is None:
        return Fraction(0)
    coeffs2 = dict(zip(basis2, solver2.solve(row)))
    return coeffs2.get(beta, Fraction(0))


def betti_formula(n: int) -> list[int]:
    """Degree-by-degree ranks from the zigzag counting identity."""
    import math

    return [
        math.comb(n + 1, 2 * k) * euler_zigzag(2 * k)
        for k in range(0, (n + 1) // 2 + 1)
    ]


def betti_oracle(n: int) -> list[int]:
    """The same ranks summed from induced-subcomplex homology."""
    out = []
    for k in range(0, (n + 1) // 2 + 1):
        total = 0
        for I in itertools.combinations(range(1, n + 2), 2 * k):
            total += reduced_betti(build_induced(n, I), k - 1)
        out.append(total)
    return out
