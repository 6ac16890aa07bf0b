"""The subgroup generating bipartite graph B(G) as a degree map on L(G).

Pair-side vertices (a, b) all have degree one and are never materialized;
B(G) is fully described by deg(H) = #{(a, b) : <a, b> = H}.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InternalInconsistency, InvalidInput, NotFound
from .group_core import Descriptor, FiniteGroup
from .subgroups import SubgroupLattice, _close, lattice_lookup


@dataclass(frozen=True)
class SgbGraph:
    group_descriptor: Descriptor
    order: int
    lattice_size: int
    # degrees[i] is deg(H_i) for lattice id i
    degrees: tuple[int, ...]
    subgroup_orders: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return self.order**2

    @property
    def vertex_count(self) -> int:
        # isolated subgroup vertices are still vertices
        return self.order**2 + self.lattice_size


@dataclass(frozen=True)
class StarDecomposition:
    """Component structure of B(G): one K_{1,m} per non-isolated subgroup.

    ``stars`` is the sorted multiset of m values (m = 1 stands for K_2).
    """

    stars: tuple[int, ...]
    isolated: int = 0

    @classmethod
    def from_sizes(cls, sizes, isolated=0):
        return cls(tuple(sorted(sizes)), isolated)

    @property
    def components(self) -> int:
        return len(self.stars) + self.isolated

    def counts(self) -> Counter:
        return Counter(self.stars)

    def __str__(self):
        parts = []
        for m, k in sorted(self.counts().items()):
            star = "K_2" if m == 1 else f"K_{{1,{m}}}"
            parts.append(star if k == 1 else f"{k}{star}")
        if self.isolated:
            parts.append(f"{self.isolated}K_1")
        return " + ".join(parts)


def _join_table(g: FiniteGroup, lattice: SubgroupLattice):
    """Lattice id of <C_i, C_j> for every pair of cyclic subgroups.

    <a, b> depends only on <a> and <b>, so this is the closure cache for the
    whole pair enumeration. Only i <= j is closed; the table is mirrored.
    """
    cyc_ids, compact = np.unique(lattice.cyclic_ids, return_inverse=True)
    # any element x with <x> = C_c generates C_c
    reps = [int(np.flatnonzero(lattice.cyclic_ids == c)[0]) for c in cyc_ids]
    k = len(cyc_ids)
    join = np.empty((k, k), dtype=np.int64)
    rows = g.rows
    for i in range(k):
        join[i, i] = cyc_ids[i]
        base = set(lattice[int(cyc_ids[i])].elements)
        for j in range(i + 1, k):
            members = _close(rows, base | {reps[j]}, [reps[i], reps[j]])
            join[i, j] = join[j, i] = lattice_lookup(lattice, members)
    return join, compact.reshape(-1)


def _count_rows(join, compact, start, stop, size):
    """Degree contributions of ordered pairs (a, b) with start <= a < stop.

    Only b >= a is looked at: off-diagonal pairs count twice, diagonal once.
    """
    n = compact.shape[0]
    a = np.arange(start, stop)
    ids = join[compact[a][:, None], compact[None, :]]
    cols = np.arange(n)[None, :]
    upper = ids[cols > a[:, None]]
    diag = ids[np.arange(stop - start), a]
    out = 2 * np.bincount(upper, minlength=size) + np.bincount(diag, minlength=size)
    return out.astype(np.int64)


def build_sgb(g: FiniteGroup, lattice: SubgroupLattice, workers: int = 1, chunk: int = 64) -> SgbGraph:
    """Count, for every subgroup H, the ordered pairs generating exactly H.

    The |G|^2 pair space is split into row blocks; with ``workers > 1`` the
    blocks run on a thread pool and the partial counts are summed. Integer
    addition makes the result independent of the partitioning.
    """
    if lattice.group is not g:
        if lattice.group.order != g.order or not np.array_equal(lattice.group.table, g.table):
            raise InvalidInput("lattice was not computed from this group")
    n = g.order
    size = len(lattice)
    join, compact = _join_table(g, lattice)
    blocks = [(s, min(s + chunk, n)) for s in range(0, n, chunk)]

    def work(block):
        return _count_rows(join, compact, block[0], block[1], size)

    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(work, blocks))
    else:
        partials = [work(b) for b in blocks]

    degrees = [0] * size
    for part in partials:
        for i, c in enumerate(part.tolist()):
            degrees[i] += c

    if sum(degrees) != n * n:
        raise InternalInconsistency(f"degree sum {sum(degrees)} != |G|^2 = {n * n}")
    if degrees[0] != 1:
        raise InternalInconsistency(f"trivial subgroup has degree {degrees[0]}, expected 1")
    return SgbGraph(
        group_descriptor=g.descriptor,
        order=n,
        lattice_size=size,
        degrees=tuple(degrees),
        subgroup_orders=tuple(h.order for h in lattice),
    )


def pr_h(graph: SgbGraph, h: int) -> Fraction:
    """Probability that a uniform random ordered pair generates subgroup ``h``."""
    if not 0 <= h < graph.lattice_size:
        raise NotFound(f"no subgroup with id {h}")
    return Fraction(graph.degrees[h], graph.order**2)


def star_decomposition(graph: SgbGraph) -> StarDecomposition:
    stars = [d for d in graph.degrees if d >= 1]
    return StarDecomposition.from_sizes(stars, graph.lattice_size - len(stars))
