"""Subgroup closure and complete enumeration of L(G)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .config import max_order
from .errors import InvalidElement, NotFound, ResourceLimit
from .group_core import FiniteGroup


@dataclass(frozen=True)
class Subgroup:
    """A subgroup in canonical form: its strictly sorted element tuple.

    Equality and hashing look only at the element set and parent order, so
    a subgroup built by :func:`generated_subgroup` compares equal to the
    matching lattice member.
    """

    elements: tuple[int, ...]
    parent_order: int
    id: int = field(default=-1, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x):
        lo, hi = 0, len(self.elements)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.elements[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self.elements) and self.elements[lo] == x


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    group: FiniteGroup
    subgroups: tuple[Subgroup, ...]
    index: dict
    # lattice id of <x> for every element x
    cyclic_ids: np.ndarray

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i) -> Subgroup:
        return self.subgroups[i]

    @property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def whole(self) -> Subgroup:
        return self.subgroups[-1]


def _close(rows, start, gens):
    """Right-multiplication closure of ``start`` by ``gens``.

    ``start`` must contain the identity; in a finite group the result is the
    subgroup generated by ``start`` together with ``gens`` provided every
    element of ``start`` is itself a word in ``gens``.
    """
    members = set(start)
    frontier = list(members)
    while frontier:
        fresh = []
        for s in frontier:
            row = rows[s]
            for t in gens:
                y = row[t]
                if y not in members:
                    members.add(y)
                    fresh.append(y)
        frontier = fresh
    return members


def generated_subgroup(g: FiniteGroup, gens) -> Subgroup:
    gens = list(gens)
    for x in gens:
        if not 0 <= x < g.order:
            raise InvalidElement(f"generator {x} not in group of order {g.order}")
    members = _close(g.rows, (g.identity,), gens)
    return Subgroup(tuple(sorted(members)), g.order)


def _cyclic(rows, identity, x):
    out = [identity]
    y = x
    while y != identity:
        out.append(y)
        y = rows[y][x]
    return out


def all_subgroups(g: FiniteGroup, cap: int | None = None) -> SubgroupLattice:
    """Every subgroup of ``g``, found by join-closure from the cyclic ones.

    Each discovered subgroup H is joined with one representative x of every
    right coset Hx other than H itself (the join only depends on the coset);
    new joins are queued until nothing new appears.
    """
    cap = max_order() if cap is None else cap
    n = g.order
    if n > cap:
        raise ResourceLimit(f"group order {n} exceeds cap {cap}")
    rows = g.rows
    e = g.identity

    gens_of: dict[tuple, list[int]] = {}
    queue: list[tuple] = []
    cyc_key: list[tuple | None] = [None] * n
    for x in range(n):
        if cyc_key[x] is not None:
            continue
        powers = _cyclic(rows, e, x)
        key = tuple(sorted(powers))
        m = len(powers)
        for k in range(1, m + 1):
            if gcd(k, m) == 1:
                cyc_key[powers[k % m]] = key
        if key not in gens_of:
            gens_of[key] = [x] if x != e else []
            queue.append(key)

    head = 0
    while head < len(queue):
        key = queue[head]
        head += 1
        members = set(key)
        gens = gens_of[key]
        covered = bytearray(n)
        for h in key:
            covered[h] = 1
        for x in range(n):
            if covered[x]:
                continue
            for h in key:
                covered[rows[h][x]] = 1
            joined = tuple(sorted(_close(rows, members | {x}, gens + [x])))
            if joined not in gens_of:
                gens_of[joined] = gens + [x]
                queue.append(joined)

    keys = sorted(gens_of, key=lambda k: (len(k), k))
    subs = tuple(Subgroup(k, n, i) for i, k in enumerate(keys))
    index = {k: i for i, k in enumerate(keys)}
    cyclic_ids = np.array([index[k] for k in cyc_key], dtype=np.int64)
    cyclic_ids.setflags(write=False)
    return SubgroupLattice(g, subs, index, cyclic_ids)


def lattice_lookup(lattice: SubgroupLattice, elements) -> int:
    key = tuple(sorted(set(elements)))
    try:
        return lattice.index[key]
    except KeyError:
        raise NotFound(f"element set {list(key)} is not a member of the lattice") from None
