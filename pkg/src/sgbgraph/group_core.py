"""Finite groups as dense multiplication tables on element indices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from pathlib import Path

import numpy as np

from .config import TABLE_LIMIT
from .errors import GroupIOError, InvalidElement, InvalidParameter, NotAGroup, ResourceLimit


@dataclass(frozen=True, order=True)
class Descriptor:
    """Family tag plus parameters; ``name`` is the display/caching key."""

    family: str
    params: tuple = ()
    name: str = ""

    def __str__(self):
        return self.name or f"{self.family}{self.params}"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    identity: int
    inverses: np.ndarray
    descriptor: Descriptor

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    @cached_property
    def rows(self) -> list[list[int]]:
        # plain lists: scalar indexing is several times faster than numpy here
        return self.table.tolist()

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def relabel(self, descriptor: Descriptor) -> FiniteGroup:
        return replace(self, descriptor=descriptor)

    def __repr__(self):
        return f"FiniteGroup({self.descriptor}, order={self.order})"


def _check_size(n):
    if n > TABLE_LIMIT:
        raise ResourceLimit(f"order {n} exceeds table limit {TABLE_LIMIT}")


def _finish(table, descriptor, validate):
    table = np.ascontiguousarray(table, dtype=np.int64)
    table.setflags(write=False)
    if validate:
        return from_cayley_table(table).relabel(descriptor)
    n = table.shape[0]
    # identity is index 0 in every family encoding
    inverses = np.argmin(table, axis=1)
    inverses.setflags(write=False)
    return FiniteGroup(table, 0, inverses, descriptor)


def make_cyclic(n: int, validate: bool = False) -> FiniteGroup:
    """Integers mod n under addition."""
    if n < 1:
        raise InvalidParameter(f"cyclic group needs n >= 1, got {n}")
    _check_size(n)
    r = np.arange(n)
    table = (r[:, None] + r[None, :]) % n
    return _finish(table, Descriptor("cyclic", (n,), f"Z{n}"), validate)


def make_dihedral(n: int, validate: bool = False) -> FiniteGroup:
    """D_{2n} = <a, b | a^n = b^2 = 1, bab = a^-1>.

    Index i < n encodes a^i and index n + i encodes a^i b.
    """
    if n < 1:
        raise InvalidParameter(f"dihedral group needs n >= 1, got {n}")
    _check_size(2 * n)
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    plus = (i + j) % n
    minus = (i - j) % n
    # a^i a^j = a^(i+j); a^i a^j b = a^(i+j) b; a^i b a^j = a^(i-j) b; a^i b a^j b = a^(i-j)
    table = np.block([[plus, plus + n], [minus + n, minus]])
    return _finish(table, Descriptor("dihedral", (n,), f"D{2 * n}"), validate)


def make_dicyclic(n: int, validate: bool = False) -> FiniteGroup:
    """Q_{4n} = <a, b | a^{2n} = 1, b^2 = a^n, bab^-1 = a^-1>.

    Index i < 2n encodes a^i and index 2n + i encodes a^i b.
    """
    if n < 1:
        raise InvalidParameter(f"dicyclic group needs n >= 1, got {n}")
    m = 2 * n
    _check_size(2 * m)
    i = np.arange(m)[:, None]
    j = np.arange(m)[None, :]
    plus = (i + j) % m
    minus = (i - j) % m
    # a^i b a^j b = a^(i-j) b^2 = a^(i-j+n)
    table = np.block([[plus, plus + m], [minus + m, (minus + n) % m]])
    return _finish(table, Descriptor("dicyclic", (n,), f"Q{4 * n}"), validate)


def make_direct_product(g: FiniteGroup, h: FiniteGroup, validate: bool = False) -> FiniteGroup:
    """Componentwise product; the pair (i, j) is encoded as i * |h| + j."""
    n, m = g.order, h.order
    _check_size(n * m)
    table = (g.table[:, None, :, None] * m + h.table[None, :, None, :]).reshape(n * m, n * m)
    table = np.ascontiguousarray(table, dtype=np.int64)
    table.setflags(write=False)
    name = f"{g.descriptor}x{h.descriptor}"
    desc = Descriptor("product", (), name)
    if validate:
        return from_cayley_table(table).relabel(desc)
    identity = g.identity * m + h.identity
    inverses = (g.inverses[:, None] * m + h.inverses[None, :]).ravel()
    inverses.setflags(write=False)
    return FiniteGroup(table, int(identity), inverses, desc)


def from_cayley_table(table, descriptor: Descriptor | None = None) -> FiniteGroup:
    """Validate an arbitrary square table and wrap it as a group.

    Raises :class:`NotAGroup` naming the first axiom that fails.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup("shape", t.shape)
    if not np.issubdtype(t.dtype, np.integer):
        raise NotAGroup("shape", str(t.dtype))
    n = t.shape[0]
    _check_size(n)
    t = np.ascontiguousarray(t, dtype=np.int64)
    if t.min() < 0 or t.max() >= n:
        bad = np.argwhere((t < 0) | (t >= n))[0]
        raise NotAGroup("range", (int(bad[0]), int(bad[1])))

    full = np.arange(n)
    srt_rows = np.sort(t, axis=1)
    bad_rows = np.flatnonzero((srt_rows != full).any(axis=1))
    if bad_rows.size:
        raise NotAGroup("latin-square", ("row", int(bad_rows[0])))
    srt_cols = np.sort(t, axis=0)
    bad_cols = np.flatnonzero((srt_cols != full[:, None]).any(axis=0))
    if bad_cols.size:
        raise NotAGroup("latin-square", ("column", int(bad_cols[0])))

    two_sided = (t == full).all(axis=1) & (t == full[:, None]).all(axis=0)
    cands = np.flatnonzero(two_sided)
    if cands.size == 0:
        raise NotAGroup("identity")
    e = int(cands[0])

    # latin square guarantees a unique right inverse in each row
    inverses = np.argmax(t == e, axis=1)
    left_ok = t[inverses, full] == e
    if not left_ok.all():
        raise NotAGroup("inverse", int(np.flatnonzero(~left_ok)[0]))

    for a in range(n):
        row = t[a]
        lhs = t[row]  # (a*b)*c
        rhs = row[t]  # a*(b*c)
        diff = lhs != rhs
        if diff.any():
            b, c = np.argwhere(diff)[0]
            raise NotAGroup("associativity", (a, int(b), int(c)))

    t.setflags(write=False)
    inverses.setflags(write=False)
    if descriptor is None:
        descriptor = Descriptor("table", (), f"table{n}")
    return FiniteGroup(t, e, inverses, descriptor)


def element_order(g: FiniteGroup, x: int) -> int:
    if not 0 <= x < g.order:
        raise InvalidElement(f"element {x} not in group of order {g.order}")
    row = g.rows[x]
    k, y = 1, x
    while y != g.identity:
        y = row[y]
        k += 1
    return k


def read_cayley_table(path) -> list[list[int]]:
    """Parse the plain-text table format: n, then n rows of n indices.

    Blank lines and lines starting with ``#`` are ignored.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GroupIOError(path, exc.strerror or str(exc)) from exc
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GroupIOError(path, "empty table file")
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise GroupIOError(path, f"malformed table: {exc}") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise GroupIOError(path, f"expected {n} rows of {n} entries")
    return rows


def load_cayley_table(path) -> FiniteGroup:
    rows = read_cayley_table(path)
    return from_cayley_table(rows, Descriptor("table", (), f"table:{path}"))


def write_cayley_table(g: FiniteGroup, path, comment: str | None = None) -> None:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(str(g.order))
    lines.extend(" ".join(map(str, row)) for row in g.rows)
    Path(path).write_text("\n".join(lines) + "\n")
