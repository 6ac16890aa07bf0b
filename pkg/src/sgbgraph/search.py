"""Batch HV counterexample search, JSON reports and DOT export."""

from __future__ import annotations

import csv
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .config import max_order
from .errors import InvalidInput, ResourceLimit
from .group_core import (
    Descriptor,
    FiniteGroup,
    load_cayley_table,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    read_cayley_table,
)
from .indices import IndexReport, index_report
from .sgb import SgbGraph, build_sgb, star_decomposition
from .subgroups import all_subgroups

log = logging.getLogger(__name__)

SEARCH_FAMILIES = ("cyclic", "dihedral", "dicyclic", "abelian", "user_tables")
_FAMILY_RANK = {name: i for i, name in enumerate(SEARCH_FAMILIES)}
CSV_COLUMNS = ("descriptor", "order", "lattice_size", "m1", "m2", "criterion", "hv_holds")


@dataclass
class SearchConfig:
    families: tuple[str, ...]
    max_order: int
    output_path: Path
    table_paths: tuple[str, ...] = ()
    resume: bool = False

    def __post_init__(self):
        self.families = tuple(self.families)
        self.table_paths = tuple(str(p) for p in self.table_paths)
        self.output_path = Path(self.output_path)
        unknown = set(self.families) - set(SEARCH_FAMILIES)
        if unknown:
            raise InvalidInput(f"unknown families: {sorted(unknown)}")
        if self.max_order < 1:
            raise InvalidInput("max_order must be positive")
        cap = max_order()
        if self.max_order > cap:
            raise InvalidInput(f"max_order {self.max_order} exceeds hard cap {cap}")


@dataclass
class SearchRecord:
    group_descriptor: str
    order: int
    lattice_size: int
    m1: int
    m2: int
    criterion_numerator: int
    criterion_denominator: int
    hv_holds: bool
    elapsed_ms: int


@dataclass
class SearchSummary:
    groups_tested: int
    new_records: int
    skipped: int
    violations: list = field(default_factory=list)
    output_path: Path | None = None


# -- group enumeration -------------------------------------------------------


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(k, largest=None):
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def abelian_factorizations(n: int) -> list[tuple[int, ...]]:
    """All abelian groups of order n as sorted (descending) prime-power factors."""
    choices = [()]
    for p, e in sorted(_factorize(n).items()):
        choices = [prev + tuple(p**part for part in lam) for prev in choices for lam in _partitions(e)]
    return sorted({tuple(sorted(c, reverse=True)) for c in choices})


def _abelian_name(factors):
    return "x".join(f"Z{q}" for q in factors) if factors else "Z1"


def enumerate_groups(config: SearchConfig) -> list[Descriptor]:
    """Descriptors ordered by (order, family, parameters), unique by name."""
    found = []
    top = config.max_order
    fams = set(config.families)
    if "cyclic" in fams:
        found += [Descriptor("cyclic", (n,), f"Z{n}") for n in range(1, top + 1)]
    if "dihedral" in fams:
        found += [Descriptor("dihedral", (n,), f"D{2 * n}") for n in range(1, top // 2 + 1)]
    if "dicyclic" in fams:
        found += [Descriptor("dicyclic", (n,), f"Q{4 * n}") for n in range(1, top // 4 + 1)]
    if "abelian" in fams:
        for n in range(1, top + 1):
            found += [Descriptor("abelian", f, _abelian_name(f)) for f in abelian_factorizations(n)]
    if "user_tables" in fams:
        for path in config.table_paths:
            rows = read_cayley_table(path)
            found.append(Descriptor("user_tables", (len(rows),), f"table:{path}"))

    def key(d):
        return (descriptor_order(d), _FAMILY_RANK[d.family], d.params, d.name)

    seen, out = set(), []
    for d in sorted(found, key=key):
        if d.name not in seen:
            seen.add(d.name)
            out.append(d)
    return out


def descriptor_order(d: Descriptor) -> int:
    if d.family == "cyclic":
        return d.params[0]
    if d.family == "dihedral":
        return 2 * d.params[0]
    if d.family == "dicyclic":
        return 4 * d.params[0]
    if d.family == "abelian":
        out = 1
        for q in d.params:
            out *= q
        return out
    return d.params[0]


def build_group(d: Descriptor) -> FiniteGroup:
    if d.family == "cyclic":
        return make_cyclic(d.params[0])
    if d.family == "dihedral":
        return make_dihedral(d.params[0])
    if d.family == "dicyclic":
        return make_dicyclic(d.params[0])
    if d.family == "abelian":
        g = make_cyclic(1)
        for q in d.params:
            g = make_direct_product(g, make_cyclic(q))
        return g.relabel(d)
    if d.family == "user_tables":
        return load_cayley_table(d.name.removeprefix("table:")).relabel(d)
    raise InvalidInput(f"cannot build family {d.family!r}")


# -- per-group analysis ------------------------------------------------------


def analyze(g: FiniteGroup, workers: int = 1, cap: int | None = None) -> tuple[SgbGraph, IndexReport]:
    lattice = all_subgroups(g, cap=cap)
    graph = build_sgb(g, lattice, workers=workers)
    return graph, index_report(graph)


def _record_for(d: Descriptor):
    """Search row for one descriptor; skipped rows are plain dicts."""
    start = time.perf_counter()
    order = descriptor_order(d)
    try:
        g = build_group(d)
        graph, rep = analyze(g)
    except ResourceLimit as exc:
        return {"group_descriptor": d.name, "order": order, "skipped": f"resource-limit: {exc}"}
    crit = rep.hv.criterion
    return SearchRecord(
        group_descriptor=d.name,
        order=graph.order,
        lattice_size=graph.lattice_size,
        m1=rep.m1,
        m2=rep.m2,
        criterion_numerator=crit.numerator,
        criterion_denominator=crit.denominator,
        hv_holds=rep.hv.holds,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


def _as_row(rec) -> dict:
    return asdict(rec) if isinstance(rec, SearchRecord) else rec


def _read_jsonl(path: Path) -> list[dict]:
    if not path.exists():
        return []
    rows = []
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append(json.loads(line))
    return rows


def side_paths(out: Path) -> tuple[Path, Path]:
    """CSV summary and summary JSON written next to the JSONL log."""
    return out.with_suffix(".csv"), out.with_suffix(".summary.json")


def run_search(config: SearchConfig, workers: int = 1) -> SearchSummary:
    """Stream one JSONL row per group, then write CSV and summary files.

    Workers may finish in any order; ``map`` hands results back in
    enumeration order so the log is written deterministically.
    """
    out = config.output_path
    descriptors = enumerate_groups(config)
    existing = _read_jsonl(out) if config.resume else []
    done = {row["group_descriptor"] for row in existing}
    pending = [d for d in descriptors if d.name not in done]
    out.parent.mkdir(parents=True, exist_ok=True)

    mode = "a" if config.resume else "w"
    new_rows = []
    with out.open(mode) as fh:
        if workers > 1 and len(pending) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = pool.map(_record_for, pending, chunksize=1)
                for rec in results:
                    new_rows.append(_write_row(fh, rec))
        else:
            for d in pending:
                new_rows.append(_write_row(fh, _record_for(d)))

    rows = existing + new_rows
    csv_path, summary_path = side_paths(out)
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            if "skipped" in row:
                continue
            crit = f"{row['criterion_numerator']}/{row['criterion_denominator']}"
            writer.writerow([row["group_descriptor"], row["order"], row["lattice_size"],
                             row["m1"], row["m2"], crit, row["hv_holds"]])

    tested = [r for r in rows if "skipped" not in r]
    violations = [r["group_descriptor"] for r in tested if not r["hv_holds"]]
    skipped = [r["group_descriptor"] for r in rows if "skipped" in r]
    summary = {
        "groups_tested": len(tested),
        "skipped": skipped,
        "violations": [r for r in tested if not r["hv_holds"]],
    }
    summary_path.write_text(json.dumps(summary, indent=2) + "\n")
    log.info("search: %d groups, %d new, %d violations", len(tested), len(new_rows), len(violations))
    return SearchSummary(
        groups_tested=len(tested),
        new_records=len(new_rows),
        skipped=len(skipped),
        violations=violations,
        output_path=out,
    )


def _write_row(fh, rec) -> dict:
    row = _as_row(rec)
    fh.write(json.dumps(row) + "\n")
    fh.flush()
    return row


# -- single-group report -----------------------------------------------------


def report_document(g: FiniteGroup, workers: int = 1) -> dict:
    """JSON-ready report: indices, HV verdict, stars and per-subgroup degrees."""
    graph, rep = analyze(g, workers=workers)
    stars = star_decomposition(graph)
    hv = rep.hv
    return {
        "descriptor": str(g.descriptor),
        "order": graph.order,
        "lattice_size": graph.lattice_size,
        "degrees": [
            {"subgroup_order": k, "degree": d} for k, d in zip(graph.subgroup_orders, graph.degrees)
        ],
        "stars": list(stars.stars),
        "isolated": stars.isolated,
        "m1": rep.m1,
        "m2": rep.m2,
        "edge_count": rep.edge_count,
        "vertex_count": rep.vertex_count,
        "p_value": {"num": rep.p_value.numerator, "den": rep.p_value.denominator},
        "hv": {
            "holds": hv.holds,
            "equality": hv.equality,
            "criterion": {"num": hv.criterion.numerator, "den": hv.criterion.denominator},
        },
        "indices": {"r": rep.r, "abc": rep.abc, "ga": rep.ga, "h": rep.h, "sci": rep.sci},
    }


def to_dot(graph: SgbGraph) -> str:
    """Graphviz rendering of B(G) with each star's leaves collapsed.

    Subgroup vertex ``H<id>`` is a box labelled ``H<id>(order=k, deg=m)``;
    its leaves become one ellipse ``P<id>`` labelled ``<m> pairs`` joined by
    an edge labelled ``x<m>``. Isolated subgroups get no pair node.
    """
    lines = [f'graph "B({graph.group_descriptor})" {{', "  node [fontname=Helvetica];"]
    for i, (k, d) in enumerate(zip(graph.subgroup_orders, graph.degrees)):
        lines.append(f'  H{i} [shape=box, label="H{i}(order={k}, deg={d})"];')
        if d:
            lines.append(f'  P{i} [shape=ellipse, label="{d} pairs"];')
            lines.append(f'  H{i} -- P{i} [label="x{d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
