"""Degree-based topological indices of B(G) and the Hansen-Vukicevic test.

Zagreb indices and the inequality are exact (integers and Fractions). Only
the five radical-bearing indices use floating point.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import InternalInconsistency, InvalidInput
from .sgb import SgbGraph


@dataclass(frozen=True)
class HvVerdict:
    holds: bool
    lhs: Fraction  # M2 / |e|
    rhs: Fraction  # M1 / |V|
    criterion: Fraction
    equality: bool


class OtherIndices(NamedTuple):
    r: float
    abc: float
    ga: float
    h: float
    sci: float


@dataclass(frozen=True)
class IndexReport:
    m1: int
    m2: int
    edge_count: int
    vertex_count: int
    p_value: Fraction
    hv: HvVerdict
    r: float
    abc: float
    ga: float
    h: float
    sci: float

    @property
    def other(self) -> OtherIndices:
        return OtherIndices(self.r, self.abc, self.ga, self.h, self.sci)


def zagreb(graph: SgbGraph) -> tuple[int, int]:
    """(M1, M2) of B(G).

    Every pair vertex has degree 1, so M1 picks up |G|^2 from the pair side
    and M2 = sum over H of deg(H)^2 (each of the deg(H) edges weighs deg(H)).
    """
    m2 = sum(d * d for d in graph.degrees)
    return graph.edge_count + m2, m2


def p_value(graph: SgbGraph) -> Fraction:
    """P = sum over H of Pr_H(G)^2."""
    n2 = graph.order**2
    return sum((Fraction(d, n2) ** 2 for d in graph.degrees), Fraction(0))


def check_hv(graph: SgbGraph) -> HvVerdict:
    """Decide M2/|e| >= M1/|V| two ways and insist they agree.

    The direct route cross-multiplies integers; the second route evaluates
    |L(G)| * P - 1 from the generation probabilities.
    """
    m1, m2 = zagreb(graph)
    e, v = graph.edge_count, graph.vertex_count
    lhs_num, rhs_num = m2 * v, m1 * e
    direct_holds = lhs_num >= rhs_num
    direct_equal = lhs_num == rhs_num

    criterion = graph.lattice_size * p_value(graph) - 1
    if direct_holds != (criterion >= 0) or direct_equal != (criterion == 0):
        raise InternalInconsistency(
            f"HV direct comparison ({lhs_num} vs {rhs_num}) disagrees with criterion {criterion}"
        )
    return HvVerdict(
        holds=direct_holds,
        lhs=Fraction(m2, e),
        rhs=Fraction(m1, v),
        criterion=criterion,
        equality=direct_equal,
    )


def check_hv_generic(vertex_degrees: Iterable[int], edges: Iterable[tuple[int, int]]) -> HvVerdict:
    """HV inequality for an arbitrary simple graph given by degrees.

    ``edges`` lists the endpoint degrees of every edge. The ``criterion``
    field is M2 * |V| - M1 * |e| (an integer).
    """
    degs = [int(d) for d in vertex_degrees]
    edges = [(int(a), int(b)) for a, b in edges]
    if any(d < 0 for d in degs):
        raise InvalidInput("negative vertex degree")
    if not edges:
        raise InvalidInput("graph has no edges")
    if sum(degs) != 2 * len(edges):
        raise InvalidInput(f"handshake violated: degree sum {sum(degs)} != 2 * {len(edges)}")
    # each degree value must appear on exactly as many edge ends as it contributes
    ends = Counter()
    for a, b in edges:
        ends[a] += 1
        ends[b] += 1
    have = Counter(degs)
    for d, k in ends.items():
        if d < 1 or k != d * have.get(d, 0):
            raise InvalidInput(f"edge endpoint degree {d} inconsistent with vertex degrees")

    v, e = len(degs), len(edges)
    m1 = sum(d * d for d in degs)
    m2 = sum(a * b for a, b in edges)
    diff = m2 * v - m1 * e
    return HvVerdict(
        holds=diff >= 0,
        lhs=Fraction(m2, e),
        rhs=Fraction(m1, v),
        criterion=Fraction(diff),
        equality=diff == 0,
    )


def star_indices(degrees: Iterable[int]) -> OtherIndices:
    """R, ABC, GA, H and SCI of a disjoint union of stars K_{1,m}.

    ``degrees`` are the star centre degrees m; zeros are skipped. Sums run
    in the given order.
    """
    r = abc = ga = h = sci = 0.0
    for d in degrees:
        if d < 1:
            continue
        r += math.sqrt(d)
        abc += math.sqrt(d * d - d)
        ga += 2.0 * d * math.sqrt(d) / (1 + d)
        h += 2.0 * d / (1 + d)
        sci += d / math.sqrt(1 + d)
    return OtherIndices(r, abc, ga, h, sci)


def edge_indices(edges: Iterable[tuple[int, int]]) -> OtherIndices:
    """The same five indices evaluated edge by edge from endpoint degrees."""
    r = abc = ga = h = sci = 0.0
    for du, dv in edges:
        prod, total = du * dv, du + dv
        r += 1.0 / math.sqrt(prod)
        abc += math.sqrt((total - 2) / prod)
        ga += math.sqrt(prod) / (total / 2)
        h += 2.0 / total
        sci += 1.0 / math.sqrt(total)
    return OtherIndices(r, abc, ga, h, sci)


def other_indices(graph: SgbGraph) -> OtherIndices:
    return star_indices(graph.degrees)


def index_report(graph: SgbGraph) -> IndexReport:
    m1, m2 = zagreb(graph)
    p = p_value(graph)
    if m2 != graph.edge_count**2 * p:
        raise InternalInconsistency("M2 != |e|^2 * P")
    o = other_indices(graph)
    return IndexReport(
        m1=m1,
        m2=m2,
        edge_count=graph.edge_count,
        vertex_count=graph.vertex_count,
        p_value=p,
        hv=check_hv(graph),
        r=o.r,
        abc=o.abc,
        ga=o.ga,
        h=o.h,
        sci=o.sci,
    )
