from fractions import Fraction

import pytest

from oracles import pair_degrees
from sgbgraph.errors import InvalidInput, NotFound
from sgbgraph.group_core import make_cyclic, make_dicyclic, make_dihedral, make_direct_product
from sgbgraph.indices import zagreb
from sgbgraph.search import to_dot
from sgbgraph.sgb import StarDecomposition, build_sgb, pr_h, star_decomposition
from sgbgraph.subgroups import all_subgroups, lattice_lookup


def sgb(g, **kw):
    return build_sgb(g, all_subgroups(g), **kw)


def klein():
    z2 = make_cyclic(2)
    return make_direct_product(z2, z2)


def test_trivial_group():
    graph = sgb(make_cyclic(1))
    assert graph.degrees == (1,)
    assert zagreb(graph) == (2, 1)
    assert star_decomposition(graph).stars == (1,)


def test_z6_degrees():
    graph = sgb(make_cyclic(6))
    assert graph.degrees == (1, 3, 8, 24)
    assert str(star_decomposition(graph)) == "K_2 + K_{1,3} + K_{1,8} + K_{1,24}"


def test_klein_stars():
    dec = star_decomposition(sgb(klein()))
    assert dec.stars == (1, 3, 3, 3, 6)
    assert dec.components == 5
    assert str(dec) == "K_2 + 3K_{1,3} + K_{1,6}"


def test_q8_stars():
    assert star_decomposition(sgb(make_dicyclic(2))).stars == (1, 3, 12, 12, 12, 24)


def test_z4_and_z12_stars():
    assert star_decomposition(sgb(make_cyclic(4))).stars == (1, 3, 12)
    assert star_decomposition(sgb(make_cyclic(12))).stars == (1, 3, 8, 12, 24, 96)


def test_pr_h_examples():
    g = make_cyclic(6)
    lat = all_subgroups(g)
    graph = build_sgb(g, lat)
    assert pr_h(graph, lattice_lookup(lat, {0, 3})) == Fraction(1, 12)
    assert pr_h(graph, lattice_lookup(lat, {0, 2, 4})) == Fraction(2, 9)
    assert pr_h(graph, lat.trivial.id) == Fraction(1, 36)
    assert pr_h(graph, lat.whole.id) == Fraction(2, 3)
    assert sum(pr_h(graph, i) for i in range(len(lat))) == 1
    with pytest.raises(NotFound):
        pr_h(graph, len(lat))


def test_vertex_and_edge_counts():
    graph = sgb(make_dihedral(3))
    assert graph.edge_count == 36
    assert graph.vertex_count == 36 + 6


ORACLE_GROUPS = [make_cyclic(n) for n in (1, 2, 6, 8, 9, 12)] + [make_dihedral(n) for n in (2, 3, 4, 6)] + [
    make_dicyclic(n) for n in (2, 3)
] + [klein(), make_direct_product(make_cyclic(2), make_cyclic(4))]


@pytest.mark.parametrize("g", ORACLE_GROUPS, ids=str)
def test_degrees_match_naive_closure(g):
    lat = all_subgroups(g)
    graph = build_sgb(g, lat)
    naive = pair_degrees(g.rows)
    got = {h.elements: d for h, d in zip(lat, graph.degrees) if d}
    assert got == naive


@pytest.mark.parametrize("g", [make_dicyclic(6), make_dihedral(20), make_cyclic(90)], ids=str)
@pytest.mark.parametrize("workers,chunk", [(1, 1), (1, 7), (4, 3), (3, 64)])
def test_parallel_matches_sequential(g, workers, chunk):
    lat = all_subgroups(g)
    assert build_sgb(g, lat, workers=workers, chunk=chunk) == build_sgb(g, lat)


@pytest.mark.parametrize("g", [make_cyclic(n) for n in (1, 30, 64)] + [make_dihedral(15), make_dicyclic(9)], ids=str)
def test_degree_sum(g):
    assert sum(sgb(g).degrees) == g.order**2


def test_lattice_from_other_group_rejected():
    with pytest.raises(InvalidInput):
        build_sgb(make_cyclic(6), all_subgroups(make_dihedral(3)))


def test_equal_table_lattice_accepted():
    lat = all_subgroups(make_cyclic(6))
    assert build_sgb(make_cyclic(6), lat).degrees == (1, 3, 8, 24)


def test_star_decomposition_isolated():
    dec = StarDecomposition.from_sizes([4, 1], isolated=2)
    assert dec.stars == (1, 4) and dec.components == 4
    assert str(dec) == "K_2 + K_{1,4} + 2K_1"


def test_dot_output():
    text = to_dot(sgb(make_cyclic(6)))
    assert text.startswith('graph "B(Z6)" {')
    assert 'H3 [shape=box, label="H3(order=6, deg=24)"];' in text
    assert 'P3 [shape=ellipse, label="24 pairs"];' in text
    assert 'H3 -- P3 [label="x24"];' in text
    assert text.rstrip().endswith("}")
