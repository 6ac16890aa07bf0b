"""Subgroup generating bipartite graphs B(G) of finite groups: construction,
degree-based topological indices and the Hansen-Vukicevic inequality."""

from .closed_forms import FamilySpec, structure_formula, verify_family, zagreb_formula
from .group_core import (
    FiniteGroup,
    element_order,
    from_cayley_table,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
)
from .indices import check_hv, check_hv_generic, index_report, other_indices, zagreb
from .sgb import SgbGraph, StarDecomposition, build_sgb, pr_h, star_decomposition
from .subgroups import Subgroup, SubgroupLattice, all_subgroups, generated_subgroup, lattice_lookup

__version__ = "0.1.0"
