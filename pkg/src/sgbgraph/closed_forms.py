"""Closed-form star structures and Zagreb polynomials for nine group families,
and a harness that checks them against brute-force B(G) construction.

The formulas are transcribed as published. Where brute force disagrees,
:func:`verify_family` reports the mismatch rather than picking a side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalInconsistency, InvalidSpec, NonIntegralResult
from .group_core import FiniteGroup, make_cyclic, make_dicyclic, make_dihedral
from .indices import check_hv, star_indices, zagreb
from .sgb import StarDecomposition, build_sgb, star_decomposition
from .subgroups import all_subgroups

FAMILIES = (
    "cyclic_2p",
    "cyclic_2p2",
    "cyclic_4p",
    "cyclic_4p2",
    "cyclic_pn",
    "dihedral_2p",
    "dihedral_2p2",
    "dicyclic_4p",
    "dicyclic_4p2",
)
ODD_ONLY = {"cyclic_2p", "cyclic_2p2", "cyclic_4p", "cyclic_4p2"}
INDEX_RTOL = 1e-12


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True)
class FamilySpec:
    family: str
    p: int
    n: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidSpec(f"unknown family {self.family!r}")
        if not is_prime(self.p):
            raise InvalidSpec(f"p = {self.p} is not prime")
        if self.family in ODD_ONLY and self.p == 2:
            raise InvalidSpec(f"{self.family} requires an odd prime; use cyclic_pn for p = 2")
        if self.n < 1:
            raise InvalidSpec("n must be >= 1")
        if self.family != "cyclic_pn" and self.n != 1:
            raise InvalidSpec(f"n only applies to cyclic_pn, got n = {self.n}")

    @property
    def order(self) -> int:
        p, n = self.p, self.n
        return {
            "cyclic_2p": 2 * p,
            "cyclic_2p2": 2 * p * p,
            "cyclic_4p": 4 * p,
            "cyclic_4p2": 4 * p * p,
            "cyclic_pn": p**n,
            "dihedral_2p": 2 * p,
            "dihedral_2p2": 2 * p * p,
            "dicyclic_4p": 4 * p,
            "dicyclic_4p2": 4 * p * p,
        }[self.family]

    def build_group(self) -> FiniteGroup:
        kind = self.family.split("_")[0]
        if kind == "cyclic":
            return make_cyclic(self.order)
        if kind == "dihedral":
            return make_dihedral(self.order // 2)
        return make_dicyclic(self.order // 4)

    def __str__(self):
        if self.family == "cyclic_pn":
            return f"{self.family}(p={self.p}, n={self.n})"
        return f"{self.family}(p={self.p})"


def _star_sizes(spec: FamilySpec) -> list[int]:
    p, f = spec.p, spec.family
    p2, p4 = p * p, p**4
    if f == "cyclic_2p":
        return [1, 3, p2 - 1, 3 * p2 - 3]
    if f == "cyclic_2p2":
        return [1, 3, p2 - 1, 3 * p2 - 3, p4 - p2, 3 * p4 - 3 * p2]
    if f == "cyclic_4p":
        return [1, 3, 12, p2 - 1, 3 * p2 - 3, 12 * p2 - 12]
    if f == "cyclic_4p2":
        return [1, 3, 12, p2 - 1, p4 - p2, 3 * p2 - 3, 3 * p4 - 3 * p2, 12 * p2 - 12, 12 * p4 - 12 * p2]
    if f == "cyclic_pn":
        return [1] + [p ** (2 * k - 2) * (p2 - 1) for k in range(1, spec.n + 1)]
    if f == "dihedral_2p":
        return [1] + [3] * p + [p2 - 1, 3 * p * (p - 1)]
    if f == "dihedral_2p2":
        return [1] + [3] * p2 + [p2 - 1, p4 - p2] + [3 * p * (p - 1)] * p + [3 * p2 * (p2 - p)]
    if f == "dicyclic_4p":
        if p == 2:
            return [1, 3, 12, 12, 12, 24]
        return [1, 3] + [12] * p + [p2 - 1, 3 * p2 - 3, 12 * p2 - 12 * p]
    if f == "dicyclic_4p2":
        if p == 2:
            return [1, 3] + [12] * 5 + [24, 24, 48, 96]
        return (
            [1, 3]
            + [12] * p2
            + [p2 - 1, 3 * p2 - 3, 3 * p4 - 3 * p2]
            + [12 * p2 - 12 * p] * (p - 1)
            + [13 * p4 - 12 * p**3 + 11 * p2 - 12 * p]
        )
    raise InvalidSpec(f"unknown family {f!r}")


def structure_formula(spec: FamilySpec) -> StarDecomposition:
    """Published star decomposition of B(G) for the family instance."""
    sizes = _star_sizes(spec)
    if sum(sizes) != spec.order**2:
        raise InternalInconsistency(f"{spec}: star sizes sum to {sum(sizes)}, not |G|^2")
    return StarDecomposition.from_sizes(sizes)


def zagreb_formula(spec: FamilySpec) -> tuple[int, int]:
    """Published (M1, M2) polynomials evaluated exactly."""
    p, f = spec.p, spec.family
    if f == "cyclic_2p":
        m1 = 10 * p**4 - 16 * p**2 + 20
    elif f == "cyclic_2p2":
        m1 = 10 * p**8 - 20 * p**6 + 24 * p**4 - 20 * p**2 + 20
    elif f == "cyclic_4p":
        m1 = 154 * p**4 - 292 * p**2 + 308
    elif f == "cyclic_4p2":
        m1 = 154 * p**8 - 308 * p**6 + 324 * p**4 - 308 * p**2 + 308
    elif f == "cyclic_pn":
        n = spec.n
        num = p ** (2 * n) * (p**2 + 1) + p ** (4 * n) * (p**2 - 1) + 2
        m1, rem = divmod(num, p**2 + 1)
        if rem:
            raise NonIntegralResult(f"{spec}: M1 = {num}/{p**2 + 1} is not an integer")
    elif f == "dihedral_2p":
        m1 = 10 * p**4 - 18 * p**3 + 11 * p**2 + 9 * p + 2
    elif f == "dihedral_2p2":
        m1 = 10 * p**8 - 18 * p**7 + 7 * p**6 + 9 * p**5 - 12 * p**4 + 9 * p**3 + 7 * p**2 + 2
    elif f == "dicyclic_4p":
        m1 = 1082 if p == 2 else 154 * p**4 - 288 * p**3 + 140 * p**2 + 144 * p + 20
    elif f == "dicyclic_4p2":
        if p == 2:
            m1 = 13658
        else:
            m1 = (
                178 * p**8 - 312 * p**7 + 412 * p**6 - 432 * p**5
                + 12 * p**4 + 168 * p**3 + 124 * p**2 + 20
            )
    else:
        raise InvalidSpec(f"unknown family {f!r}")
    return m1, m1 - spec.order**2


def criterion_formula(spec: FamilySpec) -> Fraction:
    """|L(G)| * P - 1 implied by the published structure and M2."""
    stars = structure_formula(spec)
    _, m2 = zagreb_formula(spec)
    return Fraction(stars.components * m2, spec.order**4) - 1


def _close_enough(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=INDEX_RTOL, abs_tol=0.0) or a == b


@dataclass
class VerificationReport:
    spec: FamilySpec
    structure_match: bool
    m1_match: bool
    m2_match: bool
    hv_match: bool
    indices_match: bool
    brute: dict = field(default_factory=dict)
    formula: dict = field(default_factory=dict)
    isolated: int = 0

    @property
    def ok(self) -> bool:
        return self.structure_match and self.m1_match and self.m2_match and self.hv_match and self.indices_match

    def mismatches(self) -> list[str]:
        flags = ("structure", "m1", "m2", "hv", "indices")
        vals = (self.structure_match, self.m1_match, self.m2_match, self.hv_match, self.indices_match)
        return [name for name, good in zip(flags, vals) if not good]


def verify_family(spec: FamilySpec, cap: int | None = None, workers: int = 1) -> VerificationReport:
    g = spec.build_group()
    lattice = all_subgroups(g, cap=cap)
    graph = build_sgb(g, lattice, workers=workers)

    brute_stars = star_decomposition(graph)
    brute_m1, brute_m2 = zagreb(graph)
    brute_hv = check_hv(graph)
    brute_idx = star_indices(graph.degrees)

    f_stars = structure_formula(spec)
    f_m1, f_m2 = zagreb_formula(spec)
    f_crit = criterion_formula(spec)
    f_idx = star_indices(f_stars.stars)

    return VerificationReport(
        spec=spec,
        structure_match=brute_stars == f_stars,
        m1_match=brute_m1 == f_m1,
        m2_match=brute_m2 == f_m2,
        hv_match=brute_hv.holds == (f_crit >= 0),
        indices_match=all(_close_enough(a, b) for a, b in zip(brute_idx, f_idx)),
        brute={
            "stars": list(brute_stars.stars),
            "m1": brute_m1,
            "m2": brute_m2,
            "criterion": brute_hv.criterion,
            "hv_holds": brute_hv.holds,
            "indices": brute_idx._asdict(),
        },
        formula={
            "stars": list(f_stars.stars),
            "m1": f_m1,
            "m2": f_m2,
            "criterion": f_crit,
            "hv_holds": f_crit >= 0,
            "indices": f_idx._asdict(),
        },
        isolated=brute_stars.isolated,
    )


def family_grid(families, primes, n_max: int = 3) -> list[FamilySpec]:
    """Admissible specs for every (family, prime) combination, in input order.

    Inadmissible combinations (p = 2 for odd-only families, non-primes) are
    dropped silently; cyclic_pn expands to n = 1..n_max.
    """
    out = []
    for fam in families:
        for p in primes:
            ns = range(1, n_max + 1) if fam == "cyclic_pn" else (1,)
            for n in ns:
                try:
                    out.append(FamilySpec(fam, p, n))
                except InvalidSpec:
                    if fam not in FAMILIES:
                        raise
    return out
