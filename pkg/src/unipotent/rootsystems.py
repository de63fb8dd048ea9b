"""Root systems in simple-root coordinates.

Types A through D form the computation backbone; G2, F4 and E6 through E8
are carried only far enough to enumerate distinguished parabolics.  All
systems are generated from their Cartan matrices by closing the simple
roots under simple reflections, so the classical count formulas double as
tests of the data.  Nodes use the standard Bourbaki labels 1..rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .groups import (
    GL, SO_EVEN, SO_ODD, SP, O_EVEN, DomainError, GroupSpec, LeviDatum, levi_datum,
)

TYPE_A = "A"
TYPE_B = "B"
TYPE_C = "C"
TYPE_D = "D"
TYPE_E6 = "E6"
TYPE_E7 = "E7"
TYPE_E8 = "E8"
TYPE_F4 = "F4"
TYPE_G2 = "G2"

CLASSICAL_TYPES = (TYPE_A, TYPE_B, TYPE_C, TYPE_D)
EXCEPTIONAL_RANKS = {TYPE_G2: 2, TYPE_F4: 4, TYPE_E6: 6, TYPE_E7: 7, TYPE_E8: 8}

#: expected number of positive roots, used as a construction invariant
POSITIVE_COUNTS = {
    TYPE_A: lambda n: n * (n + 1) // 2,
    TYPE_B: lambda n: n * n,
    TYPE_C: lambda n: n * n,
    TYPE_D: lambda n: n * (n - 1),
    TYPE_G2: lambda n: 6,
    TYPE_F4: lambda n: 24,
    TYPE_E6: lambda n: 36,
    TYPE_E7: lambda n: 63,
    TYPE_E8: lambda n: 120,
}

_E_EDGES = {
    TYPE_E6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    TYPE_E7: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
    TYPE_E8: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
}


def _chain_edges(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, rank)]


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry (i, j) the pairing of root j against coroot i."""
    if family in EXCEPTIONAL_RANKS:
        if rank != EXCEPTIONAL_RANKS[family]:
            raise DomainError(f"type {family} has rank {EXCEPTIONAL_RANKS[family]}")
    elif family == TYPE_A:
        if rank < 0:
            raise DomainError("type A needs rank >= 0")
    elif family in (TYPE_B, TYPE_C):
        if rank < 1:
            raise DomainError(f"type {family} needs rank >= 1")
    elif family == TYPE_D:
        if rank < 3:
            raise DomainError("type D needs rank >= 3")
    else:
        raise DomainError(f"unknown root-system type {family!r}")

    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if family == TYPE_D:
        edges = _chain_edges(rank - 1) + [(rank - 2, rank)]
    elif family in _E_EDGES:
        edges = _E_EDGES[family]
    else:
        edges = _chain_edges(rank)
    for i, j in edges:
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1
    if family == TYPE_B and rank >= 2:
        a[rank - 1][rank - 2] = -2  # last node short
    elif family == TYPE_C and rank >= 2:
        a[rank - 2][rank - 1] = -2  # last node long
    elif family == TYPE_F4:
        a[2][1] = -2  # nodes 1, 2 long; 3, 4 short
    elif family == TYPE_G2:
        a[0][1] = -3  # node 1 short, node 2 long
    return tuple(tuple(row) for row in a)


def _positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    """Close the simple roots under simple reflections, keep the positives."""
    rank = len(cartan)
    if rank == 0:
        return ()
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        fresh = []
        for root in frontier:
            for i in range(rank):
                pairing = sum(c * cartan[i][j] for j, c in enumerate(root))
                if pairing == 0:
                    continue
                image = list(root)
                image[i] -= pairing
                image = tuple(image)
                if image not in seen:
                    seen.add(image)
                    fresh.append(image)
        frontier = fresh
    positives = [r for r in seen if all(c >= 0 for c in r)]
    positives.sort(key=lambda r: (sum(r), r))
    return tuple(positives)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def __str__(self):
        return f"{self.family}{self.rank}"


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    cartan = cartan_matrix(family, rank)
    positives = _positive_roots(cartan)
    expected = POSITIVE_COUNTS[family](rank)
    if len(positives) != expected:
        raise AssertionError(
            f"{family}{rank}: generated {len(positives)} positive roots, "
            f"expected {expected}")
    return RootSystem(family, rank, cartan, positives)


def rootsystem_for(g: GroupSpec) -> RootSystem:
    """Root system of the given classical group (GL_n sits on type A_{n-1})."""
    if g.family == GL:
        return root_system(TYPE_A, g.rank - 1)
    if g.family == SO_ODD:
        return root_system(TYPE_B, g.rank)
    if g.family == SP:
        return root_system(TYPE_C, g.rank)
    if g.family in (SO_EVEN, O_EVEN):
        return root_system(TYPE_D, g.rank)
    raise DomainError(f"no root system for {g}")


def check_nodes(rs: RootSystem, nodes: Iterable[int]) -> frozenset[int]:
    J = frozenset(int(i) for i in nodes)
    if not J <= set(rs.nodes):
        raise DomainError(f"nodes {sorted(J)} do not all lie in 1..{rs.rank}")
    return J


def parse_nodes(text: str) -> frozenset[int]:
    """Parse ``"1,3"``; empty input selects the Borel subgroup."""
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad node string {text!r}") from exc


def node_subsets(rank: int) -> Iterator[frozenset[int]]:
    """All subsets of {1..rank}, in mask order."""
    for mask in range(1 << rank):
        yield frozenset(i + 1 for i in range(rank) if mask >> i & 1)


def p_height(root: tuple[int, ...], nodes: Iterable[int]) -> int:
    """Sum of the root's coefficients over the simple roots outside ``nodes``."""
    J = set(nodes)
    return sum(c for i, c in enumerate(root, start=1) if i not in J)


def _supported_inside(root, J) -> bool:
    return all(c == 0 for i, c in enumerate(root, start=1) if i not in J)


def radical_dims(rs: RootSystem, nodes) -> tuple[int, int, int]:
    """(dim Q, dim Q/Q', dim L/Z) for the standard parabolic of ``nodes``.

    dim Q counts the radical roots, dim Q/Q' those of height one, and the
    Levi dimension is the rank plus both signs of every root supported
    inside the node set (the center of a simple group has dimension zero).
    """
    J = check_nodes(rs, nodes)
    levi_count = sum(1 for r in rs.positive_roots if _supported_inside(r, J))
    radical = [r for r in rs.positive_roots if not _supported_inside(r, J)]
    height_one = sum(1 for r in radical if p_height(r, J) == 1)
    return (len(radical), height_one, rs.rank + 2 * levi_count)


def is_distinguished(rs: RootSystem, nodes) -> bool:
    """A parabolic is distinguished when its Levi dimension (mod center)
    equals the number of height-one radical roots; the test does not
    depend on the characteristic."""
    _, height_one, levi_mod_z = radical_dims(rs, nodes)
    return levi_mod_z == height_one


def levi_partition(rs: RootSystem, nodes) -> LeviDatum:
    """Extract the Levi shape of a standard parabolic of a classical system.

    The classical tail takes the longest run of selected nodes at the far
    end of the diagram; the remaining selected nodes cut the initial
    coordinates into runs, and a run of k nodes yields a general-linear
    block of size k + 1.  In type D a lone far fork node is first swapped
    onto its partner by the diagram automorphism: the literal far-end rule
    would report a rank-one torus tail there, which has no unipotent
    content and breaks the centralizer-dimension identity, while the swap
    is induced by conjugation in the full orthogonal group and so leaves
    all Jordan data unchanged.
    """
    J = check_nodes(rs, nodes)
    fam, n = rs.family, rs.rank
    if fam == TYPE_A:
        coords = n + 1
        m = 0
    elif fam in (TYPE_B, TYPE_C):
        m = 0
        while m < n and (n - m) in J:
            m += 1
        coords = n - m
    elif fam == TYPE_D:
        if n in J and (n - 1) not in J:
            J = (J - {n}) | {n - 1}
        if n in J:  # both fork nodes selected, genuine even-orthogonal tail
            m = 2
            while m < n and (n - m) in J:
                m += 1
        else:
            m = 0
        coords = n - m
    else:
        raise DomainError("Levi extraction applies to classical types only")

    parts = []
    run = 1
    for i in range(1, coords):  # node i links coordinates i and i+1
        if i in J:
            run += 1
        else:
            parts.append(run)
            run = 1
    if coords >= 1:
        parts.append(run)
    return levi_datum(parts, m)
