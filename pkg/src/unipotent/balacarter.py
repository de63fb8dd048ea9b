"""Distinguished parabolics and the pair parameterization of unipotent classes.

A pair consists of the general-linear block sizes of a Levi subgroup
together with the Jordan type of a distinguished Richardson class of its
classical factor.  In good characteristic the map sending a pair to the
Jordan type of the extended class is a bijection onto the unipotent
classes; in characteristic two extra classes exist and labeling is refused.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .groups import (
    GL, GOOD, SO_EVEN, SO_ODD, SP, TWO,
    DomainError, GroupSpec, UnsupportedRegimeError,
)
from .partitions import Partition, partition, partitions_of, satisfies_parity
from .rootsystems import RootSystem, is_distinguished, node_subsets, radical_dims


@dataclass(frozen=True)
class BCPair:
    """General-linear factor sizes plus a distinguished Jordan type of the
    classical factor (empty when that factor is trivial)."""

    gl_factors: tuple[int, ...]
    dist: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gl_factors", partition(self.gl_factors))
        object.__setattr__(self, "dist", partition(self.dist))

    def __str__(self):
        gl = ",".join(str(x) for x in self.gl_factors)
        dist = ",".join(str(x) for x in self.dist)
        return f"({gl})|({dist})"


def _distinct(p: Partition) -> bool:
    return len(set(p)) == len(p)


def _max_multiplicity(p: Partition) -> int:
    return max(Counter(p).values(), default=0)


def _even_index_gaps_ok(p: Partition, guard_on_next: bool) -> bool:
    """Check the gap rule at even positions of a char-two distinguished type.

    ``guard_on_next`` selects which of the two printed guards applies: the
    even orthogonal rule skips positions whose successor part vanishes,
    the odd orthogonal rule skips positions whose own part vanishes.
    """
    for i in range(2, len(p) + 1, 2):  # 1-based even positions
        cur = p[i - 1]
        nxt = p[i] if i < len(p) else 0
        if guard_on_next:
            if nxt != 0 and cur - nxt < 4:
                return False
        else:
            if cur != 0 and cur - nxt < 4:
                return False
    return True


def distinguished_partitions(g: GroupSpec) -> tuple[Partition, ...]:
    """Jordan types of the distinguished Richardson classes of ``g``."""
    fam, ch, n = g.family, g.char, g.rank
    N = g.natural_dim
    if fam == GL:
        return ((n,),) if n else ((),)
    if fam == SP:
        return tuple(
            p for p in partitions_of(N)
            if _distinct(p) and all(x % 2 == 0 for x in p))
    if fam == SO_ODD and ch == GOOD:
        return tuple(
            p for p in partitions_of(N)
            if _distinct(p) and all(x % 2 == 1 for x in p))
    if fam == SO_EVEN and ch == GOOD:
        return tuple(
            p for p in partitions_of(N)
            if _distinct(p) and all(x % 2 == 1 for x in p))
    if fam == SO_EVEN and ch == TWO:
        return tuple(
            p for p in partitions_of(N)
            if len(p) % 2 == 0
            and all(x % 2 == 0 for x in p)
            and _max_multiplicity(p) <= 2
            and _even_index_gaps_ok(p, guard_on_next=True))
    if fam == SO_ODD and ch == TWO:
        return tuple(
            partition(p + (1,)) for p in partitions_of(N - 1)
            if all(x % 2 == 0 for x in p)
            and _max_multiplicity(p) <= 2
            and _even_index_gaps_ok(p, guard_on_next=False))
    raise DomainError(f"no distinguished table for {g}")


def enumerate_distinguished_parabolics(rs: RootSystem) -> tuple[frozenset[int], ...]:
    """All node subsets whose standard parabolic is distinguished."""
    found = [J for J in node_subsets(rs.rank) if is_distinguished(rs, J)]
    found.sort(key=lambda J: (len(J), sorted(J)))
    return tuple(found)


def levi_dims_injective(rs: RootSystem) -> bool:
    """Whether distinct distinguished parabolics have distinct Levi dimensions."""
    dims = [radical_dims(rs, J)[2] for J in enumerate_distinguished_parabolics(rs)]
    return len(set(dims)) == len(dims)


def _classical_factor(g: GroupSpec, dist: Partition) -> GroupSpec:
    """Group of the classical factor carrying ``dist``."""
    s = sum(dist)
    if g.family == GL:
        return GroupSpec(GL, s, g.char)
    if g.family == SO_ODD:
        if s % 2 == 0:
            raise DomainError("odd orthogonal factors have odd natural dimension")
        return GroupSpec(SO_ODD, (s - 1) // 2, g.char)
    if s % 2 == 1:
        raise DomainError(f"{g} factors have even natural dimension")
    family = SP if g.family == SP else SO_EVEN
    return GroupSpec(family, s // 2, g.char)


def check_pair(g: GroupSpec, pair: BCPair) -> None:
    """Reject pairs that violate the shape or distinguishedness invariants."""
    doubled = 1 if g.family == GL else 2
    total = doubled * sum(pair.gl_factors) + sum(pair.dist)
    if total != g.natural_dim:
        raise DomainError(
            f"pair {pair} fills {total} of the {g.natural_dim} natural dimensions of {g}")
    factor = _classical_factor(g, pair.dist)
    if pair.dist not in distinguished_partitions(factor):
        raise DomainError(f"{pair.dist} is not distinguished for {factor}")
    if g.family == GL and pair.gl_factors:
        # canonical form: the designated block carries the largest part
        if not pair.dist or pair.dist[0] < pair.gl_factors[0]:
            raise DomainError("general linear pairs designate their largest factor")


def bc_image(g: GroupSpec, pair: BCPair) -> Partition:
    """Jordan type of the class obtained by extending the pair's class."""
    check_pair(g, pair)
    if g.family == GL:
        return partition(pair.gl_factors + pair.dist)
    doubled = tuple(x for x in pair.gl_factors for _ in range(2))
    return partition(doubled + pair.dist)


def bc_label(g: GroupSpec, p: Partition) -> BCPair:
    """The unique pair mapping onto Jordan type ``p`` (good characteristic).

    The classical factor keeps one copy of every part size of the wrong
    parity to pair off; the remaining copies pair into hyperbolic
    general-linear blocks.
    """
    if g.char == TWO:
        raise UnsupportedRegimeError(
            "characteristic two carries extra classes beyond the pair "
            "parameterization; labels are only defined away from it")
    p = partition(p)
    if not satisfies_parity(p, g):
        raise DomainError(f"{p} is not a unipotent Jordan type for {g}")
    if g.family == GL:
        if not p:
            raise DomainError("cannot label the empty type")
        return BCPair(p[1:], (p[0],))
    keep_parity = 0 if g.family == SP else 1
    counts = Counter(p)
    dist = tuple(sorted(
        (j for j, c in counts.items() if j % 2 == keep_parity and c % 2 == 1),
        reverse=True))
    gl = []
    for j, c in counts.items():
        gl += [j] * ((c - (1 if j in dist else 0)) // 2)
    pair = BCPair(tuple(gl), dist)
    assert bc_image(g, pair) == p
    return pair


def bc_enumerate(g: GroupSpec) -> tuple[BCPair, ...]:
    """All pairs for ``g`` in good characteristic, sorted by their image."""
    if g.char == TWO:
        raise UnsupportedRegimeError("pair enumeration is defined away from "
                                     "characteristic two")
    if g.family == GL:
        pairs = [BCPair(p[1:], (p[0],)) for p in partitions_of(g.rank)]
    elif g.family in (SP, SO_ODD, SO_EVEN):
        pairs = []
        for m in range(g.rank + 1):
            family = SP if g.family == SP else g.family
            factor = GroupSpec(family, m, GOOD)
            for dist in distinguished_partitions(factor):
                for gl in partitions_of(g.rank - m):
                    pairs.append(BCPair(gl, dist))
    else:
        raise DomainError(f"no pair parameterization for {g}")
    pairs.sort(key=lambda pr: bc_image(g, pr), reverse=True)
    return tuple(pairs)
