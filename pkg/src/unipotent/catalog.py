"""Unipotent class bookkeeping: dimensions and the closure-order poset."""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    GL, GOOD, O_EVEN, SO_EVEN, SO_ODD, SP, TWO,
    DomainError, GroupSpec, UnsupportedRegimeError,
)
from .partitions import (
    Dominance, Partition, class_partitions, compare_dominance, dual,
    format_partition, partition, satisfies_parity,
)


@dataclass(frozen=True)
class ClassRecord:
    """A unipotent class: Jordan type, ambient group, and (in characteristic
    two) the number of even parts whose Jordan chains span degenerate
    subspaces, when that is known."""

    partition: Partition
    group: GroupSpec
    singular_even_count: int | None = None

    def __post_init__(self):
        p = partition(self.partition)
        object.__setattr__(self, "partition", p)
        if not satisfies_parity(p, self.group):
            raise DomainError(f"{p} is not a unipotent Jordan type for {self.group}")
        if self.singular_even_count is not None:
            evens = sum(1 for x in p if x % 2 == 0)
            if not 0 <= self.singular_even_count <= evens:
                raise DomainError(
                    f"singular even count must lie in 0..{evens} for {p}")


def _square_sum_of_dual(p: Partition) -> int:
    return sum(d * d for d in dual(p))


def _odd_parts(p: Partition) -> int:
    return sum(1 for x in p if x % 2 == 1)


def _even_parts(p: Partition) -> int:
    return sum(1 for x in p if x % 2 == 0)


def centralizer_dim(rec: ClassRecord) -> int | tuple[int, int]:
    """Dimension of the centralizer of an element of the class.

    Away from characteristic two these are the classical closed forms.  In
    characteristic two the dimension exceeds a base value by the number of
    singular even parts: the base is the complex symplectic value for the
    same blocks, lowered by the number of parts for the even orthogonal
    groups, which sit inside the symplectic group there.  Without the
    singularity count the result is the two-sided bound (base, base + e)
    with e the number of even parts.
    """
    p, g = rec.partition, rec.group
    squares = _square_sum_of_dual(p)
    if g.family == GL:
        return squares
    if g.char == GOOD:
        if g.family == SP:
            return (squares + _odd_parts(p)) // 2
        return (squares - _odd_parts(p)) // 2
    if g.family == SO_ODD:
        raise UnsupportedRegimeError(
            "centralizer dimensions for odd orthogonal groups in "
            "characteristic two are not modeled")
    base = (squares + _odd_parts(p)) // 2
    if g.family in (SO_EVEN, O_EVEN):
        base -= len(p)
    evens = _even_parts(p)
    if rec.singular_even_count is not None:
        return base + rec.singular_even_count
    if evens == 0:
        return base
    return (base, base + evens)


def class_dim(rec: ClassRecord) -> int | tuple[int, int]:
    """Dimension of the class; an interval when the centralizer is one."""
    total = rec.group.group_dim
    c = centralizer_dim(rec)
    if isinstance(c, tuple):
        return (total - c[1], total - c[0])
    return total - c


@dataclass(frozen=True)
class ClassPoset:
    """Unipotent classes of a group ordered by dominance of Jordan types."""

    group: GroupSpec
    nodes: tuple[Partition, ...]
    covers: tuple[tuple[Partition, Partition], ...]  # (lower, upper)

    def leq(self, a: Partition, b: Partition) -> bool:
        return compare_dominance(a, b) in (Dominance.LESS, Dominance.EQUAL)

    @property
    def maximum(self) -> Partition:
        tops = [p for p in self.nodes if not any(lo == p for lo, _ in self.covers)]
        if len(tops) != 1:
            raise AssertionError("closure order should have a unique maximum")
        return tops[0]

    @property
    def minimum(self) -> Partition:
        bots = [p for p in self.nodes if not any(hi == p for _, hi in self.covers)]
        if len(bots) != 1:
            raise AssertionError("closure order should have a unique minimum")
        return bots[0]


def closure_poset(g: GroupSpec) -> ClassPoset:
    """Closure order of the unipotent classes of ``g``.

    Dominance of Jordan types matches closure of classes away from
    characteristic two and for every general linear group; the remaining
    regime is refused rather than approximated.
    """
    if g.char == TWO and g.family != GL:
        raise UnsupportedRegimeError(
            "closure order in characteristic two is only modeled for the "
            "general linear family")
    nodes = class_partitions(g)
    above: dict[Partition, set[Partition]] = {p: set() for p in nodes}
    for a in nodes:
        for b in nodes:
            if a != b and compare_dominance(a, b) is Dominance.LESS:
                above[a].add(b)
    order = {p: i for i, p in enumerate(nodes)}
    covers = []
    for a in nodes:
        ups = above[a]
        for b in sorted(ups, key=order.get):
            if not any(b in above[c] for c in ups if c != b):
                covers.append((a, b))
    covers.sort(key=lambda e: (order[e[0]], order[e[1]]))
    return ClassPoset(g, nodes, tuple(covers))


def _node_dim(g: GroupSpec, p: Partition) -> int:
    d = class_dim(ClassRecord(p, g))
    assert isinstance(d, int)  # poset construction refused inexact regimes
    return d


def poset_to_dot(poset: ClassPoset) -> str:
    """Hasse diagram in DOT: one node per Jordan type, one edge per cover."""
    g = poset.group
    lines = ["digraph closure_order {", "  rankdir=BT;"]
    for p in poset.nodes:
        name = format_partition(p)
        lines.append(f'  "{name}" [label="{name} (dim {_node_dim(g, p)})"];')
    for lo, hi in poset.covers:
        lines.append(f'  "{format_partition(lo)}" -> "{format_partition(hi)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json(poset: ClassPoset) -> dict:
    g = poset.group
    return {
        "family": g.family,
        "rank": g.rank,
        "char": g.char,
        "nodes": [
            {"partition": format_partition(p), "dim": _node_dim(g, p)}
            for p in poset.nodes
        ],
        "covers": [
            [format_partition(lo), format_partition(hi)] for lo, hi in poset.covers
        ],
    }
