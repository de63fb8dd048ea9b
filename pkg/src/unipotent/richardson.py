"""Jordan blocks of Richardson classes of standard parabolics.

Each classical family (split by characteristic class where it matters)
turns a Levi shape into a multiset of block sizes whose dual is the
Jordan type of the dense unipotent class meeting the parabolic's radical.
The odd orthogonal family in characteristic two is not covered by a table
row of its own: its Jordan type is the symplectic answer for the same
Levi shape with one extra unit block.
"""

from __future__ import annotations

from collections import Counter

from .groups import (
    GL, GOOD, O_EVEN, SO_EVEN, SO_ODD, SP, TWO,
    DomainError, GroupSpec, LeviDatum, UnsupportedRegimeError, check_levi,
)
from .partitions import Partition, dual, partition


def richardson_dual(g: GroupSpec, levi: LeviDatum) -> Partition:
    """Multiset of block sizes (as a partition) whose dual is the
    Richardson Jordan type of a parabolic with shape ``levi``."""
    check_levi(g, levi)
    fam, ch = g.family, g.char
    if fam == GL:
        return tuple(levi.gl_parts)
    if fam == O_EVEN:
        raise DomainError("use the special orthogonal family for Richardson data")
    if fam == SO_ODD and ch == TWO:
        raise UnsupportedRegimeError(
            "odd orthogonal groups in characteristic two have no direct rule; "
            "richardson_partition applies the symplectic one and adds a unit block")

    m = levi.cl_rank
    counts = Counter(levi.gl_parts)
    out: list[int] = []
    if fam == SO_ODD:
        out.append(2 * m + 1)
        for j, c in counts.items():
            if j % 2 == 0 and j > 2 * m + 1:
                out += [j + 1] + [j] * (2 * c - 2) + [j - 1]
            else:
                out += [j] * (2 * c)
    elif fam == SP:
        out.append(2 * m)
        for j, c in counts.items():
            if j % 2 == 1 and j < 2 * m:
                out += [j + 1] + [j] * (2 * c - 2) + [j - 1]
            else:
                out += [j] * (2 * c)
    elif fam == SO_EVEN and ch == GOOD:
        out.append(2 * m)
        for j, c in counts.items():
            if j % 2 == 1 and j > 2 * m:
                out += [j + 1] + [j] * (2 * c - 2) + [j - 1]
            else:
                out += [j] * (2 * c)
    else:  # even orthogonal, characteristic two
        out.append(2 * m)
        for j, c in counts.items():
            if j % 2 == 0:
                out += [j] * (2 * c)
            elif j <= 2 * m:
                out += [j + 1] + [j] * (2 * c - 2) + [j - 1]
            elif c == 1:
                out += [j + 1, j - 1]
            else:
                out += [j + 1] * 2 + [j] * (2 * c - 4) + [j - 1] * 2
    return partition(out)  # drops the zero emitted at j = 1 or m = 0


def richardson_partition(g: GroupSpec, levi: LeviDatum) -> Partition:
    """Jordan type of the Richardson class of a parabolic with shape ``levi``."""
    if g.family == SO_ODD and g.char == TWO:
        sp = GroupSpec(SP, g.rank, TWO)
        return partition(richardson_partition(sp, levi) + (1,))
    return dual(richardson_dual(g, levi))


def regular_partition(g: GroupSpec) -> tuple[Partition, ...]:
    """Jordan types of the regular unipotent classes of ``g``.

    A single class everywhere except the even full orthogonal group in
    characteristic two, which has one per connected component.
    """
    n = g.rank
    fam, ch = g.family, g.char
    if fam == GL:
        if n < 1:
            raise DomainError("regular elements need a positive rank")
        return ((n,),)
    if fam == SP:
        return ((2 * n,),)
    if fam == SO_ODD:
        if ch == TWO:
            raise UnsupportedRegimeError(
                "regular Jordan types for odd orthogonal groups are only "
                "given away from characteristic two")
        return ((2 * n + 1,),)
    if n < 2:
        raise DomainError("even orthogonal regular types need rank >= 2")
    if fam == SO_EVEN:
        return ((2 * n - 1, 1),) if ch == GOOD else ((2 * n - 2, 2),)
    # full even orthogonal group
    if ch == GOOD:
        return ((2 * n - 1, 1),)
    return ((2 * n,), (2 * n - 2, 2))


def gl_richardson_preimage(p: Partition) -> LeviDatum:
    """A Levi shape whose general-linear Richardson class has type ``p``."""
    return LeviDatum(dual(partition(p)), 0)
