"""Integer partitions: duals, dominance order, parity filters, enumeration."""

from __future__ import annotations

from collections import Counter
from enum import Enum
from itertools import zip_longest
from typing import Iterable, Iterator

from .groups import GL, O_EVEN, SO_EVEN, SO_ODD, SP, TWO, DomainError, GroupSpec

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Canonical form: weakly decreasing positive entries, zeros dropped."""
    out = sorted((int(x) for x in parts), reverse=True)
    while out and out[-1] == 0:
        out.pop()
    if out and out[-1] < 0:
        raise DomainError("partition entries must be nonnegative")
    return tuple(out)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise DomainError(f"bad partition string {text!r}") from exc
    if partition(parts) != parts:
        raise DomainError(f"{text!r} is not a weakly decreasing positive sequence")
    return parts


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def dual(p: Partition) -> Partition:
    """Transpose of the diagram: entry i counts parts of size at least i."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


class Dominance(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def compare_dominance(lam: Partition, mu: Partition) -> Dominance:
    """Compare prefix sums; defined only for partitions of the same number."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise DomainError("dominance compares partitions of equal sums only")
    if lam == mu:
        return Dominance.EQUAL
    le = ge = True
    a = b = 0
    for x, y in zip_longest(lam, mu, fillvalue=0):
        a += x
        b += y
        if a > b:
            le = False
        if a < b:
            ge = False
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    return compare_dominance(lam, mu) in (Dominance.LESS, Dominance.EQUAL)


def two_place_chain(lam: Partition, mu: Partition) -> list[Partition]:
    """Walk from ``lam`` up to ``mu`` moving one box per step.

    Each step raises one position and lowers a later one, so consecutive
    entries differ in exactly two places after zero padding, and every
    step strictly ascends in dominance.  Any valid chain would do; this
    is the greedy one: raise the first position that is still short,
    take the box from the first position where the prefix sums meet again.
    """
    if compare_dominance(lam, mu) is not Dominance.LESS:
        raise DomainError("chain endpoints must satisfy strict dominance")
    width = max(len(lam), len(mu))
    cur = list(lam) + [0] * (width - len(lam))
    target = list(mu) + [0] * (width - len(mu))
    chain = [partition(lam)]
    while cur != target:
        i = next(k for k in range(width) if cur[k] != target[k])
        slack = 0
        j = None
        for k in range(i, width):
            slack += target[k] - cur[k]
            if k > i and slack == 0:
                j = k
                break
        cur[i] += 1
        cur[j] -= 1
        chain.append(partition(cur))
    return chain


def satisfies_parity(p: Partition, g: GroupSpec) -> bool:
    """Whether ``p`` is a valid unipotent Jordan type for ``g``."""
    p = partition(p)
    if sum(p) != g.natural_dim:
        raise DomainError(
            f"partition of {sum(p)} does not fit the natural module of {g} "
            f"(dimension {g.natural_dim})")
    mult = Counter(p)
    fam, ch = g.family, g.char
    if fam == GL:
        return True
    if fam == SP or (fam in (SO_EVEN, O_EVEN) and ch == TWO):
        ok = all(c % 2 == 0 for x, c in mult.items() if x % 2 == 1)
    elif fam == SO_ODD and ch == TWO:
        # symplectic rule on everything except a single unit block
        ok = mult[1] % 2 == 1 and all(
            c % 2 == 0 for x, c in mult.items() if x % 2 == 1 and x > 1)
    else:
        ok = all(c % 2 == 0 for x, c in mult.items() if x % 2 == 0)
    if fam == SO_EVEN and len(p) % 2 == 1:
        ok = False
    return ok


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise DomainError("cannot partition a negative number")
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(largest, n), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def class_partitions(g: GroupSpec) -> tuple[Partition, ...]:
    """Jordan types of all unipotent classes of ``g``, descending lexicographic."""
    return tuple(p for p in partitions_of(g.natural_dim) if satisfies_parity(p, g))
