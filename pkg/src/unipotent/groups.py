"""Specifications of classical groups, their Levi data and shared errors.

The supported families are the general linear, odd and even special
orthogonal, symplectic, and even full orthogonal groups.  Characteristic
enters only through the split between two and everything else, so a
specification carries a binary characteristic class rather than a prime.
"""

from __future__ import annotations

from dataclasses import dataclass

GL = "gl"
SO_ODD = "so-odd"
SO_EVEN = "so-even"
SP = "sp"
O_EVEN = "o-even"

FAMILIES = (GL, SO_ODD, SO_EVEN, SP, O_EVEN)

GOOD = "good"
TWO = "2"

CHAR_CLASSES = (GOOD, TWO)


class DomainError(ValueError):
    """An argument falls outside an operation's domain."""


class UnsupportedRegimeError(DomainError):
    """Valid input whose regime is deliberately not modeled."""


_FAMILY_NAMES = {GL: "GL", SO_ODD: "SO", SO_EVEN: "SO", SP: "Sp", O_EVEN: "O"}


@dataclass(frozen=True)
class GroupSpec:
    """A classical group given by family, rank and characteristic class."""

    family: str
    rank: int
    char: str = GOOD

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 0:
            raise DomainError("rank must be a nonnegative integer")
        if self.char not in CHAR_CLASSES:
            raise DomainError(f"characteristic class must be one of {CHAR_CLASSES}")

    @property
    def natural_dim(self) -> int:
        """Dimension of the natural module."""
        if self.family == GL:
            return self.rank
        if self.family == SO_ODD:
            return 2 * self.rank + 1
        return 2 * self.rank

    @property
    def group_dim(self) -> int:
        """Dimension of the group as an algebraic variety."""
        n = self.rank
        if self.family == GL:
            return n * n
        if self.family in (SP, SO_ODD):
            return 2 * n * n + n
        return 2 * n * n - n

    @property
    def orthogonal(self) -> bool:
        return self.family in (SO_ODD, SO_EVEN, O_EVEN)

    def __str__(self):
        return f"{_FAMILY_NAMES[self.family]}_{self.natural_dim}"


@dataclass(frozen=True)
class LeviDatum:
    """Levi shape of a standard parabolic.

    ``gl_parts`` holds the sizes of the general-linear blocks in weakly
    decreasing order; ``cl_rank`` is the rank of the classical tail, zero
    when the tail is trivial.
    """

    gl_parts: tuple[int, ...]
    cl_rank: int = 0

    def __post_init__(self):
        parts = tuple(int(x) for x in self.gl_parts)
        object.__setattr__(self, "gl_parts", parts)
        if any(x <= 0 for x in parts):
            raise DomainError("general-linear block sizes must be positive")
        if list(parts) != sorted(parts, reverse=True):
            raise DomainError("general-linear block sizes must be weakly decreasing")
        if not isinstance(self.cl_rank, int) or self.cl_rank < 0:
            raise DomainError("classical tail rank must be a nonnegative integer")

    @property
    def ambient_rank(self) -> int:
        return sum(self.gl_parts) + self.cl_rank

    def __str__(self):
        return format_levi(self)


def levi_datum(parts, cl_rank: int = 0) -> LeviDatum:
    """Build a Levi datum, sorting the block sizes into canonical order."""
    return LeviDatum(tuple(sorted((int(x) for x in parts), reverse=True)), int(cl_rank))


def parse_levi(text: str) -> LeviDatum:
    """Parse ``"2,1+0"``; a missing ``+m`` tail means no classical factor."""
    text = text.strip()
    head, plus, tail = text.partition("+")
    try:
        cl = int(tail) if plus else 0
        parts = [int(tok) for tok in head.split(",") if tok.strip()] if head.strip() else []
    except ValueError as exc:
        raise DomainError(f"bad Levi string {text!r}") from exc
    return levi_datum(parts, cl)


def format_levi(levi: LeviDatum) -> str:
    return ",".join(str(x) for x in levi.gl_parts) + f"+{levi.cl_rank}"


def check_levi(g: GroupSpec, levi: LeviDatum) -> None:
    """Reject Levi data that does not fit inside ``g``."""
    if levi.ambient_rank != g.rank:
        raise DomainError(
            f"Levi datum {levi} totals {levi.ambient_rank}, expected rank {g.rank}")
    if g.family == GL and levi.cl_rank != 0:
        raise DomainError("general linear groups have no classical tail")


def levi_dim(family: str, levi: LeviDatum) -> int:
    """Dimension of a Levi subgroup with the given shape."""
    base = sum(x * x for x in levi.gl_parts)
    m = levi.cl_rank
    if family == GL:
        return base
    if family in (SP, SO_ODD):
        return base + 2 * m * m + m
    return base + 2 * m * m - m


def radical_dim(family: str, rank: int, levi: LeviDatum) -> int:
    """Dimension of the unipotent radical of a parabolic with this Levi."""
    g = GroupSpec(family, rank)
    return (g.group_dim - levi_dim(family, levi)) // 2
