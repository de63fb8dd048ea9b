"""Acceptance battery: the exact identities the package promises.

Every check is an exhaustive equality or inequality over a stated range,
so each either passes or names its first counterexample.  The command
line front end runs these under ``selfcheck``; the test suite runs them
one per test with a printed verdict line.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .balacarter import (
    bc_enumerate, bc_image, bc_label, distinguished_partitions,
    enumerate_distinguished_parabolics, levi_dims_injective,
)
from .catalog import ClassRecord, centralizer_dim, closure_poset
from .groups import (
    GL, GOOD, O_EVEN, SO_EVEN, SO_ODD, SP, TWO,
    GroupSpec, levi_datum, levi_dim,
)
from .ffgroups import form_space, verify_richardson
from .partitions import (
    Dominance, class_partitions, compare_dominance, dual, partitions_of,
    two_place_chain,
)
from .richardson import gl_richardson_preimage, regular_partition, richardson_partition
from .rootsystems import (
    is_distinguished, levi_partition, node_subsets, radical_dims, root_system,
)

#: classical systems exercised by the root-system checks, with the matching
#: group family (type A_{n-1} carries GL_n).
_CLASSICAL_SYSTEMS = (
    ("A", range(1, 8), GL),
    ("B", range(1, 8), SO_ODD),
    ("C", range(1, 8), SP),
    ("D", range(3, 8), SO_EVEN),
)
_EXCEPTIONAL_SYSTEMS = (("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8))


def _group_for(letter: str, rank: int, char: str) -> GroupSpec:
    family = {"A": GL, "B": SO_ODD, "C": SP, "D": SO_EVEN}[letter]
    group_rank = rank + 1 if family == GL else rank
    return GroupSpec(family, group_rank, char)


def check_base_case_goldens() -> str:
    """Two-block golden values for the small Levi shapes (2^a, 1^b)."""
    cases = 0
    for a in range(1, 5):
        twos = (2,) * a
        for b in range(1, 5):
            ones = (1,) * b
            so2 = lambda n: GroupSpec(SO_EVEN, n, TWO)
            sog = lambda n: GroupSpec(SO_EVEN, n, GOOD)
            checks = [
                (so2(2 * a), levi_datum(twos), (2 * a, 2 * a)),
                (so2(2 * a + 1), levi_datum(twos + (1,)), (2 * a + 1, 2 * a + 1)),
                (sog(2 * a), levi_datum(twos), (2 * a, 2 * a)),
                (sog(2 * a + b), levi_datum(twos + ones), (2 * a + 2 * b - 1, 2 * a + 1)),
            ]
            if b >= 2:
                checks.append(
                    (so2(2 * a + b), levi_datum(twos + ones), (2 * a + 2 * b - 2, 2 * a + 2)))
            for char in (GOOD, TWO):
                sp = lambda n: GroupSpec(SP, n, char)
                checks += [
                    (sp(2 * a), levi_datum(twos), (2 * a, 2 * a)),
                    (sp(2 * a + b), levi_datum(twos + ones), (2 * a + 2 * b, 2 * a)),
                    (sp(2 * a + 1), levi_datum(twos, 1), (2 * a + 1, 2 * a + 1)),
                    (sp(2 * a + b + 1), levi_datum(twos + ones, 1), (2 * a + 2 * b, 2 * a + 2)),
                ]
            for g, lv, expected in checks:
                got = richardson_partition(g, lv)
                if got != expected:
                    raise AssertionError(f"{g} {lv}: got {got}, expected {expected}")
                cases += 1
    return f"{cases} golden shapes"


def check_regular_goldens() -> str:
    """Regular Jordan types for every family and rank up to ten."""
    cases = 0
    for n in range(1, 11):
        expect = {
            (GL, GOOD): ((n,),),
            (GL, TWO): ((n,),),
            (SP, GOOD): ((2 * n,),),
            (SP, TWO): ((2 * n,),),
            (SO_ODD, GOOD): ((2 * n + 1,),),
        }
        if n >= 2:
            expect[(SO_EVEN, GOOD)] = ((2 * n - 1, 1),)
            expect[(SO_EVEN, TWO)] = ((2 * n - 2, 2),)
            expect[(O_EVEN, GOOD)] = ((2 * n - 1, 1),)
            expect[(O_EVEN, TWO)] = ((2 * n,), (2 * n - 2, 2))
        for (family, char), want in expect.items():
            got = regular_partition(GroupSpec(family, n, char))
            if got != want:
                raise AssertionError(f"{family} n={n} char {char}: {got} != {want}")
            cases += 1
        # the excluded odd orthogonal regime must refuse
        try:
            regular_partition(GroupSpec(SO_ODD, n, TWO))
        except Exception:
            pass
        else:
            raise AssertionError("odd orthogonal char-two regular type not refused")
    return f"{cases} regular types"


def check_centralizer_identity() -> str:
    """Centralizer dimension of every Richardson class equals the Levi
    dimension, computed both from the root system and from the shape."""
    cases = 0
    for letter, ranks, family in _CLASSICAL_SYSTEMS:
        for rank in ranks:
            rs = root_system(letter, rank)
            g = _group_for(letter, rank, GOOD)
            for J in node_subsets(rank):
                lv = levi_partition(rs, J)
                lam = richardson_partition(g, lv)
                cdim = centralizer_dim(ClassRecord(lam, g))
                from_shape = levi_dim(g.family, lv)
                from_roots = radical_dims(rs, J)[2]
                if g.family == GL:
                    from_roots += 1  # the one-dimensional center of the ambient group
                if not (cdim == from_shape == from_roots):
                    raise AssertionError(
                        f"{g} J={sorted(J)}: centralizer {cdim}, shape {from_shape}, "
                        f"roots {from_roots}")
                cases += 1
    return f"{cases} parabolics"


def check_char_two_dimension_bound() -> str:
    """In characteristic two the Levi dimension lies in the centralizer
    bound interval of the predicted Jordan type."""
    cases = 0
    for letter, ranks, family in (("C", range(1, 8), SP), ("D", range(3, 8), SO_EVEN)):
        for rank in ranks:
            rs = root_system(letter, rank)
            g = GroupSpec(family, rank, TWO)
            for J in node_subsets(rank):
                lv = levi_partition(rs, J)
                lam = richardson_partition(g, lv)
                bound = centralizer_dim(ClassRecord(lam, g))
                lo, hi = bound if isinstance(bound, tuple) else (bound, bound)
                dim_l = levi_dim(g.family, lv)
                if not lo <= dim_l <= hi:
                    raise AssertionError(
                        f"{g} J={sorted(J)} type {lam}: dim L {dim_l} outside [{lo},{hi}]")
                cases += 1
    return f"{cases} parabolics"


def check_gl_round_trip() -> str:
    """Every general linear Jordan type is the Richardson type of its dual flag."""
    cases = 0
    for n in range(1, 13):
        g = GroupSpec(GL, n)
        for p in partitions_of(n):
            if richardson_partition(g, gl_richardson_preimage(p)) != p:
                raise AssertionError(f"round trip failed at {p}")
            cases += 1
    return f"{cases} partitions"


def check_distinguished_equivalence() -> str:
    """Distinguished parabolics hit exactly the tabulated distinguished
    Jordan types, injectively, in both characteristic classes."""
    cases = 0
    for letter, ranks, family in (
            ("B", range(1, 8), SO_ODD), ("C", range(1, 8), SP), ("D", range(3, 8), SO_EVEN)):
        for rank in ranks:
            rs = root_system(letter, rank)
            parabolics = enumerate_distinguished_parabolics(rs)
            for char in (GOOD, TWO):
                g = GroupSpec(family, rank, char)
                images = [richardson_partition(g, levi_partition(rs, J)) for J in parabolics]
                if len(set(images)) != len(images):
                    raise AssertionError(f"{g}: distinguished images collide")
                if set(images) != set(distinguished_partitions(g)):
                    raise AssertionError(
                        f"{g}: images {sorted(images)} != table "
                        f"{sorted(distinguished_partitions(g))}")
                cases += 1
            if len(distinguished_partitions(GroupSpec(family, rank, GOOD))) != \
                    len(distinguished_partitions(GroupSpec(family, rank, TWO))):
                raise AssertionError(f"{letter}{rank}: table sizes differ across chars")
    return f"{cases} group/char pairs"


def check_levi_dimension_injectivity() -> str:
    """Distinct distinguished parabolics have distinct Levi dimensions."""
    cases = 0
    for letter, ranks, _ in _CLASSICAL_SYSTEMS:
        for rank in ranks:
            if not levi_dims_injective(root_system(letter, rank)):
                raise AssertionError(f"{letter}{rank}: Levi dimensions collide")
            cases += 1
    for letter, rank in _EXCEPTIONAL_SYSTEMS:
        if not levi_dims_injective(root_system(letter, rank)):
            raise AssertionError(f"{letter}: Levi dimensions collide")
        cases += 1
    return f"{cases} systems"


def check_radical_abelianization_bound() -> str:
    """Levi dimension bounds the abelianized radical dimension, with
    equality exactly at the distinguished parabolics."""
    cases = 0
    systems = [(letter, rank) for letter, ranks, _ in _CLASSICAL_SYSTEMS for rank in ranks]
    systems += list(_EXCEPTIONAL_SYSTEMS)
    for letter, rank in systems:
        rs = root_system(letter, rank)
        for J in node_subsets(rank):
            _, height_one, levi_mod_z = radical_dims(rs, J)
            if levi_mod_z < height_one:
                raise AssertionError(f"{letter}{rank} J={sorted(J)}: bound fails")
            if (levi_mod_z == height_one) != is_distinguished(rs, J):
                raise AssertionError(f"{letter}{rank} J={sorted(J)}: equality mismatch")
            cases += 1
    return f"{cases} parabolics"


def check_pair_bijection() -> str:
    """Pair enumeration is a bijection onto classes in good characteristic."""
    cases = 0
    groups = [GroupSpec(GL, n) for n in range(1, 11)]
    groups += [GroupSpec(family, n)
               for family in (SP, SO_ODD, SO_EVEN) for n in range(1, 9)]
    for g in groups:
        pairs = bc_enumerate(g)
        classes = class_partitions(g)
        if len(pairs) != len(classes):
            raise AssertionError(f"{g}: {len(pairs)} pairs, {len(classes)} classes")
        for p in classes:
            if bc_image(g, bc_label(g, p)) != p:
                raise AssertionError(f"{g}: label round trip failed at {p}")
            cases += 1
    return f"{cases} classes"


#: (family, rank, q, node sets); characteristic follows the parity of q
ORACLE_INSTANCES = (
    (SP, 2, 3, (frozenset(), frozenset({1}), frozenset({2}))),
    (SP, 3, 2, (frozenset(),)),
    (SO_ODD, 2, 3, (frozenset(), frozenset({1}), frozenset({2}))),
    (SO_EVEN, 3, 3, (frozenset({1}), frozenset({1, 2}), frozenset({1, 3}))),
    (SO_EVEN, 4, 2, (frozenset(),)),
    (GL, 4, 2, (frozenset({1}), frozenset({1, 3}))),
)


def check_finite_field_suite() -> str:
    """Exhaustive radical scans: every type dominated, prediction attained."""
    from .rootsystems import rootsystem_for

    cases = 0
    for family, rank, q, node_sets in ORACLE_INSTANCES:
        char = TWO if q % 2 == 0 else GOOD
        g = GroupSpec(family, rank, char)
        rs = rootsystem_for(g)
        fs = form_space(family, rank, q)
        for J in node_sets:
            lv = levi_partition(rs, J)
            predicted = richardson_partition(g, lv)
            report = verify_richardson(fs, lv, predicted)
            if not (report.all_le and report.attained):
                raise AssertionError(
                    f"{fs} J={sorted(J)} predicted {predicted}: {report}")
            if report.total != q ** report.dim_q:
                raise AssertionError(
                    f"{fs} J={sorted(J)}: scanned {report.total}, "
                    f"expected {q}^{report.dim_q}")
            cases += 1
    return f"{cases} radical scans"


def check_order_theory() -> str:
    """Dual involution, antitone duality, chain validity, poset landmarks."""
    cases = 0
    for n in range(0, 11):
        parts = list(partitions_of(n))
        for p in parts:
            if dual(dual(p)) != p:
                raise AssertionError(f"dual involution fails at {p}")
            cases += 1
        for a in parts:
            for b in parts:
                rel = compare_dominance(a, b)
                dual_rel = compare_dominance(dual(b), dual(a))
                if (rel is Dominance.LESS) != (dual_rel is Dominance.LESS):
                    raise AssertionError(f"antitone duality fails at {a}, {b}")
                if rel is Dominance.LESS:
                    chain = two_place_chain(a, b)
                    _check_chain(a, b, chain)
                    cases += 1
    sp4 = closure_poset(GroupSpec(SP, 2))
    want = ((4,), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    if sp4.nodes != want or len(sp4.covers) != 3:
        raise AssertionError("Sp_4 closure order is not the expected chain")
    gl6 = closure_poset(GroupSpec(GL, 6))
    if compare_dominance((3, 3), (4, 1, 1)) is not Dominance.INCOMPARABLE:
        raise AssertionError("(3,3) and (4,1,1) should be incomparable")
    if ((3, 3), (4, 1, 1)) in gl6.covers or ((4, 1, 1), (3, 3)) in gl6.covers:
        raise AssertionError("incomparable pair appears as a cover")
    return f"{cases} partition checks"


def _check_chain(a, b, chain) -> None:
    if chain[0] != a or chain[-1] != b:
        raise AssertionError(f"chain endpoints wrong for {a} -> {b}")
    for lo, hi in zip(chain, chain[1:]):
        if compare_dominance(lo, hi) is not Dominance.LESS:
            raise AssertionError(f"chain step {lo} -> {hi} does not ascend")
        width = max(len(lo), len(hi))
        padded_lo = lo + (0,) * (width - len(lo))
        padded_hi = hi + (0,) * (width - len(hi))
        diffs = sum(1 for x, y in zip(padded_lo, padded_hi) if x != y)
        if diffs != 2:
            raise AssertionError(f"chain step {lo} -> {hi} changes {diffs} places")


@dataclass(frozen=True)
class Criterion:
    number: int
    slug: str
    name: str
    budget_seconds: float
    run: Callable[[], str]


CRITERIA = (
    Criterion(1, "base-goldens", "two-block base-case golden values", 1.0,
              check_base_case_goldens),
    Criterion(2, "regular-goldens", "regular class golden values", 1.0,
              check_regular_goldens),
    Criterion(3, "centralizer-identity", "Richardson centralizer dimension identity",
              30.0, check_centralizer_identity),
    Criterion(4, "char-two-bound", "characteristic-two dimension bound", 30.0,
              check_char_two_dimension_bound),
    Criterion(5, "gl-round-trip", "general linear preimage round trip", 5.0,
              check_gl_round_trip),
    Criterion(6, "distinguished-equivalence", "distinguished image equivalence", 10.0,
              check_distinguished_equivalence),
    Criterion(7, "levi-dim-injectivity", "Levi dimension injectivity", 10.0,
              check_levi_dimension_injectivity),
    Criterion(8, "radical-bound", "radical abelianization inequality", 10.0,
              check_radical_abelianization_bound),
    Criterion(9, "pair-bijection", "pair parameterization bijection", 10.0,
              check_pair_bijection),
    Criterion(10, "finite-field-suite", "finite-field verification suite", 300.0,
              check_finite_field_suite),
    Criterion(11, "order-theory", "order-theory suite", 30.0,
              check_order_theory),
)


def run_criterion(crit: Criterion) -> tuple[bool, str, float]:
    start = time.perf_counter()
    try:
        detail = crit.run()
        ok = True
    except AssertionError as exc:
        detail = str(exc)
        ok = False
    elapsed = time.perf_counter() - start
    return ok, detail, elapsed


def run_all(only: set[int] | None = None):
    """Run the battery; yields (criterion, ok, detail, seconds)."""
    for crit in CRITERIA:
        if only is not None and crit.number not in only:
            continue
        ok, detail, elapsed = run_criterion(crit)
        yield crit, ok, detail, elapsed
