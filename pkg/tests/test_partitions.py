import pytest

from unipotent import (
    GL, GOOD, O_EVEN, SO_EVEN, SO_ODD, SP, TWO,
    Dominance, DomainError, GroupSpec,
    class_partitions, compare_dominance, dual, format_partition,
    parse_partition, partition, partitions_of, satisfies_parity,
    two_place_chain,
)


def brute_dominance(lam, mu):
    """Independent prefix-sum comparator."""
    assert sum(lam) == sum(mu)
    width = max(len(lam), len(mu))
    a = list(lam) + [0] * (width - len(lam))
    b = list(mu) + [0] * (width - len(mu))
    le = all(sum(a[:i]) <= sum(b[:i]) for i in range(1, width + 1))
    ge = all(sum(a[:i]) >= sum(b[:i]) for i in range(1, width + 1))
    if le and ge:
        return Dominance.EQUAL
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def test_partition_canonicalizes():
    assert partition([1, 3, 0, 2]) == (3, 2, 1)
    assert partition([]) == ()
    with pytest.raises(DomainError):
        partition([2, -1])


def test_parse_and_format():
    assert parse_partition("4,2,1") == (4, 2, 1)
    assert parse_partition("") == ()
    assert format_partition((4, 2, 1)) == "4,2,1"
    assert format_partition(()) == ""
    with pytest.raises(DomainError):
        parse_partition("2,4")
    with pytest.raises(DomainError):
        parse_partition("a,b")


@pytest.mark.parametrize("p,expected", [
    ((4, 2), (2, 2, 1, 1)),
    ((5,), (1, 1, 1, 1, 1)),
    ((2, 2), (2, 2)),
    ((), ()),
])
def test_dual_examples(p, expected):
    assert dual(p) == expected


def test_dual_involution_up_to_30():
    for n in list(range(0, 19)) + [30]:
        for p in partitions_of(n):
            assert dual(dual(p)) == p


@pytest.mark.parametrize("lam,mu,expected", [
    ((1, 1, 1, 1), (4,), Dominance.LESS),
    ((3, 3), (4, 1, 1), Dominance.INCOMPARABLE),
    ((2, 2, 1, 1), (4, 2), Dominance.LESS),
    ((4, 2), (4, 2), Dominance.EQUAL),
    ((4,), (2, 2), Dominance.GREATER),
])
def test_dominance_examples(lam, mu, expected):
    assert compare_dominance(lam, mu) is expected
    assert brute_dominance(lam, mu) is expected


def test_dominance_rejects_unequal_sums():
    with pytest.raises(DomainError):
        compare_dominance((2,), (1, 1, 1))


def test_dominance_matches_brute_force():
    for n in range(0, 9):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                assert compare_dominance(a, b) is brute_dominance(a, b)


def test_dominance_is_partial_order():
    for n in range(0, 11):
        parts = list(partitions_of(n))
        leq = {(a, b) for a in parts for b in parts
               if compare_dominance(a, b) in (Dominance.LESS, Dominance.EQUAL)}
        for a in parts:
            assert (a, a) in leq
        for a, b in leq:
            if a != b:
                assert (b, a) not in leq
        for a, b in leq:
            for c in parts:
                if (b, c) in leq:
                    assert (a, c) in leq


def test_antitone_duality():
    for n in range(0, 13):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                lt = compare_dominance(a, b) is Dominance.LESS
                dual_lt = compare_dominance(dual(b), dual(a)) is Dominance.LESS
                assert lt == dual_lt


def check_chain(lam, mu, chain):
    assert chain[0] == lam and chain[-1] == mu
    for lo, hi in zip(chain, chain[1:]):
        assert compare_dominance(lo, hi) is Dominance.LESS
        width = max(len(lo), len(hi))
        a = lo + (0,) * (width - len(lo))
        b = hi + (0,) * (width - len(hi))
        assert sum(1 for x, y in zip(a, b) if x != y) == 2


@pytest.mark.parametrize("lam,mu", [
    ((2, 2), (4,)),
    ((1, 1, 1, 1), (2, 2)),
    ((2, 2, 1, 1), (4, 2)),
])
def test_two_place_chain_examples(lam, mu):
    check_chain(lam, mu, two_place_chain(lam, mu))


def test_two_place_chain_all_pairs():
    for n in range(2, 11):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                if compare_dominance(a, b) is Dominance.LESS:
                    check_chain(a, b, two_place_chain(a, b))


def test_two_place_chain_rejects_non_less():
    with pytest.raises(DomainError):
        two_place_chain((4,), (2, 2))
    with pytest.raises(DomainError):
        two_place_chain((2, 2), (2, 2))


@pytest.mark.parametrize("p,g,expected", [
    ((3, 3, 2), GroupSpec(SP, 4), True),
    ((3, 1), GroupSpec(SP, 2), False),
    ((3, 1), GroupSpec(SO_EVEN, 2), True),
    ((2, 1, 1), GroupSpec(SO_EVEN, 2), False),       # even part of odd multiplicity
    ((2, 2), GroupSpec(SO_EVEN, 2, TWO), True),
    ((2, 1, 1), GroupSpec(SO_EVEN, 2, TWO), False),  # odd number of parts
    ((2, 1, 1), GroupSpec(O_EVEN, 2, TWO), True),    # no part-count rule for O
    ((4,), GroupSpec(O_EVEN, 2, TWO), True),
    ((4,), GroupSpec(SO_EVEN, 2, TWO), False),       # single part stays outside SO
])
def test_parity_examples(p, g, expected):
    assert satisfies_parity(p, g) is expected


def test_parity_so_odd_two():
    g = GroupSpec(SO_ODD, 2, TWO)
    assert satisfies_parity((2, 2, 1), g)
    assert satisfies_parity((1, 1, 1, 1, 1), g)   # identity class
    assert satisfies_parity((4, 1), g)
    assert not satisfies_parity((3, 1, 1), g)     # odd part of odd multiplicity
    assert not satisfies_parity((5,), g)          # no unit block to strip


def test_parity_dimension_mismatch():
    with pytest.raises(DomainError):
        satisfies_parity((3, 1), GroupSpec(SP, 3))


def test_class_partitions_examples():
    assert class_partitions(GroupSpec(SP, 2)) == ((4,), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert class_partitions(GroupSpec(GL, 3)) == ((3,), (2, 1), (1, 1, 1))
    assert class_partitions(GroupSpec(SO_EVEN, 2)) == ((3, 1), (2, 2), (1, 1, 1, 1))


def test_class_partitions_order_is_descending_lex():
    for g in [GroupSpec(SP, 3), GroupSpec(SO_ODD, 3), GroupSpec(SO_EVEN, 3, TWO)]:
        ps = class_partitions(g)
        assert list(ps) == sorted(ps, reverse=True)


def test_class_partitions_contain_regular_and_trivial():
    for fam, n in [(SP, 3), (SO_ODD, 3), (SO_EVEN, 3), (GL, 4)]:
        g = GroupSpec(fam, n)
        ps = class_partitions(g)
        assert (1,) * g.natural_dim in ps


def test_partitions_of_counts():
    # partition numbers p(0)..p(10)
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, c in enumerate(counts):
        assert len(list(partitions_of(n))) == c
