import pytest

from unipotent import (
    GL, SO_EVEN, SO_ODD, SP,
    DomainError, GroupSpec, levi_datum, levi_dim,
    is_distinguished, levi_partition, node_subsets, p_height,
    parse_nodes, radical_dims, root_system, rootsystem_for,
)

COUNTS = [
    ("A", 1, 1), ("A", 2, 3), ("A", 5, 15),
    ("B", 2, 4), ("B", 4, 16),
    ("C", 2, 4), ("C", 3, 9), ("C", 6, 36),
    ("D", 3, 6), ("D", 4, 12), ("D", 7, 42),
    ("G2", 2, 6), ("F4", 4, 24),
    ("E6", 6, 36), ("E7", 7, 63), ("E8", 8, 120),
]


@pytest.mark.parametrize("family,rank,count", COUNTS)
def test_positive_root_counts(family, rank, count):
    rs = root_system(family, rank)
    assert len(rs.positive_roots) == count


def test_simple_roots_are_units():
    rs = root_system("C", 3)
    for i in range(3):
        unit = tuple(1 if j == i else 0 for j in range(3))
        assert unit in rs.positive_roots


def test_all_positive_coefficients():
    for family, rank, _ in COUNTS:
        rs = root_system(family, rank)
        assert all(all(c >= 0 for c in r) for r in rs.positive_roots)


def test_invalid_ranks_rejected():
    with pytest.raises(DomainError):
        root_system("D", 2)
    with pytest.raises(DomainError):
        root_system("E6", 5)
    with pytest.raises(DomainError):
        root_system("Z", 3)


def test_p_height_examples():
    c2 = root_system("C", 2)
    assert p_height((1, 0), set()) == 1       # simple root outside J
    assert p_height((1, 0), {1}) == 0         # simple root inside J
    assert (2, 1) in c2.positive_roots        # highest root of C_2
    assert p_height((2, 1), {1}) == 1


def test_radical_dims_examples():
    a2 = root_system("A", 2)
    assert radical_dims(a2, set()) == (3, 2, 2)
    c3 = root_system("C", 3)
    assert radical_dims(c3, {2}) == (8, 5, 5)
    # full node set: empty radical, Levi is the whole group
    assert radical_dims(c3, {1, 2, 3}) == (0, 0, 21)


def test_is_distinguished_examples():
    a3 = root_system("A", 3)
    assert is_distinguished(a3, set())
    assert not is_distinguished(a3, {1})
    c3 = root_system("C", 3)
    assert is_distinguished(c3, {2})
    assert not is_distinguished(c3, {1})


def test_borel_always_distinguished():
    for family, rank, _ in COUNTS:
        assert is_distinguished(root_system(family, rank), set())


@pytest.mark.parametrize("family,rank,J,expected", [
    ("C", 3, {2}, ((2, 1), 0)),
    ("C", 3, {3}, ((1, 1), 1)),
    ("C", 3, {2, 3}, ((1,), 2)),
    ("D", 3, {1, 3}, ((3,), 0)),
    ("D", 3, {1, 2}, ((3,), 0)),
    ("D", 3, {2, 3}, ((1,), 2)),
    ("D", 4, {2}, ((2, 1, 1), 0)),
    ("B", 2, {2}, ((1,), 1)),
    ("A", 2, set(), ((1, 1, 1), 0)),
    ("A", 3, {1, 3}, ((2, 2), 0)),
])
def test_levi_partition_examples(family, rank, J, expected):
    lv = levi_partition(root_system(family, rank), J)
    assert (lv.gl_parts, lv.cl_rank) == expected


def test_levi_partition_totals():
    for family in ("B", "C", "D"):
        for rank in range(3 if family == "D" else 1, 9):
            rs = root_system(family, rank)
            for J in node_subsets(rank):
                assert levi_partition(rs, J).ambient_rank == rank


def test_levi_partition_fork_swap_invariance():
    for rank in range(3, 9):
        rs = root_system("D", rank)
        for J in node_subsets(rank):
            swapped = set(J)
            if (rank in swapped) != (rank - 1 in swapped):
                swapped ^= {rank - 1, rank}
            assert levi_partition(rs, J) == levi_partition(rs, frozenset(swapped))


def test_levi_dimension_consistency():
    # Levi dimension from the shape matches the root-system count
    for family, group_family in [("B", SO_ODD), ("C", SP), ("D", SO_EVEN)]:
        for rank in range(3 if family == "D" else 1, 8):
            rs = root_system(family, rank)
            for J in node_subsets(rank):
                lv = levi_partition(rs, J)
                assert levi_dim(group_family, lv) == radical_dims(rs, J)[2]


def test_levi_no_rank_one_torus_tail_in_type_d():
    for rank in range(3, 9):
        rs = root_system("D", rank)
        for J in node_subsets(rank):
            assert levi_partition(rs, J).cl_rank != 1


def test_richardson_inequality_and_equality_cases():
    for family, rank, _ in COUNTS:
        rs = root_system(family, rank)
        for J in node_subsets(rank):
            dim_q, height_one, levi_mod_z = radical_dims(rs, J)
            assert levi_mod_z >= height_one
            assert (levi_mod_z == height_one) == is_distinguished(rs, J)


def test_rootsystem_for():
    assert rootsystem_for(GroupSpec(GL, 4)).family == "A"
    assert rootsystem_for(GroupSpec(GL, 4)).rank == 3
    assert rootsystem_for(GroupSpec(SO_ODD, 3)).family == "B"
    assert rootsystem_for(GroupSpec(SP, 3)).family == "C"
    assert rootsystem_for(GroupSpec(SO_EVEN, 4)).family == "D"


def test_parse_nodes():
    assert parse_nodes("1,3") == frozenset({1, 3})
    assert parse_nodes("") == frozenset()
    with pytest.raises(DomainError):
        parse_nodes("x")


def test_check_nodes_range():
    c3 = root_system("C", 3)
    with pytest.raises(DomainError):
        radical_dims(c3, {4})


def test_gl_borel_levi():
    a3 = root_system("A", 3)
    assert levi_partition(a3, set()) == levi_datum([1, 1, 1, 1])
