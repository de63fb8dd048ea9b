import numpy as np
import pytest

from unipotent import (
    GL, GOOD, SO_EVEN, SO_ODD, SP, TWO,
    DomainError, GroupSpec, acts_trivially_on_factors, bilinear,
    class_partitions, dominance_leq, enumerate_radical, form_space,
    jordan_type, levi_datum, levi_partition, natural_flag,
    nonsingular_chain_witness, preserves_form, quad_value, radical_dim,
    richardson_partition, root_system, rootsystem_for, satisfies_parity,
    verify_richardson, verify_at_some_q, GF,
)


# ---------------------------------------------------------------- fields
def test_gf4_is_a_field():
    f = GF(4)
    elems = list(range(4))
    for a in elems:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        if a:
            assert f.mul(a, f.inv(a)) == 1
    # distributivity
    for a in elems:
        for b in elems:
            for c in elems:
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_rank_and_solve(q):
    f = GF(q)
    rng = np.random.default_rng(q)
    for _ in range(20):
        a = rng.integers(0, q, size=(4, 5)).astype(np.int64)
        r = f.rank(a)
        assert 0 <= r <= 4
        kernel = f.kernel_basis(a)
        assert len(kernel) == 5 - r
        for v in kernel:
            assert not np.any(f.matvec(a, v))


def test_gf_rejects_unsupported_q():
    with pytest.raises(DomainError):
        GF(7)


# ---------------------------------------------------------------- spaces
def test_sp4_gram_convention():
    fs = form_space(SP, 2, 3)
    expected = np.zeros((4, 4), dtype=np.int64)
    expected[0, 3] = expected[1, 2] = 1
    expected[2, 1] = expected[3, 0] = 2  # minus one mod three
    assert np.array_equal(fs.gram, expected)


def test_so6_gram_is_antidiagonal_ones():
    fs = form_space(SO_EVEN, 3, 3)
    assert np.array_equal(fs.gram, np.eye(6, dtype=np.int64)[::-1])


def test_even_q_orthogonal_quadratic_form():
    fs = form_space(SO_EVEN, 2, 2)
    v = np.array([1, 0, 0, 1], dtype=np.int64)   # e_1 + f_1
    assert quad_value(fs, v) == 1
    w = np.array([1, 1, 0, 0], dtype=np.int64)   # e_1 + e_2, totally singular
    assert quad_value(fs, w) == 0


def test_so_odd_even_q_rejected():
    with pytest.raises(DomainError):
        form_space(SO_ODD, 2, 2)


# ---------------------------------------------------------------- flags
def test_natural_flag_lengths():
    assert natural_flag(GL, 4, levi_datum([2, 1, 1])).dims == (2, 3, 4)
    assert natural_flag(SP, 3, levi_datum([2, 1])).dims == (2, 3, 4, 6)
    assert natural_flag(SP, 3, levi_datum([1], 2)).dims == (1, 5, 6)
    assert natural_flag(SO_ODD, 2, levi_datum([1, 1])).dims == (1, 2, 3, 4, 5)
    assert natural_flag(SO_ODD, 3, levi_datum([1], 2)).dims == (1, 6, 7)
    assert natural_flag(SO_EVEN, 3, levi_datum([3])).dims == (3, 6)


def test_flag_length_rule():
    # length 2s with no middle, 2s+1 with one, always 2s+1 for odd orthogonal
    for family in (SP, SO_EVEN):
        flag = natural_flag(family, 4, levi_datum([2, 2]))
        assert len(flag.dims) == 4
        flag = natural_flag(family, 4, levi_datum([2, 1], 1))
        assert len(flag.dims) == 5
    flag = natural_flag(SO_ODD, 4, levi_datum([2, 2]))
    assert len(flag.dims) == 5


# ---------------------------------------------------------------- radicals
RADICAL_COUNTS = [
    (SP, 2, 3, levi_datum([1, 1]), 81),
    (SP, 2, 3, levi_datum([2]), 27),
    (SP, 2, 3, levi_datum([1], 1), 27),
    (GL, 3, 2, levi_datum([1, 1, 1]), 8),
    (SO_ODD, 2, 3, levi_datum([2]), 27),
    (SO_EVEN, 3, 3, levi_datum([3]), 27),
    (SO_EVEN, 2, 2, levi_datum([1, 1]), 4),
    (SP, 2, 4, levi_datum([2]), 64),
]


@pytest.mark.parametrize("family,rank,q,levi,count", RADICAL_COUNTS)
def test_radical_counts(family, rank, q, levi, count):
    fs = form_space(family, rank, q)
    els = list(enumerate_radical(fs, levi))
    assert len(els) == count
    assert count == q ** radical_dim(family, rank, levi)
    # all distinct
    assert len({m.tobytes() for m in els}) == count


def test_radical_elements_preserve_structure():
    for family, rank, q, levi, _ in RADICAL_COUNTS:
        fs = form_space(family, rank, q)
        flag = natural_flag(family, rank, levi)
        for g in enumerate_radical(fs, levi):
            assert preserves_form(fs, g)
            assert acts_trivially_on_factors(flag, g)


def test_radical_budget_enforced():
    fs = form_space(SP, 3, 3)
    with pytest.raises(DomainError):
        list(enumerate_radical(fs, levi_datum([1, 1, 1]), budget=100))


def test_radical_sampling_mode():
    fs = form_space(SP, 3, 3)
    lv = levi_datum([1, 1, 1])
    sample = list(enumerate_radical(fs, lv, sample=25, seed=11))
    assert len(sample) == 25
    flag = natural_flag(SP, 3, lv)
    for g in sample:
        assert preserves_form(fs, g)
        assert acts_trivially_on_factors(flag, g)
    again = list(enumerate_radical(fs, lv, sample=25, seed=11))
    assert all(np.array_equal(a, b) for a, b in zip(sample, again))


# ---------------------------------------------------------------- jordan
def test_jordan_type_identity_and_regular():
    f = GF(3)
    assert jordan_type(f, f.eye(5)) == (1, 1, 1, 1, 1)
    block = np.eye(4, dtype=np.int64)
    for i in range(3):
        block[i, i + 1] = 1
    assert jordan_type(f, block) == (4,)


def test_jordan_type_two_blocks():
    f = GF(3)
    g = np.eye(4, dtype=np.int64)
    g[0, 2] = 1
    g[1, 3] = 1
    assert jordan_type(f, g) == (2, 2)


def test_jordan_type_rejects_non_unipotent():
    f = GF(3)
    m = np.diag([2, 1, 1]).astype(np.int64)
    with pytest.raises(DomainError):
        jordan_type(f, m)


def test_jordan_type_conjugation_invariant():
    fs = form_space(SP, 2, 3)
    f = fs.field
    els = list(enumerate_radical(fs, levi_datum([1, 1])))
    h = els[40]
    hinv = np.zeros((4, 4), dtype=np.int64)
    for i in range(4):
        e = np.zeros(4, dtype=np.int64)
        e[i] = 1
        x0, _ = f.solve_affine(h, e)
        hinv[:, i] = x0
    assert np.array_equal(f.matmul(h, hinv), f.eye(4))
    for g in els[::7]:
        conj = f.matmul(f.matmul(h, g), hinv)
        assert jordan_type(f, conj) == jordan_type(f, g)


def test_flag_factor_bound_on_prefix_sums():
    for family, rank, q, levi, _ in RADICAL_COUNTS[:5]:
        fs = form_space(family, rank, q)
        factors = natural_flag(family, rank, levi).factor_dims
        for g in enumerate_radical(fs, levi):
            t = jordan_type(fs.field, g)
            for r in range(1, len(t) + 1):
                assert sum(t[:r]) <= sum(min(r, d) for d in factors)


def test_observed_types_satisfy_parity():
    cases = [
        (SP, 2, 3, levi_datum([1, 1])),
        (SO_ODD, 2, 3, levi_datum([1, 1])),
        (SO_EVEN, 2, 2, levi_datum([1, 1])),  # O-family rules for even q
    ]
    from unipotent import O_EVEN

    for family, rank, q, levi in cases:
        fs = form_space(family, rank, q)
        char = TWO if q % 2 == 0 else GOOD
        ambient = O_EVEN if (family == SO_EVEN and q % 2 == 0) else family
        g = GroupSpec(ambient, rank, char)
        for m in enumerate_radical(fs, levi):
            assert satisfies_parity(jordan_type(fs.field, m), g)


# ---------------------------------------------------------------- verify
def test_verify_richardson_passes_on_known_instance():
    fs = form_space(SP, 2, 3)
    rep = verify_richardson(fs, levi_datum([2]), (2, 2))
    assert rep.passed and rep.all_le and rep.attained
    assert rep.total == 27 and rep.q == 3 and rep.dim_q == 3
    assert rep.attained_count == 18


def test_verify_richardson_flags_wrong_prediction():
    fs = form_space(SP, 2, 3)
    # (4) strictly dominates everything in this radical, so never attained
    rep = verify_richardson(fs, levi_datum([2]), (4,))
    assert rep.all_le and not rep.attained and not rep.passed
    # (2,1,1) is dominated by types actually present
    rep2 = verify_richardson(fs, levi_datum([2]), (2, 1, 1))
    assert not rep2.all_le


def test_verify_at_some_q_walks_fields():
    q, rep = verify_at_some_q(SP, 2, levi_datum([2]), (2, 2), qs=(2, 3))
    assert rep.passed and q == 2


def test_verify_dominance_always_holds_in_sampling_mode():
    fs = form_space(SP, 3, 3)
    lv = levi_datum([2, 1])
    predicted = richardson_partition(GroupSpec(SP, 3), lv)
    rep = verify_richardson(fs, lv, predicted, sample=60, seed=3)
    assert rep.all_le
    assert rep.total == 60


# ---------------------------------------------------------------- chains
def find_element_of_type(fs, levi, target):
    for g in enumerate_radical(fs, levi):
        if jordan_type(fs.field, g) == target:
            return g
    raise AssertionError(f"no element of type {target}")


def test_chain_witness_regular_symplectic():
    fs = form_space(SP, 2, 3)
    g = find_element_of_type(fs, levi_datum([1, 1]), (4,))
    assert nonsingular_chain_witness(fs, g, 4)


def test_chain_witness_multiplicity_one_part():
    fs = form_space(SO_ODD, 2, 3)
    g = find_element_of_type(fs, levi_datum([2]), (3, 1, 1))
    assert nonsingular_chain_witness(fs, g, 3)
    assert nonsingular_chain_witness(fs, g, 1)


def test_chain_witness_even_part_even_multiplicity_orthogonal():
    fs = form_space(SO_EVEN, 3, 3)
    lv = levi_partition(root_system("D", 3), {1, 2})
    g = find_element_of_type(fs, lv, (2, 2, 1, 1))
    assert not nonsingular_chain_witness(fs, g, 2)


def test_chain_witness_unit_part_symplectic_is_singular():
    fs = form_space(SP, 2, 3)
    g = find_element_of_type(fs, levi_datum([2]), (2, 1, 1))
    assert not nonsingular_chain_witness(fs, g, 1)


def test_chain_witness_rejects_non_part():
    fs = form_space(SP, 2, 3)
    g = find_element_of_type(fs, levi_datum([1, 1]), (4,))
    with pytest.raises(DomainError):
        nonsingular_chain_witness(fs, g, 3)
