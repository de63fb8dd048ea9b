"""Unipotent classes of classical groups: Richardson Jordan types, closure
posets, Bala-Carter labels, and a brute-force finite-field verifier."""

from .groups import (
    GL, SO_ODD, SO_EVEN, SP, O_EVEN, GOOD, TWO, FAMILIES,
    DomainError, UnsupportedRegimeError,
    GroupSpec, LeviDatum, levi_datum, parse_levi, format_levi,
    check_levi, levi_dim, radical_dim,
)
from .partitions import (
    Partition, Dominance,
    partition, parse_partition, format_partition,
    dual, compare_dominance, dominance_leq, two_place_chain,
    satisfies_parity, partitions_of, class_partitions,
)
from .rootsystems import (
    RootSystem, root_system, rootsystem_for, cartan_matrix,
    p_height, radical_dims, is_distinguished, levi_partition,
    node_subsets, parse_nodes,
)
from .richardson import (
    richardson_dual, richardson_partition, regular_partition,
    gl_richardson_preimage,
)
from .catalog import (
    ClassRecord, ClassPoset, centralizer_dim, class_dim, closure_poset,
    poset_to_dot, poset_to_json,
)
from .balacarter import (
    BCPair, distinguished_partitions, enumerate_distinguished_parabolics,
    levi_dims_injective, bc_image, bc_label, bc_enumerate, check_pair,
)
from .ffgroups import (
    GF, FormSpace, FlagSpec, VerifyReport,
    form_space, natural_flag, enumerate_radical, jordan_type,
    verify_richardson, verify_at_some_q, nonsingular_chain_witness,
    bilinear, quad_value, preserves_form, acts_trivially_on_factors,
)

__version__ = "0.1.0"
