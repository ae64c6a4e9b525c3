"""Finite topological generalized groups, their actions and dynamics."""

from .action import (
    ActionError,
    Axiom1Violation,
    Axiom2Violation,
    GenAction,
    NotContinuous,
    classify_action,
    orbit_data,
    proper_profile,
    validate_action,
)
from .algebra import (
    CapabilityError,
    CayleyTable,
    GenGroup,
    NotAGeneralizedGroup,
    NotASemigroup,
    StructureError,
    canonical_form,
    check_homomorphism,
    construct,
    cyclic,
    eclass_decompose,
    enumerate_generalized_groups,
    left_zero_product,
    rees_matrix,
    right_zero_product,
    validate_generalized_group,
    validate_semigroup,
)
from .dsl import Document, DSLError, parse_document, serialize_document
from .dynamics import (
    check_T_conjugacy,
    dense_T_orbit,
    equivariance_profile,
    is_T_transitive,
    is_transitive,
    search_witness,
)
from .laws import Bounds, LawReport, replay, run_all, run_law
from .quotient import build_quotient, orbit_partition, projection_profile
from .tgg import TopGenGroup, validate_tgg
from .topology import FiniteSpace, NotATopology, SpaceMap, build_topology, map_predicates, quotient_topology

__version__ = "0.1.0"
