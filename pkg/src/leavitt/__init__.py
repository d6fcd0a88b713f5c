"""Symbolic computation and classification for Leavitt path algebras.

The package decides ring-theoretic properties of L_K(E) from the shape
of the graph E and backs every positive decision with an engine-checked
witness.  Start with build_graph or a catalog family, wrap the graph in
an AlgebraContext, and compute.
"""

from .analysis import (
    ConditionVerdict,
    GradedIdealLattice,
    HSPair,
    condition_L,
    condition_MT3,
    csp_finite,
    graded_ideal_lattice,
    hereditary_saturated_sets,
    hs_closure,
    is_acyclic,
    is_row_finite,
)
from .classify import (
    PROPERTY_NAMES,
    REPORT_SCHEMA,
    ClassificationReport,
    PropertyVerdict,
    Spine,
    build_spine,
    classify_family,
    classify_graph,
    find_vertex_witness,
    idempotent_from_witness,
    one_from_annihilating_pair,
    prime_witness,
    v_ideal_form_check,
)
from .engine import (
    AlgebraContext,
    Element,
    Monomial,
    UnitizedElement,
    add,
    atom,
    component,
    corner,
    degree,
    equals,
    involution,
    is_idempotent,
    mul,
    normal_form,
    scale,
    unitized_mul,
)
from .errors import (
    ContextMismatch,
    DimensionRuleUnavailable,
    DuplicateId,
    ExprSyntaxError,
    LeavittError,
    MT3Fails,
    NoCommonDescendant,
    NotACycle,
    NotAGraphFamily,
    NotApplicable,
    NotConcretelyBuildable,
    NotFoundWithinBound,
    ProductNotZero,
    ReservedCharacter,
    TooLarge,
    UnknownEndpoint,
    UnknownId,
    UnknownVertex,
    UnsupportedFlaggedGraph,
    WitnessInvalid,
)
from .expressions import parse_element
from .families import (
    Cardinal,
    FamilyDescriptor,
    OrdinalSpec,
    build_catalog_graph,
    descriptor_text,
    finite_subsets_family,
    line,
    loop,
    ordinal_complete_family,
    parse_descriptor,
    rose,
    symbolic_csp,
    symbolic_dimension,
    tower_family,
    truncation_flags,
    two_arrow,
    unitization,
)
from .fields import FpElement, PrimeField, QQ, Rationals, parse_field_spec
from .graphs import (
    Graph,
    Path,
    all_vertex_pairs,
    build_graph,
    common_descendant,
    enumerate_paths,
    exits_of,
    graph_from_json,
    graph_to_json,
    reachable_set,
    reaches,
    shortest_path,
    simple_cycles,
)

__version__ = "0.1.0"
