"""Diagrams of order dimension two and their filter lattices.

A *diagram* is a finite bounded poset whose incomparable pairs are totally
oriented left to right, consistently enough that sweeping the picture in
either direction reads off a linear order.  The package validates raw
diagrams, reduces them to canonical permutations, enumerates every
similarity class of a size, and carries each diagram to a slim semimodular
lattice two equivalent ways (weak left pairs, horizontally convex filters)
and back, with the supporting structural laws machine-checked over
exhaustive ranges by :func:`verify_suite`.
"""

from .catalog import (
    boolean_cube_covers,
    capped_diamond,
    chain,
    diamond,
    hexagon,
    pentagon,
    three_atom_diamond,
)
from .diagram import (
    CanonicalPermutation,
    Chain,
    Diagram,
    Realizer,
    boundary_chains,
    canonical_form,
    canonical_relabel,
    chain_side,
    from_canonical,
    maximal_chains,
    mirror,
    order_dimension_le2,
    realizer,
    relabel,
    revalidate,
    similar,
    validate,
)
from .enumeration import (
    CheckResult,
    EnumerationReport,
    check_names,
    count_quasiplanar,
    dissimilar_same_order_witness,
    enumerate_quasiplanar,
    expected_count,
    oracle_enumerate,
    order_isomorphic_by_search,
    similar_by_search,
    verify_suite,
)
from .errors import (
    ChainsDoNotCoverJir,
    DiagramError,
    InvalidGroundElement,
    LeftIncomplete,
    LeftOnComparable,
    MalformedDocument,
    NotALattice,
    NotAPartialOrder,
    NotBounded,
    NotLinearizable,
    NotSlimSemimodular,
    SizeTooLarge,
)
from .io import (
    DiagramDocument,
    document_of,
    grid_layout,
    parse,
    parse_document,
    render_dot,
    serialize,
    to_diagram,
)
from .lattice import (
    LatticeTables,
    SupportData,
    diagram_from_chains,
    interval_subdiagram,
    irredundant_meet_representations,
    is_join_distributive,
    is_lattice,
    is_semimodular,
    is_slim,
    lattice_isomorphic,
    lattice_tables,
    require_slim_semimodular,
    supports,
)
from .transform import (
    Antimatroid,
    FilterFamily,
    WeakLeftPair,
    antimatroid_of,
    enumerate_hco_filters,
    hco_closure,
    lattice_from_filters,
    lattice_from_filters_labeled,
    lattice_from_pairs,
    lattice_from_pairs_labeled,
    meet_irreducible_filters,
    min_between,
    pair_filter_maps,
    to_quasiplanar,
    weak_left_pairs,
)

__version__ = "0.1.0"

__all__ = [
    "Antimatroid",
    "CanonicalPermutation",
    "Chain",
    "ChainsDoNotCoverJir",
    "CheckResult",
    "Diagram",
    "DiagramDocument",
    "DiagramError",
    "EnumerationReport",
    "FilterFamily",
    "InvalidGroundElement",
    "LatticeTables",
    "LeftIncomplete",
    "LeftOnComparable",
    "MalformedDocument",
    "NotALattice",
    "NotAPartialOrder",
    "NotBounded",
    "NotLinearizable",
    "NotSlimSemimodular",
    "Realizer",
    "SizeTooLarge",
    "SupportData",
    "WeakLeftPair",
    "antimatroid_of",
    "boolean_cube_covers",
    "boundary_chains",
    "canonical_form",
    "canonical_relabel",
    "capped_diamond",
    "chain",
    "chain_side",
    "check_names",
    "count_quasiplanar",
    "diagram_from_chains",
    "diamond",
    "dissimilar_same_order_witness",
    "document_of",
    "enumerate_hco_filters",
    "enumerate_quasiplanar",
    "expected_count",
    "from_canonical",
    "grid_layout",
    "hco_closure",
    "hexagon",
    "interval_subdiagram",
    "irredundant_meet_representations",
    "is_join_distributive",
    "is_lattice",
    "is_semimodular",
    "is_slim",
    "lattice_from_filters",
    "lattice_from_filters_labeled",
    "lattice_from_pairs",
    "lattice_from_pairs_labeled",
    "lattice_isomorphic",
    "lattice_tables",
    "maximal_chains",
    "meet_irreducible_filters",
    "min_between",
    "mirror",
    "oracle_enumerate",
    "order_dimension_le2",
    "order_isomorphic_by_search",
    "pair_filter_maps",
    "parse",
    "parse_document",
    "pentagon",
    "realizer",
    "relabel",
    "render_dot",
    "require_slim_semimodular",
    "revalidate",
    "serialize",
    "similar",
    "similar_by_search",
    "supports",
    "three_atom_diamond",
    "to_diagram",
    "to_quasiplanar",
    "validate",
    "verify_suite",
    "weak_left_pairs",
]
