"""Coloring the graph form of the Erdos-Faber-Lovasz problem with symmetric
latin squares, with independent verification."""

from .colorer import (
    Improper,
    Stuck,
    Success,
    TraceEvent,
    color_hn,
    extend_coloring,
    replay,
    run_procedure,
    step2_repair,
    step4_align,
)
from .instance import (
    DerivedSets,
    EflInstance,
    clique_degree,
    common_vertex_labels,
    derived_sets,
    parse_instance,
    validate,
)
from .latin import (
    ColorMatrix,
    SymmetricLatinSquare,
    blank_for_instance,
    cyclic_symmetric_latin,
    fresh_color,
    occupancy,
    replace_pair,
    swap_colors,
)
from .systems import (
    LabelSystem,
    build_hn,
    enumerate_systems,
    random_system,
    realize,
    system_of,
)
from .verify import CapExceeded, Violation, canonical_signature, chromatic_number, verify_coloring

__version__ = "0.1.0"
