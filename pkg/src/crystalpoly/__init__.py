"""Exact engine for crystal combinatorics realized as lattice points of
inequality systems, with braid-type isomorphisms and a breadth-first oracle."""

from .braid import (
    BraidContext,
    apply_at,
    map_values,
    map_values_nested,
    phi,
    phi3_alt,
    phi_inverse,
    rank2_cartan,
    run_property_suite,
)
from .cartan import (
    CartanData,
    CartanError,
    IndexSequence,
    Weight,
    cartan_from_matrix,
    load_cartan,
    weight,
)
from .closed_forms import (
    Builtin,
    TruncationReport,
    a_prime,
    a_sequence,
    an_flat,
    an_system,
    builtin_names,
    chebyshev,
    get_builtin,
    l_max,
    rank2_system,
    truncation_check,
)
from .crystals import (
    NEG_INF,
    CrystalGraph,
    Letter,
    TensorWord,
    UnitLetter,
    check_crystal_axioms,
    check_strict_morphism,
    connected_component,
)
from .forms import DescentSystem, FormSet, GenerationError, LinearForm
from .zvectors import BINF, MSet, SequenceCrystal, ZVector

__version__ = "0.1.0"

__all__ = [
    "BINF",
    "BraidContext",
    "Builtin",
    "CartanData",
    "CartanError",
    "CrystalGraph",
    "DescentSystem",
    "FormSet",
    "GenerationError",
    "IndexSequence",
    "Letter",
    "LinearForm",
    "MSet",
    "NEG_INF",
    "SequenceCrystal",
    "TensorWord",
    "TruncationReport",
    "UnitLetter",
    "Weight",
    "ZVector",
    "a_prime",
    "a_sequence",
    "an_flat",
    "an_system",
    "apply_at",
    "builtin_names",
    "cartan_from_matrix",
    "chebyshev",
    "check_crystal_axioms",
    "check_strict_morphism",
    "connected_component",
    "get_builtin",
    "l_max",
    "load_cartan",
    "map_values",
    "map_values_nested",
    "phi",
    "phi3_alt",
    "phi_inverse",
    "rank2_cartan",
    "rank2_system",
    "run_property_suite",
    "truncation_check",
    "weight",
]
