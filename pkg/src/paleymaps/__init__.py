"""Generalised Paley maps: construction, invariants, census."""

from .cmap import (
    MapInvariants,
    OrientedMap,
    canonical_form,
    is_isomorphic,
    is_reflexible,
    mirror,
    petrie_length,
    regularity_degree,
    trace_invariants,
    wilson,
)
from .ffield import (
    FieldElement,
    FiniteField,
    PrimePower,
    build_field,
    frobenius_orbit,
    generator_orbit_count,
    minimal_polynomial,
    subgroup_of_order,
)
from .paley import (
    AdmissiblePair,
    PaleyMapSpec,
    build_paley_graph,
    build_paley_map,
    closed_form_invariants,
    enumerate_admissible,
    galois_orbit_info,
    is_admissible,
    is_reflexible_closed_form,
    iso_classes,
    paley_map,
    paley_spec,
)

__version__ = "0.1.0"
