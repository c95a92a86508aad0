"""Exact combinatorics of cobweb posets built from integer sequences.

The package computes, in arbitrary-precision integer and rational
arithmetic: sequence-nomial coefficient triangles and their admissibility,
graded posets with complete bipartite covering relations, chain counts by
product formula, literal enumeration and incidence-matrix powers, exact
max-disjoint packings of embedded prime copies, two layer-composition
algebras with their size quotients, and exponential-formula enumerators
including the vector-space decomposition counts over prime fields.
"""

from .fnomial import (
    FNomialValue,
    f_factorial,
    f_nomial,
    f_nomial_from_factorials,
    f_nomial_triangle,
    falling_f,
)
from .fseq import (
    AdmissibilityReport,
    FSequence,
    GcdMorphismReport,
    SequenceError,
    admissibility_scan,
    is_cobweb_admissible_prefix,
    is_gcd_morphic_prefix,
    parse_sequence,
)
from .incidence import (
    IncidenceMatrix,
    count_chains,
    count_maximal_chains_matrix,
    covering_matrix,
    mobius_matrix,
    zeta_matrix,
)
from .poset import (
    CobwebPoset,
    Dim2Realizer,
    PackingCapError,
    PackingReport,
    PrimeCopy,
    Vertex,
    build_poset,
    count_max_chains_between,
    count_max_chains_from_root,
    dim2_realizer,
    enumerate_copies,
    export_dot,
    hasse_is_acyclic,
    max_disjoint_packing,
)
from .prefab import (
    EMPTY,
    C2Record,
    LawReport,
    PrefabContext,
    Prefabiant,
    check_algebra_laws,
    circ,
    copies_count,
    f_size,
    odot,
    verify_c2,
    weight,
)
from .series import (
    FormalSeries,
    QBellContext,
    bell_f,
    decomposition_oracle,
    enumerator_coeff_by_partitions,
    exp_f_series,
    gl_order,
    prefab_enumerator,
    q_bell,
    q_stirling,
    series_add,
    series_exp,
    series_mul,
)

__all__ = [
    "AdmissibilityReport",
    "C2Record",
    "CobwebPoset",
    "Dim2Realizer",
    "EMPTY",
    "FNomialValue",
    "FSequence",
    "FormalSeries",
    "GcdMorphismReport",
    "IncidenceMatrix",
    "LawReport",
    "PackingCapError",
    "PackingReport",
    "PrefabContext",
    "Prefabiant",
    "PrimeCopy",
    "QBellContext",
    "SequenceError",
    "Vertex",
    "admissibility_scan",
    "bell_f",
    "build_poset",
    "check_algebra_laws",
    "circ",
    "copies_count",
    "count_chains",
    "count_max_chains_between",
    "count_max_chains_from_root",
    "count_maximal_chains_matrix",
    "covering_matrix",
    "decomposition_oracle",
    "dim2_realizer",
    "enumerate_copies",
    "enumerator_coeff_by_partitions",
    "exp_f_series",
    "export_dot",
    "f_factorial",
    "f_nomial",
    "f_nomial_from_factorials",
    "f_nomial_triangle",
    "f_size",
    "falling_f",
    "gl_order",
    "hasse_is_acyclic",
    "is_cobweb_admissible_prefix",
    "is_gcd_morphic_prefix",
    "max_disjoint_packing",
    "mobius_matrix",
    "odot",
    "parse_sequence",
    "prefab_enumerator",
    "q_bell",
    "q_stirling",
    "series_add",
    "series_exp",
    "series_mul",
    "verify_c2",
    "weight",
    "zeta_matrix",
]
