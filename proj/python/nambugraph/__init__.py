"""Exact graph calculus for Nambu-determinant Poisson structures.

Thin python layer over the C++ core: micro-graph encodings, the evaluation
morphism into multivector fields, the tetrahedral flow, and the exact linear
pipelines (trivialization, kernel, synonym detection, pair tables).
"""

from ._ngc import (
    BudgetExceededError,
    CanonicalForm,
    DimensionMismatch,
    MicroGraph,
    Multivector,
    PairTable,
    ParseError,
    PipelineResult,
    StructureError,
    SynonymClass,
    cache_directory,
    canonical_form,
    dedup_isomorphic,
    descendants,
    detect_synonyms,
    embed,
    evaluate,
    evaluate_combination,
    generate_2d_vector_graphs,
    generate_hamiltonian_micrographs,
    homogeneous_kernel,
    lichnerowicz,
    nambu_structure,
    pair_search_table,
    parse_encoding,
    schouten_bracket,
    set_cache_directory,
    solve_trivialization,
    swap_casimirs,
    tetrahedral_flow,
    trivializing_pairs_2d,
)

__all__ = [
    "BudgetExceededError",
    "CanonicalForm",
    "DimensionMismatch",
    "MicroGraph",
    "Multivector",
    "PairTable",
    "ParseError",
    "PipelineResult",
    "StructureError",
    "SynonymClass",
    "cache_directory",
    "canonical_form",
    "dedup_isomorphic",
    "descendants",
    "detect_synonyms",
    "embed",
    "evaluate",
    "evaluate_combination",
    "generate_2d_vector_graphs",
    "generate_hamiltonian_micrographs",
    "homogeneous_kernel",
    "lichnerowicz",
    "nambu_structure",
    "pair_search_table",
    "parse_encoding",
    "schouten_bracket",
    "set_cache_directory",
    "solve_trivialization",
    "swap_casimirs",
    "tetrahedral_flow",
    "trivializing_pairs_2d",
]

__version__ = "0.1.0"
