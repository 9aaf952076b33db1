"""Codon multiset counting, genetic-code symmetry analysis and Grover numerics."""

from ._core import (
    CapacityExceeded,
    Error,
    FormatError,
    GeneticCode,
    GroverRun,
    MultisetClass,
    PhysicalParams,
    ScaleComparison,
    analyze,
    arrangements,
    builtin_standard_code,
    canonicalize,
    class_size,
    enumerate_multisets,
    kinetic_energy,
    momentum_uncertainty,
    multiset_count,
    multiset_invariance_violation,
    normalize_alphabet,
    parse_table,
    scale_comparison,
    serialize_table,
    simulate,
    solve_n,
    solve_q,
    success_probability,
    synthetic_code,
    translate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
