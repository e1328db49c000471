"""Synthesis of diagonal unitaries into rotation, controlled-flip and
global-phase gates, with exact monomial-operator verification."""

from ._diagsynth import (
    Circuit,
    ControlSequence,
    DegenerateSequenceError,
    GapStats,
    IoError,
    MonomialOperator,
    ValidityReport,
    apply_r,
    build_r,
    constant_gap_sequence,
    decompose,
    evaluate,
    export_qasm,
    gap_stats,
    gate_counts,
    invert_r,
    is_diagonal,
    kron_column_permutation,
    max_phase_error,
    nested_copy_sequence,
    pad_phases,
    parity_trace,
    pbt_sequence,
    permute_rows,
    render_svg,
    render_text,
    validate,
    wrap_circuit_angles,
)

__all__ = [
    "Circuit",
    "ControlSequence",
    "DegenerateSequenceError",
    "GapStats",
    "IoError",
    "MonomialOperator",
    "ValidityReport",
    "apply_r",
    "build_r",
    "constant_gap_sequence",
    "decompose",
    "evaluate",
    "export_qasm",
    "gap_stats",
    "gate_counts",
    "invert_r",
    "is_diagonal",
    "kron_column_permutation",
    "max_phase_error",
    "nested_copy_sequence",
    "pad_phases",
    "parity_trace",
    "pbt_sequence",
    "permute_rows",
    "render_svg",
    "render_text",
    "validate",
    "wrap_circuit_angles",
]
