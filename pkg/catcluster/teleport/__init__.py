from .teleporter import (
    CORRECTIONS,
    FAMILIES,
    FRAMES,
    SLICES,
    Correction,
    DetectionPattern,
    OutcomeRecord,
    OutcomeTable,
    average_fidelity,
    bell_state,
    correct,
    detect,
    family_mass,
    greedy_prefixes,
    max_fidelity_curve,
    pattern_family,
    pattern_slice,
    scan_cutoff,
    scan_outcomes,
    source_alpha,
    success_probability,
    success_probability_curve,
    teleporter_pre_detection,
)
