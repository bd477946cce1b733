from .projectors import (
    FockOutcome,
    HomodyneOutcome,
    Outcome,
    fock_amplitude,
    fock_amplitudes,
    fock_project,
    gaussian_band_integral,
    homodyne_amplitude,
    homodyne_project,
    parity_expectation,
    parity_sums,
    photon_cutoff,
    term_band_integral,
    x_parity,
    z_bin,
)
