import logging
import math
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np
from scipy import integrate, special

from catcluster.exceptions import QuadratureError
from catcluster.globals import DEFAULT_TOLERANCES
from catcluster.states.coherent import CoherentTerm, SuperposedState, _check_amplitude, _check_mode, drop_mode

FockOutcome = int
HomodyneOutcome = float

_HOMODYNE_NORM = (2.0 * np.pi) ** -0.25


class Outcome(str, Enum):
    """Binary measurement outcome of an X or Z qubit measurement."""

    PLUS = "plus"
    MINUS = "minus"


def photon_cutoff(mu: float) -> int:
    """Photon-number cutoff ``ceil(mu + 12 sqrt(mu) + 30)`` for a Poisson mean ``mu``; the tail beyond it is < 1e-12."""
    if mu < 0 or not np.isfinite(mu):
        raise ValueError(f"Mean photon number must be finite and non-negative, got {mu}")
    return int(math.ceil(mu + 12.0 * math.sqrt(mu) + 30.0))


def _displacement_phase(beta: np.ndarray, d: complex) -> np.ndarray:
    return np.exp(1j * np.imag(d * np.conj(beta)))


def fock_amplitudes(
    beta: Union[complex, np.ndarray], d: complex = 0.0, cutoff: Optional[int] = None
) -> np.ndarray:
    """Table of ``<n|D(d)|beta>`` for ``n = 0..cutoff``.

    Evaluated in log-magnitude space (``n log(beta + d) - gammaln(n + 1)/2``) so photon numbers in the thousands
    neither overflow nor underflow before the Gaussian envelope is applied.

    :param beta: Coherent amplitude, or a 1-D array of them
    :param d: Displacement applied before counting
    :param cutoff: Largest photon number; defaults to :func:`photon_cutoff` of the largest ``|beta + d|^2``
    :return: Array of shape ``(cutoff + 1,)`` for a scalar ``beta``, ``(len(beta), cutoff + 1)`` otherwise
    """
    beta_arr = np.atleast_1d(np.asarray(beta, dtype=np.complex128))
    shifted = beta_arr + d
    if cutoff is None:
        cutoff = photon_cutoff(float(np.max(np.abs(shifted) ** 2)))
    n = np.arange(cutoff + 1, dtype=np.float64)

    is_zero = shifted == 0
    log_shift = np.log(np.where(is_zero, 1.0, shifted))
    exponent = -0.5 * np.abs(shifted)[:, None] ** 2 + n[None, :] * log_shift[:, None] - 0.5 * special.gammaln(n + 1)
    table = np.exp(exponent)
    table[is_zero, 1:] = 0.0
    table *= _displacement_phase(beta_arr, d)[:, None]
    return table[0] if np.ndim(beta) == 0 else table


def fock_amplitude(n: FockOutcome, beta: Union[complex, np.ndarray], d: complex = 0.0) -> Union[complex, np.ndarray]:
    """``<n|D(d)|beta> = exp(i Im[d conj(beta)]) exp(-|beta + d|^2 / 2) (beta + d)^n / sqrt(n!)``."""
    if n < 0:
        raise ValueError(f"Photon number must be non-negative, got {n}")
    beta_arr = np.asarray(beta, dtype=np.complex128)
    shifted = beta_arr + d
    log_shift = np.log(np.where(shifted == 0, 1.0, shifted))
    value = np.exp(-0.5 * np.abs(shifted) ** 2 + n * log_shift - 0.5 * special.gammaln(n + 1))
    if n > 0:
        value = np.where(shifted == 0, 0.0, value)
    value = value * _displacement_phase(beta_arr, d)
    return complex(value) if value.ndim == 0 else value


def fock_project(state: SuperposedState, mode: int, n: FockOutcome, d: complex = 0.0) -> SuperposedState:
    """Project ``mode`` onto ``D(d)^dagger |n>`` and remove it.

    The result is unnormalized: its squared norm is the probability of counting ``n`` photons.
    """
    _check_mode(state, mode)
    weights = fock_amplitude(n, state.alphas[:, mode], d)
    return drop_mode(state, mode, state.coeffs * weights)


def homodyne_amplitude(x: Union[float, np.ndarray], beta: Union[complex, np.ndarray]) -> Union[complex, np.ndarray]:
    """x-quadrature wavefunction ``(2 pi)^(-1/4) exp(i Re[b] Im[b] - Im[b]^2 - (x - 2b)^2 / 4)``.

    Peaked at ``2 Re[b]``.
    """
    x = np.asarray(x, dtype=np.float64)
    beta = np.asarray(beta, dtype=np.complex128)
    exponent = 1j * beta.real * beta.imag - beta.imag**2 - 0.25 * (x - 2.0 * beta) ** 2
    value = _HOMODYNE_NORM * np.exp(exponent)
    return complex(value) if value.ndim == 0 else value


def homodyne_project(state: SuperposedState, mode: int, x: HomodyneOutcome) -> SuperposedState:
    """Project ``mode`` onto the quadrature eigenstate ``<x|``; the squared norm of the result is the density at x."""
    _check_mode(state, mode)
    weights = homodyne_amplitude(x, state.alphas[:, mode])
    return drop_mode(state, mode, state.coeffs * weights)


def z_bin(x: HomodyneOutcome, alpha: float) -> Outcome:
    """Z outcome from a homodyne value: plus below the midpoint ``x = alpha``, minus at or above it."""
    _check_amplitude(alpha)
    return Outcome.PLUS if x < alpha else Outcome.MINUS


def x_parity(n: FockOutcome) -> Outcome:
    """X outcome from a displaced photon count: plus for even ``n``, minus for odd."""
    if n < 0:
        raise ValueError(f"Photon number must be non-negative, got {n}")
    return Outcome.PLUS if n % 2 == 0 else Outcome.MINUS


def _scaled_erfc(exponent: np.ndarray, z: np.ndarray) -> np.ndarray:
    """``exp(exponent) * erfc(z)`` without forming either factor on its own."""
    exponent, z = np.broadcast_arrays(np.asarray(exponent, dtype=np.complex128), np.asarray(z, dtype=np.complex128))
    shape = z.shape
    exponent, z = exponent.ravel(), z.ravel()
    out = np.empty(z.shape, dtype=np.complex128)
    right = z.real >= 0
    out[right] = np.exp(exponent[right] - z[right] ** 2) * special.erfcx(z[right])
    left = ~right
    zl = -z[left]
    out[left] = 2.0 * np.exp(exponent[left]) - np.exp(exponent[left] - zl**2) * special.erfcx(zl)
    return out.reshape(shape)


def _band_tail(exponent: np.ndarray, s: np.ndarray, c: float) -> np.ndarray:
    """``exp(E) erfc((c - s)/sqrt(2))`` including the infinite endpoints."""
    if c == -np.inf:
        return 2.0 * np.exp(exponent)
    if c == np.inf:
        return np.zeros(np.broadcast(exponent, s).shape, dtype=np.complex128)
    return _scaled_erfc(exponent, (c - s) / np.sqrt(2.0))


def _quad_band(beta_j: complex, beta_k: complex, a: float, b: float) -> complex:
    tol = DEFAULT_TOLERANCES.integral()

    def integrand(x):
        return homodyne_amplitude(x, beta_j) * np.conj(homodyne_amplitude(x, beta_k))

    re, re_err = integrate.quad(lambda x: integrand(x).real, a, b, epsabs=tol, epsrel=0.0, limit=200)
    im, im_err = integrate.quad(lambda x: integrand(x).imag, a, b, epsabs=tol, epsrel=0.0, limit=200)
    if not (np.isfinite(re) and np.isfinite(im)) or max(re_err, im_err) > tol:
        raise QuadratureError(
            f"Band integral over ({a}, {b}) for amplitudes {beta_j}, {beta_k} did not converge "
            f"(error estimate {max(re_err, im_err):.3e}, tolerance {tol:.1e})"
        )
    return complex(re, im)


def gaussian_band_integral(
    beta_j: Union[complex, np.ndarray], beta_k: Union[complex, np.ndarray], a: float, b: float
) -> Union[complex, np.ndarray]:
    """Band integral ``int_a^b <x|beta_j> conj(<x|beta_k>) dx``, i.e. ``<beta_k| P_[a,b] |beta_j>``.

    With ``s = beta_j + conj(beta_k)`` and ``kappa(b) = -b^2 + i Re[b] Im[b] - Im[b]^2`` the integrand is a complex
    Gaussian and the integral is ``exp(E)/2 [erf((b - s)/sqrt2) - erf((a - s)/sqrt2)]`` with
    ``E = s^2/2 + kappa(beta_j) + conj(kappa(beta_k))``. The erfc/erfcx route keeps it finite for large amplitudes;
    any entry that still comes out non-finite is recomputed by adaptive quadrature.

    ``a`` and ``b`` may be infinite. Amplitude arguments broadcast against each other.

    :raises QuadratureError: when the quadrature fallback misses the integral tolerance
    """
    if not a < b:
        raise ValueError(f"Band requires a < b, got ({a}, {b})")
    bj = np.asarray(beta_j, dtype=np.complex128)
    bk = np.asarray(beta_k, dtype=np.complex128)
    s = bj + np.conj(bk)

    def kappa(beta):
        return -(beta**2) + 1j * beta.real * beta.imag - beta.imag**2

    exponent = 0.5 * s**2 + kappa(bj) + np.conj(kappa(bk))
    value = 0.5 * (_band_tail(exponent, s, a) - _band_tail(exponent, s, b))
    value = np.asarray(value, dtype=np.complex128)

    bad = ~np.isfinite(value)
    if bad.any():
        logging.debug(f"gaussian_band_integral: {int(bad.sum())} entries fall back to quadrature")
        bj_full, bk_full = np.broadcast_arrays(bj, bk)
        for index in zip(*np.nonzero(bad)) if value.ndim else [()]:
            value[index] = _quad_band(complex(bj_full[index]), complex(bk_full[index]), a, b)
    return complex(value) if value.ndim == 0 else value


def term_band_integral(term_pair: Tuple[CoherentTerm, CoherentTerm], mode: int, a: float, b: float) -> complex:
    """Band integral for one mode of a pair of superposition terms (amplitudes only, coefficients ignored)."""
    first, second = term_pair
    return gaussian_band_integral(first.alphas[mode], second.alphas[mode], a, b)


def parity_sums(
    beta_j: Union[complex, np.ndarray],
    beta_k: Union[complex, np.ndarray],
    d: complex = 0.0,
    cutoff: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """Even and odd photon-number class sums ``sum_n conj(<n|D(d)|beta_j>) <n|D(d)|beta_k>``.

    Returns two matrices of shape ``(len(beta_j), len(beta_k))`` (scalars broadcast to 1x1).
    """
    bj = np.atleast_1d(np.asarray(beta_j, dtype=np.complex128))
    bk = np.atleast_1d(np.asarray(beta_k, dtype=np.complex128))
    if cutoff is None:
        mu = float(max(np.max(np.abs(bj + d) ** 2), np.max(np.abs(bk + d) ** 2)))
        cutoff = photon_cutoff(mu)
    left = np.conj(fock_amplitudes(bj, d, cutoff))
    right = fock_amplitudes(bk, d, cutoff)
    even = left[:, 0::2] @ right[:, 0::2].T
    odd = left[:, 1::2] @ right[:, 1::2].T
    return even, odd


def parity_expectation(
    beta_j: Union[complex, np.ndarray], beta_k: Union[complex, np.ndarray], d: complex = 0.0
) -> Union[complex, np.ndarray]:
    """Closed form of ``even - odd`` from :func:`parity_sums`: ``<beta_j| D(d)^dagger (-1)^N D(d) |beta_k>``."""
    bj = np.asarray(beta_j, dtype=np.complex128)
    bk = np.asarray(beta_k, dtype=np.complex128)
    phase = np.conj(_displacement_phase(bj, d)) * _displacement_phase(bk, d)
    # overlap <bj + d | -(bk + d)>
    left, right = bj + d, -(bk + d)
    value = phase * np.exp(-0.5 * (np.abs(left) ** 2 + np.abs(right) ** 2) + right * np.conj(left))
    return complex(value) if value.ndim == 0 else value
