import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from catcluster.exceptions import (
    CancelledStateError,
    InvalidAmplitudeError,
    InvalidBeamSplitterParams,
    InvalidModeError,
    ModeMismatchError,
)
from catcluster.globals import DEFAULT_TOLERANCES

# Coherent amplitudes are plain Python/numpy complex numbers.
ComplexAmp = complex

# Upper bound on the number of Gram entries held in memory at once by the pair sums.
_PAIR_BLOCK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class CoherentTerm:
    """One branch of a superposition: a complex coefficient and one coherent amplitude per mode."""

    coeff: complex
    alphas: Tuple[complex, ...]


@dataclass(frozen=True)
class BeamSplitterParams:
    """Beam splitter reflectivity ``theta`` and cross-term phase ``phi``.

    The mode map is ``(m1, m2) -> (m1 cos(theta) - exp(i phi) m2 sin(theta), exp(-i phi) m1 sin(theta) +
    m2 cos(theta))``.
    With ``phi = -pi/2`` the cross terms are ``+i sin(theta)`` on both outputs (the CSIGN interaction); with
    ``phi = 0`` and ``theta = pi/4`` the splitter turns ``|sqrt(2) a, 0>`` into ``|a, a>``.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.theta) or not 0.0 <= self.theta <= np.pi / 2:
            raise InvalidBeamSplitterParams(f"theta must lie in [0, pi/2], got {self.theta}")
        if not np.isfinite(self.phi) or not -np.pi < self.phi <= np.pi:
            raise InvalidBeamSplitterParams(f"phi must lie in (-pi, pi], got {self.phi}")

    @classmethod
    def csign(cls, alpha: float) -> "BeamSplitterParams":
        """Weak splitter that approximates a CSIGN on {|0>, |alpha>} qubits."""
        _check_amplitude(alpha)
        return cls(theta=np.pi / (2.0 * alpha**2), phi=-np.pi / 2)

    @classmethod
    def bell_preparation(cls) -> "BeamSplitterParams":
        return cls(theta=np.pi / 4, phi=0.0)

    @classmethod
    def detection(cls) -> "BeamSplitterParams":
        """Symmetric splitter with sum port first and difference port second."""
        return cls(theta=np.pi / 4, phi=np.pi)

    def matrix(self) -> np.ndarray:
        c, s = np.cos(self.theta), np.sin(self.theta)
        return np.array([[c, -np.exp(1j * self.phi) * s], [np.exp(-1j * self.phi) * s, c]], dtype=np.complex128)


class SuperposedState:
    """A finite superposition of multimode coherent states.

    Terms are stored column-wise: ``coeffs`` has shape ``(terms,)`` and ``alphas`` has shape ``(terms, modes)``.
    Both arrays are read-only; every operation returns a new state.
    """

    __slots__ = ("coeffs", "alphas")

    def __init__(self, coeffs: Union[Sequence[complex], np.ndarray], alphas: Union[Sequence, np.ndarray]):
        coeffs = np.array(coeffs, dtype=np.complex128).reshape(-1)
        alphas = np.array(alphas, dtype=np.complex128)
        if alphas.size == 0:
            alphas = np.zeros((coeffs.shape[0], 0), dtype=np.complex128)
        elif alphas.ndim == 1:
            alphas = alphas.reshape(len(coeffs), -1)
        if alphas.ndim != 2 or alphas.shape[0] != coeffs.shape[0]:
            raise ModeMismatchError(
                f"Got {coeffs.shape[0]} coefficients for an amplitude table of shape {alphas.shape}"
            )
        if coeffs.shape[0] == 0:
            raise ValueError("A superposition needs at least one term")
        if not (np.all(np.isfinite(coeffs)) and np.all(np.isfinite(alphas))):
            raise ValueError("Coefficients and amplitudes must be finite")
        coeffs.setflags(write=False)
        alphas.setflags(write=False)
        self.coeffs = coeffs
        self.alphas = alphas

    @classmethod
    def from_terms(cls, terms: Sequence[CoherentTerm]) -> "SuperposedState":
        if not terms:
            raise ValueError("A superposition needs at least one term")
        modes = {len(term.alphas) for term in terms}
        if len(modes) != 1:
            raise ModeMismatchError(f"Terms disagree on the mode count: {sorted(modes)}")
        return cls([term.coeff for term in terms], [list(term.alphas) for term in terms])

    @classmethod
    def vacuum(cls, modes: int = 1) -> "SuperposedState":
        return cls([1.0], np.zeros((1, modes)))

    @property
    def modes(self) -> int:
        return self.alphas.shape[1]

    @property
    def terms(self) -> List[CoherentTerm]:
        return [CoherentTerm(complex(c), tuple(complex(a) for a in row)) for c, row in zip(self.coeffs, self.alphas)]

    def __len__(self) -> int:
        return self.coeffs.shape[0]

    def __iter__(self) -> Iterator[CoherentTerm]:
        return iter(self.terms)

    def __repr__(self) -> str:
        return f"SuperposedState(modes={self.modes}, terms={len(self)})"

    def with_coeffs(self, coeffs: np.ndarray) -> "SuperposedState":
        return SuperposedState(coeffs, self.alphas)


def _check_amplitude(alpha: float):
    if not np.isfinite(alpha) or alpha <= 0:
        raise InvalidAmplitudeError(f"Amplitude must be a positive finite number, got {alpha}")


def _check_mode(state: SuperposedState, mode: int):
    if not 0 <= mode < state.modes:
        raise InvalidModeError(f"Mode {mode} out of range for a {state.modes}-mode state")


def overlap(beta: Union[complex, np.ndarray], alpha: Union[complex, np.ndarray]) -> Union[complex, np.ndarray]:
    """Closed-form coherent state inner product ``<beta|alpha>``.

    :param beta: Bra amplitude(s)
    :param alpha: Ket amplitude(s), broadcast against ``beta``
    :return: ``exp(-(|alpha|^2 + |beta|^2)/2 + alpha conj(beta))``, evaluated as
        ``exp(-|alpha - beta|^2/2 + i Im(alpha conj(beta)))`` so near-equal amplitudes do not cancel
    """
    beta = np.asarray(beta, dtype=np.complex128)
    alpha = np.asarray(alpha, dtype=np.complex128)
    value = np.exp(-0.5 * np.abs(alpha - beta) ** 2 + 1j * np.imag(alpha * np.conj(beta)))
    return complex(value) if value.ndim == 0 else value


def term_overlap(a: CoherentTerm, b: CoherentTerm) -> complex:
    """``conj(a.coeff) * b.coeff`` times the product of per-mode overlaps ``<a_m|b_m>``."""
    if len(a.alphas) != len(b.alphas):
        raise ModeMismatchError(f"Cannot overlap a {len(a.alphas)}-mode term with a {len(b.alphas)}-mode term")
    per_mode = overlap(np.array(a.alphas), np.array(b.alphas))
    return complex(np.conj(a.coeff) * b.coeff * np.prod(per_mode))


def log_gram(bra: np.ndarray, ket: np.ndarray) -> np.ndarray:
    """Logarithm of the amplitude-only Gram block ``prod_m <bra_jm|ket_km>`` for amplitude tables.

    The real part is the squared distance between amplitude rows, taken directly rather than as a difference of
    squared norms.
    """
    bra = np.asarray(bra, dtype=np.complex128)
    ket = np.asarray(ket, dtype=np.complex128)
    distance = np.zeros((bra.shape[0], ket.shape[0]))
    for mode in range(bra.shape[1]):
        distance += np.abs(bra[:, mode, None] - ket[None, :, mode]) ** 2
    return -0.5 * distance + 1j * np.imag(np.conj(bra) @ ket.T)


def inner(a: SuperposedState, b: SuperposedState) -> complex:
    """``<a|b>`` summed block by block over the rows of ``a`` in term order (fixed summation order)."""
    if a.modes != b.modes:
        raise ModeMismatchError(f"Cannot take the inner product of {a.modes}-mode and {b.modes}-mode states")
    block = max(1, _PAIR_BLOCK_ENTRIES // len(b))
    total = 0.0 + 0.0j
    for start in range(0, len(a), block):
        stop = min(start + block, len(a))
        gram = np.exp(log_gram(a.alphas[start:stop], b.alphas))
        total += np.conj(a.coeffs[start:stop]) @ (gram @ b.coeffs)
    return complex(total)


def gram_apply(state: SuperposedState) -> np.ndarray:
    """``G c`` for the state's own Gram matrix ``G``, computed blockwise."""
    block = max(1, _PAIR_BLOCK_ENTRIES // len(state))
    out = np.empty(len(state), dtype=np.complex128)
    for start in range(0, len(state), block):
        stop = min(start + block, len(state))
        out[start:stop] = np.exp(log_gram(state.alphas[start:stop], state.alphas)) @ state.coeffs
    return out


def norm2(state: SuperposedState) -> float:
    """Squared norm as the Gram sum over all term pairs; the imaginary rounding residue is discarded."""
    value = inner(state, state)
    if abs(value.imag) > DEFAULT_TOLERANCES.IMAG_RESIDUE * max(1.0, abs(value.real)):
        logging.debug(f"norm2 imaginary residue {value.imag:.3e} exceeds rounding level")
    return float(value.real)


def normalize(state: SuperposedState) -> SuperposedState:
    """Rescale the coefficients so that ``norm2`` is 1.

    :raises CancelledStateError: when the squared norm is at or below numerical zero
    """
    value = norm2(state)
    scale = float(np.sum(np.abs(state.coeffs)) ** 2)
    if value <= DEFAULT_TOLERANCES.ZERO_NORM or value <= 1e-13 * scale:
        raise CancelledStateError(f"Superposition has vanishing norm ({value:.3e}); its terms cancelled")
    return state.with_coeffs(state.coeffs / np.sqrt(value))


def apply_beam_splitter(
    state: SuperposedState, mode_a: int, mode_b: int, params: BeamSplitterParams
) -> SuperposedState:
    """Mix modes ``mode_a`` and ``mode_b`` of every term; coefficients are untouched."""
    _check_mode(state, mode_a)
    _check_mode(state, mode_b)
    if mode_a == mode_b:
        raise InvalidModeError(f"Beam splitter needs two distinct modes, got {mode_a} twice")
    u = params.matrix()
    alphas = np.array(state.alphas)
    m1, m2 = state.alphas[:, mode_a], state.alphas[:, mode_b]
    alphas[:, mode_a] = u[0, 0] * m1 + u[0, 1] * m2
    alphas[:, mode_b] = u[1, 0] * m1 + u[1, 1] * m2
    return SuperposedState(state.coeffs, alphas)


def apply_displacement(state: SuperposedState, mode: int, gamma: complex) -> SuperposedState:
    """``D(gamma)`` on one mode: ``|beta> -> exp(i Im[gamma conj(beta)]) |beta + gamma>``.

    The composition phase goes on the coefficient so amplitudes stay canonical.
    """
    _check_mode(state, mode)
    beta = state.alphas[:, mode]
    coeffs = state.coeffs * np.exp(1j * np.imag(gamma * np.conj(beta)))
    alphas = np.array(state.alphas)
    alphas[:, mode] = beta + gamma
    return SuperposedState(coeffs, alphas)


def cat_state(alpha: float, modes: int = 1) -> SuperposedState:
    """Normalized ``(|0> + |alpha>)/sqrt(2(1 + exp(-alpha^2/2)))``, or its ``modes``-fold tensor power.

    The tensor power is built directly over all bitstrings: term ``b`` has amplitude ``alpha * b_m`` on mode ``m``
    and coefficient ``N^(-modes/2)``, bitstrings ordered with mode 0 as the most significant bit.
    """
    _check_amplitude(alpha)
    if modes < 1:
        raise ModeMismatchError(f"cat_state needs at least one mode, got {modes}")
    bits = bitstrings(modes)
    norm = 2.0 * (1.0 + np.exp(-(alpha**2) / 2.0))
    coeffs = np.full(bits.shape[0], norm ** (-modes / 2.0), dtype=np.complex128)
    return SuperposedState(coeffs, alpha * bits.astype(np.complex128))


def bitstrings(n: int) -> np.ndarray:
    """All ``2**n`` bitstrings as rows of a ``uint8`` matrix, mode 0 most significant."""
    index = np.arange(1 << n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((index[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


def prune_terms(state: SuperposedState, epsilon: float = 0.0) -> SuperposedState:
    """Drop every term whose removal changes ``norm2`` by less than ``epsilon``.

    The change for term ``j`` is ``|2 Re(conj(c_j) (G c)_j) - |c_j|^2|``. When every term is negligible the
    result is a single zero-coefficient term, which :func:`normalize` rejects.
    """
    if epsilon < 0:
        raise ValueError(f"epsilon must be non-negative, got {epsilon}")
    if epsilon == 0:
        return state
    gc = gram_apply(state)
    change = np.abs(2.0 * np.real(np.conj(state.coeffs) * gc) - np.abs(state.coeffs) ** 2)
    keep = change >= epsilon
    logging.debug(f"prune_terms: keeping {int(keep.sum())} of {len(state)} terms at epsilon={epsilon}")
    if not keep.any():
        return SuperposedState([0.0], state.alphas[:1])
    return SuperposedState(state.coeffs[keep], state.alphas[keep])


def tensor(a: SuperposedState, b: SuperposedState) -> SuperposedState:
    """Product state with the modes of ``a`` followed by the modes of ``b``; ``a`` varies slowest."""
    coeffs = np.kron(a.coeffs, b.coeffs)
    left = np.repeat(a.alphas, len(b), axis=0)
    right = np.tile(b.alphas, (len(a), 1))
    return SuperposedState(coeffs, np.hstack([left, right]))


def permute_modes(state: SuperposedState, order: Sequence[int]) -> SuperposedState:
    """New state whose mode ``i`` is mode ``order[i]`` of ``state``."""
    order = list(order)
    if sorted(order) != list(range(state.modes)):
        raise InvalidModeError(f"{order} is not a permutation of the {state.modes} modes")
    return SuperposedState(state.coeffs, state.alphas[:, order])


def drop_mode(state: SuperposedState, mode: int, coeffs: Optional[np.ndarray] = None) -> SuperposedState:
    """Remove one mode, optionally replacing the coefficients (used by the projections)."""
    _check_mode(state, mode)
    alphas = np.delete(state.alphas, mode, axis=1)
    return SuperposedState(state.coeffs if coeffs is None else coeffs, alphas)
