import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from catcluster.clusters.builder import build_ballistic, build_ideal, cluster_fidelity
from catcluster.clusters.graphs import GraphSpec
from catcluster.exceptions import CutoffTooSmallError, EmptyAcceptanceSetError, ModeMismatchError
from catcluster.globals import DEFAULT_TOLERANCES
from catcluster.measurements.projectors import fock_amplitudes, fock_project, photon_cutoff
from catcluster.states.coherent import (
    BeamSplitterParams,
    SuperposedState,
    _check_amplitude,
    apply_beam_splitter,
    apply_displacement,
    cat_state,
    log_gram,
    norm2,
    normalize,
    permute_modes,
    tensor,
)

TWO_QUBIT_GRAPH = GraphSpec(2, ((0, 1),), name="two")

# Pauli-frame corrections, in tie-break order. Rows: corrections; columns: output kets |00>, |0a>, |a0>, |aa>.
CORRECTIONS = ("I", "Z1", "Z2", "Z1Z2")
_CORRECTION_SIGNS = np.array(
    [
        [1.0, 1.0, 1.0, 1.0],
        [1.0, 1.0, -1.0, -1.0],
        [1.0, -1.0, 1.0, -1.0],
        [1.0, -1.0, -1.0, 1.0],
    ]
)
# Which output mode sits on |alpha> for each ket, and the (phi1, phi2) of each Pauli correction.
_BRANCH_BITS = np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=np.float64)
_PAULI_PHASES = np.pi * np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])

FRAMES = ("phase", "pauli")
PHASE_FRAME_SWEEPS = 16

FAMILIES = ("na0nb0", "na00nb", "0nanb0", "0na0nb")
_FAMILY_BY_PORTS = {
    ("sum", "sum"): "na0nb0",
    ("sum", "diff"): "na00nb",
    ("diff", "sum"): "0nanb0",
    ("diff", "diff"): "0na0nb",
}
SLICES = ("nanbnanb", "na00nb")
INPUTS = ("ballistic", "ideal")


class DetectionPattern(NamedTuple):
    """Photon counts at the four teleporter detectors (sum and difference port of each qubit)."""

    n1: int
    n2: int
    n3: int
    n4: int


@dataclass(frozen=True)
class OutcomeRecord:
    pattern: DetectionPattern
    prob: float
    fidelity: float
    fidelity_raw: float
    correction_id: int

    @property
    def correction(self) -> str:
        return CORRECTIONS[self.correction_id]


@dataclass(frozen=True)
class Correction:
    """Best local correction of one teleported output, with the branch phases ``(phi1, phi2)`` it applied."""

    state: SuperposedState
    correction_id: int
    fidelity_raw: float
    fidelity: float
    phases: Tuple[float, float] = (0.0, 0.0)


@dataclass
class OutcomeTable:
    """Array-backed scan result; iterating yields :class:`OutcomeRecord` in lexicographic pattern order."""

    alpha: float
    cutoff: int
    patterns: np.ndarray
    prob: np.ndarray
    fidelity_raw: np.ndarray
    fidelity_corrected: np.ndarray
    correction_id: np.ndarray
    tail: float
    input: str = "ballistic"
    phases: Optional[np.ndarray] = None
    frame: str = "phase"

    def __len__(self) -> int:
        return self.prob.shape[0]

    def __iter__(self) -> Iterator[OutcomeRecord]:
        return (self.record(i) for i in range(len(self)))

    def record(self, index: int) -> OutcomeRecord:
        return OutcomeRecord(
            DetectionPattern(*(int(n) for n in self.patterns[index])),
            float(self.prob[index]),
            float(self.fidelity_corrected[index]),
            float(self.fidelity_raw[index]),
            int(self.correction_id[index]),
        )

    @property
    def total_probability(self) -> float:
        return float(self.prob.sum())

    @property
    def max_fidelity(self) -> float:
        return float(self.fidelity_corrected.max())

    def greedy_order(self) -> np.ndarray:
        """Record indices by descending corrected fidelity, then descending probability, then pattern."""
        p = self.patterns
        return np.lexsort((p[:, 3], p[:, 2], p[:, 1], p[:, 0], -self.prob, -self.fidelity_corrected))

    def subset(self, mask: np.ndarray) -> "OutcomeTable":
        return OutcomeTable(
            self.alpha,
            self.cutoff,
            self.patterns[mask],
            self.prob[mask],
            self.fidelity_raw[mask],
            self.fidelity_corrected[mask],
            self.correction_id[mask],
            self.tail,
            self.input,
            None if self.phases is None else self.phases[mask],
            self.frame,
        )

    def to_rows(self) -> List[Dict[str, Union[int, float]]]:
        return [
            {
                "n1": int(row[0]),
                "n2": int(row[1]),
                "n3": int(row[2]),
                "n4": int(row[3]),
                "prob": float(prob),
                "fidelity_raw": float(raw),
                "fidelity_corrected": float(corrected),
                "correction_id": int(cid),
            }
            for row, prob, raw, corrected, cid in zip(
                self.patterns, self.prob, self.fidelity_raw, self.fidelity_corrected, self.correction_id
            )
        ]


def source_alpha(alpha: float) -> float:
    """Amplitude of the cat state feeding the Bell-resource splitter."""
    return float(np.sqrt(2.0) * alpha)


def scan_cutoff(alpha: float) -> int:
    """Smallest cutoff the scan accepts: each firing detector sees amplitude ``alpha/sqrt(2)``."""
    return photon_cutoff(alpha**2 / 2.0)


def bell_state(alpha: float) -> SuperposedState:
    """``|00> + |alpha alpha>`` made the optical way: ``|0> + |sqrt(2) alpha>`` and vacuum on a 50:50 splitter."""
    _check_amplitude(alpha)
    source = tensor(cat_state(source_alpha(alpha)), SuperposedState.vacuum(1))
    return normalize(apply_beam_splitter(source, 0, 1, BeamSplitterParams.bell_preparation()))


def teleporter_pre_detection(input_state: SuperposedState, alpha: float) -> SuperposedState:
    """Six-mode state just before the photon counters.

    Each input qubit meets one half of its own Bell pair on a ``BS(pi/4, pi)`` splitter; the sum port is then
    displaced by ``-alpha/sqrt(2)``. Modes come out as
    ``[sum 1, difference 1, sum 2, difference 2, out 1, out 2]``.
    """
    if input_state.modes != 2:
        raise ModeMismatchError(f"The teleporter takes a 2-mode input, got {input_state.modes} modes")
    bell = bell_state(alpha)
    # [in 1, in 2, bell 1a, bell 1b, bell 2a, bell 2b] -> [in 1, bell 1a, in 2, bell 2a, bell 1b, bell 2b]
    state = permute_modes(tensor(tensor(input_state, bell), bell), [0, 2, 1, 4, 3, 5])
    detection = BeamSplitterParams.detection()
    state = apply_beam_splitter(state, 0, 1, detection)
    state = apply_beam_splitter(state, 2, 3, detection)
    shift = -alpha / np.sqrt(2.0)
    state = apply_displacement(state, 0, shift)
    return apply_displacement(state, 2, shift)


def detect(state6: SuperposedState, pattern: Sequence[int]) -> Tuple[float, Optional[SuperposedState]]:
    """Photon counting on the four detector modes.

    :return: The pattern's probability and the normalized 2-mode output, or ``(0.0, None)`` when the pattern
        cannot occur.
    """
    if state6.modes != 6:
        raise ModeMismatchError(f"detect expects the 6-mode teleporter state, got {state6.modes} modes")
    residue = state6
    for n in pattern:
        residue = fock_project(residue, 0, int(n))
    prob = norm2(residue)
    if prob <= DEFAULT_TOLERANCES.ZERO_NORM:
        return 0.0, None
    return prob, residue.with_coeffs(residue.coeffs / np.sqrt(prob))


def _ket_index(alphas: np.ndarray, alpha: float) -> np.ndarray:
    """Index ``2 b1 + b2`` of the nearest ``{0, alpha}`` ket for each row of 2-mode amplitudes."""
    bits = (np.abs(alphas - alpha) < np.abs(alphas)).astype(np.int64)
    return 2 * bits[:, 0] + bits[:, 1]


def _ket_basis(alpha: float) -> Tuple[np.ndarray, np.ndarray]:
    """Gram matrix of ``|00>, |0a>, |a0>, |aa>`` and the normalized ideal CSIGN state in that basis."""
    kets = alpha * np.array([[0, 0], [0, 1], [1, 0], [1, 1]], dtype=np.complex128)
    gram = np.exp(log_gram(kets, kets))
    ideal = np.array([1.0, 1.0, 1.0, -1.0], dtype=np.complex128)
    ideal /= np.sqrt(np.real(ideal.conj() @ gram @ ideal))
    return gram, ideal


def _corrected_fidelities(ket_coeffs: np.ndarray, alpha: float) -> np.ndarray:
    """Fidelity with the ideal state after each correction: shape ``(records, 4)``."""
    gram, ideal = _ket_basis(alpha)
    corrected = ket_coeffs[:, None, :] * _CORRECTION_SIGNS[None, :, :]
    overlap = corrected @ (gram.T @ ideal.conj())
    norms = np.real(np.einsum("rgi,ij,rgj->rg", corrected.conj(), gram, corrected))
    return np.abs(overlap) ** 2 / norms


def _phase_factors(phases: np.ndarray) -> np.ndarray:
    """Per-ket factors ``exp(i (b1 phi1 + b2 phi2))`` for phases of shape ``(records, 2)``."""
    return np.exp(1j * (phases @ _BRANCH_BITS.T))


def _frame_fidelity(ket_coeffs: np.ndarray, phases: np.ndarray, gram: np.ndarray, target: np.ndarray) -> np.ndarray:
    rotated = ket_coeffs * _phase_factors(phases)
    norms = np.real(np.einsum("ri,ij,rj->r", rotated.conj(), gram, rotated))
    return np.abs(rotated @ target) ** 2 / norms


def _best_phase(
    ket_coeffs: np.ndarray, phases: np.ndarray, qubit: int, gram: np.ndarray, target: np.ndarray
) -> np.ndarray:
    """Exact maximizer over one qubit's phase with the other held fixed.

    With ``a`` the kets where the qubit sits on vacuum and ``b`` those on ``|alpha>``, the fidelity is the ratio
    ``(A1 + Re(B1 e^{i phi})) / (A2 + Re(B2 e^{i phi}))``, whose two stationary points solve
    ``|w| sin(psi - phi) = K``; the better of the two is returned.
    """
    held = phases.copy()
    held[:, qubit] = 0.0
    rotated = ket_coeffs * _phase_factors(held)
    on_alpha = _BRANCH_BITS[:, qubit].astype(bool)
    a = np.where(on_alpha, 0.0, rotated)
    b = np.where(on_alpha, rotated, 0.0)
    x, y = a @ target, b @ target
    a1 = np.abs(x) ** 2 + np.abs(y) ** 2
    b1 = 2.0 * np.conj(x) * y
    a2 = np.real(np.einsum("ri,ij,rj->r", a.conj(), gram, a) + np.einsum("ri,ij,rj->r", b.conj(), gram, b))
    b2 = 2.0 * np.einsum("ri,ij,rj->r", a.conj(), gram, b)

    # Re(B e^{i phi}) = p . (cos phi, sin phi) with p = (Re B, -Im B)
    p1, p2, q1, q2 = b1.real, -b1.imag, b2.real, -b2.imag
    w1, w2 = a2 * p1 - a1 * q1, a2 * p2 - a1 * q2
    radius = np.hypot(w1, w2)
    ratio = np.divide(p1 * q2 - p2 * q1, radius, out=np.zeros_like(radius), where=radius > 0)
    shift = np.arcsin(np.clip(ratio, -1.0, 1.0))
    psi = np.arctan2(w2, w1)
    candidates = np.stack([psi - shift, psi - np.pi + shift], axis=1)
    waves = np.exp(1j * candidates)
    values = (a1[:, None] + np.real(b1[:, None] * waves)) / (a2[:, None] + np.real(b2[:, None] * waves))
    return candidates[np.arange(len(candidates)), np.argmax(values, axis=1)]


def _correction_frame(ket_coeffs: np.ndarray, alpha: float, frame: str) -> Tuple[np.ndarray, np.ndarray]:
    """Best correction per record.

    :return: ``(phases, fidelity)`` with phases of shape ``(records, 2)``; the Pauli frame only uses ``0`` and ``pi``
    """
    if frame not in FRAMES:
        raise ValueError(f"Unknown correction frame '{frame}', expected one of {FRAMES}")
    pauli = _corrected_fidelities(ket_coeffs, alpha)
    best = np.argmax(pauli, axis=1)
    phases = _PAULI_PHASES[best]
    fidelity = pauli[np.arange(len(best)), best]
    if frame == "pauli" or len(best) == 0:
        return phases, fidelity

    gram, ideal = _ket_basis(alpha)
    target = gram.T @ ideal.conj()
    for sweep in range(PHASE_FRAME_SWEEPS):
        improved = np.zeros(len(best), dtype=bool)
        for qubit in (0, 1):
            candidate = phases.copy()
            candidate[:, qubit] = _best_phase(ket_coeffs, phases, qubit, gram, target)
            value = _frame_fidelity(ket_coeffs, candidate, gram, target)
            better = value > fidelity + DEFAULT_TOLERANCES.FRAME_GAIN
            phases[better], fidelity[better] = candidate[better], value[better]
            improved |= better
        if not improved.any():
            logging.debug(f"phase frame settled after {sweep + 1} sweeps for {len(best)} records")
            break
    return np.mod(phases, 2.0 * np.pi), fidelity


def _nearest_correction(phases: np.ndarray) -> np.ndarray:
    """Member of ``{1, Z1, Z2, Z1Z2}`` nearest each pair of frame phases."""
    flips = np.mod(np.round(np.mod(phases, 2.0 * np.pi) / np.pi), 2).astype(np.int64)
    return flips[:, 0] + 2 * flips[:, 1]


def _to_ket_coeffs(coeffs: np.ndarray, alphas: np.ndarray, alpha: float) -> np.ndarray:
    onehot = np.zeros((alphas.shape[0], 4))
    onehot[np.arange(alphas.shape[0]), _ket_index(alphas, alpha)] = 1.0
    return coeffs @ onehot


def correct(out: SuperposedState, alpha: float, frame: str = "phase") -> Correction:
    """Apply the local correction that maximizes fidelity with the ideal CSIGN state.

    The correction is picked by the fidelity it reaches on this output, not looked up from the detection
    pattern. ``frame="pauli"`` searches ``{1, Z1, Z2, Z1Z2}``, where ``Z`` flips the sign of the ``|alpha>`` branch
    of one output mode, with ties going to the earlier member. ``frame="phase"`` (the default) starts from that
    member and then turns each mode's ``|alpha>`` branch by a free phase ``exp(i phi)``, which removes the
    photon-number dependent local phase the ballistic gate leaves on the teleported branches. The reported
    ``correction_id`` is then the Pauli member nearest the phases.

    :raises ModeMismatchError: when ``out`` is not a 2-mode state
    :raises ValueError: for an unknown frame
    """
    if out.modes != 2:
        raise ModeMismatchError(f"correct expects a 2-mode output, got {out.modes} modes")
    ket_index = _ket_index(out.alphas, alpha)
    ket_coeffs = _to_ket_coeffs(out.coeffs, out.alphas, alpha)[None, :]
    raw = float(_corrected_fidelities(ket_coeffs, alpha)[0, 0])
    phases, fidelities = _correction_frame(ket_coeffs, alpha, frame)
    state = out.with_coeffs(out.coeffs * _phase_factors(phases)[0, ket_index])
    return Correction(
        normalize(state),
        int(_nearest_correction(phases)[0]),
        raw,
        float(fidelities[0]),
        (float(phases[0, 0]), float(phases[0, 1])),
    )


def _pair_patterns(first: np.ndarray, second: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Detector-pair counts worth keeping and their joint amplitudes per term.

    :return: ``(counts, amplitudes)`` with counts of shape ``(pairs, 2)`` in lexicographic order and amplitudes of
        shape ``(pairs, terms)``
    """
    weight = np.max(np.abs(first)[:, :, None] ** 2 * np.abs(second)[:, None, :] ** 2, axis=0)
    n_first, n_second = np.nonzero(weight >= DEFAULT_TOLERANCES.PAIR_WEIGHT_FLOOR)
    amplitudes = first[:, n_first].T * second[:, n_second].T
    return np.stack([n_first, n_second], axis=1), amplitudes


def teleporter_input(alpha: float, input: str = "ballistic") -> SuperposedState:
    if input == "ballistic":
        return build_ballistic(TWO_QUBIT_GRAPH, alpha)
    if input == "ideal":
        return build_ideal(TWO_QUBIT_GRAPH, alpha)
    raise ValueError(f"Unknown teleporter input '{input}', expected one of {INPUTS}")


def scan_outcomes(
    alpha: float,
    cutoff: Optional[int] = None,
    input: str = "ballistic",
    min_prob: Optional[float] = None,
    frame: str = "phase",
) -> OutcomeTable:
    """Probability and corrected fidelity of every detection pattern that carries weight.

    The joint probability factorizes over the two detector pairs: with ``A`` and ``B`` the per-term amplitudes of
    the first and second pair and ``W = conj(c_t) c_u <out_t|out_u>``, ``P(a, b) = sum_tu conj(A_at) A_au W_tu
    conj(B_bt) B_bu``, which is one matrix product over the flattened term pairs.

    :param alpha: Logical amplitude
    :param cutoff: Photon-number cutoff per detector, at least :func:`scan_cutoff`
    :param input: ``"ballistic"`` (beam-splitter CSIGN output) or ``"ideal"``
    :param min_prob: Records at or below this probability are dropped (their mass still counts as scanned)
    :param frame: ``"phase"`` or ``"pauli"`` correction search, see :func:`correct`
    :raises CutoffTooSmallError: when the unscanned probability exceeds the completeness tolerance
    """
    _check_amplitude(alpha)
    if frame not in FRAMES:
        raise ValueError(f"Unknown correction frame '{frame}', expected one of {FRAMES}")
    cutoff = scan_cutoff(alpha) if cutoff is None else int(cutoff)
    min_prob = DEFAULT_TOLERANCES.RECORD_PROB if min_prob is None else float(min_prob)
    state = teleporter_pre_detection(teleporter_input(alpha, input), alpha)
    logging.debug(f"scan_outcomes: alpha={alpha} cutoff={cutoff} input={input} terms={len(state)}")

    tables = [fock_amplitudes(state.alphas[:, mode], 0.0, cutoff) for mode in range(4)]
    counts_12, amps_12 = _pair_patterns(tables[0], tables[1])
    counts_34, amps_34 = _pair_patterns(tables[2], tables[3])

    out_alphas = state.alphas[:, 4:]
    weights = np.conj(state.coeffs)[:, None] * state.coeffs[None, :] * np.exp(log_gram(out_alphas, out_alphas))
    left = (np.conj(amps_12)[:, :, None] * amps_12[:, None, :] * weights[None, :, :]).reshape(len(counts_12), -1)
    right = (np.conj(amps_34)[:, :, None] * amps_34[:, None, :]).reshape(len(counts_34), -1)
    joint = np.real(left @ right.T)

    tail = 1.0 - float(joint.sum())
    if tail > DEFAULT_TOLERANCES.COMPLETENESS_TAIL:
        raise CutoffTooSmallError(
            f"Cutoff {cutoff} leaves probability {tail:.3e} unscanned at alpha={alpha} "
            f"(tolerance {DEFAULT_TOLERANCES.COMPLETENESS_TAIL:.0e}); use at least {scan_cutoff(alpha)}"
        )

    rows, cols = np.nonzero(joint > min_prob)
    coeffs = state.coeffs[None, :] * amps_12[rows] * amps_34[cols]
    ket_coeffs = _to_ket_coeffs(coeffs, out_alphas, alpha)
    raw = _corrected_fidelities(ket_coeffs, alpha)[:, 0]
    phases, fidelities = _correction_frame(ket_coeffs, alpha, frame)
    logging.debug(
        f"scan_outcomes: {len(counts_12)}x{len(counts_34)} pair patterns, {len(rows)} records, tail={tail:.3e}"
    )
    return OutcomeTable(
        alpha=float(alpha),
        cutoff=cutoff,
        patterns=np.hstack([counts_12[rows], counts_34[cols]]).astype(np.int64),
        prob=joint[rows, cols],
        fidelity_raw=raw,
        fidelity_corrected=fidelities,
        correction_id=_nearest_correction(phases),
        tail=tail,
        input=input,
        phases=phases,
        frame=frame,
    )


def _selection_mask(table: OutcomeTable, selection) -> np.ndarray:
    if selection is None:
        return np.ones(len(table), dtype=bool)
    if isinstance(selection, np.ndarray):
        if selection.dtype == bool:
            return selection
        mask = np.zeros(len(table), dtype=bool)
        mask[selection] = True
        return mask
    wanted = {tuple(int(n) for n in pattern) for pattern in selection}
    return np.array([tuple(int(n) for n in row) in wanted for row in table.patterns], dtype=bool)


def average_fidelity(table: OutcomeTable, selection=None) -> Tuple[float, float]:
    """Probability-weighted mean corrected fidelity ``F_av`` and total probability ``P_det`` of an accepted set.

    :param selection: ``None`` for every record, a boolean mask, record indices, or an iterable of patterns
    :raises EmptyAcceptanceSetError: when the accepted set has no probability
    """
    mask = _selection_mask(table, selection)
    p_det = float(table.prob[mask].sum())
    if not mask.any() or p_det <= 0:
        raise EmptyAcceptanceSetError("The accepted pattern set is empty or has zero probability")
    f_av = float(table.prob[mask] @ table.fidelity_corrected[mask] / p_det)
    return f_av, p_det


def greedy_prefixes(table: OutcomeTable) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Cumulative ``(F_av, P_det)`` of every greedy prefix, with the record order used.

    :return: ``(f_av, p_det, order)``; entry ``k`` of the first two describes the first ``k + 1`` records
    """
    if len(table) == 0:
        raise EmptyAcceptanceSetError("No records to accept")
    order = table.greedy_order()
    p_det = np.cumsum(table.prob[order])
    f_av = np.cumsum(table.prob[order] * table.fidelity_corrected[order]) / p_det
    return f_av, p_det, order


def success_probability(table: OutcomeTable, target: float = 0.99) -> Tuple[float, float]:
    """``P_det`` and ``F_av`` of the largest greedy prefix whose ``F_av`` exceeds ``target``; ``(0, nan)`` if none."""
    f_av, p_det, _ = greedy_prefixes(table)
    accepted = np.nonzero(f_av > target)[0]
    if len(accepted) == 0:
        return 0.0, float("nan")
    last = accepted[-1]
    return float(p_det[last]), float(f_av[last])


def pattern_family(pattern: Sequence[int]) -> Optional[str]:
    """Which of the four decodable families a pattern belongs to, or None.

    A detector pair reads as a sum-port click when its difference port is dark (including the all-dark pair)
    and as a difference-port click when only the sum port is dark.
    """
    ports = []
    for n_sum, n_diff in ((pattern[0], pattern[1]), (pattern[2], pattern[3])):
        if n_diff == 0:
            ports.append("sum")
        elif n_sum == 0:
            ports.append("diff")
        else:
            return None
    return _FAMILY_BY_PORTS[tuple(ports)]


def family_mass(table: OutcomeTable) -> Dict[str, float]:
    """Probability carried by each family, plus ``"other"`` for patterns outside all four."""
    mass = {family: 0.0 for family in FAMILIES}
    mass["other"] = 0.0
    for row, prob in zip(table.patterns, table.prob):
        mass[pattern_family(row) or "other"] += float(prob)
    return mass


def pattern_slice(table: OutcomeTable, kind: str) -> np.ndarray:
    """Rows ``(n_a, n_b, prob, fidelity)`` of the ``{n_a, n_b, n_a, n_b}`` or ``{n_a, 0, 0, n_b}`` slice."""
    p = table.patterns
    if kind == "nanbnanb":
        mask = (p[:, 0] == p[:, 2]) & (p[:, 1] == p[:, 3])
        n_a, n_b = p[mask, 0], p[mask, 1]
    elif kind == "na00nb":
        mask = (p[:, 1] == 0) & (p[:, 2] == 0)
        n_a, n_b = p[mask, 0], p[mask, 3]
    else:
        raise ValueError(f"Unknown slice '{kind}', expected one of {SLICES}")
    return np.column_stack([n_a, n_b, table.prob[mask], table.fidelity_corrected[mask]])


def max_fidelity_curve(alphas: Iterable[float], input: str = "ballistic") -> List[Dict[str, float]]:
    rows = []
    for alpha in alphas:
        table = scan_outcomes(alpha, input=input)
        rows.append({"alpha": float(alpha), "source_alpha": source_alpha(alpha), "max_fidelity": table.max_fidelity})
    return rows


def success_probability_curve(
    alphas: Iterable[float], target: float = 0.99, input: str = "ballistic"
) -> List[Dict[str, float]]:
    """Success probability at ``F_av > target`` per amplitude, next to the ballistic CSIGN fidelity."""
    rows = []
    for alpha in alphas:
        p_det, f_av = success_probability(scan_outcomes(alpha, input=input), target)
        rows.append(
            {
                "alpha": float(alpha),
                "source_alpha": source_alpha(alpha),
                "p_det": p_det,
                "f_av": f_av,
                "ballistic_fidelity": cluster_fidelity(TWO_QUBIT_GRAPH, alpha),
            }
        )
    return rows
