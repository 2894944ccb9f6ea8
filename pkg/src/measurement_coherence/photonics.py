"""Numerical model of the two-photon polarization experiment.

The setup couples a signal photon to an ancillary meter photon through a
probabilistic controlled-sign gate and certifies measurement coherence
from coincidence counts:

* State preparation: a half-wave plate at angle alpha turns H-polarized
  light into cos(2a)|H> + sin(2a)|V>; mixing the +alpha and -alpha
  settings with weights w+ and w- dials the off-diagonal coherence.
* Interaction: a beam splitter with polarization-dependent intensity
  transmittivities (T_H, T_V).  Only the V components of both photons
  interfere on it; retaining coincidences (one photon per output arm)
  leaves the two-V amplitude t_v^2 - r_v^2, a pi phase flip at the ideal
  T_V = 1/3.  One compensating splitter per arm, rotated by 90 degrees
  (transmittivities swapped), balances the polarization-dependent loss;
  after it all no-interference amplitudes are equal and the post-selected
  map is a controlled-sign gate at the ideal settings.
* Partial distinguishability: with two-photon interference visibility v
  the post-selected output is the convex mixture of the interfering map
  and the fully distinguishable one, where the transmit-transmit and
  reflect-reflect contributions to the two-V coincidence add
  incoherently.  v = 1 reproduces textbook interference, v = 0 none.
* Readout: the meter is injected as |H> (gate off: no coupling) or |+>
  (gate on) and is never analyzed, so discarding it realizes the
  measure-and-forget channel on the signal.  The signal is analyzed by a
  half-wave plate at a quarter of the analysis angle followed by a
  polarizing splitter; counts per output port are Poissonian.

Basis ordering for two-photon operators is signal-first:
(HH, HV, VH, VV).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import OutcomeDistribution
from .qubit import QState

UNPERTURBED = "unperturbed"  # meter |H>, gate inactive
PERTURBED = "perturbed"  # meter |+>, gate active

SUCCESS_FLOOR = 1e-14


class PostSelectionError(ValueError):
    """Coincidence post-selection has (numerically) zero success probability."""


class EstimationError(ValueError):
    """Count record cannot support the requested estimate."""


@dataclass(frozen=True)
class PrepConfig:
    """Signal preparation: wave-plate angle, mixing weight, optional phase.

    The prepared state has V population p = sin^2(2*alpha) and coherence
    gamma = w_plus - (1 - w_plus).
    """

    alpha_deg: float
    w_plus: float = 1.0
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.w_plus <= 1.0:
            raise ValueError(f"mixing weight w_plus={self.w_plus} outside [0, 1]")

    @property
    def p(self) -> float:
        return math.sin(2.0 * math.radians(self.alpha_deg)) ** 2

    @property
    def gamma(self) -> float:
        return 2.0 * self.w_plus - 1.0


@dataclass(frozen=True)
class GateParams:
    """Interaction-splitter intensity transmittivities and HOM visibility."""

    t_h: float = 1.0
    t_v: float = 1.0 / 3.0
    visibility: float = 1.0

    def __post_init__(self):
        for name in ("t_h", "t_v", "visibility"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name}={value} outside [0, 1]")


# Measured splitter values; the ideal gate is the GateParams default.
MEASURED_GATE = GateParams(t_h=0.985, t_v=0.324, visibility=1.0)


@dataclass(frozen=True)
class CountRecord:
    """Poisson coincidence counts for one analyzer setting."""

    values: tuple[float, ...]
    counts: np.ndarray
    mean_flux: float
    theta: float | None = None
    mode: str | None = None

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if np.any(counts < 0):
            raise ValueError("counts must be nonnegative")
        if counts.shape != (len(self.values),):
            raise ValueError("one count per outcome value required")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "counts", counts)

    def total(self) -> int:
        return int(self.counts.sum())


def hwp_jones(angle: float) -> np.ndarray:
    """Jones matrix of a half-wave plate with fast axis at `angle` (radians)."""
    c = math.cos(2.0 * angle)
    s = math.sin(2.0 * angle)
    return np.array([[c, s], [s, -c]], dtype=np.complex128)


def prepare_signal(cfg: PrepConfig) -> QState:
    """Mixed signal state from the +-alpha wave-plate settings.

    Equals the qubit family state with p = sin^2(2*alpha) and
    gamma = w_plus - w_minus.
    """
    alpha = math.radians(cfg.alpha_deg)
    phase = np.exp(1j * cfg.phi)
    psi_plus = hwp_jones(alpha) @ np.array([1.0, 0.0])
    psi_minus = hwp_jones(-alpha) @ np.array([1.0, 0.0])
    psi_plus[1] *= phase
    psi_minus[1] *= phase
    matrix = cfg.w_plus * np.outer(psi_plus, psi_plus.conj()) + (
        1.0 - cfg.w_plus
    ) * np.outer(psi_minus, psi_minus.conj())
    return QState(matrix)


def _gate_kraus_branches(params: GateParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Diagonal coincidence amplitudes of the three post-selected branches.

    Returns (interfering, transmit-only, reflect-reflect) amplitude
    vectors over the (HH, HV, VH, VV) basis.  Per-arm compensators
    multiply every H amplitude by sqrt(T_V) and every V amplitude by
    sqrt(T_H), which makes the three single-transmission products equal.
    """
    amp_th = math.sqrt(params.t_h)
    amp_tv = math.sqrt(params.t_v)
    amp_rv = math.sqrt(1.0 - params.t_v)
    comp_h = amp_tv
    comp_v = amp_th

    transmit = np.array(
        [
            amp_th * amp_th * comp_h * comp_h,
            amp_th * amp_tv * comp_h * comp_v,
            amp_tv * amp_th * comp_v * comp_h,
            amp_tv * amp_tv * comp_v * comp_v,
        ]
    )
    reflect = np.array([0.0, 0.0, 0.0, amp_rv * amp_rv * comp_v * comp_v])
    interfering = transmit - reflect  # two-V reflection carries the pi shift
    return interfering, transmit, reflect


def gate_channel(joint_in: QState, params: GateParams) -> tuple[QState, float]:
    """Coincidence-post-selected action of the gate on a two-photon state.

    Applies the visibility-weighted mixture of the interfering and
    distinguishable amplitude maps, renormalizes, and returns the output
    state with the pre-normalization trace (the success probability).
    """
    if joint_in.dim != 4:
        raise ValueError("gate acts on a two-photon (4x4) state, signal first")
    interfering, transmit, reflect = _gate_kraus_branches(params)
    rho = joint_in.matrix
    v = params.visibility

    def sandwich(amps: np.ndarray) -> np.ndarray:
        return (amps[:, None] * rho) * amps[None, :]

    out = v * sandwich(interfering) + (1.0 - v) * (
        sandwich(transmit) + sandwich(reflect)
    )
    success = float(np.trace(out).real)
    if success <= SUCCESS_FLOOR:
        raise PostSelectionError(
            f"coincidence success probability {success} vanishes"
        )
    return QState(out / success), success


_METER_H = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=np.complex128)
_METER_PLUS = np.full((2, 2), 0.5, dtype=np.complex128)


def _trace_out_meter(joint: np.ndarray) -> np.ndarray:
    return np.einsum("smtm->st", joint.reshape(2, 2, 2, 2))


def analyzer_distribution(signal: QState, theta: float) -> OutcomeDistribution:
    """Analyze the signal with a wave plate at theta/4 and a polarizing splitter.

    The plate's rotation sense is fixed so that the H output port carries
    the -1 outcome of the tilted observable y(theta); the probabilities
    then coincide with the Born rule for that observable.
    """
    plate = hwp_jones(-theta / 4.0)
    rotated = plate @ signal.matrix @ plate.conj().T
    return OutcomeDistribution(
        (-1.0, +1.0), np.array([rotated[0, 0].real, rotated[1, 1].real])
    )


def run_setting(
    cfg: PrepConfig, params: GateParams, theta: float, mode: str
) -> OutcomeDistribution:
    """Exact outcome distribution of one experimental configuration.

    mode selects the meter injection: UNPERTURBED (|H>, no coupling) or
    PERTURBED (|+>, gate active).  The meter is traced out unanalyzed and
    the signal is read out at analysis angle theta.
    """
    if mode == UNPERTURBED:
        meter = _METER_H
    elif mode == PERTURBED:
        meter = _METER_PLUS
    else:
        raise ValueError(f"unknown mode {mode!r}")
    signal = prepare_signal(cfg)
    joint = QState(np.kron(signal.matrix, meter))
    joint_out, _success = gate_channel(joint, params)
    return analyzer_distribution(QState(_trace_out_meter(joint_out.matrix)), theta)


def sample_counts(
    dist: OutcomeDistribution,
    mean_flux: float,
    seed: int,
    theta: float | None = None,
    mode: str | None = None,
) -> CountRecord:
    """Independent Poisson coincidence counts per outcome, mean flux * P(y).

    The seed fully determines the draw.
    """
    if mean_flux <= 0.0:
        raise ValueError(f"mean_flux={mean_flux} must be positive")
    rng = np.random.default_rng(seed)
    counts = rng.poisson(mean_flux * dist.probabilities)
    return CountRecord(dist.values, counts, mean_flux, theta=theta, mode=mode)


def _variance_estimate(record: CountRecord) -> tuple[float, float]:
    """Plug-in variance of a +-1 outcome record and its Poisson variance.

    With m = (n+ - n-)/N the estimate is 1 - m^2; first-order propagation
    of independent Poisson fluctuations (variance = observed count) gives
    Var = 16 m^2 n+ n- / N^3.
    """
    if set(record.values) != {-1.0, +1.0}:
        raise EstimationError(f"expected +-1 outcomes, got {record.values}")
    total = record.total()
    if total == 0:
        raise EstimationError("count record is empty")
    n_plus = float(record.counts[record.values.index(+1.0)])
    n_minus = float(record.counts[record.values.index(-1.0)])
    mean = (n_plus - n_minus) / total
    var_est = 1.0 - mean * mean
    var_of_est = 16.0 * mean * mean * n_plus * n_minus / float(total) ** 3
    return var_est, var_of_est


def estimate_delta_v(
    unperturbed: CountRecord, perturbed: CountRecord
) -> tuple[float, float]:
    """Empirical variance-law violation and its propagated standard error."""
    v_direct, var_direct = _variance_estimate(unperturbed)
    v_dephased, var_dephased = _variance_estimate(perturbed)
    return v_dephased - v_direct, math.sqrt(var_direct + var_dephased)
