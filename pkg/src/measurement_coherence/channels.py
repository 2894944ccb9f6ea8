"""Sequential-measurement statistics and the outcome-discarding channel.

Measuring an observable and forgetting the result transforms the state by
the square-root (Lueders) instrument, rho -> sum_x sqrt(E_x) rho sqrt(E_x).
This module provides that channel, single-shot outcome distributions, the
joint distribution of two measurements performed in sequence, and a
witness for measurement operators that are not diagonal in a reference
basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qubit import (
    CONSTRUCTION_TOL,
    ROUNDOFF_TOL,
    Effect,
    Observable,
    QState,
    _check_same_dim,
    psd_sqrt,
)

PROBABILITY_FLOOR = 1e-14


class ZeroProbabilityError(ValueError):
    """Conditioning on an outcome of (numerically) zero probability."""


@dataclass(frozen=True, eq=False)
class OutcomeDistribution:
    """Probabilities over the real outcome values of one observable."""

    values: tuple[float, ...]
    probabilities: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probabilities, dtype=float)
        if np.min(probs) < -CONSTRUCTION_TOL:
            raise ValueError(f"negative probability {np.min(probs)}")
        probs = np.clip(probs, 0.0, None)
        if abs(float(np.sum(probs)) - 1.0) > ROUNDOFF_TOL:
            raise ValueError(f"probabilities sum to {np.sum(probs)}")
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "probabilities", probs)

    def probability_of(self, value: float) -> float:
        return float(self.probabilities[self.values.index(value)])

    def mean(self) -> float:
        return float(np.dot(self.values, self.probabilities))

    def variance(self) -> float:
        mean = self.mean()
        second = float(np.dot(np.square(self.values), self.probabilities))
        return max(second - mean * mean, 0.0)


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Table P(x, y) for a first measurement x followed by a second y."""

    x_values: tuple[float, ...]
    y_values: tuple[float, ...]
    table: np.ndarray  # shape (len(x_values), len(y_values))

    def __post_init__(self):
        table = np.asarray(self.table, dtype=float)
        if table.shape != (len(self.x_values), len(self.y_values)):
            raise ValueError(f"table shape {table.shape} does not match outcome lists")
        if np.min(table) < -CONSTRUCTION_TOL:
            raise ValueError(f"negative joint probability {np.min(table)}")
        table = np.clip(table, 0.0, None)
        if abs(float(np.sum(table)) - 1.0) > ROUNDOFF_TOL:
            raise ValueError(f"joint probabilities sum to {np.sum(table)}")
        object.__setattr__(self, "x_values", tuple(float(v) for v in self.x_values))
        object.__setattr__(self, "y_values", tuple(float(v) for v in self.y_values))
        object.__setattr__(self, "table", table)

    def x_marginal(self) -> OutcomeDistribution:
        return OutcomeDistribution(self.x_values, self.table.sum(axis=1))

    def y_marginal(self) -> OutcomeDistribution:
        return OutcomeDistribution(self.y_values, self.table.sum(axis=0))


def outcome_distribution(state: QState, obs: Observable) -> OutcomeDistribution:
    """Born-rule probabilities P(y) = tr(rho Pi_y)."""
    _check_same_dim(state, obs)
    probs = [np.trace(state.matrix @ eff.matrix).real for eff in obs.effects]
    return OutcomeDistribution(obs.values, np.array(probs))


def post_measurement_state(state: QState, effect: Effect) -> tuple[QState, float]:
    """State after observing one effect, together with its probability.

    Applies the square-root update sqrt(E) rho sqrt(E) / P.
    """
    _check_same_dim(state, effect)
    root = psd_sqrt(effect)
    unnormalized = root @ state.matrix @ root
    prob = float(np.trace(unnormalized).real)
    if prob <= PROBABILITY_FLOOR:
        raise ZeroProbabilityError(
            f"outcome probability {prob} is too small to condition on"
        )
    return QState(unnormalized / prob), prob


def luders_channel(state: QState, obs: Observable) -> QState:
    """Measure obs and discard the outcome: sum_x sqrt(E_x) rho sqrt(E_x).

    Trace-preserving by POVM completeness; no per-branch normalization is
    needed, so zero-probability outcomes contribute (vanishing) terms
    directly.
    """
    _check_same_dim(state, obs)
    out = np.zeros_like(state.matrix)
    for eff in obs.effects:
        root = psd_sqrt(eff)
        out += root @ state.matrix @ root
    return QState(out)


def is_incoherent(state: QState, obs: Observable) -> bool:
    """True when discarding an obs measurement leaves the state unchanged."""
    dephased = luders_channel(state, obs)
    return float(np.max(np.abs(dephased.matrix - state.matrix))) <= ROUNDOFF_TOL


def sequential_joint(
    state: QState, first: Observable, second: Observable
) -> JointDistribution:
    """Joint P(x, y) of measuring first, then second, on the same system.

    Each first outcome updates the state by the square-root instrument, so
    the y-marginal coincides with the Born probabilities of the
    outcome-discarded state luders_channel(state, first).
    """
    _check_same_dim(state, first)
    _check_same_dim(state, second)
    table = np.zeros((len(first.outcomes), len(second.outcomes)))
    for i, eff_x in enumerate(first.effects):
        root = psd_sqrt(eff_x)
        branch = root @ state.matrix @ root  # unnormalized conditional state
        for j, eff_y in enumerate(second.effects):
            table[i, j] = np.trace(branch @ eff_y.matrix).real
    return JointDistribution(first.values, second.values, table)


def measurement_coherence_witness(obs: Observable, basis: Observable) -> float:
    """Largest off-diagonal magnitude of obs effects in a sharp basis.

    Zero exactly when every effect of obs is diagonal in the basis, i.e.
    when obs admits a classical (incoherent-mixture) description relative
    to that reference measurement.
    """
    _check_same_dim(obs, basis)
    basis_matrix = basis.sharp_basis
    if basis_matrix is None:
        raise ValueError("witness basis must consist of rank-1 orthogonal projectors")
    off_mask = ~np.eye(obs.dim, dtype=bool)
    worst = 0.0
    for eff in obs.effects:
        in_basis = basis_matrix.conj().T @ eff.matrix @ basis_matrix
        worst = max(worst, float(np.max(np.abs(in_basis[off_mask]))))
    return worst
