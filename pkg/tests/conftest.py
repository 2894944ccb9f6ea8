"""Shared helpers: reproducible RNGs and random quantum objects."""

import numpy as np
import pytest

from measurement_coherence import Effect, Observable, QState


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260810)


def random_density(rng: np.random.Generator, dim: int = 2) -> QState:
    """Random full-rank density matrix (Ginibre construction)."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    mat = g @ g.conj().T
    return QState(mat / np.trace(mat).real)


def random_pure(rng: np.random.Generator, dim: int = 2) -> QState:
    vec = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    vec /= np.linalg.norm(vec)
    return QState(np.outer(vec, vec.conj()))


def diagonal_povm(rng: np.random.Generator, dim: int = 2) -> Observable:
    """Random unsharp two-outcome POVM that is diagonal in the H/V basis."""
    diag = rng.uniform(0.05, 0.95, size=dim)
    first = Effect(np.diag(diag).astype(complex))
    second = Effect(np.eye(dim) - np.diag(diag))
    return Observable(((-1.0, first), (+1.0, second)))
