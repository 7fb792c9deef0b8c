"""Shared fixtures: seeded random vertices in ST form."""

import numpy as np
import pytest

from qvertex.vertex import BoundaryPair, STForm, assemble_boundary


def random_hermitian(rng: np.random.Generator, r: int) -> np.ndarray:
    m = rng.normal(size=(r, r)) + 1j * rng.normal(size=(r, r))
    return (m + m.conj().T) / 2


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(m)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def random_form(rng):
    """Factory for a random ST form with n lines and r = rank(B)."""

    def make(n: int, r: int | None = None, perm: tuple[int, ...] | None = None) -> STForm:
        if r is None:
            r = int(rng.integers(0, n + 1))
        s = random_hermitian(rng, r)
        t = rng.normal(size=(r, n - r)) + 1j * rng.normal(size=(r, n - r))
        if perm is None:
            perm = tuple(range(n))
        return STForm(s, t, perm)

    return make


@pytest.fixture
def random_vertex(rng, random_form):
    """Factory for a random admissible vertex, lines shuffled and rows mixed by a unitary."""

    def make(n: int, r: int | None = None) -> BoundaryPair:
        form = random_form(n, r, tuple(int(i) for i in rng.permutation(n)))
        return assemble_boundary(form).left_multiply(random_unitary(rng, n))

    return make


@pytest.fixture
def unitary(rng):
    """Factory for a random n x n unitary."""

    def make(n: int) -> np.ndarray:
        return random_unitary(rng, n)

    return make


@pytest.fixture
def hermitian(rng):
    """Factory for a random r x r Hermitian matrix."""

    def make(r: int) -> np.ndarray:
        return random_hermitian(rng, r)

    return make
