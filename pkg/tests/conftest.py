import numpy as np
import pytest

from torus_quant import default_catalog, realize_fiducial, weight_from_operator

SEED = 20260810


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def random_state(rng, d, unit=False):
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    if unit:
        v /= np.linalg.norm(v)
    return v


def random_map(rng, d):
    return rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))


def hermitian_unit_trace(rng, d):
    """Random hermitian operator with trace exactly one."""
    h = random_map(rng, d)
    h = h + h.conj().T
    return h + (1.0 - np.trace(h)) / d * np.eye(d)


def random_symmetric_weight(rng, d):
    """Random weight whose quantization operator is hermitian by construction."""
    return weight_from_operator(hermitian_unit_trace(rng, d))


def catalog_windows(d):
    return [(spec.label(), realize_fiducial(spec, d)) for spec in default_catalog(d)]
