"""Hilbert-space primitives on the cyclic group Z_d.

States are length-d complex vectors indexed by l = 0..d-1; all index
arithmetic is modulo d.  The discrete Fourier transform is unitary
(1/sqrt(d) normalization) and is realized as an explicit dense matrix so
the normalization stays visible and testable.  Phase exponents are always
reduced in integer arithmetic before the complex exponential is formed,
which keeps identities exact to machine precision even for large indices.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "as_state",
    "inner",
    "norm",
    "kronecker_basis",
    "fourier_basis",
    "dft_matrix",
    "dft",
    "idft",
    "translate",
    "modulate",
    "phase_table",
]


def as_state(values, d: int | None = None) -> np.ndarray:
    """Validate ``values`` as a state on Z_d and return it as complex128.

    Parameters
    ----------
    values : array_like
        One-dimensional complex sequence.
    d : int, optional
        Expected dimension; a mismatch raises ``ValueError``.
    """
    v = np.asarray(values, dtype=complex)
    if v.ndim != 1:
        raise ValueError(f"state must be one-dimensional, got shape {v.shape}")
    if v.shape[0] < 1:
        raise ValueError("state must have positive length")
    if d is not None and v.shape[0] != d:
        raise ValueError(f"dimension mismatch: expected d={d}, got {v.shape[0]}")
    return v


def inner(a, b) -> complex:
    """Scalar product sum_l conj(a(l)) b(l), conjugate-linear in ``a``."""
    a = as_state(a)
    b = as_state(b, d=a.shape[0])
    return complex(np.vdot(a, b))


def norm(a) -> float:
    """Euclidean norm of a state."""
    return float(np.linalg.norm(as_state(a)))


def kronecker_basis(d: int, k: int) -> np.ndarray:
    """Position basis vector delta_k on Z_d.

    ``k`` outside [0, d) is rejected rather than silently reduced.
    """
    if not 0 <= k < d:
        raise ValueError(f"basis label k={k} out of range [0, {d})")
    v = np.zeros(d, dtype=complex)
    v[k] = 1.0
    return v


def fourier_basis(d: int, k: int) -> np.ndarray:
    """Fourier exponential l -> exp(2i pi k l / d) / sqrt(d).

    ``k`` outside [0, d) is rejected rather than silently reduced.
    """
    if not 0 <= k < d:
        raise ValueError(f"basis label k={k} out of range [0, {d})")
    ls = np.arange(d)
    return np.exp(2j * np.pi * ((k * ls) % d) / d) / np.sqrt(d)


def phase_table(d: int, numerators, denominator_scale: int = 1) -> np.ndarray:
    """exp(2i pi * numerators / (d * denominator_scale)) with reduced exponents.

    ``numerators`` is an integer array; the reduction modulo
    d * denominator_scale happens in exact integer arithmetic.
    """
    num = np.asarray(numerators)
    modulus = d * denominator_scale
    return np.exp(2j * np.pi * (num % modulus) / modulus)


@lru_cache(maxsize=32)
def dft_matrix(d: int) -> np.ndarray:
    """Unitary DFT matrix W[k, l] = exp(-2i pi k l / d) / sqrt(d).

    The returned array is cached and marked read-only.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    kl = np.outer(np.arange(d), np.arange(d))
    w = np.exp(-2j * np.pi * (kl % d) / d) / np.sqrt(d)
    w.flags.writeable = False
    return w


def dft(phi) -> np.ndarray:
    """Unitary Fourier transform, k -> (1/sqrt(d)) sum_l exp(-2i pi k l/d) phi(l)."""
    phi = as_state(phi)
    return dft_matrix(phi.shape[0]) @ phi


def idft(phi_hat) -> np.ndarray:
    """Inverse of :func:`dft`; kernel exp(+2i pi k l / d) / sqrt(d)."""
    phi_hat = as_state(phi_hat)
    return dft_matrix(phi_hat.shape[0]).conj() @ phi_hat


def translate(phi, n0: int) -> np.ndarray:
    """Cyclic shift, l -> phi(l - n0 mod d).  ``n0`` is reduced mod d."""
    phi = as_state(phi)
    return np.roll(phi, int(n0) % phi.shape[0])


def modulate(phi, k0: int) -> np.ndarray:
    """Pointwise phase l -> exp(2i pi k0 l / d) phi(l).  ``k0`` is reduced mod d."""
    phi = as_state(phi)
    d = phi.shape[0]
    ls = np.arange(d)
    return phase_table(d, (int(k0) % d) * ls) * phi
