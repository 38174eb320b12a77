"""Discrete Weyl-Heisenberg group and displacement operators on Z_d.

A group element is a triple (s, m, n) with real central parameter s and
modulation / translation indices m, n stored as canonical representatives
in [0, d).  The displacement operator combines modulation E_m and
translation T_n with a symmetrizing half phase,

    (U(m,n) psi)(l) = exp(-i pi m n / d) exp(2i pi m l / d) psi(l - n),

evaluated on the canonical representatives.  The half phase is only
d-periodic up to sign:

    U(m + d, n) = (-1)**n U(m, n),     U(m, n + d) = (-1)**m U(m, n),

so identities that move indices out of [0, d) acquire tracked signs.  The
helpers below (:func:`conjugate_sign`, :func:`compose_displacements`)
return those signs explicitly; tests assert the identities with the signs
included, which pins the convention unambiguously.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import as_state, dft_matrix, modulate, phase_table, translate

__all__ = [
    "GroupElement",
    "group_mul",
    "group_inv",
    "half_phase",
    "conjugate_sign",
    "wrap_sign_exponent",
    "rep_V",
    "displacement_apply",
    "displacement_matrix",
    "trace_displacement",
    "compose_displacements",
    "conjugation_phase",
]


@dataclass(frozen=True)
class GroupElement:
    """Element (s, m, n) of the discrete Weyl-Heisenberg group over Z_d.

    ``m`` and ``n`` are canonicalized to [0, d) at construction; the central
    parameter ``s`` is kept as given.
    """

    d: int
    s: float
    m: int
    n: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "m", int(self.m) % self.d)
        object.__setattr__(self, "n", int(self.n) % self.d)
        object.__setattr__(self, "s", float(self.s))


def wrap_sign_exponent(d: int, m_sum: int, n_sum: int) -> int:
    """Sign exponent picked up when reducing (m_sum, n_sum) into [0, d).

    For unreduced sums in [0, 2d), U(m_sum, n_sum) = (-1)**w U(m0, n0) with
    m0 = m_sum mod d, n0 = n_sum mod d and w the value returned here.
    """
    j, m0 = divmod(int(m_sum), d)
    k, n0 = divmod(int(n_sum), d)
    return (j * (n0 + k * d) + k * m0) % 2


def group_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group law on (s, m, n) triples.

    The central parameter receives the symplectic half term
    (a.m b.n - b.m a.n)/2 computed from the unreduced integer products,
    plus d/2 times the representative-wrap sign exponent.  The extra term
    keeps the map to operators a homomorphism (and makes a * inv(a) the
    literal neutral element) even though m, n are stored canonically.
    """
    if a.d != b.d:
        raise ValueError(f"dimension mismatch: {a.d} != {b.d}")
    d = a.d
    cross = (a.m * b.n - b.m * a.n) / 2.0
    w = wrap_sign_exponent(d, a.m + b.m, a.n + b.n)
    return GroupElement(d, a.s + b.s + cross + d * w / 2.0, a.m + b.m, a.n + b.n)


def group_inv(a: GroupElement) -> GroupElement:
    """Inverse (-s, -m mod d, -n mod d)."""
    return GroupElement(a.d, -a.s, -a.m, -a.n)


def half_phase(d: int, m: int, n: int) -> complex:
    """The symmetrizing factor exp(-i pi m n / d) on canonical representatives."""
    return complex(np.exp(-1j * np.pi * ((int(m) * int(n)) % (2 * d)) / d))


def conjugate_sign(d: int, m: int, n: int) -> int:
    """Sign relating the adjoint to negated indices.

    U(m, n)^dag = sign * U(-m mod d, -n mod d).  The sign is +1 whenever
    m = 0 or n = 0, and (-1)**(d + m + n) otherwise.
    """
    m %= d
    n %= d
    if m == 0 or n == 0:
        return 1
    return -1 if (d + m + n) % 2 else 1


def displacement_apply(psi, m: int, n: int) -> np.ndarray:
    """Apply the displacement U(m, n) to a state.

    Indices are reduced to canonical representatives first.
    """
    psi = as_state(psi)
    d = psi.shape[0]
    m %= d
    n %= d
    return half_phase(d, m, n) * modulate(translate(psi, n), m)


def displacement_matrix(d: int, m: int, n: int, basis: str = "kronecker") -> np.ndarray:
    """Matrix of U(m, n) in the position ("kronecker") or "fourier" basis.

    Position basis: support at rows k = k' + n mod d with entries
    exp(-i pi m n / d) exp(2i pi m k / d); this is the matrix of
    :func:`displacement_apply` and agrees with the commonly printed form
    exp(i pi m (k + k')/d) except on wrapped entries (k' + n >= d), where
    the canonical-index form of that expression is off by (-1)**m.

    Fourier basis: entries exp(i pi m n / d) exp(-2i pi k n / d) at rows
    k = k' + m mod d, exact on canonical indices.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    m %= d
    n %= d
    cols = np.arange(d)
    out = np.zeros((d, d), dtype=complex)
    if basis == "kronecker":
        rows = (cols + n) % d
        out[rows, cols] = half_phase(d, m, n) * phase_table(d, m * rows)
    elif basis == "fourier":
        rows = (cols + m) % d
        out[rows, cols] = np.conj(half_phase(d, m, n)) * phase_table(d, -n * rows)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return out


def rep_V(g: GroupElement, psi) -> np.ndarray:
    """Unitary representation (V(s,m,n) psi)(l) = e^{2 i pi s/d} (U(m,n) psi)(l)."""
    psi = as_state(psi, d=g.d)
    central = np.exp(2j * np.pi * (g.s % g.d) / g.d)
    return central * displacement_apply(psi, g.m, g.n)


def trace_displacement(d: int, m: int, n: int) -> complex:
    """Trace of U(m, n); equals d for (m, n) = (0, 0) and 0 otherwise."""
    return complex(np.trace(displacement_matrix(d, m, n)))


def compose_displacements(d: int, m: int, n: int, mp: int, np_: int):
    """Exact composition data for U(m,n) U(m',n') = phase * U(point).

    Returns ``(phase, (m0, n0))`` with the canonical target point.  The
    phase is exp(i pi (m n' - n m') / d) computed from unreduced integer
    products, times (-1)**w for the representative-wrap exponent w of the
    index sums; the extra sign is 1 whenever the sums stay inside [0, d).
    """
    m %= d
    n %= d
    mp %= d
    np_ %= d
    sym = (m * np_ - n * mp) % (2 * d)
    w = wrap_sign_exponent(d, m + mp, n + np_)
    phase = complex(np.exp(1j * np.pi * sym / d)) * (-1) ** w
    return phase, ((m + mp) % d, (n + np_) % d)


def conjugation_phase(d: int, m: int, n: int, mp: int, np_: int) -> complex:
    """Phase in U(m',n') U(m,n) U(m',n')^dag = phase * U(m,n).

    Full-period phase exp(-2 i pi (m n' - m' n) / d); exact on canonical
    representatives because conjugation cancels all half-phase wrap signs.
    """
    return complex(np.exp(-2j * np.pi * ((m * np_ - mp * n) % d) / d))


def fourier_conjugated(d: int, matrix: np.ndarray) -> np.ndarray:
    """Conjugate a position-basis operator into the Fourier basis."""
    w = dft_matrix(d)
    return w @ matrix @ w.conj().T


__all__.append("fourier_conjugated")
