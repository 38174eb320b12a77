"""Phase-space distributions and semi-classical portraits.

Husimi values are squared coherent-state overlaps weighted by 1/d and are
nonnegative with total mass equal to the squared state norm.  The Wigner
distribution arises from transporting the parity operator; it needs an
odd dimension (the construction divides by 2 modulo d), is real, and its
marginals reproduce the position and momentum probability profiles
exactly.  The portrait of an operator is its expectation against the
transported quantization operators, and portraits of quantized symbols
equal the symbol smoothed by the overlap distribution of the weight.
"""

from __future__ import annotations

import numpy as np

from .errors import ToleranceError
from .hilbert import as_state
from .gabor import gabor_transform
from .quantize import (
    Weight,
    adjoint_sign_table,
    quantization_operator,
    symplectic_dft,
    transported,
)

__all__ = [
    "parity_matrix",
    "husimi",
    "wigner",
    "wigner_via_parity",
    "wigner_half_argument",
    "realize_real",
    "portrait",
    "portrait_of_symbol",
    "overlap_distribution",
]


def realize_real(values: np.ndarray, tol: float = 1e-10, what: str = "map") -> np.ndarray:
    """Drop an imaginary part that is guaranteed to be numerical noise."""
    values = np.asarray(values)
    worst = float(np.abs(values.imag).max()) if np.iscomplexobj(values) else 0.0
    if worst > tol:
        raise ToleranceError(f"{what} has imaginary part {worst:.3e} above {tol:.1e}")
    return values.real.copy() if np.iscomplexobj(values) else values.copy()


def parity_matrix(d: int) -> np.ndarray:
    """Reversal operator (P psi)(l) = psi(-l mod d)."""
    p = np.zeros((d, d))
    p[np.arange(d), (-np.arange(d)) % d] = 1.0
    return p


def husimi(psi, window) -> np.ndarray:
    """H(m, n) = |<U(m,n) window, psi>|^2 / d; sums to ||psi||^2."""
    psi = as_state(psi)
    window = as_state(window, d=psi.shape[0])
    return (np.abs(gabor_transform(psi, window)) ** 2) / psi.shape[0]


def wigner(psi) -> np.ndarray:
    """Wigner distribution W[m, n] on the phase space, odd dimension only.

    Uses the integer-safe form
    W(m,n) = (1/d) sum_l e^{4 i pi m l / d} conj(psi(n+l)) psi(n-l),
    asserts reality, and returns a real array whose marginals are
    |psi(n)|^2 (over m) and |dft(psi)(m)|^2 (over n).
    """
    psi = as_state(psi)
    d = psi.shape[0]
    if d % 2 == 0:
        raise ValueError("Wigner via parity requires odd dimension")
    ls = np.arange(d)
    quad = np.exp(2j * np.pi * ((2 * np.outer(np.arange(d), ls)) % d) / d)  # [m, l]
    out = np.empty((d, d), dtype=complex)
    for n in range(d):
        prods = np.conj(psi[(n + ls) % d]) * psi[(n - ls) % d]
        out[:, n] = quad @ prods / d
    return realize_real(out, what="Wigner map")


def wigner_via_parity(psi) -> np.ndarray:
    """Cross-check path: W(m,n) = <psi, U(m,n) P U(m,n)^dag psi> / d.

    Built from the actual parity matrix and operator conjugation.
    """
    psi = as_state(psi)
    d = psi.shape[0]
    if d % 2 == 0:
        raise ValueError("Wigner via parity requires odd dimension")
    p = parity_matrix(d)
    out = np.empty((d, d), dtype=complex)
    for m in range(d):
        for n in range(d):
            out[m, n] = np.vdot(psi, transported(p, m, n) @ psi) / d
    return realize_real(out, what="Wigner map")


def wigner_half_argument(psi) -> np.ndarray:
    """Half-argument form using the modular inverse of 2 (odd d).

    W(m,n) = (1/d) sum_l e^{2 i pi m l / d} conj(psi(n + l/2)) psi(n - l/2)
    with l/2 read as ((d+1)/2) l mod d.
    """
    psi = as_state(psi)
    d = psi.shape[0]
    if d % 2 == 0:
        raise ValueError("half-argument form requires odd dimension")
    inv2 = (d + 1) // 2
    ls = np.arange(d)
    half = (inv2 * ls) % d
    quad = np.exp(2j * np.pi * ((np.outer(np.arange(d), ls)) % d) / d)
    out = np.empty((d, d), dtype=complex)
    for n in range(d):
        prods = np.conj(psi[(n + half) % d]) * psi[(n - half) % d]
        out[:, n] = quad @ prods / d
    return realize_real(out, what="Wigner map")


def portrait(op: np.ndarray, w: Weight) -> np.ndarray:
    """Phase-space portrait A(m, n) = Tr[op * D(m,n) M_w D(m,n)^dag]."""
    op = np.asarray(op, dtype=complex)
    d = w.d
    if op.shape != (d, d):
        raise ValueError(f"operator shape {op.shape} does not match weight d={d}")
    mw = quantization_operator(w)
    out = np.empty((d, d), dtype=complex)
    for m in range(d):
        for n in range(d):
            out[m, n] = np.sum(op * transported(mw, m, n).T)
    return out


def _overlap_map(w: Weight) -> np.ndarray:
    """Tr[M_w(m,n) M_w] in closed form, complex for asymmetric weights.

    Pairing each displacement with its adjoint partner gives
    (1/d) sum_q w(q) w(-q) c(q) e^{2 i pi (m q_n - q_m n) / d} with c the
    adjoint sign table; for weights satisfying the self-adjointness
    condition the product w(q) w(-q) c(q) is |w(q)|^2.
    """
    paired = w.values * np.roll(w.values[::-1, ::-1], 1, axis=(0, 1)) * adjoint_sign_table(w.d)
    return symplectic_dft(paired)


def overlap_distribution(w: Weight) -> np.ndarray:
    """D(m, n) = Tr[M_w(m,n) M_w], the smoothing distribution of the weight.

    With the 1/d-weighted counting measure on the phase space this is
    normalized: (1/d) sum_{m,n} D = 1.  It is real whenever M_w is
    self-adjoint (and for the unit weight at any d); for coherent-state
    weights pointwise nonnegativity is asserted.
    """
    dist = realize_real(_overlap_map(w), what="overlap distribution")
    if w.provenance == "coherent_state" and dist.min() < -1e-12:
        raise ToleranceError(
            f"coherent-state overlap distribution dips to {dist.min():.3e}")
    return dist


def portrait_of_symbol(f: np.ndarray, w: Weight) -> np.ndarray:
    """Smoothed symbol (1/d) sum_q f(p - q) Tr[M_w(q) M_w].

    Agrees with ``portrait(quantize(f, w), w)``; the unit symbol is a
    fixed point.
    """
    f = np.asarray(f, dtype=complex)
    d = w.d
    if f.shape != (d, d):
        raise ValueError(f"symbol shape {f.shape} does not match weight d={d}")
    dist = _overlap_map(w)
    out = np.zeros((d, d), dtype=complex)
    for m in range(d):
        for n in range(d):
            out += dist[m, n] * np.roll(f, (m, n), axis=(0, 1))
    return out / d
