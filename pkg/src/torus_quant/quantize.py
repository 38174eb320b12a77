"""Weights on the discrete phase space and the operators they generate.

A weight is a complex function w(m, n) on Z_d x Z_d with w(0, 0) = 1.  It
generates the unit-trace quantization operator

    M_w = (1/d) sum_{m,n} w(m, n) D(m, n),

where D is the displacement family used for phase-space sums.  For even d
this family is the plain half-phase displacement.  For odd d the half
phase is realized with the modular inverse of 2, i.e.

    D(m, n) = exp(-2 i pi m ((d+1)/2 n mod d) / d) E_m T_n,

which agrees with the half-phase operator for even n and differs by
(-1)**m for odd n.  This is the unique choice that makes the family
genuinely d-periodic in both indices (D(m,n)^dag = D(-m,-n) with no
stray signs), and it is what makes the unit weight produce exactly the
parity operator at odd d.  All sums over the phase space, including the
integral-kernel construction and weight retrieval by tracing, use the
same family, so construction and retrieval are exact mutual inverses.

Symbols f(m, n) are quantized by averaging against the transported
operators,

    A_f = (1/d) sum_{m,n} f(m, n) D(m,n) M_w D(m,n)^dag,

with an equivalent O(d^3) integral-kernel path used as the production
route; the direct sum is kept as an independent oracle.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .hilbert import as_state, dft, dft_matrix, idft
from .weyl import displacement_matrix

__all__ = [
    "Weight",
    "parity_weight",
    "coherent_state_weight",
    "sum_phase_table",
    "sum_displacement",
    "transported",
    "quantization_operator",
    "weight_from_operator",
    "symplectic_dft",
    "momentum_symbol",
    "position_symbol",
    "quantize",
    "quantize_momentum",
    "quantize_position",
    "covariance_defect",
    "PositivityReport",
    "positivity_report",
]

_WEIGHT_ORIGIN_TOL = 1e-10


@lru_cache(maxsize=32)
def sum_phase_table(d: int) -> np.ndarray:
    """Phase chi[m, n] of the displacement family used in phase-space sums.

    chi is exp(-i pi m n / d) on canonical representatives for even d; for
    odd d the exponent uses the modular half (d+1)/2 * n mod d, making the
    table d-periodic in both indices.
    """
    m = np.arange(d)[:, None]
    n = np.arange(d)[None, :]
    if d % 2:
        half_n = (n * ((d + 1) // 2)) % d
        tab = np.exp(-2j * np.pi * ((m * half_n) % d) / d)
    else:
        tab = np.exp(-1j * np.pi * ((m * n) % (2 * d)) / d)
    tab.flags.writeable = False
    return tab


def sum_displacement(d: int, m: int, n: int) -> np.ndarray:
    """Matrix of the d-periodic displacement D(m, n) (position basis)."""
    m %= d
    n %= d
    cols = np.arange(d)
    rows = (cols + n) % d
    out = np.zeros((d, d), dtype=complex)
    out[rows, cols] = sum_phase_table(d)[m, n] * np.exp(
        2j * np.pi * ((m * rows) % d) / d
    )
    return out


def _negated_indices(values: np.ndarray) -> np.ndarray:
    """Map g(m, n) -> g(-m mod d, -n mod d)."""
    return np.roll(values[::-1, ::-1], 1, axis=(0, 1))


@lru_cache(maxsize=32)
def adjoint_sign_table(d: int) -> np.ndarray:
    """Sign relating D(m,n)^dag to D(-m,-n) on canonical representatives.

    Identically one for odd d (the modular-half family is genuinely
    periodic); for even d the entries with both indices nonzero carry
    (-1)**(m+n).
    """
    if d % 2:
        table = np.ones((d, d))
    else:
        m = np.arange(d)[:, None]
        n = np.arange(d)[None, :]
        table = np.where((m == 0) | (n == 0), 1.0, (-1.0) ** ((m + n) % 2))
    table.flags.writeable = False
    return table


def transported(M: np.ndarray, m: int, n: int) -> np.ndarray:
    """Conjugated operator D(m,n) M D(m,n)^dag.

    Evaluated in closed form, entry (a, b) = exp(2 i pi m (a - b) / d) *
    M[(a - n) % d, (b - n) % d]; the overall displacement phase cancels,
    so the result is identical for every phase convention.
    """
    d = M.shape[0]
    idx = (np.arange(d) - n) % d
    ph = np.exp(2j * np.pi * (((m % d) * np.arange(d)) % d) / d)
    return M[np.ix_(idx, idx)] * np.outer(ph, ph.conj())


@dataclass(eq=False)
class Weight:
    """Weight function on the phase space with w(0, 0) = 1.

    Parameters
    ----------
    values : ndarray
        d x d complex array indexed [m, n].
    provenance : str
        One of "parity", "coherent_state", "custom".
    """

    values: np.ndarray
    provenance: str = "custom"

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] < 1:
            raise ValueError(f"weight must be a square array, got shape {v.shape}")
        if abs(v[0, 0] - 1.0) > _WEIGHT_ORIGIN_TOL:
            raise ValueError(
                f"weight origin value must be 1 (unit trace), got {v[0, 0]}"
            )
        if self.provenance not in ("parity", "coherent_state", "custom"):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        self.values = v

    @property
    def d(self) -> int:
        return self.values.shape[0]

    def symmetry_defect(self) -> float:
        """Deviation from the condition that makes M_w self-adjoint.

        The condition is conj(w(-m, -n)) = w(m, n) for odd d; for even d
        the entries with both indices nonzero carry an extra (-1)**(m+n)
        from reducing the adjoint's negated indices to canonical
        representatives.
        """
        w = self.values
        w_neg = _negated_indices(w)
        return float(np.abs(adjoint_sign_table(self.d) * np.conj(w_neg) - w).max())

    def is_symmetric(self, tol: float = 1e-10) -> bool:
        return self.symmetry_defect() <= tol


def parity_weight(d: int) -> Weight:
    """The unit weight w = 1; at odd d its operator is the parity operator."""
    return Weight(np.ones((d, d), dtype=complex), provenance="parity")


def coherent_state_weight(phi) -> Weight:
    """Weight retrieved from the rank-one projector onto ``phi``.

    w(m, n) = <D(m,n) phi, phi>; quantizing it back returns exactly
    |phi><phi|.
    """
    phi = as_state(phi)
    d = phi.shape[0]
    nrm = np.linalg.norm(phi)
    if abs(nrm - 1.0) > 1e-10:
        warnings.warn("coherent-state weight from a non-unit vector; normalizing")
        phi = phi / nrm
    w = np.empty((d, d), dtype=complex)
    for m in range(d):
        for n in range(d):
            w[m, n] = np.vdot(sum_displacement(d, m, n) @ phi, phi)
    return Weight(w, provenance="coherent_state")


def _unnormalized_idft_matrix(d: int) -> np.ndarray:
    # E[l, mu] = exp(+2 i pi l mu / d); reused by the kernel assemblers.
    return dft_matrix(d).conj() * np.sqrt(d)


def _kernel_operator(w_values: np.ndarray, factor: np.ndarray | None) -> np.ndarray:
    """Assemble sum_{m,n} c(m,n) D(m,n) / d from its integral kernel.

    c = w * factor (factor may be None for c = w).  For each translation
    offset nu the kernel places (1/d) sum_mu c(mu, nu) chi(mu, nu)
    e^{2 i pi mu l / d} at entries (l, l - nu).
    """
    d = w_values.shape[0]
    chi = sum_phase_table(d)
    c = w_values * chi if factor is None else w_values * factor * chi
    ematrix = _unnormalized_idft_matrix(d)
    cols_per_nu = ematrix @ c / d  # [l, nu]
    out = np.zeros((d, d), dtype=complex)
    rows = np.arange(d)
    for nu in range(d):
        out[rows, (rows - nu) % d] = cols_per_nu[:, nu]
    return out


def quantization_operator(w: Weight, method: str = "kernel") -> np.ndarray:
    """Operator M_w = (1/d) sum w(m,n) D(m,n), of unit trace.

    ``method`` selects the O(d^3) integral-kernel assembly ("kernel") or
    the direct sum over displacements ("direct", the oracle path); both
    agree to machine precision.
    """
    if method == "kernel":
        return _kernel_operator(w.values, None)
    if method == "direct":
        d = w.d
        out = np.zeros((d, d), dtype=complex)
        for m in range(d):
            for n in range(d):
                out += w.values[m, n] * sum_displacement(d, m, n)
        return out / d
    raise ValueError(f"unknown method {method!r}")


def weight_from_operator(M: np.ndarray, provenance: str = "custom") -> Weight:
    """Retrieve the weight of a unit-trace operator: w(m,n) = Tr[D(m,n)^dag M].

    Inverts :func:`quantization_operator` exactly.  Raises ``ValueError``
    for non-unit-trace input, which could not satisfy w(0, 0) = 1.
    """
    M = np.asarray(M, dtype=complex)
    d = M.shape[0]
    tr = np.trace(M)
    if abs(tr - 1.0) > _WEIGHT_ORIGIN_TOL:
        raise ValueError(f"operator trace must be 1 to define a weight, got {tr}")
    w = np.empty((d, d), dtype=complex)
    for m in range(d):
        for n in range(d):
            w[m, n] = np.vdot(sum_displacement(d, m, n), M)
    return Weight(w, provenance=provenance)


def symplectic_dft(f: np.ndarray, conjugate: bool = False) -> np.ndarray:
    """Symplectic Fourier transform on phase-space functions.

    F[f](m, n) = (1/d) sum_{m',n'} f(m', n') exp(-2 i pi (m' n - m n') / d);
    ``conjugate=True`` flips the sign in the exponent.  Both variants are
    their own inverse, and conjugate(plain(f)) reflects f through the
    origin.
    """
    f = np.asarray(f, dtype=complex)
    d = f.shape[0]
    if f.shape != (d, d):
        raise ValueError(f"phase-space map must be square, got {f.shape}")
    w = dft_matrix(d) * np.sqrt(d)  # exp(-2 i pi a b / d)
    if conjugate:
        return w @ f.T @ w.conj() / d
    return w.conj() @ f.T @ w / d


def momentum_symbol(g) -> np.ndarray:
    """Phase-space symbol f(m, n) = g(m) from a length-d vector g."""
    g = as_state(g)
    return np.tile(g[:, None], (1, g.shape[0]))


def position_symbol(h) -> np.ndarray:
    """Phase-space symbol f(m, n) = h(n) from a length-d vector h."""
    h = as_state(h)
    return np.tile(h[None, :], (h.shape[0], 1))


def quantize(f: np.ndarray, w: Weight, method: str = "kernel") -> np.ndarray:
    """Operator assigned to the symbol f by averaging transported M_w.

    With F the conjugate symplectic transform of f, the kernel route uses

        A_f = (1/d) sum_{m,n} w(m,n) F(m,n) D(m,n),

    which fixes how the conjugate transform enters; the "direct" route
    sums f(m,n) D(m,n) M_w D(m,n)^dag / d over the whole phase space.
    The unit symbol quantizes to the identity for every valid weight.
    """
    f = np.asarray(f, dtype=complex)
    d = w.d
    if f.shape != (d, d):
        raise ValueError(f"symbol shape {f.shape} does not match weight d={d}")
    if method == "kernel":
        return _kernel_operator(w.values, symplectic_dft(f, conjugate=True))
    if method == "direct":
        mw = quantization_operator(w)
        out = np.zeros((d, d), dtype=complex)
        for m in range(d):
            for n in range(d):
                out += f[m, n] * transported(mw, m, n)
        return out / d
    raise ValueError(f"unknown method {method!r}")


def quantize_momentum(g, w: Weight) -> np.ndarray:
    """Fast path for momentum-only symbols f(m, n) = g(m).

    Kernel (l, l') = ghat(-(l - l')) w(0, l - l') / sqrt(d) with
    ghat(-k) = (1/sqrt d) sum_m g(m) exp(2 i pi m k / d).  For the unit
    weight this is multiplication by g in the Fourier basis.
    """
    g = as_state(g, d=w.d)
    d = w.d
    ghat_neg = idft(g)
    delta = (np.arange(d)[:, None] - np.arange(d)[None, :]) % d
    return ghat_neg[delta] * w.values[0, delta] / np.sqrt(d)


def quantize_position(h, w: Weight) -> np.ndarray:
    """Fast path for position-only symbols f(m, n) = h(n).

    Yields the multiplication operator by
    l -> (1/sqrt d) sum_m hhat(m) w(m, 0) exp(2 i pi m l / d); for the
    unit weight this is multiplication by h itself.
    """
    h = as_state(h, d=w.d)
    diag = idft(dft(h) * w.values[:, 0])
    return np.diag(diag)


def covariance_defect(f: np.ndarray, w: Weight, shift: tuple[int, int]) -> float:
    """Max-norm residual of displacement covariance of the quantization map.

    Compares U(shift) A_f U(shift)^dag against the quantization of the
    shifted symbol f(. - shift); both sides are built independently.
    """
    f = np.asarray(f, dtype=complex)
    d = w.d
    sm, sn = int(shift[0]) % d, int(shift[1]) % d
    u = displacement_matrix(d, sm, sn)
    lhs = u @ quantize(f, w) @ u.conj().T
    rhs = quantize(np.roll(f, (sm, sn), axis=(0, 1)), w)
    return float(np.abs(lhs - rhs).max())


@dataclass(frozen=True)
class PositivityReport:
    """Spectral summary of a quantized symbol."""

    is_density: bool
    min_eigenvalue: float
    trace: float
    hermiticity_defect: float


def positivity_report(f: np.ndarray, w: Weight) -> PositivityReport:
    """Report whether A_f is a density operator (PSD with unit trace).

    Eigenvalues are taken of the hermitization (A + A^dag)/2; the minimum
    is allowed to dip to -1e-10.  A probability distribution here means a
    nonnegative symbol normalized against the counting measure weighted by
    1/d, i.e. (1/d) sum_{m,n} f = 1, which is exactly the normalization
    that gives A_f unit trace.
    """
    a = quantize(f, w)
    herm = (a + a.conj().T) / 2.0
    eigs = np.linalg.eigvalsh(herm)
    tr = float(np.trace(a).real)
    defect = float(np.abs(a - a.conj().T).max())
    min_eig = float(eigs[0])
    is_density = min_eig >= -1e-10 and abs(tr - 1.0) <= 1e-10 and defect <= 1e-10
    return PositivityReport(is_density, min_eig, tr, defect)
