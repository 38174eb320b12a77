"""Bundled periodic demo signals and spectrogram-based period detection.

The period of a periodic signal of length d shows up in its Gabor
magnitude map as striations along the time axis.  Summing the squared
magnitudes within each time column gives the windowed-energy envelope,
which inherits the signal's period exactly (it is a cyclic convolution of
the squared signal with the squared window), so the envelope's spectrum
is supported on frequency rows that are multiples of d / period.
"""

from __future__ import annotations

import math

import numpy as np

from .hilbert import as_state, dft
from .gabor import gabor_transform

__all__ = [
    "SIGNAL_PATTERNS",
    "demo_signal",
    "spectrogram",
    "column_energy",
    "envelope_spectrum",
    "harmonic_energy_fraction",
    "dominant_rows",
    "period_estimate",
]

#: repeating patterns of the bundled demo signals (periods 6, 15 and 10)
SIGNAL_PATTERNS = {
    1: (2, 4, 4, 3, 3, 5),
    2: (0, 0, 0, 3, 3, -2, 1, 1, 1, 4, -1, -1, 2, 2, 2),
}


def demo_signal(index: int, length: int = 60) -> np.ndarray:
    """Demo signal 1 (period 6), 2 (period 15) or 3 (their sum, period 10)."""
    if index in SIGNAL_PATTERNS:
        pattern = np.array(SIGNAL_PATTERNS[index], dtype=float)
        reps, rem = divmod(length, len(pattern))
        if rem:
            raise ValueError(f"length {length} is not a multiple of the period {len(pattern)}")
        return np.tile(pattern, reps)
    if index == 3:
        return demo_signal(1, length) + demo_signal(2, length)
    raise ValueError(f"unknown demo signal {index}")


def spectrogram(signal, window) -> np.ndarray:
    """Gabor magnitude map |Phi(m, n)|, rows indexed by frequency m."""
    return np.abs(gabor_transform(as_state(signal), window))


def column_energy(magnitude: np.ndarray) -> np.ndarray:
    """Per-time-column energy E(n) = sum_m |Phi(m, n)|^2."""
    return (np.asarray(magnitude) ** 2).sum(axis=0)


def envelope_spectrum(energy: np.ndarray) -> np.ndarray:
    """Power |dft(E)(k)|^2 of the column-energy envelope."""
    return np.abs(dft(np.asarray(energy, dtype=complex))) ** 2


def harmonic_energy_fraction(power: np.ndarray, base: int) -> float:
    """Fraction of off-DC envelope power on rows that are multiples of ``base``."""
    power = np.asarray(power, dtype=float)
    d = power.shape[0]
    if not 0 < base < d:
        raise ValueError(f"harmonic base {base} out of range (0, {d})")
    off_dc = power[1:].sum()
    if off_dc <= 0:
        return 0.0
    rows = np.arange(d)
    on_multiples = power[(rows % base == 0) & (rows != 0)].sum()
    return float(on_multiples / off_dc)


def dominant_rows(power: np.ndarray, coverage: float = 0.9) -> list[int]:
    """Smallest set of off-DC rows capturing ``coverage`` of the off-DC power.

    Returns an empty list when the off-DC power is numerically negligible
    relative to the total (a constant envelope has no periodicity to report).
    """
    power = np.asarray(power, dtype=float)
    order = np.argsort(power[1:])[::-1] + 1
    total = power[1:].sum()
    if total <= 1e-12 * power.sum():
        return []
    rows: list[int] = []
    acc = 0.0
    for k in order:
        if acc >= coverage * total:
            break
        rows.append(int(k))
        acc += power[k]
    return sorted(rows)


def period_estimate(d: int, rows: list[int]) -> int | None:
    """Period implied by harmonic rows: d divided by their gcd (None if empty)."""
    if not rows:
        return None
    g = 0
    for k in rows:
        g = math.gcd(g, k)
    if g == 0 or d % g:
        return None
    return d // g
