"""NumPy implementation of the hot kernels.

Reference implementation; the Cython module ``_kernels_cy`` mirrors these
signatures and accumulation order exactly, so both backends agree bitwise.
"""

import numpy as np

BACKEND_NAME = "numpy"


def coupling_profile(deltas, centers, strengths, taus, u):
    """Summed gain/phase coupling of all lines at each detuning.

    ``deltas`` are detunings from the carrier in Hz, ``u`` converts Hz to
    the dimensionless line argument (1 for ordinary frequency, 2*pi for
    angular). Returns ``(gain, phase)`` float64 arrays.
    """
    deltas = np.asarray(deltas, dtype=np.float64)
    gain = np.zeros(deltas.shape, dtype=np.float64)
    phase = np.zeros(deltas.shape, dtype=np.float64)
    for c, s, t in zip(centers, strengths, taus):
        x = (u * t) * (deltas - c)
        den = 1.0 + x * x
        half = 0.5 * s
        gain += half / den
        phase += half * x / den
    return gain, phase


def phase_slope_profile(deltas, centers, strengths, taus, u):
    """d(phase coupling)/d(angular frequency) at each detuning, in seconds."""
    deltas = np.asarray(deltas, dtype=np.float64)
    slope = np.zeros(deltas.shape, dtype=np.float64)
    two_pi = 2.0 * np.pi
    for c, s, t in zip(centers, strengths, taus):
        ut = u * t
        x = ut * (deltas - c)
        den = 1.0 + x * x
        slope += ((0.5 * s) * (ut / two_pi)) * (1.0 - x * x) / (den * den)
    return slope
