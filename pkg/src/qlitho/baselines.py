"""Classical reference exposures and the ideal N-photon fringe."""

from __future__ import annotations

import numpy as np


def classical_one_photon(phi):
    """Single-photon / coherent fringe 1 + cos(2 phi)."""
    return 1.0 + np.cos(2.0 * np.asarray(phi, dtype=float))


def classical_two_photon(phi):
    """Uncorrelated two-photon dose (1 + cos 2phi)^2 / 2."""
    return classical_one_photon(phi) ** 2 / 2.0


def classical_n_photon(n_photons: int, phi):
    """Uncorrelated N-photon dose (1 + cos 2phi)^N / 2^(N-1).

    The normalization keeps the peak at 2 for every N, matching the one-
    and two-photon forms at N = 1, 2.
    """
    if n_photons < 1:
        raise ValueError("photon number must be a positive integer")
    return classical_one_photon(phi) ** n_photons / 2.0 ** (n_photons - 1)


def noon_exposure(n_photons: int, phi):
    """Path-entangled N-photon fringe 1 + cos(2 N phi)."""
    if n_photons < 1:
        raise ValueError("photon number must be a positive integer")
    return 1.0 + np.cos(2.0 * n_photons * np.asarray(phi, dtype=float))
