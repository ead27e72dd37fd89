"""N-photon exposure of a substrate by a two-mode field.

The substrate records N-photon absorption events.  For a field operator
e (a linear combination of the two mode operators arriving at the
substrate), the dose at a point is

    rate = || e^N |psi> ||^2 / N!

i.e. the expectation of the normally ordered absorption operator
(e†)^N e^N / N!.

Two conventions relate the point phase ``phi`` to the field:

* SYMMETRIC -- the two beams reach the substrate counter-propagating, so
  the field is e(phi) = c e^{i phi} + d e^{-i phi} and the state at the
  substrate carries no phase of its own.  Fringes of an N-photon
  path-entangled state then oscillate as cos(2 N phi).

* SINGLE_ARM -- the interferometer chain is taken literally: an explicit
  phase shifter diag(e^{i phi}, 1) sits in one arm and the substrate sees
  the plain sum e = c + d.  All fringe frequencies come out halved
  relative to SYMMETRIC; the two conventions agree after rescaling the
  phase axis by two (up to a constant offset).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ToleranceError
from .fock import (
    FieldCoefficients,
    FockState,
    apply_field_power,
    factorial_f,
    make_state,
    squared_norm,
)
from .optics import ModeUnitary, beamsplitter, compose, evolve, mirror, phase_shifter

# Doses are squared norms and cannot be negative beyond roundoff; anything
# below this is treated as a bug rather than noise.
_NEGATIVE_DOSE_TOL = -1e-12


class SubstrateConvention(enum.Enum):
    """How the point phase enters the substrate field."""

    SYMMETRIC = "symmetric"
    SINGLE_ARM = "single-arm"


def substrate_field(phi: float, convention: SubstrateConvention = SubstrateConvention.SYMMETRIC) -> FieldCoefficients:
    """Coefficients of the field operator at substrate phase ``phi``."""
    if not math.isfinite(phi):
        raise ValueError("substrate phase must be finite")
    if convention is SubstrateConvention.SYMMETRIC:
        return FieldCoefficients(cmath.exp(1j * phi), cmath.exp(-1j * phi))
    if convention is SubstrateConvention.SINGLE_ARM:
        return FieldCoefficients(1.0 + 0j, 1.0 + 0j)
    raise ValueError(f"unknown substrate convention {convention!r}")


def interferometer(phi: float, convention: SubstrateConvention = SubstrateConvention.SYMMETRIC) -> ModeUnitary:
    """Transfer matrix from the input ports to the substrate.

    Both conventions route the input through the 50/50 splitter and the
    mirror; SINGLE_ARM additionally applies the explicit phase shifter,
    while SYMMETRIC leaves the phase to the substrate field itself.
    """
    chain = compose(mirror(), beamsplitter())
    if convention is SubstrateConvention.SINGLE_ARM:
        chain = compose(phase_shifter(phi), chain)
    return chain


def noon_state(n_photons: int, phi: float = 0.0) -> FockState:
    """The N-photon path-entangled state (|0,N> + e^{iN phi}|N,0>)/sqrt2."""
    if n_photons < 1:
        raise ValueError("photon number must be a positive integer")
    return make_state(
        {
            (0, n_photons): 1.0,
            (n_photons, 0): cmath.exp(1j * n_photons * phi),
        }
    )


def deposition_rate(
    state: FockState,
    n_photons: int,
    phi: float,
    convention: SubstrateConvention = SubstrateConvention.SYMMETRIC,
) -> float:
    """Dose deposited at phase ``phi`` by a state already at the substrate.

    Equals ||e(phi)^N |state>||^2 / N!.  If the state cannot supply N
    photons the rate is exactly zero (never an error).
    """
    if n_photons < 1:
        raise ValueError("photon number must be a positive integer")
    if state.is_zero or n_photons > state.cutoff:
        return 0.0
    f = substrate_field(phi, convention)
    absorbed = apply_field_power(state, f, n_photons)
    return squared_norm(absorbed) / factorial_f(n_photons)


def pipeline_rate(
    input_state: FockState,
    n_photons: int,
    phi: float,
    convention: SubstrateConvention = SubstrateConvention.SYMMETRIC,
) -> float:
    """Dose at ``phi`` for a state fed into the interferometer inputs."""
    at_substrate = evolve(input_state, interferometer(phi, convention))
    return deposition_rate(at_substrate, n_photons, phi, convention)


def phase_grid(grid_points: int) -> np.ndarray:
    """Uniform phases [0, 2 pi): k * (2 pi / G) for k = 0 .. G-1."""
    if grid_points < 1:
        raise ValueError("grid must have at least one point")
    return np.arange(grid_points) * (2.0 * np.pi / grid_points)


@dataclass(frozen=True)
class ExposureProfile:
    """Doses sampled on the uniform phase grid over [0, 2 pi)."""

    phis: np.ndarray
    doses: np.ndarray

    def __post_init__(self):
        phis = np.asarray(self.phis, dtype=float)
        doses = np.asarray(self.doses, dtype=float)
        if phis.ndim != 1 or phis.shape != doses.shape:
            raise ValueError("phis and doses must be 1-d arrays of equal length")
        g = len(phis)
        if g < 1:
            raise ValueError("profile needs at least one sample")
        expected = np.arange(g) * (2.0 * np.pi / g)
        if np.abs(phis - expected).max() > 1e-12:
            raise ValueError("phis must be the uniform grid k*2pi/G starting at 0")
        if doses.min() < _NEGATIVE_DOSE_TOL:
            raise ToleranceError(
                f"negative dose {doses.min():.3e} below tolerance {_NEGATIVE_DOSE_TOL}"
            )
        doses = np.maximum(doses, 0.0)
        phis.flags.writeable = False
        doses.flags.writeable = False
        object.__setattr__(self, "phis", phis)
        object.__setattr__(self, "doses", doses)

    @property
    def grid_points(self) -> int:
        return len(self.phis)


def exposure_profile(
    source: FockState,
    n_photons: int,
    grid_points: int,
    convention: SubstrateConvention = SubstrateConvention.SYMMETRIC,
    from_input: bool = False,
) -> ExposureProfile:
    """Sample the dose over the full phase grid.

    With ``from_input`` the source sits at the interferometer inputs and
    is pushed through the optics (once for SYMMETRIC, whose chain is
    phase-independent; per point for SINGLE_ARM); otherwise the source is
    taken to be already at the substrate.
    """
    phis = phase_grid(grid_points)
    doses = np.empty(grid_points)
    if from_input and convention is SubstrateConvention.SYMMETRIC:
        fixed = evolve(source, interferometer(0.0, convention))
        for i, phi in enumerate(phis):
            doses[i] = deposition_rate(fixed, n_photons, phi, convention)
    elif from_input:
        for i, phi in enumerate(phis):
            doses[i] = pipeline_rate(source, n_photons, phi, convention)
    else:
        for i, phi in enumerate(phis):
            doses[i] = deposition_rate(source, n_photons, phi, convention)
    return ExposureProfile(phis, doses)


def fourier_components(profile: ExposureProfile, max_harmonic: int) -> np.ndarray:
    """Harmonic content c_h = (1/G) sum_k dose_k e^{-i h phi_k}, h = 0..max.

    For a profile a0 + sum a_h cos(h phi) this returns c_0 = a0 and
    c_h = a_h / 2.  Harmonics at or above G/2 alias on a G-point grid and
    are refused.
    """
    if max_harmonic < 0:
        raise ValueError("max_harmonic must be nonnegative")
    g = profile.grid_points
    if max_harmonic >= g / 2:
        raise ValueError(
            f"harmonic {max_harmonic} would alias on a {g}-point grid "
            f"(need max_harmonic < G/2)"
        )
    spectrum = np.fft.fft(profile.doses) / g
    return spectrum[: max_harmonic + 1]


def min_feature(n_photons: int, wavelength: float) -> float:
    """Smallest printable feature: wavelength / (2 N).

    The N-photon fringe cos(2 N phi) completes a period every
    wavelength / N of substrate travel, so adjacent dark-to-bright
    features sit wavelength / (2 N) apart.
    """
    if n_photons < 1:
        raise ValueError("photon number must be a positive integer")
    if not (math.isfinite(wavelength) and wavelength > 0):
        raise ValueError("wavelength must be positive and finite")
    return wavelength / (2.0 * n_photons)
