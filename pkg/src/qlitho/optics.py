"""Passive two-mode linear optics.

A lossless element is a 2x2 unitary T acting on the annihilation
operators, (c, d)^T = T (a, b)^T.  States evolve in the Schroedinger
picture by rewriting each input creation operator in terms of the output
ones,

    a† -> T11 c† + T21 d†,      b† -> T12 c† + T22 d†,

and re-expanding occupation monomials binomially.  Photon number is
conserved, so the truncation cutoff never overflows.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .fock import PRUNE_EPS, FockState, factorial_f

_UNITARITY_TOL = 1e-9


@dataclass(frozen=True)
class ModeUnitary:
    """A 2x2 unitary transfer matrix between two optical modes."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"mode unitary must be 2x2, got shape {m.shape}")
        if not np.all(np.isfinite(m.view(float))):
            raise ValueError("mode unitary entries must be finite")
        defect = np.abs(m.conj().T @ m - np.eye(2)).max()
        if defect > _UNITARITY_TOL:
            raise ValueError(
                f"matrix is not unitary: max |T†T - I| = {defect:.3e}"
            )
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)


def beamsplitter() -> ModeUnitary:
    """Symmetric 50/50 splitter: (1/sqrt2) [[-1, i], [i, -1]]."""
    s = 1.0 / math.sqrt(2.0)
    return ModeUnitary(np.array([[-s, 1j * s], [1j * s, -s]]))


def mirror() -> ModeUnitary:
    """Sign flip on both modes: -I."""
    return ModeUnitary(-np.eye(2, dtype=complex))


def phase_shifter(phi: float) -> ModeUnitary:
    """Phase e^{i phi} on the first mode only: diag(e^{i phi}, 1)."""
    if not math.isfinite(phi):
        raise ValueError("phase must be finite")
    return ModeUnitary(np.array([[cmath.exp(1j * phi), 0.0], [0.0, 1.0]]))


def compose(outer: ModeUnitary, inner: ModeUnitary) -> ModeUnitary:
    """The element applying ``inner`` first, then ``outer``."""
    return ModeUnitary(outer.matrix @ inner.matrix)


def evolve(state: FockState, u: ModeUnitary) -> FockState:
    """Push a state through a linear element in the Schroedinger picture.

    Each occupation pair (n, m) is the monomial a†^n b†^m / sqrt(n! m!)
    on vacuum.  Substituting the output-mode expansion of a† and b† and
    collecting powers gives, for every output pair (p, q) with
    p + q = n + m,

        sum over k+l=p of  C(n,k) C(m,l) T11^k T21^(n-k) T12^l T22^(m-l)
                           * sqrt(p! q! / (n! m!)).
    """
    t = u.matrix
    out: dict[tuple[int, int], complex] = {}
    for (n, m), amp in state.amplitudes.items():
        # Binomial expansions of (T11 c† + T21 d†)^n and (T12 c† + T22 d†)^m.
        wa = [
            math.comb(n, k) * t[0, 0] ** k * t[1, 0] ** (n - k)
            for k in range(n + 1)
        ]
        wb = [
            math.comb(m, l) * t[0, 1] ** l * t[1, 1] ** (m - l)
            for l in range(m + 1)
        ]
        base = amp / math.sqrt(factorial_f(n) * factorial_f(m))
        total = n + m
        for k in range(n + 1):
            for l in range(m + 1):
                p = k + l
                q = total - p
                key = (p, q)
                contrib = (
                    base
                    * wa[k]
                    * wb[l]
                    * math.sqrt(factorial_f(p) * factorial_f(q))
                )
                acc = out.get(key, 0j) + contrib
                if abs(acc) >= PRUNE_EPS:
                    out[key] = acc
                elif key in out:
                    del out[key]
    return FockState(state.cutoff, out)
