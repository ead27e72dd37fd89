"""Two-mode photon-number states on a truncated ladder.

A state is stored sparsely as a map from occupation pairs ``(n, m)`` to
complex amplitudes, with ``n + m`` bounded by a cutoff fixed at
construction.  Operators act by explicit ladder algebra on that map, so
no dense basis is ever materialized and occupation pairs stay exact
integers.

The only non-trivial operator here is a power of a linear combination of
the two annihilation operators, ``(alpha*a + beta*b)**N``, which is the
workhorse for computing N-photon absorption amplitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Amplitudes smaller than this (in absolute value) are dropped after every
# operation; it is far below any tolerance used by callers.
PRUNE_EPS = 1e-15

# Factorial-like prefactors use exact integer arithmetic up to here and
# switch to log-gamma beyond, so large occupation numbers stay finite.
_EXACT_FACTORIAL_LIMIT = 20


def factorial_f(n: int) -> float:
    """n! as a float, exact for small n, via log-gamma for large n."""
    if n < 0:
        raise ValueError("factorial of a negative occupation number")
    if n < _EXACT_FACTORIAL_LIMIT:
        return float(math.factorial(n))
    return math.exp(math.lgamma(n + 1))


def sqrt_falling(n: int, k: int) -> float:
    """sqrt(n * (n-1) * ... * (n-k+1)), the prefactor for k annihilations.

    Equal to sqrt(n! / (n-k)!).  Requires 0 <= k <= n.
    """
    if n < _EXACT_FACTORIAL_LIMIT:
        prod = 1
        for t in range(k):
            prod *= n - t
        return math.sqrt(prod)
    return math.exp(0.5 * (math.lgamma(n + 1) - math.lgamma(n - k + 1)))


@dataclass(frozen=True)
class FieldCoefficients:
    """Coefficients (alpha, beta) of a field operator alpha*a + beta*b."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        for part in (self.alpha, self.beta):
            z = complex(part)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError("field coefficients must be finite")


@dataclass(frozen=True)
class FockState:
    """Sparse two-mode number state.

    ``amplitudes`` maps occupation pairs ``(n, m)`` to complex amplitudes.
    States returned by operators may be unnormalized (or the zero vector,
    an empty map); states built with :func:`make_state` have unit norm.
    The map is treated as immutable after construction -- operations
    always build a fresh state.
    """

    cutoff: int
    amplitudes: dict[tuple[int, int], complex]

    @property
    def is_zero(self) -> bool:
        return not self.amplitudes

    def amplitude(self, n: int, m: int) -> complex:
        return self.amplitudes.get((n, m), 0j)


def _validated_pairs(pairs, cutoff: int) -> dict[tuple[int, int], complex]:
    out: dict[tuple[int, int], complex] = {}
    for (n, m), amp in pairs.items():
        if n < 0 or m < 0:
            raise ValueError(f"negative occupation in pair ({n}, {m})")
        if n + m > cutoff:
            raise ValueError(
                f"occupation pair ({n}, {m}) exceeds cutoff {cutoff}"
            )
        z = complex(amp)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("state amplitudes must be finite")
        if abs(z) >= PRUNE_EPS:
            out[(n, m)] = z
    return out


def make_state(pairs, cutoff: int | None = None) -> FockState:
    """Build a normalized state from a map of occupation pairs to amplitudes.

    The cutoff defaults to the largest total photon number present.
    Raises if any pair exceeds the cutoff, or if the amplitudes are all
    (numerically) zero, which would make normalization degenerate.
    """
    if cutoff is None:
        if not pairs:
            raise ValueError("cannot build a state from no amplitudes")
        cutoff = max(n + m for (n, m) in pairs)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    amps = _validated_pairs(pairs, cutoff)
    norm = math.sqrt(sum(abs(v) ** 2 for v in amps.values()))
    if norm < PRUNE_EPS:
        raise ValueError("degenerate state: all amplitudes are zero")
    return FockState(cutoff, {k: v / norm for k, v in amps.items()})


def squared_norm(state: FockState) -> float:
    """Sum of |amplitude|^2 over all occupation pairs."""
    return sum(abs(v) ** 2 for v in state.amplitudes.values())


def _mode_index(mode) -> int:
    if mode in (0, "a"):
        return 0
    if mode in (1, "b"):
        return 1
    raise ValueError(f"unknown mode {mode!r}: expected 'a' or 'b'")


def apply_annihilation(state: FockState, mode) -> FockState:
    """Apply the annihilation operator of one mode: a|n> = sqrt(n)|n-1>.

    Returns an unnormalized state; annihilating the vacuum component of a
    mode simply drops it, so the result may be the zero vector.
    """
    idx = _mode_index(mode)
    out: dict[tuple[int, int], complex] = {}
    for (n, m), amp in state.amplitudes.items():
        occ = n if idx == 0 else m
        if occ == 0:
            continue
        key = (n - 1, m) if idx == 0 else (n, m - 1)
        new = amp * math.sqrt(occ)
        acc = out.get(key, 0j) + new
        if abs(acc) >= PRUNE_EPS:
            out[key] = acc
        elif key in out:
            del out[key]
    return FockState(state.cutoff, out)


def _apply_creation(state: FockState, mode) -> FockState:
    """Creation operator, used by consistency tests: a†|n> = sqrt(n+1)|n+1>.

    Raises if any resulting pair would exceed the cutoff.
    """
    idx = _mode_index(mode)
    out: dict[tuple[int, int], complex] = {}
    for (n, m), amp in state.amplitudes.items():
        if n + m + 1 > state.cutoff:
            raise ValueError(
                f"creation on pair ({n}, {m}) exceeds cutoff {state.cutoff}"
            )
        key = (n + 1, m) if idx == 0 else (n, m + 1)
        occ = n if idx == 0 else m
        acc = out.get(key, 0j) + amp * math.sqrt(occ + 1)
        if abs(acc) >= PRUNE_EPS:
            out[key] = acc
        elif key in out:
            del out[key]
    return FockState(state.cutoff, out)


def apply_field_power(state: FockState, f: FieldCoefficients, power: int) -> FockState:
    """Apply (alpha*a + beta*b)**power to the state.

    Expands the power binomially -- the two annihilation operators
    commute -- so the term with k annihilations in mode a contributes

        C(power, k) * alpha**k * beta**(power-k)
            * sqrt(n!/(n-k)!) * sqrt(m!/(m-power+k)!)

    on each occupation pair (n, m).  Returns an unnormalized state (the
    zero vector if the state holds fewer than ``power`` photons).
    """
    if power < 1:
        raise ValueError("field power must be a positive integer")
    if power > state.cutoff:
        raise ValueError(
            f"field power {power} exceeds state cutoff {state.cutoff}"
        )
    a, b = complex(f.alpha), complex(f.beta)
    out: dict[tuple[int, int], complex] = {}
    for (n, m), amp in state.amplitudes.items():
        if n + m < power:
            continue
        k_lo = max(0, power - m)
        k_hi = min(n, power)
        for k in range(k_lo, k_hi + 1):
            j = power - k
            coeff = (
                math.comb(power, k)
                * a**k
                * b**j
                * sqrt_falling(n, k)
                * sqrt_falling(m, j)
            )
            key = (n - k, m - j)
            acc = out.get(key, 0j) + amp * coeff
            if abs(acc) >= PRUNE_EPS:
                out[key] = acc
            elif key in out:
                del out[key]
    return FockState(state.cutoff, out)
