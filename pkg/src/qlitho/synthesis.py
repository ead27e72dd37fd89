"""Pattern synthesis from superpositions of N-photon partition states.

Splitting N photons P / (N-P) between the two arms gives a family of
substrate states whose doses are pure harmonics; a genetic algorithm
searches complex superposition coefficients so that the combined dose
approximates a requested exposure pattern, and a constrained classical
single-fringe fit provides the benchmark to beat.

Phase bookkeeping (the subtle part): every partition contributes the
pair state (|N-P, P> + |P, N-P>)/sqrt2.  Under the SYMMETRIC substrate
convention the position phase within each pair is carried by the field
operator e(phi) itself, which doubles the single-partition fringe
frequency to 2(N-2P).  Propagation through the instrument additionally
stamps each partition with the global factor e^{i P phi}.  That factor
is invisible in any single-partition dose but sets the relative phases
between partitions, making cross terms position-dependent; those cross
terms supply the odd harmonics without which a square target could
never be approximated better than by a constant.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .dosing import SubstrateConvention, deposition_rate, phase_grid, ExposureProfile
from .errors import ToleranceError
from .fock import FockState, make_state

_FAST_PATH_TOL = 1e-9  # agreement required between ladder and vectorized doses


# ---------------------------------------------------------------------------
# types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionBasis:
    """Strictly increasing partition indices 0 <= P <= N/2 for N photons."""

    n_photons: int
    partitions: tuple[int, ...]

    def __post_init__(self):
        if self.n_photons < 1:
            raise ValueError("photon number must be a positive integer")
        parts = tuple(int(p) for p in self.partitions)
        if not parts:
            raise ValueError("partition basis cannot be empty")
        if any(p < 0 or 2 * p > self.n_photons for p in parts):
            raise ValueError(
                f"partitions must satisfy 0 <= P <= {self.n_photons // 2}"
            )
        if any(b <= a for a, b in zip(parts, parts[1:])):
            raise ValueError("partitions must be strictly increasing (no duplicates)")
        object.__setattr__(self, "partitions", parts)

    def __len__(self) -> int:
        return len(self.partitions)


@dataclass(frozen=True)
class SynthesisGenome:
    """Superposition coefficients (unit norm) plus a positive dose scale."""

    coefficients: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        coeff = np.asarray(self.coefficients, dtype=complex).copy()
        if coeff.ndim != 1 or len(coeff) == 0:
            raise ValueError("coefficients must be a nonempty 1-d array")
        if not np.all(np.isfinite(coeff.view(float))):
            raise ValueError("coefficients must be finite")
        norm = np.linalg.norm(coeff)
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(
                f"coefficients must have unit norm (got {norm!r}); "
                "use normalized_genome to build one"
            )
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise ValueError("scale must be positive and finite")
        coeff.flags.writeable = False
        object.__setattr__(self, "coefficients", coeff)


def normalized_genome(coefficients, scale: float = 1.0) -> SynthesisGenome:
    """Build a genome, normalizing the coefficient vector first."""
    coeff = np.asarray(coefficients, dtype=complex)
    norm = np.linalg.norm(coeff)
    if norm == 0 or not np.isfinite(norm):
        raise ValueError("degenerate coefficient vector")
    return SynthesisGenome(coeff / norm, scale)


@dataclass(frozen=True)
class TargetPattern:
    """Nonnegative target samples on the uniform phase grid [0, 2 pi)."""

    phis: np.ndarray
    samples: np.ndarray

    def __post_init__(self):
        phis = np.asarray(self.phis, dtype=float)
        samples = np.asarray(self.samples, dtype=float)
        if phis.ndim != 1 or phis.shape != samples.shape:
            raise ValueError("phis and samples must be 1-d arrays of equal length")
        g = len(phis)
        if g < 4:
            raise ValueError("target needs at least four samples")
        expected = np.arange(g) * (2.0 * np.pi / g)
        if np.abs(phis - expected).max() > 1e-12:
            raise ValueError("phis must be the uniform grid k*2pi/G starting at 0")
        if not np.all(np.isfinite(samples)):
            raise ValueError("target samples must be finite")
        if samples.min() < 0:
            raise ValueError("target samples must be nonnegative")
        phis.flags.writeable = False
        samples.flags.writeable = False
        object.__setattr__(self, "phis", phis)
        object.__setattr__(self, "samples", samples)

    @property
    def grid_points(self) -> int:
        return len(self.phis)


@dataclass(frozen=True)
class GAConfig:
    """Knobs for the generational optimizer (all defaults battle-tested)."""

    population: int = 64
    generations: int = 500
    mutation_sigma: float = 0.05
    crossover_rate: float = 0.7
    elite_count: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.population < 4:
            raise ValueError("population must be at least 4")
        if self.generations < 1:
            raise ValueError("generations must be at least 1")
        if not (math.isfinite(self.mutation_sigma) and self.mutation_sigma > 0):
            raise ValueError("mutation_sigma must be positive")
        if not (0.0 <= self.crossover_rate <= 1.0):
            raise ValueError("crossover_rate must lie in [0, 1]")
        if not (1 <= self.elite_count < self.population):
            raise ValueError("elite_count must lie in [1, population)")
        if not isinstance(self.seed, int):
            raise ValueError("seed must be an integer")


class ClassicalFit(NamedTuple):
    """Result of the constrained single-fringe fit a + b cos(2 phi + theta0)."""

    a: float
    b: float
    theta0: float
    error: float

    def curve(self, phis) -> np.ndarray:
        """The fitted exposure sampled at the given phases."""
        phis = np.asarray(phis, dtype=float)
        return self.a + self.b * np.cos(2.0 * phis + self.theta0)


# ---------------------------------------------------------------------------
# basis states and their doses
# ---------------------------------------------------------------------------

def psi_np(n_photons: int, partition: int, phi: float) -> FockState:
    """Fully phase-carrying pair state for one partition.

    The two occupations carry the explicit propagation phases

        e^{i P phi} / sqrt2     on (N-P, P)
        e^{i (N-P) phi} / sqrt2 on (P, N-P)

    appropriate when every position phase lives in the state (the
    SINGLE_ARM picture).  For the degenerate split 2P = N both terms
    coincide and the normalized single term e^{i P phi} |P, P> is
    returned.
    """
    n, p = n_photons, partition
    if n < 1:
        raise ValueError("photon number must be a positive integer")
    if not 0 <= p <= n:
        raise ValueError(f"partition {p} out of range 0..{n}")
    if not math.isfinite(phi):
        raise ValueError("phase must be finite")
    if 2 * p == n:
        return make_state({(p, p): cmath.exp(1j * p * phi)})
    return make_state(
        {
            (n - p, p): cmath.exp(1j * p * phi),
            (p, n - p): cmath.exp(1j * (n - p) * phi),
        }
    )


def component_state(n_photons: int, partition: int, phi: float) -> FockState:
    """Substrate-stage basis state of one partition, SYMMETRIC convention.

    The pair state (|N-P, P> + |P, N-P>)/sqrt2 times the partition's
    global propagation factor e^{i P phi}.  The phase *within* the pair
    is supplied by the substrate field, so dosing this state reproduces
    the doubled-frequency component harmonics; the global factor only
    matters once several partitions are superposed, where it fixes their
    relative phases (see the module docstring).
    """
    n, p = n_photons, partition
    if n < 1:
        raise ValueError("photon number must be a positive integer")
    if not 0 <= 2 * p <= n:
        raise ValueError(f"partition {p} out of range 0..{n // 2}")
    if not math.isfinite(phi):
        raise ValueError("phase must be finite")
    g = cmath.exp(1j * p * phi)
    if 2 * p == n:
        return make_state({(p, p): g})
    return make_state({(n - p, p): g, (p, n - p): g})


def component_closed_form(n_photons: int, partition: int, phis) -> np.ndarray:
    """Analytic dose of a single partition: C(N,P) (1 + cos 2(N-2P) phi).

    For the degenerate split 2P = N the normalized basis state is the
    single term |P, P>, whose dose is the constant C(N, P) -- half the
    value the two-term formula would suggest at zero frequency.
    """
    n, p = n_photons, partition
    if not 0 <= 2 * p <= n:
        raise ValueError(f"partition {p} out of range 0..{n // 2}")
    phis = np.asarray(phis, dtype=float)
    c = float(math.comb(n, p))
    if 2 * p == n:
        return np.full(phis.shape, c)
    return c * (1.0 + np.cos(2.0 * (n - 2 * p) * phis))


def component_profile(n_photons: int, partition: int, grid_points: int) -> ExposureProfile:
    """Dose of a single partition sampled on the grid via the ladder algebra."""
    phis = phase_grid(grid_points)
    doses = np.empty(grid_points)
    for i, phi in enumerate(phis):
        state = component_state(n_photons, partition, phi)
        doses[i] = deposition_rate(
            state, n_photons, phi, SubstrateConvention.SYMMETRIC
        )
    return ExposureProfile(phis, doses)


def _superposition_state(coefficients: np.ndarray, basis: PartitionBasis, phi: float) -> FockState:
    """Normalized sum of weighted partition states at one phase point."""
    amps: dict[tuple[int, int], complex] = {}
    for alpha, p in zip(coefficients, basis.partitions):
        comp = component_state(basis.n_photons, p, phi)
        for key, value in comp.amplitudes.items():
            amps[key] = amps.get(key, 0j) + alpha * value
    norm = math.sqrt(sum(abs(v) ** 2 for v in amps.values()))
    if norm == 0:
        raise ValueError("superposition collapsed to the zero vector")
    return FockState(basis.n_photons, {k: v / norm for k, v in amps.items()})


def _unscaled_profile_ladder(coefficients: np.ndarray, basis: PartitionBasis, phis: np.ndarray) -> np.ndarray:
    """Exact dose of the superposition at each grid phase (scale = 1)."""
    n = basis.n_photons
    doses = np.empty(len(phis))
    for i, phi in enumerate(phis):
        state = _superposition_state(coefficients, basis, phi)
        doses[i] = deposition_rate(state, n, phi, SubstrateConvention.SYMMETRIC)
    return doses


def genome_profile(genome: SynthesisGenome, basis: PartitionBasis, grid_points: int) -> ExposureProfile:
    """Dose pattern of a coefficient superposition, times the genome scale.

    Built pointwise from the ladder algebra: form the superposition of
    partition states at each phase, renormalize, dose.  Cross terms
    between partitions arise automatically from the amplitude addition.
    """
    if len(genome.coefficients) != len(basis):
        raise ValueError(
            f"genome has {len(genome.coefficients)} coefficients for a "
            f"{len(basis)}-partition basis"
        )
    phis = phase_grid(grid_points)
    doses = genome.scale * _unscaled_profile_ladder(genome.coefficients, basis, phis)
    return ExposureProfile(phis, doses)


def _amplitude_matrix(basis: PartitionBasis, phis: np.ndarray) -> np.ndarray:
    """Rows A[P] with dose(alpha) = |alpha @ A|^2 for unit-norm alpha.

    Row P is e^{i P phi} * w_P * cos((N-2P) phi) with w_P^2 = 2 C(N, P)
    (or C(N, P) for the degenerate split, whose basis state is a single
    term).  This is the vectorized twin of the ladder-algebra dose; the
    optimizer verifies the two against each other before trusting it.
    """
    n = basis.n_photons
    rows = []
    for p in basis.partitions:
        c = float(math.comb(n, p))
        if 2 * p == n:
            w = math.sqrt(c)
        else:
            w = math.sqrt(2.0 * c)
        rows.append(w * np.cos((n - 2 * p) * phis) * np.exp(1j * p * phis))
    return np.array(rows)


# ---------------------------------------------------------------------------
# targets and fitness
# ---------------------------------------------------------------------------

def trench_target(grid_points: int) -> TargetPattern:
    """Square trench: bright on [0, pi/2] and (3pi/2, 2pi), dark between.

    Boundary samples take the value approached from the left, so the
    grid point at exactly pi/2 is bright and the one at 3pi/2 is dark.
    """
    phis = phase_grid(grid_points)
    samples = np.where((phis <= np.pi / 2) | (phis > 3 * np.pi / 2), 1.0, 0.0)
    return TargetPattern(phis, samples)


def _optimal_scale(unscaled: np.ndarray, target: np.ndarray) -> float:
    """Least-squares scale: argmin_s mean((s u - p)^2) = <u,p>/<u,u>."""
    denom = float(unscaled @ unscaled)
    if denom <= 0.0:
        return 1.0
    return max(float(unscaled @ target) / denom, 1e-300)


def _scaled_mse(unscaled: np.ndarray, target: np.ndarray) -> float:
    s = _optimal_scale(unscaled, target)
    resid = s * unscaled - target
    return float(resid @ resid) / len(target)


def fitness(genome: SynthesisGenome, basis: PartitionBasis, target: TargetPattern) -> float:
    """Mean squared error against the target after closed-form rescaling.

    The genome's stored scale is ignored: for a fixed dose shape u the
    best scale is s* = <u, p> / <u, u> (one-variable least squares), and
    the value returned is mean((s* u - p)^2).  Computed via the exact
    ladder-algebra dose.
    """
    if len(genome.coefficients) != len(basis):
        raise ValueError("genome length does not match the partition basis")
    u = _unscaled_profile_ladder(genome.coefficients, basis, target.phis)
    return _scaled_mse(u, target.samples)


# ---------------------------------------------------------------------------
# genetic optimizer
# ---------------------------------------------------------------------------

def _child_rng(seed: int, generation: int, index: int) -> np.random.Generator:
    """Stream derived from (seed, generation, index).

    Each individual's variation draws from its own counter-derived
    stream, so results do not depend on evaluation order.
    """
    return np.random.default_rng([seed & 0xFFFFFFFFFFFFFFFF, generation, index])


def _normalize_chromosome(vec: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(vec)
    if norm < 1e-300:
        out = np.zeros_like(vec)
        out[0] = 1.0
        return out
    return vec / norm


def _verify_fast_path(matrix: np.ndarray, basis: PartitionBasis, phis: np.ndarray) -> None:
    """Check the vectorized dose against the ladder algebra on a probe.

    Uses an equal-weight superposition on a thinned subgrid; disagreement
    beyond 1e-9 aborts the run rather than optimizing a wrong model.
    """
    k = len(basis)
    probe = np.full(k, 1.0 / math.sqrt(k), dtype=complex)
    step = max(1, len(phis) // 16)
    idx = np.arange(0, len(phis), step)
    fast = np.abs(probe @ matrix[:, idx]) ** 2
    exact = _unscaled_profile_ladder(probe, basis, phis[idx])
    worst = float(np.abs(fast - exact).max())
    if worst > _FAST_PATH_TOL:
        raise ToleranceError(
            f"vectorized dose deviates from ladder algebra by {worst:.3e} "
            f"(tolerance {_FAST_PATH_TOL})"
        )


def ga_optimize(
    basis: PartitionBasis,
    target: TargetPattern,
    config: GAConfig | None = None,
) -> tuple[SynthesisGenome, np.ndarray]:
    """Evolve superposition coefficients to match a target pattern.

    Generational GA on the real/imaginary parts of the coefficients:
    tournament selection of size 2, arithmetic crossover with probability
    ``crossover_rate``, Gaussian mutation with ``mutation_sigma`` on every
    gene, renormalization to unit coefficient norm after every variation,
    and ``elite_count`` unchanged survivors per generation.  Fitness is
    the scale-optimized mean squared error on the target grid, evaluated
    through a vectorized dose verified against the ladder algebra.

    Returns the best genome ever seen (its scale set to the optimal
    least-squares value) and the per-generation best-fitness trace; entry
    0 is the initial population, so the array has generations+1 entries
    and is non-increasing.  Fully deterministic for a given seed: every
    individual draws from a stream derived from (seed, generation, index).
    """
    if config is None:
        config = GAConfig()
    k = len(basis)
    phis = target.phis
    p = target.samples
    matrix = _amplitude_matrix(basis, phis)
    _verify_fast_path(matrix, basis, phis)

    def evaluate(vec: np.ndarray) -> float:
        alpha = vec[0::2] + 1j * vec[1::2]
        u = np.abs(alpha @ matrix) ** 2
        return _scaled_mse(u, p)

    pop = []
    for i in range(config.population):
        rng = _child_rng(config.seed, 0, i)
        pop.append(_normalize_chromosome(rng.standard_normal(2 * k)))
    fits = np.array([evaluate(v) for v in pop])

    best_idx = int(np.argmin(fits))
    best_vec = pop[best_idx].copy()
    best_fit = float(fits[best_idx])
    trace = [best_fit]

    for gen in range(1, config.generations + 1):
        order = np.argsort(fits, kind="stable")
        new_pop = [pop[j].copy() for j in order[: config.elite_count]]
        for i in range(config.elite_count, config.population):
            rng = _child_rng(config.seed, gen, i)

            def pick_parent():
                c = rng.integers(config.population, size=2)
                return pop[c[0]] if fits[c[0]] <= fits[c[1]] else pop[c[1]]

            parent_one = pick_parent()
            parent_two = pick_parent()
            if rng.random() < config.crossover_rate:
                t = rng.random()
                child = t * parent_one + (1.0 - t) * parent_two
            else:
                child = parent_one.copy()
            child = child + rng.normal(0.0, config.mutation_sigma, 2 * k)
            new_pop.append(_normalize_chromosome(child))
        pop = new_pop
        fits = np.array([evaluate(v) for v in pop])
        gen_best = int(np.argmin(fits))
        if fits[gen_best] < best_fit:
            best_fit = float(fits[gen_best])
            best_vec = pop[gen_best].copy()
        trace.append(best_fit)

    alpha = _normalize_chromosome(best_vec)
    alpha = alpha[0::2] + 1j * alpha[1::2]
    u = np.abs(alpha @ matrix) ** 2
    best = SynthesisGenome(alpha, _optimal_scale(u, p))
    return best, np.asarray(trace)


# ---------------------------------------------------------------------------
# classical benchmark
# ---------------------------------------------------------------------------

def _classical_candidates(cos_term: np.ndarray, target: np.ndarray):
    """Optimal (a, b) for fixed theta0, projected onto a >= b >= 0."""
    g = len(target)
    mc = float(cos_term.sum()) / g
    mcc = float(cos_term @ cos_term) / g
    mp = float(target.sum()) / g
    mpc = float(target @ cos_term) / g
    candidates = []
    # Unconstrained stationary point of the 2x2 normal equations.
    det = mcc - mc * mc
    if det > 1e-30:
        b = (mpc - mc * mp) / det
        a = mp - b * mc
        if a >= b >= 0.0:
            candidates.append((a, b))
    # Face b = 0 (flat exposure).
    candidates.append((max(mp, 0.0), 0.0))
    # Face a = b (fringe touching zero).
    base = 1.0 + cos_term
    denom = float(base @ base)
    if denom > 0.0:
        ab = max(float(base @ target) / denom, 0.0)
        candidates.append((ab, ab))
    best = None
    for a, b in candidates:
        resid = a + b * cos_term - target
        mse = float(resid @ resid) / g
        if best is None or mse < best[0]:
            best = (mse, a, b)
    return best


def best_classical_fit(target: TargetPattern) -> ClassicalFit:
    """Best constrained single-fringe exposure a + b cos(2 phi + theta0).

    The physical family has a >= b >= 0 (nonnegative dose, DC at least as
    large as the fringe amplitude).  For each theta0 the optimal (a, b)
    follow from a 2x2 linear solve projected onto that cone; theta0 is
    scanned coarsely over [0, 2 pi) and polished by ternary search around
    the best cell.
    """
    phis = target.phis
    p = target.samples

    def mse_at(theta: float):
        return _classical_candidates(np.cos(2.0 * phis + theta), p)

    coarse = 1024
    thetas = np.arange(coarse) * (2.0 * np.pi / coarse)
    best_theta = 0.0
    best = None
    for theta in thetas:
        cand = mse_at(float(theta))
        if best is None or cand[0] < best[0]:
            best = cand
            best_theta = float(theta)

    step = 2.0 * np.pi / coarse
    lo, hi = best_theta - step, best_theta + step
    for _ in range(90):
        third = (hi - lo) / 3.0
        t1, t2 = lo + third, hi - third
        if mse_at(t1)[0] <= mse_at(t2)[0]:
            hi = t2
        else:
            lo = t1
    theta = 0.5 * (lo + hi)
    mse, a, b = mse_at(theta)
    if mse >= best[0]:  # keep the coarse winner if refinement didn't help
        mse, a, b = best
        theta = best_theta
    theta = float(theta % (2.0 * np.pi))
    return ClassicalFit(a=a, b=b, theta0=theta, error=mse)
