"""Closed-form wavefunctions, energies, and uncertainty products.

Everything here is an exact expression evaluated in double precision; the
independent numerical checks live in `oracle` and `eigensolver`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .grids import GridSpec, SampledFunction, quad
from .model import (
    Box,
    Oscillator,
    Ring,
    RingSuperposition,
    predicted_node_count,
    validate_state,
)

__all__ = [
    "ExpectationSet",
    "UncertaintyRecord",
    "box_psi",
    "box_energy",
    "box_expectations",
    "box_uncertainties",
    "ring_psi",
    "ring_state_values",
    "ring_energy",
    "ring_density",
    "ring_lz_stats",
    "ring_theta_stats",
    "ring_uncertainties",
    "oscillator_energy",
    "oscillator_expectations",
    "oscillator_uncertainties",
]

# Uniform density on an interval of width w has standard deviation w/sqrt(12).
UNIFORM_THETA_SPREAD = 2.0 * math.pi / math.sqrt(12.0)


@dataclass(frozen=True)
class ExpectationSet:
    """First and second moments of position and momentum (or their
    angular analogues theta and L_z for ring states)."""

    mean_x: float
    mean_x2: float
    mean_p: float
    mean_p2: float
    provenance: str = "analytic"

    def __post_init__(self):
        if self.mean_x2 - self.mean_x**2 < -1e-12:
            raise DomainError("negative position variance")
        if self.mean_p2 - self.mean_p**2 < -1e-12:
            raise DomainError("negative momentum variance")


@dataclass(frozen=True)
class UncertaintyRecord:
    """Uncertainties of a conjugate pair plus bookkeeping for one state.

    delta_q is the position spread (Delta x, or Delta theta on the ring);
    delta_p its conjugate (Delta p, or Delta L_z).  `bound` is hbar/2.
    nodes_measured is filled by the counting paths, None otherwise.
    """

    delta_q: float
    delta_p: float
    product: float
    bound: float
    energy: float
    nodes_predicted: int
    nodes_measured: int | None = None
    provenance: str = "analytic"

    def __post_init__(self):
        if self.delta_q < 0 or self.delta_p < 0:
            raise DomainError("uncertainties must be nonnegative")


# --- particle in a box ------------------------------------------------------


def box_psi(spec: Box, n: int, x):
    """Normalized box eigenfunction sqrt(2/a) sin(n pi x / a) on [0, a]."""
    n = validate_state(spec, n)
    a = spec.length
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(x > a):
        raise DomainError(f"x must lie in [0, {a}]")
    out = np.sqrt(2.0 / a) * np.sin(n * np.pi * x / a)
    return out if out.ndim else float(out)


def box_energy(spec: Box, n: int) -> float:
    """E_n = hbar^2 n^2 pi^2 / (2 m a^2)."""
    n = validate_state(spec, n)
    hbar = spec.constants.hbar
    return hbar**2 * n**2 * math.pi**2 / (2.0 * spec.mass * spec.length**2)


def box_expectations(spec: Box, n: int) -> ExpectationSet:
    """<x> = a/2, <x^2> = a^2 (1/3 - 1/(2 n^2 pi^2)), <p> = 0,
    <p^2> = hbar^2 n^2 pi^2 / a^2."""
    n = validate_state(spec, n)
    a = spec.length
    hbar = spec.constants.hbar
    return ExpectationSet(
        mean_x=a / 2.0,
        mean_x2=a**2 * (1.0 / 3.0 - 1.0 / (2.0 * n**2 * math.pi**2)),
        mean_p=0.0,
        mean_p2=hbar**2 * n**2 * math.pi**2 / a**2,
    )


def box_uncertainties(spec: Box, n: int) -> UncertaintyRecord:
    """Delta x = a sqrt(1/12 - 1/(2 n^2 pi^2)), Delta p = hbar n pi / a."""
    n = validate_state(spec, n)
    a = spec.length
    hbar = spec.constants.hbar
    dx = a * math.sqrt(1.0 / 12.0 - 1.0 / (2.0 * n**2 * math.pi**2))
    dp = hbar * n * math.pi / a
    return UncertaintyRecord(
        delta_q=dx,
        delta_p=dp,
        product=dx * dp,
        bound=hbar / 2.0,
        energy=box_energy(spec, n),
        nodes_predicted=predicted_node_count(spec, n),
    )


# --- particle on a ring -----------------------------------------------------


def ring_psi(spec: Ring, m: int, theta):
    """Ring eigenfunction e^{i m theta} / sqrt(2 pi); periodic in theta."""
    m = validate_state(spec, m)
    theta = np.asarray(theta, dtype=float)
    out = np.exp(1j * m * theta) / np.sqrt(2.0 * np.pi)
    return out if out.ndim else complex(out)


def ring_state_values(state: int | RingSuperposition, theta) -> np.ndarray:
    """Vectorized amplitude of a definite-m state or a superposition."""
    theta = np.asarray(theta, dtype=float)
    if isinstance(state, RingSuperposition):
        out = np.zeros(theta.shape, dtype=complex)
        for m, c in state.terms:
            out += c * np.exp(1j * m * theta)
        return out / np.sqrt(2.0 * np.pi)
    return np.exp(1j * int(state) * theta) / np.sqrt(2.0 * np.pi)


def ring_energy(spec: Ring, m: int) -> float:
    """E_m = m^2 hbar^2 / (2 I)."""
    m = validate_state(spec, m)
    hbar = spec.constants.hbar
    return m**2 * hbar**2 / (2.0 * spec.moment_of_inertia)


def ring_density(spec: Ring, m: int, theta):
    """|psi_m|^2 = 1/(2 pi), independent of theta and m."""
    validate_state(spec, m)
    theta = np.asarray(theta, dtype=float)
    out = np.full(theta.shape, 1.0 / (2.0 * np.pi))
    return out if out.ndim else float(out)


def ring_lz_stats(spec: Ring, state: int | RingSuperposition) -> tuple[float, float]:
    """Mean and spread of L_z from the expansion coefficients.

    A definite m state gives (m hbar, 0); a superposition gives the
    discrete mean and standard deviation over the |c_k|^2 distribution.
    """
    hbar = spec.constants.hbar
    if isinstance(state, RingSuperposition):
        weights = [(m, abs(c) ** 2) for m, c in state.terms]
        mean = sum(w * m for m, w in weights)
        var = sum(w * (m - mean) ** 2 for m, w in weights)
        return hbar * mean, hbar * math.sqrt(max(var, 0.0))
    m = validate_state(spec, state)
    return hbar * m, 0.0


def ring_theta_stats(
    spec: Ring, state: int | RingSuperposition, points: int = 4097
) -> tuple[float, float]:
    """Naive interval statistics of theta on the fixed branch [0, 2 pi).

    mean = integral theta rho(theta), Delta theta = sqrt(<theta^2> - mean^2),
    computed by Simpson quadrature of the density.  For any definite m the
    density is uniform and Delta theta = 2 pi / sqrt(12).  The statistic is
    branch-dependent by construction.
    """
    grid = GridSpec(0.0, 2.0 * np.pi, points, "open")
    theta = grid.x
    rho = np.abs(ring_state_values(state, theta)) ** 2
    norm = quad(SampledFunction(grid, rho))
    rho = rho / norm
    mean = quad(SampledFunction(grid, theta * rho))
    var = quad(SampledFunction(grid, (theta - mean) ** 2 * rho))
    return float(mean), float(math.sqrt(max(var, 0.0)))


def ring_uncertainties(spec: Ring, m: int) -> UncertaintyRecord:
    """Delta theta and Delta L_z for a definite-m ring state.

    No Heisenberg comparison is meaningful here: Delta L_z is exactly zero
    while the naive Delta theta stays finite, so callers must treat the
    bound column as informational only.
    """
    m = validate_state(spec, m)
    _, dlz = ring_lz_stats(spec, m)
    _, dtheta = ring_theta_stats(spec, m)
    return UncertaintyRecord(
        delta_q=dtheta,
        delta_p=dlz,
        product=dtheta * dlz,
        bound=spec.constants.hbar / 2.0,
        energy=ring_energy(spec, m),
        nodes_predicted=predicted_node_count(spec, m),
    )


# --- harmonic oscillator ----------------------------------------------------


def oscillator_energy(spec: Oscillator, n: int) -> float:
    """E_n = (n + 1/2) hbar omega."""
    n = validate_state(spec, n)
    return (n + 0.5) * spec.constants.hbar * spec.omega


def oscillator_expectations(spec: Oscillator, n: int) -> ExpectationSet:
    """<x> = <p> = 0 by symmetry; <x^2> = hbar (n + 1/2)/(m w),
    <p^2> = m hbar w (n + 1/2)."""
    n = validate_state(spec, n)
    hbar = spec.constants.hbar
    return ExpectationSet(
        mean_x=0.0,
        mean_x2=hbar * (n + 0.5) / (spec.mass * spec.omega),
        mean_p=0.0,
        mean_p2=spec.mass * hbar * spec.omega * (n + 0.5),
    )


def oscillator_uncertainties(spec: Oscillator, n: int) -> UncertaintyRecord:
    """Delta x Delta p = hbar (n + 1/2); equality with the bound at n = 0."""
    n = validate_state(spec, n)
    hbar = spec.constants.hbar
    dx = math.sqrt(hbar * (n + 0.5) / (spec.mass * spec.omega))
    dp = math.sqrt(spec.mass * hbar * spec.omega * (n + 0.5))
    return UncertaintyRecord(
        delta_q=dx,
        delta_p=dp,
        product=hbar * (n + 0.5),
        bound=hbar / 2.0,
        energy=oscillator_energy(spec, n),
        nodes_predicted=predicted_node_count(spec, n),
    )
