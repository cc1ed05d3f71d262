"""Node counting on sampled wavefunctions and density-flatness checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError
from .grids import SampledFunction

__all__ = ["NodeReport", "count_nodes", "density_flatness"]

# Samples below this fraction of the peak magnitude are "touching zero":
# they are bridged, and a graze without a sign change is not a node.
ZERO_RTOL = 1e-9


@dataclass(frozen=True)
class NodeReport:
    """Detected sign-change nodes of a real-valued sample."""

    count: int
    locations: np.ndarray
    boundary_excluded: int


def count_nodes(f: SampledFunction, zero_rtol: float = ZERO_RTOL) -> NodeReport:
    """Count strict sign changes of the (real part of the) samples.

    Samples with magnitude below zero_rtol * max|f| are bridged: a node is
    a sign change between the significant samples on either side, located
    by linear interpolation.  Zeros within one grid cell of a Dirichlet
    wall are excluded from the count and tallied separately.
    """
    y = np.real(np.asarray(f.values, dtype=complex))
    x = f.grid.x
    peak = float(np.max(np.abs(y)))
    if peak == 0.0:
        raise DegenerateError("samples are identically zero")
    eps = zero_rtol * peak
    significant = np.flatnonzero(np.abs(y) > eps)
    if significant.size < 3:
        raise DegenerateError("fewer than 3 samples above the zero threshold")
    # Open grids truncate decaying tails, so a mostly-below-threshold sample
    # is normal there; confined states must fill their domain.
    if f.grid.boundary != "open" and significant.size < y.size / 2.0:
        raise DegenerateError(
            f"{y.size - significant.size} of {y.size} samples below the zero "
            "threshold; function is numerically zero on most of the grid"
        )

    ys = y[significant]
    xs = x[significant]
    if f.grid.boundary == "periodic":
        # one full period: close the loop so a zero in the wrap cell counts
        period = f.grid.upper - f.grid.lower
        ys = np.append(ys, ys[0])
        xs = np.append(xs, xs[0] + period)
    flips = np.flatnonzero(np.sign(ys[:-1]) != np.sign(ys[1:]))
    locations = xs[flips] - ys[flips] * (xs[flips + 1] - xs[flips]) / (
        ys[flips + 1] - ys[flips]
    )

    excluded = 0
    if f.grid.boundary == "periodic":
        period = f.grid.upper - f.grid.lower
        locations = f.grid.lower + (locations - f.grid.lower) % period
    if f.grid.boundary == "dirichlet":
        h = f.grid.h
        keep = (locations > f.grid.lower + h) & (locations < f.grid.upper - h)
        excluded = int(np.size(locations) - np.count_nonzero(keep))
        locations = locations[keep]

    return NodeReport(
        count=int(locations.size),
        locations=np.sort(locations),
        boundary_excluded=excluded,
    )


def density_flatness(rho: SampledFunction) -> tuple[float, bool]:
    """Max deviation of a density from its mean, and whether it is nodeless.

    Returns (max|rho - mean(rho)|, min(rho) > 0).  For any definite-m ring
    state the sampled density is exactly constant and strictly positive.
    """
    values = np.real(np.asarray(rho.values, dtype=complex))
    if np.ptp(values) == 0.0:
        # exactly constant samples: zero deviation with no roundoff from the mean
        return 0.0, bool(values[0] > 0.0)
    mean = float(np.mean(values))
    max_dev = float(np.max(np.abs(values - mean)))
    return max_dev, bool(np.min(values) > 0.0)
