# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.linalg import eigh

from module.common.errors import ModelInputError, ConfigurationError
from module.common.logging import get_logger
from module.model import SpectralDensityModel, FlatWindowChannel, LorentzianChannel, OhmicChannel

log = get_logger()

GRID_GAUSS = "gauss"
GRID_UNIFORM = "uniform"
valid_grid_rules = [GRID_GAUSS, GRID_UNIFORM]

# largest continuum size handled by dense diagonalization
max_grid_size = 20000

# continuum nodes per discrete level at least
min_nodes_per_level = 10

# reported tail mass above this value triggers a warning
tail_mass_limit = 1e-8


@dataclass(frozen=True, eq=False)
class DiscretizedHamiltonian:
    """
    Finite Lee-Friedrichs Hamiltonian. The first N coordinates are the discrete
    levels, the remaining M coordinates are continuum nodes λ_m. 'weights' holds
    the quadrature weights times the line shape, f(λ_m)·w_m. Every channel owns
    its own block of nodes and

        H[α, m] = g_α √(f(λ_m) w_m)

    so Σ_m |H[α, m]|² reproduces ∫ω_αα(λ)dλ.
    """

    model: SpectralDensityModel
    matrix: np.ndarray
    nodes: np.ndarray
    weights: np.ndarray
    node_channels: np.ndarray
    grid_rule: str
    windows: dict = field(default_factory=dict)
    tail_mass: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    @property
    def n_levels(self) -> int:
        return self.model.n_levels

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def grid_size(self) -> int:
        return len(self.nodes)

    @property
    def projector(self) -> np.ndarray:
        """
        N×(N+M) isometry onto the discrete levels
        """
        return np.eye(self.n_levels, self.dim, dtype=complex)

    @cached_property
    def eigensystem(self):
        """
        eigenvalues and the discrete rows of the eigenvectors, computed once
        """

        log.debug(f"Diagonalizing discretized Hamiltonian of dimension {self.dim}")
        energies, vectors = eigh(self.matrix)

        return energies, np.ascontiguousarray(vectors[:self.n_levels, :])

    @cached_property
    def recurrence_time(self) -> float:
        """
        2π over the largest local eigenvalue spacing around the level energies
        """

        energies, _ = self.eigensystem
        if self.grid_size == 0:
            return math.inf

        spacings = list()
        for level in self.model.levels.energies:
            nearest = np.sort(energies[np.argsort(np.abs(energies - level))[:11]])
            if len(nearest) > 1:
                spacings.append(float(np.median(np.diff(nearest))))

        spacing = max(spacings, default=0.0)
        if spacing <= 0:
            return math.inf

        return 2 * math.pi / spacing

    def reduced_propagator(self, t: float) -> np.ndarray:
        """
        P exp(-iHt) P at a single time
        """

        energies, rows = self.eigensystem

        return (rows * np.exp(-1j * energies * float(t))) @ rows.conj().T


def _gauss_rule(size, lower, upper):

    x, w = np.polynomial.legendre.leggauss(size)

    return 0.5 * (upper - lower) * x + 0.5 * (upper + lower), 0.5 * (upper - lower) * w


def _uniform_rule(size, lower, upper):

    width = (upper - lower) / size

    return lower + width * (np.arange(size) + 0.5), np.full(size, width)


def _channel_grid(channel, size, grid_rule, truncation, ohmic_cutoff):
    """
    Returns
    -------
    tuple: nodes λ_m, products f(λ_m)·w_m, window, tail mass
    """

    rule = _gauss_rule if grid_rule == GRID_GAUSS else _uniform_rule

    if isinstance(channel, LorentzianChannel):
        # λ = μ + γ tan θ turns f(λ)dλ into dθ/π
        theta, weights = rule(size, -0.5 * math.pi, 0.5 * math.pi)
        nodes = channel.center + channel.width * np.tan(theta)
        return nodes, weights / math.pi, (-math.inf, math.inf), 0.0

    if isinstance(channel, OhmicChannel):
        u, weights = rule(size, 0.0, float(ohmic_cutoff))
        nodes = channel.cutoff * u
        tail = float(channel.tail_mass(ohmic_cutoff))
        return nodes, channel.line_shape(nodes) * channel.cutoff * weights, (0.0, nodes.max()), tail

    if isinstance(channel, FlatWindowChannel):
        lower, upper = channel.support
        if channel.is_markovian:
            if truncation is None:
                raise ConfigurationError(f"channel '{channel.name}' has an unbounded support, "
                                         f"discretization needs a truncation window")
            lower, upper = -float(truncation), float(truncation)
            tail = math.inf
        else:
            tail = 0.0
        nodes, weights = rule(size, lower, upper)
        return nodes, weights, (lower, upper), tail

    raise ConfigurationError(f"no discretization known for channel kind '{channel.kind}'")


def discretize(model: SpectralDensityModel, grid_m: int, grid_rule: str = GRID_GAUSS, truncation: float = None,
               ohmic_cutoff: float = 40.0) -> DiscretizedHamiltonian:
    """
    Discretize the continuum of a model into a finite Hermitian matrix.

    The M continuum nodes are shared evenly between the channels. Lorentzian
    channels use the angle variable and need no truncation, ohmic channels are
    cut at u = ohmic_cutoff and report the missing tail mass Γ(s+1, u)/Γ(s+1),
    unbounded flat channels are cut to [-truncation, truncation].

    Parameters
    ----------
    model: SpectralDensityModel
        model to discretize
    grid_m: int
        total number of continuum nodes M
    grid_rule: str
        'gauss' (Gauss-Legendre per support interval) or 'uniform' (midpoints, box semantics)
    truncation: float
        half width of the window replacing an unbounded flat support
    ohmic_cutoff: float
        upper limit of u = λ/λc for ohmic channels

    Returns
    -------
    DiscretizedHamiltonian: the finite matrix and its grid
    """

    if not isinstance(model, SpectralDensityModel):
        raise ModelInputError("discretize needs a SpectralDensityModel")

    grid_rule = str(grid_rule).lower()
    if grid_rule not in valid_grid_rules:
        raise ModelInputError(f"unknown grid rule '{grid_rule}', valid rules: {', '.join(valid_grid_rules)}")

    grid_m = int(grid_m)
    if grid_m < min_nodes_per_level * model.n_levels:
        raise ModelInputError(f"grid size M = {grid_m} must be at least {min_nodes_per_level}·N = "
                              f"{min_nodes_per_level * model.n_levels}")

    if grid_m > max_grid_size:
        raise ModelInputError(f"grid size M = {grid_m} exceeds the dense diagonalization limit {max_grid_size}")

    if truncation is not None and not float(truncation) > 0:
        raise ModelInputError(f"truncation window must be > 0, got {truncation}")

    n_levels = model.n_levels
    warnings = list()
    windows = dict()
    tail_mass = dict()

    n_channels = len(model.channels)
    if n_channels == 0:
        log.warning(f"Model '{model.name}' has no channels, the discretized continuum is empty")
        sizes = list()
    else:
        sizes = [grid_m // n_channels + (1 if i < grid_m % n_channels else 0) for i in range(n_channels)]

    all_nodes, all_weights, all_channels, columns = list(), list(), list(), list()

    for index, (channel, size) in enumerate(zip(model.channels, sizes)):

        nodes, weighted_shape, window, tail = _channel_grid(channel, size, grid_rule, truncation, ohmic_cutoff)

        windows[channel.name] = window
        tail_mass[channel.name] = tail

        if tail > tail_mass_limit and not (math.isinf(tail) and not np.any(channel.coupling)):
            message = f"channel '{channel.name}' truncated to {window}, missing tail mass {tail:.3g}"
            log.warning(message)
            warnings.append(message)

        all_nodes.append(nodes)
        all_weights.append(weighted_shape)
        all_channels.append(np.full(size, index))
        columns.append(np.outer(channel.coupling, np.sqrt(np.clip(weighted_shape, 0, None))))

    nodes = np.concatenate(all_nodes) if all_nodes else np.zeros(0)
    weights = np.concatenate(all_weights) if all_weights else np.zeros(0)
    node_channels = np.concatenate(all_channels) if all_channels else np.zeros(0, dtype=int)

    dim = n_levels + len(nodes)
    matrix = np.zeros((dim, dim), dtype=complex)
    matrix[:n_levels, :n_levels] = model.h0
    matrix[n_levels:, n_levels:] = np.diag(nodes)

    if len(columns) > 0:
        coupling = np.hstack(columns)
        matrix[:n_levels, n_levels:] = coupling
        matrix[n_levels:, :n_levels] = coupling.conj().T

    log.debug(f"Discretized model '{model.name}' with {len(nodes)} {grid_rule} nodes on {n_channels} channel(s)")

    return DiscretizedHamiltonian(model=model, matrix=matrix, nodes=nodes, weights=weights,
                                  node_channels=node_channels, grid_rule=grid_rule, windows=windows,
                                  tail_mass=tail_mass, warnings=warnings)

# EOF
