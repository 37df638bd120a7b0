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

from module.common.errors import ModelInputError, SheetDomainError
from module.common.logging import get_logger
from module.model.channels import CouplingChannel, LorentzianChannel, FlatWindowChannel

log = get_logger()

HALF_LINE = "half_line"
FULL_LINE = "full_line"

valid_spectrum_kinds = [HALF_LINE, FULL_LINE]


@dataclass(frozen=True)
class LevelSet:
    """
    energies of the discrete levels, i.e. the diagonal of the discrete part of H0
    """

    energies: tuple = field(default_factory=tuple)
    labels: tuple = field(default_factory=tuple)

    def __post_init__(self):

        try:
            energies = tuple(float(x) for x in self.energies)
        except (TypeError, ValueError) as e:
            raise ModelInputError(f"level energies must be real numbers: {e}")

        if len(energies) == 0:
            raise ModelInputError("a model needs at least one discrete level")

        if not all(math.isfinite(x) for x in energies):
            raise ModelInputError(f"level energies must be finite, got {energies}")

        labels = tuple(str(x) for x in self.labels)
        if len(labels) == 0:
            labels = tuple(f"level_{i + 1}" for i in range(len(energies)))

        if len(labels) != len(energies):
            raise ModelInputError(f"got {len(labels)} labels for {len(energies)} levels")

        if len(set(labels)) != len(labels):
            raise ModelInputError(f"level labels must be unique, got {labels}")

        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.energies)

    @property
    def degenerate_pairs(self) -> list:
        """
        Returns
        -------
        list: index pairs (i, j), i < j, of levels sharing the same energy
        """
        return [(i, j) for i in range(len(self)) for j in range(i + 1, len(self))
                if self.energies[i] == self.energies[j]]

    @property
    def degenerate(self) -> bool:
        return len(self.degenerate_pairs) > 0


@dataclass(frozen=True)
class SpectralDensityModel:
    """
    A Lee-Friedrichs model instance: discrete levels coupled to continua
    through channels. The spectral density is
        ω(λ) = Σ_c f_c(λ) g_c g_c†
    Objects are immutable, derived matrices are cached on first use.
    """

    levels: LevelSet
    channels: tuple = field(default_factory=tuple)
    spectrum_kind: str = FULL_LINE
    name: str = "model"

    def __post_init__(self):

        if not isinstance(self.levels, LevelSet):
            raise ModelInputError("levels must be a LevelSet")

        channels = tuple(self.channels)
        for channel in channels:
            if not isinstance(channel, CouplingChannel):
                raise ModelInputError(f"'{channel}' is not a coupling channel")

            if len(channel.g) != len(self.levels):
                raise ModelInputError(f"channel '{channel.name}' has {len(channel.g)} coupling amplitudes, "
                                      f"model has {len(self.levels)} levels")

        if len(set(x.name for x in channels)) != len(channels):
            raise ModelInputError("channel names must be unique")

        if self.spectrum_kind not in valid_spectrum_kinds:
            raise ModelInputError(f"spectrum must be one of {valid_spectrum_kinds}, got '{self.spectrum_kind}'")

        if self.spectrum_kind == HALF_LINE:
            for channel in channels:
                if channel.support[0] < 0:
                    raise ModelInputError(f"half_line spectrum requires every support inside [0, inf), "
                                          f"channel '{channel.name}' has support {channel.support}")

        object.__setattr__(self, "channels", channels)

        if self.levels.degenerate:
            log.warning(f"Model '{self.name}' has degenerate levels {self.levels.degenerate_pairs}, "
                        f"projectors of colliding branches can't be constructed")

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    @cached_property
    def h0(self) -> np.ndarray:
        """
        discrete part of the unperturbed Hamiltonian
        """
        return np.diag(np.array(self.levels.energies, dtype=float)).astype(complex)

    @cached_property
    def scale(self) -> float:
        """
        characteristic energy scale used to make tolerances relative
        """
        energies = np.array(self.levels.energies)
        candidates = [float(np.max(np.abs(energies))), float(np.ptp(energies))]
        candidates += [x.energy_scale for x in self.channels]
        candidates += [float(np.sum(np.abs(x.coupling) ** 2)) for x in self.channels if x.is_markovian]
        scale = max(candidates)
        return scale if scale > 0 else 1.0

    @property
    def lorentzian_channels(self) -> list:
        return [x for x in self.channels if isinstance(x, LorentzianChannel)]

    @property
    def is_continuable(self) -> bool:
        """
        True if every channel has a second sheet continuation
        """
        return all(x.kind in (FlatWindowChannel.kind, LorentzianChannel.kind) for x in self.channels)

    @property
    def is_markovian(self) -> bool:
        return len(self.channels) > 0 and all(x.is_markovian for x in self.channels)

    @property
    def is_meromorphic(self) -> bool:
        """
        True if the reduced resolvent has no branch point, so the pole sum is exact
        """
        return all(isinstance(x, LorentzianChannel) or x.is_markovian for x in self.channels)

    @property
    def has_coupling(self) -> bool:
        return any(np.any(x.coupling != 0) for x in self.channels)

    @property
    def is_real(self) -> bool:
        return all(x.is_real for x in self.channels)

    @property
    def continuum_edge(self):
        """
        Returns
        -------
        float: lowest finite support edge, the branch point of a half_line model (None if there is none)
        """
        edges = [x.support[0] for x in self.channels if math.isfinite(x.support[0])]
        if len(edges) == 0:
            return None
        return min(edges)

    @property
    def branch_points(self) -> list:
        return sorted(set(e for x in self.channels for e in x.branch_points))

    def in_any_support(self, lam: float) -> bool:
        return any(bool(x.in_support(lam)) for x in self.channels)


def omega_at(model: SpectralDensityModel, lam: float) -> np.ndarray:
    """
    spectral density matrix at a real energy

    Parameters
    ----------
    model: SpectralDensityModel
        model to evaluate
    lam: float
        real energy

    Returns
    -------
    numpy.ndarray: N×N Hermitian positive semidefinite matrix, zero outside all supports
    """

    try:
        lam = float(lam)
    except (TypeError, ValueError):
        raise ModelInputError(f"energy '{lam}' is not a real number")

    if not math.isfinite(lam):
        raise ModelInputError(f"spectral density can only be evaluated at finite energies, got {lam}")

    result = np.zeros((model.n_levels, model.n_levels), dtype=complex)
    for channel in model.channels:
        result += float(channel.line_shape(lam)) * channel.outer()

    return result


def omega_continuation(model: SpectralDensityModel, z: complex) -> np.ndarray:
    """
    analytic continuation of the spectral density into the lower half plane

    Parameters
    ----------
    model: SpectralDensityModel
        model to evaluate
    z: complex
        point with Im z <= 0

    Returns
    -------
    numpy.ndarray: N×N complex matrix
    """

    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ModelInputError(f"z must be finite, got {z}")

    if z.imag > 0:
        raise SheetDomainError(f"spectral density continuation is defined for Im z <= 0, got {z}")

    result = np.zeros((model.n_levels, model.n_levels), dtype=complex)
    for channel in model.channels:
        result += complex(channel.continuation(z)) * channel.outer()

    return result


def total_strength(model: SpectralDensityModel) -> np.ndarray:
    """
    Returns
    -------
    numpy.ndarray: ∫ω(λ)dλ, entries are infinite for unbounded flat channels with nonzero coupling
    """

    result = np.zeros((model.n_levels, model.n_levels), dtype=complex)
    for channel in model.channels:
        outer = channel.outer()
        strength = channel.strength()
        if math.isinf(strength):
            result = result + np.where(outer != 0, np.inf, 0.0)
        else:
            result = result + strength * outer

    return result

# EOF
