# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import numpy as np
from scipy.linalg import expm

from module.common.errors import ModelInputError
from module.common.logging import get_logger
from module.evolution.memory import time_grid
from module.evolution.propagator import ReducedPropagator
from module.model import SpectralDensityModel, omega_at

log = get_logger()

SCHEME_MARKOVIAN = "matrix exponential of a constant generator"


def _checked_density(model, omega):

    omega = np.asarray(omega, dtype=complex)
    if omega.ndim == 0 and model.n_levels == 1:
        omega = omega.reshape(1, 1)

    if omega.shape != (model.n_levels, model.n_levels):
        raise ModelInputError(f"constant spectral density of shape {omega.shape} doesn't match "
                              f"a model with {model.n_levels} levels")

    if not np.all(np.isfinite(omega)):
        raise ModelInputError("constant spectral density must be finite")

    return omega


def markovian_generator(model: SpectralDensityModel, omega) -> np.ndarray:
    """
    constant generator -iH0 - πω̂ of the local in time master equation
    """

    return -1j * model.h0 - np.pi * _checked_density(model, omega)


def markovian_propagator(model: SpectralDensityModel, omega, t: float) -> np.ndarray:
    """
    U(t) = exp[(-iH0 - πω̂)t] for a single time
    """

    return expm(markovian_generator(model, omega) * float(t))


def solve_markovian(model: SpectralDensityModel, omega, t_max: float = 10.0,
                    step: float = 0.05) -> ReducedPropagator:
    """
    Evolve with a constant generator.

    Parameters
    ----------
    model: SpectralDensityModel
        supplies H0
    omega: N×N matrix
        constant spectral density (unbounded flat window) or resonant density from 'build_resonant_density'
    t_max: float
        end of the time grid
    step: float
        grid spacing, the exponential is evaluated independently at every grid time

    Returns
    -------
    ReducedPropagator: exact up to the roundoff of scipy.linalg.expm
    """

    if not isinstance(model, SpectralDensityModel):
        raise ModelInputError("Markovian solver needs a SpectralDensityModel")

    generator = markovian_generator(model, omega)
    times = time_grid(t_max, step)

    values = np.array([expm(generator * t) for t in times])

    log.debug(f"Markovian evolution on {len(times)} grid times up to t = {times[-1]}")

    return ReducedPropagator(times=times, values=values, step=float(step), scheme=SCHEME_MARKOVIAN,
                             order=0, error_estimate=0.0)


def build_resonant_density(model: SpectralDensityModel) -> np.ndarray:
    """
    Resonant spectral density, column γ holds ω(λ_γ)[:, γ]. The result is in
    general not Hermitian.
    """

    energies = model.levels.energies
    result = np.zeros((model.n_levels, model.n_levels), dtype=complex)

    for column, energy in enumerate(energies):

        if not model.in_any_support(energy):
            log.warning(f"Level '{model.levels.labels[column]}' at {energy} lies outside every channel "
                        f"support, its resonant density column is zero")
            continue

        result[:, column] = omega_at(model, energy)[:, column]

    return result


def window_integral(detuning: float, duration: float) -> float:
    """
    ∫_{-T/2}^{T/2} exp(-iΔτ) dτ = 2 sin(ΔT/2)/Δ, which tends to T for Δ → 0
    """

    # np.sinc(x) = sin(πx)/(πx)
    return float(duration * np.sinc(detuning * duration / (2 * np.pi)))

# EOF
