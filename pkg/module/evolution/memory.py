# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

"""
Trapezoidal product integration of the reduced master equation

    dU/dt = -i H0 U(t) - ∫_0^t α(t-τ) U(τ) dτ ,   U(0) = 1

Delta correlated (unbounded flat) channels enter as the local term -Γ U(t)
with Γ = π Σ g g†.
"""

import math

import numpy as np

from module.common.errors import ModelInputError, IntegrationAbortedError
from module.common.logging import get_logger
from module.evolution.propagator import ReducedPropagator
from module.kernel import CorrelationKernel
from module.model import SpectralDensityModel

log = get_logger()

SCHEME_SCHROEDINGER = "trapezoidal product integration (rotating frame)"
SCHEME_INTERACTION = "trapezoidal product integration (interaction picture)"

# ‖α(0)‖·step² above this value triggers a stability warning
stability_limit = 0.1

# log solver progress every this many steps
progress_interval = 1000


def time_grid(t_max, step):

    try:
        t_max, step = float(t_max), float(step)
    except (TypeError, ValueError):
        raise ModelInputError("t_max and step must be numbers")

    if not (math.isfinite(step) and step > 0):
        raise ModelInputError(f"step must be > 0, got {step}")

    if not (math.isfinite(t_max) and t_max >= step):
        raise ModelInputError(f"t_max ({t_max}) must be at least one step ({step})")

    n_steps = int(round(t_max / step))

    return np.arange(n_steps + 1) * step


def _history(alphas, values, n):
    """
    C_{n+1} = ½ α_{n+1} U_0 + Σ_{j=1}^{n} α_{n+1-j} U_j
    """

    history = 0.5 * alphas[n + 1] @ values[0]
    if n > 0:
        history = history + np.einsum("kij,kjl->il", alphas[n:0:-1], values[1:n + 1])

    return history


def _check_finite(matrix, n, times):

    if not np.all(np.isfinite(matrix)):
        raise IntegrationAbortedError(f"non-finite propagator at t = {times[n]}, last good step {n - 1}",
                                      last_good_index=n - 1)


def _stability_warning(alpha_0, step, warnings):

    measure = float(np.linalg.norm(alpha_0)) * step ** 2
    if measure > stability_limit:
        message = f"step {step} may be too large: ‖α(0)‖·step² = {measure:.3g} > {stability_limit}"
        log.warning(message)
        warnings.append(message)


def _march_rotating_frame(model, kernel, times, step):

    n_levels = model.n_levels
    identity = np.eye(n_levels, dtype=complex)

    # rotating frame at the mean level energy, an exact gauge transformation
    reference = float(np.mean(model.levels.energies))
    h_rotated = model.h0 - reference * identity
    local = 1j * h_rotated + kernel.markovian_rate_matrix()

    alphas = kernel.alpha_t_grid(times, regular_only=True) * np.exp(1j * reference * times)[:, None, None]

    values = np.zeros((len(times), n_levels, n_levels), dtype=complex)
    values[0] = identity

    system = identity + 0.5 * step * (local + 0.5 * step * alphas[0])
    derivative = -local @ values[0]

    for n in range(len(times) - 1):

        history = _history(alphas, values, n)
        rhs = values[n] + 0.5 * step * derivative - 0.5 * step ** 2 * history

        values[n + 1] = np.linalg.solve(system, rhs)
        _check_finite(values[n + 1], n + 1, times)

        derivative = -local @ values[n + 1] - step * (history + 0.5 * alphas[0] @ values[n + 1])

        if (n + 1) % progress_interval == 0:
            log.debug2(f"Volterra step {n + 1}/{len(times) - 1}, t = {times[n + 1]:.4g}")

    phases = np.exp(-1j * reference * times)

    return values * phases[:, None, None], alphas[0]


def _march_interaction_picture(model, kernel, times, step):

    n_levels = model.n_levels
    identity = np.eye(n_levels, dtype=complex)
    energies = np.array(model.levels.energies)
    rates = kernel.markovian_rate_matrix()

    alphas = kernel.alpha_t_grid(times, regular_only=True)

    interaction = np.zeros((len(times), n_levels, n_levels), dtype=complex)
    schroedinger = np.zeros_like(interaction)
    interaction[0] = schroedinger[0] = identity

    derivative = -rates.astype(complex)
    local = 0.5 * step * alphas[0] + rates

    for n in range(len(times) - 1):

        phase = np.exp(1j * energies * times[n + 1])
        rotate_in = phase[:, None]
        rotate_out = phase.conj()[None, :]

        history = _history(alphas, schroedinger, n)

        system = identity + 0.5 * step * rotate_in * local * rotate_out
        rhs = interaction[n] + 0.5 * step * derivative - 0.5 * step ** 2 * (rotate_in * history)

        interaction[n + 1] = np.linalg.solve(system, rhs)
        _check_finite(interaction[n + 1], n + 1, times)

        schroedinger[n + 1] = phase.conj()[:, None] * interaction[n + 1]
        derivative = -rotate_in * (step * history + local @ schroedinger[n + 1])

        if (n + 1) % progress_interval == 0:
            log.debug2(f"Volterra (interaction picture) step {n + 1}/{len(times) - 1}, t = {times[n + 1]:.4g}")

    return schroedinger, alphas[0]


def _solve(march, scheme, model, kernel, t_max, step, richardson):

    if not isinstance(model, SpectralDensityModel):
        raise ModelInputError("memory kernel solver needs a SpectralDensityModel")

    if kernel is None:
        kernel = CorrelationKernel(model)

    times = time_grid(t_max, step)
    warnings = list()

    if not model.has_coupling:
        log.debug("Model without coupling, returning the free evolution")
        phases = np.exp(-1j * np.outer(times, model.levels.energies))
        values = np.einsum("ki,ij->kij", phases, np.eye(model.n_levels))
        return ReducedPropagator(times=times, values=values, step=float(step), scheme=scheme, order=2,
                                 error_estimate=0.0, warnings=warnings)

    log.debug(f"Solving memory kernel equation: {len(times) - 1} steps of {step} up to t = {times[-1]}")

    values, alpha_0 = march(model, kernel, times, step)
    _stability_warning(alpha_0, step, warnings)

    error_estimate = None
    if richardson is True and len(times) >= 3:
        coarse, _ = march(model, kernel, times[::2], 2 * step)
        difference = np.linalg.norm(values[::2][:len(coarse)] - coarse, axis=(1, 2))
        # |U_h - U_2h| ≈ 3 e_h for a second order scheme, reported unscaled as a bound of e_h
        error_estimate = float(np.max(difference))
        log.debug(f"Richardson error estimate: {error_estimate:.3g}")

    propagator = ReducedPropagator(times=times, values=values, step=float(step), scheme=scheme, order=2,
                                   error_estimate=error_estimate, warnings=warnings)

    bound = 1.0 + 10.0 * max(error_estimate or 0.0, 1e-12)
    largest = float(np.max(propagator.singular_value_max()))
    if largest > bound:
        message = f"propagator is not contractive: largest singular value {largest:.12g} exceeds {bound:.12g}"
        log.warning(message)
        warnings.append(message)

    return propagator


def solve_memory_kernel(model: SpectralDensityModel, kernel: CorrelationKernel = None, t_max: float = 10.0,
                        step: float = 0.05, richardson: bool = True) -> ReducedPropagator:
    """
    Solve the reduced master equation in the Schroedinger picture.

    The equation is integrated in a frame rotating at the mean level energy,
    which removes the fast common phase, and transformed back at the end.

    Parameters
    ----------
    model: SpectralDensityModel
        model to solve
    kernel: CorrelationKernel
        correlation kernel of the model, created with default settings if None
    t_max: float
        end of the time grid
    step: float
        time step
    richardson: bool
        estimate the global error from a companion solve with twice the step

    Returns
    -------
    ReducedPropagator: U^red on the time grid
    """

    return _solve(_march_rotating_frame, SCHEME_SCHROEDINGER, model, kernel, t_max, step, richardson)


def solve_memory_kernel_interaction(model: SpectralDensityModel, kernel: CorrelationKernel = None,
                                    t_max: float = 10.0, step: float = 0.05,
                                    richardson: bool = False) -> ReducedPropagator:
    """
    Solve the interaction picture form

        dU_I/dt = -∫_0^t e^{iH0 t} α(t-τ) e^{-iH0 τ} U_I(τ) dτ

    and return the propagator transformed back to the Schroedinger picture.
    """

    return _solve(_march_interaction_picture, SCHEME_INTERACTION, model, kernel, t_max, step, richardson)

# EOF
