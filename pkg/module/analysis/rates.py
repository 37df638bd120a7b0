# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import linregress
from scipy.optimize import curve_fit

from module.common.errors import ModelInputError, FitRejectedError
from module.common.logging import get_logger
from module.evolution import ReducedPropagator, normalized_state
from module.kernel import CorrelationKernel
from module.model import SpectralDensityModel, omega_at

log = get_logger()

# the post Zeno window starts at this factor over √ΔH²
default_zeno_factor = 10.0

# relative rise of the probability over its running minimum counted as a revival
default_revival_tolerance = 1e-3

# smallest decay of log P across the window accepted as a decay
min_log_decay = 0.05


@dataclass(frozen=True)
class DecayFit:
    rate: float
    phase: float
    r_squared: float
    window: tuple

    @property
    def lifetime(self) -> float:
        return 1.0 / self.rate

    def as_dict(self) -> dict:
        return {
            "rate": self.rate,
            "phase": self.phase,
            "r_squared": self.r_squared,
            "window": list(self.window)
        }


@dataclass(frozen=True)
class ZenoFit:
    dispersion: float
    max_relative_error: float
    window: tuple


def _amplitudes(propagator, component, state):

    values = propagator.values

    if component is not None:
        alpha, beta = component
        return values[:, int(alpha), int(beta)]

    if state is None:
        state = np.eye(propagator.n_levels)[0]

    c = normalized_state(state, propagator.n_levels)

    return np.einsum("i,kij,j->k", c.conj(), values, c)


def _short_time_dispersion(times, probability):

    if len(times) < 2 or times[1] <= 0:
        return None

    value = (1.0 - probability[1]) / times[1] ** 2

    return value if value > 0 else None


def _check_revival(times, probability, tolerance):

    running_min = np.minimum.accumulate(probability)
    rise = probability - running_min
    revivals = np.nonzero(rise > tolerance * running_min + 1e-14)[0]

    if len(revivals) > 0:
        revival_time = float(times[revivals[0]])
        raise FitRejectedError(f"probability revives at t = {revival_time:.6g}", revival_time=revival_time)


def fit_decay_rate(propagator: ReducedPropagator, component: tuple = None, state=None, dispersion: float = None,
                   window_start: float = None, window_end: float = None, zeno_factor: float = default_zeno_factor,
                   revival_tolerance: float = default_revival_tolerance) -> DecayFit:
    """
    Fit the probability decay rate of a trajectory by linear regression of log|A(t)|².

    A(t) is the matrix element U_αβ(t) if 'component' is given, otherwise the
    survival amplitude c†U(t)c of 'state' (first level by default). The window
    starts after the Zeno regime at zeno_factor/√ΔH². Without an explicit
    'dispersion' ΔH² is estimated from the first grid step.

    Returns
    -------
    DecayFit: probability rate, mean phase velocity of the amplitude, r² and the fit window

    Raises
    ------
    FitRejectedError: no decay or a revival inside the window
    """

    times = propagator.times
    amplitude = _amplitudes(propagator, component, state)
    probability = np.abs(amplitude) ** 2

    if window_start is None:
        if dispersion is None:
            dispersion = _short_time_dispersion(times, probability)
        if dispersion is None or not dispersion > 0:
            raise FitRejectedError("no decay: the probability doesn't leave 1 in the first step")
        window_start = zeno_factor / math.sqrt(dispersion)

    if window_end is None:
        window_end = float(times[-1])

    inside = (times >= window_start) & (times <= window_end) & (probability > 1e-300)
    if np.count_nonzero(inside) < 3:
        raise FitRejectedError(f"fit window [{window_start:.6g}, {window_end:.6g}] holds fewer than 3 points")

    t_fit = times[inside]
    p_fit = probability[inside]

    _check_revival(t_fit, p_fit, revival_tolerance)

    log_p = np.log(p_fit)
    if log_p[0] - log_p[-1] < min_log_decay:
        raise FitRejectedError(f"no decay: log P drops by {log_p[0] - log_p[-1]:.3g} across the window")

    regression = linregress(t_fit, log_p)
    phase_regression = linregress(t_fit, np.unwrap(np.angle(amplitude[inside])))

    fit = DecayFit(rate=float(-regression.slope), phase=float(-phase_regression.slope),
                   r_squared=float(regression.rvalue ** 2), window=(float(t_fit[0]), float(t_fit[-1])))

    log.debug(f"Decay fit on [{fit.window[0]:.4g}, {fit.window[1]:.4g}]: rate {fit.rate:.8g}, r² {fit.r_squared:.6f}")

    return fit


def fit_zeno_law(times, survival) -> ZenoFit:
    """
    least squares fit of 1 - P(t) = ΔH² t² through the origin
    """

    times = np.asarray(times, dtype=float)
    decay = 1.0 - np.asarray(survival, dtype=float)

    if len(times) != len(decay) or len(times) < 2:
        raise ModelInputError("Zeno fit needs at least two matching times and probabilities")

    def quadratic(t, value):
        return value * t ** 2

    estimate = float(np.sum(times ** 2 * decay) / max(np.sum(times ** 4), 1e-300))
    (value,), _ = curve_fit(quadratic, times, decay, p0=[estimate])

    positive = times > 0
    relative = np.abs(decay[positive] - value * times[positive] ** 2) / (value * times[positive] ** 2)

    return ZenoFit(dispersion=float(value), max_relative_error=float(np.max(relative, initial=0.0)),
                   window=(float(times[0]), float(times[-1])))


def zeno_duration(times, survival, dispersion: float, tolerance: float = 0.01) -> float:
    """
    first time at which |P(t) - (1 - ΔH²t²)| exceeds tolerance·ΔH²t²,
    the last time of the grid if it never does
    """

    times = np.asarray(times, dtype=float)
    survival = np.asarray(survival, dtype=float)

    if not dispersion > 0:
        raise ModelInputError(f"Zeno duration needs ΔH² > 0, got {dispersion}")

    quadratic = dispersion * times ** 2
    violated = np.nonzero((times > 0) & (np.abs(survival - (1.0 - quadratic)) > tolerance * quadratic))[0]

    if len(violated) == 0:
        return float(times[-1])

    return float(times[violated[0]])


def golden_rule_rates(model: SpectralDensityModel) -> np.ndarray:
    """
    probability decay rates 2π ω_αα(λ_α) of the resonant approximation
    """

    rates = list()
    for index, energy in enumerate(model.levels.energies):
        rates.append(2 * math.pi * omega_at(model, energy)[index, index].real)

    return np.array(rates)


def state_dispersion(model: SpectralDensityModel, state, kernel: CorrelationKernel = None) -> float:
    """
    ΔH² = c†H0²c - (c†H0c)² + c†α(0)c from the model, infinite if the state
    couples to a delta correlated channel
    """

    c = normalized_state(state, model.n_levels)

    if kernel is None:
        kernel = CorrelationKernel(model)

    if np.vdot(c, kernel.markovian_rate_matrix() @ c).real > 0:
        return math.inf

    h0 = model.h0
    mean = np.vdot(c, h0 @ c).real
    alpha_0 = kernel.alpha_t_grid([0.0], regular_only=True)[0]

    return float(np.vdot(c, h0 @ h0 @ c).real - mean ** 2 + np.vdot(c, alpha_0 @ c).real)

# EOF
