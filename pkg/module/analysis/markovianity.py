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
from scipy.integrate import simpson

from module.common.errors import ModelInputError
from module.common.logging import get_logger
from module.evolution import build_resonant_density
from module.kernel import CorrelationKernel
from module.model import omega_at

log = get_logger()


@dataclass(frozen=True)
class MarkovianityProfile:
    kernel_width: float
    flatness: float
    delta_quality: float
    t_probe: float

    def as_dict(self) -> dict:
        return {
            "kernel_width": self.kernel_width,
            "flatness": self.flatness,
            "delta_quality": self.delta_quality,
            "t_probe": self.t_probe
        }


def _window_flatness(model, t_probe, samples):

    half_width = 2 * math.pi / t_probe
    norms = list()
    for energy in model.levels.energies:
        for lam in np.linspace(energy - half_width, energy + half_width, samples):
            norms.append(np.linalg.norm(omega_at(model, lam)))

    largest = max(norms)
    if largest == 0:
        return 0.0

    return float((largest - min(norms)) / largest)


def markovianity_profile(kernel: CorrelationKernel, t_probe: float, points: int = 4001,
                         samples: int = 101) -> MarkovianityProfile:
    """
    How close a kernel is to the delta correlated limit on the time scale t_probe.

    The kernel is phased per column, α_αγ(t)·exp(iλ_γ t), which is the memory
    kernel seen by the slowly varying amplitudes.

        kernel_width   ‖∫ t α dt‖_F / ‖∫ α dt‖_F on [0, t_probe]
        flatness       relative variation (max - min)/max of ‖ω(λ)‖_F over λ_γ ± 2π/t_probe
        delta_quality  ‖∫ α dt - πω^Res‖_F / ‖πω^Res‖_F

    Delta correlated channels contribute π g g† to ∫α dt and nothing to the
    first moment. A model without coupling reports 0 for every metric.
    """

    model = kernel.model
    t_probe = float(t_probe)

    if not (math.isfinite(t_probe) and t_probe > 0):
        raise ModelInputError(f"probe time must be > 0, got {t_probe}")

    if not model.has_coupling:
        return MarkovianityProfile(kernel_width=0.0, flatness=0.0, delta_quality=0.0, t_probe=t_probe)

    times = np.linspace(0.0, t_probe, int(points))
    energies = np.array(model.levels.energies)

    alphas = kernel.alpha_t_grid(times, regular_only=True) * np.exp(1j * np.outer(times, energies))[:, None, :]

    integral = simpson(alphas, x=times, axis=0) + kernel.markovian_rate_matrix()
    moment = simpson(alphas * times[:, None, None], x=times, axis=0)

    integral_norm = np.linalg.norm(integral)
    kernel_width = float(np.linalg.norm(moment) / integral_norm) if integral_norm > 0 else 0.0

    target = np.pi * build_resonant_density(model)
    target_norm = np.linalg.norm(target)
    if target_norm > 0:
        delta_quality = float(np.linalg.norm(integral - target) / target_norm)
    else:
        delta_quality = math.inf

    profile = MarkovianityProfile(kernel_width=kernel_width, flatness=_window_flatness(model, t_probe, samples),
                                  delta_quality=delta_quality, t_probe=t_probe)

    log.debug(f"Markovianity profile at T = {t_probe}: {profile.as_dict()}")

    return profile

# EOF
