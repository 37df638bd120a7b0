# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import numpy as np

from module.analysis import fit_decay_rate, state_dispersion
from module.commands.command_base import CommandBase
from module.common.errors import FitRejectedError
from module.common.logging import get_logger
from module.common.output import matrix_columns, matrix_rows
from module.evolution import solve_memory_kernel, solve_markovian, build_resonant_density, survival_probability

log = get_logger()


def trajectory_columns(n_levels):
    return ["t"] + matrix_columns("U", n_levels) + ["survival_probability"]


def trajectory_rows(propagator, state):
    return np.column_stack([propagator.times, matrix_rows(propagator.values),
                            survival_probability(propagator, state)])


class EvolveCommand(CommandBase):
    """
    memory kernel (Volterra) and Markovian trajectories of the reduced propagator
    """

    name = "evolve"
    description = "Volterra and Markovian trajectories"

    def decay_summary(self, propagator, dispersion):

        try:
            fit = fit_decay_rate(propagator, state=self.initial_state, dispersion=dispersion,
                                 zeno_factor=self.settings.zeno_factor)
        except FitRejectedError as e:
            log.info(f"No decay rate fitted for '{propagator.scheme}': {e.reason}")
            return {"rejected": e.reason, "revival_time": e.revival_time}

        return fit.as_dict()

    def run(self):

        n_levels = self.model.n_levels
        state = self.initial_state
        dispersion = state_dispersion(self.model, state, self.kernel)
        if not np.isfinite(dispersion) or dispersion <= 0:
            dispersion = None

        log.info(f"Solving memory kernel equation up to t = {self.t_max:.6g} with step {self.settings.step}")
        volterra = solve_memory_kernel(self.model, self.kernel, self.t_max, self.settings.step)
        self.writer.write_csv("evolve_volterra.csv", trajectory_columns(n_levels), trajectory_rows(volterra, state))

        omega = build_resonant_density(self.model)
        markovian = solve_markovian(self.model, omega, self.t_max, self.settings.step)
        self.writer.write_csv("evolve_markovian.csv", trajectory_columns(n_levels),
                              trajectory_rows(markovian, state))

        self.writer.write_json("evolve_report.json", {
            "initial_state": state,
            "dispersion": dispersion,
            "volterra": {
                "scheme": volterra.scheme,
                "step": volterra.step,
                "error_estimate": volterra.error_estimate,
                "warnings": volterra.warnings,
                "decay": self.decay_summary(volterra, dispersion)
            },
            "markovian": {
                "scheme": markovian.scheme,
                "resonant_density": omega,
                "decay": self.decay_summary(markovian, None)
            }
        })

        return True

# EOF
