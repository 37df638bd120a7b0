# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math

import numpy as np

from module.commands.command_base import CommandBase
from module.commands.evolve import trajectory_columns, trajectory_rows
from module.common.errors import ConfigurationError
from module.common.logging import get_logger
from module.evolution.memory import time_grid
from module.oracle import exact_reduced_propagator, dispersion, line_shape, estimate_discretization_error

log = get_logger()


class OracleCommand(CommandBase):
    """
    exact evolution of the discretized continuum
    """

    name = "oracle"
    description = "discretized continuum evolution"

    def run(self):

        if not self.oracle_available():
            raise ConfigurationError("model has an unbounded flat channel, set 'truncation' to discretize it")

        dh = self.discretize()
        times = time_grid(self.t_max, self.settings.step)

        propagator = exact_reduced_propagator(dh, times)
        self.writer.write_csv("oracle.csv", trajectory_columns(self.model.n_levels),
                              trajectory_rows(propagator, self.initial_state))

        energies, weights = line_shape(dh, self.initial_state)
        self.writer.write_csv("oracle_line_shape.csv", ["energy", "weight"], np.column_stack([energies, weights]))

        error = None
        if self.settings.grid_m // 2 >= 10 * self.model.n_levels:
            error = estimate_discretization_error(self.model, self.settings.grid_m, times, self.settings.grid_rule,
                                                  self.settings.truncation, self.settings.ohmic_cutoff)

        recurrence_time = dh.recurrence_time
        self.writer.write_json("oracle_report.json", {
            "grid_size": dh.grid_size,
            "grid_rule": dh.grid_rule,
            "windows": dh.windows,
            "tail_mass": dh.tail_mass,
            "recurrence_time": recurrence_time if math.isfinite(recurrence_time) else None,
            "dispersion": dispersion(dh, self.initial_state),
            "discretization_error": error,
            "warnings": propagator.warnings
        })

        return True

# EOF
