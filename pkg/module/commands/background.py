# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import numpy as np

from module.commands.command_base import CommandBase
from module.common.logging import get_logger
from module.common.output import matrix_columns, matrix_rows
from module.evolution.memory import time_grid
from module.resolvent import background_integral, pole_approx_propagator, MODE_EXACT

log = get_logger()

# the contour integral is evaluated on at most this many times
max_background_times = 200


class BackgroundCommand(CommandBase):
    """
    contour contribution of the branch points and the decomposition pole sum + background
    """

    name = "background"
    description = "background contour term of half_line models"

    def run(self):

        n_levels = self.model.n_levels
        times = time_grid(self.t_max, self.settings.step)[1:]
        if len(times) > max_background_times:
            times = times[np.linspace(0, len(times) - 1, max_background_times).round().astype(int)]

        poles = self.find_poles().poles
        if len(poles) == 0:
            log.warning("No pole found, the decomposition holds the background term only")

        values = np.zeros((len(times), n_levels, n_levels), dtype=complex)
        truncation = np.zeros(len(times))
        for index, t in enumerate(times):
            term = background_integral(self.generator, t, self.settings.background_depth,
                                       self.settings.background_points)
            values[index] = term.value
            truncation[index] = term.truncation_estimate

        pole_sum = np.zeros_like(values)
        if len(poles) > 0:
            pole_sum = pole_approx_propagator(poles, times, MODE_EXACT, self.generator)

        self.writer.write_csv("background.csv",
                              ["t"] + matrix_columns("B", n_levels) + matrix_columns("U", n_levels) +
                              ["truncation_estimate"],
                              np.column_stack([times, matrix_rows(values), matrix_rows(pole_sum + values),
                                               truncation]))

        log.info(f"Background term on {len(times)} times, largest ‖B‖_F = "
                 f"{np.max(np.linalg.norm(values, axis=(1, 2))):.6g}")

        return True

# EOF
