# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import numpy as np

from module.analysis import markovianity_profile, golden_rule_rates
from module.commands.command_base import CommandBase
from module.common.errors import SheetDomainError, UnsupportedContinuationError
from module.common.logging import get_logger
from module.common.output import matrix_columns, matrix_rows
from module.evolution import build_resonant_density
from module.evolution.memory import time_grid
from module.model import total_strength

log = get_logger()

# energy grid of the transform dump
energy_points = 401

# the first sheet transform is sampled this far (relative to the model scale) above the real axis
first_sheet_offset = 1e-2


class KernelCommand(CommandBase):
    """
    α(t) on the time grid, α(z) along the real energy axis and the Markovianity profile
    """

    name = "kernel"
    description = "correlation matrix α(t) and its Laplace transform α(z)"

    def energy_grid(self):

        energies = np.array(self.model.levels.energies)
        scale = self.model.scale

        return np.linspace(energies.min() - 2 * scale, energies.max() + 2 * scale, energy_points)

    def transform_rows(self, energies):

        n_levels = self.model.n_levels
        offset = first_sheet_offset * self.model.scale
        first = np.full((len(energies), n_levels, n_levels), np.nan, dtype=complex)
        second = np.full_like(first, np.nan)

        continuable = self.model.is_continuable
        if not continuable:
            log.warning(f"Model '{self.model.name}' has no second sheet continuation, α^II(z) is left empty")

        for index, lam in enumerate(energies):

            first[index] = self.kernel.alpha_z_first_sheet(complex(lam, offset))

            if continuable is False:
                continue

            try:
                second[index] = self.kernel.alpha_z_second_sheet(complex(lam, 0.0))
            except (SheetDomainError, UnsupportedContinuationError) as e:
                log.debug(f"α^II({lam}) skipped: {e}")

        return first, second

    def run(self):

        n_levels = self.model.n_levels
        times = time_grid(self.t_max, self.settings.step)

        if any(x.is_markovian for x in self.model.channels):
            log.info("Delta correlated channels have no pointwise α(t), they are left out of the α(t) dump")

        alphas = self.kernel.alpha_t_grid(times, regular_only=True)
        self.writer.write_csv("kernel_alpha_t.csv", ["t"] + matrix_columns("alpha", n_levels),
                              np.column_stack([times, matrix_rows(alphas)]))

        energies = self.energy_grid()
        first, second = self.transform_rows(energies)
        self.writer.write_csv("kernel_alpha_z.csv",
                              ["lambda"] + matrix_columns("alpha_I", n_levels) + matrix_columns("alpha_II", n_levels),
                              np.column_stack([energies, matrix_rows(first), matrix_rows(second)]))

        profile = markovianity_profile(self.kernel, self.t_max)

        self.writer.write_json("kernel_report.json", {
            "markovianity": profile.as_dict(),
            "golden_rule_rates": golden_rule_rates(self.model),
            "resonant_density": build_resonant_density(self.model),
            "total_strength": total_strength(self.model),
            "first_sheet_offset": first_sheet_offset * self.model.scale
        })

        log.info(f"Kernel width {profile.kernel_width:.6g}, delta quality {profile.delta_quality:.6g}")

        return True

# EOF
