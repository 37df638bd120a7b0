# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import dataclasses

import numpy as np

from module.analysis import (
    semigroup_deviation, cross_pole_orthogonality, default_time_pairs, fit_decay_rate, golden_rule_rates,
    state_dispersion, oracle_source, trajectory_source, pole_approx_source, markovian_source
)
from module.commands.command_base import CommandBase
from module.common.errors import FitRejectedError, UnsupportedContinuationError
from module.common.logging import get_logger
from module.evolution import solve_memory_kernel, build_resonant_density
from module.model import SpectralDensityModel, FlatWindowChannel, FULL_LINE
from module.oracle import discretize

log = get_logger()


def widened_model(model: SpectralDensityModel, half_width: float) -> SpectralDensityModel:
    """
    the model with every flat window replaced by [-Λ, Λ] at unchanged spectral density
    """

    channels = list()
    for channel in model.channels:
        if isinstance(channel, FlatWindowChannel):
            channel = dataclasses.replace(channel, lambda_min=-half_width, lambda_max=half_width)
        channels.append(channel)

    return SpectralDensityModel(levels=model.levels, channels=tuple(channels), spectrum_kind=FULL_LINE,
                                name=f"{model.name} (Λ = {half_width:g})")


class SemigroupCommand(CommandBase):
    """
    semigroup deviation of all available propagator sources
    """

    name = "semigroup"
    description = "semigroup deviation report"

    def lifetime(self, volterra):

        try:
            fit = fit_decay_rate(volterra, state=self.initial_state, zeno_factor=self.settings.zeno_factor)
            return fit.lifetime
        except FitRejectedError as e:
            log.info(f"Lifetime fit rejected ({e.reason}), using the golden rule lifetime")

        rates = [x for x in golden_rule_rates(self.model) if x > 0]

        return 1.0 / max(rates) if len(rates) > 0 else self.t_max / 4

    def sources(self):

        volterra = solve_memory_kernel(self.model, self.kernel, self.t_max, self.settings.step)
        sources = [trajectory_source(volterra), markovian_source(self.model, build_resonant_density(self.model))]

        poles = list()
        try:
            poles = self.find_poles().poles
        except UnsupportedContinuationError as e:
            log.info(f"No pole approximation: {e}")

        if len(poles) > 0:
            sources.append(pole_approx_source(poles, self.settings.mode, self.generator))

        if self.oracle_available():
            sources.append(oracle_source(self.discretize()))

        return volterra, poles, sources

    def lambda_sweep(self, pairs):

        if not any(isinstance(x, FlatWindowChannel) for x in self.model.channels):
            log.warning("Λ sweep requested but the model has no flat window channel")
            return None

        rows = list()
        for half_width in self.settings.lambda_sweep:
            model = widened_model(self.model, half_width)
            source = oracle_source(discretize(model, self.settings.grid_m, self.settings.grid_rule,
                                              ohmic_cutoff=self.settings.ohmic_cutoff))
            report = semigroup_deviation(source, pairs)
            rows.append([half_width, report.max_deviation, state_dispersion(model, self.initial_state)])
            log.info(f"Λ = {half_width:g}: max semigroup deviation {report.max_deviation:.6g}")

        return np.array(rows)

    def run(self):

        volterra, poles, sources = self.sources()

        pairs = default_time_pairs(self.lifetime(volterra))
        reports = [semigroup_deviation(source, pairs) for source in sources]

        rows = list()
        for pair in pairs:
            row = list(pair)
            for report in reports:
                row.append(report.deviation[report.pairs.index(pair)] if pair in report.pairs else np.nan)
            rows.append(row)

        self.writer.write_csv("semigroup.csv", ["t1", "t2"] + [f"deviation_{x.source}" for x in reports],
                              np.array(rows))

        content = {"reports": [x.as_dict() for x in reports]}
        if len(poles) >= 2:
            content["cross_pole_orthogonality"] = cross_pole_orthogonality(poles)

        if self.settings.lambda_sweep is not None:
            sweep = self.lambda_sweep(pairs)
            if sweep is not None:
                self.writer.write_csv("semigroup_lambda_sweep.csv", ["lambda", "max_deviation", "dispersion"], sweep)
                content["lambda_sweep"] = sweep

        self.writer.write_json("semigroup_report.json", content)

        for report in reports:
            log.info(f"{report.source}: max semigroup deviation {report.max_deviation:.6g}")

        return True

# EOF
