# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from functools import cached_property

import numpy as np

from module.analysis import golden_rule_rates
from module.common.logging import get_logger
from module.common.output import ArtifactWriter
from module.commands.run_config import RunConfig
from module.kernel import CorrelationKernel
from module.model import SpectralDensityModel
from module.oracle import discretize
from module.resolvent import ReducedGenerator, find_poles

log = get_logger()

# t_max used if no rate is available to derive one
fallback_t_max = 50.0

# automatic t_max covers this many lifetimes of the slowest decay
lifetimes_covered = 3.0


class CommandBase:
    """
    This is the base class for all subcommands. It provides the lazily built
    numerical objects every subcommand draws from.
    """

    name = None
    description = None

    def __init__(self, config: RunConfig, model: SpectralDensityModel, writer: ArtifactWriter):

        self.config = config
        self.settings = config.numerics
        self.model = model
        self.writer = writer

    @classmethod
    def implements(cls, command_name):

        if getattr(cls, "name", None) == command_name:
            return True

        return False

    # stub function, needs to be implemented in each command
    def run(self) -> bool:
        raise NotImplementedError

    @cached_property
    def kernel(self) -> CorrelationKernel:
        return CorrelationKernel(self.model, quad_tolerance=self.settings.quad_tolerance)

    @cached_property
    def generator(self) -> ReducedGenerator:
        return ReducedGenerator(self.model, self.kernel)

    @cached_property
    def initial_state(self) -> np.ndarray:
        return self.config.initial_state(self.model.n_levels)

    @cached_property
    def t_max(self) -> float:

        if self.settings.t_max is not None:
            return self.settings.t_max

        rates = [x for x in golden_rule_rates(self.model) if x > 0]
        if len(rates) == 0:
            log.info(f"No decay rate available, using t_max = {fallback_t_max}")
            return fallback_t_max

        t_max = lifetimes_covered / min(rates)
        log.info(f"Using t_max = {t_max:.6g} ({lifetimes_covered:g} golden rule lifetimes)")

        return t_max

    def find_poles(self):

        report = find_poles(self.generator, max_poles=self.settings.max_poles, tol_root=self.settings.tol_root,
                            tol_step=self.settings.tol_step, max_iter=self.settings.max_iter,
                            tol_deg=self.settings.tol_deg)

        for note in report.notes:
            log.info(f"Pole search: {note}")

        return report

    def discretize(self, grid_m: int = None):

        return discretize(self.model, grid_m or self.settings.grid_m, self.settings.grid_rule,
                          self.settings.truncation, self.settings.ohmic_cutoff)

    def oracle_available(self) -> bool:
        """
        unbounded flat channels can only be discretized with a truncation window
        """

        unbounded = any(x.is_markovian for x in self.model.channels)

        return not (unbounded and self.settings.truncation is None)

# EOF
