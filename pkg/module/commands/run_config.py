# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from dataclasses import dataclass

import numpy as np

from module.common.errors import ModelInputError
from module.common.misc import parse_complex_list
from module.config.base import ConfigOptions

# options which have to be > 0 whenever they are set
tolerance_options = ["tol_root", "tol_step", "tol_deg", "quad_tolerance"]


@dataclass(frozen=True, eq=False)
class RunConfig:
    """
    everything a subcommand needs: which model, where to write, and all numerical settings
    """

    command: str
    model_path: str
    output_dir: str
    numerics: ConfigOptions
    check: ConfigOptions

    def __post_init__(self):

        for key in tolerance_options:
            value = getattr(self.numerics, key)
            if value is not None and not value > 0:
                raise ModelInputError(f"tolerance '{key}' must be > 0, got {value}")

    @property
    def seed(self) -> int:
        return self.numerics.seed

    def initial_state(self, n_levels: int) -> np.ndarray:
        """
        normalized amplitudes c_α, the first level if none were configured
        """

        if self.numerics.initial_state is None:
            return np.eye(n_levels, dtype=complex)[0]

        amplitudes = np.array(parse_complex_list(self.numerics.initial_state), dtype=complex)
        if len(amplitudes) != n_levels:
            raise ModelInputError(f"initial state has {len(amplitudes)} amplitudes, model has {n_levels} levels")

        norm = np.linalg.norm(amplitudes)
        if norm == 0:
            raise ModelInputError("initial state must have a nonzero amplitude")

        return amplitudes / norm

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "model_path": self.model_path,
            "output_dir": self.output_dir,
            "numerics": self.numerics.as_dict(),
            "check": self.check.as_dict()
        }

# EOF
