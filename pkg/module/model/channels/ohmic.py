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
from scipy.special import gamma, gammaincc

from module.common.errors import ModelInputError, UnsupportedContinuationError
from module.model.channels.base import CouplingChannel, SECOND_SHEET

# line shape is integrated up to this multiple of the cutoff
ohmic_quadrature_cutoff = 40.0


@dataclass(frozen=True)
class OhmicChannel(CouplingChannel):
    """
    Sub-/super-ohmic line shape f(λ) = λc^(1-s) λ^s exp(-λ/λc) for λ >= 0
    with exponent s = 'exponent' and cutoff λc = 'cutoff'. The strength
    prefactor of the family is absorbed into |g|².
    """

    kind = "ohmic"
    closed_form = False
    exponent: float = 1.0
    cutoff: float = 1.0

    @classmethod
    def from_parameters(cls, name, g, parameters):
        return cls(name=name, g=tuple(g),
                   exponent=float(parameters.get("exponent", 1.0)),
                   cutoff=float(parameters.get("cutoff", 1.0)))

    def validate(self):

        if not (math.isfinite(self.exponent) and self.exponent > 0):
            raise ModelInputError(f"channel '{self.name}': exponent must be > 0, got {self.exponent}")

        if not (math.isfinite(self.cutoff) and self.cutoff > 0):
            raise ModelInputError(f"channel '{self.name}': cutoff must be > 0, got {self.cutoff}")

    @property
    def support(self):
        return 0.0, math.inf

    @property
    def quadrature_window(self):
        return 0.0, ohmic_quadrature_cutoff * self.cutoff

    @property
    def energy_scale(self):
        return self.cutoff

    @property
    def continuable(self):
        return float(self.exponent).is_integer()

    def tail_mass(self, u_max: float) -> float:
        """
        relative strength beyond λ = u_max·λc
        """
        return float(gammaincc(self.exponent + 1, u_max))

    def line_shape(self, lam):
        lam = np.asarray(lam, dtype=float)
        positive = np.clip(lam, 0.0, None)
        value = self.cutoff ** (1 - self.exponent) * positive ** self.exponent * np.exp(-positive / self.cutoff)
        return np.where(lam >= 0, value, 0.0)

    def strength(self):
        return self.cutoff ** 2 * gamma(self.exponent + 1)

    def continuation(self, z):

        if not self.continuable:
            raise UnsupportedContinuationError(f"channel '{self.name}': ohmic line shape with non-integer "
                                               f"exponent {self.exponent} has no closed form continuation")

        z = np.asarray(z, dtype=complex)
        return self.cutoff ** (1 - self.exponent) * z ** int(self.exponent) * np.exp(-z / self.cutoff)

    def stieltjes(self, z, sheet=SECOND_SHEET):
        raise UnsupportedContinuationError(f"channel '{self.name}': ohmic channels have no "
                                           f"second sheet continuation")

    def stieltjes_derivative(self, z):
        raise UnsupportedContinuationError(f"channel '{self.name}': ohmic channels have no "
                                           f"second sheet continuation")

    def parameters(self):
        return {
            "exponent": self.exponent,
            "cutoff": self.cutoff
        }

# EOF
