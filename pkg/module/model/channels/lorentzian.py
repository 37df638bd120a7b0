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

from module.common.errors import ModelInputError, BranchPointError
from module.model.channels.base import CouplingChannel, FIRST_SHEET


@dataclass(frozen=True)
class LorentzianChannel(CouplingChannel):
    """
    Unit normalized Lorentzian line shape f(λ) = (γ/π) / ((λ-μ)² + γ²)
    on the whole real line, μ = 'center' and γ = 'width' (half width).
    """

    kind = "lorentzian"
    center: float = 0.0
    width: float = 1.0

    @classmethod
    def from_parameters(cls, name, g, parameters):
        return cls(name=name, g=tuple(g),
                   center=float(parameters.get("center", 0.0)),
                   width=float(parameters.get("width", 1.0)))

    def validate(self):

        if not math.isfinite(self.center):
            raise ModelInputError(f"channel '{self.name}': center must be finite")

        if not (math.isfinite(self.width) and self.width > 0):
            raise ModelInputError(f"channel '{self.name}': width must be > 0, got {self.width}")

    @property
    def support(self):
        return -math.inf, math.inf

    @property
    def energy_scale(self):
        return max(abs(self.center), self.width)

    def line_shape(self, lam):
        lam = np.asarray(lam, dtype=float)
        return (self.width / np.pi) / ((lam - self.center) ** 2 + self.width ** 2)

    def strength(self):
        return 1.0

    def continuation(self, z):
        z = np.asarray(z, dtype=complex)
        return (self.width / np.pi) / ((z - self.center) ** 2 + self.width ** 2)

    def correlation(self, t):
        t = np.asarray(t, dtype=float)
        return np.exp(-1j * self.center * t - self.width * np.abs(t))

    def _second_sheet_pole(self) -> complex:
        return complex(self.center, -self.width)

    def stieltjes(self, z, sheet=FIRST_SHEET):

        z = complex(z)

        if sheet == FIRST_SHEET:
            self.check_off_cut(z)
            if z.imag < 0:
                return 1.0 / (z - self.center - 1j * self.width)

        if abs(z - self._second_sheet_pole()) <= 1e-14 * max(1.0, self.energy_scale):
            raise BranchPointError(f"z = {z} is the second sheet singularity of channel '{self.name}'")

        return 1.0 / (z - self.center + 1j * self.width)

    def stieltjes_derivative(self, z):

        z = complex(z)
        if abs(z - self._second_sheet_pole()) <= 1e-14 * max(1.0, self.energy_scale):
            raise BranchPointError(f"z = {z} is the second sheet singularity of channel '{self.name}'")

        return -1.0 / (z - self.center + 1j * self.width) ** 2

    def parameters(self):
        return {
            "center": self.center,
            "width": self.width
        }

# EOF
