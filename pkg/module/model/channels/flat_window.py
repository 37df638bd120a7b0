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

from module.common.errors import ModelInputError, NotApplicableError
from module.model.channels.base import CouplingChannel, FIRST_SHEET, SECOND_SHEET


@dataclass(frozen=True)
class FlatWindowChannel(CouplingChannel):
    """
    Constant line shape f(λ) = 1 on [lambda_min, lambda_max].

    With both edges infinite the channel is the exact Markovian (delta
    correlated) coupling: its transform is -iπ on the upper and on the
    second sheet, α(t) is a delta function and can't be evaluated pointwise.
    """

    kind = "flat_window"
    lambda_min: float = -math.inf
    lambda_max: float = math.inf

    @classmethod
    def from_parameters(cls, name, g, parameters):
        return cls(name=name, g=tuple(g),
                   lambda_min=float(parameters.get("lambda_min", -math.inf)),
                   lambda_max=float(parameters.get("lambda_max", math.inf)))

    def validate(self):

        if math.isnan(self.lambda_min) or math.isnan(self.lambda_max):
            raise ModelInputError(f"channel '{self.name}': support edges can't be NaN")

        if not self.lambda_min < self.lambda_max:
            raise ModelInputError(f"channel '{self.name}': lambda_min ({self.lambda_min}) "
                                  f"must be smaller than lambda_max ({self.lambda_max})")

        if math.isinf(self.lambda_min) != math.isinf(self.lambda_max):
            raise ModelInputError(f"channel '{self.name}': a flat window needs two finite edges "
                                  f"or is unbounded on both sides")

    @property
    def support(self):
        return self.lambda_min, self.lambda_max

    @property
    def is_markovian(self):
        return math.isinf(self.lambda_min) and math.isinf(self.lambda_max)

    @property
    def width(self):
        return self.lambda_max - self.lambda_min

    def line_shape(self, lam):
        return np.where(self.in_support(lam), 1.0, 0.0)

    def strength(self):
        return self.width

    def continuation(self, z):
        return np.ones_like(np.asarray(z, dtype=complex))

    def correlation(self, t):

        if self.is_markovian:
            raise NotApplicableError(f"channel '{self.name}' is delta correlated in time, "
                                     f"α(t) has no pointwise value")

        t = np.asarray(t, dtype=float)
        center = 0.5 * (self.lambda_min + self.lambda_max)

        # np.sinc(x) = sin(πx)/(πx)
        return np.exp(-1j * center * t) * self.width * np.sinc(self.width * t / (2 * np.pi))

    def stieltjes(self, z, sheet=FIRST_SHEET):

        z = complex(z)

        if self.is_markovian:
            if sheet == SECOND_SHEET or z.imag > 0:
                return -1j * np.pi
            if z.imag < 0:
                return 1j * np.pi
            raise NotApplicableError(f"channel '{self.name}' has no first sheet value on the real axis")

        self.check_branch_point(z)

        if sheet == FIRST_SHEET:
            self.check_off_cut(z)

        # keep real axis values on the upper side of the cut
        if z.imag == 0:
            z = complex(z.real, 0.0)

        a, b = self.lambda_min, self.lambda_max
        if abs(z) > 4 * max(abs(a), abs(b)):
            value = np.log1p(-a / z) - np.log1p(-b / z)
        else:
            value = np.log(z - a) - np.log(z - b)

        if sheet == SECOND_SHEET and z.imag < 0 and a < z.real < b:
            value -= 2j * np.pi

        return complex(value)

    def stieltjes_derivative(self, z):

        if self.is_markovian:
            return 0j

        z = complex(z)
        self.check_branch_point(z)

        return 1.0 / (z - self.lambda_min) - 1.0 / (z - self.lambda_max)

    def parameters(self):
        return {
            "lambda_min": self.lambda_min,
            "lambda_max": self.lambda_max
        }

# EOF
