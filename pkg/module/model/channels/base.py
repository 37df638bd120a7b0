# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
from dataclasses import dataclass, field

import numpy as np

from module.common.errors import ModelInputError, SheetDomainError, BranchPointError

FIRST_SHEET = 1
SECOND_SHEET = 2


@dataclass(frozen=True)
class CouplingChannel:
    """
    Base class of all coupling channel families.

    A channel couples every discrete level to one continuum. It contributes the
    rank-1 term f(λ)·g g† to the spectral density, where f is the scalar line
    shape of the family and g the complex amplitude vector (one entry per level).

    All complex analysis of a family is done on the scalar line shape:
        correlation(t)      ∫ f(λ) e^{-iλt} dλ
        stieltjes(z, sheet) ∫ f(λ) / (z - λ) dλ on the first sheet, its continuation on the second
    The kernel module multiplies these factors with 'outer()'.
    """

    kind = None
    # False: α(t) and first sheet transforms are integrated numerically by the kernel
    closed_form = True
    name: str = "channel"
    g: tuple = field(default_factory=tuple)

    @classmethod
    def implements(cls, kind):

        if getattr(cls, "kind", None) == kind:
            return True

        return False

    @classmethod
    def from_parameters(cls, name: str, g, parameters: dict):
        """
        build a channel from parsed model file content

        Parameters
        ----------
        name: str
            channel name
        g: iterable of complex
            coupling amplitudes
        parameters: dict
            family parameters as read from the file, values already converted to float

        Returns
        -------
        CouplingChannel: the validated channel
        """
        raise NotImplementedError

    def __post_init__(self):

        amplitudes = tuple(complex(x) for x in self.g)
        if len(amplitudes) == 0:
            raise ModelInputError(f"channel '{self.name}' needs at least one coupling amplitude")
        if not all(math.isfinite(x.real) and math.isfinite(x.imag) for x in amplitudes):
            raise ModelInputError(f"channel '{self.name}' has non-finite coupling amplitudes")

        object.__setattr__(self, "g", amplitudes)
        self.validate()

    # stub function, validates family parameters
    def validate(self):
        pass

    @property
    def coupling(self) -> np.ndarray:
        return np.array(self.g, dtype=complex)

    @property
    def is_real(self) -> bool:
        return all(x.imag == 0 for x in self.g)

    def outer(self) -> np.ndarray:
        """
        Returns
        -------
        numpy.ndarray: the N×N matrix g g†
        """
        v = self.coupling
        return np.outer(v, v.conj())

    @property
    def support(self) -> tuple:
        """
        Returns
        -------
        tuple: (lower, upper) edge of the continuum this channel couples to
        """
        raise NotImplementedError

    @property
    def quadrature_window(self) -> tuple:
        """
        finite integration range used whenever the kernel integrates the line shape numerically
        """
        return self.support

    @property
    def branch_points(self) -> tuple:
        return tuple(x for x in self.support if math.isfinite(x))

    @property
    def energy_scale(self) -> float:
        return max([abs(x) for x in self.branch_points] + [0.0])

    @property
    def is_markovian(self) -> bool:
        return False

    @property
    def continuable(self) -> bool:
        return True

    def in_support(self, lam) -> np.ndarray:
        lower, upper = self.support
        lam = np.asarray(lam, dtype=float)
        return (lam >= lower) & (lam <= upper)

    def line_shape(self, lam):
        raise NotImplementedError

    def strength(self) -> float:
        """
        Returns
        -------
        float: ∫ f(λ) dλ over the support
        """
        raise NotImplementedError

    def continuation(self, z):
        raise NotImplementedError

    def correlation(self, t):
        raise NotImplementedError

    def stieltjes(self, z: complex, sheet: int = FIRST_SHEET) -> complex:
        raise NotImplementedError

    def stieltjes_derivative(self, z: complex) -> complex:
        """
        derivative of the second sheet continuation of 'stieltjes'
        """
        raise NotImplementedError

    def parameters(self) -> dict:
        """
        Returns
        -------
        dict: family parameters as written to a model file
        """
        raise NotImplementedError

    def check_branch_point(self, z: complex) -> None:

        for edge in self.branch_points:
            if abs(z - edge) <= 1e-14 * max(1.0, abs(edge)):
                raise BranchPointError(f"z = {z} is a branch point of channel '{self.name}' ({self.kind})")

    def check_off_cut(self, z: complex) -> None:
        """
        first sheet values exist everywhere except on the support
        """

        if z.imag == 0 and bool(self.in_support(z.real)):
            raise SheetDomainError(f"z = {z} lies on the continuum of channel '{self.name}', "
                                   f"use the second sheet continuation or move off the real axis")

# EOF
