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
from scipy.integrate import quad

from module.common.errors import ModelInputError, SheetDomainError, NumericalToleranceError
from module.common.logging import get_logger
from module.model import SpectralDensityModel, FIRST_SHEET, SECOND_SHEET

log = get_logger()

# oscillatory quadrature gets unreliable beyond this many oscillations per support width
oscillation_warning_limit = 1e4


class CorrelationKernel:
    """
    Spectral correlation matrix of a model and its Laplace transforms.

        α(t)        = ∫ ω(λ) e^{-iλt} dλ
        iα(z)       = ∫ ω(λ) / (z - λ) dλ          first sheet, Im z > 0
        iα^II(z)    = continuation of iα(z) through the continuum into Im z <= 0

    Closed forms are used for flat windows and Lorentzians, every other family
    is integrated with adaptive Gauss-Kronrod quadrature (scipy.integrate.quad).
    """

    def __init__(self, model: SpectralDensityModel, quad_tolerance: float = 1e-10, quad_limit: int = 400):

        if not isinstance(model, SpectralDensityModel):
            raise ModelInputError("kernel needs a SpectralDensityModel")

        if not quad_tolerance > 0:
            raise ModelInputError(f"quadrature tolerance must be > 0, got {quad_tolerance}")

        self.model = model
        self.quad_tolerance = quad_tolerance
        self.quad_limit = quad_limit
        self.outers = [channel.outer() for channel in model.channels]

    @property
    def n_levels(self):
        return self.model.n_levels

    def _zero(self):
        return np.zeros((self.n_levels, self.n_levels), dtype=complex)

    def _quad(self, func, lower, upper, what, **kwargs):

        result = quad(func, lower, upper, epsabs=self.quad_tolerance, epsrel=self.quad_tolerance,
                      limit=self.quad_limit, full_output=1, **kwargs)

        value, error = result[0], result[1]

        log.debug3(f"quad {what} on [{lower}, {upper}]: value={value}, error={error}")

        if not math.isfinite(value) or error > 100 * self.quad_tolerance * max(1.0, abs(value)):
            raise NumericalToleranceError(f"quadrature of {what} did not converge "
                                          f"(estimate {value}, error {error})", error_estimate=error)

        return value

    def _quad_correlation(self, channel, t: float) -> complex:

        lower, upper = channel.quadrature_window

        if abs(t) * (upper - lower) > oscillation_warning_limit:
            log.warning(f"Correlation of channel '{channel.name}' evaluated by quadrature at t = {t}, "
                        f"|t|·width = {abs(t) * (upper - lower):.3g} exceeds {oscillation_warning_limit:g}")

        if t == 0:
            return complex(self._quad(channel.line_shape, lower, upper, f"α(0) of '{channel.name}'"))

        real = self._quad(channel.line_shape, lower, upper, f"Re α({t}) of '{channel.name}'",
                          weight="cos", wvar=t)
        imag = self._quad(channel.line_shape, lower, upper, f"Im α({t}) of '{channel.name}'",
                          weight="sin", wvar=t)

        return complex(real, -imag)

    def _quad_stieltjes(self, channel, z: complex) -> complex:

        channel.check_off_cut(z)

        lower, upper = channel.quadrature_window
        x, y = z.real, z.imag

        def real_part(lam):
            return channel.line_shape(lam) * (x - lam) / ((x - lam) ** 2 + y ** 2)

        def imag_part(lam):
            return -y * channel.line_shape(lam) / ((x - lam) ** 2 + y ** 2)

        points = [x] if lower < x < upper else None

        return complex(self._quad(real_part, lower, upper, f"Re iα({z}) of '{channel.name}'", points=points),
                       self._quad(imag_part, lower, upper, f"Im iα({z}) of '{channel.name}'", points=points))

    def channel_correlation(self, channel, t: float) -> complex:

        if channel.closed_form is True:
            return complex(channel.correlation(t))

        return self._quad_correlation(channel, t)

    def alpha_t(self, t: float) -> np.ndarray:
        """
        spectral correlation matrix α(t)

        Parameters
        ----------
        t: float
            time

        Returns
        -------
        numpy.ndarray: N×N complex matrix
        """

        t = float(t)
        if not math.isfinite(t):
            raise ModelInputError(f"α(t) needs a finite time, got {t}")

        result = self._zero()
        for channel, outer in zip(self.model.channels, self.outers):
            result += self.channel_correlation(channel, t) * outer

        return result

    def alpha_t_grid(self, times, regular_only: bool = False) -> np.ndarray:
        """
        α(t) on a grid of times. With 'regular_only' delta correlated channels
        are left out, see 'markovian_rate_matrix'.

        Returns
        -------
        numpy.ndarray: array of shape (len(times), N, N)
        """

        times = np.asarray(times, dtype=float)
        if not np.all(np.isfinite(times)):
            raise ModelInputError("α(t) needs finite times")

        result = np.zeros((len(times), self.n_levels, self.n_levels), dtype=complex)
        for channel, outer in zip(self.model.channels, self.outers):
            if regular_only is True and channel.is_markovian:
                continue
            if channel.closed_form is True:
                factors = np.asarray(channel.correlation(times), dtype=complex)
            else:
                factors = np.array([self._quad_correlation(channel, t) for t in times])
            result += np.einsum("k,ij->kij", factors, outer)

        return result

    def markovian_rate_matrix(self) -> np.ndarray:
        """
        π Σ g g† of all delta correlated channels. Their memory integral
        ∫_0^t α(t-τ)U(τ)dτ collapses to this matrix times U(t).
        """

        result = self._zero()
        for channel, outer in zip(self.model.channels, self.outers):
            if channel.is_markovian:
                result += np.pi * outer

        return result

    def i_alpha(self, z: complex, sheet: int = FIRST_SHEET) -> np.ndarray:
        """
        Stieltjes transform iα(z) = ∫ω(λ)/(z-λ)dλ of the spectral density.

        On the first (physical) sheet any z off the continuum is accepted, the
        lower half plane value is the physical one. On the second sheet the
        continuation through the continuum is returned.
        """

        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ModelInputError(f"z must be finite, got {z}")

        result = self._zero()
        for channel, outer in zip(self.model.channels, self.outers):
            if sheet == FIRST_SHEET and channel.closed_form is False:
                value = self._quad_stieltjes(channel, z)
            else:
                value = channel.stieltjes(z, sheet)
            result += value * outer

        return result

    def i_alpha_derivative(self, z: complex) -> np.ndarray:
        """
        d/dz of iα^II(z) on the second sheet
        """

        z = complex(z)
        result = self._zero()
        for channel, outer in zip(self.model.channels, self.outers):
            result += complex(channel.stieltjes_derivative(z)) * outer

        return result

    def alpha_z_first_sheet(self, z: complex) -> np.ndarray:
        """
        Laplace transform α(z) on the first sheet, Im z > 0
        """

        z = complex(z)
        if not z.imag > 0:
            raise SheetDomainError(f"first sheet transform needs Im z > 0, got {z}. "
                                   f"Use alpha_z_second_sheet for the lower half plane")

        return -1j * self.i_alpha(z, FIRST_SHEET)

    def alpha_z_second_sheet(self, z: complex) -> np.ndarray:
        """
        continuation α^II(z) of the Laplace transform into Im z <= 0
        """

        z = complex(z)
        if z.imag > 0:
            raise SheetDomainError(f"second sheet continuation needs Im z <= 0, got {z}")

        return -1j * self.i_alpha(z, SECOND_SHEET)

# EOF
