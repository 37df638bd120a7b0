# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from module.common.errors import ModelInputError


@dataclass(frozen=True, eq=False)
class ReducedPropagator:
    """
    U^red(t_k) on a uniform time grid starting at t = 0.

    'error_estimate' is the reported global error bound of the scheme
    (None if not estimated), 'warnings' collects numerical warnings of the run.
    """

    times: np.ndarray
    values: np.ndarray
    step: float
    scheme: str
    order: int = 2
    error_estimate: float = None
    warnings: list = field(default_factory=list)

    def __post_init__(self):

        if self.values.ndim != 3 or self.values.shape[0] != len(self.times):
            raise ModelInputError(f"propagator values of shape {self.values.shape} don't match "
                                  f"{len(self.times)} times")

    def __len__(self):
        return len(self.times)

    @property
    def n_levels(self) -> int:
        return self.values.shape[1]

    @property
    def t_max(self) -> float:
        return float(self.times[-1])

    def index_of(self, t: float):
        """
        Returns
        -------
        int: grid index of t, None if t is not a grid point
        """

        if self.step <= 0:
            return None

        index = int(round(t / self.step))
        if 0 <= index < len(self.times) and abs(self.times[index] - t) <= 1e-9 * max(self.step, abs(t)):
            return index

        return None

    def at(self, t: float) -> np.ndarray:
        """
        U^red(t), grid values are returned exactly, times in between are
        interpolated by a cubic spline

        Raises
        ------
        ModelInputError: t outside [0, t_max]
        """

        t = float(t)
        if t < 0 or t > self.t_max * (1 + 1e-12):
            raise ModelInputError(f"t = {t} outside the propagator window [0, {self.t_max}]")

        index = self.index_of(t)
        if index is not None:
            return self.values[index]

        return self._spline(t)

    def _spline(self, t):

        flat = self.values.reshape(len(self.times), -1)
        real = CubicSpline(self.times, flat.real, axis=0)(t)
        imag = CubicSpline(self.times, flat.imag, axis=0)(t)

        return (real + 1j * imag).reshape(self.n_levels, self.n_levels)

    def singular_value_max(self) -> np.ndarray:
        """
        largest singular value of U^red(t_k) for every grid time
        """
        return np.linalg.norm(self.values, ord=2, axis=(1, 2))


def normalized_state(state, n_levels: int) -> np.ndarray:
    """
    validate and normalize initial amplitudes c_α

    Returns
    -------
    numpy.ndarray: complex unit vector of length n_levels
    """

    c = np.asarray(state, dtype=complex).ravel()
    if len(c) != n_levels:
        raise ModelInputError(f"initial state has {len(c)} amplitudes, model has {n_levels} levels")

    norm = np.linalg.norm(c)
    if not np.isfinite(norm) or norm == 0:
        raise ModelInputError("initial state must have a finite nonzero norm")

    return c / norm


def survival_probability(propagator, state) -> np.ndarray:
    """
    |c† U^red(t) c|² for every grid time

    Parameters
    ----------
    propagator: ReducedPropagator or numpy.ndarray of shape (n, N, N)
        reduced propagator values
    state: iterable of complex
        initial amplitudes c_α, normalized here

    Returns
    -------
    numpy.ndarray: survival probability per time
    """

    values = propagator.values if isinstance(propagator, ReducedPropagator) else np.asarray(propagator)
    if values.ndim == 2:
        values = values[np.newaxis]

    c = normalized_state(state, values.shape[1])
    amplitude = np.einsum("i,kij,j->k", c.conj(), values, c)

    return np.abs(amplitude) ** 2

# EOF
