# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import numpy as np

from module.common.errors import ModelInputError
from module.common.logging import get_logger
from module.evolution import ReducedPropagator
from module.model import SpectralDensityModel
from module.oracle.discretization import DiscretizedHamiltonian, discretize, GRID_GAUSS

log = get_logger()

# fraction of the recurrence time the oracle is trusted for
recurrence_guard = 0.5

# times evaluated per vectorized block
time_block = 256


def _uniform_times(t_grid):

    times = np.asarray(t_grid, dtype=float).ravel()

    if len(times) == 0 or not np.all(np.isfinite(times)):
        raise ModelInputError("oracle time grid must be a non-empty array of finite times")

    if times[0] != 0:
        raise ModelInputError(f"oracle time grid must start at t = 0, got {times[0]}")

    if len(times) == 1:
        return times, 0.0

    steps = np.diff(times)
    step = float(steps[0])
    if step <= 0 or not np.allclose(steps, step, rtol=1e-9, atol=1e-12 * max(1.0, times[-1])):
        raise ModelInputError("oracle time grid must be uniform and increasing")

    return times, step


def exact_reduced_propagator(dh: DiscretizedHamiltonian, t_grid) -> ReducedPropagator:
    """
    U^red(t) = P exp(-iHt) P on a uniform grid from the cached eigendecomposition.

    Times beyond half the recurrence time get a warning attached to the result,
    the finite grid starts to revive there.
    """

    times, step = _uniform_times(t_grid)
    energies, rows = dh.eigensystem

    values = np.empty((len(times), dh.n_levels, dh.n_levels), dtype=complex)
    for start in range(0, len(times), time_block):
        block = times[start:start + time_block]
        phases = np.exp(-1j * np.outer(block, energies))
        values[start:start + time_block] = np.einsum("ik,tk,jk->tij", rows, phases, rows.conj(), optimize=True)

    warnings = list(dh.warnings)
    limit = recurrence_guard * dh.recurrence_time
    if times[-1] > limit:
        message = f"oracle evaluated up to t = {times[-1]:.4g}, beyond {recurrence_guard}·t_rec = {limit:.4g}"
        log.warning(message)
        warnings.append(message)

    return ReducedPropagator(times=times, values=values, step=step,
                             scheme=f"exact diagonalization (M = {dh.grid_size}, {dh.grid_rule} grid)",
                             order=0, error_estimate=None, warnings=warnings)


def dispersion(dh: DiscretizedHamiltonian, state) -> float:
    """
    ΔH² = ⟨ψ|H²|ψ⟩ - ⟨ψ|H|ψ⟩² for the discrete state ψ = Σ c_α|φ_α⟩

    Raises
    ------
    ModelInputError: state is not normalized
    """

    c = np.asarray(state, dtype=complex).ravel()
    if len(c) != dh.n_levels:
        raise ModelInputError(f"state has {len(c)} amplitudes, model has {dh.n_levels} levels")

    if abs(np.linalg.norm(c) - 1.0) > 1e-10:
        raise ModelInputError(f"state must be normalized, got norm {np.linalg.norm(c)}")

    h_psi = dh.matrix[:, :dh.n_levels] @ c
    mean = np.vdot(c, h_psi[:dh.n_levels]).real

    return float(np.vdot(h_psi, h_psi).real - mean ** 2)


def line_shape(dh: DiscretizedHamiltonian, state) -> tuple:
    """
    eigenvalues of the discretized Hamiltonian and the overlap weights |⟨E_k|ψ⟩|²
    of a discrete state, the spectral line of ψ
    """

    c = np.asarray(state, dtype=complex).ravel()
    if len(c) != dh.n_levels:
        raise ModelInputError(f"state has {len(c)} amplitudes, model has {dh.n_levels} levels")

    energies, rows = dh.eigensystem

    return energies, np.abs(c.conj() @ rows) ** 2


def estimate_discretization_error(model: SpectralDensityModel, grid_m: int, t_grid, grid_rule: str = GRID_GAUSS,
                                  truncation: float = None, ohmic_cutoff: float = 40.0) -> float:
    """
    max_t ‖U_M(t) - U_{M/2}(t)‖_F, the change of the oracle when the grid is halved
    """

    fine = exact_reduced_propagator(discretize(model, grid_m, grid_rule, truncation, ohmic_cutoff), t_grid)
    coarse = exact_reduced_propagator(discretize(model, grid_m // 2, grid_rule, truncation, ohmic_cutoff), t_grid)

    estimate = float(np.max(np.linalg.norm(fine.values - coarse.values, axis=(1, 2))))
    log.debug(f"Discretization error estimate for M = {grid_m}: {estimate:.3g}")

    return estimate

# EOF
