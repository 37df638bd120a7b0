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
import scipy.linalg

from module.common.errors import (
    BranchPointError, DegeneracyError, NearDefectivePoleError, ResolventConsistencyError, ModelInputError
)
from module.common.logging import get_logger
from module.model import SECOND_SHEET
from module.resolvent.generator import ReducedGenerator

log = get_logger()

MODE_WW = "ww"
MODE_EXACT = "exact"

valid_modes = [MODE_WW, MODE_EXACT]

# retry circle around a level seed, relative to the model scale
level_retry_radius = 0.1


@dataclass(frozen=True, eq=False)
class PoleRecord:
    """
    A zero of det h^II(z) in the lower half plane together with the
    eigenvalue branch of W^II which satisfies ω(z_pole) = z_pole.
    'projector' and 'residue' are None if the branch is degenerate or defective.
    """

    z_pole: complex
    branch: int
    eigenvalue_branch: complex
    right_vec: np.ndarray
    left_vec: np.ndarray
    projector: np.ndarray
    residue: np.ndarray
    newton_residual: float

    @property
    def rate(self) -> float:
        """
        survival probability decay rate -2 Im z
        """
        return -2.0 * self.z_pole.imag


@dataclass
class PoleSearchReport:
    poles: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    unmatched_seeds: list = field(default_factory=list)

    def add_note(self, note):
        log.debug(f"Pole search: {note}")
        self.notes.append(note)


def _sorted_eig(w: np.ndarray):

    eigenvalues, left, right = scipy.linalg.eig(w, left=True, right=True)
    order = np.lexsort((eigenvalues.imag, eigenvalues.real))

    return eigenvalues[order], left[:, order], right[:, order]


def _check_gap(eigenvalues, branches, scale, tol_deg):

    for b in branches:
        for other in range(len(eigenvalues)):
            if other == b:
                continue
            gap = abs(eigenvalues[b] - eigenvalues[other]) / scale
            if gap < tol_deg:
                raise DegeneracyError(f"eigenvalue branches {min(b, other)} and {max(b, other)} of W^II collide "
                                      f"(relative gap {gap:.3g} < {tol_deg:g})",
                                      branches=(min(b, other), max(b, other)))


def _projector(left, right, b):

    r = right[:, b] / np.linalg.norm(right[:, b])
    l_vec = left[:, b]
    overlap = np.vdot(l_vec, r)

    if overlap == 0:
        raise DegeneracyError(f"eigenvalue branch {b} of W^II is defective", branches=(b,))

    l_vec = l_vec / np.conj(overlap)

    return np.outer(r, l_vec.conj()), r, l_vec


def projector_at(generator: ReducedGenerator, z: complex, branch: int, tol_deg: float = 1e-8):
    """
    normalized rank-1 spectral projector of W^II(z) for one eigenvalue branch.
    Branches are numbered by ascending (Re, Im) of the eigenvalue.

    Parameters
    ----------
    generator: ReducedGenerator
        resolvent evaluators of the model
    z: complex
        point on the second sheet
    branch: int
        index of the eigenvalue branch
    tol_deg: float
        relative eigenvalue gap below which branches count as colliding

    Returns
    -------
    tuple: (Q, ω) projector matrix and eigenvalue of the branch
    """

    w = generator.w_second_sheet(z)

    if not 0 <= int(branch) < generator.n_levels:
        raise ModelInputError(f"branch {branch} out of range for {generator.n_levels} level(s)")

    eigenvalues, left, right = _sorted_eig(w)
    _check_gap(eigenvalues, [int(branch)], max(np.linalg.norm(w), generator.scale * 1e-300), tol_deg)

    q, _, _ = _projector(left, right, int(branch))

    return q, complex(eigenvalues[int(branch)])


def spectral_projectors(generator: ReducedGenerator, z: complex, tol_deg: float = 1e-8) -> list:
    """
    all branch projectors of W^II(z) at once

    Returns
    -------
    list: of (Q, ω) tuples ordered by branch index
    """

    w = generator.w_second_sheet(z)
    eigenvalues, left, right = _sorted_eig(w)
    _check_gap(eigenvalues, range(len(eigenvalues)), max(np.linalg.norm(w), generator.scale * 1e-300), tol_deg)

    return [(_projector(left, right, b)[0], complex(eigenvalues[b])) for b in range(len(eigenvalues))]


def _exact_residue(generator, z, projector, right_vec, left_vec, tol_defect):

    derivative = complex(np.vdot(left_vec, generator.w_second_sheet_derivative(z) @ right_vec))
    denominator = 1.0 - derivative

    if abs(denominator) < tol_defect:
        raise NearDefectivePoleError(f"1 - dω/dz = {denominator} vanishes at pole z = {z}")

    return projector / denominator


def residue_at_pole(generator: ReducedGenerator, pole: PoleRecord, mode: str = MODE_EXACT,
                    tol_defect: float = 1e-10) -> np.ndarray:
    """
    residue of R^II(z) at a pole

    'ww' returns the projector Q(z_pole), 'exact' returns Q(z_pole) / (1 - dω/dz)
    """

    if mode not in valid_modes:
        raise ModelInputError(f"unknown residue mode '{mode}', choose one of {valid_modes}")

    if pole.projector is None:
        raise DegeneracyError(f"pole {pole.z_pole} has no projector (degenerate branch)")

    if mode == MODE_WW:
        return pole.projector

    return _exact_residue(generator, pole.z_pole, pole.projector, pole.right_vec, pole.left_vec, tol_defect)


def pole_approx_propagator(poles: list, t, mode: str = MODE_EXACT, generator: ReducedGenerator = None):
    """
    pole approximation Σ_j exp(-i z_j t) · residue_j

    Parameters
    ----------
    poles: list of PoleRecord
        poles to sum over
    t: float or array
        time or times >= 0
    mode: str
        'ww' uses the projectors, 'exact' the exact residues
    generator: ReducedGenerator
        only needed for exact mode if a pole record carries no residue

    Returns
    -------
    numpy.ndarray: N×N matrix, or (len(t), N, N) for an array of times
    """

    if len(poles) == 0:
        raise ModelInputError("pole approximation needs at least one pole")

    times = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(times < 0):
        raise ModelInputError("pole approximation is defined for t >= 0")

    n = poles[0].projector.shape[0]
    result = np.zeros((len(times), n, n), dtype=complex)

    for pole in poles:
        if mode == MODE_EXACT and pole.residue is not None:
            residue = pole.residue
        elif mode == MODE_EXACT:
            residue = residue_at_pole(generator, pole, MODE_EXACT)
        else:
            residue = residue_at_pole(generator, pole, MODE_WW)

        result += np.einsum("k,ij->kij", np.exp(-1j * pole.z_pole * times), residue)

    if np.ndim(t) == 0:
        return result[0]

    return result


def _safe_diagonal_transform(generator, lam):
    """
    iα^II_αα at a real energy, shifted off a branch point if necessary
    """

    try:
        return generator.kernel.i_alpha(complex(lam), SECOND_SHEET)
    except BranchPointError:
        return generator.kernel.i_alpha(complex(lam + 1e-9 * generator.scale), SECOND_SHEET)


def weak_coupling_estimates(generator: ReducedGenerator) -> list:
    """
    second order estimates per level: level shift Δ (principal value),
    probability decay rate 2πω_αα(λ_α) and the pole estimate λ_α + Δ - iπω_αα(λ_α)

    Returns
    -------
    list: of dicts with keys 'label', 'energy', 'shift', 'rate', 'seed'
    """

    estimates = list()
    for index, (label, energy) in enumerate(zip(generator.model.levels.labels, generator.model.levels.energies)):
        value = complex(_safe_diagonal_transform(generator, energy)[index, index])
        estimates.append({
            "label": label,
            "energy": energy,
            "shift": value.real,
            "rate": -2.0 * value.imag,
            "seed": complex(energy + value)
        })

    return estimates


def _newton(generator, start, found, tol_step, max_iter):
    """
    Newton iteration on det h^II with the trace formula
        d'/d = tr(h^-1 h') - Σ 1/(z - z_found)
    the sum deflates roots found before.
    """

    scale = generator.scale
    z = complex(start)

    for iteration in range(max_iter):

        h = generator.h_second_sheet(z)
        try:
            ratio = np.trace(np.linalg.solve(h, generator.h_second_sheet_derivative(z)))
        except np.linalg.LinAlgError:
            # h is exactly singular
            return z, True

        ratio -= sum(1.0 / (z - x) for x in found)

        if ratio == 0 or not np.isfinite(ratio):
            return z, False

        step = 1.0 / ratio
        z_new = z - step

        # upper half plane values belong to the first sheet, mirror the step back
        if z_new.imag > 0:
            z_new = z_new.conjugate()

        log.debug2(f"Newton iteration {iteration}: z = {z_new}, |step| = {abs(step):.3g}")

        if not (math.isfinite(z_new.real) and math.isfinite(z_new.imag)) or abs(z_new - start) > 1e3 * scale:
            return z_new, False

        if abs(z_new - z) <= tol_step * scale:
            return z_new, True

        z = z_new

    return z, False


def _default_seeds(generator):
    """
    (seed, retry radius) pairs: the weak coupling estimate of every level, then
    one seed per Lorentzian channel next to its singularity at μ - iγ
    """

    scale = generator.scale
    seeds = [(x["seed"], level_retry_radius * scale) for x in weak_coupling_estimates(generator)]

    energies = np.array(generator.model.levels.energies)
    for channel in generator.model.lorentzian_channels:
        singularity = complex(channel.center, -channel.width)
        shift = complex(np.sum(np.abs(channel.coupling) ** 2 / (singularity - energies)))

        # strong coupling moves the pole far from μ - iγ, start between the singularity and the axis then
        if abs(shift) < 0.5 * channel.width:
            seed = singularity + shift
        else:
            seed = complex(channel.center + 0.1 * channel.width, -0.5 * channel.width)

        seeds.append((seed, min(level_retry_radius * scale, 0.5 * channel.width)))

    return seeds


def _build_record(generator, z, residual, tol_deg, tol_defect, report):

    w = generator.w_second_sheet(z)
    eigenvalues, left, right = _sorted_eig(w)
    branch = int(np.argmin(np.abs(eigenvalues - z)))

    projector = residue = right_vec = left_vec = None
    try:
        _check_gap(eigenvalues, [branch], max(np.linalg.norm(w), generator.scale * 1e-300), tol_deg)
        projector, right_vec, left_vec = _projector(left, right, branch)
        residue = _exact_residue(generator, z, projector, right_vec, left_vec, tol_defect)
    except DegeneracyError as e:
        report.add_note(f"pole {z}: {e}")
    except NearDefectivePoleError as e:
        report.add_note(f"pole {z}: {e}")

    return PoleRecord(z_pole=z, branch=branch, eigenvalue_branch=complex(eigenvalues[branch]),
                      right_vec=right_vec, left_vec=left_vec, projector=projector, residue=residue,
                      newton_residual=residual)


def find_poles(generator: ReducedGenerator, seeds: list = None, max_poles: int = None, tol_root: float = 1e-10,
               tol_step: float = 1e-13, max_iter: int = 100, tol_deg: float = 1e-8,
               tol_defect: float = 1e-10, attempts: int = 4) -> PoleSearchReport:
    """
    Find zeros of det h^II(z) in the lower half plane by deflated Newton iteration.

    Seeds default to the second order pole estimate of every level followed by one
    seed per Lorentzian channel. Every seed is tried with a small real offset first,
    later attempts start on a circle around the seed, of radius 0.1·scale for level
    seeds and at most half the channel width for Lorentzian seeds. Roots on the real axis are
    not reported (no decay), they are only noted and deflated.

    Parameters
    ----------
    generator: ReducedGenerator
        resolvent evaluators of the model
    seeds: list of complex
        start values, defaults see above
    max_poles: int
        stop after this many poles, defaults to number of levels + number of Lorentzian channels
    tol_root: float
        accepted |det h^II(z)| relative to scale^N
    tol_step: float
        Newton step size (relative to scale) counted as converged
    max_iter: int
        Newton iterations per attempt
    tol_deg: float
        relative eigenvalue gap below which branches count as colliding
    tol_defect: float
        smallest accepted |1 - dω/dz| for an exact residue
    attempts: int
        start values tried per seed

    Returns
    -------
    PoleSearchReport: poles sorted by real part, notes and unmatched seeds
    """

    model = generator.model
    scale = generator.scale

    if max_poles is None:
        max_poles = model.n_levels + len(model.lorentzian_channels)

    if seeds is None:
        seeds = _default_seeds(generator)
    else:
        seeds = [(complex(x), level_retry_radius * scale) for x in seeds]

    report = PoleSearchReport()
    found = list()
    real_roots = list()

    for seed, radius in seeds:

        if len(report.poles) >= max_poles:
            break

        seed = complex(seed)
        matched = False

        for attempt in range(attempts):

            if attempt == 0:
                start = seed + 1e-2 * radius
            else:
                start = seed + radius * np.exp(2j * np.pi * (attempt - 1) / max(1, attempts - 1) + 0.5j)

            try:
                z, converged = _newton(generator, start, found + real_roots, tol_step, max_iter)
            except BranchPointError as e:
                report.add_note(f"seed {seed}: Newton hit a branch point ({e})")
                continue

            if not converged:
                log.debug2(f"Pole search: seed {seed} attempt {attempt} did not converge")
                continue

            residual = abs(generator.determinant(z)) if np.isfinite(z) else math.inf
            if residual > tol_root * scale ** model.n_levels:
                log.debug2(f"Pole search: seed {seed} converged to {z} with residual {residual:.3g}, rejected")
                continue

            if abs(z.imag) <= 1e-8 * scale:
                report.add_note(f"root {z} lies on the real axis, not reported (no decay)")
                real_roots.append(z)
                matched = True
                break

            if z.imag > 0:
                raise ResolventConsistencyError(f"found zero of det h^II at {z} with Im z > 0, "
                                                f"the first sheet has no zeros")

            if any(abs(z - x) <= 1e-8 * scale for x in found):
                report.add_note(f"seed {seed} converged to known pole {z}, merged")
                continue

            found.append(z)
            report.poles.append(_build_record(generator, z, residual, tol_deg, tol_defect, report))
            log.debug(f"Pole search: seed {seed} converged to {z} (residual {residual:.3g})")
            matched = True
            break

        if not matched:
            report.unmatched_seeds.append(seed)

    if len(report.poles) == 0:
        report.add_note("no pole found below the real axis")

    report.poles.sort(key=lambda x: (x.z_pole.real, x.z_pole.imag))

    return report

# EOF
