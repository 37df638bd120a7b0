# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
from dataclasses import dataclass, field, asdict
from functools import cached_property

import numpy as np

from module.analysis import (
    semigroup_deviation, default_time_pairs, golden_rule_rates, markovian_source, fit_decay_rate, fit_zeno_law,
    state_dispersion, markovianity_profile
)
from module.commands.command_base import CommandBase
from module.common.errors import (
    DegeneracyError, SheetDomainError, ResolventConsistencyError, NearDefectivePoleError, FitRejectedError
)
from module.common.logging import get_logger
from module.evolution import solve_memory_kernel, build_resonant_density, survival_probability
from module.evolution.memory import time_grid
from module.model import omega_at, HALF_LINE
from module.oracle import exact_reduced_propagator
from module.resolvent import spectral_projectors, pole_approx_propagator, background_integral, MODE_EXACT

log = get_logger()

# number of energies the spectral density is probed at
psd_points = 401


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float = None
    threshold: float = None
    detail: str = ""
    skipped: bool = False


@dataclass
class CheckReport:
    model: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(bool(x.passed) for x in self.results)

    def add(self, result: CheckResult):

        if result.skipped is True:
            log.info(f"Check '{result.name}' skipped: {result.detail}")
        elif result.passed:
            log.info(f"Check '{result.name}' passed: {result.value:.6g} (threshold {result.threshold:.6g})")
        else:
            log.error(f"Check '{result.name}' FAILED: {result.value} (threshold {result.threshold}) {result.detail}")

        self.results.append(result)

    def as_dict(self) -> dict:
        return {
            "model": self.model,
            "passed": self.passed,
            "results": [asdict(x) for x in self.results]
        }


def max_frobenius_distance(a, b) -> float:
    return float(np.max(np.linalg.norm(a - b, axis=(1, 2))))


class CheckCommand(CommandBase):
    """
    Runs the invariant suite on a model. Every check compares a measured value
    against a threshold of the 'check' config section.
    """

    name = "check"
    description = "invariant and acceptance suite"

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.thresholds = self.config.check
        self.rng = np.random.default_rng(self.settings.seed)
        self.poles = list()

    def energy_window(self):

        energies = np.array(self.model.levels.energies)
        scale = self.model.scale

        return energies.min() - 2 * scale, energies.max() + 2 * scale

    def check_positive_density(self):

        lower, upper = self.energy_window()
        smallest = math.inf
        for lam in np.linspace(lower, upper, psd_points):
            omega = omega_at(self.model, lam)
            smallest = min(smallest, float(np.min(np.linalg.eigvalsh(omega))) / max(1.0, np.linalg.norm(omega)))

        return CheckResult("spectral density positive semidefinite", passed=bool(smallest >= -1e-12),
                           value=-smallest, threshold=1e-12)

    def check_hermitian_kernel(self):

        times = np.linspace(0.0, self.window, 25)
        forward = self.kernel.alpha_t_grid(times, regular_only=True)
        backward = self.kernel.alpha_t_grid(-times, regular_only=True)

        value = max_frobenius_distance(backward, np.conj(np.swapaxes(forward, 1, 2)))
        threshold = 1e-9 * max(1.0, float(np.max(np.linalg.norm(forward, axis=(1, 2)))))

        return CheckResult("α(-t) = α(t)†", passed=bool(value <= threshold), value=value, threshold=threshold)

    def check_first_sheet(self):

        lower, upper = self.energy_window()
        n_vectors = self.thresholds.random_vectors
        violations = 0
        worst = math.inf

        for x in np.linspace(lower, upper, self.thresholds.range_points_re):
            for y in np.linspace(self.thresholds.range_im_min, self.thresholds.range_im_max,
                                 self.thresholds.range_points_im):
                vectors = self.rng.normal(size=(self.model.n_levels, n_vectors)) + \
                    1j * self.rng.normal(size=(self.model.n_levels, n_vectors))
                margin = self.generator.numerical_range_margin(complex(x, y), vectors)
                norms = np.sum(np.abs(vectors) ** 2, axis=0)
                tolerance = 1e-12 * self.model.scale * norms
                violations += int(np.count_nonzero(margin < -tolerance))
                worst = min(worst, float(np.min(margin / norms)))

        return CheckResult("first sheet numerical range bound", passed=violations == 0, value=float(violations),
                           threshold=0.0, detail=f"smallest margin per ‖χ‖²: {worst:.3g}")

    def check_projector_algebra(self):

        if not self.model.is_continuable:
            return CheckResult("projector algebra", passed=True, skipped=True, detail="no second sheet continuation")

        lower, upper = self.energy_window()
        scale = self.model.scale
        identity = np.eye(self.model.n_levels)
        worst, evaluated = 0.0, 0

        for _ in range(self.thresholds.sample_points):
            z = complex(self.rng.uniform(lower, upper), -self.rng.uniform(0.01 * scale, scale))
            try:
                projectors = [x[0] for x in spectral_projectors(self.generator, z, self.settings.tol_deg)]
            except (DegeneracyError, SheetDomainError) as e:
                log.debug(f"Projector algebra at {z} skipped: {e}")
                continue

            evaluated += 1
            worst = max(worst, float(np.linalg.norm(sum(projectors) - identity)))
            for a, q_a in enumerate(projectors):
                for b, q_b in enumerate(projectors):
                    expected = q_a if a == b else 0.0
                    worst = max(worst, float(np.linalg.norm(q_a @ q_b - expected)))

        threshold = self.thresholds.projector_tolerance
        return CheckResult("projector algebra", passed=bool(worst < threshold), value=worst, threshold=threshold,
                           detail=f"{evaluated} sampled points")

    def check_poles(self):

        if not self.model.is_continuable:
            return CheckResult("poles below the real axis", passed=True, skipped=True,
                               detail="no second sheet continuation")

        try:
            self.poles = self.find_poles().poles
        except (ResolventConsistencyError, NearDefectivePoleError) as e:
            return CheckResult("poles below the real axis", passed=False, value=math.nan, threshold=0.0,
                               detail=str(e))

        highest = max((x.z_pole.imag for x in self.poles), default=-math.inf)

        return CheckResult("poles below the real axis", passed=bool(highest < 0), value=float(highest),
                           threshold=0.0, detail=f"{len(self.poles)} pole(s)")

    def meromorphic_ready(self, name):

        if not self.model.is_meromorphic or len(self.poles) == 0:
            return CheckResult(name, passed=True, skipped=True,
                               detail="needs a meromorphic model with at least one pole")

        return None

    def check_agreement(self):

        name = "Volterra, pole sum and oracle agree"
        skipped = self.meromorphic_ready(name)
        if skipped is not None:
            return skipped

        step = self.settings.step
        volterra = solve_memory_kernel(self.model, self.kernel, self.window, step)
        pole_sum = pole_approx_propagator(self.poles, volterra.times, MODE_EXACT, self.generator)

        distances = {"volterra-poles": max_frobenius_distance(volterra.values, pole_sum)}

        if self.oracle_available():
            oracle = exact_reduced_propagator(self.oracle_hamiltonian, volterra.times)
            distances["volterra-oracle"] = max_frobenius_distance(volterra.values, oracle.values)
            distances["poles-oracle"] = max_frobenius_distance(pole_sum, oracle.values)

        threshold = max(self.thresholds.agreement, volterra.error_estimate or 0.0)
        value = max(distances.values())

        return CheckResult(name, passed=bool(value < threshold), value=value, threshold=threshold,
                           detail=", ".join(f"{k}: {v:.3g}" for k, v in distances.items()))

    def check_order(self):

        name = "Volterra second order"
        skipped = self.meromorphic_ready(name)
        if skipped is not None:
            return skipped

        errors = list()
        for step in (2 * self.settings.step, self.settings.step):
            volterra = solve_memory_kernel(self.model, self.kernel, self.window, step, richardson=False)
            reference = pole_approx_propagator(self.poles, volterra.times, MODE_EXACT, self.generator)
            errors.append(max_frobenius_distance(volterra.values, reference))

        if errors[1] < 1e-13:
            return CheckResult(name, passed=True, skipped=True, detail="errors at roundoff level")

        ratio = errors[0] / errors[1]
        threshold = self.thresholds.order_ratio

        return CheckResult(name, passed=bool(ratio >= threshold), value=ratio, threshold=threshold,
                           detail=f"errors {errors[0]:.3g} and {errors[1]:.3g}")

    def check_markovian_semigroup(self):

        rates = [x for x in golden_rule_rates(self.model) if x > 0]
        tau = 1.0 / max(rates) if len(rates) > 0 else self.window / 4

        report = semigroup_deviation(markovian_source(self.model, build_resonant_density(self.model)),
                                     default_time_pairs(tau))
        threshold = self.thresholds.semigroup_tolerance

        return CheckResult("Markovian propagator is a semigroup", passed=bool(report.max_deviation < threshold),
                           value=report.max_deviation, threshold=threshold)

    @cached_property
    def oracle_hamiltonian(self):
        return self.discretize()

    def oracle_ready(self, name):

        if not self.oracle_available():
            return CheckResult(name, passed=True, skipped=True,
                               detail="unbounded flat channel without 'truncation', no oracle")

        return None

    def check_decay_rate(self):

        name = "decay rate consistency"
        skipped = self.oracle_ready(name)
        if skipped is not None:
            return skipped

        if self.model.n_levels != 1 or len(self.poles) == 0:
            return CheckResult(name, passed=True, skipped=True, detail="needs one level with a pole")

        pole_rate = min(x.rate for x in self.poles)
        flatness = markovianity_profile(self.kernel, 1.0 / pole_rate).flatness
        if flatness > self.thresholds.flatness_limit:
            return CheckResult(name, passed=True, skipped=True,
                               detail=f"spectral density varies by {flatness:.3g} across the line width")

        times = time_grid(self.window, self.settings.step)
        oracle = exact_reduced_propagator(self.oracle_hamiltonian, times)
        try:
            fit = fit_decay_rate(oracle, dispersion=state_dispersion(self.model, [1.0], self.kernel))
        except FitRejectedError as e:
            return CheckResult(name, passed=False, value=math.nan, threshold=self.thresholds.rate_tolerance,
                               detail=f"oracle decay fit rejected: {e.reason}")

        rates = {"oracle fit": fit.rate, "pole": pole_rate, "golden rule": float(golden_rule_rates(self.model)[0])}
        values = list(rates.values())
        value = max(abs(a - b) / abs(b) for a in values for b in values)
        threshold = self.thresholds.rate_tolerance

        return CheckResult(name, passed=bool(value < threshold), value=value, threshold=threshold,
                           detail=", ".join(f"{k}: {v:.6g}" for k, v in rates.items()))

    def check_zeno_law(self):

        name = "Zeno quadratic law"
        skipped = self.oracle_ready(name)
        if skipped is not None:
            return skipped

        state = self.initial_state
        expected = state_dispersion(self.model, state, self.kernel)
        if not math.isfinite(expected) or expected <= 0:
            return CheckResult(name, passed=True, skipped=True, detail=f"ΔH² = {expected}")

        # below the Zeno time and below the memory time of the kernel
        t_end = self.thresholds.zeno_fraction * min(1.0 / math.sqrt(expected), 1.0 / self.model.scale)
        times = np.linspace(0.0, t_end, 21)

        oracle = exact_reduced_propagator(self.oracle_hamiltonian, times)
        fit = fit_zeno_law(times, survival_probability(oracle, state))

        value = abs(fit.dispersion - expected) / expected
        threshold = self.thresholds.zeno_tolerance

        return CheckResult(name, passed=bool(value < threshold), value=value, threshold=threshold,
                           detail=f"fitted ΔH² {fit.dispersion:.6g}, expected {expected:.6g} on [0, {t_end:.3g}]")

    def check_background(self):

        name = "poles and background reproduce the oracle"
        skipped = self.oracle_ready(name)
        if skipped is not None:
            return skipped

        if self.model.spectrum_kind != HALF_LINE or not self.model.is_continuable or len(self.poles) == 0:
            return CheckResult(name, passed=True, skipped=True,
                               detail="needs a continuable half line model with at least one pole")

        state = self.initial_state
        t_zeno = 1.0 / math.sqrt(state_dispersion(self.model, state, self.kernel))
        t_end = 2.0 / min(x.rate for x in self.poles)
        if t_end <= t_zeno:
            return CheckResult(name, passed=True, skipped=True, detail="lifetime shorter than the Zeno time")

        times = np.linspace(0.0, t_end, self.thresholds.background_points + 1)
        oracle = exact_reduced_propagator(self.oracle_hamiltonian, times)

        value = 0.0
        inside = times >= t_zeno
        for t, expected in zip(times[inside], oracle.values[inside]):
            approximation = pole_approx_propagator(self.poles, t, MODE_EXACT, self.generator) + \
                background_integral(self.generator, t).value
            value = max(value, float(np.linalg.norm(approximation - expected)))

        threshold = self.thresholds.background_tolerance

        return CheckResult(name, passed=bool(value < threshold), value=value, threshold=threshold,
                           detail=f"{np.count_nonzero(inside)} times in [{t_zeno:.3g}, {t_end:.3g}]")

    @property
    def window(self) -> float:
        """
        time window of the trajectory checks, three lifetimes of the slowest pole if known
        """

        if self.settings.t_max is not None or len(self.poles) == 0:
            return self.t_max

        slowest = min(x.rate for x in self.poles)
        if slowest <= 0:
            return self.t_max

        # whole steps
        return float(time_grid(3.0 / slowest, self.settings.step)[-1])

    def run(self):

        report = CheckReport(model=self.model.name)

        report.add(self.check_positive_density())
        report.add(self.check_poles())
        report.add(self.check_hermitian_kernel())
        report.add(self.check_first_sheet())
        report.add(self.check_projector_algebra())
        report.add(self.check_agreement())
        report.add(self.check_order())
        report.add(self.check_markovian_semigroup())
        report.add(self.check_decay_rate())
        report.add(self.check_zeno_law())
        report.add(self.check_background())

        self.writer.write_json("check_report.json", report.as_dict())

        if report.passed:
            log.info(f"All checks passed for model '{self.model.name}'")
        else:
            log.error(f"Checks failed for model '{self.model.name}'")

        return report.passed

# EOF
