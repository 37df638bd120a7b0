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
import pytest

from module.analysis import (
    PropagatorSource, trajectory_source, pole_approx_source, markovian_source, semigroup_deviation,
    cross_pole_orthogonality, default_time_pairs, fit_decay_rate, fit_zeno_law, zeno_duration, golden_rule_rates,
    state_dispersion, markovianity_profile
)
from module.common.errors import FitRejectedError, ModelInputError
from module.evolution import ReducedPropagator, solve_memory_kernel
from module.kernel import CorrelationKernel
from module.resolvent import ReducedGenerator, find_poles, pole_approx_propagator


def test_decay_rate_of_a_weakly_coupled_level(weak_lorentzian_model):
    propagator = solve_memory_kernel(weak_lorentzian_model, t_max=600.0, step=0.1)
    poles = find_poles(ReducedGenerator(weak_lorentzian_model)).poles
    slowest = min(poles, key=lambda x: x.rate)

    fit = fit_decay_rate(propagator, dispersion=state_dispersion(weak_lorentzian_model, [1.0]))

    assert slowest.rate == pytest.approx(0.0050126, rel=1e-4)
    assert fit.rate == pytest.approx(slowest.rate, rel=5e-3)
    assert fit.r_squared > 0.9999
    assert fit.window[0] >= 200.0
    assert fit.lifetime == pytest.approx(1.0 / fit.rate)
    # amplitude rotates with the level energy
    assert fit.phase == pytest.approx(1.0, abs=1e-3)


def test_revival_rejects_the_fit():
    times = np.linspace(0.0, 10.0, 201)
    values = np.cos(times)[:, None, None].astype(complex)
    propagator = ReducedPropagator(times=times, values=values, step=0.05, scheme="test")

    with pytest.raises(FitRejectedError) as e:
        fit_decay_rate(propagator, window_start=0.0)

    assert e.value.revival_time == pytest.approx(0.5 * math.pi, abs=0.06)


def test_no_decay_rejects_the_fit(zero_coupling_model):
    propagator = solve_memory_kernel(zero_coupling_model, t_max=10.0, step=0.1)

    with pytest.raises(FitRejectedError):
        fit_decay_rate(propagator)
    with pytest.raises(FitRejectedError):
        fit_decay_rate(propagator, window_start=1.0)
    with pytest.raises(FitRejectedError):
        fit_decay_rate(propagator, window_start=9.95)


def test_zeno_law_of_the_golden_model(golden_model, golden_generator):
    poles = find_poles(golden_generator).poles
    dispersion = state_dispersion(golden_model, [1.0])
    times = np.linspace(0.0, 0.01 / math.sqrt(dispersion), 21)
    survival = np.abs(pole_approx_propagator(poles, times)[:, 0, 0]) ** 2

    fit = fit_zeno_law(times, survival)

    assert dispersion == pytest.approx(0.01, rel=1e-12)
    assert fit.dispersion == pytest.approx(dispersion, rel=1e-2)
    assert fit.window[1] == pytest.approx(0.1)

    with pytest.raises(ModelInputError):
        fit_zeno_law([0.0], [1.0])


def test_zeno_duration():
    times = np.linspace(0.0, 1.0, 101)
    survival = np.exp(-times ** 2)

    assert zeno_duration(times, survival, 1.0) == pytest.approx(0.15)
    assert zeno_duration(times, 1.0 - times ** 2, 1.0) == pytest.approx(1.0)

    with pytest.raises(ModelInputError):
        zeno_duration(times, survival, 0.0)


def test_golden_rule_rates(golden_model, narrow_model):
    assert golden_rule_rates(golden_model) == pytest.approx([0.4])

    rates = golden_rule_rates(narrow_model)
    # 2π·g²/(πγ) from the resonant channel, plus the far channel tail
    assert rates[0] == pytest.approx(2 * 0.05 ** 2 / 0.02 + 2 * 0.02 ** 2 * 0.02 / (1 + 0.02 ** 2), rel=1e-10)


def test_state_dispersion(narrow_model, markov_model):
    assert state_dispersion(narrow_model, [1.0, 0.0]) == pytest.approx(0.05 ** 2 + 0.02 ** 2)

    # level spread 1/4 plus c†α(0)c
    c = np.array([1.0, 1.0]) / math.sqrt(2)
    alpha_0 = CorrelationKernel(narrow_model).alpha_t(0.0)
    assert state_dispersion(narrow_model, [1.0, 1.0]) == pytest.approx(0.25 + np.vdot(c, alpha_0 @ c).real)

    assert math.isinf(state_dispersion(markov_model, [1.0, 0.0]))


def test_default_time_pairs():
    assert default_time_pairs(2.0) == [(2.0, 2.0), (2.0, 4.0), (4.0, 4.0)]

    with pytest.raises(ModelInputError):
        default_time_pairs(0.0)


def test_markovian_source_is_a_semigroup(markov_model):
    g = markov_model.channels[0].coupling
    source = markovian_source(markov_model, np.outer(g, g.conj()))

    report = semigroup_deviation(source, default_time_pairs(3.0))

    assert len(report.pairs) == 3
    assert report.max_deviation < 1e-12
    assert report.as_dict()["skipped"] == []


def test_golden_pole_sum_is_not_a_semigroup(golden_generator):
    poles = find_poles(golden_generator).poles
    report = semigroup_deviation(pole_approx_source(poles), default_time_pairs(10.0))

    assert report.max_deviation > 1e-2


def test_semigroup_skips_pairs_outside_the_window(golden_model):
    propagator = solve_memory_kernel(golden_model, t_max=10.0, step=0.05, richardson=False)
    report = semigroup_deviation(trajectory_source(propagator), [(2.0, 3.0), (4.0, 8.0)])

    assert report.pairs == [(2.0, 3.0)]
    assert len(report.skipped) == 1
    assert report.skipped[0]["pair"] == [4.0, 8.0]


def test_source_window():
    source = PropagatorSource(name="test", evaluate=lambda t: np.eye(1), t_max=5.0)
    assert source.covers(5.0) and not source.covers(5.1) and not source.covers(-0.1)


def test_markovian_poles_are_orthogonal(markov_model):
    poles = find_poles(ReducedGenerator(markov_model)).poles
    overlaps = cross_pole_orthogonality(poles)

    assert overlaps.shape == (2, 2)
    assert np.max(overlaps) < 1e-12


def test_narrow_resonance_poles_are_not_orthogonal(narrow_model):
    poles = find_poles(ReducedGenerator(narrow_model)).poles
    nearest = sorted(poles, key=lambda x: -x.z_pole.imag)[:2]
    overlaps = cross_pole_orthogonality(nearest)

    assert overlaps[0, 0] < 1e-10 and overlaps[1, 1] < 1e-10
    assert overlaps[0, 1] > 1e-3


def test_cross_pole_orthogonality_input(golden_generator):
    poles = find_poles(golden_generator).poles
    with pytest.raises(ModelInputError):
        cross_pole_orthogonality(poles[:1])


def test_markovianity_profile(markov_model, narrow_model, flattened_model, zero_coupling_model):
    markov = markovianity_profile(CorrelationKernel(markov_model), 5.0)
    assert markov.kernel_width == 0.0
    assert markov.flatness == pytest.approx(0.0, abs=1e-14)
    assert markov.delta_quality == pytest.approx(0.0, abs=1e-12)

    narrow = markovianity_profile(CorrelationKernel(narrow_model), 5.0)
    flattened = markovianity_profile(CorrelationKernel(flattened_model), 5.0)
    assert flattened.kernel_width < narrow.kernel_width
    assert flattened.flatness < narrow.flatness
    assert flattened.delta_quality < 0.1

    idle = markovianity_profile(CorrelationKernel(zero_coupling_model), 5.0)
    assert idle.as_dict() == {"kernel_width": 0.0, "flatness": 0.0, "delta_quality": 0.0, "t_probe": 5.0}

    with pytest.raises(ModelInputError):
        markovianity_profile(CorrelationKernel(markov_model), 0.0)

# EOF
