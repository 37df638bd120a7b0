# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

"""
End to end properties of the lab on models with known answers. Everything that
diagonalizes a continuum of 4000 nodes is marked slow.
"""

import math

import numpy as np
import pytest

from conftest import one_level_lorentzian, one_level_flat, two_level_lorentzian, markov_flat_model, \
    half_line_flat_model
from module.analysis import (
    oracle_source, pole_approx_source, markovian_source, semigroup_deviation, cross_pole_orthogonality,
    fit_decay_rate, fit_zeno_law, zeno_duration, golden_rule_rates, state_dispersion
)
from module.evolution import solve_memory_kernel, build_resonant_density
from module.evolution.memory import time_grid
from module.oracle import discretize, exact_reduced_propagator, dispersion
from module.resolvent import (
    ReducedGenerator, find_poles, spectral_projectors, pole_approx_propagator, background_integral, MODE_EXACT,
    MODE_WW
)

oracle_grid_m = 4000

flat_omega_0 = 0.02
flat_half_widths = [5.0, 20.0, 80.0]

# fixed composition times for the narrow and the flattened two level model
semigroup_pairs = [(4.0, 4.0), (4.0, 8.0), (8.0, 8.0)]


def max_distance(a, b):
    return float(np.max(np.linalg.norm(a - b, axis=(1, 2))))


def nearest_poles(poles, count):
    return sorted(poles, key=lambda x: -x.z_pole.imag)[:count]


@pytest.fixture(scope="module")
def golden():
    model = one_level_lorentzian(name="golden")
    poles = find_poles(ReducedGenerator(model)).poles
    window = float(time_grid(3.0 / min(x.rate for x in poles), 0.02)[-1])
    return model, poles, window


@pytest.fixture(scope="module")
def wide_flat_oracle():
    model = one_level_flat(omega_0=flat_omega_0, half_width=80.0)
    return model, discretize(model, oracle_grid_m)


@pytest.fixture(scope="module")
def two_level_regimes():
    regimes = dict()
    for name, width in (("narrow", 0.02), ("flattened", 50.0)):
        model = two_level_lorentzian(width, name=name)
        poles = find_poles(ReducedGenerator(model)).poles
        regimes[name] = (model, poles, discretize(model, oracle_grid_m))
    return regimes


@pytest.mark.slow
def test_one_level_lorentzian_agreement(golden):
    model, poles, window = golden

    assert window == pytest.approx(60.0)

    volterra = solve_memory_kernel(model, t_max=window, step=0.02)
    pole_sum = pole_approx_propagator(poles, volterra.times, MODE_EXACT)
    oracle = exact_reduced_propagator(discretize(model, oracle_grid_m), volterra.times)

    assert max_distance(volterra.values, pole_sum) < 1e-4
    assert max_distance(volterra.values, oracle.values) < 1e-4
    assert max_distance(pole_sum, oracle.values) < 1e-4


@pytest.mark.parametrize("factory", [one_level_lorentzian, markov_flat_model, half_line_flat_model,
                                     lambda: two_level_lorentzian(0.02)])
def test_first_sheet_has_no_zeros(factory):
    model = factory()
    generator = ReducedGenerator(model)
    rng = np.random.default_rng(12345)

    energies = np.array(model.levels.energies)
    scale = model.scale
    real_parts = np.linspace(energies.min() - 2 * scale, energies.max() + 2 * scale, 20)
    imaginary_parts = np.linspace(0.01, 2.0, 10)

    violations = 0
    for re_z in real_parts:
        for im_z in imaginary_parts:
            vectors = rng.normal(size=(model.n_levels, 1000)) + 1j * rng.normal(size=(model.n_levels, 1000))
            norms = np.sum(np.abs(vectors) ** 2, axis=0)
            margin = generator.numerical_range_margin(complex(re_z, im_z), vectors)
            violations += int(np.count_nonzero(margin < -1e-12 * scale * norms))

    assert violations == 0


@pytest.mark.parametrize("half_width", flat_half_widths)
def test_flat_window_pole_rate(half_width):
    model = one_level_flat(omega_0=flat_omega_0, half_width=half_width)
    poles = find_poles(ReducedGenerator(model)).poles

    assert len(poles) == 1
    # the finite window raises the rate by 1/(1 - 2ω₀/Λ)
    assert poles[0].rate == pytest.approx(2 * math.pi * flat_omega_0 / (1 - 2 * flat_omega_0 / half_width),
                                          rel=1e-3)
    if half_width == 80.0:
        assert poles[0].rate == pytest.approx(2 * math.pi * flat_omega_0, rel=1e-2)


@pytest.mark.slow
def test_flat_window_oracle_rate(wide_flat_oracle):
    model, dh = wide_flat_oracle
    times = np.arange(0, 901) * 0.05

    oracle = exact_reduced_propagator(dh, times)
    fit = fit_decay_rate(oracle, dispersion=state_dispersion(model, [1.0]))

    assert oracle.warnings == []
    assert fit.rate == pytest.approx(2 * math.pi * flat_omega_0, rel=1e-2)


@pytest.mark.parametrize("factory", [markov_flat_model, lambda: two_level_lorentzian(0.02),
                                     lambda: two_level_lorentzian(50.0)])
def test_projector_algebra_at_sampled_points(factory):
    model = factory()
    generator = ReducedGenerator(model)
    rng = np.random.default_rng(12345)
    identity = np.eye(model.n_levels)

    energies = np.array(model.levels.energies)
    for _ in range(50):
        z = complex(rng.uniform(energies.min() - 1.0, energies.max() + 1.0), -rng.uniform(0.05, 1.0))
        projectors = [x[0] for x in spectral_projectors(generator, z)]

        assert np.linalg.norm(sum(projectors) - identity) < 1e-10
        for a, q_a in enumerate(projectors):
            for b, q_b in enumerate(projectors):
                expected = q_a if a == b else 0 * q_a
                assert np.linalg.norm(q_a @ q_b - expected) < 1e-10


@pytest.mark.slow
def test_flattening_restores_the_semigroup(two_level_regimes):
    measured = dict()
    for name, (model, poles, dh) in two_level_regimes.items():
        report = semigroup_deviation(oracle_source(dh), semigroup_pairs)
        assert report.skipped == []

        overlaps = cross_pole_orthogonality(nearest_poles(poles, model.n_levels))
        measured[name] = (report.max_deviation, overlaps[0, 1])

    narrow_deviation, narrow_overlap = measured["narrow"]
    flat_deviation, flat_overlap = measured["flattened"]

    assert narrow_deviation > 1e-3
    assert narrow_overlap > 1e-4
    assert flat_deviation < narrow_deviation / 10
    assert flat_overlap < narrow_overlap / 10


def test_markovian_model_is_an_exact_semigroup():
    model = markov_flat_model()
    poles = find_poles(ReducedGenerator(model)).poles

    for source in (pole_approx_source(poles), markovian_source(model, build_resonant_density(model))):
        assert semigroup_deviation(source, semigroup_pairs).max_deviation < 1e-12

    assert np.max(cross_pole_orthogonality(poles)) < 1e-10


@pytest.mark.slow
def test_zeno_law_of_the_oracle(wide_flat_oracle):
    model, dh = wide_flat_oracle
    expected = state_dispersion(model, [1.0])
    times = np.linspace(0.0, 0.01 / math.sqrt(expected), 21)

    oracle = exact_reduced_propagator(dh, times)
    fit = fit_zeno_law(times, np.abs(oracle.values[:, 0, 0]) ** 2)

    assert dispersion(dh, [1.0]) == pytest.approx(expected, rel=1e-12)
    assert fit.dispersion == pytest.approx(expected, rel=1e-2)
    assert fit.max_relative_error < 1e-2


def test_dispersion_grows_linearly_with_the_window():
    values = [state_dispersion(one_level_flat(omega_0=flat_omega_0, half_width=x), [1.0]) for x in flat_half_widths]
    slope, _ = np.polyfit(flat_half_widths, values, 1)

    assert slope == pytest.approx(2 * flat_omega_0, rel=2e-2)

    # the discretized continuum carries the same dispersion
    for half_width, value in zip(flat_half_widths, values):
        dh = discretize(one_level_flat(omega_0=flat_omega_0, half_width=half_width), 200)
        assert dispersion(dh, [1.0]) == pytest.approx(value, rel=1e-12)


@pytest.mark.slow
def test_poles_and_background_reproduce_the_oracle():
    model = half_line_flat_model()
    generator = ReducedGenerator(model)
    poles = find_poles(generator).poles

    assert len(poles) == 1

    t_zeno = 1.0 / math.sqrt(state_dispersion(model, [1.0]))
    lifetime = 1.0 / poles[0].rate
    times = np.arange(0, 161) * 0.25

    oracle = exact_reduced_propagator(discretize(model, oracle_grid_m), times)
    inside = (times >= t_zeno) & (times <= 2 * lifetime)

    assert np.count_nonzero(inside) > 10
    for t, expected in zip(times[inside], oracle.values[inside]):
        value = pole_approx_propagator(poles, t, MODE_EXACT, generator) + background_integral(generator, t).value
        assert np.linalg.norm(value - expected) < 5e-3


@pytest.mark.slow
def test_volterra_is_second_order(golden):
    model, poles, window = golden

    errors = list()
    for step in (0.04, 0.02):
        volterra = solve_memory_kernel(model, t_max=window, step=step, richardson=False)
        errors.append(max_distance(volterra.values, pole_approx_propagator(poles, volterra.times, MODE_EXACT)))

    assert errors[0] / errors[1] >= 3.6


@pytest.mark.slow
def test_rates_of_a_flat_window_agree(wide_flat_oracle):
    model, dh = wide_flat_oracle
    times = np.arange(0, 901) * 0.05

    fitted = fit_decay_rate(exact_reduced_propagator(dh, times), dispersion=state_dispersion(model, [1.0])).rate
    pole = find_poles(ReducedGenerator(model)).poles[0].rate
    golden_rule = golden_rule_rates(model)[0]

    for a, b in ((fitted, pole), (pole, golden_rule), (fitted, golden_rule)):
        assert a == pytest.approx(b, rel=2e-2)


@pytest.mark.slow
def test_wider_windows_are_closer_to_a_semigroup():
    deviations = list()
    for half_width in (2.5, 5.0, 10.0, 20.0):
        dh = discretize(one_level_flat(omega_0=flat_omega_0, half_width=half_width), oracle_grid_m)
        deviations.append(semigroup_deviation(oracle_source(dh), semigroup_pairs).max_deviation)

    assert all(a >= b for a, b in zip(deviations, deviations[1:]))
    assert deviations[-1] < deviations[0] / 4


@pytest.mark.slow
def test_pole_approximation_improves_with_weaker_coupling():
    couplings = [0.04, 0.02, 0.01]
    errors = list()

    for omega_0 in couplings:
        model = one_level_flat(omega_0=omega_0, half_width=20.0)
        pole = find_poles(ReducedGenerator(model)).poles

        t_zeno = 1.0 / math.sqrt(state_dispersion(model, [1.0]))
        times = np.linspace(0.0, 3.0 / pole[0].rate, 601)
        inside = times >= t_zeno

        oracle = exact_reduced_propagator(discretize(model, oracle_grid_m), times)
        approximation = pole_approx_propagator(pole, times, MODE_WW)
        errors.append(max_distance(approximation[inside], oracle.values[inside]))

    slope, _ = np.polyfit(np.log(couplings), np.log(errors), 1)

    assert errors[0] > errors[1] > errors[2]
    assert slope > 0.5


def test_zeno_regime_shrinks_with_the_dispersion():
    times = np.linspace(0.0, 1.0, 2001)

    durations, dispersions = list(), list()
    for half_width in (5.0, 20.0, 80.0):
        dh = discretize(one_level_flat(omega_0=flat_omega_0, half_width=half_width), 1000)
        dispersions.append(dispersion(dh, [1.0]))
        survival = np.abs(exact_reduced_propagator(dh, times).values[:, 0, 0]) ** 2
        durations.append(zeno_duration(times, survival, dispersions[-1]))

    assert dispersions[0] < dispersions[1] < dispersions[2]
    assert durations[0] > durations[1] > durations[2]

# EOF
