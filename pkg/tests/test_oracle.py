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
from scipy.special import gammaincc

from module.common.errors import ConfigurationError, ModelInputError
from module.oracle import (
    discretize, exact_reduced_propagator, dispersion, line_shape, estimate_discretization_error, GRID_UNIFORM
)
from module.resolvent import find_poles, pole_approx_propagator


def test_grid_size_limits(golden_model, narrow_model):
    with pytest.raises(ModelInputError):
        discretize(narrow_model, 19)
    with pytest.raises(ModelInputError):
        discretize(golden_model, 20001)
    with pytest.raises(ModelInputError):
        discretize(golden_model, 100, grid_rule="chebyshev")
    with pytest.raises(ModelInputError):
        discretize(golden_model, 100, truncation=-1.0)


def test_unbounded_support_needs_truncation(markov_model):
    with pytest.raises(ConfigurationError):
        discretize(markov_model, 200)

    dh = discretize(markov_model, 200, truncation=50.0)
    assert dh.windows["flat"] == (-50.0, 50.0)
    assert math.isinf(dh.tail_mass["flat"])
    assert len(dh.warnings) == 1


def test_matrix_layout(narrow_model):
    dh = discretize(narrow_model, 100)

    assert dh.dim == 102
    assert dh.grid_size == 100
    assert np.allclose(dh.matrix, dh.matrix.conj().T)
    assert np.allclose(dh.matrix[:2, :2], narrow_model.h0)
    assert list(np.bincount(dh.node_channels)) == [50, 50]


@pytest.mark.parametrize("grid_rule", ["gauss", GRID_UNIFORM])
def test_weights_reproduce_channel_strength(golden_model, half_line_model, grid_rule):
    dh = discretize(golden_model, 400, grid_rule)
    assert np.sum(dh.weights) == pytest.approx(1.0, rel=1e-12)
    assert dh.tail_mass["peak"] == 0.0
    assert dh.warnings == []

    dh = discretize(half_line_model, 400, grid_rule)
    assert np.sum(dh.weights) == pytest.approx(10.0, rel=1e-12)
    assert dh.windows["band"] == (0.0, 10.0)


def test_ohmic_tail_mass(ohmic_model):
    dh = discretize(ohmic_model, 400)
    assert dh.tail_mass["bath"] == pytest.approx(gammaincc(2.0, 40.0))
    assert dh.warnings == []

    dh = discretize(ohmic_model, 400, ohmic_cutoff=5.0)
    assert dh.tail_mass["bath"] == pytest.approx(6.0 * math.exp(-5.0))
    assert len(dh.warnings) == 1


def test_dispersion_is_coupling_strength(golden_model, flat_model):
    assert dispersion(discretize(golden_model, 400), [1.0]) == pytest.approx(0.01, rel=1e-12)
    # flat window of width 2Λ
    assert dispersion(discretize(flat_model, 400), [1.0]) == pytest.approx(0.02 * 160.0, rel=1e-12)

    with pytest.raises(ModelInputError):
        dispersion(discretize(golden_model, 400), [2.0])
    with pytest.raises(ModelInputError):
        dispersion(discretize(golden_model, 400), [1.0, 0.0])


def test_line_shape_is_a_distribution(narrow_model):
    dh = discretize(narrow_model, 200)
    energies, weights = line_shape(dh, np.array([1.0, 1.0j]) / math.sqrt(2))

    assert len(energies) == dh.dim
    assert np.all(weights >= 0)
    assert np.sum(weights) == pytest.approx(1.0, rel=1e-12)


def test_oracle_is_unitary_on_the_full_space(narrow_model):
    dh = discretize(narrow_model, 100)
    reduced = dh.reduced_propagator(3.0)

    assert np.allclose(dh.reduced_propagator(0.0), np.eye(2))
    assert np.linalg.norm(reduced, ord=2) <= 1.0 + 1e-12


def test_oracle_matches_the_pole_sum_of_the_golden_model(golden_model, golden_generator):
    dh = discretize(golden_model, 2000)
    oracle = exact_reduced_propagator(dh, np.linspace(0.0, 20.0, 401))
    poles = find_poles(golden_generator).poles

    expected = pole_approx_propagator(poles, oracle.times)

    assert oracle.warnings == []
    assert np.max(np.abs(oracle.values - expected)) < 1e-3


def test_oracle_grid_must_be_uniform(golden_model):
    dh = discretize(golden_model, 100)

    for grid in ([], [0.5, 1.0], [0.0, 1.0, 1.5], [0.0, math.inf]):
        with pytest.raises(ModelInputError):
            exact_reduced_propagator(dh, grid)

    single = exact_reduced_propagator(dh, [0.0])
    assert np.allclose(single.values[0], np.eye(1))


def test_recurrence_warning(flat_model):
    dh = discretize(flat_model, 200)
    assert dh.recurrence_time < 20.0

    oracle = exact_reduced_propagator(dh, np.linspace(0.0, 20.0, 201))
    assert any("t_rec" in x for x in oracle.warnings)


def test_discretization_error_estimate_shrinks(golden_model):
    times = np.linspace(0.0, 10.0, 101)
    coarse = estimate_discretization_error(golden_model, 100, times)
    fine = estimate_discretization_error(golden_model, 800, times)

    assert fine < coarse

# EOF
