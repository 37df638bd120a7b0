# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
import os

import numpy as np
import pytest

from module.config.parser import ConfigParser
from module.kernel import CorrelationKernel
from module.model import (
    LevelSet, SpectralDensityModel, LorentzianChannel, FlatWindowChannel, OhmicChannel, FULL_LINE, HALF_LINE
)
from module.resolvent import ReducedGenerator

repository_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
models_dir = os.path.join(repository_root, "models")


def one_level_lorentzian(energy=1.0, g=0.1, center=1.0, width=0.05, name="lorentzian"):
    return SpectralDensityModel(levels=LevelSet(energies=(energy,)),
                                channels=(LorentzianChannel(name="peak", g=(g,), center=center, width=width),),
                                spectrum_kind=FULL_LINE, name=name)


def one_level_flat(energy=0.0, omega_0=0.02, half_width=80.0, name="flat"):
    return SpectralDensityModel(levels=LevelSet(energies=(energy,)),
                                channels=(FlatWindowChannel(name="band", g=(math.sqrt(omega_0),),
                                                            lambda_min=-half_width, lambda_max=half_width),),
                                spectrum_kind=FULL_LINE, name=name)


def two_level_lorentzian(width, name="two_level"):
    return SpectralDensityModel(levels=LevelSet(energies=(0.0, 1.0)),
                                channels=(LorentzianChannel(name="lower", g=(0.05, 0.03), center=0.0, width=width),
                                          LorentzianChannel(name="upper", g=(0.02, 0.05), center=1.0, width=width)),
                                spectrum_kind=FULL_LINE, name=name)


def markov_flat_model():
    return SpectralDensityModel(levels=LevelSet(energies=(0.0, 1.0)),
                                channels=(FlatWindowChannel(name="flat", g=(0.1, 0.05 + 0.05j)),),
                                spectrum_kind=FULL_LINE, name="markov_flat")


def half_line_flat_model():
    return SpectralDensityModel(levels=LevelSet(energies=(1.0,)),
                                channels=(FlatWindowChannel(name="band", g=(0.1,), lambda_min=0.0,
                                                            lambda_max=10.0),),
                                spectrum_kind=HALF_LINE, name="half_line_flat")


@pytest.fixture(autouse=True)
def reset_config_parser():
    """
    the settings parser is a singleton, every test starts without parsed files
    """
    ConfigParser().reset()
    yield
    ConfigParser().reset()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def golden_model():
    return one_level_lorentzian()


@pytest.fixture
def weak_lorentzian_model():
    return one_level_lorentzian(g=0.05, width=1.0, name="weak_lorentzian")


@pytest.fixture
def flat_model():
    return one_level_flat()


@pytest.fixture
def narrow_model():
    return two_level_lorentzian(0.02, name="narrow_resonance")


@pytest.fixture
def flattened_model():
    return two_level_lorentzian(50.0, name="flattened")


@pytest.fixture
def markov_model():
    return markov_flat_model()


@pytest.fixture
def half_line_model():
    return half_line_flat_model()


@pytest.fixture
def ohmic_model():
    return SpectralDensityModel(levels=LevelSet(energies=(1.0,)),
                                channels=(OhmicChannel(name="bath", g=(0.1,), exponent=1.0, cutoff=5.0),),
                                spectrum_kind=HALF_LINE, name="ohmic")


@pytest.fixture
def zero_coupling_model():
    return SpectralDensityModel(levels=LevelSet(energies=(0.5, 1.5)),
                                channels=(LorentzianChannel(name="idle", g=(0.0, 0.0), center=1.0, width=0.1),),
                                spectrum_kind=FULL_LINE, name="zero_coupling")


@pytest.fixture
def golden_generator(golden_model):
    return ReducedGenerator(golden_model, CorrelationKernel(golden_model))


@pytest.fixture
def model_path():

    def _path(file_name):
        return os.path.join(models_dir, file_name)

    return _path

# EOF
