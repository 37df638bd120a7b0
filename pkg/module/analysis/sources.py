# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from module.evolution import ReducedPropagator, markovian_propagator
from module.oracle import DiscretizedHamiltonian
from module.oracle.exact import recurrence_guard
from module.resolvent import pole_approx_propagator, MODE_EXACT

SOURCE_ORACLE = "oracle"
SOURCE_VOLTERRA = "volterra"
SOURCE_POLE_APPROX = "pole_approx"
SOURCE_MARKOVIAN = "markovian"


@dataclass(frozen=True)
class PropagatorSource:
    """
    anything that returns U^red(t) for a time inside [t_min, t_max]
    """

    name: str
    evaluate: Callable
    t_min: float = 0.0
    t_max: float = math.inf

    def covers(self, t: float) -> bool:
        return self.t_min <= t <= self.t_max

    def __call__(self, t: float) -> np.ndarray:
        return self.evaluate(t)


def oracle_source(dh: DiscretizedHamiltonian) -> PropagatorSource:
    return PropagatorSource(name=SOURCE_ORACLE, evaluate=dh.reduced_propagator,
                            t_max=recurrence_guard * dh.recurrence_time)


def trajectory_source(propagator: ReducedPropagator, name: str = SOURCE_VOLTERRA) -> PropagatorSource:
    return PropagatorSource(name=name, evaluate=propagator.at, t_max=propagator.t_max)


def pole_approx_source(poles: list, mode: str = MODE_EXACT, generator=None) -> PropagatorSource:

    def evaluate(t):
        return pole_approx_propagator(poles, float(t), mode, generator)

    return PropagatorSource(name=SOURCE_POLE_APPROX, evaluate=evaluate)


def markovian_source(model, omega) -> PropagatorSource:

    def evaluate(t):
        return markovian_propagator(model, omega, t)

    return PropagatorSource(name=SOURCE_MARKOVIAN, evaluate=evaluate)

# EOF
