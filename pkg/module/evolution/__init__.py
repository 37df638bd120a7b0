# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from module.evolution.propagator import ReducedPropagator, normalized_state, survival_probability
from module.evolution.memory import solve_memory_kernel, solve_memory_kernel_interaction
from module.evolution.markovian import (
    solve_markovian, markovian_generator, markovian_propagator, build_resonant_density, window_integral
)

# EOF
