# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from module.oracle.discretization import (
    DiscretizedHamiltonian, discretize, valid_grid_rules, GRID_GAUSS, GRID_UNIFORM
)
from module.oracle.exact import exact_reduced_propagator, dispersion, line_shape, estimate_discretization_error

# EOF
