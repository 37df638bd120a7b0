# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from module.resolvent.generator import ReducedGenerator
from module.resolvent.poles import (
    PoleRecord, PoleSearchReport, find_poles, projector_at, spectral_projectors, residue_at_pole,
    pole_approx_propagator, weak_coupling_estimates, MODE_WW, MODE_EXACT, valid_modes
)
from module.resolvent.background import BackgroundTerm, background_integral

# EOF
