# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from module.analysis.sources import (
    PropagatorSource, oracle_source, trajectory_source, pole_approx_source, markovian_source,
    SOURCE_ORACLE, SOURCE_VOLTERRA, SOURCE_POLE_APPROX, SOURCE_MARKOVIAN
)
from module.analysis.semigroup import (
    SemigroupReport, semigroup_deviation, cross_pole_orthogonality, default_time_pairs
)
from module.analysis.rates import (
    DecayFit, ZenoFit, fit_decay_rate, fit_zeno_law, zeno_duration, golden_rule_rates, state_dispersion
)
from module.analysis.markovianity import MarkovianityProfile, markovianity_profile

# EOF
