# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from module.model.channels import (
    CouplingChannel, FlatWindowChannel, LorentzianChannel, OhmicChannel, valid_channels, channel_class_for,
    FIRST_SHEET, SECOND_SHEET
)
from module.model.spectral_density import (
    LevelSet, SpectralDensityModel, omega_at, omega_continuation, total_strength, HALF_LINE, FULL_LINE
)
from module.model.model_file import load_model, parse_model_content, serialize_model, write_model, model_hash

# EOF
