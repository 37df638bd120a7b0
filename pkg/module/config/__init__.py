# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

default_config_file_path = "./settings.ini"

common_config_section_name = "common"
numerics_config_section_name = "numerics"
check_config_section_name = "check"

env_var_prefix = "WWL"

# only these sections can be set through environment variables
env_config_section_names = [common_config_section_name]

# EOF
