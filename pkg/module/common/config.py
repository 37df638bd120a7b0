# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.


from module.config.option import ConfigOption
from module.config.base import ConfigBase
from module.config import common_config_section_name, env_var_prefix
from module.common.logging import log_file_max_rotation, log_file_max_size_in_mb


class CommonConfig(ConfigBase):
    """Controls the parameters for logging and the location of written artifacts.
    All options of this section can also be set as environment variables
    named WWL_COMMON_<OPTION>, e.g. WWL_COMMON_OUTPUT_DIR.
    """

    section_name = common_config_section_name

    def __init__(self):
        self.options = [
            ConfigOption("log_level",
                         str,
                         description="""\
                         Logs will always be printed to stdout.
                         Logging can be set to following log levels:
                           ERROR:      Fatal errors which stop a run (failed checks, invalid models)
                           WARNING:    Numerical warnings (stability, recurrence, truncated supports)
                                       which don't stop the run but are worth a look.
                           INFO:       Progress of a subcommand and summary results
                           DEBUG:      Parsed config, model details and solver settings
                           DEBUG2:     Solver iterations like Newton steps or Volterra progress
                           DEBUG3:     Raw quadrature diagnostics. Very verbose.
                         """,
                         default_value="INFO"),

            ConfigOption("log_to_file",
                         bool,
                         description="""Enabling this options will write all
                         logs to a log file defined in 'log_file'
                         """,
                         default_value=False),

            ConfigOption("log_file",
                         str,
                         description=f"""Destination of the log file if "log_to_file" is enabled.
                         Log file will be rotated maximum {log_file_max_rotation} times once
                         the log file reaches size of {log_file_max_size_in_mb} MB
                         """,
                         default_value="log/ww_lab.log"),

            ConfigOption("output_dir",
                         str,
                         description=f"""Directory all CSV/JSON artifacts and the run metadata
                         are written to. Can also be defined with the environment variable
                         {env_var_prefix}_{common_config_section_name.upper()}_OUTPUT_DIR
                         """,
                         default_value="output")
        ]

        super().__init__()

# EOF
