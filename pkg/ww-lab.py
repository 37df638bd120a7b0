#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

self_description = """
Pole approximation and memory kernel evolution of discrete levels coupled to a continuum
"""


from datetime import datetime

from module.common.misc import grab, get_relative_time, check_library_versions
from module.common.cli_parser import parse_command_line, numerics_overrides_from
from module.common.logging import setup_logging
from module.commands import run, command_names
from module.commands.config import NumericsConfig, CheckConfig
from module.commands.run_config import RunConfig
from module.common.errors import ModelInputError
from module.config.parser import ConfigParser
from module.common.config import CommonConfig
from module.config.file_output import ConfigFileOutput
from module import __version__, __version_date__, __description__


def main():

    start_time = datetime.now()

    # parse command line
    args = parse_command_line(self_description=self_description, command_names=command_names())

    # write out default config file and exit if "generate_config" is defined
    ConfigFileOutput(args)

    # parse config files and environment variables
    config_parse_handler = ConfigParser()
    config_parse_handler.add_config_file_list(args.config_files)
    config_parse_handler.read_config()

    # read common config
    common_config = CommonConfig().parse(do_log=False)

    # cli option overwrites config file
    log_level = grab(args, "log_level", fallback=common_config.log_level)

    log_file = None
    if common_config.log_to_file is True:
        log_file = common_config.log_file

    # setup logging
    log = setup_logging(log_level, log_file)

    # now we are ready to go
    log.info(f"Starting {__description__} v{__version__} ({__version_date__})")
    for config_file in config_parse_handler.file_list:
        log.debug(f"Using config file: {config_file}")

    # exit if any parser errors occurred here
    config_parse_handler.log_end_exit_on_errors()

    check_library_versions()

    # just to print config options to log/console
    CommonConfig().parse()

    numerics = NumericsConfig().parse(overrides=numerics_overrides_from(args))
    check = CheckConfig().parse()

    try:
        run_config = RunConfig(command=args.command,
                               model_path=args.model,
                               output_dir=grab(args, "output_dir", fallback=common_config.output_dir),
                               numerics=numerics,
                               check=check)
    except ModelInputError as e:
        log.error(f"Invalid run settings: {e}")
        exit(1)

    exit_code = run(run_config)

    # finish
    log.info(f"Finished '{args.command}' in {get_relative_time(datetime.now() - start_time)}")

    exit(exit_code)


if __name__ == "__main__":
    main()

# EOF
