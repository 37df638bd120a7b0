# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import os

from argparse import ArgumentParser, RawDescriptionHelpFormatter

from module.common.logging import valid_log_levels
from module.config import default_config_file_path
from module import __version__, __version_date__

# command line options which override options of the 'numerics' config section
numerics_overrides = {
    "step": "step",
    "tmax": "t_max",
    "grid_m": "grid_m",
    "seed": "seed",
    "tol_root": "tol_root",
    "tol_deg": "tol_deg",
    "lambda_sweep": "lambda_sweep",
    "mode": "mode",
    "initial_state": "initial_state"
}


def fix_path(path):
    """
    turn a relative path into an absolute one, based on the current working directory
    """

    if path is None or len(path) == 0 or path == default_config_file_path or path[0] == os.sep:
        return path

    return os.path.realpath(os.getcwd() + os.sep + path)


def parse_command_line(self_description=None, command_names=None, args=None):
    """
    parse command line arguments, also add current version and version date to description

    Parameters
    ----------
    self_description: str
        short self-description of this program
    command_names: list
        names of all valid subcommands
    args: list
        arguments to parse instead of sys.argv

    Returns
    -------
    ArgumentParser object: with parsed command line arguments
    """

    # define command line options
    description = f"{self_description}\nVersion: {__version__} ({__version_date__})"

    parser = ArgumentParser(
        description=description,
        formatter_class=RawDescriptionHelpFormatter)

    parser.add_argument("command", nargs="?", choices=command_names,
                        help="subcommand to run")

    parser.add_argument("-c", "--config", default=[], dest="config_files", nargs='+',
                        help=f"points to the config file to read config data from which is not installed "
                             f"under the default path '{default_config_file_path}'",
                        metavar=os.path.basename(default_config_file_path))

    parser.add_argument("-g", "--generate_config", action="store_true",
                        help="generates default config file.")

    parser.add_argument("-l", "--log_level", choices=valid_log_levels,
                        help="set log level (overrides config)")

    parser.add_argument("--model", help="model file (INI or YAML) to run the subcommand on")

    parser.add_argument("--out", dest="output_dir",
                        help="directory to write artifacts to (overrides config)")

    parser.add_argument("--step", type=float, help="time step h of the Volterra solver")

    parser.add_argument("--tmax", type=float, help="end of the time grid")

    parser.add_argument("--grid-m", dest="grid_m", type=int,
                        help="number of continuum nodes of the discretized oracle")

    parser.add_argument("--seed", type=int, help="seed of all random sampling")

    parser.add_argument("--tol-root", dest="tol_root", type=float,
                        help="residual tolerance of the pole search")

    parser.add_argument("--tol-deg", dest="tol_deg", type=float,
                        help="relative eigenvalue gap below which W^II counts as degenerate")

    parser.add_argument("--lambda-sweep", dest="lambda_sweep",
                        help="comma separated window half widths Λ for the semigroup sweep")

    parser.add_argument("--mode", choices=["ww", "exact"],
                        help="residue mode of the pole approximation")

    parser.add_argument("--initial-state", dest="initial_state",
                        help="comma separated amplitudes of the initial state, complex as 'a+bj'")

    args = parser.parse_args(args)

    if args.generate_config is False:
        if args.command is None:
            parser.error("a subcommand is required unless '--generate_config' is used")
        if args.model is None:
            parser.error(f"subcommand '{args.command}' needs a model file, use '--model'")

    # fix supplied paths
    args.config_files = [fix_path(x) for x in args.config_files if len(x) > 0]
    args.model = fix_path(args.model)
    args.output_dir = fix_path(args.output_dir)

    return args


def numerics_overrides_from(args) -> dict:
    """
    Returns
    -------
    dict: 'numerics' option values given on the command line
    """

    return {option: getattr(args, attribute, None) for attribute, option in numerics_overrides.items()}

# EOF
