# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

# define all available subcommands here
from module.commands.kernel import KernelCommand
from module.commands.evolve import EvolveCommand
from module.commands.poles import PolesCommand
from module.commands.background import BackgroundCommand
from module.commands.oracle import OracleCommand
from module.commands.semigroup import SemigroupCommand
from module.commands.check import CheckCommand

from module.commands.run_config import RunConfig
from module.common.errors import (
    ModelInputError, ConfigurationError, SheetDomainError, NotApplicableError, UnsupportedContinuationError,
    NumericalToleranceError, DegeneracyError, NearDefectivePoleError, ResolventConsistencyError,
    IntegrationAbortedError, FitRejectedError
)
from module.common.logging import get_logger
from module.common.output import ArtifactWriter
from module.model import load_model, model_hash

# list of valid subcommands
valid_commands = [KernelCommand, EvolveCommand, PolesCommand, BackgroundCommand, OracleCommand, SemigroupCommand,
                  CheckCommand]

# errors which end a subcommand with exit code 1
run_errors = (
    ModelInputError, ConfigurationError, SheetDomainError, NotApplicableError, UnsupportedContinuationError,
    NumericalToleranceError, DegeneracyError, NearDefectivePoleError, ResolventConsistencyError,
    IntegrationAbortedError, FitRejectedError
)

log = get_logger()


def command_names() -> list:
    return [x.name for x in valid_commands]


def command_class_for(command_name):

    for possible_command_class in valid_commands:
        if possible_command_class.implements(command_name):
            return possible_command_class

    return None


def run(config: RunConfig) -> int:
    """
    load the model, run one subcommand and write its metadata

    Returns
    -------
    int: exit code, 0 on success
    """

    command_class = command_class_for(config.command)
    if command_class is None:
        log.error(f"Unknown command '{config.command}', valid commands are: {', '.join(command_names())}")
        return 1

    try:
        model = load_model(config.model_path)
    except ModelInputError as e:
        log.error(f"Unable to load model '{config.model_path}': {e}")
        return 1

    log.info(f"Running '{command_class.name}' ({command_class.description}) on model '{model.name}'")

    writer = ArtifactWriter(config.output_dir)
    command = command_class(config, model, writer)

    try:
        success = command.run()
    except run_errors as e:
        log.error(f"Command '{config.command}' failed with {e.__class__.__name__}: {e}")
        success = False

    writer.write_metadata(config.command, config.model_path, model_hash(model), config.as_dict(), config.seed)

    return 0 if success is True else 1

# EOF
