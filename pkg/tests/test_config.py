# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import logging
import re
import textwrap
from pathlib import Path

import numpy as np
import pytest
import yaml

from conftest import repository_root
from module.commands.config import NumericsConfig, CheckConfig
from module.commands.run_config import RunConfig
from module.common.cli_parser import parse_command_line, numerics_overrides_from
from module.common.config import CommonConfig
from module.common.errors import ModelInputError
from module.common.logging import setup_logging, get_logger, DEBUG2
from module.common.misc import parse_complex_list, parse_float_list
from module.config.file_output import ConfigFileOutput
from module.config.parser import ConfigParser


def read_settings(tmp_path, content, file_name="settings.ini"):
    settings_file = tmp_path / file_name
    settings_file.write_text(textwrap.dedent(content))

    parser = ConfigParser()
    parser.add_config_file(str(settings_file))
    parser.read_config()

    return parser


def run_config(numerics=None, check=None, **kwargs):
    values = dict(command="evolve", model_path="models/golden.ini", output_dir="output",
                  numerics=numerics or NumericsConfig().parse(do_log=False),
                  check=check or CheckConfig().parse(do_log=False))
    values.update(kwargs)
    return RunConfig(**values)


def test_defaults_without_settings_file():
    numerics = NumericsConfig().parse(do_log=False)
    check = CheckConfig().parse(do_log=False)

    assert numerics.step == 0.02
    assert numerics.grid_m == 4000
    assert numerics.mode == "exact"
    assert numerics.t_max is None
    assert numerics.seed == 12345
    assert check.order_ratio == 3.6
    assert check.semigroup_tolerance == 1e-12
    assert check.rate_tolerance == 0.02
    assert check.zeno_tolerance == 0.01
    assert check.background_points == 40


def test_settings_file_values(tmp_path):
    read_settings(tmp_path, """
        [numerics]
        step = 0.05
        t_max = 30
        grid_rule = Uniform
        lambda_sweep = 5, 20, 80
        initial_state = 1, 1j

        [check]
        agreement = 1e-3
        """)

    numerics = NumericsConfig().parse(do_log=False)
    check = CheckConfig().parse(do_log=False)

    assert numerics.step == 0.05
    assert numerics.t_max == 30.0
    assert numerics.grid_rule == "uniform"
    assert numerics.lambda_sweep == [5.0, 20.0, 80.0]
    assert check.agreement == 1e-3


def test_yaml_settings_file(tmp_path):
    read_settings(tmp_path, yaml.safe_dump({"numerics": {"grid_m": 800, "mode": "ww"}}), "settings.yaml")

    numerics = NumericsConfig().parse(do_log=False)
    assert numerics.grid_m == 800
    assert numerics.mode == "ww"


def test_command_line_wins(tmp_path):
    read_settings(tmp_path, """
        [numerics]
        step = 0.05
        """)

    numerics = NumericsConfig().parse(do_log=False, overrides={"step": 0.01, "t_max": None})
    assert numerics.step == 0.01
    assert numerics.t_max is None


def test_environment_only_for_common_section(tmp_path, monkeypatch):
    monkeypatch.setenv("WWL_COMMON_OUTPUT_DIR", "/tmp/ww-lab-out")
    monkeypatch.setenv("WWL_NUMERICS_STEP", "0.5")
    read_settings(tmp_path, "")

    assert CommonConfig().parse(do_log=False).output_dir == "/tmp/ww-lab-out"
    assert NumericsConfig().parse(do_log=False).step == 0.02


@pytest.mark.parametrize("content", [
    "[numerics]\nstep = -0.1\n",
    "[numerics]\ngrid_m = 5\n",
    "[numerics]\nmode = adiabatic\n",
    "[numerics]\nlambda_sweep = 5, -20\n",
    "[numerics]\ninitial_state = 0, 0\n",
    "[numerics]\ninitial_state = one\n",
    "[numerics]\nt_max = inf\n",
])
def test_invalid_numerics_exit(tmp_path, content):
    read_settings(tmp_path, content)

    with pytest.raises(SystemExit) as e:
        NumericsConfig().parse(do_log=False)

    assert e.value.code == 1


def test_check_window_order(tmp_path):
    read_settings(tmp_path, """
        [check]
        range_im_min = 2.0
        range_im_max = 1.0
        """)

    with pytest.raises(SystemExit):
        CheckConfig().parse(do_log=False)


def test_unreadable_settings_are_collected(tmp_path):
    parser = ConfigParser()
    parser.add_config_file(str(tmp_path / "absent.ini"))
    parser.read_config()

    assert len(parser.config_errors) == 1
    with pytest.raises(SystemExit):
        parser.log_end_exit_on_errors()


def test_run_config_tolerances():
    numerics = NumericsConfig().parse(do_log=False)
    numerics.tol_root = 0.0

    with pytest.raises(ModelInputError):
        run_config(numerics=numerics)


def test_run_config_initial_state():
    config = run_config()
    assert np.allclose(config.initial_state(2), [1.0, 0.0])
    assert config.seed == 12345
    assert config.as_dict()["numerics"]["grid_m"] == 4000

    config = run_config(numerics=NumericsConfig().parse(do_log=False, overrides={"initial_state": "3, 4j"}))
    assert np.allclose(config.initial_state(2), [0.6, 0.8j])

    with pytest.raises(ModelInputError):
        config.initial_state(3)


def test_parse_lists():
    assert parse_float_list("5, 20, 80") == [5.0, 20.0, 80.0]
    assert parse_complex_list("0.6+0.8j, 0") == [0.6 + 0.8j, 0j]
    assert parse_complex_list([[0.0, 1.0], 2]) == [1j, 2 + 0j]

    with pytest.raises(ValueError):
        parse_complex_list([[1.0, 2.0, 3.0]])


def test_command_line():
    args = parse_command_line(command_names=["evolve", "poles"],
                              args=["evolve", "--model", "/tmp/golden.ini", "--step", "0.01", "--tmax", "40",
                                    "--mode", "ww", "--out", "/tmp/out"])

    assert args.command == "evolve"
    assert args.model == "/tmp/golden.ini"
    assert args.output_dir == "/tmp/out"

    overrides = numerics_overrides_from(args)
    assert overrides["step"] == 0.01
    assert overrides["t_max"] == 40.0
    assert overrides["mode"] == "ww"
    assert overrides["grid_m"] is None


@pytest.mark.parametrize("arguments", [
    [],
    ["evolve"],
    ["unknown", "--model", "/tmp/golden.ini"],
    ["poles", "--model", "/tmp/golden.ini", "--mode", "fast"],
])
def test_command_line_errors(arguments):
    with pytest.raises(SystemExit):
        parse_command_line(command_names=["evolve", "poles"], args=arguments)


def test_generate_config_needs_no_command():
    args = parse_command_line(command_names=["evolve"], args=["-g"])
    assert args.generate_config is True
    assert args.command is None


@pytest.mark.parametrize("file_name", ["settings-example.ini", "settings-example.yaml"])
def test_generated_settings_file(tmp_path, file_name):
    target = tmp_path / file_name
    ConfigFileOutput(output_file=str(target))

    content = target.read_text()
    for section in ("common", "numerics", "check"):
        assert section in content
    assert "grid_m" in content

    # the generated file parses back to the defaults
    read_settings(tmp_path, content, f"again.{file_name.split('.')[-1]}")
    assert NumericsConfig().parse(do_log=False).step == 0.02


def test_generated_settings_file_is_never_overwritten(tmp_path):
    target = tmp_path / "settings.ini"
    target.write_text("[numerics]\n")

    with pytest.raises(SystemExit):
        ConfigFileOutput(output_file=str(target))


def test_repeated_logging_setup_replaces_handlers():
    warnings_logger = logging.getLogger("py.warnings")
    try:
        setup_logging("INFO")
        logger = setup_logging("DEBUG2")

        assert len(logger.handlers) == 1
        assert warnings_logger.handlers == logger.handlers
        assert logger.level == DEBUG2
    finally:
        logging.captureWarnings(False)
        for handler in list(get_logger().handlers):
            get_logger().removeHandler(handler)
            warnings_logger.removeHandler(handler)


def test_every_requirement_is_imported():
    # distribution name to import name
    import_names = {"pyyaml": "yaml"}

    root = Path(repository_root)
    sources = "\n".join(x.read_text() for x in [root / "ww-lab.py", *root.joinpath("module").rglob("*.py")])

    for line in (root / "requirements.txt").read_text().splitlines():
        name = re.split(r"[=<>~!\[ ]", line.strip(), maxsplit=1)[0].lower()
        if len(name) == 0 or name.startswith("#"):
            continue
        module = import_names.get(name, name)
        assert re.search(rf"^\s*(import|from) {module}\b", sources, re.MULTILINE), f"'{name}' is never imported"

# EOF
