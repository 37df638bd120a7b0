# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import json
import logging
import os

import numpy as np
import pytest

from module.commands import run, command_names, command_class_for
from module.commands.check import CheckReport, CheckResult
from module.commands.config import NumericsConfig, CheckConfig
from module.commands.run_config import RunConfig


@pytest.fixture
def run_command(tmp_path, model_path):

    def _run(command, model_file, **overrides):
        config = RunConfig(command=command, model_path=model_path(model_file), output_dir=str(tmp_path),
                           numerics=NumericsConfig().parse(do_log=False, overrides=overrides),
                           check=CheckConfig().parse(do_log=False))
        return run(config)

    return _run


def read_csv(tmp_path, file_name):
    with open(tmp_path / file_name) as fp:
        header = fp.readline().strip().split(",")
    return header, np.atleast_2d(np.loadtxt(tmp_path / file_name, delimiter=",", skiprows=1))


def read_json(tmp_path, file_name):
    with open(tmp_path / file_name) as fp:
        return json.load(fp)


def test_command_names():
    assert command_names() == ["kernel", "evolve", "poles", "background", "oracle", "semigroup", "check"]
    assert command_class_for("poles").name == "poles"
    assert command_class_for("inventory") is None


def test_evolve_without_coupling(tmp_path, run_command):
    assert run_command("evolve", "zero_coupling.ini", t_max=5.0, step=0.1) == 0

    header, rows = read_csv(tmp_path, "evolve_volterra.csv")
    assert header[0] == "t" and header[-1] == "survival_probability"
    assert len(header) == 2 + 2 * 4
    assert rows.shape == (51, len(header))
    assert np.allclose(rows[:, -1], 1.0, atol=1e-12)

    report = read_json(tmp_path, "evolve_report.json")
    assert "rejected" in report["volterra"]["decay"]

    metadata = read_json(tmp_path, "evolve_metadata.json")
    assert metadata["command"] == "evolve"
    assert metadata["seed"] == 12345
    assert "evolve_volterra.csv" in metadata["artifacts"]
    assert len(metadata["model_hash"]) > 0


def test_evolve_golden_model(tmp_path, run_command):
    assert run_command("evolve", "golden.ini", t_max=20.0, step=0.02) == 0

    _, volterra = read_csv(tmp_path, "evolve_volterra.csv")
    _, markovian = read_csv(tmp_path, "evolve_markovian.csv")

    # Markovian survival decays with the golden rule rate 0.4
    assert np.allclose(markovian[:, -1], np.exp(-0.4 * markovian[:, 0]), atol=1e-12)
    # the strongly coupled level oscillates instead
    assert volterra[-1, -1] > markovian[-1, -1]


def test_markovian_poles_share_a_projector_fingerprint(tmp_path, run_command):
    assert run_command("poles", "markov_flat.ini", t_max=2.0, step=0.1) == 0

    header, rows = read_csv(tmp_path, "poles.csv")
    assert rows.shape[0] == 2
    fingerprints = rows[:, header.index("fingerprint")]
    assert fingerprints[0] == fingerprints[1] != -1

    report = read_json(tmp_path, "poles_report.json")
    assert len(set(x["fingerprint"] for x in report["poles"])) == 1
    assert np.max(report["cross_pole_orthogonality"]) < 1e-12
    assert os.path.exists(tmp_path / "poles_trajectory.csv")


def test_golden_poles(tmp_path, run_command):
    assert run_command("poles", "golden.ini", t_max=2.0, step=0.1, mode="ww") == 0

    header, rows = read_csv(tmp_path, "poles.csv")
    assert header[:6] == ["re_z", "im_z", "branch", "newton_residual", "trace_Q_re", "trace_Q_im"]
    assert np.allclose(rows[:, header.index("rate")], 0.05, atol=1e-9)
    # one level, every projector is the identity
    assert np.allclose(rows[:, header.index("trace_Q_re")], 1.0, atol=1e-12)
    assert np.allclose(rows[:, header.index("trace_Q_im")], 0.0, atol=1e-12)
    assert read_json(tmp_path, "poles_report.json")["mode"] == "ww"


def test_poles_of_an_ohmic_model_fail(tmp_path, run_command):
    assert run_command("poles", "ohmic.yaml", t_max=2.0, step=0.1) == 1
    assert os.path.exists(tmp_path / "poles_metadata.json")


def test_background_of_a_half_line_model(tmp_path, run_command):
    assert run_command("background", "half_line_flat.ini", t_max=4.0, step=0.5) == 0

    header, rows = read_csv(tmp_path, "background.csv")
    assert rows.shape[0] == 8
    assert rows[0, header.index("t")] == pytest.approx(0.5)
    assert header[-1] == "truncation_estimate"


def test_background_of_a_full_line_model_fails(run_command):
    assert run_command("background", "golden.ini", t_max=4.0, step=0.5) == 1


def test_oracle(tmp_path, run_command):
    assert run_command("oracle", "golden.ini", t_max=5.0, step=0.1, grid_m=400) == 0

    _, rows = read_csv(tmp_path, "oracle.csv")
    assert rows[0, -1] == pytest.approx(1.0)

    _, line = read_csv(tmp_path, "oracle_line_shape.csv")
    assert np.sum(line[:, 1]) == pytest.approx(1.0)

    report = read_json(tmp_path, "oracle_report.json")
    assert report["grid_size"] == 400
    assert report["dispersion"] == pytest.approx(0.01)
    assert report["discretization_error"] is not None


def test_oracle_needs_truncation_for_unbounded_channels(run_command):
    assert run_command("oracle", "markov_flat.ini", t_max=5.0, step=0.1, grid_m=400) == 1


def test_kernel(tmp_path, run_command):
    assert run_command("kernel", "golden.ini", t_max=5.0, step=0.1) == 0

    header, rows = read_csv(tmp_path, "kernel_alpha_t.csv")
    assert header == ["t", "re_alpha_00", "im_alpha_00"]
    assert rows[0, 1] == pytest.approx(0.01)

    report = read_json(tmp_path, "kernel_report.json")
    assert report["golden_rule_rates"] == pytest.approx([0.4])


def test_semigroup_with_lambda_sweep(tmp_path, run_command):
    assert run_command("semigroup", "markov_flat.ini", t_max=40.0, step=0.05, grid_m=400,
                       lambda_sweep=[5.0, 20.0]) == 0

    report = read_json(tmp_path, "semigroup_report.json")
    sources = {x["source"]: x for x in report["reports"]}
    assert sources["markovian"]["max_deviation"] < 1e-12
    assert "pole_approx" in sources

    header, sweep = read_csv(tmp_path, "semigroup_lambda_sweep.csv")
    assert header == ["lambda", "max_deviation", "dispersion"]
    assert list(sweep[:, 0]) == [5.0, 20.0]


def test_unknown_command(run_command):
    assert run_command("inventory", "golden.ini") == 1


def test_missing_model(tmp_path):
    config = RunConfig(command="evolve", model_path=str(tmp_path / "absent.ini"), output_dir=str(tmp_path),
                       numerics=NumericsConfig().parse(do_log=False), check=CheckConfig().parse(do_log=False))

    assert run(config) == 1


@pytest.mark.slow
@pytest.mark.parametrize("model_file", ["golden.ini", "markov_flat.ini", "narrow_resonance.ini", "half_line_flat.ini",
                                        "flattened.ini", "zero_coupling.ini"])
def test_check_passes_for_every_bundled_model(tmp_path, run_command, model_file, caplog):
    with caplog.at_level(logging.INFO, logger="WW-Lab"):
        assert run_command("check", model_file) == 0

    report = read_json(tmp_path, "check_report.json")
    assert report["passed"] is True
    assert all(x["passed"] for x in report["results"])
    assert not any("FAILED" in x.getMessage() for x in caplog.records)


@pytest.mark.slow
def test_check_compares_rates_and_background_of_a_half_line_model(tmp_path, run_command):
    assert run_command("check", "half_line_flat.ini") == 0

    results = {x["name"]: x for x in read_json(tmp_path, "check_report.json")["results"]}
    for name in ("decay rate consistency", "Zeno quadratic law", "poles and background reproduce the oracle"):
        assert results[name]["skipped"] is False
        assert results[name]["value"] < results[name]["threshold"]


def test_check_report_accepts_numpy_booleans(caplog):
    report = CheckReport(model="golden")

    with caplog.at_level(logging.INFO, logger="WW-Lab"):
        report.add(CheckResult("numpy comparison", passed=np.float64(-0.025) < 0, value=-0.025, threshold=0.0))

    assert report.passed is True
    assert [x.levelno for x in caplog.records] == [logging.INFO]
    assert "passed" in caplog.records[0].getMessage()


def test_repeated_runs_write_identical_tables(tmp_path, model_path):
    contents = list()
    for run_dir in ("first", "second"):
        output_dir = tmp_path / run_dir
        config = RunConfig(command="poles", model_path=model_path("narrow_resonance.ini"), output_dir=str(output_dir),
                           numerics=NumericsConfig().parse(do_log=False, overrides=dict(t_max=5.0, step=0.1)),
                           check=CheckConfig().parse(do_log=False))
        assert run(config) == 0
        contents.append([(output_dir / x).read_bytes() for x in ("poles.csv", "poles_trajectory.csv")])

    assert contents[0] == contents[1]

# EOF
