# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import hashlib

import numpy as np

from module.analysis import cross_pole_orthogonality
from module.commands.command_base import CommandBase
from module.commands.evolve import trajectory_columns
from module.common.errors import DegeneracyError
from module.common.logging import get_logger
from module.common.output import matrix_rows
from module.evolution import survival_probability
from module.evolution.memory import time_grid
from module.resolvent import spectral_projectors, pole_approx_propagator, weak_coupling_estimates

log = get_logger()

# projectors are rounded to this many decimals before hashing
fingerprint_decimals = 8

pole_table_columns = [
    "re_z", "im_z", "branch", "newton_residual", "trace_Q_re", "trace_Q_im", "rate", "fingerprint"
]


def projector_fingerprint(generator, z, tol_deg) -> str:
    """
    short hash of all branch projectors of W^II at z. Poles share a fingerprint
    if W^II has the same eigenbasis at their locations.
    """

    try:
        projectors = spectral_projectors(generator, z, tol_deg)
    except DegeneracyError:
        return "degenerate"

    digest = hashlib.sha256()
    for projector, _ in projectors:
        # adding 0.0 turns -0.0 into 0.0
        rounded = np.round(projector, fingerprint_decimals) + 0.0
        digest.update(np.ascontiguousarray(rounded).tobytes())

    return digest.hexdigest()[:16]


class PolesCommand(CommandBase):
    """
    second sheet poles, their projectors and the pole approximation of U^red(t)
    """

    name = "poles"
    description = "pole table, projectors and pole approximation"

    def run(self):

        report = self.find_poles()
        poles = report.poles
        tol_deg = self.settings.tol_deg

        log.info(f"Found {len(poles)} pole(s)")

        table = list()
        fingerprints = list()
        for pole in poles:
            fingerprint = projector_fingerprint(self.generator, pole.z_pole, tol_deg)
            fingerprints.append(fingerprint)
            # no projector at colliding branches
            trace = complex(np.trace(pole.projector)) if pole.projector is not None else complex(np.nan, np.nan)
            table.append([pole.z_pole.real, pole.z_pole.imag, pole.branch, pole.newton_residual, trace.real,
                          trace.imag, pole.rate, int(fingerprint[:8], 16) if fingerprint != "degenerate" else -1])

        self.writer.write_csv("poles.csv", pole_table_columns,
                              np.array(table).reshape(len(table), len(pole_table_columns)))

        content = {
            "poles": [{
                "z": pole.z_pole,
                "branch": pole.branch,
                "rate": pole.rate,
                "newton_residual": pole.newton_residual,
                "projector": pole.projector,
                "residue": pole.residue,
                "fingerprint": fingerprint
            } for pole, fingerprint in zip(poles, fingerprints)],
            "notes": report.notes,
            "unmatched_seeds": report.unmatched_seeds,
            "weak_coupling_estimates": weak_coupling_estimates(self.generator),
            "mode": self.settings.mode
        }

        if len(poles) >= 2:
            content["cross_pole_orthogonality"] = cross_pole_orthogonality(poles)

        self.writer.write_json("poles_report.json", content)

        if len(poles) == 0:
            log.warning("No pole found, skipping the pole approximation")
            return True

        times = time_grid(self.t_max, self.settings.step)
        values = pole_approx_propagator(poles, times, self.settings.mode, self.generator)
        self.writer.write_csv("poles_trajectory.csv", trajectory_columns(self.model.n_levels),
                              np.column_stack([times, matrix_rows(values),
                                               survival_probability(values, self.initial_state)]))

        return True

# EOF
