# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from dataclasses import dataclass, field

import numpy as np

from module.analysis.sources import PropagatorSource
from module.common.errors import ModelInputError
from module.common.logging import get_logger

log = get_logger()

# floor of the deviation normalization
norm_floor = 1e-300


@dataclass
class SemigroupReport:
    source: str
    pairs: list = field(default_factory=list)
    deviation: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max(self.deviation, default=0.0)

    def as_dict(self) -> dict:
        return {
            "source": self.source,
            "pairs": [list(x) for x in self.pairs],
            "deviation": self.deviation,
            "max_deviation": self.max_deviation,
            "skipped": self.skipped
        }


def default_time_pairs(tau: float) -> list:
    """
    (τ, τ), (τ, 2τ) and (2τ, 2τ) for a mean lifetime τ
    """

    if not tau > 0:
        raise ModelInputError(f"lifetime must be > 0, got {tau}")

    return [(tau, tau), (tau, 2 * tau), (2 * tau, 2 * tau)]


def semigroup_deviation(source: PropagatorSource, t_pairs: list) -> SemigroupReport:
    """
    Normalized violation of the composition law for every pair (t1, t2)

        Δ(t1, t2) = ‖U(t1+t2) - U(t2)U(t1)‖_F / max(‖U(t1+t2)‖_F, 1e-300)

    Pairs reaching outside the validity window of the source are skipped with
    a reason.
    """

    report = SemigroupReport(source=source.name)

    for t1, t2 in t_pairs:

        t1, t2 = float(t1), float(t2)
        outside = [t for t in (t1, t2, t1 + t2) if not source.covers(t)]
        if len(outside) > 0:
            reason = f"t = {outside[0]:.6g} outside the {source.name} window [{source.t_min}, {source.t_max:.6g}]"
            log.debug(f"Skipping pair ({t1}, {t2}): {reason}")
            report.skipped.append({"pair": [t1, t2], "reason": reason})
            continue

        joint = source(t1 + t2)
        composed = source(t2) @ source(t1)

        deviation = np.linalg.norm(joint - composed) / max(np.linalg.norm(joint), norm_floor)

        report.pairs.append((t1, t2))
        report.deviation.append(float(deviation))

    log.debug(f"Semigroup deviation of {source.name}: max {report.max_deviation:.3g} over {len(report.pairs)} pairs")

    return report


def cross_pole_orthogonality(poles: list) -> np.ndarray:
    """
    Entry (j, k) is ‖Q(z_j)Q(z_k)‖_F for j != k, the diagonal holds the
    idempotence defect ‖Q(z_j)² - Q(z_j)‖_F.
    """

    if len(poles) < 2:
        raise ModelInputError(f"cross pole orthogonality needs at least two poles, got {len(poles)}")

    projectors = [x.projector for x in poles]
    if any(x is None for x in projectors):
        raise ModelInputError("every pole needs a projector")

    result = np.zeros((len(poles), len(poles)))
    for j, q_j in enumerate(projectors):
        for k, q_k in enumerate(projectors):
            if j == k:
                result[j, k] = np.linalg.norm(q_j @ q_j - q_j)
            else:
                result[j, k] = np.linalg.norm(q_j @ q_k)

    return result

# EOF
