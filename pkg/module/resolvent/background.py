# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
from dataclasses import dataclass

import numpy as np

from module.common.errors import NotApplicableError, ModelInputError
from module.common.logging import get_logger
from module.model import HALF_LINE
from module.resolvent.generator import ReducedGenerator

log = get_logger()

# default contour depth is this value divided by t
default_depth_factor = 40.0


@dataclass(frozen=True, eq=False)
class BackgroundTerm:
    """
    contour contribution around the branch points, 'truncation_estimate' is exp(-depth·t)
    """

    t: float
    value: np.ndarray
    depth: float
    points: int
    epsilon: float
    truncation_estimate: float


def background_integral(generator: ReducedGenerator, t: float, depth: float = None,
                        points: int = 200) -> BackgroundTerm:
    """
    Contribution of the deformed contour which hangs down from every finite
    branch point x_e of a half_line model:

        B(t) = Σ_e exp(-i x_e t)/(2π) ∫_0^depth [R^II(x_e+ε-iy) - R^II(x_e-ε-iy)] exp(-yt) dy

    R^II uses the vertical cut continuation, so left of the lowest edge it equals
    the physical first sheet resolvent. Together with the pole terms (exact
    residues) this reproduces the reduced propagator.

    Parameters
    ----------
    generator: ReducedGenerator
        resolvent evaluators of a half_line model
    t: float
        time > 0
    depth: float
        contour depth Y_max, defaults to 40/t
    points: int
        Gauss-Legendre nodes, the nodes are clustered at y = 0 by y = depth·u²

    Returns
    -------
    BackgroundTerm: matrix B(t) and quadrature metadata
    """

    model = generator.model

    if model.spectrum_kind != HALF_LINE:
        raise NotApplicableError("background integral needs a half_line spectrum, a full_line spectrum "
                                 "has no branch point and the contour passes above the real line")

    t = float(t)
    if not (math.isfinite(t) and t > 0):
        raise ModelInputError(f"background integral needs t > 0, got {t}")

    if depth is None:
        depth = default_depth_factor / t

    if not depth > 0:
        raise ModelInputError(f"contour depth must be > 0, got {depth}")

    epsilon = 1e-8 * generator.scale

    nodes, weights = np.polynomial.legendre.leggauss(int(points))
    u = 0.5 * (nodes + 1.0)
    y = depth * u ** 2
    # dy = 2·depth·u du, du = dx/2
    dy_weights = depth * u * weights

    value = np.zeros((model.n_levels, model.n_levels), dtype=complex)

    for edge in model.branch_points:

        jump = np.zeros_like(value)
        for y_k, w_k in zip(y, dy_weights):
            right = generator.resolvent(complex(edge + epsilon, -y_k))
            left = generator.resolvent(complex(edge - epsilon, -y_k))
            jump += w_k * (right - left) * math.exp(-y_k * t)

        value += np.exp(-1j * edge * t) / (2 * np.pi) * jump

    truncation_estimate = math.exp(-depth * t)

    log.debug2(f"Background at t = {t}: depth {depth:.4g}, {points} nodes, truncation {truncation_estimate:.3g}")

    return BackgroundTerm(t=t, value=value, depth=depth, points=int(points), epsilon=epsilon,
                          truncation_estimate=truncation_estimate)

# EOF
