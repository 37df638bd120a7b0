# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import numpy as np

from module.common.logging import get_logger
from module.kernel import CorrelationKernel
from module.model import SpectralDensityModel, FIRST_SHEET, SECOND_SHEET

log = get_logger()


class ReducedGenerator:
    """
    Evaluators of the reduced resolvent R(z) = h(z)^-1 on both sheets

        h(z)     = z - H0 - iα(z)        first sheet
        h^II(z)  = z - H0 - iα^II(z)     second sheet
        W^II(z)  = H0 + iα^II(z)         so that h^II(z) + W^II(z) = z

    For Im z > 0 both sheets coincide.
    """

    def __init__(self, model: SpectralDensityModel, kernel: CorrelationKernel = None):

        self.model = model
        self.kernel = kernel if kernel is not None else CorrelationKernel(model)
        self.identity = np.eye(model.n_levels, dtype=complex)

    @property
    def n_levels(self):
        return self.model.n_levels

    @property
    def scale(self):
        return self.model.scale

    def h_first_sheet(self, z: complex) -> np.ndarray:
        z = complex(z)
        return z * self.identity - self.model.h0 - self.kernel.i_alpha(z, FIRST_SHEET)

    def h_second_sheet(self, z: complex) -> np.ndarray:
        z = complex(z)
        return z * self.identity - self.model.h0 - self.kernel.i_alpha(z, SECOND_SHEET)

    def w_second_sheet(self, z: complex) -> np.ndarray:
        return self.model.h0 + self.kernel.i_alpha(complex(z), SECOND_SHEET)

    def h_second_sheet_derivative(self, z: complex) -> np.ndarray:
        return self.identity - self.kernel.i_alpha_derivative(complex(z))

    def w_second_sheet_derivative(self, z: complex) -> np.ndarray:
        return self.kernel.i_alpha_derivative(complex(z))

    def resolvent(self, z: complex, sheet: int = SECOND_SHEET) -> np.ndarray:
        """
        reduced resolvent R(z) on the requested sheet
        """

        if sheet == FIRST_SHEET:
            h = self.h_first_sheet(z)
        else:
            h = self.h_second_sheet(z)

        return np.linalg.inv(h)

    def determinant(self, z: complex) -> complex:
        return complex(np.linalg.det(self.h_second_sheet(z)))

    def numerical_range_margin(self, z: complex, vectors: np.ndarray) -> np.ndarray:
        """
        Im<χ|h(z)|χ> - Im z·‖χ‖² for every column χ of 'vectors' (first sheet).
        Never negative for Im z > 0.
        """

        z = complex(z)
        h = self.h_first_sheet(z)
        values = np.einsum("ik,ij,jk->k", vectors.conj(), h, vectors)
        norms = np.einsum("ik,ik->k", vectors.conj(), vectors).real

        return values.imag - z.imag * norms

# EOF
