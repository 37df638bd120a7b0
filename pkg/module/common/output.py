# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import os
import json
from datetime import datetime

import numpy as np

from module.common.logging import get_logger
from module.common.misc import library_versions, do_error_exit
from module import __version__

log = get_logger()

# 17 significant digits
csv_number_format = "%.16e"
csv_delimiter = ","


def _to_serializable(value):

    if isinstance(value, np.ndarray):
        return _to_serializable(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return _to_serializable(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, dict):
        return {str(k): _to_serializable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_serializable(x) for x in value]
    if isinstance(value, float) and not np.isfinite(value):
        return str(value)

    return value


def matrix_columns(prefix: str, n_levels: int) -> list:
    """
    column names re/im of every matrix entry, row major
    """

    names = list()
    for alpha in range(n_levels):
        for beta in range(n_levels):
            names.extend([f"re_{prefix}_{alpha}{beta}", f"im_{prefix}_{alpha}{beta}"])

    return names


def matrix_rows(values: np.ndarray) -> np.ndarray:
    """
    (n, N, N) complex values into (n, 2·N²) real columns matching 'matrix_columns'
    """

    flat = values.reshape(values.shape[0], -1)
    result = np.empty((flat.shape[0], 2 * flat.shape[1]))
    result[:, 0::2] = flat.real
    result[:, 1::2] = flat.imag

    return result


class ArtifactWriter:
    """
    writes CSV/JSON artifacts of one run into the output directory
    """

    def __init__(self, output_dir: str):

        self.output_dir = output_dir
        self.written = list()

        try:
            os.makedirs(self.output_dir, exist_ok=True)
        except OSError as e:
            do_error_exit(f"Unable to create output directory '{self.output_dir}': {e}")

    def path(self, file_name: str) -> str:
        return os.path.join(self.output_dir, file_name)

    def write_csv(self, file_name: str, columns: list, data) -> str:

        data = np.atleast_2d(np.asarray(data, dtype=float))
        if data.shape[1] != len(columns):
            raise ValueError(f"CSV '{file_name}' has {len(columns)} columns but data has {data.shape[1]}")

        file_path = self.path(file_name)
        np.savetxt(file_path, data, fmt=csv_number_format, delimiter=csv_delimiter,
                   header=csv_delimiter.join(columns), comments="")

        log.info(f"Wrote {data.shape[0]} rows to '{file_path}'")
        self.written.append(file_path)

        return file_path

    def write_json(self, file_name: str, content: dict) -> str:

        file_path = self.path(file_name)
        with open(file_path, "w") as fp:
            json.dump(_to_serializable(content), fp, indent=2, sort_keys=True)
            fp.write("\n")

        log.info(f"Wrote report '{file_path}'")
        self.written.append(file_path)

        return file_path

    def write_metadata(self, command: str, model_path: str, model_hash: str, options: dict, seed: int = None) -> str:

        content = {
            "command": command,
            "model": model_path,
            "model_hash": model_hash,
            "options": options,
            "seed": seed,
            "version": __version__,
            "libraries": library_versions(),
            "artifacts": [os.path.basename(x) for x in self.written],
            "finished": datetime.now().isoformat(timespec="seconds")
        }

        return self.write_json(f"{command}_metadata.json", content)

# EOF
