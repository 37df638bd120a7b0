# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import re
import sys

import numpy as np
import scipy
import yaml
from packaging import version

# oldest releases providing scipy.integrate.simpson/trapezoid and numpy.random.default_rng
minimum_library_versions = {
    "numpy": (np, "1.20"),
    "scipy": (scipy, "1.6"),
    "yaml": (yaml, "5.1"),
}


def grab(structure=None, path=None, separator=".", fallback=None):
    """
    get data from a nested dict/list/object structure with a separated path.
    Dictionary keys are matched case-insensitive. If any part of the path
    can't be resolved the value of 'fallback' is returned.

    example:
        grab({"numerics": {"Step": 0.05}}, "numerics.step")  ->  0.05

    Parameters
    ----------
    structure: dict, list, object
        an object structure to extract data from
    path: str
        nested path to extract
    separator: str
        path separator to use
    fallback: any
        data to return if no match was found

    Returns
    -------
    any: the desired path element if found, otherwise fallback
    """

    if structure is None or path is None:
        return fallback

    current = structure
    for attribute in str(path).split(separator):

        if isinstance(current, dict):
            lowered = {str(k).lower(): v for k, v in current.items()}
            current = lowered.get(attribute.lower())
        elif isinstance(current, (list, tuple)):
            try:
                current = current[int(attribute)]
            except (ValueError, IndexError):
                return fallback
        else:
            current = getattr(current, attribute, None)

        if current is None:
            return fallback

    return current


def do_error_exit(log_text):
    """
    print an error to stderr and exit with return code 1

    Parameters
    ----------
    log_text : str
        the text to print as error
    """

    print(f"ERROR: {log_text}", file=sys.stderr)
    exit(1)


def get_relative_time(delta):
    """
    return a human readable string of a datetime delta, sub second runs
    are reported in milliseconds

    Parameters
    ----------
    delta:  datetime.timedelta
        time delta to format

    Returns
    -------
    str: formatted string of time delta
    """

    total = delta.total_seconds()
    if total < 1:
        return f"{int(total * 1000)} milliseconds"

    seconds = int(total)
    parts = list()
    for period_name, period_seconds in [("hour", 3600), ("minute", 60), ("second", 1)]:
        if seconds >= period_seconds:
            value, seconds = divmod(seconds, period_seconds)
            parts.append(f"{value} {period_name}{plural(value)}")

    return ", ".join(parts)


def plural(length):
    """
    return "s" if length is not 1 else return empty string
    """

    return "s" if length != 1 else ""


def quoted_split(string_to_split):
    """
    Splits a comma separated string into a list of stripped parts.
    Commas within quotes don't split.

    Parameters
    ----------
    string_to_split: str
        the string to split

    Returns
    -------
    list: of separated string parts
    """

    if isinstance(string_to_split, (list, tuple)):
        return [str(x).strip() for x in string_to_split]

    if not isinstance(string_to_split, str):
        return list()

    parts = re.split(r",(?=(?:[^\"']*[\"'][^\"']*[\"'])*[^\"']*$)", string_to_split)

    return [part.strip(' "\'') for part in parts if len(part.strip(' "\'')) > 0]


def parse_float_list(value):
    """
    parse a comma separated string or a list into a list of floats

    Parameters
    ----------
    value: str, list
        e.g. "5, 20, 80"

    Returns
    -------
    list: of float
    """

    return [float(x) for x in quoted_split(value)]


def parse_complex_list(value):
    """
    parse a list of amplitudes. Accepts "1, 0", "0.6+0.8j, 0" or [[re, im], ...]

    Parameters
    ----------
    value: str, list

    Returns
    -------
    list: of complex
    """

    if isinstance(value, (list, tuple)):
        result = list()
        for item in value:
            if isinstance(item, (list, tuple)):
                if len(item) != 2:
                    raise ValueError(f"complex pair '{item}' needs exactly two entries")
                result.append(complex(float(item[0]), float(item[1])))
            else:
                result.append(complex(str(item).replace(" ", "")))
        return result

    return [complex(x.replace(" ", "")) for x in quoted_split(value)]


def library_versions():
    """
    Returns
    -------
    dict: installed version of each numeric library
    """

    return {name: getattr(lib, "__version__", "unknown") for name, (lib, _) in minimum_library_versions.items()}


def check_library_versions():
    """
    exit if one of the numeric libraries is older than required
    """

    for name, (lib, minimum) in minimum_library_versions.items():
        installed = getattr(lib, "__version__", "0")
        if version.parse(installed) < version.parse(minimum):
            do_error_exit(f"Library '{name}' version {installed} is too old, at least {minimum} is required")

# EOF
