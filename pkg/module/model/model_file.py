# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

"""
Reading and writing of model definition files.

INI layout (YAML uses the same keys with a 'channel' mapping, 'channels' is accepted as well):

    [model]
    name = golden
    levels = [1.0]
    labels = [e1]
    spectrum = full_line

    [channel/bath]
    kind = lorentzian
    g = [[0.1, 0.0]]
    center = 1.0
    width = 0.05

Energies are given in natural units with hbar = 1.
"""

import os
import hashlib
import configparser

import yaml

from module.common.errors import ModelInputError
from module.common.logging import get_logger
from module.common.misc import grab, parse_complex_list
from module.config.files import ConfigFile, ConfigFileINI, ConfigFileYAML
from module.model.channels import channel_class_for
from module.model.spectral_density import LevelSet, SpectralDensityModel, FULL_LINE

log = get_logger()

model_section_name = "model"
channel_section_name = "channel"


def _parse_list(value, key):

    if isinstance(value, (list, tuple)):
        return list(value)

    if isinstance(value, (int, float)):
        return [value]

    if not isinstance(value, str):
        raise ModelInputError(f"unable to parse '{key}' = '{value}' as list")

    try:
        parsed = yaml.safe_load(value)
    except yaml.YAMLError as e:
        raise ModelInputError(f"unable to parse '{key}' = '{value}' as list: {e}")

    if not isinstance(parsed, list):
        parsed = [parsed]

    return parsed


def _parse_float(value, key):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ModelInputError(f"unable to parse '{key}' = '{value}' as number")


def _parse_ini(model_file: str) -> dict:

    handler = configparser.ConfigParser(strict=True, allow_no_value=True,
                                        empty_lines_in_values=False, interpolation=None)

    try:
        with open(model_file) as fp:
            handler.read_file(fp)
    except configparser.Error as e:
        raise ModelInputError(f"Problem while parsing model file '{model_file}': {e}")

    content = {channel_section_name: dict()}
    for section in handler.sections():
        section_data = dict(handler.items(section))
        if section.startswith(f"{channel_section_name}/"):
            content[channel_section_name][section.replace(f"{channel_section_name}/", "", 1)] = section_data
        else:
            content[section] = section_data

    return content


def _parse_yaml(model_file: str) -> dict:

    try:
        with open(model_file) as stream:
            content = yaml.safe_load(stream)
    except yaml.YAMLError as e:
        raise ModelInputError(f"Problem while parsing model file '{model_file}': {e}")

    if not isinstance(content, dict):
        raise ModelInputError(f"model file '{model_file}' does not contain a mapping")

    if isinstance(content.get("channels"), dict) and content.get(channel_section_name) is None:
        content[channel_section_name] = content.pop("channels")

    return content


def parse_model_content(content: dict, default_name: str = "model") -> SpectralDensityModel:
    """
    validate parsed model file content and build the model

    Parameters
    ----------
    content: dict
        sections 'model' and 'channel' as read from INI or YAML
    default_name: str
        model name if the file doesn't define one

    Returns
    -------
    SpectralDensityModel: the validated model
    """

    model_data = grab(content, model_section_name)
    if not isinstance(model_data, dict):
        raise ModelInputError(f"model definition is missing the '{model_section_name}' section")

    if grab(model_data, "levels") is None:
        raise ModelInputError("model definition is missing 'levels'")

    energies = [_parse_float(x, "levels") for x in _parse_list(model_data.get("levels"), "levels")]

    labels = list()
    if model_data.get("labels") is not None:
        labels = [str(x) for x in _parse_list(model_data.get("labels"), "labels")]

    levels = LevelSet(energies=tuple(energies), labels=tuple(labels))

    channels = list()
    channel_data = grab(content, channel_section_name, fallback=dict())
    if not isinstance(channel_data, dict):
        raise ModelInputError(f"'{channel_section_name}' needs to be a mapping of channel names to parameters")

    for channel_name, parameters in channel_data.items():

        if not isinstance(parameters, dict):
            raise ModelInputError(f"channel '{channel_name}' needs to be a mapping")

        parameters = {str(k).lower(): v for k, v in parameters.items()}

        kind = parameters.pop("kind", None)
        if kind is None:
            raise ModelInputError(f"channel '{channel_name}' option 'kind' is undefined")

        if parameters.get("g") is None:
            raise ModelInputError(f"channel '{channel_name}' option 'g' is undefined")

        try:
            g = parse_complex_list(_parse_list(parameters.pop("g"), "g"))
        except (TypeError, ValueError) as e:
            raise ModelInputError(f"channel '{channel_name}': unable to parse coupling amplitudes: {e}")

        family_parameters = {k: _parse_float(v, k) for k, v in parameters.items()}

        channel_class = channel_class_for(str(kind).lower())

        unknown = set(family_parameters) - set(channel_class.__dataclass_fields__) - {"name", "g"}
        for key in sorted(unknown):
            log.warning(f"Found unknown parameter '{key}' for channel '{channel_name}' ({kind})")

        channels.append(channel_class.from_parameters(str(channel_name), g, family_parameters))

    return SpectralDensityModel(levels=levels,
                                channels=tuple(channels),
                                spectrum_kind=str(model_data.get("spectrum", FULL_LINE)).strip('"\' ').lower(),
                                name=str(model_data.get("name", default_name)))


def load_model(model_file: str) -> SpectralDensityModel:
    """
    read and validate a model definition file (INI or YAML by suffix)
    """

    if not isinstance(model_file, str) or len(model_file) == 0:
        raise ModelInputError("no model file given")

    if not os.path.isfile(model_file) or not os.access(model_file, os.R_OK):
        raise ModelInputError(f"model file '{model_file}' not found or not readable")

    file_type = ConfigFile.get_file_type(model_file)

    if file_type == ConfigFileINI:
        content = _parse_ini(model_file)
    elif file_type == ConfigFileYAML:
        content = _parse_yaml(model_file)
    else:
        raise ModelInputError(f"Unknown/Unsupported model file type '{ConfigFile.get_suffix(model_file)}' "
                              f"for {model_file}")

    default_name = os.path.splitext(os.path.basename(model_file))[0]
    model = parse_model_content(content, default_name=default_name)

    log.debug(f"Model '{model.name}' read from '{model_file}': {model.n_levels} level(s), "
              f"{len(model.channels)} channel(s), {model.spectrum_kind}")

    return model


def _format_list(values) -> str:
    return "[" + ", ".join(values) + "]"


def serialize_model(model: SpectralDensityModel, file_type=ConfigFileINI) -> str:
    """
    write a model back into file content. Floats are written with repr() so
    reading the text again gives an identical model.

    Parameters
    ----------
    model: SpectralDensityModel
        model to serialize
    file_type: ConfigFileINI or ConfigFileYAML
        output format

    Returns
    -------
    str: file content
    """

    levels = _format_list([repr(x) for x in model.levels.energies])
    labels = _format_list([f'"{x}"' for x in model.levels.labels])

    lines = list()
    if file_type == ConfigFileYAML:
        lines.append(f"{model_section_name}:")
        lines.append(f'  name: "{model.name}"')
        lines.append(f"  levels: {levels}")
        lines.append(f"  labels: {labels}")
        lines.append(f"  spectrum: {model.spectrum_kind}")
        if len(model.channels) > 0:
            lines.append(f"{channel_section_name}:")
    else:
        lines.append(f"[{model_section_name}]")
        lines.append(f"name = {model.name}")
        lines.append(f"levels = {levels}")
        lines.append(f"labels = {labels}")
        lines.append(f"spectrum = {model.spectrum_kind}")

    for channel in model.channels:

        g = _format_list([f"[{x.real!r}, {x.imag!r}]" for x in channel.g])

        if file_type == ConfigFileYAML:
            lines.append(f'  "{channel.name}":')
            lines.append(f"    kind: {channel.kind}")
            lines.append(f"    g: {g}")
            for key, value in channel.parameters().items():
                lines.append(f'    {key}: "{value!r}"')
        else:
            lines.append("")
            lines.append(f"[{channel_section_name}/{channel.name}]")
            lines.append(f"kind = {channel.kind}")
            lines.append(f"g = {g}")
            for key, value in channel.parameters().items():
                lines.append(f"{key} = {value!r}")

    lines.append("")

    return "\n".join(lines)


def write_model(model: SpectralDensityModel, model_file: str) -> None:

    file_type = ConfigFile.get_file_type(model_file)
    if file_type is None:
        raise ModelInputError(f"Unknown/Unsupported model file type '{ConfigFile.get_suffix(model_file)}'")

    with open(model_file, "w") as fp:
        fp.write(serialize_model(model, file_type))


def model_hash(model: SpectralDensityModel) -> str:
    """
    Returns
    -------
    str: sha256 hex digest of the canonical INI serialization
    """

    return hashlib.sha256(serialize_model(model).encode("utf-8")).hexdigest()

# EOF
