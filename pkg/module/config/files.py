# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import os


class ConfigFileINI:
    suffixes = ["ini"]
    comment_prefix = ";"


class ConfigFileYAML:
    suffixes = ["yml", "yaml"]
    comment_prefix = "#"


class ConfigFile:
    """
    file type detection by suffix, used for settings files and model files
    """

    supported_config_file_types = [
        ConfigFileINI,
        ConfigFileYAML
    ]

    @classmethod
    def get_file_type(cls, config_file_name: str):

        suffix = cls.get_suffix(config_file_name)

        for possible_file_type in cls.supported_config_file_types:
            if suffix in possible_file_type.suffixes:
                return possible_file_type

    @staticmethod
    def get_suffix(config_file_name):

        if not isinstance(config_file_name, str):
            return

        return os.path.splitext(config_file_name)[1].lstrip(".").lower() or None

# EOF
