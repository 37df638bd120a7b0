# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from module.config.option import ConfigOption
from module.config.formatter import DescriptionFormatterMixin


class ConfigOptionGroup(DescriptionFormatterMixin):
    """
    bundles related options (e.g. all root search tolerances) under one title
    in the generated example config
    """

    def __init__(self,
                 title: str = "",
                 description: str = "",
                 options: list = None):

        self.title = title
        self._description = description
        self.options = options

        if not isinstance(self.options, list):
            raise AttributeError(f"options of group '{title}' is not a list of config options")

        for option in self.options:
            if not isinstance(option, ConfigOption):
                raise AttributeError(f"option {option} needs to be of type {ConfigOption.__name__}")

# EOF
