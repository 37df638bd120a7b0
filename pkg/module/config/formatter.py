# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from textwrap import fill, indent, dedent

default_output_width = 90


class DescriptionFormatterMixin:
    """
    wraps '_description' for the generated example settings file.
    A description starting with a blank keeps its own layout (tables of
    log levels and alike) and is only dedented.
    """

    _description = ""

    def description(self, width: int = default_output_width) -> str:

        if not isinstance(width, int):
            raise ValueError("value for 'width' must be of type int")

        text = self._description or ""

        if text.startswith(" "):
            return dedent(text.rstrip())

        return fill(" ".join(text.split()), width=width)

    def config_description(self, prefix: str = "#", width: int = default_output_width) -> str:
        """
        description with every line commented out by 'prefix'
        """

        if not isinstance(prefix, str):
            raise ValueError("value for 'prefix' must be of type str")

        prefix += " "

        return indent(self.description(max(3, width - len(prefix))), prefix, lambda line: True)

# EOF
