# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

import math
from typing import Any

from module.config.formatter import DescriptionFormatterMixin
from module.common.logging import get_logger
from module.common.misc import parse_float_list

log = get_logger()


class ConfigOption(DescriptionFormatterMixin):
    """
    handles all attributes of a single config option

    Numeric options can carry bounds. 'lower_bound' is inclusive unless
    'strictly_positive' is set, then the value has to be > 0.
    """

    def __init__(self,
                 key: str,
                 value_type: Any,
                 description: str = "",
                 default_value: Any = None,
                 config_example: Any = None,
                 mandatory: bool = False,
                 alt_key: str = None,
                 lower_bound: float = None,
                 upper_bound: float = None,
                 strictly_positive: bool = False,
                 choices: list = None):

        self.key = key
        self._value = None
        self.value_type = value_type
        self._description = description
        self.default_value = default_value
        self.config_example = config_example
        self.mandatory = mandatory
        self.alt_key = alt_key
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound
        self.strictly_positive = strictly_positive
        self.choices = choices
        self.parsing_failed = False

        if self.config_example is None:
            self.config_example = self.default_value

        if self.default_value is not None:
            self.set_value(self.default_value)

        if not isinstance(self._description, str):
            raise ValueError(f"value for 'description' of '{self.key}' must be of type str")

        if self.config_example is not None and not isinstance(self.config_example, self.value_type):
            # ints are accepted as float examples, comma separated strings as list examples
            if not (self.value_type == float and isinstance(self.config_example, int)) and \
                    not (self.value_type == list and isinstance(self.config_example, str)):
                raise ValueError(f"value for 'config_example' of '{self.key}' must be of '{self.value_type}'")

    def __repr__(self):
        return f"{self.key}: {self._value}"

    @property
    def value(self):
        return self._value

    def set_value(self, value):

        if value is None:
            return

        self.parsing_failed = False

        if self.value_type == bool:
            try:
                config_value = self.to_bool(value)
            except ValueError:
                log.error(f"Unable to parse '{value}' for '{self.key}' as bool")
                self.parsing_failed = True
                return

        elif self.value_type in (int, float):
            try:
                config_value = self.value_type(value)
            except (TypeError, ValueError):
                log.error(f"Unable to parse '{value}' for '{self.key}' as {self.value_type.__name__}")
                self.parsing_failed = True
                return

            if not self.check_bounds(config_value):
                self.parsing_failed = True
                return

        elif self.value_type == list:
            try:
                config_value = parse_float_list(value)
            except (TypeError, ValueError):
                log.error(f"Unable to parse '{value}' for '{self.key}' as list of numbers")
                self.parsing_failed = True
                return

        else:
            if len(str(value)) == 0:
                return

            config_value = value

            if self.choices is not None and str(config_value).lower() not in self.choices:
                log.error(f"Value '{value}' for '{self.key}' is invalid, choose one of: {', '.join(self.choices)}")
                self.parsing_failed = True
                return

            if self.choices is not None:
                config_value = str(config_value).lower()

        self._value = config_value

    def check_bounds(self, value) -> bool:

        if isinstance(value, float) and not math.isfinite(value):
            log.error(f"Value for '{self.key}' must be finite, got '{value}'")
            return False

        if self.strictly_positive is True and value <= 0:
            log.error(f"Value for '{self.key}' must be greater than 0, got '{value}'")
            return False

        if self.lower_bound is not None and value < self.lower_bound:
            log.error(f"Value for '{self.key}' must be at least {self.lower_bound}, got '{value}'")
            return False

        if self.upper_bound is not None and value > self.upper_bound:
            log.error(f"Value for '{self.key}' must be at most {self.upper_bound}, got '{value}'")
            return False

        return True

    @staticmethod
    def to_bool(value):
        """
            converts a string to a boolean
        """
        valid = {
             'true': True, 't': True, '1': True, 'yes': True,
             'false': False, 'f': False, '0': False, 'no': False
             }

        if isinstance(value, bool):
            return value

        elif isinstance(value, str):
            if value.lower() in valid:
                return valid[value.lower()]

        raise ValueError

# EOF
