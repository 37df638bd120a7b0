# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

__version__ = "0.4.0"
__version_date__ = "2026-10-16"
__author__ = "WW-Lab contributors"
__description__ = "WW-Lab"
__license__ = "MIT"
