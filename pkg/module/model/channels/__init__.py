# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

# define all available channel families here
from module.model.channels.base import CouplingChannel, FIRST_SHEET, SECOND_SHEET
from module.model.channels.flat_window import FlatWindowChannel
from module.model.channels.lorentzian import LorentzianChannel
from module.model.channels.ohmic import OhmicChannel

from module.common.errors import ModelInputError

# list of valid channel families
valid_channels = [FlatWindowChannel, LorentzianChannel, OhmicChannel]


def channel_class_for(kind):
    """
    find the channel family implementing 'kind'

    Parameters
    ----------
    kind: str
        channel kind as written in a model file

    Returns
    -------
    CouplingChannel subclass
    """

    for possible_channel_class in valid_channels:
        if possible_channel_class.implements(kind):
            return possible_channel_class

    raise ModelInputError(f"Unknown channel kind '{kind}', valid kinds: "
                          f"{', '.join(x.kind for x in valid_channels)}")

# EOF
