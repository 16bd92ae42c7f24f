#!/usr/bin/env python3

"""Preferences Classes

This module implements the persistent preferences: user overrides of the application defaults
(seed, dimension, digits, witness bounds, thread count). They live in QSettings, so they survive
between runs. Command-line flags always win over preferences, and preferences win over defaults.
"""

import common
import defaults

__copyright__ = '''
    Copyright (C) 2019 AccRel developers

    This program is free software: you can redistribute it and/or modify
    it under the terms of the GNU General Public License as published by
    the Free Software Foundation, either version 3 of the License, or
    (at your option) any later version.

    This program is distributed in the hope that it will be useful,
    but WITHOUT ANY WARRANTY; without even the implied warranty of
    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
    GNU General Public License for more details.

    You should have received a copy of the GNU General Public License
    along with this program.  If not, see <https://www.gnu.org/licenses/>.
'''
__author__ = common.AUTHOR
__credits__ = common.CREDITS
__license__ = common.LICENSE
__version__ = common.VERSION
__maintainer__ = common.MAINTAINER
__email__ = common.EMAIL
__status__ = common.STATUS

class PreferencesError(Exception):
    """Preferences Error exception

    Thrown for unknown preference keys and values that don't parse.
    """

class Preferences():
    """Holds the application preferences."""

    # QSettings keys.
    SEED = 'seed'
    DIM = 'dim'
    DIGITS = 'digits'
    MAX_DEGREE = 'max_degree'
    MAX_HEIGHT = 'max_height'
    THREADS = 'threads'

    # All preferences are integers; these are their fallbacks and lower limits.
    DEFAULTS = {
        SEED: (defaults.SEED, 0),
        DIM: (defaults.DIMENSION, 2),
        DIGITS: (defaults.DIGITS, 1),
        MAX_DEGREE: (defaults.MAX_DEGREE, 1),
        MAX_HEIGHT: (defaults.MAX_HEIGHT, 1),
        THREADS: (defaults.THREADS, 1),
    }

    def __init__(self, settings=None):
        """Initialize the Preferences instance.

        settings is a QSettings instance. If not given, the application's native settings are used.
        """
        self.settings = settings if settings is not None else common.settings()
        self.values = {}

        self.read_settings()

    def read_settings(self):
        """Read settings."""
        group_name = self.__class__.__name__
        self.settings.beginGroup(group_name)

        for key, (fallback, _) in self.DEFAULTS.items():
            self.values[key] = int(self.settings.value(key, fallback))

        self.settings.endGroup()

    def write_settings(self):
        """Write settings.

        Values that match the default are removed from the settings, rather than stored.
        """
        group_name = self.__class__.__name__
        self.settings.beginGroup(group_name)

        for key, (fallback, _) in self.DEFAULTS.items():
            if self.values[key] == fallback:
                self.settings.remove(key)
            else:
                self.settings.setValue(key, self.values[key])

        self.settings.endGroup()
        self.settings.sync()

    def value(self, key):
        """Returns the current value of a preference."""
        if key not in self.DEFAULTS:
            raise PreferencesError('Unknown preference "%s". Known preferences are %s.' %
                                   (key, common.pretty_list(sorted(self.DEFAULTS), 'and')))
        return self.values[key]

    def set_value(self, key, text):
        """Set a preference from its text form, and persist it."""
        self.value(key)

        try:
            number = int(text)
        except ValueError:
            raise PreferencesError('Preference "%s" must be an integer, got "%s".' % (key, text))

        minimum = self.DEFAULTS[key][1]
        if number < minimum:
            raise PreferencesError('Preference "%s" must be at least %s.' % (key, minimum))

        self.values[key] = number
        self.write_settings()

    def reset(self):
        """Forget every stored preference."""
        for key, (fallback, _) in self.DEFAULTS.items():
            self.values[key] = fallback
        self.write_settings()

    def resolve(self, key, flag_value):
        """Returns the flag value if one was given on the command line, else the preference."""
        if flag_value is not None:
            return flag_value
        return self.value(key)

    def items(self):
        """Returns (key, value) pairs in a stable order."""
        return sorted(self.values.items())
