"""Shared pytest fixtures.

The modules import each other by plain module name, so this directory goes on sys.path first.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.realpath(__file__)))

#pylint: disable=wrong-import-position
import pytest
import common
from journal import Journal, MemoryJournal
from ordered_field import RationalField, SampleConfig
from realalgebraic import RealAlgebraicField

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

@pytest.fixture
def rational():
    """The rational field context."""
    return RationalField()

@pytest.fixture
def realalgebraic():
    """The real algebraic field context."""
    return RealAlgebraicField()

@pytest.fixture
def small_config():
    """A short deterministic sample run."""
    return SampleConfig(seed=7, count=20)

@pytest.fixture
def journal():
    """A journal whose entries the test can inspect through journal.sink."""
    return Journal('test', MemoryJournal())

@pytest.fixture
def settings_file(tmp_path):
    """Path of a scratch preferences ini file."""
    return str(tmp_path / 'accrel.ini')

@pytest.fixture
def settings(settings_file):
    """A QSettings on a scratch ini file, so the user's real preferences are never touched."""
    return common.settings(settings_file)
