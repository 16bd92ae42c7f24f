#!/usr/bin/env python3

"""Linting helper script

This is a wrapper for launching pylint on this package, with the project's spelling dictionary
(Minkowski, Sturm, sinh and friends are words here). Extra command-line arguments are passed on
to pylint, for example "--disable=fixme".
"""

import os
import sys
import pylint.lint
import common

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

SPELLING_DICT = 'pylint.dict'

def pylint_options(script_dir, package_name, extra=()):
    """The pylint command line for the package."""
    options = ['--max-line-length=100']
    dict_path = os.path.join(script_dir, SPELLING_DICT)
    if os.path.exists(dict_path):
        options.append('--spelling-private-dict-file=%s' % dict_path)
    options += list(extra)
    options.append(package_name)
    return options

def main(argv=None):
    """The main() function just runs pylint."""
    script_dir = os.path.dirname(os.path.realpath(__file__))
    run_dir, package_name = os.path.split(script_dir)

    os.chdir(run_dir)

    extra = sys.argv[1:] if argv is None else argv
    pylint.lint.Run(pylint_options(script_dir, package_name, extra))

if __name__ == '__main__':
    main()
