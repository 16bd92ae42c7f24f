#!/usr/bin/env python3

"""Defaults

This module contains constants for various application defaults. They are provided here as a
central location for tweaking.
"""

from fractions import Fraction
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

# Smallest dimension for which the accelerated observer theorems apply.
DIMENSION = 3
SEED = 7
THREADS = 1

# Ordered field and real closed field suites.
ORDERED_FIELD_SAMPLES = 200
REAL_ALGEBRAIC_SAMPLES = 50
RCF_SQRT_SAMPLES = 50
RCF_ODD_POLYNOMIALS = 30
RCF_ODD_DEGREES = (1, 3, 5)
RCF_COEFFICIENT_BOUND = 10

# Special relativity model suite.
SPECREL_SAMPLES = 500
SPECREL_BOOSTS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 5))

# Certified evaluation.
DIGITS = 10
CURVE_DIGITS = 20

# Definable analysis.
FINITE_DIFF_STEP = Fraction(1, 10000)
WELL_PARAMETRIZED_TOLERANCE = Fraction(1, 1000000)
DERIVATIVE_TOLERANCE = Fraction(1, 1000000)
GRID_LOW = Fraction(-2)
GRID_HIGH = Fraction(2)
GRID_POINTS = 41
IDENTITY_GRID_POINTS = 21
DIFF_EPSILONS = tuple(Fraction(1, 10 ** k) for k in range(1, 7))
DIFF_GRID_POINTS = 64

# Reparametrization checks.
REPARAM_GRID_POINTS = 9
REPARAM_TOLERANCE = Fraction(1, 10 ** 8)

# Transcendence witness.
WITNESS_DIGITS = 60
MAX_DEGREE = 4
MAX_HEIGHT = 100
WITNESS_PRECISION_CAP = 400

# Range items are checked by bracketing these magnitudes.
RANGE_TARGET_EXPONENTS = (1, 2, 3, 6)

def grid(low, high, points):
    """Returns an evenly spaced list of rationals from low to high, inclusive."""
    if points < 2:
        return [Fraction(low)]
    step = (Fraction(high) - Fraction(low)) / (points - 1)
    return [Fraction(low) + step * index for index in range(points)]
