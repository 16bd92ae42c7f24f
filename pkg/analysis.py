#!/usr/bin/env python3

"""Analysis Classes

This module contains the first-order analysis toolkit: the Diff and Limit predicates as checkers
over a finite falsification schedule, central finite differences, and the well-parametrized
timelike curve test.

The predicates quantify over every epsilon, so they cannot be decided mechanically. A schedule
lists finitely many (epsilon, delta, grid) triples instead, and a check holds when no grid point
violates the inequality for any scheduled triple. Function values may be exact (rationals) or
enclosures (RationalIntervals), and every comparison uses the pessimistic end of the enclosure, so
numeric noise can only make a check fail, never pass.
"""

from fractions import Fraction
import common
import defaults
from polynomial import RationalInterval
from reports import AxiomReport, to_json_value

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

class AnalysisError(Exception):
    """Exceptions generated by this module."""

class OutOfDomain(AnalysisError):
    """A point outside the domain of the function was needed."""

def as_vector(value):
    """Normalize a function value to a tuple of RationalIntervals.

    Scalars (rationals or intervals) become 1-tuples; sequences (including SpacetimePoints over
    the rationals) are converted component by component.
    """
    if isinstance(value, (int, Fraction, RationalInterval)):
        return (RationalInterval.enclose(value),)
    return tuple(RationalInterval.enclose(component) for component in value)

def _norm_sq_upper(vector):
    """Upper bound of the squared Euclidean norm of an enclosure vector."""
    return sum(component.magnitude() ** 2 for component in vector)

class ScheduleEntry():
    """One (epsilon, delta, grid) triple of a schedule, and what checking it found."""
    def __init__(self, epsilon, delta, grid):
        """Initialize the ScheduleEntry instance."""
        self.epsilon = Fraction(epsilon)
        self.delta = Fraction(delta)
        self.grid = list(grid)
        self.violated = False
        self.worst_ratio = None
        self.worst_point = None

    def record(self, point, ratio, violated):
        """Keep the worst point seen (ties go to the smallest point)."""
        if violated:
            self.violated = True
        if (self.worst_ratio is None or ratio > self.worst_ratio or
                (ratio == self.worst_ratio and point < self.worst_point)):
            self.worst_ratio = ratio
            self.worst_point = point

    def to_json(self):
        """JSON-ready form."""
        return {'epsilon': to_json_value(self.epsilon), 'delta': to_json_value(self.delta),
                'points': len(self.grid), 'violated': self.violated,
                'worst_point': to_json_value(self.worst_point),
                'worst_ratio': to_json_value(self.worst_ratio)}

class DiffVerdict():
    """Outcome of a Diff or Limit check over a whole schedule."""
    def __init__(self, predicate, schedule):
        """Initialize the DiffVerdict instance."""
        self.predicate = predicate
        self.schedule = schedule

    @property
    def holds(self):
        """No scheduled epsilon found a violation."""
        return not any(entry.violated for entry in self.schedule)

    def witness(self):
        """(epsilon, point) of the first violated entry, or None."""
        for entry in self.schedule:
            if entry.violated:
                return entry.epsilon, entry.worst_point
        return None

    def to_json(self):
        """JSON-ready form."""
        return {'predicate': self.predicate, 'holds': self.holds,
                'schedule': [entry.to_json() for entry in self.schedule]}

def default_schedule(x0, epsilons=defaults.DIFF_EPSILONS, points=defaults.DIFF_GRID_POINTS,
                     delta_ratio=Fraction(1, 4)):
    """The default schedule: delta = epsilon/4, and points grid points on each side of x0."""
    x0 = Fraction(x0)
    schedule = []
    for epsilon in epsilons:
        delta = Fraction(epsilon) * delta_ratio
        offsets = [delta * index / (points + 1) for index in range(1, points + 1)]
        grid = sorted([x0 - offset for offset in offsets] + [x0 + offset for offset in offsets])
        schedule.append(ScheduleEntry(epsilon, delta, grid))
    return schedule

def _check_domain(domain, point):
    if domain is not None and not domain.contains(point):
        raise OutOfDomain('%s is outside the domain %s' % (point, domain))

def finite_diff(function, x0, step, domain=None):
    """Central difference (f(x0 + h) - f(x0 - h)) / 2h, as an enclosure vector."""
    x0 = Fraction(x0)
    step = Fraction(step)
    if step == 0:
        raise AnalysisError('Finite difference step must be nonzero')
    _check_domain(domain, x0 + step)
    _check_domain(domain, x0 - step)

    ahead = as_vector(function(x0 + step))
    behind = as_vector(function(x0 - step))
    return tuple((first - second) / (2 * step) for first, second in zip(ahead, behind))

def diff_check(function, x0, derivative, schedule=None, domain=None):
    """Check |f(x) - f(x0) - A(x - x0)| < epsilon |x - x0| on every scheduled grid.

    derivative (A) is a rational, an interval, or a vector of them. Grid points outside domain
    are skipped (the predicate only quantifies over the domain).
    """
    x0 = Fraction(x0)
    schedule = schedule if schedule is not None else default_schedule(x0)
    slope = as_vector(derivative)
    base = as_vector(function(x0))

    for entry in schedule:
        for point in entry.grid:
            if point == x0 or abs(point - x0) >= entry.delta:
                continue
            if domain is not None and not domain.contains(point):
                continue

            offset = point - x0
            value = as_vector(function(point))
            residual = tuple(current - start - gradient * offset
                             for current, start, gradient in zip(value, base, slope))
            norm_sq = _norm_sq_upper(residual)
            bound = (entry.epsilon * offset) ** 2
            entry.record(point, norm_sq / bound, norm_sq >= bound)

    return DiffVerdict('Diff', schedule)

def limit_check(function, x0, target, schedule=None, domain=None):
    """Check |f(x) - A| < epsilon for 0 < |x - x0| < delta on every scheduled grid.

    target (A) may be an interval, in which case the distance is measured to its far end.
    """
    x0 = Fraction(x0)
    schedule = schedule if schedule is not None else default_schedule(x0)
    limit = as_vector(target)

    for entry in schedule:
        for point in entry.grid:
            if point == x0 or abs(point - x0) >= entry.delta:
                continue
            if domain is not None and not domain.contains(point):
                continue

            value = as_vector(function(point))
            residual = tuple(current - expected for current, expected in zip(value, limit))
            norm_sq = _norm_sq_upper(residual)
            bound = entry.epsilon ** 2
            entry.record(point, norm_sq / bound, norm_sq >= bound)

    return DiffVerdict('Limit', schedule)

def derivative_uniqueness_check(function, x0, derivative, perturbation, schedule=None,
                                domain=None):
    """The derivative passes every scheduled epsilon, and a perturbed one fails some epsilon."""
    report = AxiomReport('derivative uniqueness', x0=Fraction(x0))
    exact = diff_check(function, x0, derivative, schedule and _fresh(schedule), domain)
    report.check('derivative holds', exact.holds, lambda: exact.to_json())

    perturbed_slope = tuple(component + perturbation for component in as_vector(derivative))
    perturbed = diff_check(function, x0, perturbed_slope, schedule and _fresh(schedule), domain)
    report.check('perturbed derivative fails', not perturbed.holds,
                 lambda: {'perturbation': perturbation})
    return report

def _fresh(schedule):
    """Unchecked copies of schedule entries."""
    return [ScheduleEntry(entry.epsilon, entry.delta, entry.grid) for entry in schedule]

class SampledCurve():
    """A curve t -> point together with the grid it is checked on.

    third_derivative_bound(t, h), if given, bounds every component of the third derivative on
    [t - h, t + h]; central differences are then widened by the truncation error M h^2 / 6.
    """
    def __init__(self, evaluator, grid, domain=None, third_derivative_bound=None):
        """Initialize the SampledCurve instance."""
        self.evaluator = evaluator
        self.grid = [Fraction(point) for point in grid]
        self.domain = domain
        self.third_derivative_bound = third_derivative_bound

        if len(self.grid) < 2:
            raise AnalysisError('A sampled curve needs at least 2 grid points')
        if any(later <= earlier for earlier, later in zip(self.grid, self.grid[1:])):
            raise AnalysisError('Grid points must be ascending')
        for point in self.grid:
            _check_domain(domain, point)

    def evaluate(self, point):
        """Enclosure vector of the curve at point."""
        _check_domain(self.domain, point)
        return as_vector(self.evaluator(Fraction(point)))

    def derivative(self, point, step):
        """Enclosure of the derivative: central difference widened by the truncation bound."""
        estimate = finite_diff(self.evaluate, point, step, self.domain)
        if self.third_derivative_bound is None:
            return estimate
        truncation = Fraction(self.third_derivative_bound(Fraction(point), Fraction(step))) * \
            Fraction(step) ** 2 / 6
        return tuple(component + RationalInterval(-truncation, truncation)
                     for component in estimate)

def minkowski_sq_enclosure(vector):
    """Enclosure of x1^2 - (x2^2 + ... + xd^2) for an enclosure vector."""
    result = vector[0].square()
    for component in vector[1:]:
        result = result - component.square()
    return result

def well_parametrized_check(curve, tolerance=defaults.WELL_PARAMETRIZED_TOLERANCE,
                            step=defaults.FINITE_DIFF_STEP, require_future=True):
    """Check that the derivative has Minkowski square 1 and points to the future at every grid t.

    With require_future=False, past-directed curves pass too.
    """
    tolerance = Fraction(tolerance)
    report = AxiomReport('well-parametrized', tolerance=tolerance, step=Fraction(step))
    worst = Fraction(0)
    worst_point = None

    for point in curve.grid:
        derivative = curve.derivative(point, step)
        square = minkowski_sq_enclosure(derivative)
        deviation = max(abs(square.lo - 1), abs(square.hi - 1))
        if deviation > worst or worst_point is None:
            worst, worst_point = deviation, point

        report.check('unit Minkowski length', deviation <= tolerance,
                     lambda point=point, square=square: {'t': point, 'minkowski_sq': square})
        if require_future:
            report.check('future-directed', derivative[0].lo > 0,
                         lambda point=point, derivative=derivative:
                         {'t': point, 'derivative': derivative})

    report.verdict('unit Minkowski length').detail = {'worst_deviation': worst,
                                                      'worst_point': worst_point}
    return report
