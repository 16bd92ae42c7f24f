#!/usr/bin/env python3

"""Accelerated Observer Classes

This module contains everything about uniformly accelerated observers: certified evaluation of
exp, sinh and cosh at rationals, life-curves (hyperbolas, inertial lines and custom curves), the
check that a hyperbola satisfies the uniform acceleration axiom, the identity suites for the
hyperbolic functions and the exponential, comoving inertial frames, reparametrization fits, and
the transcendence witness search for e.

Every value is a RationalInterval enclosure computed with exact rational arithmetic. Series are
summed exactly, their tails are bounded explicitly, and endpoints are only rounded outward, so an
enclosure always contains the true value.

The transcendence witness is a finite certificate: for every nonzero integer polynomial of degree
at most D with coefficients at most H in absolute value, the value of the polynomial on the
enclosure of e excludes zero. The search fixes the high coefficients one by one in Python, pruning
every branch whose partial sum is already too large for the remaining terms to cancel, and scans
the two lowest free coefficients as a numpy grid in fixed-point integers. The constant coefficient
is never enumerated: only the integer nearest to -(c_D e^D + ... + c_1 e) can bring the sum close
to zero, and every other choice is at least 1/2 away. Fixed-point cells too close to call are
rechecked exactly with interval arithmetic at increasing precision.
"""

from fractions import Fraction
from functools import lru_cache
import math
import threading
import numpy
from PyQt5.QtCore import QElapsedTimer
import common
import defaults
from analysis import SampledCurve, as_vector, finite_diff, minkowski_sq_enclosure, \
    well_parametrized_check
from journal import null_journal
from minkowski import PoincareMap, SpacetimePoint, identity_map, rational_boost_along, \
    rational_unit_vector, translation
from ordered_field import RationalField
from polynomial import IntPolynomial, RationalInterval, count_real_roots, gcd, sturm_sequence
from realalgebraic import RealAlgebraic, ra_approx
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

CurveKind = common.enum(UnifAccel='UnifAccel', Inertial='Inertial', Custom='Custom')
WitnessStatus = common.enum(Certificate='Certificate', RootFound='RootFound',
                            Inconclusive='Inconclusive')

TANGENCY_STEPS = (Fraction(1, 100), Fraction(1, 1000), Fraction(1, 10000))

# Fixed-point values in the witness grid stay below this.
INT64_HEADROOM = 2 ** 62

class WorldlineError(Exception):
    """Exceptions generated by this module."""

class NonpositiveAcceleration(WorldlineError):
    """Uniform acceleration must be positive."""

class NotTimelike(WorldlineError):
    """The tangent of a curve is not certified timelike."""

class NotWellParametrized(WorldlineError):
    """A curve failed the well-parametrized timelike curve test."""

class CertifiedValue():
    """An enclosure of a function value, with the series terms and tail bound that produced it."""
    __slots__ = ('enclosure', 'terms', 'remainder')

    def __init__(self, enclosure, terms=0, remainder=Fraction(0)):
        """Initialize the CertifiedValue instance."""
        self.enclosure = enclosure
        self.terms = terms
        self.remainder = Fraction(remainder)

    def __repr__(self):
        return 'CertifiedValue(%s)' % self.enclosure

    @property
    def width(self):
        """Width of the enclosure."""
        return self.enclosure.width

    def to_json(self):
        """JSON-ready form."""
        return {'enclosure': self.enclosure.to_json(), 'terms': self.terms,
                'remainder': str(self.remainder)}

def _series(argument, target, parity=None):
    """Taylor partial sum of exp (parity None), cosh (parity 0) or sinh (parity 1).

    Needs |argument| <= 1, where every derivative is bounded by 3, so the tail after the terms up
    to degree n is at most 3 |argument|^(n+1) / (n+1)!. Returns (sum, terms, tail bound).
    """
    total = Fraction(0)
    term = Fraction(1)
    degree = 0
    while True:
        if parity is None or degree % 2 == parity:
            total += term
        term = term * argument / (degree + 1)
        degree += 1
        remainder = 3 * abs(term)
        if remainder <= target:
            return total, degree, remainder

def _finish(enclosure, digits):
    return enclosure.rounded_outward(10 ** (digits + 1))

@lru_cache(maxsize=4096)
def _exp_enclosure(argument, digits):
    """Enclosure of exp(argument), argument >= 0, no wider than 10^-digits / 2.

    Arguments above 1 are halved k times and the result squared back k times. Squaring
    multiplies the error by about 2^k exp(argument), which the guard digits absorb; the loop adds
    more guard digits in the rare case that was not enough.
    """
    target = Fraction(1, 10 ** digits)
    if argument == 0:
        return RationalInterval.point(1), 0, Fraction(0)

    halvings = 0
    while argument / 2 ** halvings > 1:
        halvings += 1
    guard = digits + len(str(2 ** halvings * 3 ** math.ceil(argument))) + 2

    while True:
        total, terms, remainder = _series(argument / 2 ** halvings, Fraction(1, 10 ** guard) / 4)
        denominator = 10 ** (guard + 2)
        enclosure = RationalInterval(total - remainder, total + remainder).rounded_outward(
            denominator)
        for _ in range(halvings):
            enclosure = enclosure.square().rounded_outward(denominator)
        if enclosure.width <= target / 2:
            return enclosure, terms, remainder
        guard += 5

@lru_cache(maxsize=4096)
def _hyperbolic(parity, magnitude, digits):
    """Enclosure of cosh (parity 0) or sinh (parity 1) at magnitude >= 0."""
    if magnitude <= 1:
        total, terms, remainder = _series(magnitude, Fraction(1, 10 ** digits) / 4, parity)
        return RationalInterval(total - remainder, total + remainder), terms, remainder

    exponential, terms, remainder = _exp_enclosure(magnitude, digits + 1)
    inverse = exponential.reciprocal()
    enclosure = exponential - inverse if parity else exponential + inverse
    return enclosure * Fraction(1, 2), terms, remainder

def certified_exp(argument, digits=defaults.DIGITS):
    """exp(argument), enclosure no wider than 10^-digits."""
    argument = Fraction(argument)
    if argument < 0:
        enclosure, terms, remainder = _exp_enclosure(-argument, digits + 1)
        enclosure = enclosure.reciprocal()
    else:
        enclosure, terms, remainder = _exp_enclosure(argument, digits + 1)
    return CertifiedValue(_finish(enclosure, digits), terms, remainder)

def certified_sinh(argument, digits=defaults.DIGITS):
    """sinh(argument). Odd by construction: sinh(-t) is exactly -sinh(t)."""
    argument = Fraction(argument)
    enclosure, terms, remainder = _hyperbolic(1, abs(argument), digits + 1)
    enclosure = _finish(enclosure, digits)
    if argument < 0:
        enclosure = -enclosure
    return CertifiedValue(enclosure, terms, remainder)

def certified_cosh(argument, digits=defaults.DIGITS):
    """cosh(argument). Even by construction."""
    enclosure, terms, remainder = _hyperbolic(0, abs(Fraction(argument)), digits + 1)
    return CertifiedValue(_finish(enclosure, digits), terms, remainder)

def certified_exp_family(function, argument, digits=defaults.DIGITS):
    """Dispatch on the function name: exp, sinh or cosh."""
    evaluators = {'exp': certified_exp, 'sinh': certified_sinh, 'cosh': certified_cosh}
    if function not in evaluators:
        raise WorldlineError('Unknown function "%s" (expected %s)' %
                             (function, common.pretty_list(sorted(evaluators), op='or')))
    return evaluators[function](argument, digits)

class LifeCurve():
    """A curve t -> enclosure of a spacetime point, with a descriptor of what it is.

    kind is one of CurveKind. Hyperbolas carry acceleration and offset, inertial curves carry the
    Poincare map whose time axis they are. third_derivative_bound(t, h), when known, bounds every
    component of the third derivative on [t - h, t + h].
    """
    def __init__(self, kind, evaluator, dimension, third_derivative_bound=None, domain=None,
                 acceleration=None, offset=None, transform=None, name=None):
        """Initialize the LifeCurve instance."""
        self.kind = kind
        self.evaluator = evaluator
        self.dimension = dimension
        self.third_derivative_bound = third_derivative_bound
        self.domain = domain
        self.acceleration = acceleration
        self.offset = offset
        self.transform = transform
        self.name = name or kind

    def __repr__(self):
        return 'LifeCurve(%s)' % self.name

    def evaluate(self, point):
        """Enclosure vector of the curve at point."""
        point = Fraction(point)
        if self.domain is not None and not self.domain.contains(point):
            raise WorldlineError('%s is outside the domain of %s' % (point, self.name))
        return as_vector(self.evaluator(point))

    def derivative(self, point, step=defaults.FINITE_DIFF_STEP):
        """Central difference at point, widened by the truncation bound when one is known."""
        estimate = finite_diff(self.evaluate, point, step, self.domain)
        if self.third_derivative_bound is None:
            return estimate
        step = Fraction(step)
        truncation = Fraction(self.third_derivative_bound(Fraction(point), step)) * step ** 2 / 6
        return tuple(component + RationalInterval(-truncation, truncation)
                     for component in estimate)

    def sampled(self, grid):
        """The curve restricted to a grid, for the analysis checks."""
        return SampledCurve(self.evaluate, grid, self.domain, self.third_derivative_bound)

    def contains(self, point):
        """Whether an exact spacetime point lies on the curve.

        Decided exactly for hyperbolas (by the range equation) and inertial curves (by mapping
        back onto the time axis). Custom curves have no exact membership test.
        """
        ctx = point.ctx
        if point.dimension != self.dimension:
            return False

        if self.kind == CurveKind.UnifAccel:
            offset = [ctx.from_rational(coordinate) for coordinate in self.offset]
            time = ctx.sub(point[0], offset[0])
            space = ctx.sub(point[1], offset[1])
            square = ctx.from_rational(self.acceleration ** 2)
            return (ctx.equal(ctx.sub(ctx.square(space), ctx.square(time)), square) and
                    ctx.sign(space) > 0 and
                    all(ctx.equal(point[index], offset[index])
                        for index in range(2, self.dimension)))

        if self.kind == CurveKind.Inertial:
            transform = self.transform
            if transform.ctx.name != ctx.name:
                transform = PoincareMap(ctx, transform.linear, list(transform.translation),
                                        validate=False)
            local = transform.invert().apply(point)
            return all(ctx.is_zero(coordinate) for coordinate in local.coords[1:])

        raise WorldlineError('Membership in custom curve %s cannot be decided exactly' %
                             self.name)

    def to_json(self):
        """Descriptor."""
        result = {'kind': self.kind, 'name': self.name, 'dimension': self.dimension}
        if self.kind == CurveKind.UnifAccel:
            result['acceleration'] = to_json_value(self.acceleration)
            result['offset'] = to_json_value(self.offset)
        elif self.kind == CurveKind.Inertial:
            result['transform'] = self.transform.to_json()
        return result

def unif_lifecurve(acceleration, offset=None, dimension=defaults.DIMENSION,
                   digits=defaults.CURVE_DIGITS):
    """The hyperbola t -> y + (a sinh(t/a), a cosh(t/a), 0, ..., 0).

    It passes through y + (0, a, 0, ..., 0) at t = 0, satisfies
    (x2 - y2)^2 - (x1 - y1)^2 = a^2, and is parametrized by proper time.
    """
    acceleration = Fraction(acceleration)
    if acceleration <= 0:
        raise NonpositiveAcceleration('Acceleration %s must be positive' % acceleration)
    if dimension < 3:
        raise WorldlineError('Uniformly accelerated observers need dimension 3 or more, not %s' %
                             dimension)

    if offset is None:
        offset = (Fraction(0),) * dimension
    offset = tuple(Fraction(coordinate) for coordinate in offset)
    if len(offset) != dimension:
        raise WorldlineError('Offset has %s coordinates, expected %s' % (len(offset), dimension))

    # Scaling by a costs about log10(a) digits.
    inner = digits + len(str(math.ceil(acceleration))) + 1
    rest = tuple(RationalInterval.point(coordinate) for coordinate in offset[2:])

    def evaluator(point):
        argument = point / acceleration
        sinh = certified_sinh(argument, inner).enclosure
        cosh = certified_cosh(argument, inner).enclosure
        return (sinh * acceleration + offset[0], cosh * acceleration + offset[1]) + rest

    def third_derivative_bound(point, step):
        return certified_cosh((abs(point) + step) / acceleration, 5).enclosure.hi / \
            acceleration ** 2

    return LifeCurve(CurveKind.UnifAccel, evaluator, dimension, third_derivative_bound,
                     acceleration=acceleration, offset=offset,
                     name='hyperbola a=%s' % acceleration)

def inertial_lifecurve(transform, digits=defaults.CURVE_DIGITS):
    """The image of the time axis under a Poincare map, t -> T(t, 0, ..., 0)."""
    ctx = transform.ctx
    dimension = transform.dimension

    def evaluator(point):
        image = transform.apply(SpacetimePoint(ctx, [point] + [0] * (dimension - 1)))
        return tuple(ctx.approximate(coordinate, digits) for coordinate in image)

    return LifeCurve(CurveKind.Inertial, evaluator, dimension, lambda point, step: 0,
                     transform=transform, name='inertial')

def custom_lifecurve(evaluator, dimension, third_derivative_bound=None, domain=None,
                     name='custom'):
    """A curve given by an arbitrary enclosure evaluator."""
    return LifeCurve(CurveKind.Custom, evaluator, dimension, third_derivative_bound, domain,
                     name=name)

def reparametrize_curve(curve, epsilon, shift):
    """The curve t -> curve(epsilon t + shift)."""
    epsilon = Fraction(epsilon)
    shift = Fraction(shift)
    bound = None
    if curve.third_derivative_bound is not None:
        def bound(point, step):
            return curve.third_derivative_bound(epsilon * point + shift, abs(epsilon) * step)

    return custom_lifecurve(lambda point: curve.evaluate(epsilon * point + shift),
                            curve.dimension, bound,
                            name='%s at %s t + %s' % (curve.name, epsilon, shift))

def default_grid(points=defaults.GRID_POINTS):
    """points equally spaced rationals on the default interval."""
    return defaults.grid(defaults.GRID_LOW, defaults.GRID_HIGH, points)

def check_unifob_axiom(curve, grid=None, tolerance=defaults.WELL_PARAMETRIZED_TOLERANCE,
                       step=defaults.FINITE_DIFF_STEP, journal=None):
    """Check every clause of the uniform acceleration axiom for a constructed hyperbola."""
    if curve.kind != CurveKind.UnifAccel:
        raise WorldlineError('%s is not a uniformly accelerated life-curve' % curve.name)

    journal = journal or null_journal('unifob')
    grid = grid or default_grid()
    journal.log('Checking %s on %s' % (curve.name, common.pluralize('grid point', len(grid))))

    report = well_parametrized_check(curve.sampled(grid), tolerance, step)
    report.name = 'AxExistsUnifOb'
    report.info.update(acceleration=curve.acceleration, offset=curve.offset)

    acceleration = curve.acceleration
    offset = curve.offset
    for point in grid:
        try:
            value = curve.evaluate(point)
        except WorldlineError:
            report.check('domain contains the grid', False, {'t': point})
            continue
        report.check('domain contains the grid', True)

        square = (value[1] - offset[1]).square() - (value[0] - offset[0]).square()
        on_branch = (square.contains(acceleration ** 2) and (value[1] - offset[1]).lo > 0 and
                     all(component == RationalInterval.point(coordinate)
                         for component, coordinate in zip(value[2:], offset[2:])))
        report.check('hyperbola range', on_branch,
                     lambda point=point, value=value: {'t': point, 'point': value})

    apex = curve.evaluate(0)
    expected = tuple(coordinate + (acceleration if index == 1 else 0)
                     for index, coordinate in enumerate(offset))
    report.check('apex at t = 0', all(component.contains(coordinate)
                                      for component, coordinate in zip(apex, expected)),
                 lambda: {'point': apex, 'expected': expected})

    later = curve.evaluate(1)
    report.check('future-directed time', later[0].lo > apex[0].hi,
                 lambda: {'time_at_0': apex[0], 'time_at_1': later[0]})

    journal.log('%s %s' % (report.name, 'passed' if report.passed else 'FAILED'))
    return report

def _bracket(function, target, lower=None):
    """Rationals lo < hi with function(lo) < target < function(hi), certified.

    function must be increasing on the search range (from lower, if given). The bracket is
    bisected down to width 1/1024. Returns None if no bracket was found.
    """
    lo = Fraction(-1) if lower is None else Fraction(lower)
    hi = Fraction(1) if lower is None else lo + 1
    for _ in range(64):
        if function(lo).hi < target:
            break
        lo *= 2
    else:
        return None
    for _ in range(64):
        if function(hi).lo > target:
            break
        hi = hi * 2 if hi > 0 else hi + 1
    else:
        return None

    while hi - lo > Fraction(1, 1024):
        middle = (lo + hi) / 2
        value = function(middle)
        if value.hi < target:
            lo = middle
        elif value.lo > target:
            hi = middle
        else:
            break
    return RationalInterval(lo, hi)

def _central_derivative(function, point, step, bound):
    """Central difference of a scalar enclosure function, widened by bound h^2 / 6."""
    estimate = (function(point + step) - function(point - step)) / (2 * step)
    truncation = bound * step ** 2 / 6
    return estimate + RationalInterval(-truncation, truncation)

def check_hyperbolic_identities(digits=defaults.DIGITS, grid=None,
                                step=defaults.FINITE_DIFF_STEP,
                                tolerance=defaults.DERIVATIVE_TOLERANCE, journal=None):
    """Check the eight items about S = sinh and C = cosh on a grid.

    S is odd, so the symmetry item is S(-t) = -S(t); S(-t) = S(t) only holds at t = 0.
    """
    journal = journal or null_journal('unifob')
    grid = grid or default_grid(defaults.IDENTITY_GRID_POINTS)
    step = Fraction(step)
    # Finite differences divide by 2h, so they get extra digits.
    fine = digits + len(str(step.denominator)) + 2
    report = AxiomReport('hyperbolic identities', digits=digits, step=step, tolerance=tolerance)

    def sinh(point, precision=digits):
        return certified_sinh(point, precision).enclosure

    def cosh(point, precision=digits):
        return certified_cosh(point, precision).enclosure

    for point in grid:
        s_value, c_value = sinh(point), cosh(point)
        report.check('C^2 - S^2 = 1', (c_value.square() - s_value.square()).contains(1),
                     lambda point=point, s_value=s_value, c_value=c_value:
                     {'t': point, 'S': s_value, 'C': c_value})

    report.check('S(0) = 0 and C(0) = 1',
                 sinh(0) == RationalInterval.point(0) and cosh(0) == RationalInterval.point(1),
                 lambda: {'S': sinh(0), 'C': cosh(0)})
    report.check('S(1) > 0', sinh(1).lo > 0, lambda: {'S': sinh(1)})

    symmetry = 'C(-t) = C(t) and S(-t) = -S(t)'
    report.verdict(symmetry, {'even': 'C', 'odd': 'S'})
    for point in grid:
        report.check(symmetry, cosh(-point) == cosh(point) and sinh(-point) == -sinh(point),
                     lambda point=point: {'t': point})

    for point in grid:
        bound = cosh(abs(point) + step, 5).hi
        s_prime = _central_derivative(lambda x: sinh(x, fine), point, step, bound)
        c_prime = _central_derivative(lambda x: cosh(x, fine), point, step, bound)

        square = s_prime.square() - c_prime.square()
        deviation = max(abs(square.lo - 1), abs(square.hi - 1))
        report.check("(S')^2 - (C')^2 = 1", deviation <= tolerance,
                     lambda point=point, square=square: {'t': point, 'value': square})

        report.check("C' = S and S' = C",
                     (c_prime - sinh(point, fine)).magnitude() <= tolerance and
                     (s_prime - cosh(point, fine)).magnitude() <= tolerance,
                     lambda point=point, s_prime=s_prime, c_prime=c_prime:
                     {'t': point, "S'": s_prime, "C'": c_prime})

    monotone = 'S increasing; C increasing on [0, inf) and decreasing on (-inf, 0]'
    for earlier, later in zip(grid, grid[1:]):
        increasing = sinh(later).lo > sinh(earlier).hi
        if earlier >= 0:
            increasing = increasing and cosh(later).lo > cosh(earlier).hi
        elif later <= 0:
            increasing = increasing and cosh(later).hi < cosh(earlier).lo
        report.check(monotone, increasing,
                     lambda earlier=earlier, later=later: {'t': [earlier, later]})

    ranges = 'ran S = Q and ran C = [1, inf)'
    brackets = {}
    for exponent in defaults.RANGE_TARGET_EXPONENTS:
        for target, function, lower in ((Fraction(10) ** exponent, sinh, None),
                                        (-Fraction(10) ** exponent, sinh, None),
                                        (1 + Fraction(10) ** exponent, cosh, 0)):
            found = _bracket(function, target, lower)
            brackets['%s = %s' % ('S' if function is sinh else 'C', target)] = found
            report.check(ranges, found is not None,
                         lambda target=target: {'target': target})
    for point in grid:
        report.check(ranges, cosh(point).hi >= 1, lambda point=point: {'t': point})
    report.verdict(ranges).detail = {'brackets': brackets}

    journal.log('Hyperbolic identities %s' % ('passed' if report.passed else 'FAILED'))
    return report

def check_exp_properties(digits=defaults.DIGITS, grid=None, step=defaults.FINITE_DIFF_STEP,
                         tolerance=defaults.DERIVATIVE_TOLERANCE, journal=None):
    """Check E = C + S: E(0) = 1, E(1) > 0, E(-t)E(t) = 1, E' = E, increasing, range (0, inf).

    E is also compared with the independent exponential series.
    """
    journal = journal or null_journal('unifob')
    grid = grid or default_grid(defaults.IDENTITY_GRID_POINTS)
    step = Fraction(step)
    fine = digits + len(str(step.denominator)) + 2
    report = AxiomReport('exponential', digits=digits, step=step, tolerance=tolerance)

    def exp(point, precision=digits):
        # Both terms are one digit tighter, so the sum is within 10^-precision.
        return (certified_cosh(point, precision + 1).enclosure +
                certified_sinh(point, precision + 1).enclosure)

    report.check('E(0) = 1', exp(0) == RationalInterval.point(1), lambda: {'E': exp(0)})
    report.check('E(1) > 0', exp(1).lo > 0, lambda: {'E': exp(1)})

    for point in grid:
        product = exp(-point) * exp(point)
        report.check('E(-t) E(t) = 1', product.contains(1),
                     lambda point=point, product=product: {'t': point, 'product': product})

        bound = certified_exp(abs(point) + step, 5).enclosure.hi
        derivative = _central_derivative(lambda x: exp(x, fine), point, step, bound)
        report.check("E' = E", (derivative - exp(point, fine)).magnitude() <= tolerance,
                     lambda point=point, derivative=derivative:
                     {'t': point, "E'": derivative})

        series = certified_exp(point, digits).enclosure
        value = exp(point)
        report.check('E agrees with the exponential series',
                     value.intersects(series) and value.width <= Fraction(1, 10 ** digits) and
                     series.width <= Fraction(1, 10 ** digits),
                     lambda point=point, value=value, series=series:
                     {'t': point, 'E': value, 'exp': series})

    for earlier, later in zip(grid, grid[1:]):
        report.check('E increasing', exp(later).lo > exp(earlier).hi,
                     lambda earlier=earlier, later=later: {'t': [earlier, later]})

    brackets = {}
    for exponent in defaults.RANGE_TARGET_EXPONENTS:
        for target in (Fraction(10) ** exponent, Fraction(1, 10 ** exponent)):
            found = _bracket(exp, target)
            brackets['E = %s' % target] = found
            report.check('ran E = (0, inf)', found is not None, {'target': target})
    for point in grid:
        report.check('ran E = (0, inf)', exp(point).lo > 0, {'t': point})
    report.verdict('ran E = (0, inf)').detail = {'brackets': brackets}

    journal.log('Exponential properties %s' % ('passed' if report.passed else 'FAILED'))
    return report

def comoving_velocity(curve, point, step=defaults.FINITE_DIFF_STEP):
    """Enclosure of the velocity dx_i/dx_1 of the curve at point. Raises NotTimelike."""
    tangent = curve.derivative(point, step)
    square = minkowski_sq_enclosure(tangent)
    if not (square.lo > 0 and tangent[0].lo > 0):
        raise NotTimelike('Tangent of %s at %s is not certified future timelike' %
                          (curve.name, point))
    return tuple(component / tangent[0] for component in tangent[1:])

def _direction(velocity):
    """Rational unit vector along velocity, exact when velocity lies along one axis."""
    nonzero = [index for index, component in enumerate(velocity) if component != 0]
    if len(nonzero) == 1:
        index = nonzero[0]
        return [Fraction(0 if position != index else (1 if velocity[index] > 0 else -1))
                for position in range(len(velocity))]
    return rational_unit_vector(velocity)

def comoving_inertial(curve, point, digits=defaults.CURVE_DIGITS, step=defaults.FINITE_DIFF_STEP):
    """A rational Poincare map whose time axis is tangent to the curve at point.

    The map is the boost (along the velocity of the curve) followed by the translation to the
    curve point, both approximated over the rationals to about 10^-digits. Inertial curves get
    their own map, shifted along their time axis.
    """
    point = Fraction(point)
    if curve.kind == CurveKind.Inertial:
        transform = curve.transform
        shift = translation(transform.ctx, [point] + [0] * (curve.dimension - 1))
        return transform.compose(shift)

    ctx = RationalField()
    velocity = [component.midpoint for component in comoving_velocity(curve, point, step)]
    speed_sq = sum(component ** 2 for component in velocity)
    if speed_sq == 0:
        boost = identity_map(ctx, curve.dimension)
    else:
        # u = v / (1 + sqrt(1 - v^2)) is the boost parameter with velocity v.
        scale = 10 ** digits
        speed = Fraction(math.isqrt(math.floor(speed_sq * scale * scale)), scale)
        if speed >= 1:
            raise NotTimelike('Speed of %s at %s is not below 1' % (curve.name, point))
        root = Fraction(math.isqrt(math.floor((1 - speed ** 2) * scale * scale)), scale)
        parameter = Fraction(round(speed / (1 + root) * scale), scale)
        boost = rational_boost_along(parameter, _direction(velocity), curve.dimension, ctx)

    position = [component.midpoint for component in curve.evaluate(point)]
    return translation(ctx, position).compose(boost)

def check_comoving_frame(curve, grid, digits=defaults.CURVE_DIGITS,
                         step=defaults.FINITE_DIFF_STEP,
                         tolerance=defaults.DERIVATIVE_TOLERANCE, journal=None):
    """Check the comoving maps of a curve: unit tangent, matching velocity, first-order tangency.

    Tangency means |curve(t + h) - T(h, 0, ..., 0)| / h^2 stays bounded as h shrinks: it may
    not grow by more than a factor 2 over the ratio at the largest step.
    """
    journal = journal or null_journal('unifob')
    report = AxiomReport('comoving frame', curve=curve.name)
    ctx = RationalField()
    slack = Fraction(1, 10 ** (digits - 3))

    for point in grid:
        transform = comoving_inertial(curve, point, digits, step)
        column = [transform.linear[row][0] for row in range(curve.dimension)]
        report.check('unit tangent', column[0] ** 2 - sum(entry ** 2 for entry in column[1:]) == 1,
                     lambda point=point: {'t': point})

        velocity = comoving_velocity(curve, point, step)
        frame_velocity = transform.time_axis_velocity()
        report.check('velocity', all((component - value).magnitude() <= tolerance
                                     for component, value in zip(velocity, frame_velocity)),
                     lambda point=point, velocity=velocity, frame_velocity=frame_velocity:
                     {'t': point, 'curve': velocity, 'frame': frame_velocity})

        ratios = []
        for offset in TANGENCY_STEPS:
            image = transform.apply(SpacetimePoint(ctx, [offset] + [0] * (curve.dimension - 1)))
            actual = curve.evaluate(point + offset)
            error = max((component - coordinate).magnitude()
                        for component, coordinate in zip(actual, image))
            ratios.append(max(error - slack, Fraction(0)) / offset ** 2)
        report.check('first-order tangency', all(ratio <= 2 * ratios[0] + 1 for ratio in ratios),
                     lambda point=point, ratios=ratios: {'t': point, 'ratios': ratios})

    journal.log('Comoving frames of %s %s' % (curve.name,
                                              'passed' if report.passed else 'FAILED'))
    return report

class ReparamFit():
    """Result of reparam_check: delta(t) = gamma(epsilon t + c), or the first mismatching t."""
    def __init__(self, epsilon, offset, report, witness=None, lemma_applies=False):
        """Initialize the ReparamFit instance."""
        self.epsilon = epsilon
        self.offset = offset
        self.report = report
        self.witness = witness
        self.lemma_applies = lemma_applies

    @property
    def matched(self):
        """The fit held on the whole grid."""
        return self.witness is None and self.report.passed

    def to_json(self):
        """JSON-ready form."""
        return {'epsilon': to_json_value(self.epsilon), 'offset': to_json_value(self.offset),
                'matched': self.matched, 'mismatch': to_json_value(self.witness),
                'lemma_applies': self.lemma_applies}

def _time_preimage(curve, target, tolerance, increasing):
    """Enclosure of the parameter s with curve(s)_1 in target (the time coordinate is monotone)."""
    def below(point):
        value = curve.evaluate(point)[0]
        return value.hi < target.lo if increasing else value.lo > target.hi

    def above(point):
        value = curve.evaluate(point)[0]
        return value.lo > target.hi if increasing else value.hi < target.lo

    lo, hi = Fraction(-1), Fraction(1)
    for _ in range(64):
        if below(lo):
            break
        lo *= 2
    else:
        return None
    for _ in range(64):
        if above(hi):
            break
        hi *= 2
    else:
        return None

    while hi - lo > tolerance:
        middle = (lo + hi) / 2
        if below(middle):
            lo = middle
        elif above(middle):
            hi = middle
        else:
            break
    return RationalInterval(lo, hi)

def reparam_check(gamma, delta, grid=None, tolerance=defaults.REPARAM_TOLERANCE,
                  step=defaults.FINITE_DIFF_STEP, journal=None):
    """Find epsilon = +-1 and c with delta(t) = gamma(epsilon t + c) on the grid.

    Both curves must be well-parametrized (unit Minkowski length); NotWellParametrized is raised
    otherwise. The fit uses the first and last grid points, then every grid point is verified.
    When both curves pass through the same point at 0 and are future-directed, the fit must be
    epsilon = 1, c = 0.
    """
    journal = journal or null_journal('reparam')
    grid = grid or default_grid(defaults.REPARAM_GRID_POINTS)
    tolerance = Fraction(tolerance)
    report = AxiomReport('reparametrization', gamma=gamma.name, delta=delta.name,
                         tolerance=tolerance)

    for curve in (gamma, delta):
        check = well_parametrized_check(curve.sampled(grid), step=step, require_future=False)
        if not check.passed:
            raise NotWellParametrized('%s is not a well-parametrized timelike curve: %s' %
                                      (curve.name, common.pretty_list(check.failed_laws())))

    increasing = gamma.evaluate(1)[0].lo > gamma.evaluate(0)[0].hi
    first, last = grid[0], grid[-1]
    preimages = [_time_preimage(gamma, delta.evaluate(point)[0], tolerance / 1000, increasing)
                 for point in (first, last)]
    if None in preimages:
        report.check('fit', False, {'t': first if preimages[0] is None else last})
        return ReparamFit(None, None, report, first if preimages[0] is None else last)

    slope = (preimages[1] - preimages[0]) / (last - first)
    epsilon = 1 if slope.midpoint > 0 else -1
    offset = preimages[0] - epsilon * first
    report.check('fit', (slope - epsilon).magnitude() <= tolerance,
                 lambda: {'slope': slope})

    witness = None
    shift = offset.midpoint
    for point in grid:
        expected = gamma.evaluate(epsilon * point + shift)
        actual = delta.evaluate(point)
        distance = max((left - right).magnitude() for left, right in zip(actual, expected))
        if not report.check('delta(t) = gamma(epsilon t + c)', distance <= tolerance,
                            lambda point=point, distance=distance:
                            {'t': point, 'distance': distance}) and witness is None:
            witness = point

    same_start = all(left.intersects(right)
                     for left, right in zip(gamma.evaluate(0), delta.evaluate(0)))
    future = (increasing and delta.evaluate(1)[0].lo > delta.evaluate(0)[0].hi)
    lemma_applies = same_start and future
    if lemma_applies:
        report.check('same life-curve', epsilon == 1 and offset.contains(0),
                     lambda: {'epsilon': epsilon, 'offset': offset})

    journal.log('Reparametrization fit epsilon=%s c=%s %s' %
                (epsilon, offset, 'matched' if witness is None else 'MISMATCH at t=%s' % witness))
    return ReparamFit(epsilon, offset, report, witness, lemma_applies)

class WitnessTarget():
    """A value for the witness search that can be enclosed at any number of digits.

    exact, when known (a rational or a RealAlgebraic), lets the search decide exactly whether a
    polynomial vanishes at the value.
    """
    def __init__(self, name, enclose, exact=None):
        """Initialize the WitnessTarget instance."""
        self.name = name
        self.enclose = enclose
        self.exact = exact

    @classmethod
    def euler(cls):
        """e = exp(1)."""
        return cls('e', lambda digits: certified_exp(1, digits).enclosure)

    @classmethod
    def from_value(cls, value):
        """Wrap a CertifiedValue, RationalInterval, rational or RealAlgebraic."""
        if isinstance(value, WitnessTarget):
            return value
        if isinstance(value, CertifiedValue):
            value = value.enclosure
        if isinstance(value, RationalInterval):
            return cls(str(value), lambda digits: value)
        if isinstance(value, RealAlgebraic):
            return cls(str(value), lambda digits: ra_approx(value, digits), value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            value = Fraction(value)
            return cls(str(value), lambda digits: RationalInterval.point(value), value)
        raise WorldlineError('Cannot search for polynomials vanishing at %r' % (value,))

    def is_root(self, polynomial):
        """True or False if decidable exactly, else None."""
        exact = self.exact
        if exact is None:
            return None
        if isinstance(exact, RealAlgebraic):
            if exact.is_rational:
                return polynomial.evaluate(exact.fast_path) == 0
            common_factor = gcd(polynomial, exact.defining)
            return (common_factor.degree >= 1 and
                    count_real_roots(sturm_sequence(common_factor), exact.isolator) >= 1)
        return polynomial.evaluate(exact) == 0

class ShardResult():
    """What scanning the polynomials with one leading coefficient found."""
    def __init__(self, key):
        """Initialize the ShardResult instance."""
        self.key = key
        self.evaluated = 0
        self.pruned = 0
        self.scanned = 0
        self.worst_margin = None
        self.flagged = []

    def margin(self, value):
        """Keep the smallest certified lower bound of |p(x)|."""
        if self.worst_margin is None or value < self.worst_margin:
            self.worst_margin = value

    def to_json(self):
        """JSON-ready form."""
        return {'leading': self.key, 'evaluated': self.evaluated, 'pruned': str(self.pruned),
                'worst_margin': to_json_value(self.worst_margin)}

class WitnessResult():
    """Certificate, RootFound or Inconclusive, with the search statistics."""
    def __init__(self, target, max_degree, max_height, digits):
        """Initialize the WitnessResult instance."""
        self.target = target
        self.max_degree = max_degree
        self.max_height = max_height
        self.digits = digits
        self.shards = {}
        self.roots = []
        self.unresolved = []
        self.elapsed_msecs = None

    @property
    def candidates(self):
        """Nonzero polynomials in range."""
        return (2 * self.max_height + 1) ** (self.max_degree + 1) - 1

    @property
    def canonical(self):
        """Candidates with a positive leading coefficient (p and -p share their roots)."""
        return self.candidates // 2

    @property
    def status(self):
        """One of WitnessStatus."""
        if self.roots:
            return WitnessStatus.RootFound
        if self.unresolved:
            return WitnessStatus.Inconclusive
        return WitnessStatus.Certificate

    @property
    def evaluated(self):
        """Fixed-point grid cells evaluated."""
        return sum(shard.evaluated for shard in self.shards.values())

    @property
    def pruned_fraction(self):
        """Share of the canonical candidates eliminated by the partial sum bound."""
        return Fraction(sum(shard.pruned for shard in self.shards.values()), self.canonical)

    def worst_margin(self):
        """Smallest certified lower bound of |p(x)| over all shards."""
        margins = [shard.worst_margin for shard in self.shards.values()
                   if shard.worst_margin is not None]
        return min(margins) if margins else None

    def to_json(self, include_timings=False):
        """JSON-ready form."""
        result = {
            'status': self.status,
            'value': self.target.name,
            'max_degree': self.max_degree,
            'max_height': self.max_height,
            'digits': self.digits,
            'candidates': str(self.candidates),
            'evaluated': str(self.evaluated),
            'pruned_fraction': str(self.pruned_fraction),
            'worst_margin': to_json_value(self.worst_margin()),
            'shards': [self.shards[key].to_json() for key in sorted(self.shards)],
            'roots': [str(polynomial) for polynomial in self.roots],
            'unresolved': [str(polynomial) for polynomial in self.unresolved],
        }
        if include_timings and self.elapsed_msecs is not None:
            result['elapsed_msecs'] = self.elapsed_msecs
        return result

class WitnessSearch():
    """One exhaustive search over the integer polynomials of bounded degree and height.

    Coefficients are ascending (c_0 first). Values are fixed-point integers scaled by 2^bits:
    powers[i] is x~^i rounded, where x~ is the midpoint of the enclosure, and threshold bounds
    the rounding and enclosure error of any candidate, so |value| > threshold proves p(x) != 0.
    """
    def __init__(self, target, max_degree, max_height, digits, precision_cap):
        """Initialize the WitnessSearch instance."""
        self.target = target
        self.max_degree = max_degree
        self.max_height = max_height
        self.digits = digits
        self.precision_cap = precision_cap
        self.lock = threading.Lock()
        self.pending = []
        self.results = {}

        enclosure = target.enclose(digits)
        while True:
            center = enclosure.midpoint
            bound = max_height * (1 + sum(math.ceil(abs(center) + 1) ** power
                                          for power in range(1, max_degree + 1))) + 1
            bits = (INT64_HEADROOM // bound).bit_length() - 1
            if bits < 1:
                raise WorldlineError('Value %s is too large for the witness search' %
                                     target.name)
            scale = 2 ** bits

            spread = max_height * sum((enclosure ** power - center ** power).magnitude()
                                      for power in range(1, max_degree + 1))
            threshold = math.ceil(scale * spread) + (max_degree * max_height + 1) // 2 + 1
            wider = 2 * math.ceil(scale * spread) > max_degree * max_height
            if not wider or self.digits * 2 > precision_cap:
                break
            refined = target.enclose(self.digits * 2)
            if refined.width >= enclosure.width:
                break
            self.digits *= 2
            enclosure = refined

        if 2 * threshold >= scale:
            raise WorldlineError('Enclosure of %s is too wide for the witness search' %
                                 target.name)

        self.enclosure = enclosure
        self.scale = scale
        self.threshold = threshold
        self.powers = [scale] + [round(center ** power * scale)
                                 for power in range(1, max_degree + 1)]

        # Largest |c_1 x + ... + c_(j-1) x^(j-1) + c_0| for each level j, in fixed point.
        self.remaining = [max_height * (scale + sum(abs(self.powers[power])
                                                    for power in range(1, level)))
                          for level in range(max_degree + 2)]

    def shard_keys(self):
        """Leading coefficients, one shard each."""
        if self.max_degree == 0:
            return [0]
        return list(range(self.max_height + 1))

    def next_shard(self):
        """Next pending shard key, or None."""
        with self.lock:
            return self.pending.pop(0) if self.pending else None

    def record(self, result):
        """Store a finished shard."""
        with self.lock:
            self.results[result.key] = result

    def scan_shard(self, key):
        """Scan every canonical polynomial whose coefficient of x^D is key."""
        result = ShardResult(key)
        height = self.max_height
        degree = self.max_degree

        if degree == 0:
            # Nonzero constants never vanish.
            result.scanned = height
        elif degree == 1:
            self._grid(result, (), 0, [0], [key], higher_zero=True)
        elif degree == 2:
            self._grid(result, (), 0, [key], range(-height, height + 1), higher_zero=True)
        else:
            self._descend(result, (key,), key * self.powers[degree], key == 0)
        return result

    def _descend(self, result, fixed, partial, higher_zero):
        """Fix the coefficient of x^level (fixed holds c_D, ..., c_(level+1)) and recurse."""
        height = self.max_height
        level = self.max_degree - len(fixed)
        # fixed now ends with the coefficient of x^(level + 1).
        if abs(partial) > self.remaining[level + 1] + self.threshold:
            result.pruned += (2 * height + 1) ** (level + 1)
            return

        if level == 2:
            c2_values = range(0 if higher_zero else -height, height + 1)
            self._grid(result, fixed, partial, c2_values, range(-height, height + 1),
                       higher_zero)
            return

        for coefficient in range(0 if higher_zero else -height, height + 1):
            self._descend(result, fixed + (coefficient,),
                          partial + coefficient * self.powers[level],
                          higher_zero and coefficient == 0)

    def _grid(self, result, fixed, partial, c2_values, c1_values, higher_zero):
        """Scan c_2 x c_1 at once, with c_0 solved for."""
        height = self.max_height
        scale = self.scale
        x2 = self.powers[2] if self.max_degree >= 2 else 0

        c2 = numpy.array(list(c2_values), dtype=numpy.int64)[:, None]
        c1 = numpy.array(list(c1_values), dtype=numpy.int64)[None, :]
        values = numpy.int64(partial) + c2 * numpy.int64(x2) + c1 * numpy.int64(self.powers[1])
        nearest = numpy.clip(numpy.floor_divide(-values + scale // 2, scale), -height, height)
        residual = numpy.abs(values + nearest * scale)

        valid = numpy.ones(residual.shape, dtype=bool)
        if higher_zero:
            valid = (c2 > 0) | ((c2 == 0) & (c1 > 0))
            valid = numpy.broadcast_to(valid, residual.shape)
            if 0 in c2_values and 0 in c1_values:
                # The nonzero constants.
                result.scanned += height

        count = int(valid.sum())
        result.evaluated += count
        result.scanned += count * (2 * height + 1)

        flagged = valid & (residual <= self.threshold)
        certified = valid & ~flagged
        if certified.any():
            result.margin(Fraction(int(residual[certified].min()) - self.threshold, scale))

        for row, column in numpy.argwhere(flagged):
            coefficients = (int(nearest[row, column]), int(c1[0, column]), int(c2[row, 0])) + \
                tuple(reversed(fixed))
            result.flagged.append(IntPolynomial(coefficients[:self.max_degree + 1]))

    def recheck(self, polynomial):
        """Decide a flagged candidate: ('root' | 'certified' | 'unresolved', margin)."""
        if self.target.is_root(polynomial):
            return 'root', None

        digits = self.digits
        while True:
            value = polynomial.evaluate_interval(self.target.enclose(digits))
            if value.excludes_zero():
                return 'certified', value.mignitude()
            if digits >= self.precision_cap:
                break
            digits = min(digits * 2, self.precision_cap)

        if self.target.is_root(polynomial) is False:
            return 'certified', Fraction(0)
        return 'unresolved', None

class _ShardWorker(threading.Thread):
    """Worker thread that scans shards until none are left."""
    def __init__(self, search):
        """Initialize the _ShardWorker instance."""
        super().__init__()

        self.search = search
        self.error = None

    def run(self):
        """Scan shards."""
        try:
            while True:
                key = self.search.next_shard()
                if key is None:
                    return
                self.search.record(self.search.scan_shard(key))
        except WorldlineError as e:
            self.error = e

def transcendence_witness(value=None, max_degree=defaults.MAX_DEGREE,
                          max_height=defaults.MAX_HEIGHT, digits=defaults.WITNESS_DIGITS,
                          precision_cap=defaults.WITNESS_PRECISION_CAP, threads=defaults.THREADS,
                          journal=None):
    """Search for an integer polynomial in range vanishing at value (e by default).

    Returns a WitnessResult: a Certificate when every candidate is certified nonzero, RootFound
    when an exact input is a root of some candidate, and Inconclusive when some candidate could
    not be separated from zero at the precision cap.
    """
    journal = journal or null_journal('witness')
    target = WitnessTarget.euler() if value is None else WitnessTarget.from_value(value)
    if max_degree < 0 or max_height < 1:
        raise WorldlineError('Degree bound must be >= 0 and height bound >= 1')

    timer = QElapsedTimer()
    timer.start()

    search = WitnessSearch(target, max_degree, max_height, digits, precision_cap)
    result = WitnessResult(target, max_degree, max_height, search.digits)
    search.pending = search.shard_keys()
    journal.log('Searching %s candidates for %s: degree <= %s, height <= %s, %s digits, '
                'fixed point 2^-%s' % (result.candidates, target.name, max_degree, max_height,
                                       search.digits, search.scale.bit_length() - 1))

    if threads <= 1:
        for key in search.shard_keys():
            search.record(search.scan_shard(key))
        search.pending = []
    else:
        workers = [_ShardWorker(search) for _ in range(threads)]
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()
        for worker in workers:
            if worker.error is not None:
                raise worker.error

    for key in sorted(search.results):
        shard = search.results[key]
        for polynomial in shard.flagged:
            outcome, margin = search.recheck(polynomial)
            if outcome == 'root':
                result.roots.append(polynomial)
            elif outcome == 'unresolved':
                result.unresolved.append(polynomial)
            else:
                shard.margin(margin)
        result.shards[key] = shard
        journal.log('Shard %s: %s evaluated, %s flagged' %
                    (key, shard.evaluated, len(shard.flagged)))

    result.elapsed_msecs = timer.elapsed()
    journal.log('%s after %s ms, pruned fraction %s' %
                (result.status, result.elapsed_msecs, result.pruned_fraction))
    return result
