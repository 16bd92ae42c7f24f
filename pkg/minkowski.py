#!/usr/bin/env python3

"""Minkowski Geometry Classes

This module contains flat spacetime geometry over any FieldContext: spacetime points, the
Minkowski square and length, causal classification, and Poincare maps (affine maps preserving the
Minkowski form).

Coordinates are ordered time first: (x1, x2, ..., xd) with x1 the time. The signature is
(+, -, ..., -), so timelike vectors have a positive Minkowski square.

Over the rationals, only boosts with rational velocity AND rational Lorentz factor exist. These are
the Pythagorean-parametrized boosts built by rational_boost(); boosting by an arbitrary velocity
(velocity_boost()) needs square roots, and so a real closed context.
"""

from fractions import Fraction
import math
import common
import defaults
from ordered_field import ContextMismatch, RationalField

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

CausalClass = common.enum(TIMELIKE='Timelike', LIGHTLIKE='Lightlike', SPACELIKE='Spacelike')

# Denominator used when rounding a direction onto the rational unit sphere.
UNIT_VECTOR_PRECISION = 10 ** 6

class MinkowskiError(Exception):
    """Exceptions generated by this module."""

class InvalidMap(MinkowskiError):
    """The map does not preserve the Minkowski form (or is malformed)."""

class ParameterOutOfRange(MinkowskiError):
    """A boost parameter, velocity or axis is out of range."""

def _lift(ctx, value):
    """Lift ints and Fractions into ctx; leave field elements alone."""
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ctx.from_rational(value)
    return value

class SpacetimePoint():
    """A point (or vector) with d coordinates from one field context."""
    __slots__ = ('ctx', 'coords')

    def __init__(self, ctx, coords):
        """Initialize the SpacetimePoint instance.

        Rational coordinates are lifted into ctx.
        """
        coords = tuple(_lift(ctx, coordinate) for coordinate in coords)
        if len(coords) < 2:
            raise MinkowskiError('Spacetime points need at least 2 coordinates')
        ctx.check(*coords)

        self.ctx = ctx
        self.coords = coords

    @classmethod
    def origin(cls, ctx, dimension=defaults.DIMENSION):
        """The point (0, ..., 0)."""
        return cls(ctx, [0] * dimension)

    @classmethod
    def unit(cls, ctx, axis, dimension=defaults.DIMENSION):
        """The vector with a 1 at index axis (0 is time)."""
        return cls(ctx, [1 if index == axis else 0 for index in range(dimension)])

    def __repr__(self):
        return 'SpacetimePoint(%s)' % ', '.join(self.ctx.format(coordinate)
                                               for coordinate in self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    @property
    def dimension(self):
        """d."""
        return len(self.coords)

    @property
    def time(self):
        """x1."""
        return self.coords[0]

    def _compatible(self, other):
        if other.ctx.name != self.ctx.name or other.dimension != self.dimension:
            raise ContextMismatch('Cannot combine points of different contexts or dimensions')

    def __add__(self, other):
        self._compatible(other)
        return SpacetimePoint(self.ctx, [self.ctx.add(left, right)
                                         for left, right in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._compatible(other)
        return SpacetimePoint(self.ctx, [self.ctx.sub(left, right)
                                         for left, right in zip(self.coords, other.coords)])

    def __neg__(self):
        return SpacetimePoint(self.ctx, [self.ctx.neg(coordinate) for coordinate in self.coords])

    def scale(self, factor):
        """factor * self."""
        factor = _lift(self.ctx, factor)
        return SpacetimePoint(self.ctx, [self.ctx.mul(factor, coordinate)
                                         for coordinate in self.coords])

    def __eq__(self, other):
        if not isinstance(other, SpacetimePoint):
            return NotImplemented
        if other.ctx.name != self.ctx.name or other.dimension != self.dimension:
            return False
        return all(self.ctx.equal(left, right) for left, right in zip(self.coords, other.coords))

    __hash__ = None

    def to_json(self):
        """JSON-ready form."""
        return [self.ctx.to_json(coordinate) for coordinate in self.coords]

def space_component(point):
    """(x2, ..., xd)."""
    return point.coords[1:]

def spatial_sq(point):
    """x2^2 + ... + xd^2."""
    ctx = point.ctx
    total = ctx.zero()
    for coordinate in space_component(point):
        total = ctx.add(total, ctx.square(coordinate))
    return total

def minkowski_sq(point):
    """x1^2 - (x2^2 + ... + xd^2), sign intact."""
    ctx = point.ctx
    return ctx.sub(ctx.square(point.time), spatial_sq(point))

def minkowski_length(point):
    """Signed Minkowski length.

    sqrt(x1^2 - |xs|^2) when that is nonnegative, else -sqrt(|xs|^2 - x1^2). Needs the context's
    square roots, so over the rationals it only exists for perfect squares.
    """
    ctx = point.ctx
    square = minkowski_sq(point)
    if ctx.sign(square) >= 0:
        return ctx.sqrt(square)
    return ctx.neg(ctx.sqrt(ctx.neg(square)))

def classify(point):
    """CausalClass of a vector, from the sign of its Minkowski square."""
    square_sign = point.ctx.sign(minkowski_sq(point))
    if square_sign > 0:
        return CausalClass.TIMELIKE
    if square_sign < 0:
        return CausalClass.SPACELIKE
    return CausalClass.LIGHTLIKE

def minkowski_distance(first, second):
    """Minkowski length of first - second."""
    return minkowski_length(first - second)

def eta(index):
    """Diagonal entry of the Minkowski form."""
    return 1 if index == 0 else -1

def _matmul(ctx, left, right):
    size = len(left)
    return tuple(tuple(_dot(ctx, left[row], [right[k][column] for k in range(size)])
                       for column in range(size)) for row in range(size))

def _dot(ctx, left, right):
    total = ctx.zero()
    for first, second in zip(left, right):
        total = ctx.add(total, ctx.mul(first, second))
    return total

def is_poincare(ctx, linear):
    """Whether the linear part satisfies L^T eta L = eta exactly."""
    size = len(linear)
    for i in range(size):
        for j in range(i, size):
            total = ctx.zero()
            for k in range(size):
                term = ctx.mul(linear[k][i], linear[k][j])
                total = ctx.add(total, term) if eta(k) > 0 else ctx.sub(total, term)
            expected = ctx.from_rational(eta(i) if i == j else 0)
            if not ctx.equal(total, expected):
                return False
    return True

class PoincareMap():
    """The affine map x -> L x + translation, with L preserving the Minkowski form."""
    def __init__(self, ctx, linear, translation=None, validate=True):
        """Initialize the PoincareMap instance.

        Raises InvalidMap unless L^T eta L = eta holds exactly.
        """
        size = len(linear)
        if size < 2 or any(len(row) != size for row in linear):
            raise InvalidMap('Linear part must be a square matrix of size at least 2')

        self.ctx = ctx
        self.linear = tuple(tuple(_lift(ctx, entry) for entry in row) for row in linear)
        for row in self.linear:
            ctx.check(*row)

        if translation is None:
            translation = SpacetimePoint.origin(ctx, size)
        elif not isinstance(translation, SpacetimePoint):
            translation = SpacetimePoint(ctx, translation)
        if translation.dimension != size:
            raise InvalidMap('Translation has the wrong dimension')
        self.translation = translation

        if validate and not is_poincare(ctx, self.linear):
            raise InvalidMap('Linear part does not preserve the Minkowski form')

    def __repr__(self):
        return 'PoincareMap(%r, %r)' % (self.to_json()['linear'], self.to_json()['translation'])

    @property
    def dimension(self):
        """d."""
        return len(self.linear)

    def _compatible(self, other):
        if other.ctx.name != self.ctx.name or other.dimension != self.dimension:
            raise ContextMismatch('Cannot combine maps of different contexts or dimensions')

    def apply(self, point):
        """L point + translation."""
        self._compatible(point)
        image = [_dot(self.ctx, row, point.coords) for row in self.linear]
        return SpacetimePoint(self.ctx, image) + self.translation

    def apply_linear(self, vector):
        """L vector (no translation)."""
        self._compatible(vector)
        return SpacetimePoint(self.ctx, [_dot(self.ctx, row, vector.coords)
                                         for row in self.linear])

    def compose(self, other):
        """self after other: x -> self(other(x))."""
        self._compatible(other)
        linear = _matmul(self.ctx, self.linear, other.linear)
        translation = self.apply(other.translation)
        return PoincareMap(self.ctx, linear, translation, validate=False)

    def invert(self):
        """The inverse map. The inverse of L is eta L^T eta."""
        size = self.dimension
        linear = tuple(tuple(self.linear[j][i] if eta(i) == eta(j) else
                             self.ctx.neg(self.linear[j][i])
                             for j in range(size)) for i in range(size))
        inverse = PoincareMap(self.ctx, linear, None, validate=False)
        translation = -inverse.apply_linear(self.translation)
        return PoincareMap(self.ctx, linear, translation, validate=False)

    def is_identity(self):
        """Whether this is the identity map."""
        return self == identity_map(self.ctx, self.dimension)

    def time_axis_velocity(self):
        """Velocity (spatial vector) of the image of the time axis: L[i][0] / L[0][0]."""
        ctx = self.ctx
        return tuple(ctx.div(self.linear[row][0], self.linear[0][0])
                     for row in range(1, self.dimension))

    def __eq__(self, other):
        if not isinstance(other, PoincareMap):
            return NotImplemented
        if other.ctx.name != self.ctx.name or other.dimension != self.dimension:
            return False
        return (all(self.ctx.equal(left, right)
                    for left_row, right_row in zip(self.linear, other.linear)
                    for left, right in zip(left_row, right_row)) and
                self.translation == other.translation)

    __hash__ = None

    def to_json(self):
        """Matrix entries and translation as exact strings."""
        return {'linear': [[self.ctx.to_json(entry) for entry in row] for row in self.linear],
                'translation': self.translation.to_json()}

    @classmethod
    def from_json(cls, ctx, data):
        """Inverse of to_json() (entries are parsed by the context)."""
        def parse(entry):
            return ctx.parse(entry) if isinstance(entry, str) else _lift(ctx, entry)

        linear = [[parse(entry) for entry in row] for row in data['linear']]
        translation = data.get('translation')
        if translation is not None:
            translation = SpacetimePoint(ctx, [parse(entry) for entry in translation])
        return cls(ctx, linear, translation)

def poincare_ops(op, transform, argument=None):
    """apply (argument is a point), compose (argument is a map), or invert.

    Composed and inverted maps are checked against L^T eta L = eta; InvalidMap otherwise.
    """
    if op == 'apply':
        return transform.apply(argument)
    if op in ('compose', 'invert'):
        result = transform.compose(argument) if op == 'compose' else transform.invert()
        if not is_poincare(result.ctx, result.linear):
            raise InvalidMap('%s gave a map that does not preserve the Minkowski form' % op)
        return result
    raise MinkowskiError('Unknown Poincare operation "%s"' % op)

def identity_map(ctx, dimension=defaults.DIMENSION):
    """The identity map."""
    return PoincareMap(ctx, [[1 if row == column else 0 for column in range(dimension)]
                             for row in range(dimension)], validate=False)

def translation(ctx, vector):
    """The map x -> x + vector."""
    if not isinstance(vector, SpacetimePoint):
        vector = SpacetimePoint(ctx, vector)
    identity = identity_map(ctx, vector.dimension)
    return PoincareMap(ctx, identity.linear, vector, validate=False)

def _check_axis(axis, dimension):
    if not 1 <= axis < dimension:
        raise ParameterOutOfRange('Spatial axis %s out of range for dimension %s' %
                                  (axis, dimension))

def _boost_linear(ctx, gamma, gamma_beta, axis, dimension):
    linear = [[ctx.from_rational(1 if row == column else 0) for column in range(dimension)]
              for row in range(dimension)]
    linear[0][0] = gamma
    linear[axis][axis] = gamma
    linear[0][axis] = gamma_beta
    linear[axis][0] = gamma_beta
    return linear

def rational_boost(parameter, axis=1, dimension=defaults.DIMENSION, ctx=None):
    """Boost along a spatial axis with velocity 2u/(1+u^2) and Lorentz factor (1+u^2)/(1-u^2).

    Both are rational for rational u, so the boost exists over the rationals. |u| < 1.
    """
    ctx = ctx or RationalField()
    parameter = Fraction(parameter)
    if abs(parameter) >= 1:
        raise ParameterOutOfRange('Boost parameter %s must have |u| < 1' % parameter)
    _check_axis(axis, dimension)

    denominator = 1 - parameter ** 2
    gamma = (1 + parameter ** 2) / denominator
    gamma_beta = 2 * parameter / denominator
    linear = _boost_linear(ctx, ctx.from_rational(gamma), ctx.from_rational(gamma_beta), axis,
                           dimension)
    return PoincareMap(ctx, linear)

def boost_parameter_velocity(parameter):
    """The velocity 2u/(1+u^2) of rational_boost(u)."""
    parameter = Fraction(parameter)
    return 2 * parameter / (1 + parameter ** 2)

def velocity_boost(ctx, velocity, axis=1, dimension=defaults.DIMENSION):
    """Boost along a spatial axis by an arbitrary velocity |v| < 1.

    The Lorentz factor is 1/sqrt(1 - v^2), so this raises SqrtUnavailableInContext over the
    rationals unless 1 - v^2 is a rational square.
    """
    velocity = _lift(ctx, velocity)
    one = ctx.one()
    if not ctx.leq(ctx.square(velocity), one) or ctx.equal(ctx.square(velocity), one):
        raise ParameterOutOfRange('Velocity %s must have |v| < 1' % ctx.format(velocity))
    _check_axis(axis, dimension)

    gamma = ctx.inv(ctx.sqrt(ctx.sub(one, ctx.square(velocity))))
    linear = _boost_linear(ctx, gamma, ctx.mul(gamma, velocity), axis, dimension)
    return PoincareMap(ctx, linear)

def rational_rotation(parameter, axes=(1, 2), dimension=defaults.DIMENSION, ctx=None):
    """Rotation in the plane of two spatial axes by the angle with cosine (1-u^2)/(1+u^2)."""
    ctx = ctx or RationalField()
    parameter = Fraction(parameter)
    first, second = axes
    _check_axis(first, dimension)
    _check_axis(second, dimension)
    if first == second:
        raise ParameterOutOfRange('Rotation needs two distinct axes')

    cosine = (1 - parameter ** 2) / (1 + parameter ** 2)
    sine = 2 * parameter / (1 + parameter ** 2)
    linear = [[1 if row == column else 0 for column in range(dimension)]
              for row in range(dimension)]
    linear[first][first] = cosine
    linear[second][second] = cosine
    linear[first][second] = -sine
    linear[second][first] = sine
    return PoincareMap(ctx, linear)

def rational_unit_vector(approximate):
    """A rational unit vector close to the direction of a nonzero rational vector.

    The direction is projected stereographically (from the pole -e_n, with the norm rounded to
    1/UNIT_VECTOR_PRECISION), and the projection is mapped back onto the unit sphere exactly.
    """
    vector = [Fraction(component) for component in approximate]
    norm_sq = sum(component ** 2 for component in vector)
    if norm_sq == 0:
        raise ParameterOutOfRange('The zero vector has no direction')
    if len(vector) == 1:
        return [Fraction(1 if vector[0] > 0 else -1)]

    precision = UNIT_VECTOR_PRECISION
    norm = Fraction(math.isqrt(math.floor(norm_sq * precision * precision)), precision)
    denominator = norm + vector[-1]
    if denominator <= 0:
        return [Fraction(0)] * (len(vector) - 1) + [Fraction(-1)]

    projection = [component / denominator for component in vector[:-1]]
    size = sum(component ** 2 for component in projection)
    unit = [2 * component / (1 + size) for component in projection]
    unit.append((1 - size) / (1 + size))
    return unit

def rational_boost_along(parameter, direction, dimension=defaults.DIMENSION, ctx=None):
    """Boost with parameter u (as in rational_boost) along a rational spatial unit vector."""
    ctx = ctx or RationalField()
    parameter = Fraction(parameter)
    if abs(parameter) >= 1:
        raise ParameterOutOfRange('Boost parameter %s must have |u| < 1' % parameter)
    direction = [Fraction(component) for component in direction]
    if len(direction) != dimension - 1 or sum(component ** 2 for component in direction) != 1:
        raise ParameterOutOfRange('Direction must be a spatial unit vector')

    denominator = 1 - parameter ** 2
    gamma = (1 + parameter ** 2) / denominator
    gamma_beta = 2 * parameter / denominator

    linear = [[Fraction(1 if row == column else 0) for column in range(dimension)]
              for row in range(dimension)]
    linear[0][0] = gamma
    for i, first in enumerate(direction, start=1):
        linear[0][i] = gamma_beta * first
        linear[i][0] = gamma_beta * first
        for j, second in enumerate(direction, start=1):
            linear[i][j] += (gamma - 1) * first * second
    return PoincareMap(ctx, linear)
