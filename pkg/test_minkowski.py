"""Tests for Minkowski geometry and Poincare maps."""

from fractions import Fraction
import random
import pytest
from minkowski import CausalClass, InvalidMap, ParameterOutOfRange, PoincareMap, \
    SpacetimePoint, boost_parameter_velocity, classify, identity_map, is_poincare, \
    minkowski_distance, minkowski_length, minkowski_sq, poincare_ops, rational_boost, \
    rational_boost_along, rational_rotation, rational_unit_vector, space_component, translation, \
    velocity_boost
from ordered_field import ContextMismatch, SqrtUnavailableInContext
from realalgebraic import ra_from_rational, ra_sqrt

def point(ctx, *coords):
    """Shorthand for a spacetime point."""
    return SpacetimePoint(ctx, coords)

def random_point(ctx, rng, dimension=3):
    """A point with small rational coordinates."""
    return SpacetimePoint(ctx, [Fraction(rng.randint(-20, 20), rng.randint(1, 6))
                                for _ in range(dimension)])

def test_points(rational):
    first = point(rational, 1, 2, 3)
    second = point(rational, Fraction(1, 2), 0, -1)
    assert first + second == point(rational, Fraction(3, 2), 2, 2)
    assert first - first == SpacetimePoint.origin(rational, 3)
    assert first.scale(2) == point(rational, 2, 4, 6)
    assert -second == point(rational, Fraction(-1, 2), 0, 1)
    assert first.time == 1 and first.dimension == 3
    assert SpacetimePoint.unit(rational, 2, 4) == point(rational, 0, 0, 1, 0)
    assert first.to_json() == ['1', '2', '3']
    assert list(space_component(first)) == [2, 3]

    with pytest.raises(ContextMismatch):
        first + point(rational, 1, 2)

def test_minkowski_square_and_classes(rational):
    assert minkowski_sq(point(rational, 5, 3, 4)) == 0
    assert classify(point(rational, 5, 3, 4)) == CausalClass.LIGHTLIKE
    assert classify(point(rational, 2, 1, 0)) == CausalClass.TIMELIKE
    assert classify(point(rational, 0, 1, 0)) == CausalClass.SPACELIKE

def test_minkowski_length(rational, realalgebraic):
    assert minkowski_length(point(rational, 5, 4, 0)) == 3
    assert minkowski_length(point(rational, 0, 3, 4)) == -5
    assert minkowski_distance(point(rational, 6, 4, 0), point(rational, 1, 1, 0)) == 4
    with pytest.raises(SqrtUnavailableInContext):
        minkowski_length(point(rational, 2, 1, 0))

    length = minkowski_length(point(realalgebraic, 2, 1, 0))
    assert length == ra_sqrt(ra_from_rational(3))

def test_rational_boost_preserves_the_form(rational):
    rng = random.Random(3)
    for parameter in (Fraction(1, 3), Fraction(-1, 2), Fraction(2, 5)):
        boost = rational_boost(parameter, axis=1, dimension=3)
        assert is_poincare(rational, boost.linear)
        assert boost.time_axis_velocity() == (boost_parameter_velocity(parameter), 0)
        for _ in range(10):
            vector = random_point(rational, rng)
            assert minkowski_sq(boost.apply(vector)) == minkowski_sq(vector)

def test_boost_parameter_out_of_range():
    with pytest.raises(ParameterOutOfRange):
        rational_boost(1)
    with pytest.raises(ParameterOutOfRange):
        rational_boost(Fraction(1, 2), axis=0)
    with pytest.raises(ParameterOutOfRange):
        rational_rotation(Fraction(1, 2), axes=(1, 1))

def test_compose_and_invert(rational):
    rng = random.Random(5)
    boost = rational_boost(Fraction(1, 3), dimension=3)
    rotation = rational_rotation(Fraction(1, 2), dimension=3)
    shift = translation(rational, [1, Fraction(1, 2), -2])
    combined = shift.compose(boost).compose(rotation)
    assert is_poincare(rational, combined.linear)

    for _ in range(10):
        event = random_point(rational, rng)
        assert combined.apply(event) == shift.apply(boost.apply(rotation.apply(event)))
        assert combined.invert().apply(combined.apply(event)) == event

    assert combined.compose(combined.invert()).is_identity()
    assert poincare_ops('invert', identity_map(rational, 3)).is_identity()
    assert poincare_ops('apply', shift, SpacetimePoint.origin(rational, 3)) == \
        point(rational, 1, Fraction(1, 2), -2)

def test_invalid_maps(rational):
    with pytest.raises(InvalidMap):
        PoincareMap(rational, [[2, 0], [0, 1]])
    stretch = PoincareMap(rational, [[2, 0], [0, 1]], validate=False)
    with pytest.raises(InvalidMap):
        poincare_ops('compose', identity_map(rational, 2), stretch)
    with pytest.raises(InvalidMap):
        poincare_ops('invert', stretch)
    boost = rational_boost(Fraction(1, 3), 1, 2, rational)
    assert is_poincare(rational, poincare_ops('compose', boost, boost).linear)
    with pytest.raises(InvalidMap):
        PoincareMap(rational, [[1, 0], [0, 1]], [1, 2, 3])
    with pytest.raises(InvalidMap):
        PoincareMap(rational, [[1, 0, 0], [0, 1]])

def test_json(rational):
    boost = rational_boost(Fraction(1, 2), dimension=2).compose(translation(rational, [1, 2]))
    data = boost.to_json()
    assert data['linear'] == [['5/3', '4/3'], ['4/3', '5/3']]
    assert PoincareMap.from_json(rational, data) == boost

def test_velocity_boost(rational, realalgebraic):
    boost = velocity_boost(rational, Fraction(3, 5), dimension=2)
    assert boost.linear[0][0] == Fraction(5, 4)

    with pytest.raises(SqrtUnavailableInContext):
        velocity_boost(rational, Fraction(1, 2), dimension=2)
    with pytest.raises(ParameterOutOfRange):
        velocity_boost(rational, 1, dimension=2)

    root_half = ra_sqrt(ra_from_rational(Fraction(1, 2)))
    boost = velocity_boost(realalgebraic, root_half, dimension=3)
    assert is_poincare(realalgebraic, boost.linear)
    assert boost.linear[0][0] == ra_sqrt(ra_from_rational(2))

def test_rational_unit_vectors():
    for direction in ([1, 1], [3, -4, 12], [0, 0, 5], [-1, 0, 0], [1, 2, 2]):
        unit = rational_unit_vector(direction)
        assert sum(component ** 2 for component in unit) == 1
        assert all(isinstance(component, Fraction) for component in unit)
        norm = sum(Fraction(c) ** 2 for c in direction) ** Fraction(1, 2)
        for component, original in zip(unit, direction):
            assert abs(float(component) - original / norm) < 1e-5

    with pytest.raises(ParameterOutOfRange):
        rational_unit_vector([0, 0])

def test_boost_along_direction(rational):
    direction = rational_unit_vector([1, 2, 2])
    boost = rational_boost_along(Fraction(1, 3), direction, dimension=4)
    assert is_poincare(rational, boost.linear)
    velocity = boost.time_axis_velocity()
    speed = boost_parameter_velocity(Fraction(1, 3))
    assert list(velocity) == [speed * component for component in direction]
