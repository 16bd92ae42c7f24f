"""Tests for the sampled calculus predicates."""

from fractions import Fraction
import mpmath
import pytest
import defaults
from accelerated import certified_sinh
from analysis import AnalysisError, OutOfDomain, SampledCurve, ScheduleEntry, as_vector, \
    default_schedule, derivative_uniqueness_check, diff_check, finite_diff, limit_check, \
    minkowski_sq_enclosure, well_parametrized_check
from minkowski import SpacetimePoint
from polynomial import RationalInterval

def square(point):
    """x^2."""
    return point * point

def cube(point):
    """x^3."""
    return point ** 3

def test_as_vector(rational):
    assert as_vector(Fraction(1, 2)) == (RationalInterval.point(Fraction(1, 2)),)
    assert as_vector(RationalInterval(0, 1)) == (RationalInterval(0, 1),)
    assert as_vector(SpacetimePoint(rational, [1, 2])) == (RationalInterval.point(1),
                                                            RationalInterval.point(2))

def test_default_schedule():
    schedule = default_schedule(1, epsilons=(Fraction(1, 10),), points=4)
    entry = schedule[0]
    assert entry.delta == Fraction(1, 40)
    assert len(entry.grid) == 8
    assert all(0 < abs(point - 1) < entry.delta for point in entry.grid)
    assert entry.grid == sorted(entry.grid)

def test_finite_diff():
    assert finite_diff(square, 1, Fraction(1, 10)) == (RationalInterval.point(2),)
    with pytest.raises(AnalysisError):
        finite_diff(square, 1, 0)
    with pytest.raises(OutOfDomain):
        finite_diff(square, 0, Fraction(1, 10), domain=RationalInterval(0, 1))

def test_finite_diff_error_shrinks_as_h_squared():
    x0 = Fraction(1, 2)
    with mpmath.workdps(40):
        exact = mpmath.cosh(mpmath.mpf(1) / 2)
        errors = []
        for step in (Fraction(1, 10), Fraction(1, 20), Fraction(1, 40)):
            estimate = finite_diff(lambda point: certified_sinh(point, 30).enclosure, x0, step)
            middle = estimate[0].midpoint
            errors.append(abs(mpmath.mpf(middle.numerator) / middle.denominator - exact))
        for coarse, fine in zip(errors, errors[1:]):
            assert 3.5 <= coarse / fine <= 4.5

def test_diff_check():
    assert diff_check(square, 1, 2).holds
    assert diff_check(cube, Fraction(1, 2), Fraction(3, 4)).holds

    wrong = diff_check(square, 1, 2 + Fraction(1, 10))
    assert not wrong.holds
    epsilon, point = wrong.witness()
    assert epsilon == Fraction(1, 10)
    assert point < 1 and abs(point - 1) < Fraction(1, 40)
    assert all(entry.violated for entry in wrong.schedule)

def test_diff_check_of_vectors():
    def curve(point):
        return (point, square(point))

    assert diff_check(curve, 0, (1, 0)).holds
    assert not diff_check(curve, 0, (1, Fraction(1, 10))).holds

def test_diff_check_skips_points_outside_the_domain():
    def root(point):
        if point < 0:
            raise AssertionError('evaluated outside the domain')
        return point

    assert diff_check(root, 0, 1, domain=RationalInterval(0, 1)).holds

def test_limit_check():
    assert limit_check(square, 2, 4).holds
    assert not limit_check(square, 2, 5).holds
    assert limit_check(square, 2, RationalInterval(4, 4)).holds

    # A jump at 0.
    def step(point):
        return Fraction(1) if point > 0 else Fraction(0)
    assert not limit_check(step, 0, 0).holds

def test_derivative_uniqueness():
    report = derivative_uniqueness_check(cube, 1, 3, Fraction(1, 1000))
    assert report.passed, report.failed_laws()
    assert report.name == 'derivative uniqueness'

    report = derivative_uniqueness_check(cube, 1, 4, Fraction(1, 1000))
    assert report.failed_laws() == ['derivative holds']

def test_schedule_json():
    verdict = diff_check(square, 1, 2, default_schedule(1, points=2))
    data = verdict.to_json()
    assert data['predicate'] == 'Diff' and data['holds']
    assert len(data['schedule']) == len(defaults.DIFF_EPSILONS)
    assert data['schedule'][0]['points'] == 4

def test_schedule_entry_keeps_worst_point():
    entry = ScheduleEntry(Fraction(1, 10), Fraction(1, 40), [])
    entry.record(Fraction(1), Fraction(1, 2), False)
    entry.record(Fraction(-1), Fraction(1, 2), False)
    entry.record(Fraction(2), Fraction(1, 3), False)
    assert entry.worst_point == -1 and not entry.violated

def test_sampled_curve_validates_grid():
    with pytest.raises(AnalysisError):
        SampledCurve(square, [0])
    with pytest.raises(AnalysisError):
        SampledCurve(square, [1, 0])
    with pytest.raises(OutOfDomain):
        SampledCurve(square, [0, 2], domain=RationalInterval(0, 1))

def test_sampled_curve_derivative_is_widened():
    curve = SampledCurve(cube, [0, 1], third_derivative_bound=lambda point, step: 6)
    derivative = curve.derivative(1, Fraction(1, 10))[0]
    assert derivative.contains(3)
    assert derivative.width == 2 * Fraction(1, 100)

def test_minkowski_sq_enclosure():
    vector = (RationalInterval.point(2), RationalInterval(-1, 1))
    assert minkowski_sq_enclosure(vector) == RationalInterval(3, 4)

def test_well_parametrized():
    grid = defaults.grid(-1, 1, 5)
    rest = SampledCurve(lambda point: (point, Fraction(0), Fraction(0)), grid)
    assert well_parametrized_check(rest).passed

    moving = SampledCurve(lambda point: (Fraction(5, 4) * point, Fraction(3, 4) * point), grid)
    assert well_parametrized_check(moving).passed

    fast = SampledCurve(lambda point: (2 * point, Fraction(0)), grid)
    assert well_parametrized_check(fast).failed_laws() == ['unit Minkowski length']

    backwards = SampledCurve(lambda point: (-point, Fraction(0)), grid)
    assert well_parametrized_check(backwards).failed_laws() == ['future-directed']
    assert well_parametrized_check(backwards, require_future=False).passed
