"""Tests for certified series, life-curves, and the witness search."""

from fractions import Fraction
import mpmath
import pytest
import defaults
from accelerated import CurveKind, NonpositiveAcceleration, NotWellParametrized, \
    WitnessStatus, WitnessTarget, WorldlineError, certified_cosh, certified_exp, \
    certified_exp_family, certified_sinh, check_comoving_frame, check_exp_properties, \
    check_hyperbolic_identities, check_unifob_axiom, comoving_inertial, custom_lifecurve, \
    default_grid, inertial_lifecurve, reparam_check, reparametrize_curve, transcendence_witness, \
    unif_lifecurve
from analysis import well_parametrized_check
from minkowski import SpacetimePoint, rational_boost
from polynomial import IntPolynomial, RationalInterval
from realalgebraic import ra_from_rational, ra_sqrt

SMALL_GRID = defaults.grid(-1, 1, 5)

def mpf(value):
    """Exact rational to mpmath."""
    return mpmath.mpf(value.numerator) / value.denominator

def contains(interval, value, digits=40):
    """Whether an enclosure contains an mpmath value computed at extra precision."""
    with mpmath.workdps(digits):
        return mpf(interval.lo) <= value() <= mpf(interval.hi)

@pytest.mark.parametrize('argument', [Fraction(0), Fraction(1, 3), Fraction(1), Fraction(-5, 2),
                                      Fraction(12)])
def test_certified_values_enclose_the_truth(argument):
    digits = 20
    for function, reference in ((certified_exp, mpmath.exp), (certified_sinh, mpmath.sinh),
                                (certified_cosh, mpmath.cosh)):
        value = function(argument, digits)
        assert value.width <= Fraction(1, 10 ** digits)
        assert contains(value.enclosure, lambda: reference(mpf(argument)))

def test_symmetries_are_exact():
    for argument in (Fraction(1, 7), Fraction(3, 2), Fraction(5)):
        assert certified_sinh(-argument).enclosure == -certified_sinh(argument).enclosure
        assert certified_cosh(-argument).enclosure == certified_cosh(argument).enclosure
    assert certified_sinh(0).enclosure == RationalInterval.point(0)
    assert certified_cosh(0).enclosure == RationalInterval.point(1)

def test_exp_family_dispatch():
    assert certified_exp_family('exp', 1).enclosure == certified_exp(1).enclosure
    with pytest.raises(WorldlineError):
        certified_exp_family('tan', 1)

def test_unit_hyperbola_is_well_parametrized():
    grid = default_grid()
    assert len(grid) == 41 and grid[0] == -2 and grid[-1] == 2
    report = well_parametrized_check(unif_lifecurve(1).sampled(grid), Fraction(1, 10 ** 6),
                                     Fraction(1, 10 ** 4))
    assert report.passed, report.failed_laws()
    assert report.verdicts['unit Minkowski length'].checked == 41
    assert report.verdicts['future-directed'].checked == 41

def test_hyperbola_shape(rational):
    curve = unif_lifecurve(2, offset=(1, 0, 3))
    assert curve.kind == CurveKind.UnifAccel
    apex = curve.evaluate(0)
    assert apex[0].contains(1) and apex[1].contains(2) and apex[2] == RationalInterval.point(3)

    assert curve.contains(SpacetimePoint(rational, [1, 2, 3]))
    # (x2 - 0)^2 - (x1 - 1)^2 = 25/4 - 9/4 = 4.
    assert curve.contains(SpacetimePoint(rational, [Fraction(5, 2), Fraction(5, 2), 3]))
    assert not curve.contains(SpacetimePoint(rational, [Fraction(5, 2), Fraction(-5, 2), 3]))
    assert not curve.contains(SpacetimePoint(rational, [1, 2, 0]))
    assert not curve.contains(SpacetimePoint(rational, [1, 2]))

def test_bad_hyperbolas():
    with pytest.raises(NonpositiveAcceleration):
        unif_lifecurve(0)
    with pytest.raises(WorldlineError):
        unif_lifecurve(1, dimension=2)
    with pytest.raises(WorldlineError):
        unif_lifecurve(1, offset=(0, 0))

def test_inertial_curve(rational):
    boost = rational_boost(Fraction(1, 2), dimension=3)
    curve = inertial_lifecurve(boost)
    assert curve.contains(boost.apply(SpacetimePoint(rational, [Fraction(7, 3), 0, 0])))
    assert not curve.contains(SpacetimePoint(rational, [1, 0, 0]))
    assert curve.evaluate(3)[0] == RationalInterval.point(5)

    transform = comoving_inertial(curve, 1)
    assert transform.apply(SpacetimePoint.origin(rational, 3)) == \
        boost.apply(SpacetimePoint(rational, [1, 0, 0]))

def test_custom_curves_have_no_exact_membership(rational):
    curve = custom_lifecurve(lambda point: (point, Fraction(0)), 2)
    with pytest.raises(WorldlineError):
        curve.contains(SpacetimePoint(rational, [0, 0]))

def test_unifob_axiom(journal):
    report = check_unifob_axiom(unif_lifecurve(2, offset=(1, 0, 3)), SMALL_GRID,
                                journal=journal)
    assert report.passed, report.failed_laws()
    assert report.name == 'AxExistsUnifOb'
    assert {'unit Minkowski length', 'future-directed', 'hyperbola range',
            'apex at t = 0'} <= set(report.verdicts)
    assert 'AxExistsUnifOb passed' in journal.sink.messages('test')

def test_unifob_axiom_needs_a_hyperbola():
    with pytest.raises(WorldlineError):
        check_unifob_axiom(inertial_lifecurve(rational_boost(Fraction(1, 3))))

@pytest.mark.slow
def test_hyperbolic_identities():
    report = check_hyperbolic_identities(grid=SMALL_GRID)
    assert report.passed, report.failed_laws()
    assert len(report.verdicts) == 8
    assert report.verdicts['C(-t) = C(t) and S(-t) = -S(t)'].passed

@pytest.mark.slow
def test_exp_properties():
    report = check_exp_properties(grid=SMALL_GRID)
    assert report.passed, report.failed_laws()

def test_comoving_frame():
    report = check_comoving_frame(unif_lifecurve(1), [Fraction(-1), Fraction(0), Fraction(1, 2)])
    assert report.passed, report.failed_laws()

    report = check_comoving_frame(inertial_lifecurve(rational_boost(Fraction(1, 3))),
                                  SMALL_GRID)
    assert report.passed, report.failed_laws()

def test_reparametrization_shift():
    curve = unif_lifecurve(1)
    fit = reparam_check(curve, reparametrize_curve(curve, 1, Fraction(1, 2)))
    assert fit.matched
    assert fit.epsilon == 1
    assert fit.offset.contains(Fraction(1, 2))
    assert not fit.lemma_applies

@pytest.mark.parametrize('epsilon, shift', [(1, 0), (-1, 0), (1, 1)])
def test_reparametrization_recovers_the_fit(epsilon, shift):
    curve = unif_lifecurve(1)
    fit = reparam_check(curve, reparametrize_curve(curve, epsilon, shift))
    assert fit.matched, fit.report.failed_laws()
    assert fit.epsilon == epsilon
    assert fit.offset.contains(shift)
    assert fit.offset.width <= defaults.REPARAM_TOLERANCE

def test_reparametrization_reversed():
    curve = unif_lifecurve(1)
    fit = reparam_check(curve, reparametrize_curve(curve, -1, 0))
    assert fit.matched
    assert fit.epsilon == -1

def test_same_curve_is_fitted_by_the_identity():
    curve = unif_lifecurve(3)
    fit = reparam_check(curve, unif_lifecurve(3))
    assert fit.matched and fit.lemma_applies
    assert fit.epsilon == 1
    assert fit.to_json()['matched'] is True

def test_different_curves_do_not_fit():
    fit = reparam_check(unif_lifecurve(1), unif_lifecurve(2))
    assert not fit.matched

def test_reparametrization_rejects_bad_curves():
    fast = custom_lifecurve(lambda point: (2 * point, Fraction(0), Fraction(0)), 3)
    with pytest.raises(NotWellParametrized):
        reparam_check(unif_lifecurve(1), fast)

def test_witness_for_e_is_a_certificate():
    result = transcendence_witness(max_degree=2, max_height=5)
    assert result.status == WitnessStatus.Certificate
    assert result.candidates == 11 ** 3 - 1
    assert result.worst_margin() > 0
    data = result.to_json()
    assert data['status'] == 'Certificate' and 'elapsed_msecs' not in data
    assert data['value'] == 'e'

@pytest.mark.slow
def test_witness_for_e_at_full_range():
    result = transcendence_witness(max_degree=4, max_height=100, digits=60)
    assert result.status == WitnessStatus.Certificate
    assert result.candidates == 201 ** 5 - 1
    assert result.evaluated < result.candidates
    assert result.worst_margin() > 0

@pytest.mark.slow
def test_witness_for_e_with_threads():
    single = transcendence_witness(max_degree=4, max_height=10)
    threaded = transcendence_witness(max_degree=4, max_height=10, threads=3)
    assert single.status == threaded.status == WitnessStatus.Certificate
    assert single.to_json()['shards'] == threaded.to_json()['shards']

def test_witness_finds_rational_roots():
    result = transcendence_witness(Fraction(1, 2), max_degree=1, max_height=4)
    assert result.status == WitnessStatus.RootFound
    assert IntPolynomial((-1, 2)) in result.roots

def test_witness_finds_the_root_of_three_halves():
    result = transcendence_witness(Fraction(3, 2), max_degree=1, max_height=3)
    assert result.status == WitnessStatus.RootFound
    assert list(result.roots) == [IntPolynomial((-3, 2))]

def test_witness_finds_algebraic_roots():
    result = transcendence_witness(ra_sqrt(ra_from_rational(2)), max_degree=2, max_height=3)
    assert result.status == WitnessStatus.RootFound
    assert IntPolynomial((-2, 0, 1)) in result.roots

def test_bare_enclosures_are_never_root_found():
    enclosure = RationalInterval(Fraction(1414, 1000), Fraction(1415, 1000))
    result = transcendence_witness(enclosure, max_degree=2, max_height=3)
    assert result.status == WitnessStatus.Inconclusive
    assert IntPolynomial((-2, 0, 1)) in result.unresolved

def test_witness_targets():
    with pytest.raises(WorldlineError):
        WitnessTarget.from_value(0.5)
    target = WitnessTarget.from_value(3)
    assert target.is_root(IntPolynomial((-3, 1)))
    assert target.is_root(IntPolynomial((1, 1))) is False
    assert WitnessTarget.euler().is_root(IntPolynomial((-3, 1))) is None
