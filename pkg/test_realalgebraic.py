"""Tests for exact real algebraic numbers."""

from fractions import Fraction
import mpmath
import pytest
from ordered_field import DivisionByZero, NegativeArgument, SampleConfig
from polynomial import IntPolynomial
from realalgebraic import EvenDegree, IndexOutOfRange, RealAlgebraic, RealAlgebraicField, \
    check_real_closed, ra_approx, ra_arith, ra_cmp, ra_decimal, ra_from_rational, \
    ra_odd_root, ra_real_root, ra_root_index, ra_sqrt, ra_square

def sqrt(value):
    """Exact square root of a rational."""
    return ra_sqrt(ra_from_rational(value))

def mpf(value):
    """Exact rational to mpmath."""
    return mpmath.mpf(value.numerator) / value.denominator

def encloses(value, expected, digits=30):
    """Whether a 10^-digits enclosure of value contains the mpmath number expected."""
    with mpmath.workdps(digits + 10):
        interval = ra_approx(value, digits)
        return mpf(interval.lo) <= expected <= mpf(interval.hi)

ROOT2 = sqrt(2)
ROOT3 = sqrt(3)

def test_rationals_take_the_fast_path():
    value = ra_from_rational(Fraction(3, 4))
    assert value.is_rational
    assert value.defining == IntPolynomial((-3, 4))
    assert ra_arith('add', value, ra_from_rational(Fraction(1, 4))) == 1
    assert sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt(Fraction(9, 4)).is_rational

def test_rational_isolators_are_unit_wide():
    zero = ra_from_rational(0)
    assert zero.defining == IntPolynomial((0, 1))
    assert (zero.isolator.lo, zero.isolator.hi) == (Fraction(-1, 2), Fraction(1, 2))
    two = ra_from_rational(2)
    assert two.defining == IntPolynomial((-2, 1))
    assert (two.isolator.lo, two.isolator.hi) == (Fraction(3, 2), Fraction(5, 2))

def test_sqrt2_representation():
    assert not ROOT2.is_rational
    assert ROOT2.defining == IntPolynomial((-2, 0, 1))
    assert ROOT2.isolator.lo >= 0
    assert ra_root_index(ROOT2) == 1
    assert ra_root_index(-ROOT2) == 0

def test_sum_of_surds():
    total = ROOT2 + ROOT3
    assert total.defining == IntPolynomial((1, 0, -10, 0, 1))
    assert encloses(total, mpmath.sqrt(2) + mpmath.sqrt(3))
    assert total - ROOT3 == ROOT2

def test_products_collapse_to_rationals():
    assert ROOT2 * ROOT2 == 2
    assert (ROOT2 * ROOT2).is_rational
    assert ROOT2 ** 2 == 2
    assert ra_square(ROOT3) == 3
    assert ROOT2 * ROOT3 == sqrt(6)
    assert (ROOT2 - ROOT2).is_rational and ROOT2 - ROOT2 == 0

def test_inverse():
    assert 1 / ROOT2 == ROOT2 / 2
    assert ROOT2 ** -2 == Fraction(1, 2)
    with pytest.raises(DivisionByZero):
        ra_arith('inv', ra_from_rational(0))

def test_comparisons():
    ctx = RealAlgebraicField()
    assert ctx.leq(ROOT2, ra_from_rational(Fraction(3, 2)))
    assert not ctx.leq(ROOT2, ra_from_rational(Fraction(7, 5)))
    assert ROOT2 < ROOT3
    assert -ROOT3 < -ROOT2
    assert ra_cmp(ROOT2 + ROOT3, ROOT3 + ROOT2) == 0
    assert ROOT2 + ROOT3 > Fraction(314, 100)

def test_equal_values_with_different_polynomials():
    # sqrt(8) is built from x^2 - 8.
    assert sqrt(8) / 2 == ROOT2
    assert ROOT2 * ROOT3 / ROOT3 == ROOT2

def test_values_are_not_hashable():
    with pytest.raises(TypeError):
        hash(ROOT2)

def test_sqrt_of_negative():
    with pytest.raises(NegativeArgument):
        sqrt(-2)
    with pytest.raises(NegativeArgument):
        ra_sqrt(-ROOT2)

def test_nested_square_root():
    value = ra_sqrt(ROOT2)
    assert encloses(value, mpmath.root(2, 4))
    assert ra_square(ra_square(value)) == 2

def test_real_roots():
    cube_root = ra_real_root(IntPolynomial((-2, 0, 0, 1)), 0)
    assert cube_root ** 3 == 2
    assert encloses(cube_root, mpmath.cbrt(2))

    assert ra_real_root(IntPolynomial((-4, 0, 1)), 1) == 2
    assert ra_real_root(IntPolynomial((-4, 0, 1)), 1).is_rational

    with pytest.raises(IndexOutOfRange):
        ra_real_root(IntPolynomial((1, 0, 1)), 0)
    with pytest.raises(IndexOutOfRange):
        ra_real_root(IntPolynomial((-2, 0, 1)), 2)

def test_odd_roots():
    assert ra_odd_root(IntPolynomial((-8, 0, 0, 1))) == 2
    with pytest.raises(EvenDegree):
        ra_odd_root(IntPolynomial((-2, 0, 1)))

def test_decimal_and_approximation():
    assert ra_decimal(ROOT2, 5) == '1.41421'
    assert ra_decimal(-ROOT2, 3) == '-1.414'
    assert ra_decimal(ra_from_rational(Fraction(1, 4)), 2) == '0.25'
    interval = ra_approx(ROOT3, 12)
    assert interval.width <= Fraction(1, 10 ** 12)

def test_format_and_parse():
    ctx = RealAlgebraicField()
    assert ctx.format(ROOT2) == 'root(x^2 - 2, 1)'
    assert ctx.format(ra_from_rational(Fraction(-1, 3))) == '-1/3'
    assert ctx.parse(ctx.format(ROOT2 + ROOT3)) == ROOT2 + ROOT3
    assert ctx.parse('sqrt(2) * sqrt(2)') == 2

def test_json_is_exact():
    assert ra_from_rational(Fraction(2, 3)).to_json() == '2/3'
    data = ROOT2.to_json()
    assert data['defining'] == ['-2', '0', '1']

def test_refine_keeps_the_value():
    refined = ROOT2.refine(Fraction(1, 10 ** 6))
    assert refined.isolator.width <= Fraction(1, 10 ** 6)
    assert refined == ROOT2
    assert isinstance(refined, RealAlgebraic)

def test_real_closed_check(journal):
    certificates = []
    report = check_real_closed(SampleConfig(seed=7, count=6), odd_count=5, journal=journal,
                               certificates=certificates)
    assert report.passed, report.failed_laws()
    assert len(certificates) == 11
    assert certificates[0]['kind'] == 'sqrt' and certificates[0]['root'] == 0
    assert all(certificate['passed'] for certificate in certificates)
    assert report.verdicts['odd-degree roots'].checked == 5
