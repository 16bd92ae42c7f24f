"""Tests for the ordered field contexts and the field law checker."""

from fractions import Fraction
import pytest
from ordered_field import ContextMismatch, DivisionByZero, FieldError, NegativeArgument, \
    Ordering, RationalField, SampleConfig, SqrtUnavailableInContext, check_ordered_field_axioms, \
    context_by_name, field_arith, field_leq, sample_elements
from realalgebraic import RealAlgebraicField

class OffByOneField(RationalField):
    """Multiplication that is off by one for nonzero factors."""
    name = 'off-by-one'

    def _mul(self, first, second):
        product = Fraction(first) * second
        return product + 1 if first and second else product

def test_rational_arithmetic(rational):
    half = Fraction(1, 2)
    assert field_arith(rational, 'add', half, Fraction(1, 3)) == Fraction(5, 6)
    assert field_arith(rational, 'mul', half, 4) == 2
    assert field_arith(rational, 'sub', half, 1) == -half
    assert field_arith(rational, 'div', 1, 3) == Fraction(1, 3)
    assert field_arith(rational, 'neg', half) == -half
    assert field_arith(rational, 'inv', Fraction(-2, 3)) == Fraction(-3, 2)

    with pytest.raises(FieldError):
        field_arith(rational, 'pow', half, 2)

def test_division_by_zero(rational):
    with pytest.raises(DivisionByZero):
        rational.inv(0)
    with pytest.raises(DivisionByZero):
        rational.div(1, Fraction(0))

def test_membership(rational):
    assert rational.is_element(3)
    assert rational.is_element(Fraction(1, 3))
    assert not rational.is_element(True)
    assert not rational.is_element(0.5)
    with pytest.raises(ContextMismatch):
        rational.add(1, 0.5)

def test_order(rational):
    assert rational.compare(1, 2) == Ordering.LT
    assert rational.compare(Fraction(4, 2), 2) == Ordering.EQ
    assert field_leq(rational, Fraction(1, 3), Fraction(1, 2))
    assert not field_leq(rational, 1, Fraction(1, 2))
    assert rational.sign(Fraction(-1, 7)) == -1
    assert rational.abs(Fraction(-1, 7)) == Fraction(1, 7)

def test_rational_sqrt(rational):
    assert rational.sqrt(4) == 2
    assert rational.sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert rational.sqrt(0) == 0
    with pytest.raises(SqrtUnavailableInContext):
        rational.sqrt(2)
    with pytest.raises(NegativeArgument):
        rational.sqrt(-4)

def test_parse_and_format(rational):
    assert rational.parse(' 3/4 ') == Fraction(3, 4)
    assert rational.format(Fraction(6, 8)) == '3/4'
    assert rational.to_json(5) == '5'
    with pytest.raises(FieldError):
        rational.parse('three')
    with pytest.raises(FieldError):
        rational.parse('1/0')

def test_parse_expressions(rational):
    assert rational.parse('sqrt(9) / 4') == Fraction(3, 4)
    assert rational.parse('(1/2)^-2') == 4
    with pytest.raises(SqrtUnavailableInContext):
        rational.parse('1/sqrt(2)')
    with pytest.raises(DivisionByZero):
        rational.parse('1 / (2 - 2)')
    with pytest.raises(FieldError):
        rational.parse('sqrt(2')

def test_context_by_name():
    assert isinstance(context_by_name('rational'), RationalField)
    assert isinstance(context_by_name('realalgebraic'), RealAlgebraicField)
    with pytest.raises(FieldError):
        context_by_name('complex')

def test_samples_are_reproducible(rational):
    config = SampleConfig(seed=11, count=30)
    assert sample_elements(rational, config) == sample_elements(rational, config)
    assert sample_elements(rational, config) != \
        sample_elements(rational, SampleConfig(seed=12, count=30))

def test_rational_field_passes(rational):
    report = check_ordered_field_axioms(rational, SampleConfig(seed=7, count=200))
    assert report.passed
    assert report.name == 'AxOField'
    laws = [verdict.law for verdict in report.verdicts.values()]
    assert 'distributivity' in laws and 'order multiplication' in laws
    assert report.verdicts['distributivity'].checked == 200

def test_real_algebraic_field_passes(realalgebraic):
    report = check_ordered_field_axioms(realalgebraic, SampleConfig(seed=7, count=6))
    assert report.passed, report.failed_laws()

def test_broken_multiplication_is_caught(small_config, journal):
    report = check_ordered_field_axioms(OffByOneField(), small_config, journal)
    assert not report.passed
    assert 'distributivity' in report.failed_laws()
    assert 'additive commutativity' not in report.failed_laws()

    witness = report.verdicts['distributivity'].witness
    assert set(witness) == {'a', 'b', 'c'}
    assert all(isinstance(value, str) for value in witness.values())
    assert 'Ordered field laws FAILED' in journal.sink.messages('test')
