#!/usr/bin/env python3

"""Polynomial Classes

This module contains exact univariate polynomial algebra over the integers: arithmetic, gcd and
resultants by subresultant polynomial remainder sequences, square-free parts, Sturm sequences,
real root counting and real root isolation. It is the computational substrate of the real
algebraic numbers (see realalgebraic).

Root intervals are RationalIntervals. An isolator is either an open interval containing exactly
one root, or a degenerate closed interval [q, q] when the root happens to be the rational q.

Sums and products of algebraic numbers need resultants of a univariate polynomial and a
bivariate one (BivariatePolynomial). Those are computed by specializing the second variable at
enough integer points, taking exact integer resultants there, and interpolating.
"""

from fractions import Fraction
import math
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

# Degree of the zero polynomial.
NEG_INFINITY = float('-inf')

class PolynomialError(Exception):
    """Exceptions generated by this module."""

class ZeroPolynomial(PolynomialError):
    """The operation is undefined on the zero polynomial."""

class NotIsolating(PolynomialError):
    """The interval does not contain exactly one root of the polynomial."""

class EndpointIsRoot(PolynomialError):
    """An interval endpoint is a root, and the caller asked for strict counting."""

def sign(value):
    """Returns -1, 0 or 1."""
    return (value > 0) - (value < 0)

def _exact_div(numerator, denominator):
    """Integer division that must not leave a remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError('%s is not divisible by %s' % (numerator, denominator))
    return quotient

class RationalInterval():
    """An interval with rational endpoints.

    Either endpoint can be open or closed. Arithmetic on intervals always produces closed
    intervals that enclose every possible result, which is all the enclosure code needs.
    """
    __slots__ = ('lo', 'hi', 'lo_open', 'hi_open')

    def __init__(self, lo, hi, lo_open=False, hi_open=False):
        """Initialize the RationalInterval instance."""
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise PolynomialError('Interval endpoints out of order: %s > %s' % (lo, hi))

        self.lo = lo
        self.hi = hi
        self.lo_open = bool(lo_open)
        self.hi_open = bool(hi_open)

    @classmethod
    def point(cls, value):
        """The degenerate closed interval [value, value]."""
        return cls(value, value)

    @classmethod
    def open(cls, lo, hi):
        """The open interval (lo, hi)."""
        return cls(lo, hi, True, True)

    @classmethod
    def enclose(cls, value):
        """Return value itself if it is an interval, else the degenerate interval at value."""
        if isinstance(value, cls):
            return value
        return cls.point(value)

    def __repr__(self):
        return 'RationalInterval(%s)' % self

    def __str__(self):
        return '%s%s, %s%s' % ('(' if self.lo_open else '[', self.lo, self.hi,
                               ')' if self.hi_open else ']')

    def __eq__(self, other):
        if not isinstance(other, RationalInterval):
            return NotImplemented
        return ((self.lo, self.hi, self.lo_open, self.hi_open) ==
                (other.lo, other.hi, other.lo_open, other.hi_open))

    def __hash__(self):
        return hash((self.lo, self.hi, self.lo_open, self.hi_open))

    @property
    def width(self):
        """hi - lo."""
        return self.hi - self.lo

    @property
    def midpoint(self):
        """(lo + hi) / 2."""
        return (self.lo + self.hi) / 2

    def is_point(self):
        """Whether this is a degenerate closed interval."""
        return self.lo == self.hi and not self.is_empty()

    def is_empty(self):
        """Only a degenerate interval with an open end is empty."""
        return self.lo == self.hi and (self.lo_open or self.hi_open)

    def contains(self, value):
        """Whether the rational value lies in the interval."""
        value = Fraction(value)
        above = value > self.lo or (value == self.lo and not self.lo_open)
        below = value < self.hi or (value == self.hi and not self.hi_open)
        return above and below

    def intersection(self, other):
        """Returns the intersection, or None if it is empty."""
        if self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif self.lo < other.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open

        if self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif self.hi > other.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open

        if lo > hi or (lo == hi and (lo_open or hi_open)):
            return None

        return RationalInterval(lo, hi, lo_open, hi_open)

    def intersects(self, other):
        """Whether the intervals share a point."""
        return self.intersection(other) is not None

    def closure(self):
        """The closed interval with the same endpoints."""
        return RationalInterval(self.lo, self.hi)

    def hull(self, other):
        """Smallest closed interval containing both."""
        return RationalInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def is_positive(self):
        """Every point is > 0."""
        return self.lo > 0 or (self.lo == 0 and self.lo_open and self.hi > 0)

    def is_negative(self):
        """Every point is < 0."""
        return self.hi < 0 or (self.hi == 0 and self.hi_open and self.lo < 0)

    def excludes_zero(self):
        """0 is not in the interval."""
        return not self.contains(0)

    def magnitude(self):
        """Upper bound of |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mignitude(self):
        """Lower bound of |x| over the interval."""
        if self.contains(0):
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def __add__(self, other):
        other = RationalInterval.enclose(other)
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo, self.hi_open, self.lo_open)

    def __sub__(self, other):
        return self + (-RationalInterval.enclose(other))

    def __rsub__(self, other):
        return RationalInterval.enclose(other) + (-self)

    def __mul__(self, other):
        other = RationalInterval.enclose(other)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo,
                    self.hi * other.hi)
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self):
        """1/x over the interval, which must not contain zero."""
        if not self.excludes_zero() or self.lo == 0 or self.hi == 0:
            raise ZeroDivisionError('Interval %s contains zero' % self)
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * RationalInterval.enclose(other).reciprocal()

    def __rtruediv__(self, other):
        return RationalInterval.enclose(other) * self.reciprocal()

    def square(self):
        """x^2 over the interval (tighter than self * self when 0 is inside)."""
        low = self.mignitude()
        high = self.magnitude()
        return RationalInterval(low * low, high * high)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        if exponent % 2 == 0:
            low = self.mignitude() ** exponent
            return RationalInterval(low, self.magnitude() ** exponent)
        return RationalInterval(self.lo ** exponent, self.hi ** exponent)

    def rounded_outward(self, denominator):
        """Round the endpoints outward to multiples of 1/denominator.

        Used to keep the sizes of numerators and denominators in check, at the cost of a little
        width.
        """
        lo = Fraction(math.floor(self.lo * denominator), denominator)
        hi = Fraction(math.ceil(self.hi * denominator), denominator)
        return RationalInterval(lo, hi)

    def to_json(self):
        """Endpoints as exact strings."""
        return [str(self.lo), str(self.hi)]

class IntPolynomial():
    """A univariate polynomial with integer coefficients.

    coefficients[i] is the coefficient of x^i. There are never stored leading zeros, so the zero
    polynomial has no coefficients at all (and degree NEG_INFINITY). Instances are immutable.
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        """Initialize the IntPolynomial instance."""
        coefficient_list = []
        for coefficient in coefficients:
            integer = int(coefficient)
            if integer != coefficient:
                raise PolynomialError('Coefficient %s is not an integer' % coefficient)
            coefficient_list.append(integer)

        while coefficient_list and coefficient_list[-1] == 0:
            coefficient_list.pop()

        self.coefficients = tuple(coefficient_list)

    @classmethod
    def constant(cls, value):
        """The constant polynomial."""
        return cls((value,))

    @classmethod
    def monomial(cls, degree, coefficient=1):
        """coefficient * x^degree."""
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_rational_coefficients(cls, coefficients):
        """A positive integer multiple of the polynomial with the given rational coefficients."""
        fractions = [Fraction(coefficient) for coefficient in coefficients]
        multiple = 1
        for fraction in fractions:
            multiple = multiple * fraction.denominator // math.gcd(multiple, fraction.denominator)
        return cls(fraction * multiple for fraction in fractions)

    @classmethod
    def from_rational_root(cls, value):
        """denominator * x - numerator."""
        value = Fraction(value)
        return cls((-value.numerator, value.denominator))

    def __repr__(self):
        return 'IntPolynomial(%r)' % (list(self.coefficients),)

    def __str__(self):
        """Text syntax shared with the expression parser, e.g. "x^4 - 10*x^2 + 1"."""
        if not self.coefficients:
            return '0'

        text = ''
        for power in range(len(self.coefficients) - 1, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue

            magnitude = abs(coefficient)
            if power == 0:
                term = str(magnitude)
            else:
                variable = 'x' if power == 1 else 'x^%s' % power
                term = variable if magnitude == 1 else '%s*%s' % (magnitude, variable)

            if not text:
                text = ('-' if coefficient < 0 else '') + term
            else:
                text += (' - ' if coefficient < 0 else ' + ') + term

        return text

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    @property
    def degree(self):
        """Degree, NEG_INFINITY for the zero polynomial."""
        if not self.coefficients:
            return NEG_INFINITY
        return len(self.coefficients) - 1

    @property
    def lead(self):
        """Leading coefficient (0 for the zero polynomial)."""
        if not self.coefficients:
            return 0
        return self.coefficients[-1]

    def is_zero(self):
        """Whether this is the zero polynomial."""
        return not self.coefficients

    def coefficient(self, power):
        """Coefficient of x^power."""
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-coefficient for coefficient in self.coefficients)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(coefficient * other for coefficient in self.coefficients)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()

        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            if left == 0:
                continue
            for j, right in enumerate(other.coefficients):
                product[i + j] += left * right
        return IntPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self):
        """Formal derivative."""
        return IntPolynomial(power * coefficient
                             for power, coefficient in enumerate(self.coefficients)
                             if power > 0)

    def content(self):
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        result = 0
        for coefficient in self.coefficients:
            result = math.gcd(result, coefficient)
        return result

    def divide_content(self):
        """Divide by the (positive) content. The sign of the polynomial is kept."""
        content = self.content()
        if content in (0, 1):
            return self
        return IntPolynomial(coefficient // content for coefficient in self.coefficients)

    def primitive(self):
        """Primitive part with a positive leading coefficient."""
        result = self.divide_content()
        if result.lead < 0:
            result = -result
        return result

    def exact_divide_int(self, divisor):
        """Divide every coefficient by an integer that must divide it."""
        return IntPolynomial(_exact_div(coefficient, divisor)
                             for coefficient in self.coefficients)

    def evaluate(self, value):
        """Exact value at a rational (Horner)."""
        result = Fraction(0)
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def evaluate_interval(self, interval):
        """Enclosure of the values over an interval (Horner in interval arithmetic)."""
        result = RationalInterval.point(0)
        for coefficient in reversed(self.coefficients):
            result = result * interval + coefficient
        return result

    def sign_at(self, value):
        """Sign of the value at a rational, computed in integers only."""
        if not self.coefficients:
            return 0
        value = Fraction(value)
        numerator, denominator = value.numerator, value.denominator

        # Homogenized: sum c_i n^i d^(deg - i), which has the sign of p(n/d) since d > 0.
        total = 0
        degree = len(self.coefficients) - 1
        denominator_power = 1
        for power in range(degree, -1, -1):
            total = total * numerator + self.coefficients[power] * denominator_power
            denominator_power *= denominator
        return sign(total)

    def sign_at_infinity(self, positive=True):
        """Sign as x goes to +infinity (or -infinity)."""
        if not self.coefficients:
            return 0
        if positive or self.degree % 2 == 0:
            return sign(self.lead)
        return -sign(self.lead)

    def translate(self, shift):
        """Polynomial whose roots are the roots of this one plus shift, i.e. p(x - shift).

        The result is a positive integer multiple of p(x - shift).
        """
        shift = Fraction(shift)
        result = [Fraction(0)]
        # Horner with the linear polynomial (x - shift).
        for coefficient in reversed(self.coefficients):
            shifted = [Fraction(0)] * (len(result) + 1)
            for power, value in enumerate(result):
                shifted[power + 1] += value
                shifted[power] -= value * shift
            shifted[0] += coefficient
            result = shifted
        return IntPolynomial.from_rational_coefficients(result)

    def dilate(self, factor):
        """Polynomial whose roots are the roots of this one times a nonzero factor: p(x/factor).

        With factor = u/v, u^n p(x v/u) = sum c_i v^i u^(n-i) x^i has integer coefficients.
        """
        factor = Fraction(factor)
        if factor == 0:
            raise ZeroDivisionError('Cannot dilate by zero')
        u, v = factor.numerator, factor.denominator
        degree = len(self.coefficients) - 1
        return IntPolynomial(coefficient * v ** power * u ** (degree - power)
                             for power, coefficient in enumerate(self.coefficients))

    def reflect(self):
        """Polynomial whose roots are the negated roots of this one, i.e. p(-x)."""
        return IntPolynomial(-coefficient if power % 2 else coefficient
                             for power, coefficient in enumerate(self.coefficients))

    def reverse(self):
        """x^n p(1/x), whose roots are the reciprocals of the nonzero roots of this one."""
        return IntPolynomial(reversed(self.strip_zero_roots().coefficients))

    def strip_zero_roots(self):
        """Divide out the largest power of x."""
        coefficients = list(self.coefficients)
        while coefficients and coefficients[0] == 0:
            coefficients.pop(0)
        return IntPolynomial(coefficients)

    def squared_argument(self):
        """p(x^2)."""
        coefficients = []
        for coefficient in self.coefficients:
            coefficients.extend([coefficient, 0])
        return IntPolynomial(coefficients)

def divmod_rational(dividend, divisor):
    """Polynomial division over the rationals.

    Returns (quotient, remainder) as lists of Fractions, lowest degree first.
    """
    if divisor.is_zero():
        raise ZeroPolynomial('Division by the zero polynomial')

    remainder = [Fraction(coefficient) for coefficient in dividend.coefficients]
    divisor_degree = divisor.degree
    quotient = [Fraction(0)] * max(len(remainder) - divisor_degree, 1)

    while len(remainder) - 1 >= divisor_degree and remainder:
        shift = len(remainder) - 1 - divisor_degree
        factor = remainder[-1] / divisor.lead
        quotient[shift] = factor
        for power, coefficient in enumerate(divisor.coefficients):
            remainder[power + shift] -= factor * coefficient
        remainder.pop()
        while remainder and remainder[-1] == 0:
            remainder.pop()

    return quotient, remainder

def exact_quotient(dividend, divisor):
    """dividend / divisor over the rationals, which must divide exactly. Returned primitive."""
    quotient, remainder = divmod_rational(dividend, divisor)
    if remainder:
        raise ArithmeticError('%s does not divide %s' % (divisor, dividend))
    return IntPolynomial.from_rational_coefficients(quotient).primitive()

def pseudo_remainder(dividend, divisor):
    """prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, computed in the integers."""
    if divisor.is_zero():
        raise ZeroPolynomial('Pseudo-division by the zero polynomial')

    divisor_degree = divisor.degree
    if dividend.degree < divisor_degree:
        return dividend

    lead = divisor.lead
    remainder = list(dividend.coefficients)
    exponent = dividend.degree - divisor_degree + 1

    while remainder and len(remainder) - 1 >= divisor_degree:
        remainder_lead = remainder[-1]
        shift = len(remainder) - 1 - divisor_degree
        remainder = [lead * coefficient for coefficient in remainder]
        for power, coefficient in enumerate(divisor.coefficients):
            remainder[power + shift] -= remainder_lead * coefficient
        remainder.pop()
        while remainder and remainder[-1] == 0:
            remainder.pop()
        exponent -= 1

    multiple = lead ** exponent
    return IntPolynomial(multiple * coefficient for coefficient in remainder)

def gcd(first, second):
    """Greatest common divisor by the subresultant PRS.

    Returned primitive with a positive leading coefficient. gcd(0, 0) is 0.
    """
    a, b = first, second
    if a.degree < b.degree:
        a, b = b, a
    if b.is_zero():
        return a.primitive()

    a = a.divide_content()
    b = b.divide_content()
    g = h = 1

    while True:
        delta = a.degree - b.degree
        remainder = pseudo_remainder(a, b)
        if remainder.is_zero():
            return b.primitive()
        if remainder.degree == 0:
            return IntPolynomial.constant(1)

        a = b
        b = remainder.exact_divide_int(g * h ** delta)
        g = a.lead
        if delta == 1:
            h = g
        elif delta > 1:
            h = _exact_div(g ** delta, h ** (delta - 1))

def squarefree_part(polynomial):
    """p / gcd(p, p'), primitive with a positive leading coefficient."""
    if polynomial.is_zero():
        raise ZeroPolynomial('The zero polynomial has no square-free part')
    if polynomial.degree == 0:
        return IntPolynomial.constant(1)

    common_factor = gcd(polynomial, polynomial.derivative())
    if common_factor.degree == 0:
        return polynomial.primitive()
    return exact_quotient(polynomial, common_factor)

def _integer_resultant(first, second):
    """Resultant of two univariate integer polynomials by the subresultant algorithm."""
    if first.is_zero() or second.is_zero():
        return 0
    if first.degree == 0:
        return first.lead ** second.degree
    if second.degree == 0:
        return second.lead ** first.degree

    a, b = first, second
    t = a.content() ** b.degree * b.content() ** a.degree
    a = a.divide_content()
    b = b.divide_content()
    g = h = 1
    s = 1

    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1

    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        remainder = pseudo_remainder(a, b)
        if remainder.is_zero():
            return 0

        a = b
        b = remainder.exact_divide_int(g * h ** delta)
        g = a.lead
        if delta == 1:
            h = g
        elif delta > 1:
            h = _exact_div(g ** delta, h ** (delta - 1))

        if b.degree <= 0:
            break

    degree = a.degree
    if degree == 1:
        h = b.lead
    else:
        h = _exact_div(b.lead ** degree, h ** (degree - 1))
    return s * t * h

class BivariatePolynomial():
    """A polynomial in x and y with integer coefficients.

    terms maps (power of x, power of y) to the coefficient. Only used to build the eliminants for
    sums and products of algebraic numbers.
    """
    def __init__(self, terms):
        """Initialize the BivariatePolynomial instance."""
        self.terms = {powers: coefficient for powers, coefficient in terms.items() if coefficient}

    @classmethod
    def difference_substitution(cls, polynomial):
        """q(y - x), whose roots in y are a root of q plus x."""
        terms = {}
        for power, coefficient in enumerate(polynomial.coefficients):
            for y_power in range(power + 1):
                x_power = power - y_power
                value = coefficient * math.comb(power, y_power) * (-1) ** x_power
                terms[(x_power, y_power)] = terms.get((x_power, y_power), 0) + value
        return cls(terms)

    @classmethod
    def quotient_substitution(cls, polynomial):
        """x^m q(y/x), whose roots in y are a root of q times x."""
        degree = polynomial.degree
        return cls({(degree - power, power): coefficient
                    for power, coefficient in enumerate(polynomial.coefficients)})

    @property
    def degree_x(self):
        """Degree in x."""
        return max((x_power for x_power, _ in self.terms), default=NEG_INFINITY)

    @property
    def degree_y(self):
        """Degree in y."""
        return max((y_power for _, y_power in self.terms), default=NEG_INFINITY)

    def has_constant_leading_x_coefficient(self):
        """Whether the coefficient of the top power of x does not depend on y."""
        top = self.degree_x
        return all(y_power == 0 for x_power, y_power in self.terms if x_power == top)

    def specialize_y(self, value):
        """The univariate polynomial in x obtained by setting y = value."""
        coefficients = [0] * (self.degree_x + 1)
        for (x_power, y_power), coefficient in self.terms.items():
            coefficients[x_power] += coefficient * value ** y_power
        return IntPolynomial(coefficients)

def _interpolate(points, values):
    """The polynomial through (points[i], values[i]), by Newton divided differences."""
    size = len(points)
    differences = [Fraction(value) for value in values]
    for level in range(1, size):
        for index in range(size - 1, level - 1, -1):
            differences[index] = ((differences[index] - differences[index - 1]) /
                                  (points[index] - points[index - level]))

    result = [differences[size - 1]]
    for index in range(size - 2, -1, -1):
        # result = result * (y - points[index]) + differences[index]
        shifted = [Fraction(0)] * (len(result) + 1)
        for power, value in enumerate(result):
            shifted[power + 1] += value
            shifted[power] -= value * points[index]
        shifted[0] += differences[index]
        result = shifted

    return IntPolynomial(result)

def resultant(first, second, eliminate='x'):
    """Resultant of first(x) and second with respect to x.

    If second is an IntPolynomial, the result is the constant polynomial res_x(first, second).
    If second is a BivariatePolynomial in x and y, x is eliminated and the result is a polynomial
    in y. Its leading coefficient in x must not depend on y, so that specializing y commutes with
    taking the resultant.
    """
    if eliminate != 'x':
        raise PolynomialError('Only x can be eliminated')
    if first.is_zero():
        raise ZeroPolynomial('Resultant with the zero polynomial')

    if isinstance(second, IntPolynomial):
        if second.is_zero():
            raise ZeroPolynomial('Resultant with the zero polynomial')
        return IntPolynomial.constant(_integer_resultant(first, second))

    if not second.terms:
        raise ZeroPolynomial('Resultant with the zero polynomial')
    if not second.has_constant_leading_x_coefficient():
        raise PolynomialError('Leading x coefficient must be constant in y')

    degree_bound = first.degree * second.degree_y
    points = list(range(degree_bound + 1))
    values = [_integer_resultant(first, second.specialize_y(point)) for point in points]
    return _interpolate(points, values)

class SturmSequence():
    """A Sturm sequence p, p', then negated remainders, each up to a positive factor.

    squarefree_taken records whether the polynomial handed in had repeated roots, in which case
    the sequence is that of its square-free part.
    """
    def __init__(self, polynomials, squarefree_taken=False):
        """Initialize the SturmSequence instance."""
        self.polynomials = tuple(polynomials)
        self.squarefree_taken = squarefree_taken

    def __len__(self):
        return len(self.polynomials)

    @property
    def polynomial(self):
        """The (square-free) polynomial whose roots are counted."""
        return self.polynomials[0]

    def variations(self, value):
        """Number of sign changes at a rational, zeros dropped."""
        signs = [polynomial.sign_at(value) for polynomial in self.polynomials]
        return _count_changes(signs)

    def variations_at_infinity(self, positive=True):
        """Number of sign changes at +infinity (or -infinity)."""
        signs = [polynomial.sign_at_infinity(positive) for polynomial in self.polynomials]
        return _count_changes(signs)

def _count_changes(signs):
    """Count sign changes, ignoring zeros."""
    nonzero = [value for value in signs if value]
    return sum(1 for left, right in zip(nonzero, nonzero[1:]) if left != right)

def sturm_sequence(polynomial):
    """Build the Sturm sequence of a nonzero polynomial (of its square-free part, if needed)."""
    if polynomial.is_zero():
        raise ZeroPolynomial('The zero polynomial has no Sturm sequence')

    base = squarefree_part(polynomial)
    squarefree_taken = base.degree != polynomial.degree
    if base.degree == 0:
        return SturmSequence([base], squarefree_taken)

    sequence = [base, base.derivative()]
    while sequence[-1].degree > 0:
        previous, current = sequence[-2], sequence[-1]
        remainder = pseudo_remainder(previous, current)
        # prem multiplies by lc^(delta + 1); undo a negative factor.
        if current.lead < 0 and (previous.degree - current.degree + 1) % 2:
            remainder = -remainder
        if remainder.is_zero():
            break
        sequence.append((-remainder).divide_content())

    return SturmSequence(sequence, squarefree_taken)

def count_real_roots(sequence, interval, strict=False):
    """Exact number of distinct real roots inside the interval.

    The sign-variation difference V(lo) - V(hi) counts the roots in (lo, hi], also when an
    endpoint is a root. Openness of the endpoints is then honoured exactly, which amounts to
    perturbing a root endpoint past the root. With strict=True a root endpoint raises
    EndpointIsRoot instead.
    """
    if interval.is_empty():
        return 0

    polynomial = sequence.polynomial
    lo_is_root = polynomial.sign_at(interval.lo) == 0
    hi_is_root = polynomial.sign_at(interval.hi) == 0

    if strict and (lo_is_root or hi_is_root):
        raise EndpointIsRoot('Endpoint of %s is a root of %s' % (interval, polynomial))

    count = sequence.variations(interval.lo) - sequence.variations(interval.hi)
    if hi_is_root and interval.hi_open:
        count -= 1
    if lo_is_root and not interval.lo_open:
        count += 1
    return count

def count_all_real_roots(sequence):
    """Number of distinct real roots on the whole line."""
    return sequence.variations_at_infinity(False) - sequence.variations_at_infinity(True)

def cauchy_bound(polynomial):
    """An integer B with every root strictly inside (-B, B)."""
    if polynomial.degree < 1:
        return 1
    lead = abs(polynomial.lead)
    largest = max(abs(coefficient) for coefficient in polynomial.coefficients[:-1])
    return 1 + -(-largest // lead)

def isolate_real_roots(polynomial):
    """Isolating intervals for the distinct real roots, in ascending order.

    Starts from the Cauchy bound and bisects, certifying every split with Sturm counts. A root
    that lands exactly on a bisection point is returned as the degenerate interval [q, q].
    """
    if polynomial.is_zero():
        raise ZeroPolynomial('The zero polynomial has no isolated roots')

    sequence = sturm_sequence(polynomial)
    base = sequence.polynomial
    if base.degree < 1:
        return []

    bound = cauchy_bound(base)
    pending = [RationalInterval.open(-bound, bound)]
    isolated = []

    while pending:
        interval = pending.pop()
        count = count_real_roots(sequence, interval)
        if count == 0:
            continue
        if count == 1:
            isolated.append(interval)
            continue

        middle = interval.midpoint
        if base.sign_at(middle) == 0:
            isolated.append(RationalInterval.point(middle))
        pending.append(RationalInterval.open(interval.lo, middle))
        pending.append(RationalInterval.open(middle, interval.hi))

    isolated.sort(key=lambda interval: (interval.lo, interval.hi))
    return isolated

def refine_interval(polynomial, interval, target_width, sequence=None):
    """Shrink an isolating interval until its width is at most target_width.

    Bisection by signs, deterministic. Falls back to Sturm counts only while both endpoints are
    roots of the polynomial (possible for isolators produced next to a rational root).
    """
    if sequence is None:
        sequence = sturm_sequence(polynomial)
    base = sequence.polynomial

    if count_real_roots(sequence, interval) != 1:
        raise NotIsolating('%s does not isolate a root of %s' % (interval, polynomial))

    if interval.is_point() or interval.width <= target_width:
        return interval

    lo, hi = interval.lo, interval.hi
    sign_lo = base.sign_at(lo)
    sign_hi = base.sign_at(hi)

    # A closed endpoint that is a root is the root.
    if sign_lo == 0 and not interval.lo_open:
        return RationalInterval.point(lo)
    if sign_hi == 0 and not interval.hi_open:
        return RationalInterval.point(hi)

    while hi - lo > target_width:
        middle = (lo + hi) / 2
        sign_middle = base.sign_at(middle)
        if sign_middle == 0:
            return RationalInterval.point(middle)

        if sign_lo:
            in_lower_half = sign_lo * sign_middle < 0
        elif sign_hi:
            in_lower_half = sign_middle * sign_hi > 0
        else:
            in_lower_half = count_real_roots(sequence, RationalInterval.open(lo, middle)) == 1

        if in_lower_half:
            hi, sign_hi = middle, sign_middle
        else:
            lo, sign_lo = middle, sign_middle

    return RationalInterval.open(lo, hi)

def poly_arith(op, first, second=None):
    """Dispatch one of the named polynomial operations.

    op is one of add, mul, derivative, gcd, squarefree_part, eval_at_rational_sign. For
    eval_at_rational_sign, second is the rational point and the result is -1, 0 or 1.
    """
    if op == 'add':
        return first + second
    if op == 'mul':
        return first * second
    if op == 'derivative':
        return first.derivative()
    if op == 'gcd':
        return gcd(first, second)
    if op == 'squarefree_part':
        return squarefree_part(first)
    if op == 'eval_at_rational_sign':
        return first.sign_at(second)
    raise PolynomialError('Unknown polynomial operation "%s"' % op)
