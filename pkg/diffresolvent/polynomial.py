# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Univariate polynomials and rational functions in x over K

The derivation is D with Dx = 1.  Values are immutable.
"""
import logging
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .exceptions import AllZero, UserError, ValidationError
from .field import QQ

__all__ = ['XPoly', 'XRat', 'derive', 'gcd_monic', 'lcm_monic',
    'content_primitive']

logger = logging.getLogger(__name__)


class XPoly:
    "Dense polynomial in x, coefficients ascending in the power of x"
    __slots__ = ('field', 'coeffs')

    def __init__(self, coeffs=(), field=QQ):
        coeffs = [field(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def _make(cls, coeffs, field):
        "Build from field elements, trimming only"
        poly = cls.__new__(cls)
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        poly.field = field
        poly.coeffs = tuple(coeffs)
        return poly

    @classmethod
    def constant(cls, value, field=QQ):
        return cls((value,), field)

    @classmethod
    def zero(cls, field=QQ):
        return cls._make((), field)

    @classmethod
    def one(cls, field=QQ):
        return cls._make((field.one,), field)

    @classmethod
    def x(cls, field=QQ):
        return cls._make((field.zero, field.one), field)

    @property
    def degree(self):
        "Degree in x, -1 for the zero polynomial"
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, XPoly):
            if other.field != self.field:
                raise ValidationError('Cannot combine values over "%s" and '
                    '"%s".' % (self.field, other.field))
            return other
        if isinstance(other, XRat):
            return NotImplemented
        try:
            return XPoly._make((self.field(other),), self.field)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] = result[i] + c
        return XPoly._make(result, self.field)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._make([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly.zero(self.field)
        result = [self.field.zero] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if not c:
                continue
            for j, d in enumerate(b):
                result[i + j] = result[i + j] + c * d
        return XPoly._make(result, self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = XPoly.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, scalar):
        scalar = self.field(scalar)
        return XPoly._make([c * scalar for c in self.coeffs], self.field)

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        remainder = list(self.coeffs)
        shift = len(remainder) - len(other.coeffs)
        if shift < 0:
            return XPoly.zero(self.field), self
        inverse = self.field.one / other.leading
        quotient = [self.field.zero] * (shift + 1)
        for k in range(shift, -1, -1):
            c = remainder[k + len(other.coeffs) - 1] * inverse
            quotient[k] = c
            if not c:
                continue
            for i, d in enumerate(other.coeffs):
                remainder[k + i] = remainder[k + i] - c * d
        return (XPoly._make(quotient, self.field),
            XPoly._make(remainder[:len(other.coeffs) - 1], self.field))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        "Exact quotient, fails when other does not divide self"
        quotient, remainder = divmod(self, other)
        if remainder:
            raise UserError('The division of "%s" by "%s" is not exact.'
                % (self, other))
        return quotient

    def __truediv__(self, other):
        return XRat(self, other)

    def __rtruediv__(self, other):
        return XRat(other, self)

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.one / self.leading)

    def derive(self):
        return XPoly._make([c * k for k, c in enumerate(self.coeffs)][1:],
            self.field)

    def __call__(self, x0):
        "Horner evaluation at a field element"
        result = self.field.zero
        for c in reversed(self.coeffs):
            result = result * x0 + c
        return result

    def evaluate(self, x0):
        return self(x0)

    def __eq__(self, other):
        if isinstance(other, XRat):
            return other == self
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __repr__(self):
        return 'XPoly(%r, %r)' % ([str(c) for c in self.coeffs], self.field)

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = 'x' if k == 1 else 'x^%s' % k
                terms.append(power if c == 1 else '%s*%s' % (c, power))
        return ' + '.join(terms).replace('+ -', '- ')


class XRat:
    "Reduced rational function num/den with den monic"
    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        if not isinstance(num, XPoly):
            field = den.field if isinstance(den, XPoly) else QQ
            num = XPoly.constant(num, field)
        if den is None:
            den = XPoly.one(num.field)
        elif not isinstance(den, XPoly):
            den = XPoly.constant(den, num.field)
        if den.is_zero():
            raise ZeroDivisionError('rational function with zero denominator')
        if num.is_zero():
            den = XPoly.one(num.field)
        else:
            g = gcd_monic(num, den)
            if not g.is_constant():
                num, den = num.exquo(g), den.exquo(g)
            unit = den.leading
            if unit != 1:
                inverse = num.field.one / unit
                num, den = num.scale(inverse), den.scale(inverse)
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, num, den):
        "Trust that num/den is already canonical"
        rat = cls.__new__(cls)
        rat.num = num
        rat.den = den
        return rat

    @classmethod
    def from_poly(cls, poly):
        return cls._make(poly, XPoly.one(poly.field))

    @classmethod
    def constant(cls, value, field=QQ):
        return cls.from_poly(XPoly.constant(value, field))

    @classmethod
    def zero(cls, field=QQ):
        return cls.from_poly(XPoly.zero(field))

    @classmethod
    def one(cls, field=QQ):
        return cls.from_poly(XPoly.one(field))

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, XRat):
            return other
        if isinstance(other, XPoly):
            return XRat.from_poly(other)
        try:
            return XRat.constant(self.field(other), self.field)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return XRat(self.num + other.num, self.den)
        return XRat(self.num * other.den + other.num * self.den,
            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return XRat._make(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return XRat.zero(self.field)
        if self.den.is_constant() and other.den.is_constant():
            return XRat._make(self.num * other.num, self.den)
        return XRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError('rational function division by zero')
        return XRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent):
        if exponent < 0:
            return XRat._make(XPoly.one(self.field), XPoly.one(self.field)) / (
                self ** -exponent)
        return XRat(self.num ** exponent, self.den ** exponent)

    def derive(self):
        "Quotient rule"
        if self.den.is_constant():
            return XRat._make(self.num.derive(), self.den)
        return XRat(self.num.derive() * self.den
            - self.num * self.den.derive(),
            self.den * self.den)

    def __call__(self, x0):
        den = self.den(x0)
        if not den:
            raise ZeroDivisionError('pole at %s' % x0)
        return self.num(x0) / den

    def evaluate(self, x0):
        return self(x0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den.is_constant():
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return 'XRat(%r, %r)' % (self.num, self.den)

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return '(%s)/(%s)' % (self.num, self.den)


def derive(f):
    "Apply D with Dx = 1 to an XPoly or an XRat"
    return f.derive()


def gcd_monic(a, b):
    "Monic greatest common divisor, gcd(0, 0) = 0"
    while b:
        a, b = b, a % b
    return a.monic()


def lcm_monic(a, b):
    if a.is_zero() or b.is_zero():
        return XPoly.zero(a.field)
    return (a * b).exquo(gcd_monic(a, b)).monic()


def _rational_content(polys):
    "Positive rational c making every poly / c coprime integer coefficients"
    coeffs = [Fraction(c) for p in polys for c in p.coeffs if c]
    numerator = reduce(gcd, (c.numerator for c in coeffs))
    denominator = reduce(lcm, (c.denominator for c in coeffs))
    return Fraction(abs(numerator), denominator)


def content_primitive(ts):
    """Split ts into a common content and primitive parts

    Over Q the primitive parts have collectively coprime integer coefficients
    and the first nonzero one has a positive leading coefficient.  Over F_p
    the first nonzero primitive part is monic.
    """
    ts = list(ts)
    nonzero = [t for t in ts if t]
    if not nonzero:
        raise AllZero('Cannot extract the content of a sequence whose '
            'entries are all zero.')
    field = nonzero[0].field
    g = reduce(gcd_monic, nonzero[1:], nonzero[0].monic())
    quotients = [t.exquo(g) for t in ts]
    first = next(q for q in quotients if q)
    if field.characteristic == 0:
        unit = _rational_content(quotients)
        if first.leading < 0:
            unit = -unit
    else:
        unit = first.leading
    inverse = field.one / unit
    prims = [q.scale(inverse) for q in quotients]
    content = g.scale(unit)
    logger.debug('content of degree %s extracted from %s entries',
        content.degree, len(ts))
    return content, prims
