# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"Coefficient fields: the rationals and prime fields below 2^61"
from fractions import Fraction

from .exceptions import ValidationError

__all__ = ['Field', 'RationalField', 'PrimeField', 'FpElement', 'QQ',
    'field_from_descriptor']

MAX_PRIME = 2 ** 61
# Deterministic Miller-Rabin witnesses for every n below 3.3 * 10^24
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    "Exact coefficient field K"
    characteristic = 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        raise NotImplementedError

    def parse(self, text):
        "Convert a 'num/den' string"
        try:
            return self(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exception:
            raise ValidationError('Cannot read "%s": %s' % (text, exception)
                ) from exception

    def format(self, value):
        return str(value)

    def descriptor(self):
        raise NotImplementedError


class RationalField(Field):
    "The field Q of arbitrary precision rationals"

    def __call__(self, value):
        if isinstance(value, FpElement):
            raise ValidationError('Cannot combine values over "%s" and "%s".'
                % (self, value.field))
        return Fraction(value)

    def descriptor(self):
        return 'Q'

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash('Q')

    def __repr__(self):
        return 'QQ'

    def __str__(self):
        return 'Q'


class PrimeField(Field):
    "The prime field F_p with p below 2^61"

    def __init__(self, p):
        if (not isinstance(p, int) or p >= MAX_PRIME or not _is_prime(p)):
            raise ValidationError('The characteristic "%s" must be a prime '
                'below 2^61.' % p)
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.field != self:
                raise ValidationError(
                    'Cannot combine values over "%s" and "%s".'
                    % (self, value.field))
            return value
        if isinstance(value, int):
            return FpElement(value, self)
        value = Fraction(value)
        return FpElement(value.numerator, self) / FpElement(
            value.denominator, self)

    def descriptor(self):
        return {'Fp': self.characteristic}

    def __eq__(self, other):
        return (isinstance(other, PrimeField)
            and other.characteristic == self.characteristic)

    def __hash__(self):
        return hash(('Fp', self.characteristic))

    def __repr__(self):
        return 'PrimeField(%s)' % self.characteristic

    def __str__(self):
        return 'F%s' % self.characteristic


class FpElement:
    "Canonical representative in [0, p) of an element of F_p"
    __slots__ = ('value', 'field')

    def __init__(self, value, field):
        self.value = value % field.characteristic
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field != self.field:
                raise ValidationError(
                    'Cannot combine values over "%s" and "%s".'
                    % (self.field, other.field))
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.value + other, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.value - other, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(other - self.value, self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(self.value * other, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError('inverse of zero in %s' % self.field)
        return FpElement(pow(self.value, -1, self.field.characteristic),
            self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * FpElement(other, self.field).inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpElement(other, self.field) * self.inverse()

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        return FpElement(pow(self.value, exponent,
                self.field.characteristic), self.field)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return other.field == self.field and other.value == self.value
        if isinstance(other, int):
            return (other - self.value) % self.field.characteristic == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.field.characteristic, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return 'FpElement(%s, %s)' % (self.value, self.field.characteristic)

    def __str__(self):
        return str(self.value)


QQ = RationalField()


def field_from_descriptor(descriptor):
    "Build the field described by 'Q' or {'Fp': p}"
    if descriptor == 'Q':
        return QQ
    if isinstance(descriptor, dict) and set(descriptor) == {'Fp'}:
        return PrimeField(descriptor['Fp'])
    raise ValidationError('Unknown field %r.' % (descriptor,))
