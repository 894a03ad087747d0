# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Bell polynomials and the resolvent of e^(alpha x) + (ln x)^alpha

For m >= 1

    D^m y = alpha^m e^(alpha x)
        + x^(-m) * sum_k b_(m,k) (alpha)_k (ln x)^(alpha - k)

with b_(m,k) = B_(m,k)(1, -1, 2, ..., (-1)^(k-1) (k-1)!).
"""
import logging
from dataclasses import dataclass
from math import comb, factorial

from .alpha import AlphaPoly, signed_maximal_minors
from .exceptions import ValidationError
from .field import QQ
from .polynomial import XPoly, XRat
from .tower import Lodo

__all__ = ['FormalBasisFunction', 'pochhammer', 'bell_partial', 'bell_b',
    'log_derivative', 'log_resolvent', 'apply_to_basis']

logger = logging.getLogger(__name__)

EXP = 'exp'
LOG = 'log'


@dataclass(frozen=True, order=True)
class FormalBasisFunction:
    """e^(alpha x) for kind 'exp', (ln x)^(alpha - shift) for kind 'log'"""
    kind: str
    shift: int = 0

    def __post_init__(self):
        if self.kind not in (EXP, LOG) or self.shift < 0:
            raise ValidationError('Invalid basis function %s with shift %s.'
                % (self.kind, self.shift))

    def __str__(self):
        if self.kind == EXP:
            return 'e^(alpha*x)'
        if not self.shift:
            return '(ln x)^alpha'
        return '(ln x)^(alpha-%s)' % self.shift


def pochhammer(symbol, k, field=QQ):
    "Falling factorial symbol (symbol - 1) ... (symbol - k + 1), 1 for k = 0"
    result = AlphaPoly.one(field)
    alpha = AlphaPoly.symbol(symbol, field)
    for i in range(k):
        result = result * (alpha - i)
    return result


def _bell(n, k, args, zero, one):
    # B_(n,k) = sum_i C(n-1, i-1) a_i B_(n-i,k-1)
    table = {(0, 0): one}
    for m in range(1, n + 1):
        table[m, 0] = zero
    for j in range(1, k + 1):
        table[0, j] = zero
        for m in range(1, n + 1):
            value = zero
            for i in range(1, m - j + 2):
                value = value + table[m - i, j - 1] * args[i - 1] * comb(
                    m - 1, i - 1)
            table[m, j] = value
    return table[n, k]


def bell_partial(n, k, args):
    "Partial Bell polynomial B_(n,k) evaluated at args"
    if k < 0 or k > n:
        raise ValidationError('B(%s, %s) needs 0 <= k <= n.' % (n, k))
    args = list(args)
    if args:
        zero = args[0] - args[0]
    else:
        zero = XRat.zero()
    return _bell(n, k, args, zero, zero + 1)


def bell_b(m, k):
    "The integer B_(m,k)(1, -1, 2, ..., (-1)^(k-1) (k-1)!)"
    if m == 0 and k == 0:
        return 1
    if not 1 <= k <= m:
        return 0
    args = [(-1) ** (i - 1) * factorial(i - 1) for i in range(1, m + 1)]
    return _bell(m, k, args, 0, 1)


def _inverse_power(m, field=QQ):
    return XRat(XPoly.one(field), XPoly.x(field) ** m)


def log_derivative(m, symbol='alpha', field=QQ):
    """D^m of e^(alpha x) + (ln x)^alpha

    Returns the coefficient alpha^m of e^(alpha x) and, for every shift k,
    the coefficient x^(-m) b_(m,k) (alpha)_k of (ln x)^(alpha - k).
    """
    exp_coefficient = AlphaPoly.symbol(symbol, field) ** m
    logs = {}
    for k in range(m + 1):
        b = bell_b(m, k)
        if b:
            logs[k] = pochhammer(symbol, k, field).scale(
                _inverse_power(m, field) * b)
    return exp_coefficient, logs


def _basis(alpha_val):
    return [FormalBasisFunction(EXP)] + [FormalBasisFunction(LOG, k)
        for k in range(alpha_val + 1)]


def _scaled_row(m, alpha_val, field):
    "Coordinates of x^m D^m y over the formal basis at alpha = alpha_val"
    row = [XRat.constant(alpha_val ** m, field)
        * XRat.from_poly(XPoly.x(field) ** m)]
    for k in range(alpha_val + 1):
        value = bell_b(m, k)
        for i in range(k):
            value *= alpha_val - i
        row.append(XRat.constant(value, field))
    return row


def log_resolvent(alpha_val, field=QQ):
    """Operator annihilating e^(alpha x) + (ln x)^alpha for an integer alpha

    The alpha + 2 basis functions are eliminated from the derivatives of
    orders 0 .. alpha + 2, each row scaled by x^m to stay polynomial.
    """
    if alpha_val < 0:
        raise ValidationError('The exponent alpha = %s is negative.'
            % alpha_val)
    if alpha_val == 0:
        # y = 2
        return Lodo([(1, AlphaPoly.one(field))], field)
    size = alpha_val + 3
    rows = [_scaled_row(m, alpha_val, field) for m in range(size)]
    columns = [[row[c].num for row in rows]
        for c in range(size - 1)]
    minors = signed_maximal_minors(columns, size, XPoly.one(field))
    x = XPoly.x(field)
    terms = [(m, AlphaPoly.constant(minor * x ** m, field))
        for m, minor in enumerate(minors)]
    lodo = Lodo(terms, field).primitive()
    logger.info('log resolvent of order %s for alpha = %s', lodo.order,
        alpha_val)
    return lodo


def _derive_basis(function, m, alpha_val, field):
    "D^m of one basis function as {basis function: XRat}"
    if function.kind == EXP:
        return {function: XRat.constant(alpha_val ** m, field)}
    if not m:
        return {function: XRat.one(field)}
    beta = alpha_val - function.shift
    result = {}
    for i in range(1, m + 1):
        value = bell_b(m, i)
        for j in range(i):
            value *= beta - j
        if value:
            result[FormalBasisFunction(LOG, function.shift + i)] = (
                _inverse_power(m, field) * value)
    return result


def apply_to_basis(lodo, function, alpha_val, symbol='alpha'):
    "Coefficients of lodo applied to one formal basis function"
    field = lodo.field
    result = {}
    for order, coeff in lodo.terms:
        values = {s: alpha_val for s in coeff.symbols()}
        values.setdefault(symbol, alpha_val)
        c = coeff.specialize(values)
        for target, value in _derive_basis(function, order, alpha_val,
                field).items():
            result[target] = result.get(target, XRat.zero(field)) + c * value
    return {k: v for k, v in result.items() if v}
