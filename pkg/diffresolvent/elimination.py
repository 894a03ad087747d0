# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
"""Symbolic resolvents by eliminating the tensor basis

The derivatives D^(m_k) y are written over the basis coordinates they
actually use; expanding

    det [ D^(m_k) y | coordinates of D^(m_k) y ]

along its first column gives a resolvent over K(x)[alpha].
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from math import lgamma, log

from . import config
from .alpha import AlphaPoly, monomial, signed_maximal_minors
from .exceptions import DimensionMismatch, TooLarge, ValidationError
from .polynomial import XPoly, XRat
from .powersum import Resolvent, ResolventTemplate
from .tower import (Lodo, derivative_table, dimension_bound,
    tensor_support)

__all__ = ['Degenerate', 'eliminate_resolvent', 'equal_up_to_unit',
    'template_from_lodo', 'expansion_cost', 'resolvent_from_lodo']

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Degenerate:
    "Every cofactor vanished"
    orders: tuple
    status = 'degenerate'
    hint: str = dataclass_field(default='', compare=False)


def expansion_cost(n):
    "log10(n!), the number of terms of a symbolic n x n expansion"
    return lgamma(n + 1) / log(10)


def _too_large(size, guard):
    return TooLarge('The elimination needs a %s x %s symbolic determinant '
        '(about 10^%.1f terms), above the limit of %s.'
        % (size, size, expansion_cost(size), guard))


def _default_orders(problem, guard):
    "Smallest N with N = (support of D^0 y .. D^(N-1) y) + 1"
    for size in range(1, guard + 1):
        if len(tensor_support(problem, size - 1)) + 1 == size:
            return tuple(range(size))
    raise _too_large(guard + 1, guard)


def _check_orders(orders):
    orders = tuple(orders)
    if (not orders or any(m < 0 for m in orders)
            or any(a >= b for a, b in zip(orders, orders[1:]))):
        raise ValidationError('Derivative orders %s must be strictly '
            'increasing nonnegative integers.' % list(orders))
    return orders


def _strip_monomial_content(lodo):
    "Divide out the largest monomial in the symbols dividing every coefficient"
    monomials = [mono for (_, mono), _ in lodo.flat_coefficients()]
    symbols = {s for mono in monomials for s, _ in mono}
    common = monomial({s: min(dict(mono).get(s, 0) for mono in monomials)
            for s in symbols})
    if not common:
        return lodo
    divisor = AlphaPoly._make({common: XRat.one(lodo.field)}, lodo.field)
    return Lodo([(m, c.exquo(divisor)) for m, c in lodo.terms], lodo.field)


def eliminate_resolvent(problem, orders=None, guard=None):
    """Resolvent from the first-column cofactors, or Degenerate

    With no orders the smallest run 0..N-1 whose support has N-1
    coordinates is used.  A monomial in the symbols common to every
    cofactor is divided out, then denominators are cleared and the result
    is normalized by Lodo.primitive.
    """
    if guard is None:
        guard = config.getint('elimination_guard', 9)
    if orders is None:
        orders = _default_orders(problem, guard)
    orders = _check_orders(orders)
    if len(orders) > guard:
        raise _too_large(len(orders), guard)
    table = derivative_table(problem, orders)
    support = sorted({key for vector in table.values()
                for key in vector.entries})
    logger.info('eliminating %s coordinates (bound %s) with orders %s',
        len(support), dimension_bound(problem), list(orders))
    if len(orders) != len(support) + 1:
        raise DimensionMismatch('Eliminating %s basis coordinates needs %s '
            'derivative orders, got %s.'
            % (len(support), len(support) + 1, len(orders)))
    field = problem.field
    columns = [[table[m].entries.get(key, AlphaPoly.zero(field))
            for m in orders] for key in support]
    cofactors = signed_maximal_minors(columns, len(orders),
        AlphaPoly.one(field))
    lodo = Lodo(list(zip(orders, cofactors)), field)
    if lodo.is_zero():
        hint = ('Every cofactor vanished, derivative orders %s do not give '
            'a resolvent.' % list(orders))
        logger.warning(hint)
        return Degenerate(orders, hint=hint)
    return _strip_monomial_content(lodo).primitive()


def equal_up_to_unit(a, b):
    "True iff c_a * a = c_b * b for nonzero c_a, c_b in K(x)"
    first = dict(a.flat_coefficients())
    second = dict(b.flat_coefficients())
    if set(first) != set(second):
        return False
    if not first:
        return True
    key = next(iter(first))
    ca, cb = first[key], second[key]
    return all(cb * first[k] == ca * second[k] for k in first)


def template_from_lodo(lodo):
    "The (order, monomial) support of a symbolic resolvent"
    return ResolventTemplate(tuple(key for key, _ in lodo.flat_coefficients()))


def resolvent_from_lodo(lodo):
    "Package a primitive symbolic resolvent like a powersum result"
    template = template_from_lodo(lodo)
    prims = tuple(coeff.num for _, coeff in lodo.flat_coefficients())
    return Resolvent(template, prims, XPoly.one(lodo.field), prims,
        method='eliminate')
