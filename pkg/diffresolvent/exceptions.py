# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
from trytond.exceptions import UserError
from trytond.model.exceptions import ValidationError

__all__ = ['UserError', 'ValidationError', 'ParseError', 'AllZero',
    'NotInvertible', 'DimensionMismatch', 'TooLarge', 'UnsupportedDegree',
    'PoleAtSample', 'NotAnnihilated']


class ParseError(UserError):
    "Unreadable input, location is a JSON line/column or a field path"

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class AllZero(UserError):
    pass


class NotInvertible(UserError):
    pass


class DimensionMismatch(UserError):
    pass


class TooLarge(UserError):
    pass


class UnsupportedDegree(UserError):
    pass


class PoleAtSample(UserError):
    pass


class NotAnnihilated(UserError):
    pass
