# This file is part of the diffresolvent module.  The COPYRIGHT file at the
# top level of this repository contains the full copyright notices and
# license terms.
from .alpha import AlphaPoly, det_fraction_free, signed_maximal_minors
from .bell import (FormalBasisFunction, apply_to_basis, bell_b, bell_partial,
    log_derivative, log_resolvent, pochhammer)
from .elimination import (Degenerate, eliminate_resolvent, equal_up_to_unit,
    expansion_cost, resolvent_from_lodo, template_from_lodo)
from .exceptions import UserError, ValidationError
from .field import QQ, PrimeField
from .fileio import parse_problem, parse_resolvent
from .polynomial import XPoly, XRat, content_primitive, gcd_monic
from .powersum import (IdenticallyZero, Resolvent, ResolventTemplate,
    build_specialization_matrix, default_specializations, powersum_resolvent,
    single_polynomial_template)
from .symmetric import Specialization, combined_sum, powersums_from_elementary
from .tower import (Lodo, MonicPoly, ProblemSpec, PseudoTerm, apply_lodo,
    derivative_table, lodo_derive, numeric_residual, rename_symbol,
    specialize_coefficients, tensor_support)

__all__ = ['AlphaPoly', 'det_fraction_free', 'signed_maximal_minors',
    'FormalBasisFunction', 'apply_to_basis', 'bell_b', 'bell_partial',
    'log_derivative', 'log_resolvent', 'pochhammer', 'Degenerate',
    'eliminate_resolvent', 'equal_up_to_unit', 'expansion_cost',
    'resolvent_from_lodo', 'template_from_lodo', 'UserError',
    'ValidationError', 'QQ', 'PrimeField', 'parse_problem', 'parse_resolvent',
    'XPoly', 'XRat', 'content_primitive', 'gcd_monic', 'IdenticallyZero',
    'Resolvent', 'ResolventTemplate', 'build_specialization_matrix',
    'default_specializations', 'powersum_resolvent',
    'single_polynomial_template',
    'Specialization', 'combined_sum', 'powersums_from_elementary', 'Lodo',
    'MonicPoly', 'ProblemSpec', 'PseudoTerm', 'apply_lodo', 'derivative_table',
    'lodo_derive', 'numeric_residual', 'rename_symbol',
    'specialize_coefficients', 'tensor_support']
