"""
Khavinson-Shapiro exponents and asymptotic Bombieri bounds for homogeneous
polynomials over exact Gaussian-rational coefficients.
"""

from __future__ import annotations

__author__ = """Ritvik Nag"""
__email__ = 'me@ritviknag.com'

__all__ = [
    # polynomials
    'GaussianRational',
    'I',
    'Polynomial',
    'parse_poly',
    'format_poly',
    'diff',
    'multiply',
    'conjugate_star',
    'evaluate',
    'linear_pairing_power',
    # apolar
    'NormValue',
    'apolar_inner',
    'apolar_norm_sq',
    'bombieri_norm_sq',
    'apply_diff_operator',
    'newman_shapiro_rhs',
    'pairing_power_norm_sq',
    'product_with_power_norm_sq',
    'check_bombieri',
    'derivative_bound_ratio',
    # groebner
    'MonomialOrder',
    'GroebnerBasis',
    'VarietyVerdict',
    'buchberger',
    'reduce',
    'variety_only_origin',
    'gradient_rank',
    'is_amenable',
    # exponent and constants
    'KSReport',
    'ks_exponent',
    'scan_levels',
    'find_common_zero',
    'c1_constant',
    'c2_constant',
    'c2_squared_exact',
    'necessity_bound_check',
    'real_witness',
    'attach_constants',
    # extremal and quadrature
    'gram_matrix',
    'extremal_ratios',
    'sup_on_sphere',
    'pinasco_table',
    'sandwich',
    'bargmann_inner_quadrature',
    'run_identity_suites',
    'reproduce_examples',
    'Report',
    # errors
    'BombieriError',
    'PolynomialSyntaxError',
    'DimensionMismatchError',
    'NotHomogeneousError',
    'PreconditionError',
    'DimensionGuardError',
    # logging setup
    'setup',
    'init',
    'get_logger',
    'run_scope',
    'log',
    'debug',
    'info',
    'warning',
    'error',
    'exception',
    'critical',
    # models
    'Config',
    'OrderKind',
    # classes
    'BombieriJSONFormatter',
    # version info
    'version',
]

from logging import Logger, NullHandler

from ._api import get_logger, init, run_scope, setup
from ._apolar import (
    NormValue,
    apolar_inner,
    apolar_norm_sq,
    apply_diff_operator,
    bombieri_norm_sq,
    check_bombieri,
    derivative_bound_ratio,
    newman_shapiro_rhs,
    pairing_power_norm_sq,
    product_with_power_norm_sq,
)
from ._constants import (
    attach_constants,
    c1_constant,
    c2_constant,
    c2_squared_exact,
    necessity_bound_check,
    real_witness,
)
from ._errors import (
    BombieriError,
    DimensionGuardError,
    DimensionMismatchError,
    NotHomogeneousError,
    PolynomialSyntaxError,
    PreconditionError,
)
from ._extremal import (
    extremal_ratios,
    gram_matrix,
    pinasco_table,
    sandwich,
    sup_on_sphere,
)
from ._fockcheck import bargmann_inner_quadrature
from ._groebner import (
    GroebnerBasis,
    MonomialOrder,
    VarietyVerdict,
    buchberger,
    gradient_rank,
    is_amenable,
    reduce,
    variety_only_origin,
)
from ._ksexp import KSReport, find_common_zero, ks_exponent, scan_levels
from ._log import LOG
from ._models import Config, OrderKind
from ._polycore import (
    GaussianRational,
    I,
    Polynomial,
    conjugate_star,
    diff,
    evaluate,
    linear_pairing_power,
    multiply,
)
from ._polyparse import format_poly, parse_poly
from ._report import Report
from ._reproduce import reproduce_examples
from ._verify import run_identity_suites
from .integrations import BombieriJSONFormatter

_log: Logger | None = None

# Set up logging to ``/dev/null`` like a library is supposed to.
# http://docs.python.org/3.3/howto/logging.html#configuring-logging-for-a-library
LOG.addHandler(NullHandler())


def version():
    from importlib.metadata import version as _version

    return _version('bombieri')


def _get_bombieri_logger() -> Logger:
    global _log

    if _log is None:
        init()
        _log = get_logger('bombieri')

    return _log


def critical(msg, *args, **kwargs):
    """Log 'msg' with severity 'CRITICAL' on the configured logger."""
    _get_bombieri_logger().critical(msg, *args, **kwargs)


def error(msg, *args, **kwargs):
    """Log 'msg' with severity 'ERROR' on the configured logger."""
    _get_bombieri_logger().error(msg, *args, **kwargs)


def exception(msg, *args, exc_info=True, **kwargs):
    """Log 'msg' with severity 'ERROR', plus the active traceback."""
    error(msg, *args, exc_info=exc_info, **kwargs)


def warning(msg, *args, **kwargs):
    _get_bombieri_logger().warning(msg, *args, **kwargs)


def info(msg, *args, **kwargs):
    _get_bombieri_logger().info(msg, *args, **kwargs)


def debug(msg, *args, **kwargs):
    _get_bombieri_logger().debug(msg, *args, **kwargs)


def log(level, msg, *args, **kwargs):
    """
    Log 'msg % args' with the integer severity 'level' on the configured
    logger.
    """
    _get_bombieri_logger().log(level, msg, *args, **kwargs)
