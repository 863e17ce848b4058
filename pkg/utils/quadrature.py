"""Adaptive quadrature with failures raised instead of warned"""
import logging
import warnings

from scipy import integrate

from specfun.errors import QuadratureFailure

LOG = logging.getLogger(__name__)

QUAD_LIMIT = 200


def integrate_pieces(func, lower, upper, tol=1e-10, breakpoints=(), **quad_kwargs):
    """Integrate ``func`` over [lower, upper] piece by piece

    The interval is split at the ``breakpoints`` that fall inside it; each
    piece is handed to ``scipy.integrate.quad`` with an equal share of the
    absolute tolerance ``tol``.

    Returns:
        (value, abserr) where abserr is the summed error estimate

    Raises:
        QuadratureFailure: quad warned, or the error estimate exceeds tol
    """
    if upper < lower:
        raise ValueError('integration bounds reversed: [{}, {}]'.format(lower, upper))
    if upper == lower:
        return 0.0, 0.0
    edges = sorted({lower, upper} | {b for b in breakpoints if lower < b < upper})
    share = tol / (len(edges) - 1)
    value, abserr = 0.0, 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        with warnings.catch_warnings():
            warnings.simplefilter('error', integrate.IntegrationWarning)
            try:
                piece, err = integrate.quad(func, a, b, epsabs=share, epsrel=share,
                                            limit=QUAD_LIMIT, **quad_kwargs)
            except integrate.IntegrationWarning as exc:
                raise QuadratureFailure('quad failed on [{}, {}]: {}'.format(a, b, exc),
                                        (a, b), None, tol) from exc
        value += piece
        abserr += err
    if abserr > max(tol, tol * abs(value)):
        raise QuadratureFailure('error estimate {:.3e} above tolerance {:.3e}'.format(abserr, tol),
                                (lower, upper), abserr, tol)
    LOG.debug('quad over [%g, %g]: %.15g (err %.2e)', lower, upper, value, abserr)
    return value, abserr


def integrate_unit_weighted(func, alpha, beta, tol=1e-11):
    """Integral over [0, 1] of func(s) * s^alpha * (1-s)^beta"""
    return integrate_pieces(func, 0.0, 1.0, tol, weight='alg', wvar=(alpha, beta))
