"""Generalized hypergeometric series with explicit convergence control

The series is summed in blocks of terms whose size doubles after every
block, so that short series stay cheap and long ones (arguments close to 1,
large ``1F1`` arguments) need only a handful of numpy calls.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, NonConvergence

LOG = logging.getLogger(__name__)

FIRST_BLOCK = 64
MAX_BLOCK = 1 << 16
# terms of the 1F1 large-argument expansion are only tried beyond this argument
ASYMPTOTIC_Z = 1.0e3
ASYMPTOTIC_TERMS = 200
# below this many factors the Pochhammer symbol is a plain product
DIRECT_PRODUCT_TERMS = 64


@dataclass(frozen=True)
class SeriesControl:
    """Stopping rule of every series evaluation

    Args:
        rel_tol: a term is negligible once |term| <= rel_tol * |partial sum|;
            summation stops after two consecutive negligible terms
        max_terms: term budget, NonConvergence is raised beyond it
    """
    rel_tol: float = 1e-12
    max_terms: int = 100000

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError('rel_tol must lie in (0, 1), got {}'.format(self.rel_tol))
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError('max_terms must be a positive integer, got {}'.format(self.max_terms))


DEFAULT_CONTROL = SeriesControl()


def _is_nonpositive_integer(value):
    return value <= 0 and float(value).is_integer()


@dataclass(frozen=True)
class PFQParams:
    """Pochhammer bases and scalar argument of pFq(a_1..a_p; b_1..b_q; x)"""
    numerators: tuple
    denominators: tuple
    argument: float

    def __post_init__(self):
        object.__setattr__(self, 'numerators', tuple(float(a) for a in self.numerators))
        object.__setattr__(self, 'denominators', tuple(float(b) for b in self.denominators))
        object.__setattr__(self, 'argument', float(self.argument))
        for b in self.denominators:
            if _is_nonpositive_integer(b):
                raise DomainError('denominator {} is zero or a negative integer'.format(b))
        values = self.numerators + self.denominators + (self.argument,)
        if not all(math.isfinite(v) for v in values):
            raise DomainError('non-finite series parameter in {}'.format(self))

    @property
    def p(self):
        return len(self.numerators)

    @property
    def q(self):
        return len(self.denominators)

    @property
    def last_term(self):
        """Index of the last nonzero term of a terminating series, else None"""
        stops = [int(-a) for a in self.numerators if _is_nonpositive_integer(a)]
        return min(stops) if stops else None

    def check_domain(self):
        if self.last_term is not None or self.argument == 0.0:
            return
        if self.p > self.q + 1:
            raise DomainError('{}F{} diverges for x != 0'.format(self.p, self.q))
        if self.p == self.q + 1 and abs(self.argument) >= 1.0:
            raise DomainError('{}F{} needs |x| < 1, got x={}'.format(
                self.p, self.q, self.argument))


def pochhammer(a, r):
    """Rising factorial (a)_r = a (a+1) ... (a+r-1), (a)_0 = 1"""
    if r < 0 or int(r) != r:
        raise DomainError('Pochhammer index must be a nonnegative integer, got {}'.format(r))
    r = int(r)
    if r == 0:
        return 1.0
    if r <= DIRECT_PRODUCT_TERMS or a <= 0:
        return float(np.prod(a + np.arange(r, dtype=float)))
    return float(np.exp(gammaln(a + r) - gammaln(a)))


def _term_ratios(params, start, stop):
    """t_{r+1} / t_r for r in [start, stop)"""
    r = np.arange(start, stop, dtype=float)
    ratio = params.argument / (r + 1.0)
    for a in params.numerators:
        ratio = ratio * (a + r)
    for b in params.denominators:
        ratio = ratio / (b + r)
    return ratio


def _negligible_pairs(small, carry):
    """Index of the first term closing two consecutive negligible terms"""
    previous = np.concatenate(([carry], small[:-1]))
    hits = np.flatnonzero(small & previous)
    return int(hits[0]) if hits.size else None


def _summation(params, ctrl, keep_partials):
    params.check_domain()
    last = params.last_term
    if params.argument == 0.0 or last == 0:
        return 1.0, np.ones(1)
    if last is not None and last + 1 <= ctrl.max_terms:
        terms = np.concatenate(([1.0], np.cumprod(_term_ratios(params, 0, last))))
        partials = np.cumsum(terms)
        return float(partials[-1]), partials

    collected = [np.ones(1)] if keep_partials else None
    total, term, carry = 1.0, 1.0, False
    start, block = 0, FIRST_BLOCK
    while start < ctrl.max_terms:
        stop = min(start + block, ctrl.max_terms)
        terms = term * np.cumprod(_term_ratios(params, start, stop))
        partials = total + np.cumsum(terms)
        if not np.all(np.isfinite(partials)):
            raise NonConvergence('series overflowed', params, stop, total)
        small = np.abs(terms) <= ctrl.rel_tol * np.abs(partials)
        hit = _negligible_pairs(small, carry)
        if hit is not None:
            if keep_partials:
                collected.append(partials[:hit + 1])
            LOG.debug('%dF%d converged after %d terms', params.p, params.q, start + hit + 2)
            return float(partials[hit]), (np.concatenate(collected) if keep_partials else None)
        if keep_partials:
            collected.append(partials)
        total, term, carry = float(partials[-1]), float(terms[-1]), bool(small[-1])
        start, block = stop, min(2 * block, MAX_BLOCK)
    raise NonConvergence('term budget of {} exhausted for {}'.format(ctrl.max_terms, params),
                         params, ctrl.max_terms, total)


def hyp_pfq(params, ctrl=None):
    """Generalized hypergeometric function pFq of one real argument

    Partial sums are accumulated until two successive terms are both below
    ``ctrl.rel_tol`` times the current sum, or the series terminates.

    Raises:
        DomainError: p = q+1 with |x| >= 1 (or p > q+1) and no terminating numerator
        NonConvergence: the term budget ``ctrl.max_terms`` is exhausted
    """
    total, _ = _summation(params, ctrl or DEFAULT_CONTROL, keep_partials=False)
    return total


def hyp_pfq_partial_sums(params, ctrl=None):
    """All partial sums S_0, S_1, ... up to the one returned by hyp_pfq"""
    _, partials = _summation(params, ctrl or DEFAULT_CONTROL, keep_partials=True)
    return partials


def pfq(numerators, denominators, argument, ctrl=None):
    return hyp_pfq(PFQParams(tuple(numerators), tuple(denominators), argument), ctrl)


def _log_terms(params, start, stop, log_x):
    """log t_r for r in [start, stop) when every base is positive"""
    r = np.arange(start, stop, dtype=float)
    log_t = r * log_x - gammaln(r + 1.0)
    for a in params.numerators:
        log_t += gammaln(a + r) - gammaln(a)
    for b in params.denominators:
        log_t -= gammaln(b + r) - gammaln(b)
    return log_t


def log_hyp_pfq(params, ctrl=None):
    """log pFq for series whose terms are all positive

    Every numerator and denominator must be positive and x >= 0. Terms and
    partial sums are carried as logarithms, so the result stays finite
    where pFq itself overflows.
    """
    ctrl = ctrl or DEFAULT_CONTROL
    params.check_domain()
    if params.argument == 0.0:
        return 0.0
    if params.argument < 0 or min(params.numerators + params.denominators, default=1.0) <= 0:
        raise DomainError('log-space summation needs positive bases and x >= 0: {}'.format(params))
    log_x, log_tol = math.log(params.argument), math.log(ctrl.rel_tol)
    log_total, carry = 0.0, False
    start, block = 1, FIRST_BLOCK
    while start < ctrl.max_terms:
        stop = min(start + block, ctrl.max_terms)
        log_t = _log_terms(params, start, stop, log_x)
        running = np.logaddexp.accumulate(np.concatenate(([log_total], log_t)))[1:]
        small = log_t <= log_tol + running
        hit = _negligible_pairs(small, carry)
        if hit is not None:
            LOG.debug('log %dF%d converged after %d terms', params.p, params.q, start + hit + 1)
            return float(running[hit])
        log_total, carry = float(running[-1]), bool(small[-1])
        start, block = stop, min(2 * block, MAX_BLOCK)
    raise NonConvergence('term budget of {} exhausted for {}'.format(ctrl.max_terms, params),
                         params, ctrl.max_terms, log_total)


def _log_hyp1f1_asymptotic(a, b, z, ctrl):
    """Large-z expansion, None when its terms grow before reaching rel_tol"""
    s = np.arange(ASYMPTOTIC_TERMS, dtype=float)
    terms = np.concatenate(([1.0], np.cumprod((b - a + s) * (1.0 - a + s) / ((s + 1.0) * z))))
    sums = np.cumsum(terms)
    small = np.abs(terms) <= ctrl.rel_tol * np.abs(sums)
    growing = np.abs(terms[1:]) > np.abs(terms[:-1])
    done = np.flatnonzero(small)
    if not done.size or (growing[:done[0]].any() if done[0] > 0 else False):
        return None
    total = sums[done[0]]
    if total <= 0:
        return None
    return float(gammaln(b) - gammaln(a) + z + (a - b) * math.log(z) + math.log(total))


def log_hyp1f1(a, b, z, ctrl=None):
    """log 1F1(a; b; z) for a, b > 0 and z >= 0"""
    ctrl = ctrl or DEFAULT_CONTROL
    if z > ASYMPTOTIC_Z:
        value = _log_hyp1f1_asymptotic(a, b, z, ctrl)
        if value is not None:
            return value
        LOG.debug('asymptotic 1F1(%g; %g; %g) did not settle, summing the series', a, b, z)
    return log_hyp_pfq(PFQParams((a,), (b,), z), ctrl)
