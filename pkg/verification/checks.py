"""Invariant suite behind the ``verify`` subcommand

Each check returns a CheckResult; a check passes when its largest observed
error stays within its tolerance (and any structural condition holds).
``VerifyContext.tolerance`` replaces every default tolerance when set.
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from specfun.errors import NonConvergence, QuadratureFailure
from channel_models.params import (ShadowedParams, OneSidedGaussian, Rayleigh, NakagamiM,
                                   NakagamiQ, Rician, KappaMu, EtaMu, RicianShadowed,
                                   KappaMuShadowed)
from channel_models.reduction import DEFAULT_POLICY, reduce_to_shadowed, is_limit_row
from channel_models.density import (pdf_kappa_mu_shadowed, pdf_kappa_mu, pdf_eta_mu, pdf_gamma,
                                    tail_bound)
from channel_models.moments import moment
from capacity.loss import loss_kappa_mu_shadowed, loss_eta_mu, loss_table2
from capacity.ergodic import (asymptotic_capacity, ergodic_capacity_quadrature,
                              ergodic_capacity_mc)
from capacity.oracle import loss_oracle
from physical_sampler.generative import CommonShadow, IidShadow
from physical_sampler.gof import TabulatedCdf, chi_square_gof, ALPHA
from physical_sampler.sampler import sample, sample_conditional
from physical_sampler.streams import derive_seed
from utils.quadrature import integrate_pieces
from utils.util import db_to_linear

LOG = logging.getLogger(__name__)

REFERENCE_KMS = ShadowedParams(1.5, 1.2, 2.3)
GOF_SAMPLES = 100000
ORACLE_MAX_ARGUMENT = 0.99
# random parameter triples per check
NORMALIZATION_POINTS = 200
MOMENT_POINTS = 50
ORACLE_POINTS = 100
NONNEGATIVE_POINTS = 100


@dataclass
class VerifyContext:
    seed: int = 0
    mc_samples: int = 1000000
    tolerance: float = None
    points: int = None
    policy: object = DEFAULT_POLICY
    ctrl: object = None

    def tol(self, default):
        return default if self.tolerance is None else self.tolerance

    def count(self, default):
        """number of random triples, ``points`` when set"""
        return default if self.points is None else self.points

    def rng(self, key):
        return np.random.default_rng(derive_seed(self.seed, key))


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_error: float = None
    tolerance: float = None
    detail: dict = field(default_factory=dict)

    def as_dict(self):
        def clean(value):
            return None if value is None or not math.isfinite(value) else float(value)
        return {'name': self.name, 'passed': bool(self.passed),
                'max_error': clean(self.max_error), 'tolerance': clean(self.tolerance),
                'detail': self.detail}


def _within(name, errors, tolerance, **detail):
    worst = float(np.max(errors)) if len(errors) else 0.0
    return CheckResult(name, bool(worst <= tolerance), worst, tolerance, detail)


def _random_triples(rng, count, max_argument=None):
    triples = []
    while len(triples) < count:
        kappa, mu, m = rng.uniform(0, 20), rng.uniform(0.5, 20), rng.uniform(0.5, 20)
        if max_argument is None or mu * kappa / (mu * kappa + m) <= max_argument:
            triples.append((kappa, mu, m))
    return triples


def check_table2_anchors(ctx):
    errors = [abs(loss_table2(Rayleigh()).loss_bits - 0.8327),
              abs(loss_table2(OneSidedGaussian()).loss_bits - 1.8327)]
    return _within('table2_anchors', errors, ctx.tol(5e-4))


def check_exact_reduction_pdf(ctx):
    grid = np.linspace(0.0, 5.0, 50)
    eta_mu = reduce_to_shadowed(EtaMu(0.5, 1.2), ctx.policy)
    errors = np.abs(pdf_eta_mu(0.5, 1.2, 1.0, grid, ctx.ctrl)
                    - pdf_kappa_mu_shadowed(eta_mu, grid, ctx.ctrl))
    gamma_row = ShadowedParams(2.0, 1.7, 1.7)
    errors = np.concatenate((errors, np.abs(pdf_gamma(1.7, 1.7, grid)
                                            - pdf_kappa_mu_shadowed(gamma_row, grid, ctx.ctrl))))
    return _within('exact_reduction_pdf', errors, ctx.tol(1e-10), points=int(errors.size))


def check_exact_reduction_loss(ctx):
    errors = [abs(loss_eta_mu(0.5, 1.2, ctx.ctrl).loss_bits
                  - loss_kappa_mu_shadowed(0.5, 2.4, 1.2, ctx.ctrl).loss_bits),
              abs(loss_table2(NakagamiM(m=1.7)).loss_bits
                  - loss_kappa_mu_shadowed(2.0, 1.7, 1.7, ctx.ctrl).loss_bits)]
    return _within('exact_reduction_loss', errors, ctx.tol(1e-9))


def check_limit_convergence(ctx):
    grid = np.linspace(0.0, 10.0, 101)
    target = pdf_kappa_mu(2.7, 2.4, 1.0, grid, ctx.ctrl)
    m_distances = [float(np.max(np.abs(
        pdf_kappa_mu_shadowed(ShadowedParams(2.7, 2.4, m), grid, ctx.ctrl) - target)))
        for m in (1e2, 1e3, 1e4)]
    target = pdf_gamma(1.5, 1.5, grid)
    kappa_distances = [float(np.max(np.abs(
        pdf_kappa_mu_shadowed(ShadowedParams(kappa, 1.5, 2.3), grid, ctx.ctrl) - target)))
        for kappa in (1e-3, 1e-6, 1e-9)]
    tolerance = ctx.tol(1e-3)
    decreasing = all(np.diff(m_distances) < 0) and all(np.diff(kappa_distances) < 0)
    worst = max(m_distances[-1], kappa_distances[-1])
    return CheckResult('limit_convergence', bool(decreasing and worst <= tolerance), worst,
                       tolerance, {'m_distances': m_distances, 'kappa_distances': kappa_distances})


def check_normalization(ctx):
    errors = []
    count = ctx.count(NORMALIZATION_POINTS)
    for kappa, mu, m in _random_triples(ctx.rng(1), count):
        p = ShadowedParams(kappa, mu, m)
        upper = tail_bound(p, 1e-12)
        total, _ = integrate_pieces(lambda g: pdf_kappa_mu_shadowed(p, g, ctx.ctrl), 0.0, upper,
                                    1e-9, [b for b in (1e-3, 1e-1, 1.0, 10.0) if b < upper])
        errors.append(abs(total - 1.0))
    return _within('normalization', errors, ctx.tol(1e-6), points=count)


def check_moments(ctx):
    errors = []
    for kappa, mu, m in _random_triples(ctx.rng(2), ctx.count(MOMENT_POINTS)):
        p = ShadowedParams(kappa, mu, m)
        upper = tail_bound(p, 1e-16)
        for n in (1, 2, 3, 4):
            value, _ = integrate_pieces(
                lambda g: g ** n * pdf_kappa_mu_shadowed(p, g, ctx.ctrl), 0.0, upper, 1e-10,
                [b for b in (1e-1, 1.0, 10.0) if b < upper])
            errors.append(abs(moment(p, n, ctx.ctrl) / value - 1.0))
    return _within('moments', errors, ctx.tol(1e-8))


def check_loss_oracle(ctx):
    errors = []
    count = ctx.count(ORACLE_POINTS)
    for kappa, mu, m in _random_triples(ctx.rng(3), count, ORACLE_MAX_ARGUMENT):
        p = ShadowedParams(kappa, mu, m)
        errors.append(abs(loss_kappa_mu_shadowed(kappa, mu, m, ctx.ctrl).loss_bits
                          - loss_oracle(p, ctrl=ctx.ctrl)))
    return _within('loss_oracle', errors, ctx.tol(1e-5), points=count)


def check_loss_nonnegative(ctx):
    count = ctx.count(NONNEGATIVE_POINTS)
    losses = [loss_kappa_mu_shadowed(kappa, mu, m, ctx.ctrl).loss_bits
              for kappa, mu, m in _random_triples(ctx.rng(4), count)]
    smallest = min(losses)
    return CheckResult('loss_nonnegative', bool(smallest >= 0.0), None, None,
                       {'smallest_loss': smallest, 'points': count})


REDUCTION_MODELS = (OneSidedGaussian(), Rayleigh(), NakagamiM(m=1.5), NakagamiQ(q=0.2),
                    Rician(K=10.0), KappaMu(kappa=2.7, mu=2.4), EtaMu(eta=0.5, mu=1.2),
                    RicianShadowed(K=10.0, m=2.3))


def _reduction_errors(ctx, limit):
    errors = {}
    for model in REDUCTION_MODELS:
        if is_limit_row(model) != limit:
            continue
        p = reduce_to_shadowed(model, ctx.policy)
        errors[model.tag] = abs(loss_table2(model, ctx.ctrl).loss_bits
                                - loss_kappa_mu_shadowed(p.kappa, p.mu, p.m, ctx.ctrl).loss_bits)
    return errors


def check_reduction_coherence_exact(ctx):
    errors = _reduction_errors(ctx, limit=False)
    return _within('reduction_coherence_exact', list(errors.values()), ctx.tol(1e-9), **errors)


def check_reduction_coherence_limit(ctx):
    errors = _reduction_errors(ctx, limit=True)
    return _within('reduction_coherence_limit', list(errors.values()), ctx.tol(1e-4), **errors)


def check_trends(ctx):
    kappas = np.linspace(0.0, 20.0, 21)

    def curve(mu, m):
        return np.array([loss_kappa_mu_shadowed(k, mu, m, ctx.ctrl).loss_bits for k in kappas])
    increasing = all(np.all(np.diff(curve(mu, 0.5)) > 0) for mu in (1.0, 3.0))
    decreasing = all(np.all(np.diff(curve(mu, 20.0)) < 0) for mu in (0.5, 3.0))
    flat = [float(np.ptp(curve(mu, mu))) for mu in (0.7, 1.5, 3.0)]
    mus = (0.5, 0.7, 1.0, 1.5, 3.0, 20.0)
    by_mu = np.array([loss_kappa_mu_shadowed(2.0, mu, 3.0, ctx.ctrl).loss_bits for mu in mus])
    mu_decreasing = bool(np.all(np.diff(by_mu) < 0))
    result = _within('trends', flat, ctx.tol(1e-9), increasing=increasing, decreasing=decreasing,
                     mu_decreasing=mu_decreasing)
    result.passed = result.passed and increasing and decreasing and mu_decreasing
    return result


def check_eta_symmetry(ctx):
    errors = [abs(loss_eta_mu(eta, 1.2, ctx.ctrl).loss_bits
                  - loss_eta_mu(1.0 / eta, 1.2, ctx.ctrl).loss_bits) for eta in (0.01, 0.1, 0.5)]
    errors.append(abs(loss_eta_mu(1.5, 1.2, ctx.ctrl, use_symmetry=False).loss_bits
                      - loss_eta_mu(1.0 / 1.5, 1.2, ctx.ctrl).loss_bits))
    return _within('eta_symmetry', errors, ctx.tol(1e-9))


def _gof_cases(ctx):
    rician = reduce_to_shadowed(Rician(K=10.0), ctx.policy)
    hoyt = reduce_to_shadowed(NakagamiQ(q=0.2), ctx.policy)
    cases = [('conditional kms(1.5, 1.2, 2.3)', REFERENCE_KMS, None)]
    for name, p in (('rician K=10', rician), ('hoyt q=0.2', hoyt)):
        cases.append(('conditional ' + name, p, None))
        cases.append(('physical ' + name, p, CommonShadow.from_params(p)))
        cases.append(('iid ' + name, p, IidShadow.from_params(p)))
    return cases


def check_sampler_gof(ctx):
    """Chi-square p-value of every case must exceed ALPHA"""
    cases = _gof_cases(ctx)
    count = min(ctx.mc_samples, GOF_SAMPLES)
    tables, p_values = {}, {}
    for k, (name, p, model) in enumerate(cases):
        seed = derive_seed(ctx.seed, 10, k)
        if model is None:
            batch = sample_conditional(p, count, seed)
        else:
            batch = sample(model, p.gamma_bar, count, seed)
        if p not in tables:
            tables[p] = TabulatedCdf.shadowed(p, ctx.ctrl)
        p_values[name] = chi_square_gof(batch.snr_values, tables[p]).p_value
    worst = min(p_values.values())
    return CheckResult('sampler_gof', bool(worst > ALPHA), None, None,
                       {'p_values': p_values, 'level': ALPHA, 'samples': count})


CAPACITY_MODELS = (Rayleigh(), Rician(K=10.0), KappaMu(kappa=2.7, mu=2.4), EtaMu(eta=0.5, mu=1.2),
                   KappaMuShadowed(1.5, 1.2, 2.3))


def check_mc_asymptote(ctx):
    gamma_bar = float(db_to_linear(30.0))
    low = float(db_to_linear(15.0))
    errors, shrinking = {}, True
    for k, model in enumerate(CAPACITY_MODELS):
        p = reduce_to_shadowed(model.with_gamma_bar(gamma_bar), ctx.policy)
        estimate = ergodic_capacity_mc(
            sample_conditional(p, ctx.mc_samples, derive_seed(ctx.seed, 20, k)))
        errors[model.tag] = abs(estimate.mean - asymptotic_capacity(model, gamma_bar, ctx.ctrl))
        gap_high = abs(ergodic_capacity_quadrature(model, gamma_bar, policy=ctx.policy, ctrl=ctx.ctrl)
                       - asymptotic_capacity(model, gamma_bar, ctx.ctrl))
        gap_low = abs(ergodic_capacity_quadrature(model, low, policy=ctx.policy, ctrl=ctx.ctrl)
                      - asymptotic_capacity(model, low, ctx.ctrl))
        shrinking = shrinking and gap_high < gap_low
    result = _within('mc_asymptote', list(errors.values()), ctx.tol(0.05),
                     samples=ctx.mc_samples, gap_shrinks=shrinking, **errors)
    result.passed = result.passed and shrinking
    return result


def check_asymptotic_exactness(ctx):
    detail, ok = {}, True
    for model in CAPACITY_MODELS:
        gaps = []
        for db in (20.0, 40.0):
            g = float(db_to_linear(db))
            gaps.append(ergodic_capacity_quadrature(model, g, policy=ctx.policy, ctrl=ctx.ctrl)
                        - asymptotic_capacity(model, g, ctx.ctrl))
        detail[model.tag] = gaps
        ok = ok and abs(gaps[1]) <= abs(gaps[0])
    return CheckResult('asymptotic_exactness', ok, None, None, {'signed_gaps_20_40_db': detail})


def check_determinism(ctx):
    first = sample_conditional(REFERENCE_KMS, 1000, ctx.seed).snr_values
    second = sample_conditional(REFERENCE_KMS, 1000, ctx.seed).snr_values
    return CheckResult('determinism', bool(np.array_equal(first, second)))


CHECKS = (
    check_table2_anchors,
    check_exact_reduction_pdf,
    check_exact_reduction_loss,
    check_limit_convergence,
    check_normalization,
    check_moments,
    check_loss_oracle,
    check_loss_nonnegative,
    check_reduction_coherence_exact,
    check_reduction_coherence_limit,
    check_trends,
    check_eta_symmetry,
    check_sampler_gof,
    check_mc_asymptote,
    check_asymptotic_exactness,
    check_determinism,
)


def run_checks(ctx, checks=CHECKS, progress=None):
    """Run ``checks`` in order; numeric failures inside a check fail that check"""
    results = []
    for check in (progress(checks) if progress else checks):
        name = check.__name__[len('check_'):]
        try:
            result = check(ctx)
        except (NonConvergence, QuadratureFailure) as exc:
            result = CheckResult(name, False, detail={'error': str(exc)})
        LOG.info({'type': 'check', **result.as_dict()})
        results.append(result)
    return results
