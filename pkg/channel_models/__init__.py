"""Analytic layer: parameter records, reductions, densities and moments."""

from .params import (ShadowedParams, LimitPolicy, FadingModel, Awgn, OneSidedGaussian,
                     Rayleigh, NakagamiM, NakagamiQ, Rician, KappaMu, EtaMu, RicianShadowed,
                     KappaMuShadowed, MODELS)
from .reduction import (DEFAULT_POLICY, reduce_to_shadowed, is_limit_row, hoyt_kappa,
                        eta_mu_folded)
from .density import (pdf_gamma, pdf_kappa_mu_shadowed, log_pdf_kappa_mu_shadowed,
                      pdf_kappa_mu, pdf_eta_mu, pdf_native, tail_bound, cdf_numeric,
                      cumulative_table)
from .moments import normalized_moment, moment, moment_direct, amount_of_fading
from .factory import model_cli, policy_cli, model_factory, policy_factory, gamma_bar_factory, MODEL_FLAGS
