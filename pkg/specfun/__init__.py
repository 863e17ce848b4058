"""Special functions behind the fading formulas, with convergence control."""

from .errors import FadingLabError, DomainError, NonConvergence, QuadratureFailure
from .series import (SeriesControl, PFQParams, DEFAULT_CONTROL, pochhammer,
                     hyp_pfq, hyp_pfq_partial_sums, pfq, log_hyp_pfq, log_hyp1f1)
from .gamma import ln_gamma, digamma, upper_incomplete_gamma
from .bessel import bessel_i, log_bessel_i
from .factory import series_cli, series_factory
