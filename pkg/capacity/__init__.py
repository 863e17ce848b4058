"""Capacity loss closed forms and ergodic capacity estimators."""

from .loss import (CapacityLoss, loss_kappa_mu_shadowed, loss_kappa_mu, loss_eta_mu,
                   loss_table2, LOG2E, RAYLEIGH_LOSS)
from .ergodic import (EstimateCI, asymptotic_capacity, ergodic_capacity_quadrature,
                      ergodic_capacity_mc)
from .oracle import af_derivative_oracle, loss_oracle
