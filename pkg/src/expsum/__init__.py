"""Differential entropy of sums of two independent exponential variables.

Closed forms for the two-phase hypoexponential entropy and its derived
quantities (additive exponential noise mutual information, gate-conditioned
dwell-time entropy, Erlang-2 limit), together with independent quadrature
and Monte-Carlo oracles and a CLI that reproduces the figure data sets.
"""

from .dist import (
    DEGENERACY_RTOL,
    Erlang2,
    Exponential,
    HypoexpTwo,
    RatePair,
    hypoexp_cdf,
    hypoexp_log_pdf,
    hypoexp_mean,
    hypoexp_pdf,
    sample_hypoexp,
)
from .entropy import (
    EntropyNats,
    LightGatedModel,
    cond_entropy_light,
    erlang2_entropy,
    exp_entropy,
    hypoexp_entropy,
    mean_constrained_rates,
    mutual_info_aen,
)
from .oracle import (
    ConvergenceError,
    EstimateWithError,
    QuadratureConfig,
    entropy_monte_carlo,
    entropy_quadrature,
    gr_log_integral,
    normalization_quadrature,
)
from .specfun import EULER_GAMMA, digamma, digamma_minus_log, euler_gamma

__version__ = "0.1.0"

__all__ = [
    "DEGENERACY_RTOL",
    "EULER_GAMMA",
    "ConvergenceError",
    "EntropyNats",
    "Erlang2",
    "EstimateWithError",
    "Exponential",
    "HypoexpTwo",
    "LightGatedModel",
    "QuadratureConfig",
    "RatePair",
    "cond_entropy_light",
    "digamma",
    "digamma_minus_log",
    "entropy_monte_carlo",
    "entropy_quadrature",
    "erlang2_entropy",
    "euler_gamma",
    "exp_entropy",
    "gr_log_integral",
    "hypoexp_cdf",
    "hypoexp_entropy",
    "hypoexp_log_pdf",
    "hypoexp_mean",
    "hypoexp_pdf",
    "mean_constrained_rates",
    "mutual_info_aen",
    "normalization_quadrature",
    "sample_hypoexp",
    "__version__",
]
