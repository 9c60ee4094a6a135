"""Numerical toolkit for Mittag-Leffler type functions, their Fox-Wright
representations, and Riemann-Liouville / Saigo / Saigo-Maeda fractional
calculus, with independent quadrature and contour oracles."""

from . import families
from .families import (
    BesselWright,
    EvalResult,
    FoxWrightSpec,
    Four,
    KFunction,
    KilbasSaigo,
    LommelWright,
    MSeries,
    MultiIndex,
    MultipleML,
    One,
    Six,
    Three,
    Two,
    WrightPhi,
)
from .gammakit import (
    ConvergenceReport,
    OrderType,
    PochhammerSpec,
    classify_convergence,
    empirical_order,
    log_gamma,
    order_and_type,
    poch,
    pochhammer,
    reciprocal_gamma,
)
from .series import (
    fox_wright_eval,
    hypergeometric_reduction_check,
    ml_eval,
    pfq_series,
    reduce_to_fox_wright,
    series_eval,
)

__version__ = "0.1.0"
