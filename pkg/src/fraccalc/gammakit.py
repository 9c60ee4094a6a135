"""Complex gamma machinery, Pochhammer symbols and convergence classification.

Everything downstream (series evaluators, contour oracles, fractional
operators) is built on the helpers in this module.  All functions are pure;
values are plain complex numbers and frozen dataclasses.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import loggamma as _sp_loggamma

from .errors import DegenerateInput, PoleError, UnsupportedRegime

#: proximity threshold used to decide that a complex number *is* a
#: non-positive integer (gamma pole)
POLE_TOL = 1e-12


def is_nonpositive_int(z: complex, tol: float = POLE_TOL) -> bool:
    """True when ``z`` lies within ``tol`` of 0, -1, -2, ..."""
    z = complex(z)
    k = round(z.real)
    return k <= 0 and abs(z.real - k) <= tol and abs(z.imag) <= tol


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma.

    Raises
    ------
    PoleError
        If ``z`` is a non-positive integer (within ``POLE_TOL``).
    """
    if is_nonpositive_int(z):
        raise PoleError(f"log_gamma pole at z={z!r}")
    out = complex(_sp_loggamma(complex(z)))
    if out != out:  # NaN guard: scipy returns nan only at exact poles
        raise PoleError(f"log_gamma pole at z={z!r}")
    return out


def gamma(z: complex) -> complex:
    """Gamma function via the principal-branch log."""
    return cmath.exp(log_gamma(z))


def reciprocal_gamma(z: complex) -> complex:
    """Entire function 1/Gamma(z); exactly 0 at the poles of Gamma.

    Returning an exact zero makes the term-skipping in asymptotic and
    Mellin-Barnes series automatic: coefficients whose gamma denominator
    sits at a pole simply vanish.
    """
    if is_nonpositive_int(z):
        return 0.0 + 0.0j
    return cmath.exp(-log_gamma(z))


def log_rgamma(z: complex):
    """log of 1/Gamma(z), or ``None`` when 1/Gamma(z) = 0 (gamma pole)."""
    if is_nonpositive_int(z):
        return None
    return -log_gamma(z)


# ---------------------------------------------------------------------------
# Pochhammer symbols
# ---------------------------------------------------------------------------

_PRODUCT_CUTOFF = 64


@dataclass(frozen=True)
class PochhammerSpec:
    """Rising-factorial request.

    kind:
        "standard"  (lam)_n = lam (lam+1) ... (lam+n-1)
        "extended"  (lam)_{s n} = Gamma(lam + s n) / Gamma(lam),  s >= 0 real
        "k-symbol"  (lam)_{n,k} = lam (lam+k) ... (lam+(n-1)k),   k > 0 real
    ``step`` carries s (extended) or k (k-symbol); it is ignored for the
    standard kind.
    """

    base: complex
    n: int
    kind: str = "standard"
    step: float = 1.0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("count n must be a nonnegative integer")
        if self.kind not in ("standard", "extended", "k-symbol"):
            raise ValueError(f"unknown Pochhammer kind {self.kind!r}")
        if self.kind == "extended" and self.step < 0:
            raise ValueError("extended step s must be >= 0")
        if self.kind == "k-symbol" and self.step <= 0:
            raise ValueError("k-symbol step k must be > 0")


def _poch_product(lam: complex, n: int, step: complex = 1.0) -> complex:
    out = 1.0 + 0.0j
    for j in range(n):
        out *= lam + j * step
    return out


def _poch_gamma_ratio(lam: complex, shift: complex) -> complex:
    # (lam)_shift = Gamma(lam + shift)/Gamma(lam); PoleError if either gamma
    # sits at a pole (the terminating cases are handled by the product form).
    return cmath.exp(log_gamma(lam + shift) - log_gamma(lam))


def pochhammer(spec: PochhammerSpec) -> complex:
    """Evaluate a (possibly generalized) Pochhammer symbol.

    The standard symbol uses the direct product for n <= 64 (and whenever a
    gamma pole would make the ratio form ill-defined), the gamma-ratio form
    otherwise.  (lam)_0 = 1 in every kind.
    """
    lam, n = complex(spec.base), spec.n
    if n == 0 and spec.kind != "extended":
        return 1.0 + 0.0j
    if spec.kind == "standard":
        if n <= _PRODUCT_CUTOFF or is_nonpositive_int(lam):
            return _poch_product(lam, n)
        return _poch_gamma_ratio(lam, n)
    if spec.kind == "k-symbol":
        k = spec.step
        if n <= _PRODUCT_CUTOFF or is_nonpositive_int(lam / k):
            return _poch_product(lam, n, step=k)
        # (x)_{n,k} = k^n (x/k)_n
        return k**n * _poch_gamma_ratio(lam / k, n)
    # extended: (lam)_{s n} with possibly non-integer total shift s*n
    shift = spec.step * n
    if shift == 0:
        return 1.0 + 0.0j
    if is_nonpositive_int(lam):
        raise PoleError(
            "extended Pochhammer needs Gamma(base); base is a non-positive "
            f"integer: {lam!r}"
        )
    return _poch_gamma_ratio(lam, shift)


def poch(lam: complex, n: int) -> complex:
    """Shorthand for the standard rising factorial."""
    return pochhammer(PochhammerSpec(lam, n))


# ---------------------------------------------------------------------------
# Convergence classification for Fox-Wright type series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceReport:
    """Growth/convergence indices of a Fox-Wright series.

    ``kind`` is one of "entire", "disk", "boundary-conditional",
    "divergent".  For the disk cases ``radius`` holds the convergence
    radius; it is ``inf`` for entire series.
    """

    delta: float
    radius: float
    mu_index: complex
    kind: str

    @property
    def is_entire(self) -> bool:
        return self.kind == "entire"


_DELTA_TOL = 1e-12


def classify_convergence(spec) -> ConvergenceReport:
    """Classify a Fox-Wright series from its (coefficient, weight) pairs.

    ``spec`` needs ``upper`` / ``lower`` sequences of (a, weight) pairs with
    real weights.  delta > -1 gives an entire function; delta = -1 gives a
    disk of radius ``prod |w_up|^-w_up * prod |w_lo|^w_lo`` whose boundary
    converges when Re(mu) > 1/2; delta < -1 diverges for every z != 0.
    """
    upper = list(spec.upper)
    lower = list(spec.lower)
    delta = sum(float(w) for _, w in lower) - sum(float(w) for _, w in upper)
    radius = 1.0
    for _, w in upper:
        w = float(w)
        if w != 0.0:
            radius *= abs(w) ** (-w)
    for _, w in lower:
        w = float(w)
        if w != 0.0:
            radius *= abs(w) ** w
    p, q = len(upper), len(lower)
    mu = (
        sum(complex(b) for b, _ in lower)
        - sum(complex(a) for a, _ in upper)
        + (p - q) / 2.0
    )
    if delta > -1.0 + _DELTA_TOL:
        kind = "entire"
        radius = math.inf
    elif abs(delta + 1.0) <= _DELTA_TOL:
        kind = "boundary-conditional" if mu.real > 0.5 else "disk"
    else:
        kind = "divergent"
        radius = 0.0
    return ConvergenceReport(delta=delta, radius=radius, mu_index=mu, kind=kind)


# ---------------------------------------------------------------------------
# Order and type of the entire function families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrderType:
    """Growth indices of an entire function: |f(z)| <~ exp(type |z|^order)."""

    order: float
    type: float | None = None


def order_and_type(params) -> OrderType:
    """Closed-form order/type for the Mittag-Leffler style families.

    Dispatches on the parameter record type from :mod:`fraccalc.families`.
    Raises UnsupportedRegime outside the regimes with a stated formula.
    """
    from . import families as fam

    if isinstance(params, fam.One):
        params = fam.Two(params.alpha, 1.0)
    if isinstance(params, (fam.Two, fam.Three)):
        ra = complex(params.alpha).real
        if ra <= 0:
            raise UnsupportedRegime("order formula needs Re(alpha) > 0")
        return OrderType(order=1.0 / ra, type=1.0)
    if isinstance(params, (fam.Four, fam.Six)):
        ra = complex(params.alpha).real
        rd = complex(params.delta).real
        denom = ra - rd + 1.0
        if denom <= 0 or ra <= 0 or rd <= 0:
            raise UnsupportedRegime("order formula needs Re(alpha-delta+1) > 0")
        rho = 1.0 / denom
        sigma = (rd**rd / ra**ra) ** rho / rho
        return OrderType(order=rho, type=sigma)
    if isinstance(params, fam.KilbasSaigo):
        if params.alpha <= 0 or params.m <= 0:
            raise UnsupportedRegime("Kilbas-Saigo order needs alpha, m > 0")
        return OrderType(order=1.0 / params.alpha, type=1.0 / params.m)
    if isinstance(params, fam.MultiIndex):
        total = sum(float(a) for a, _ in params.pairs)
        if total <= 0:
            raise UnsupportedRegime("multi-index order needs sum(alpha_j) > 0")
        sigma = 1.0
        for a, _ in params.pairs:
            a = float(a)
            if a != 0.0:
                sigma *= (total / abs(a)) ** (a / total)
        return OrderType(order=1.0 / total, type=sigma)
    if isinstance(params, fam.WrightPhi):
        a = float(complex(params.alpha).real)
        if a <= -1:
            raise UnsupportedRegime("Wright phi order needs alpha > -1")
        return OrderType(order=1.0 / (a + 1.0), type=None)
    if isinstance(params, fam.MultipleML):
        a, mu = float(params.alpha), float(params.mu)
        if a <= 0 or mu <= 0:
            raise UnsupportedRegime("multiple-ML order needs alpha, mu > 0")
        return OrderType(order=1.0 / (a * mu), type=None)
    raise UnsupportedRegime(f"no growth formula for {type(params).__name__}")


def empirical_order(coefficients, count: int | None = None) -> float:
    """Finite-n growth-order estimate from Taylor coefficients.

    Uses the limsup ratio n log n / log(1/|c_n|) over the last quarter of
    the available indices, with the Stirling-scale linear term n added to
    the denominator (removes the O(1/log n) bias; exact for c_n = 1/n!).
    """
    c = np.asarray(list(coefficients), dtype=complex)
    if count is None:
        count = len(c)
    c = c[:count]
    if count < 32:
        raise DegenerateInput("need at least 32 coefficients")
    if not np.any(c[1:] != 0):
        raise DegenerateInput("all coefficients beyond index 0 vanish")
    start = (3 * count) // 4
    best = None
    for n in range(max(start, 2), count):
        cn = abs(c[n])
        if cn == 0.0 or cn >= 1.0:
            continue
        est = n * math.log(n) / (math.log(1.0 / cn) + n)
        best = est if best is None else max(best, est)
    if best is None:
        raise DegenerateInput("tail quarter has no usable coefficients")
    return best
