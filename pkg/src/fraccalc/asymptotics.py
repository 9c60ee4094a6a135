"""Large-argument and large-parameter expansions, and the negative
first-parameter extension of the two-parametric function.

Branch convention throughout: z**(1/alpha) = exp(log(z)/alpha) with the
principal logarithm, arg in (-pi, pi]; the complex plane is cut along the
negative real axis.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import families as fam
from .errors import DomainError, ParameterError, SectorError
from .gammakit import log_gamma, log_rgamma, reciprocal_gamma
from .series import ml_eval, term_cap


def default_sector(alpha: float) -> float:
    """Midpoint of the admissible sector bound interval for 0 < alpha < 2."""
    lo = math.pi * alpha / 2.0
    hi = min(math.pi, math.pi * alpha)
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class AsymptoticConfig:
    """Tail length and sector split for the 0 < alpha < 2 expansion.

    ``sector_angle`` must lie in (pi*alpha/2, min(pi, pi*alpha)); ``None``
    picks the midpoint, which maximizes the distance from both constraints.
    """

    term_count: int = 8
    sector_angle: float | None = None

    def resolve_angle(self, alpha: float) -> float:
        if self.sector_angle is None:
            return default_sector(alpha)
        lo = math.pi * alpha / 2.0
        hi = min(math.pi, math.pi * alpha)
        if not (lo < self.sector_angle <= hi):
            raise SectorError(
                f"sector angle {self.sector_angle} outside ({lo}, {hi}] for "
                f"alpha={alpha}"
            )
        return self.sector_angle


def _algebraic_tail(alpha: complex, beta: complex, z: complex, m: int) -> complex:
    # sum_{n=1}^m z^-n / Gamma(beta - alpha n); pole terms vanish exactly
    total = 0.0 + 0.0j
    if z == 0:
        raise DomainError("algebraic expansion needs z != 0")
    lzinv = -cmath.log(z)
    for n in range(1, m + 1):
        rg = reciprocal_gamma(beta - alpha * n)
        if rg != 0:
            total += cmath.exp(n * lzinv) * rg
    return total


def ml2_asymptotic(
    alpha: float, beta: complex, z: complex, cfg: AsymptoticConfig | None = None
) -> complex:
    """Large-|z| expansion of the two-parameter function for 0 < alpha < 2.

    Inside the sector |arg z| <= delta the exponentially large term
    (1/alpha) z^((1-beta)/alpha) exp(z^(1/alpha)) is present (included at
    the boundary by convention); outside only the algebraic part
    -sum_{n=1}^m z^-n / Gamma(beta - alpha n) survives.
    """
    alpha = float(alpha)
    if not (0.0 < alpha < 2.0):
        raise SectorError("expansion requires 0 < alpha < 2")
    cfg = cfg or AsymptoticConfig()
    delta = cfg.resolve_angle(alpha)
    z = complex(z)
    if z == 0:
        raise DomainError("asymptotic expansion undefined at z = 0")
    beta = complex(beta)
    out = -_algebraic_tail(alpha, beta, z, cfg.term_count)
    if abs(cmath.phase(z)) <= delta:
        lz = cmath.log(z)
        out += cmath.exp((1.0 - beta) / alpha * lz + cmath.exp(lz / alpha)) / alpha
    return out


def ml2_asymptotic_large_alpha(alpha: float, beta: complex, z: complex, m: int = 8) -> complex:
    """Large-|z| expansion for alpha >= 2.

    Sums the exponential contributions of every branch z^(1/alpha) e^(2 pi
    i n / alpha) with |arg z + 2 pi n| <= 3 pi alpha / 4 (boundary branches
    included), minus the algebraic tail.  Branches outside the window carry
    exponentially small contributions only.
    """
    alpha = float(alpha)
    if alpha < 2.0:
        raise SectorError("use ml2_asymptotic for alpha < 2")
    z = complex(z)
    if z == 0:
        raise DomainError("asymptotic expansion undefined at z = 0")
    beta = complex(beta)
    theta = cmath.phase(z)
    window = 3.0 * math.pi * alpha / 4.0
    out = -_algebraic_tail(alpha, beta, z, m)
    n = math.floor((-window - theta) / (2.0 * math.pi))
    lz = cmath.log(z)
    while theta + 2.0 * math.pi * n <= window + 1e-15:
        if theta + 2.0 * math.pi * n >= -window - 1e-15:
            root = cmath.exp(lz / alpha + 2.0j * math.pi * n / alpha)
            out += cmath.exp((1.0 - beta) * cmath.log(root) + root) / alpha
        n += 1
    return out


def ml_negative_alpha(alpha: float, beta: complex, z: complex, form: str = "primary") -> complex:
    """Two-parameter function continued to a negative first parameter.

    ``primary``    1/Gamma(beta) - E[alpha, beta](1/z)
    ``recurrence`` -(1/z) E[alpha, alpha+beta](1/z)

    Both define the same analytic function on C \\ {0}; ``alpha`` is the
    positive magnitude of the (negative) first parameter.
    """
    if complex(z) == 0:
        raise DomainError("negative-parameter extension undefined at z = 0")
    alpha = float(alpha)
    if alpha <= 0:
        raise ParameterError("pass the positive magnitude alpha > 0")
    zi = 1.0 / complex(z)
    if form == "primary":
        return reciprocal_gamma(beta) - ml_eval(fam.Two(alpha, beta), zi).value
    if form == "recurrence":
        return -zi * ml_eval(fam.Two(alpha, alpha + complex(beta)), zi).value
    raise ValueError("form must be 'primary' or 'recurrence'")


# ---------------------------------------------------------------------------
# Prabhakar expansions
# ---------------------------------------------------------------------------


def prabhakar_large_beta(alpha: float, beta: float, gamma: float, a: float, x: float) -> complex:
    """Binomial closed form approximating Gamma(alpha) E[a (alpha x)^gamma].

    The Stirling collapse of the defining series for large real second
    parameter gives (1 + a (x/alpha)^gamma)^(-beta); this returns that
    closed form.  Note the role swap between the second and third
    parameters relative to the defining series is kept exactly as the
    source expansion states it.
    """
    if min(alpha, beta, gamma) <= 0 or a < 0 or x < 0:
        raise ParameterError("parameters must be positive reals (a, x >= 0)")
    return (1.0 + a * (x / alpha) ** gamma) ** (-beta)


@dataclass(frozen=True)
class PrabhakarAsymptotics:
    """Leading-term split E(z) = leading * z^p * (1 + theta).

    ``p`` is 0 for positive integer second parameter and 1 when it is 0;
    ``leading`` is (gamma)_p / Gamma(alpha p + n).  For non-positive integer
    gamma = -m the function is the polynomial of degree m with
    ``polynomial`` coefficients c_k of z^k (k = p..m).
    """

    p: int
    leading: complex
    theta: complex
    value: complex
    polynomial: tuple | None = None


def prabhakar_integer_second(
    alpha: complex, n: int, gamma: complex, z: complex, tol: float = 1e-14, cap: int | None = None
) -> PrabhakarAsymptotics:
    """Leading-term representation at nonnegative-integer second parameter.

    Covers the three regimes: generic gamma (entire, theta -> 0 as
    n -> infinity), gamma = 0 (constant 1/Gamma(n), or 0 at n = 0), and
    gamma = -m in Z_<=0, where the series collapses to a binomial
    polynomial of degree m.
    """
    if n < 0 or int(n) != n:
        raise ParameterError("second parameter must be a nonnegative integer")
    z = complex(z)
    gamma = complex(gamma)
    alpha = complex(alpha)
    cap = term_cap(cap)
    p = 0 if n > 0 else 1
    gp = 1.0 + 0.0j if p == 0 else gamma  # (gamma)_p
    leading = gp * reciprocal_gamma(alpha * p + n)

    is_neg_int = (
        abs(gamma.imag) <= 1e-12
        and abs(gamma.real - round(gamma.real)) <= 1e-12
        and round(gamma.real) <= 0
    )
    poly = None
    if is_neg_int and round(gamma.real) < 0:
        m = -int(round(gamma.real))
        coeffs = []
        for k in range(p, m + 1):
            c = (-1.0) ** k * math.comb(m, k) * reciprocal_gamma(alpha * k + n)
            coeffs.append(complex(c))
        poly = tuple(coeffs)

    theta = 0.0 + 0.0j
    if gp != 0:
        lg_ref = log_gamma(alpha * p + n)
        ratio = 1.0 + 0.0j  # (gamma)_k / (gamma)_p starting at k = p
        zk = 1.0 + 0.0j
        kfac_log = math.lgamma(p + 1)
        k = p
        small = 0
        while k - p < cap:
            k += 1
            ratio *= gamma + (k - 1)
            zk *= z
            kfac_log += math.log(k)
            if ratio == 0:
                break
            lr = log_rgamma(alpha * k + n)
            if lr is None:
                continue
            t = ratio * zk * cmath.exp(lg_ref + lr - kfac_log)
            theta += t
            if abs(t) < tol * max(1.0, abs(theta)):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0

    value = leading * (z**p) * (1.0 + theta) if gp != 0 else 0.0 + 0.0j
    return PrabhakarAsymptotics(p=p, leading=leading, theta=theta, value=value, polynomial=poly)


# ---------------------------------------------------------------------------
# Multiple Mittag-Leffler (exponent on the Taylor denominators)
# ---------------------------------------------------------------------------


def multiple_ml_asymptotic(mu: float, alpha: float, beta: float, z: complex) -> complex:
    """Leading asymptotics of sum z^n / Gamma(alpha n + beta)^mu.

    Valid in the sector |arg z| <= alpha mu pi/2 (0 < alpha mu < 2),
    |arg z| <= (2 - alpha mu / 2) pi (2 <= alpha mu < 4), or only on the
    positive axis for alpha mu >= 4.
    """
    if mu <= 0 or alpha <= 0 or beta <= 0:
        raise ParameterError("mu, alpha, beta must be positive")
    z = complex(z)
    if z == 0:
        raise DomainError("asymptotics undefined at z = 0")
    am = alpha * mu
    theta = abs(cmath.phase(z))
    if am < 2.0:
        bound = am * math.pi / 2.0
    elif am < 4.0:
        bound = min(math.pi, (2.0 - am / 2.0) * math.pi)
    else:
        bound = 0.0
    if theta > bound + 1e-12:
        raise SectorError(f"|arg z| = {theta:.4f} outside the sector bound {bound:.4f}")
    lz = cmath.log(z)
    power = (mu - 2.0 * beta * mu + 1.0) / (2.0 * am)
    return (
        (2.0 * math.pi) ** ((1.0 - mu) / 2.0)
        / (alpha * math.sqrt(mu))
        * cmath.exp(power * lz + mu * cmath.exp(lz / am))
    )


# ---------------------------------------------------------------------------
# Overflow-safe crossover comparison
# ---------------------------------------------------------------------------


def ml2_series_scaled(alpha: float, beta: complex, z: complex, tol: float = 1e-16, cap: int | None = None) -> complex:
    """E[alpha,beta](z) * exp(-z^(1/alpha)) summed termwise in log space.

    The scale factor keeps every partial sum representable even where the
    function itself overflows double precision (e.g. alpha = 1/2, z = 30).
    Intended for |arg z| <= sector angle, where exp(z^(1/alpha)) dominates.
    """
    z = complex(z)
    if z == 0:
        return reciprocal_gamma(beta)
    lz = cmath.log(z)
    scale = cmath.exp(lz / alpha)
    # the largest term sits near n ~ |z|^(1/alpha) / alpha; never stop
    # before passing it (early terms may underflow to exact zero)
    n_min = int(2.0 * abs(z) ** (1.0 / alpha) / alpha) + 8
    cap = max(term_cap(cap), 2 * n_min)
    total = 0.0 + 0.0j
    small = 0
    for n in range(cap):
        lr = log_rgamma(alpha * n + beta)
        if lr is None:
            continue
        t = cmath.exp(n * lz + lr - scale)
        total += t
        if n >= n_min and abs(t) < tol * max(abs(total), 1e-280):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    return total


def ml2_asymptotic_scaled(
    alpha: float, beta: complex, z: complex, cfg: AsymptoticConfig | None = None
) -> complex:
    """The 0 < alpha < 2 expansion times exp(-z^(1/alpha)), overflow-safe."""
    alpha = float(alpha)
    if not (0.0 < alpha < 2.0):
        raise SectorError("expansion requires 0 < alpha < 2")
    cfg = cfg or AsymptoticConfig()
    delta = cfg.resolve_angle(alpha)
    z = complex(z)
    beta = complex(beta)
    lz = cmath.log(z)
    scale = cmath.exp(lz / alpha)
    out = 0.0 + 0.0j
    if abs(cmath.phase(z)) <= delta:
        out += cmath.exp((1.0 - beta) / alpha * lz) / alpha
    # algebraic part, damped by the scale factor
    for n in range(1, cfg.term_count + 1):
        rg = reciprocal_gamma(beta - alpha * n)
        if rg != 0:
            out -= cmath.exp(-n * lz - scale) * rg
    return out


def crossover_relative_error(
    alpha: float, beta: complex, z: complex, m: int = 8
) -> float:
    """|series - expansion| / |series| with common exp(-z^(1/alpha)) scaling."""
    cfg = AsymptoticConfig(term_count=m)
    s = ml2_series_scaled(alpha, beta, z)
    a = ml2_asymptotic_scaled(alpha, beta, z, cfg)
    return abs(s - a) / abs(s)
