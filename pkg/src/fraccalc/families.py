"""Parameter records for the Mittag-Leffler style function families.

These are dumb, immutable containers plus the structural validation that can
be decided at construction time.  Domain-of-evaluation checks (convergence,
pole encounters along a series, ...) live with the evaluators in
:mod:`fraccalc.series`.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field, replace

from .errors import ParameterError

# ---------------------------------------------------------------------------
# Mittag-Leffler parameter variants (1 to 2n parameters)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class One:
    """E(z) = sum z^n / Gamma(alpha n + 1)."""

    alpha: complex


@dataclass(frozen=True)
class Two:
    """E(z) = sum z^n / Gamma(alpha n + beta)."""

    alpha: complex
    beta: complex


@dataclass(frozen=True)
class Three:
    """Prabhakar form: sum (gamma)_n / Gamma(alpha n + beta) z^n / n!."""

    alpha: complex
    beta: complex
    gamma: complex


@dataclass(frozen=True)
class Four:
    """sum (gamma)_n z^n / (Gamma(alpha n + beta) (delta)_n).

    All four parameters need positive real part.
    """

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            if complex(getattr(self, name)).real <= 0:
                raise ParameterError(f"four-parameter family needs Re({name}) > 0")


@dataclass(frozen=True)
class Six:
    """sum (gamma)_{s n} z^n / (Gamma(alpha n + beta) (delta)_{r n}).

    r, s are nonnegative reals with s <= Re(alpha) + r; the generalized
    Pochhammer entries use the gamma-ratio extended symbol.
    """

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex
    r: float
    s: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            if complex(getattr(self, name)).real <= 0:
                raise ParameterError(f"six-parameter family needs Re({name}) > 0")
        if self.r < 0 or self.s < 0:
            raise ParameterError("six-parameter family needs r, s >= 0")
        if self.s > complex(self.alpha).real + self.r:
            raise ParameterError("six-parameter family needs s <= Re(alpha) + r")


@dataclass(frozen=True)
class KilbasSaigo:
    """1 + sum_k prod_{j<k} Gamma(a(jm+l)+1)/Gamma(a(jm+l+1)+1) z^k."""

    alpha: float
    m: float
    ell: complex

    def __post_init__(self):
        if self.alpha <= 0 or self.m <= 0:
            raise ParameterError("Kilbas-Saigo family needs alpha > 0 and m > 0")


@dataclass(frozen=True)
class MultiIndex:
    """sum z^k / prod_j Gamma(alpha_j k + beta_j) over the given pairs."""

    pairs: tuple  # of (alpha_j, beta_j)

    def __post_init__(self):
        pairs = tuple((float(a), complex(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ParameterError("multi-index family needs at least one pair")
        if all(a == 0.0 for a, _ in pairs):
            raise ParameterError("multi-index weights cannot all vanish")


#: union used in signatures/documentation
MLParams = (One, Two, Three, Four, Six, KilbasSaigo, MultiIndex)


# ---------------------------------------------------------------------------
# Fox-Wright target representation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FoxWrightSpec:
    """(coefficient, weight) data of a Fox-Wright psi series plus outer map.

    The represented function is

        value(z) = prefactor * z**z_power * psi(w),   w = arg_coeff * z**(arg_sign*arg_power)

    where psi is the series  sum_n prod Gamma(a_i + alpha_i n) /
    prod Gamma(b_j + beta_j n) * w^n / n!  over the ``upper`` / ``lower``
    pairs.  With ``normalized`` set, psi carries the extra factor
    Gamma(b_1)...Gamma(b_q) / (Gamma(a_1)...Gamma(a_p)).
    """

    upper: tuple = ()
    lower: tuple = ()
    normalized: bool = False
    prefactor: complex = 1.0 + 0.0j
    z_power: complex = 0.0 + 0.0j
    arg_coeff: complex = 1.0 + 0.0j
    arg_power: float = 1.0
    arg_sign: int = 1

    def __post_init__(self):
        object.__setattr__(
            self, "upper", tuple((complex(a), float(w)) for a, w in self.upper)
        )
        object.__setattr__(
            self, "lower", tuple((complex(b), float(w)) for b, w in self.lower)
        )
        if self.arg_sign not in (-1, 1):
            raise ParameterError("arg_sign must be +1 or -1")
        if self.arg_power <= 0:
            raise ParameterError("arg_power must be positive")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def argument(self, z: complex) -> complex:
        """Effective series argument w = arg_coeff * z^(+-arg_power)."""
        z = complex(z)
        expo = self.arg_sign * self.arg_power
        if z == 0:
            if expo > 0:
                return 0.0 + 0.0j
            raise ZeroDivisionError("argument power is negative at z = 0")
        if expo == 1:
            w = z
        else:
            w = cmath.exp(expo * cmath.log(z))
        return complex(self.arg_coeff) * w

    def outer_factor(self, z: complex) -> complex:
        """prefactor * z**z_power with the principal branch power."""
        z = complex(z)
        pf = complex(self.prefactor)
        if self.z_power == 0:
            return pf
        if z == 0:
            if complex(self.z_power).real > 0:
                return 0.0 + 0.0j
            raise ZeroDivisionError("negative z_power at z = 0")
        return pf * cmath.exp(complex(self.z_power) * cmath.log(z))

    def cancel_common_pairs(self) -> "FoxWrightSpec":
        """Drop (a, w) pairs occurring in both upper and lower lists.

        Coefficients are matched to 1e-12.  Used by the operator reduction
        checks, where a specialized five-parameter result carries one pair
        on both sides of the fraction.
        """
        lower = list(self.lower)
        upper_keep = []
        for a, w in self.upper:
            hit = None
            for idx, (b, v) in enumerate(lower):
                if abs(a - b) <= 1e-12 and abs(w - v) <= 1e-12:
                    hit = idx
                    break
            if hit is None:
                upper_keep.append((a, w))
            else:
                lower.pop(hit)
        return replace(self, upper=tuple(upper_keep), lower=tuple(lower))


# ---------------------------------------------------------------------------
# M-series / K-function and the other direct series instances
# ---------------------------------------------------------------------------


def _check_bottom(b) -> tuple:
    out = tuple(complex(x) for x in b)
    for x in out:
        k = round(x.real)
        if k <= 0 and abs(x.real - k) <= 1e-12 and abs(x.imag) <= 1e-12:
            raise ParameterError("bottom parameters must avoid 0, -1, -2, ...")
    return out


@dataclass(frozen=True)
class MSeries:
    """sum prod (a_i)_n / prod (b_j)_n * z^n / Gamma(alpha n + beta)."""

    alpha: complex
    beta: complex
    a: tuple = ()
    b: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(complex(x) for x in self.a))
        object.__setattr__(self, "b", _check_bottom(self.b))
        if complex(self.alpha).real <= 0:
            raise ParameterError("M-series needs Re(alpha) > 0")


@dataclass(frozen=True)
class KFunction:
    """M-series with the extra Prabhakar weight (gamma)_n / n!."""

    alpha: complex
    beta: complex
    gamma: complex
    a: tuple = ()
    b: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(complex(x) for x in self.a))
        object.__setattr__(self, "b", _check_bottom(self.b))
        if complex(self.alpha).real <= 0:
            raise ParameterError("K-function needs Re(alpha) > 0")


@dataclass(frozen=True)
class WrightPhi:
    """phi(alpha, beta; z) = sum z^n / (n! Gamma(alpha n + beta))."""

    alpha: float
    beta: complex

    def __post_init__(self):
        if float(self.alpha) <= -1:
            raise ParameterError("Wright phi needs alpha > -1")


@dataclass(frozen=True)
class BesselWright:
    """J(z) = sum (-z)^n / (n! Gamma(rho + mu n + 1))."""

    rho: complex
    mu: float

    def __post_init__(self):
        if self.mu <= 0:
            raise ParameterError("Bessel-Wright needs mu > 0")


@dataclass(frozen=True)
class LommelWright:
    """(z/2)^(rho+2 lam) series with nu-fold Gamma(lam+n+1) denominator."""

    rho: complex
    lam: complex
    mu: float
    nu: int

    def __post_init__(self):
        if self.mu <= 0:
            raise ParameterError("Lommel-Wright needs mu > 0")
        if self.nu < 0 or int(self.nu) != self.nu:
            raise ParameterError("Lommel-Wright needs nu a nonnegative integer")


@dataclass(frozen=True)
class MultipleML:
    """F(z) = sum z^n / Gamma(alpha n + beta)^mu,  alpha, beta, mu real."""

    alpha: float
    beta: float
    mu: float

    def __post_init__(self):
        if self.alpha <= 0 or self.mu <= 0:
            raise ParameterError("multiple-ML needs alpha > 0 and mu > 0")


SeriesInstance = (MSeries, KFunction, WrightPhi, BesselWright, LommelWright, MultipleML)


# ---------------------------------------------------------------------------
# Evaluation result record
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvalResult:
    """Value of a truncated series evaluation.

    ``tail_bound`` is the larger of the last two raw term magnitudes,
    relative to max(1, |value|); when ``status`` is "converged" it is at
    most the requested tolerance.  Statuses: converged, conditional,
    truncated-at-cap, polynomial, diverged.
    """

    value: complex
    terms_used: int
    tail_bound: float
    status: str

    def __complex__(self) -> complex:
        return complex(self.value)
