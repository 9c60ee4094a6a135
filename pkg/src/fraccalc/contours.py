"""Independent oracles by complex-contour quadrature.

Hankel loops for 1/Gamma and the two-parameter function, Mellin-Barnes
vertical lines for the Prabhakar and Wright functions, the Gauss 2F1 with
analytic continuation, Appell's F3 double series, and the Laplace/Mellin
closed-form transform checks.

All contour quadrature is composite Gauss-Legendre with 32 nodes per panel;
panel counts double until two successive estimates agree to the requested
tolerance.  Branches: (-z)^(-s) and the contour powers use the principal
logarithm with arg in (-pi, pi); on Hankel paths the argument is assigned
by the contour parametrization itself (never recovered from a library log).
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad as _sp_quad
from scipy.special import loggamma as _lgam

from . import families as fam
from .errors import (
    ContourError,
    ConvergenceError,
    DomainError,
    LogCaseError,
    ParameterError,
    PoleError,
    PoleProximityError,
    QuadratureError,
    SectorError,
    StripError,
    TruncationWarning,
)
from .gammakit import gamma, is_nonpositive_int, reciprocal_gamma
from .series import ml_eval, term_cap

_GL_NODES, _GL_WEIGHTS = leggauss(32)


def _rgamma_vec(w: np.ndarray) -> np.ndarray:
    """Vectorized 1/Gamma with exact zeros at poles."""
    out = np.exp(-_lgam(w))
    bad = ~np.isfinite(out)
    if bad.any():
        out = np.where(bad, 0.0, out)
    return out


def _gl_panels(f, a: float, b: float, panels: int) -> complex:
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    pts = (mid[:, None] + half * _GL_NODES[None, :]).ravel()
    vals = f(pts).reshape(panels, -1)
    return complex(half * np.sum(vals @ _GL_WEIGHTS))


def _integrate_segments(segments, tol: float = 1e-11, start_panels: int = 4, max_doublings: int = 9) -> complex:
    """Sum of composite-GL integrals over parametrized segments.

    Each segment is a callable f(t_array) -> integrand * dpath/dt on
    t in [0, 1].  Panels double until two successive totals agree.
    """
    panels = start_panels
    prev = None
    for _ in range(max_doublings + 1):
        total = sum(_gl_panels(f, 0.0, 1.0, panels) for f in segments)
        if prev is not None and abs(total - prev) <= tol * max(1.0, abs(total)):
            return total
        prev = total
        panels *= 2
    raise QuadratureError(
        f"contour quadrature did not converge to {tol:g} within "
        f"{start_panels * 2**max_doublings} panels per segment"
    )


# ---------------------------------------------------------------------------
# Hankel loop: 1/Gamma and the two-parameter Mittag-Leffler function
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HankelContour:
    """Loop from -infinity around the origin: ray in at angle -delta,
    counterclockwise arc of radius eps, ray out at +delta; rays truncated
    at |s| = length.  delta in (pi/2, pi] so exp(s) decays along the rays."""

    eps: float = 1.0
    delta: float = 3.0 * math.pi / 4.0
    length: float = 60.0

    def __post_init__(self):
        if self.eps <= 0:
            raise ContourError("arc radius eps must be positive")
        if not (math.pi / 2.0 < self.delta <= math.pi):
            raise ContourError("ray angle delta must lie in (pi/2, pi]")
        if self.length <= self.eps:
            raise ContourError("truncation length must exceed eps")

    def segments(self, integrand):
        """Three closures t in [0,1] -> integrand(s, log s) * ds/dt.

        ``integrand`` receives the contour points and their contour-assigned
        logarithms (branch arg in [-delta, delta]).
        """
        eps, delta, length = self.eps, self.delta, self.length

        def ray_in(t):
            r = length + (eps - length) * t
            s = r * np.exp(-1j * delta)
            ds = (eps - length) * np.exp(-1j * delta)
            return integrand(s, np.log(r) - 1j * delta) * ds

        def arc(t):
            th = -delta + 2.0 * delta * t
            s = eps * np.exp(1j * th)
            ds = 1j * eps * np.exp(1j * th) * 2.0 * delta
            return integrand(s, math.log(eps) + 1j * th) * ds

        def ray_out(t):
            r = eps + (length - eps) * t
            s = r * np.exp(1j * delta)
            ds = (length - eps) * np.exp(1j * delta)
            return integrand(s, np.log(r) + 1j * delta) * ds

        return [ray_in, arc, ray_out]


def hankel_reciprocal_gamma(z: complex, contour: HankelContour | None = None, tol: float = 1e-11) -> complex:
    """1/Gamma(z) as the loop integral of exp(s) s^(-z) / (2 pi i).

    Matches :func:`fraccalc.gammakit.reciprocal_gamma` to about 1e-8
    absolute for moderate |z| (the default loop length 60 covers
    Re(z) >= -4 comfortably; lengthen it for more negative real parts).
    """
    z = complex(z)
    contour = contour or HankelContour()

    def integrand(s, log_s):
        return np.exp(s - z * log_s)

    total = _integrate_segments(contour.segments(integrand), tol=tol)
    return total / (2.0j * math.pi)


def ml2_hankel(
    alpha: float, beta: complex, z: complex, contour: HankelContour | None = None, tol: float = 1e-11
) -> complex:
    """Two-parameter function by the loop integral of t^(alpha-beta) e^t / (t^alpha - z).

    The loop must encircle the disk |t| <= |z|^(1/alpha); with the default
    contour the arc radius is grown automatically.  Poles of the integrand
    must stay inside the loop region: every alpha-th root of z in the cut
    plane needs |arg root| < delta.
    """
    alpha = float(alpha)
    if not (0.0 < alpha < 2.0):
        raise ContourError("loop representation used for 0 < alpha < 2")
    z = complex(z)
    beta = complex(beta)
    rad = 0.0 if z == 0 else abs(z) ** (1.0 / alpha)
    if contour is None:
        contour = HankelContour(
            eps=max(1.0, 1.5 * rad), delta=0.92 * math.pi, length=max(1.0, 1.5 * rad) + 55.0
        )
    if contour.eps <= rad:
        raise ContourError(
            f"arc radius {contour.eps} does not enclose the disk of radius {rad:.6g}"
        )
    if z != 0:
        theta = cmath.phase(z)
        k = -2
        while k <= 2:
            root_arg = (theta + 2.0 * math.pi * k) / alpha
            if abs(root_arg) < math.pi and abs(root_arg) > contour.delta - 0.03:
                raise ContourError(
                    "a pole of the integrand lies outside the contour sector; "
                    "increase delta or move z off the cut"
                )
            k += 1

    def integrand(s, log_s):
        sa = np.exp(alpha * log_s)
        den = sa - z
        if np.min(np.abs(den)) < 1e-10:
            raise PoleProximityError("contour node within 1e-10 of t^alpha = z")
        return np.exp((alpha - beta) * log_s + s) / den

    total = _integrate_segments(contour.segments(integrand), tol=tol)
    return total / (2.0j * math.pi)


# ---------------------------------------------------------------------------
# Mellin-Barnes integrals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MellinBarnesLine:
    """Vertical line Re(s) = abscissa truncated at +- half_height.

    ``abscissa`` None picks the operation default.  When the line integral
    fails to decay (argument too close to the positive real axis) the
    evaluators bend the ends into a left-opening loop; ``bend`` forces it.
    """

    abscissa: float | None = None
    half_height: float = 60.0
    bend: bool = False

    def __post_init__(self):
        if self.half_height <= 0:
            raise ContourError("half_height must be positive")


def _mb_line_integral(F, c: float, T: float, tol: float) -> complex:
    # int over the segment [c - iT, c + iT] of F(s) ds / (2 pi i)
    def seg(t):
        s = c + 1j * (-T + 2.0 * T * t)
        return F(s) * (2.0j * T)

    return _integrate_segments([seg], tol=tol) / (2.0j * math.pi)


def _mb_bent_integral(F, c: float, tol: float, decay_scale: float, phi: float = math.pi / 10.0) -> complex:
    """Left-opening V contour through c: s = c + u e^(+-i(pi - phi)).

    Superexponential gamma decay makes this converge for any argument of
    the transform variable; ``decay_scale`` sizes the truncation.
    """
    direction_up = cmath.exp(1j * (math.pi - phi))
    direction_dn = cmath.exp(-1j * (math.pi - phi))
    U = max(30.0, decay_scale)

    def up(t):
        u = U * t
        s = c + u * direction_up
        return F(s) * (U * direction_up)

    def dn(t):
        u = U * (1.0 - t)
        s = c + u * direction_dn
        return F(s) * (U * direction_dn)

    return _integrate_segments([dn, up], tol=tol) / (2.0j * math.pi)


def mellin_barnes_prabhakar(
    alpha: float,
    beta: complex,
    gamma_: complex,
    z: complex,
    line: MellinBarnesLine | None = None,
    tol: float = 1e-11,
) -> complex:
    """Prabhakar function by the vertical-line integral of
    Gamma(s) Gamma(gamma - s) / Gamma(beta - alpha s) (-z)^(-s) / Gamma(gamma).

    The abscissa defaults to Re(gamma)/2 and must separate the pole ladders
    (0 < c < Re(gamma)).  The straight line converges absolutely only for
    |arg(-z)| < (1 - alpha/2) pi; closer to the positive real axis the two
    line ends are bent into a left-opening loop (same residue ladder, valid
    for every |arg z| < pi).
    """
    alpha = float(alpha)
    if alpha <= 0:
        raise ParameterError("alpha must be a positive real")
    gamma_ = complex(gamma_)
    if gamma_.real <= 0:
        raise ParameterError("needs Re(gamma) > 0")
    z = complex(z)
    if z == 0:
        raise DomainError("use the series at z = 0")
    line = line or MellinBarnesLine()
    c = line.abscissa if line.abscissa is not None else gamma_.real / 2.0
    if not (0.0 < c < gamma_.real):
        raise ContourError(f"abscissa {c} outside (0, Re(gamma)) = (0, {gamma_.real})")

    log_mz = cmath.log(-z)  # principal; arg(-z) = pi only for z > 0 handled by bend

    def F(s):
        return np.exp(_lgam(s) + _lgam(gamma_ - s) - _lgam(beta - alpha * s) - s * log_mz)

    decay = (1.0 - alpha / 2.0) * math.pi - abs(cmath.phase(-z))
    if line.bend or decay < 0.25:
        scale = (50.0 + abs(math.log(abs(z))) * 2.0) / max(alpha * 0.4, 0.2)
        total = _mb_bent_integral(F, c, tol, decay_scale=scale)
    else:
        T = line.half_height
        total = _mb_line_integral(F, c, T, tol)
        tail = abs(complex(F(np.array([c + 1j * T]))[0])) / max(decay, 1e-3)
        if tail > 1e-12 * max(1.0, abs(total)):
            warnings.warn(
                f"integrand tail at +-iT is {tail:.2e} of the accumulated value",
                TruncationWarning,
            )
    return total * reciprocal_gamma(gamma_)


def wright_phi_mellin_barnes(
    alpha: float, beta: complex, z: complex, line: MellinBarnesLine | None = None, tol: float = 1e-11
) -> complex:
    """Wright function by the line integral of Gamma(s)/Gamma(beta - alpha s) (-z)^(-s).

    Valid for (i) 0 < alpha < 1 with |arg(-z)| < (1 - alpha) pi / 2, or
    (ii) alpha = 1, arg(-z) = 0 with Re(beta) > 1 + 2c (algebraic decay:
    expect slow truncation convergence in that case).
    """
    alpha = float(alpha)
    z = complex(z)
    beta = complex(beta)
    if z == 0:
        raise DomainError("use the series at z = 0")
    line = line or MellinBarnesLine()
    arg_mz = cmath.phase(-z)
    if 0.0 < alpha < 1.0:
        if abs(arg_mz) >= (1.0 - alpha) * math.pi / 2.0:
            raise SectorError(
                f"|arg(-z)| = {abs(arg_mz):.4f} >= (1 - alpha) pi / 2"
            )
        c = line.abscissa if line.abscissa is not None else 0.5
    elif alpha == 1.0:
        if abs(arg_mz) > 1e-14:
            raise SectorError("alpha = 1 requires arg(-z) = 0")
        c = line.abscissa if line.abscissa is not None else min(0.5, (beta.real - 1.0) / 4.0)
        if beta.real <= 1.0 + 2.0 * c:
            raise SectorError("alpha = 1 requires Re(beta) > 1 + 2c")
    else:
        raise SectorError("line representation needs 0 < alpha <= 1")
    if c <= 0:
        raise ContourError("abscissa must be positive to separate the pole ladder")

    log_mz = cmath.log(-z)

    def F(s):
        return np.exp(_lgam(s) - _lgam(beta - alpha * s) - s * log_mz)

    return _mb_line_integral(F, c, line.half_height, tol)


# ---------------------------------------------------------------------------
# Gauss 2F1 with analytic continuation
# ---------------------------------------------------------------------------


def _is_int(x: complex, tol: float = 1e-12) -> bool:
    x = complex(x)
    return abs(x.imag) <= tol and abs(x.real - round(x.real)) <= tol


def _f21_series(a, b, c, z, tol, cap) -> complex:
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j
    small = 0
    for n in range(cap):
        total += term
        den = (c + n) * (1.0 + n)
        term = term * (a + n) * (b + n) / den * z
        if term == 0:
            return total
        if abs(term) < tol * max(1.0, abs(total)):
            small += 1
            if small >= 2:
                return total + term
        else:
            small = 0
    if abs(term) > tol * max(1.0, abs(total)):
        raise QuadratureError("2F1 series did not meet tolerance within the cap")
    return total


def _f21_one_minus_z(a, b, c, z, tol, cap) -> complex:
    # connection in powers of 1-z; needs c-a-b non-integer
    s = c - a - b
    u = 1.0 - z
    t1 = (
        gamma(c)
        * gamma(s)
        * reciprocal_gamma(c - a)
        * reciprocal_gamma(c - b)
        * _f21_series(a, b, 1.0 - s, u, tol, cap)
    )
    t2 = (
        gamma(c)
        * gamma(-s)
        * reciprocal_gamma(a)
        * reciprocal_gamma(b)
        * cmath.exp(s * cmath.log(u))
        * _f21_series(c - a, c - b, 1.0 + s, u, tol, cap)
    )
    return t1 + t2


def _f21_inverse_z(a, b, c, z, tol, cap) -> complex:
    # connection in powers of 1/z; needs a-b non-integer and z off [0, inf)
    log_mz = cmath.log(-z)
    w = 1.0 / z
    t1 = (
        gamma(c)
        * gamma(b - a)
        * reciprocal_gamma(b)
        * reciprocal_gamma(c - a)
        * cmath.exp(-a * log_mz)
        * _f21_series(a, 1.0 + a - c, 1.0 + a - b, w, tol, cap)
    )
    t2 = (
        gamma(c)
        * gamma(a - b)
        * reciprocal_gamma(a)
        * reciprocal_gamma(c - b)
        * cmath.exp(-b * log_mz)
        * _f21_series(b, 1.0 + b - c, 1.0 + b - a, w, tol, cap)
    )
    return t1 + t2


def gauss_2f1(a: complex, b: complex, c: complex, z: complex, tol: float = 1e-14, cap: int | None = None) -> complex:
    """Gauss hypergeometric function on the cut plane C \\ [1, infinity).

    Routing: terminating cases sum exactly for any z; |z| < 0.9 uses the
    defining series (switching to the 1-z connection formula near z = 1,
    where the series loses accuracy); the ring 0.9 <= |z| <= 1.1 uses the
    1-z or 1/z connection when the parameter differences allow, falling
    back to an extended-cap series for |z| <= 1; |z| >= 1.1 uses the
    two-term 1/z connection, which requires a - b not an integer
    (LogCaseError otherwise).
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if is_nonpositive_int(c):
        raise PoleError("third parameter must avoid 0, -1, -2, ...")
    cap = term_cap(cap)
    if _is_int(a) and round(a.real) <= 0:
        return _f21_series(a, b, c, z, tol, max(cap, int(-a.real) + 2))
    if _is_int(b) and round(b.real) <= 0:
        return _f21_series(a, b, c, z, tol, max(cap, int(-b.real) + 2))
    az = abs(z)
    on_cut = z.imag == 0 and z.real >= 1.0
    if az < 0.9:
        if abs(1.0 - z) <= 0.4 and not _is_int(c - a - b):
            return _f21_one_minus_z(a, b, c, z, tol, cap)
        return _f21_series(a, b, c, z, tol, cap)
    if az <= 1.1:
        if not on_cut and abs(1.0 - z) <= 0.75 and not _is_int(c - a - b):
            return _f21_one_minus_z(a, b, c, z, tol, cap)
        if not on_cut and az > 1.0 and not _is_int(a - b):
            return _f21_inverse_z(a, b, c, z, tol, cap)
        if az <= 1.0 + 1e-14 and not on_cut:
            return _f21_series(a, b, c, z, tol, 10 * cap)
        raise DomainError("2F1 requested on the branch cut [1, infinity)")
    if on_cut:
        raise DomainError("2F1 requested on the branch cut [1, infinity)")
    if _is_int(a - b):
        raise LogCaseError(
            "a - b is an integer: logarithmic large-z case not implemented"
        )
    return _f21_inverse_z(a, b, c, z, tol, cap)


# ---------------------------------------------------------------------------
# Appell F3 double series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AppellArgs:
    """Parameters and arguments of the two-variable F3 series."""

    alpha: complex
    alpha2: complex
    beta: complex
    beta2: complex
    gamma: complex
    x: complex
    y: complex


def appell_f3(args: AppellArgs, tol: float = 1e-13, cap: int = 4000) -> complex:
    """F3 by anti-diagonal summation of the double series.

    Convergent on max(|x|, |y|) < 1.  Each anti-diagonal m + n = N shares
    the factor 1/(gamma)_N, so it is the Cauchy convolution of the two
    one-variable coefficient sequences.
    """
    x, y = complex(args.x), complex(args.y)
    if max(abs(x), abs(y)) >= 1.0:
        raise DomainError("F3 series needs max(|x|, |y|) < 1")
    if is_nonpositive_int(args.gamma):
        raise PoleError("lower parameter gamma must avoid 0, -1, -2, ...")
    a, a2, b, b2, g = (
        complex(args.alpha),
        complex(args.alpha2),
        complex(args.beta),
        complex(args.beta2),
        complex(args.gamma),
    )
    A = [1.0 + 0.0j]  # (a)_m (b)_m x^m / m!
    B = [1.0 + 0.0j]  # (a2)_n (b2)_n y^n / n!
    gN = 1.0 + 0.0j  # (g)_N
    total = 0.0 + 0.0j
    small = 0
    for N in range(cap):
        diag = sum(A[m] * B[N - m] for m in range(N + 1))
        t = diag / gN
        total += t
        if abs(t) < tol * max(1.0, abs(total)):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        A.append(A[-1] * (a + N) * (b + N) / (N + 1.0) * x)
        B.append(B[-1] * (a2 + N) * (b2 + N) / (N + 1.0) * y)
        gN *= g + N
    raise QuadratureError("F3 double series did not converge within the cap")


def appell_f3_rowmajor(args: AppellArgs, tol: float = 1e-13, cap: int = 4000) -> complex:
    """Row-major F3 summation (inner n-series per m); order-independence oracle."""
    x, y = complex(args.x), complex(args.y)
    if max(abs(x), abs(y)) >= 1.0:
        raise DomainError("F3 series needs max(|x|, |y|) < 1")
    a, a2, b, b2, g = (
        complex(args.alpha),
        complex(args.alpha2),
        complex(args.beta),
        complex(args.beta2),
        complex(args.gamma),
    )
    total = 0.0 + 0.0j
    Am = 1.0 + 0.0j
    small = 0
    for m in range(cap):
        inner = 0.0 + 0.0j
        t = 1.0 + 0.0j
        insmall = 0
        for n in range(cap):
            inner += t
            t = t * (a2 + n) * (b2 + n) / ((g + m + n) * (n + 1.0)) * y
            if abs(t) < tol * max(1.0, abs(inner)):
                insmall += 1
                if insmall >= 2:
                    break
            else:
                insmall = 0
        gm = cmath.exp(_lgam(complex(g + m)) - _lgam(complex(g)))
        row = Am / gm * inner
        total += row
        if abs(row) < tol * max(1.0, abs(total)):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
        Am = Am * (a + m) * (b + m) / (m + 1.0) * x
    raise QuadratureError("row-major F3 did not converge within the cap")


# ---------------------------------------------------------------------------
# Laplace / Mellin transform checks
# ---------------------------------------------------------------------------


def _quad_complex(f, a, b, **kw) -> complex:
    re = _sp_quad(lambda t: f(t).real, a, b, **kw)[0]
    im = _sp_quad(lambda t: f(t).imag, a, b, **kw)[0]
    return re + 1j * im


def laplace_prabhakar_check(alpha, beta, gamma_, w, s, tol: float = 1e-9):
    """Quadrature vs closed form for the weighted Laplace transform.

    lhs = int_0^inf exp(-s t) t^(beta-1) E[alpha, beta, gamma](w t^alpha) dt,
    rhs = s^(-beta) (1 - w s^(-alpha))^(-gamma).  The improper integral is
    split at t = 1 with the exponential map t = 1 - log(u) on the tail.
    Requires Re(s) > |w|^(1/Re(alpha)) so the integrand decays.
    """
    alpha, beta, gamma_ = complex(alpha), complex(beta), complex(gamma_)
    w, s = complex(w), complex(s)
    if min(alpha.real, beta.real, gamma_.real) <= 0:
        raise ParameterError("needs positive real parts of alpha, beta, gamma")
    if s.real <= abs(w) ** (1.0 / alpha.real):
        raise ConvergenceError("needs Re(s) > |w|^(1/Re(alpha))")
    three = fam.Three(alpha, beta, gamma_)

    def integrand(t: float) -> complex:
        tc = complex(t)
        E = ml_eval(three, w * tc**alpha, tol=1e-15).value
        return cmath.exp(-s * t + (beta - 1.0) * cmath.log(tc)) * E

    head = _quad_complex(integrand, 0.0, 1.0, limit=400)
    tail = _quad_complex(
        lambda u: integrand(1.0 - math.log(u)) / u, 1e-300, 1.0, limit=400
    )
    lhs = head + tail
    rhs = cmath.exp(-beta * cmath.log(s)) * (1.0 - w * s**-alpha) ** (-gamma_)
    return lhs, rhs


def _prabhakar_neg_axis(alpha: float, beta: complex, gamma_: complex, x: float) -> complex:
    """E[alpha,beta,gamma](-x) for x >= 0: series while cancellation-safe,
    Mellin-Barnes line beyond (arg(-z) = 0 there, the best-conditioned case)."""
    if x <= 25.0**alpha:
        return ml_eval(fam.Three(alpha, beta, gamma_), -x, tol=1e-15).value
    return mellin_barnes_prabhakar(alpha, beta, gamma_, -x, tol=1e-10)


def mellin_prabhakar_check(alpha, beta, gamma_, w, s, tol: float = 1e-9):
    """Quadrature vs closed form for the Mellin transform along the
    negative argument direction.

    lhs = int_0^inf t^(s-1) E[alpha, beta, gamma](-w t) dt,
    rhs = Gamma(s) Gamma(gamma - s) w^(-s) / (Gamma(gamma) Gamma(beta - alpha s)).
    Valid on the strip 0 < Re(s) < Re(gamma); the tail integral uses the
    substitution t = e^v and the algebraic decay rate gamma - s.
    """
    alpha = float(alpha)
    beta, gamma_ = complex(beta), complex(gamma_)
    w, s = complex(w), complex(s)
    if not (0.0 < s.real < gamma_.real):
        raise StripError("needs 0 < Re(s) < Re(gamma)")
    if alpha <= 0 or alpha >= 2.0:
        raise ParameterError("tail evaluation implemented for 0 < alpha < 2")
    if abs(w) == 0 or w.real <= 0 or w.imag != 0:
        raise ParameterError("scale w must be a positive real")
    wr = w.real

    def head(t: float) -> complex:
        return cmath.exp((s - 1.0) * math.log(t)) * ml_eval(
            fam.Three(alpha, beta, gamma_), -wr * t, tol=1e-15
        ).value

    lhs = _quad_complex(head, 0.0, 1.0, limit=400)
    # tail: t = e^v, dt = e^v dv -> integrand e^(s v) E(-w e^v)
    vmax = (40.0 + 2.0 * abs(cmath.log(w))) / max((gamma_ - s).real, 0.05)
    if vmax > 4000.0:
        raise ConvergenceError("algebraic tail decays too slowly: widen gamma - s")

    def tail_f(v: np.ndarray) -> np.ndarray:
        out = np.empty(len(v), dtype=complex)
        for i, vi in enumerate(v):
            out[i] = cmath.exp(s * vi) * _prabhakar_neg_axis(alpha, beta, gamma_, wr * math.exp(vi))
        return out

    panels = 8
    prev = None
    for _ in range(7):
        total = _gl_panels(lambda t: tail_f(t * vmax) * vmax, 0.0, 1.0, panels)
        if prev is not None and abs(total - prev) <= 1e-10 * max(1.0, abs(total)):
            break
        prev = total
        panels *= 2
    lhs += total
    rhs = (
        gamma(s)
        * gamma(gamma_ - s)
        * cmath.exp(-s * cmath.log(w))
        * reciprocal_gamma(gamma_)
        * reciprocal_gamma(beta - alpha * s)
    )
    return lhs, rhs
