"""Truncated-series evaluation of the function families and their
Fox-Wright reductions.

The drivers sum raw terms until two *consecutive* term magnitudes fall below
tol * max(1, |partial sum|) (a single accidentally small term of an
alternating series must not stop the sum), or until the term cap is hit.
The cap defaults to 10_000 and can be overridden through the
ML_FRACCALC_MAX_TERMS environment variable.
"""
from __future__ import annotations

import cmath
import math
import os

import numpy as np
from scipy.special import loggamma as _sp_loggamma

from . import families as fam
from .errors import DivergenceError, ParameterError, PoleError
from .gammakit import (
    classify_convergence,
    gamma,
    is_nonpositive_int,
    log_gamma,
    log_rgamma,
    poch,
    reciprocal_gamma,
)

DEFAULT_TOL = 1e-14
DEFAULT_CAP = 10_000


def term_cap(cap: int | None = None) -> int:
    """Series cap; ML_FRACCALC_MAX_TERMS overrides the default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get("ML_FRACCALC_MAX_TERMS")
    return int(env) if env else DEFAULT_CAP


# ---------------------------------------------------------------------------
# shared summation driver
# ---------------------------------------------------------------------------


def _sum_terms(terms, tol: float, cap: int, conditional: bool = False) -> fam.EvalResult:
    """Sum a term generator under the two-consecutive-small-terms rule.

    ``terms`` yields complex term values; exhaustion of the generator means
    the series terminates (polynomial status).  With ``conditional`` the sum
    runs to the cap and reports status "conditional" (boundary points of the
    convergence domain are not accelerated).
    """
    total = 0.0 + 0.0j
    small_run = 0
    last, second_last = math.inf, math.inf
    n_used = 0
    head_scale = 0.0
    terminated = True
    for n, t in enumerate(terms):
        if n >= cap:
            terminated = False
            break
        total += t
        n_used = n + 1
        second_last, last = last, abs(t)
        if n < 16:
            head_scale = max(head_scale, abs(t))
        if not conditional:
            if abs(t) < tol * max(1.0, abs(total)):
                small_run += 1
                if small_run >= 2 and n >= 1:
                    terminated = False
                    tail = max(last, second_last) / max(1.0, abs(total))
                    return fam.EvalResult(total, n_used, tail, "converged")
            else:
                small_run = 0
    scale = max(1.0, abs(total))
    tail = (last if second_last is math.inf else max(last, second_last)) / scale
    if terminated:
        return fam.EvalResult(total, n_used, 0.0, "polynomial")
    if conditional:
        return fam.EvalResult(total, n_used, tail, "conditional")
    if tail <= tol:
        return fam.EvalResult(total, n_used, tail, "converged")
    if last > 10.0 * max(head_scale, 1.0) and last > second_last:
        return fam.EvalResult(total, n_used, tail, "diverged")
    return fam.EvalResult(total, n_used, tail, "truncated-at-cap")


def _log_pow(w: complex, n: int) -> complex:
    # n * Log w for the principal branch; w != 0
    return n * cmath.log(w)


# ---------------------------------------------------------------------------
# term generators for the direct family series
# ---------------------------------------------------------------------------


def _terms_two(alpha, beta, w):
    if w == 0:
        yield reciprocal_gamma(beta)
        return
    lw = cmath.log(w)
    n = 0
    while True:
        lr = log_rgamma(alpha * n + beta)
        yield 0.0 if lr is None else cmath.exp(n * lw + lr)
        n += 1


def _terms_prabhakar_like(alpha, beta, gamma_, delta, w):
    """Terms of sum (gamma)_n / ((delta)_n-ish) ... ; delta=None gives the
    Prabhakar n! denominator, otherwise the four-parameter (delta)_n."""
    ratio = 1.0 + 0.0j  # running (gamma)_n / (delta or n!)_n
    n = 0
    wn = 1.0 + 0.0j
    while True:
        if ratio == 0:
            return  # terminating: gamma was a non-positive integer
        lr = log_rgamma(alpha * n + beta)
        yield 0.0 if lr is None else ratio * wn * cmath.exp(lr)
        den = (n + 1.0) if delta is None else (delta + n)
        if den == 0:
            raise ParameterError("lower Pochhammer parameter hit a non-positive integer")
        ratio *= (gamma_ + n) / den
        wn *= w
        n += 1


def _terms_six(params: fam.Six, w):
    lg_g = log_gamma(params.gamma)
    lg_d = log_gamma(params.delta)
    if w == 0:
        yield reciprocal_gamma(params.beta)
        return
    lw = cmath.log(w)
    n = 0
    while True:
        lr = log_rgamma(params.alpha * n + params.beta)
        if lr is None:
            yield 0.0
        else:
            top = log_gamma(params.gamma + params.s * n) - lg_g
            bot = log_gamma(params.delta + params.r * n) - lg_d
            yield cmath.exp(top - bot + n * lw + lr)
        n += 1


def _terms_kilbas_saigo(params: fam.KilbasSaigo, w):
    a, m, ell = params.alpha, params.m, params.ell
    coeff = 1.0 + 0.0j
    wn = 1.0 + 0.0j
    k = 0
    while True:
        yield coeff * wn
        # extend the telescoping product by the j = k factor
        top = a * (k * m + ell) + 1.0
        bot = a * (k * m + ell + 1.0) + 1.0
        if is_nonpositive_int(top) or is_nonpositive_int(bot):
            raise ParameterError(
                "Kilbas-Saigo coefficient hit a gamma pole: alpha(jm+ell)+1 "
                "must avoid 0, -1, -2, ..."
            )
        coeff *= cmath.exp(log_gamma(top) - log_gamma(bot))
        wn *= w
        k += 1


def _terms_multi_index(pairs, w):
    if w == 0:
        t0 = 1.0 + 0.0j
        for a, b in pairs:
            t0 *= reciprocal_gamma(b)
        yield t0
        return
    lw = cmath.log(w)
    n = 0
    while True:
        acc = 0.0 + 0.0j
        dead = False
        for a, b in pairs:
            lr = log_rgamma(a * n + b)
            if lr is None:
                dead = True
                break
            acc += lr
        yield 0.0 if dead else cmath.exp(n * lw + acc)
        n += 1


def ml_eval(params, z: complex, tol: float = DEFAULT_TOL, cap: int | None = None) -> fam.EvalResult:
    """Evaluate a Mittag-Leffler family member by direct summation.

    Parameters follow the records in :mod:`fraccalc.families`.  For the one-
    and two-parameter functions with Re(alpha) = 0 the evaluation is
    restricted to the convergence disk |z| < exp(-pi |Im alpha| / 2); for
    Re(alpha) < 0 the defining series diverges for every z != 0 (the
    continuation lives in :func:`fraccalc.asymptotics.ml_negative_alpha`).
    """
    z = complex(z)
    cap = term_cap(cap)
    if isinstance(params, fam.One):
        params = fam.Two(params.alpha, 1.0)
    if isinstance(params, fam.Two):
        al = complex(params.alpha)
        if al.real < 0 and z != 0:
            raise DivergenceError("series diverges for Re(alpha) < 0 and z != 0")
        if al.real == 0:
            if al.imag == 0:
                raise ParameterError("alpha must be nonzero")
            radius = math.exp(-math.pi * abs(al.imag) / 2.0)
            if abs(z) >= radius:
                raise DivergenceError(
                    f"|z| >= convergence radius {radius:.6g} for purely "
                    "imaginary alpha"
                )
        return _sum_terms(_terms_two(al, complex(params.beta), z), tol, cap)
    if isinstance(params, fam.Three):
        al = complex(params.alpha)
        if al.real <= 0:
            raise ParameterError("Prabhakar family needs Re(alpha) > 0")
        return _sum_terms(
            _terms_prabhakar_like(al, complex(params.beta), complex(params.gamma), None, z),
            tol,
            cap,
        )
    if isinstance(params, fam.Four):
        return _sum_terms(
            _terms_prabhakar_like(
                complex(params.alpha),
                complex(params.beta),
                complex(params.gamma),
                complex(params.delta),
                z,
            ),
            tol,
            cap,
        )
    if isinstance(params, fam.Six):
        return _sum_terms(_terms_six(params, z), tol, cap)
    if isinstance(params, fam.KilbasSaigo):
        return _sum_terms(_terms_kilbas_saigo(params, z), tol, cap)
    if isinstance(params, fam.MultiIndex):
        total = sum(a for a, _ in params.pairs)
        if total <= 0 and z != 0:
            raise DivergenceError("multi-index series needs sum(alpha_j) > 0")
        return _sum_terms(_terms_multi_index(params.pairs, z), tol, cap)
    raise ParameterError(f"unknown family {type(params).__name__}")


# ---------------------------------------------------------------------------
# M-series / K-function / Wright style instances
# ---------------------------------------------------------------------------


def _poch_list_ratio_logs(a_list):
    # returns (terminating_bound or None, log-gamma bases) for product lists
    bound = None
    for a in a_list:
        if is_nonpositive_int(a):
            b = int(round(a.real))
            bound = -b if bound is None else min(bound, -b)
    return bound


def _terms_m_or_k(alpha, beta, gamma_, a_list, b_list, w):
    """Terms of the M-series (gamma_ is None) or K-function."""
    ratio = 1.0 + 0.0j  # running prod (a)_n / prod (b)_n [* (gamma)_n / n!]
    wn = 1.0 + 0.0j
    n = 0
    while True:
        if ratio == 0:
            return  # a top parameter terminated the series
        lr = log_rgamma(alpha * n + beta)
        yield 0.0 if lr is None else ratio * wn * cmath.exp(lr)
        step = 1.0 + 0.0j
        for a in a_list:
            step *= a + n
        for b in b_list:
            step /= b + n
        if gamma_ is not None:
            step *= (gamma_ + n) / (n + 1.0)
        ratio *= step
        wn *= w
        n += 1


def _mk_boundary_status(a_list, b_list, z):
    s = sum(b.real for b in b_list) - sum(a.real for a in a_list)
    if s > 0:
        return "absolute"
    if s <= -1:
        raise DivergenceError("boundary point diverges: Re(sum b - sum a) <= -1")
    return "conditional"


def series_eval(inst, z: complex, tol: float = DEFAULT_TOL, cap: int | None = None) -> fam.EvalResult:
    """Evaluate an M-series, K-function or Wright-type series instance.

    M-series/K-function follow the ratio-test domain: entire for p <= q,
    the unit disk for p = q + 1 (boundary points summed with a hard cap and
    a "conditional" status when only conditionally convergent), divergent
    beyond.
    """
    z = complex(z)
    cap = term_cap(cap)
    if isinstance(inst, (fam.MSeries, fam.KFunction)):
        gamma_ = complex(inst.gamma) if isinstance(inst, fam.KFunction) else None
        p, q = len(inst.a), len(inst.b)
        conditional = False
        if p > q + 1:
            raise DivergenceError("series diverges for p > q + 1")
        if p == q + 1:
            r = abs(z)
            if r > 1.0 + 1e-12:
                raise DivergenceError("series diverges for |z| > 1 when p = q + 1")
            if abs(r - 1.0) <= 1e-12:
                conditional = _mk_boundary_status(inst.a, inst.b, z) == "conditional"
        gen = _terms_m_or_k(
            complex(inst.alpha), complex(inst.beta), gamma_, inst.a, inst.b, z
        )
        return _sum_terms(gen, tol, cap, conditional=conditional)
    if isinstance(inst, fam.WrightPhi):
        spec = fam.FoxWrightSpec(upper=(), lower=((inst.beta, inst.alpha),))
        return fox_wright_eval(spec, z, tol, cap)
    if isinstance(inst, fam.BesselWright):
        spec = fam.FoxWrightSpec(
            upper=(), lower=((inst.rho + 1.0, inst.mu),), arg_coeff=-1.0
        )
        return fox_wright_eval(spec, z, tol, cap)
    if isinstance(inst, fam.LommelWright):
        return fox_wright_eval(reduce_to_fox_wright(inst), z, tol, cap)
    if isinstance(inst, fam.MultipleML):
        return _sum_terms(_terms_multiple_ml(inst, z), tol, cap)
    raise ParameterError(f"unknown series instance {type(inst).__name__}")


def _terms_multiple_ml(inst: fam.MultipleML, w):
    if w == 0:
        yield reciprocal_gamma(inst.beta) ** inst.mu
        return
    lw = cmath.log(w)
    n = 0
    while True:
        lr = log_rgamma(inst.alpha * n + inst.beta)
        yield 0.0 if lr is None else cmath.exp(n * lw + inst.mu * lr)
        n += 1


# ---------------------------------------------------------------------------
# Fox-Wright evaluation (vectorized in blocks)
# ---------------------------------------------------------------------------

_BLOCK = 48


def _pole_mask(vals: np.ndarray) -> np.ndarray:
    k = np.round(vals.real)
    return (k <= 0) & (np.abs(vals.real - k) <= 1e-12) & (np.abs(vals.imag) <= 1e-12)


def fox_wright_eval(
    spec: fam.FoxWrightSpec, z: complex, tol: float = DEFAULT_TOL, cap: int | None = None
) -> fam.EvalResult:
    """Evaluate a Fox-Wright psi series (with its outer prefactor map).

    The series runs at w = arg_coeff * z^(+-arg_power); the result value is
    prefactor * z^z_power * psi(w).  DivergenceError outside the domain
    reported by :func:`fraccalc.gammakit.classify_convergence`; boundary
    points of the disk case are summed with a hard cap and flagged
    "conditional" unless Re(mu) > 1/2 makes them absolutely convergent.
    """
    z = complex(z)
    cap = term_cap(cap)
    report = classify_convergence(spec)
    w = spec.argument(z)
    conditional = False
    if report.kind == "divergent" and w != 0:
        raise DivergenceError("series diverges for all nonzero arguments (delta < -1)")
    if report.kind in ("disk", "boundary-conditional") and w != 0:
        r = abs(w)
        if r > report.radius + 1e-12:
            raise DivergenceError(
                f"|w| = {r:.6g} outside the convergence disk of radius "
                f"{report.radius:.6g}"
            )
        if abs(r - report.radius) <= 1e-12:
            if report.kind == "disk":
                conditional = True  # boundary without Re(mu) > 1/2

    upper = spec.upper
    lower = spec.lower
    norm = 1.0 + 0.0j
    if spec.normalized:
        for b, _ in lower:
            norm *= gamma(b)
        for a, _ in upper:
            norm /= gamma(a)
    outer = spec.outer_factor(z) * norm

    if w == 0:
        t0 = 1.0 + 0.0j
        for a, _ in upper:
            t0 *= gamma(a)
        for b, _ in lower:
            t0 *= reciprocal_gamma(b)
        return fam.EvalResult(outer * t0, 1, 0.0, "converged")

    lw = cmath.log(w)

    def blocks():
        n0 = 0
        while True:
            ns = np.arange(n0, n0 + _BLOCK, dtype=float)
            logs = ns * lw - _sp_loggamma(ns + 1.0)
            dead = np.zeros(len(ns), dtype=bool)
            for a, wt in upper:
                vals = a + wt * ns
                if _pole_mask(vals).any():
                    raise PoleError(
                        "upper parameter pair hits a gamma pole along the "
                        f"series: ({a}, {wt})"
                    )
                logs = logs + _sp_loggamma(vals)
            for b, wt in lower:
                vals = b + wt * ns
                mask = _pole_mask(vals)
                dead |= mask
                safe = np.where(mask, 1.0, vals)
                logs = logs - _sp_loggamma(safe)
            terms = np.exp(logs)
            terms[dead] = 0.0
            yield from terms
            n0 += _BLOCK

    res = _sum_terms(blocks(), tol, cap, conditional=conditional)
    return fam.EvalResult(outer * res.value, res.terms_used, res.tail_bound, res.status)


# ---------------------------------------------------------------------------
# reductions into the Fox-Wright representation
# ---------------------------------------------------------------------------


def reduce_to_fox_wright(item) -> fam.FoxWrightSpec:
    """Map a family member or series instance onto its Fox-Wright data.

    Raises UnsupportedReduction for the four-, six-parameter and
    Kilbas-Saigo variants (no psi identity available) and for non-integer
    exponents of the multiple-ML function.
    """
    from .errors import UnsupportedReduction

    if isinstance(item, fam.One):
        item = fam.Two(item.alpha, 1.0)
    if isinstance(item, fam.Two):
        return fam.FoxWrightSpec(
            upper=((1.0, 1.0),), lower=((item.beta, complex(item.alpha).real),)
        )
    if isinstance(item, fam.Three):
        if is_nonpositive_int(item.gamma):
            raise UnsupportedReduction(
                "terminating Prabhakar weight: psi form needs 1/Gamma(gamma) finite"
            )
        return fam.FoxWrightSpec(
            upper=((item.gamma, 1.0),),
            lower=((item.beta, complex(item.alpha).real),),
            prefactor=reciprocal_gamma(item.gamma),
        )
    if isinstance(item, fam.MultiIndex):
        return fam.FoxWrightSpec(
            upper=((1.0, 1.0),),
            lower=tuple((b, a) for a, b in item.pairs),
        )
    if isinstance(item, fam.MSeries):
        pref = 1.0 + 0.0j
        for b in item.b:
            pref *= gamma(b)
        for a in item.a:
            pref /= gamma(a)
        return fam.FoxWrightSpec(
            upper=tuple((a, 1.0) for a in item.a) + ((1.0, 1.0),),
            lower=tuple((b, 1.0) for b in item.b)
            + ((item.beta, complex(item.alpha).real),),
            prefactor=pref,
        )
    if isinstance(item, fam.KFunction):
        if is_nonpositive_int(item.gamma):
            raise UnsupportedReduction("terminating K-function weight")
        pref = reciprocal_gamma(item.gamma)
        for b in item.b:
            pref *= gamma(b)
        for a in item.a:
            pref /= gamma(a)
        return fam.FoxWrightSpec(
            upper=tuple((a, 1.0) for a in item.a) + ((item.gamma, 1.0), (1.0, 1.0)),
            lower=tuple((b, 1.0) for b in item.b)
            + ((1.0, 1.0), (item.beta, complex(item.alpha).real)),
            prefactor=pref,
        )
    if isinstance(item, fam.WrightPhi):
        return fam.FoxWrightSpec(upper=(), lower=((item.beta, item.alpha),))
    if isinstance(item, fam.BesselWright):
        return fam.FoxWrightSpec(
            upper=(), lower=((item.rho + 1.0, item.mu),), arg_coeff=-1.0
        )
    if isinstance(item, fam.LommelWright):
        zp = item.rho + 2.0 * item.lam
        return fam.FoxWrightSpec(
            upper=((1.0, 1.0),),
            lower=tuple((item.lam + 1.0, 1.0) for _ in range(item.nu))
            + ((item.rho + item.lam + 1.0, item.mu),),
            prefactor=cmath.exp(-zp * math.log(2.0)),
            z_power=zp,
            arg_coeff=-0.25,
            arg_power=2.0,
        )
    if isinstance(item, fam.MultipleML):
        mu = item.mu
        if abs(mu - round(mu)) > 1e-12 or round(mu) < 1:
            raise UnsupportedReduction(
                "multiple-ML reduces to a psi function only for integer exponents"
            )
        reps = int(round(mu))
        return fam.FoxWrightSpec(
            upper=((1.0, 1.0),),
            lower=tuple((item.beta, item.alpha) for _ in range(reps)),
        )
    raise UnsupportedReduction(f"no Fox-Wright identity for {type(item).__name__}")


def hypergeometric_reduction_check(spec: fam.FoxWrightSpec):
    """If every weight is 1, return the plain pFq description.

    Returns (a_list, b_list, prefactor) with
    psi(w) = prefactor * pFq(a; b; w), prefactor = prod Gamma(a)/prod
    Gamma(b); ``None`` when any weight differs from 1.  The description
    covers the bare series; the spec's outer map is untouched.
    """
    for _, w in spec.upper + spec.lower:
        if abs(w - 1.0) > 1e-12:
            return None
    a_list = tuple(a for a, _ in spec.upper)
    b_list = tuple(b for b, _ in spec.lower)
    pref = 1.0 + 0.0j
    for a in a_list:
        pref *= gamma(a)
    for b in b_list:
        pref *= reciprocal_gamma(b)
    return (a_list, b_list, pref)


def pfq_series(a_list, b_list, z: complex, tol: float = DEFAULT_TOL, cap: int | None = None) -> fam.EvalResult:
    """Generalized hypergeometric series sum prod (a)_n/prod (b)_n z^n/n!."""
    z = complex(z)
    cap = term_cap(cap)

    def gen():
        term = 1.0 + 0.0j
        n = 0
        while True:
            if term == 0:
                return
            yield term
            step = z / (n + 1.0)
            for a in a_list:
                step *= complex(a) + n
            for b in b_list:
                den = complex(b) + n
                if den == 0:
                    raise PoleError("pFq bottom parameter hit a non-positive integer")
                step /= den
            term *= step
            n += 1

    return _sum_terms(gen(), tol, cap)
