"""Addition theorems and series expansions of the Green's functions.

The two-point kernels of the closed-form solutions separate into
products of single-point Legendre/Ferrers functions weighted by
Gegenbauer polynomials of the separation angle.  This module evaluates

* the associated Legendre addition theorems (P and Q kinds) on the
  hyperboloid composite argument cosh rho,
* the six Ferrers addition theorems on cos Theta, with the mu -> 0
  Chebyshev limits and the degree-equals-order special cases,
* the Gegenbauer expansions of every Green's-function variant (d >= 3)
  and the azimuthal Fourier expansions in d = 2,
* the flat-space Gegenbauer-Bessel expansions used as the Euclidean
  comparison,
* the convergence-domain predicate tan(th</2) tan(th>/2) < 1 with its
  geometric tail-rate estimate.

Every series is reported through a SeriesReport holding the truncated
value, the directly evaluated closed-form reference and their relative
difference, so the comparison is honest: the composite argument is
always recomputed from the two-point formula, never passed in.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import scipy.special as _sp

from .errors import (DomainError, DomainViolationError, UndefinedError,
                     WrongCaseError)
from .geometry import composite_hyperbolic, composite_spherical
from .greens import (A_PLUS, FRAK_MINUS, H_MINUS, H_PLUS, MINUS, PLUS,
                     S_PLUS, SF_MINUS, WaveParams, green_value)
from .legendre import ferrers_p, ferrers_q, legendre_p, legendre_q
from .result import NONCONVERGENT
from .specfun import _cgamma, _near_nonpos_int, chebyshev_t, epsilon_n, \
    gegenbauer_c

_TRUNC_REL = 1e-15
_TRUNC_RUN = 3


@dataclass(frozen=True)
class TwoPointConfig:
    """Radial pair plus separation angle of a two-point configuration.

    ``r1``/``r2`` are the radial coordinates (r, r' on the hyperboloid
    or in flat space, theta, theta' on the hypersphere) and ``gamma``
    the separation angle on the common S^{d-1}.
    """

    r1: float
    r2: float
    gamma: float

    @property
    def lt(self) -> float:
        return min(self.r1, self.r2)

    @property
    def gt(self) -> float:
        return max(self.r1, self.r2)

    @property
    def distinct(self) -> bool:
        return self.r1 != self.r2

    @property
    def cos_gamma(self) -> float:
        return math.cos(self.gamma)

    def rho_hyperbolic(self) -> float:
        return composite_hyperbolic(self.r1, self.r2, self.cos_gamma)

    def theta_spherical(self) -> float:
        return composite_spherical(self.r1, self.r2, self.cos_gamma)

    def euclidean_distance(self) -> float:
        return math.sqrt(max(self.r1 ** 2 + self.r2 ** 2
                             - 2.0 * self.r1 * self.r2 * self.cos_gamma,
                             0.0))


@dataclass(frozen=True)
class SeriesReport:
    """Truncated-series outcome with its convergence bookkeeping."""

    value: complex
    terms: int
    last_term_mag: float
    est_ratio: float
    domain_ok: bool
    reference_value: complex | None = None
    rel_err: float | None = None
    flags: frozenset = frozenset()


def convergence_domain(theta_lt: float, theta_gt: float,
                       needs_distinct: bool):
    """Predict convergence of the spherical addition theorems.

    Returns (domain_ok, est_ratio): the domain requires
    tan(th</2) tan(th>/2) < 1 and, for most kinds, th< != th>; the
    estimated geometric tail ratio is the larger of tan tan and
    (when distinctness is required) tan cot.
    """
    if not (0.0 < theta_lt < math.pi and 0.0 < theta_gt < math.pi):
        raise DomainError("angles must lie in (0, pi)")
    t_lt = math.tan(0.5 * theta_lt)
    t_gt = math.tan(0.5 * theta_gt)
    ratio = t_lt * t_gt
    # open condition with a one-ulp guard so the symbolic boundary
    # theta = theta' = pi/2 is rejected despite rounding below 1
    ok = ratio < 1.0 - 1e-12
    if needs_distinct:
        ratio = max(ratio, t_lt / t_gt)
        ok = ok and theta_lt != theta_gt
    return ok, ratio


def _run_series(term_fn, n_max: int, prefactor, reference, est_ratio,
                domain_ok: bool) -> SeriesReport:
    """Accumulate prefactor * sum of term_fn(n) with the standard
    truncation policy and tail diagnostics; n_max caps the number of
    terms consumed."""
    total = 0.0 + 0.0j
    mags = []
    small = 0
    used = 0
    for n in range(n_max):
        t = complex(term_fn(n))
        total += t
        mags.append(abs(t))
        used = n + 1
        if abs(t) <= _TRUNC_REL * max(abs(total), 1e-300):
            small += 1
            if small >= _TRUNC_RUN:
                break
        else:
            small = 0
    flags = set()
    if len(mags) >= 5 and all(mags[-i] >= mags[-i - 1] * (1.0 - 1e-12)
                              for i in range(1, 5)) and mags[-1] > 0:
        flags.add(NONCONVERGENT)
    value = prefactor * total
    rel = None
    if reference is not None:
        rel = abs(value - reference) / max(abs(reference), 1e-300)
    return SeriesReport(value, used, abs(prefactor) * mags[-1],
                        float(est_ratio), domain_ok, reference,
                        rel, frozenset(flags))


# ----------------------------------------------------------------------
# Associated Legendre addition theorems (hyperboloid composite)
# ----------------------------------------------------------------------

def addition_legendre(kind: str, nu, mu, cfg: TwoPointConfig,
                      n_max: int = 60) -> SeriesReport:
    """Addition theorem for P_nu^mu(cosh rho)/sinh^mu rho (kind 'P') or
    Q_nu^mu(cosh rho)/sinh^mu rho (kind 'Q'), r != r'.

    mu = 0 dispatches to the Chebyshev form with Neumann factors.  The
    reference value is the directly evaluated left-hand side at the
    recomputed composite rho.
    """
    if kind not in ("P", "Q"):
        raise DomainError("kind must be 'P' or 'Q'")
    if not (cfg.r1 > 0 and cfg.r2 > 0):
        raise DomainError("radial coordinates must be positive")
    if not cfg.distinct:
        raise DomainViolationError("addition theorem requires r != r'")
    hit, _ = _near_nonpos_int(complex(nu) + 1.0)
    if hit:
        raise DomainError("degree nu must avoid the negative integers")
    nu, mu = complex(nu), complex(mu)
    r_lt, r_gt, cg = cfg.lt, cfg.gt, cfg.cos_gamma
    rho = cfg.rho_hyperbolic()
    z_lt, z_gt, zr = math.cosh(r_lt), math.cosh(r_gt), math.cosh(rho)
    outer = legendre_p if kind == "P" else legendre_q
    ratio = math.tanh(0.5 * r_lt) / math.tanh(0.5 * r_gt)

    if mu == 0:
        ref = outer(nu, 0.0, zr).value

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (epsilon_n(n) * sgn
                    * legendre_p(nu, -float(n), z_lt).value
                    * outer(nu, float(n), z_gt).value
                    * chebyshev_t(n, cg))

        return _run_series(term, n_max, 1.0, ref, ratio, True)

    ref = outer(nu, mu, zr).value / math.sinh(rho) ** mu
    pre = (2.0 ** mu * _cgamma(mu)
           / (math.sinh(r_lt) * math.sinh(r_gt)) ** mu)

    def term(n):
        sgn = -1.0 if n % 2 else 1.0
        p_small = legendre_p(nu, -(mu + n), z_lt).value
        f_large = outer(nu, mu + n, z_gt).value
        return sgn * (n + mu) * (p_small * f_large) * gegenbauer_c(n, mu, cg)

    return _run_series(term, n_max, pre, ref, ratio, True)


# ----------------------------------------------------------------------
# Ferrers addition theorems (hypersphere composite)
# ----------------------------------------------------------------------

_FERRERS_ADD_KINDS = ("PmPp", "PmQp", "PmPm", "PmQm", "PmPmmx", "QmPmmx")


def _poch_undefined_check(nu, order) -> bool:
    """True if FQ_nu^{order} hits an undefined parameter combination."""
    s = complex(nu) + complex(order)
    hit, n = _near_nonpos_int(s + 1.0)
    if not hit:
        return False
    anom, _ = _near_nonpos_int(complex(nu) + 1.5)
    return not anom


def addition_ferrers(kind: str, nu, mu, cfg: TwoPointConfig,
                     n_max: int = 80) -> SeriesReport:
    """The six Ferrers addition theorems on the composite cos Theta.

    Kinds name the left-hand side: 'PmPp' = FP^{+mu}(cos Theta) built
    from FP^{-(mu+n)} FP^{+(mu+n)} pairs, 'PmQp' the FQ^{+mu} analog,
    'PmPm'/'PmQm' the negative-order pair forms carrying Pochhammer
    weights, 'PmPmmx'/'QmPmmx' the reflected-argument forms.  Requires
    Re mu > -1/2; mu = 0 dispatches to the Chebyshev limit forms.  The
    convergence predicate is evaluated first; all kinds except 'PmPm'
    also require theta != theta'.
    """
    if kind not in _FERRERS_ADD_KINDS:
        raise DomainError(f"kind must be one of {_FERRERS_ADD_KINDS}")
    if not (0.0 < cfg.r1 < math.pi and 0.0 < cfg.r2 < math.pi):
        raise DomainError("angles must lie in (0, pi)")
    nu, mu = complex(nu), complex(mu)
    if mu.real <= -0.5:
        raise DomainError("requires Re mu > -1/2")
    hit, _ = _near_nonpos_int(nu + 1.0)
    if hit:
        raise DomainError("degree nu must avoid the negative integers")
    needs_distinct = kind != "PmPm"
    ok, ratio = convergence_domain(cfg.lt, cfg.gt, needs_distinct)
    if not ok:
        raise DomainViolationError(
            "outside the convergence domain: tan(th</2) tan(th>/2) >= 1"
            if math.tan(0.5 * cfg.lt) * math.tan(0.5 * cfg.gt) >= 1.0
            else "theta = theta' not allowed for this kind")

    if kind == "PmQm" and abs(nu - mu) < 1e-8:
        # removable term-by-term singularity: evaluate at perturbed
        # degrees (well outside this detection window) and average
        d = mu * 1e-7 if mu != 0 else 1e-7
        up = addition_ferrers(kind, mu + d, mu, cfg, n_max)
        dn = addition_ferrers(kind, mu - d, mu, cfg, n_max)
        ref = (ferrers_q(nu, -mu, math.cos(cfg.theta_spherical())).value
               / math.sin(cfg.theta_spherical()) ** mu)
        val = 0.5 * (up.value + dn.value)
        return SeriesReport(val, up.terms + dn.terms, up.last_term_mag,
                            up.est_ratio, True, ref,
                            abs(val - ref) / max(abs(ref), 1e-300),
                            up.flags | dn.flags)

    th_lt, th_gt, cg = cfg.lt, cfg.gt, cfg.cos_gamma
    x_lt, x_gt = math.cos(th_lt), math.cos(th_gt)
    big_theta = cfg.theta_spherical()
    x_th = math.cos(big_theta)

    if mu == 0:
        return _ferrers_addition_mu0(kind, nu, cfg, n_max, ratio)

    sin_pow = math.sin(big_theta) ** mu
    pre = (2.0 ** mu * _cgamma(mu)
           / (math.sin(th_lt) * math.sin(th_gt)) ** mu)

    if kind == "PmPp":
        ref = ferrers_p(nu, mu, x_th).value / sin_pow

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (sgn * (n + mu)
                    * ferrers_p(nu, -(mu + n), x_lt).value
                    * ferrers_p(nu, mu + n, x_gt).value
                    * gegenbauer_c(n, mu, cg))
    elif kind == "PmQp":
        ref = ferrers_q(nu, mu, x_th).value / sin_pow

        def term(n):
            if _poch_undefined_check(nu, mu + n):
                raise UndefinedError(
                    "FQ undefined at an interior series order")
            sgn = -1.0 if n % 2 else 1.0
            return (sgn * (n + mu)
                    * ferrers_p(nu, -(mu + n), x_lt).value
                    * ferrers_q(nu, mu + n, x_gt).value
                    * gegenbauer_c(n, mu, cg))
    elif kind in ("PmPm", "PmQm"):
        fn = ferrers_p if kind == "PmPm" else ferrers_q
        ref = fn(nu, -mu, x_th).value / sin_pow

        def term(n):
            if kind == "PmQm":
                poch = _poch(nu, mu, n)
                if poch == 0.0:
                    return 0.0
                if _poch_undefined_check(nu, -(mu + n)):
                    raise UndefinedError(
                        "FQ undefined at an interior series order")
            else:
                poch = _poch(nu, mu, n)
            sgn = -1.0 if n % 2 else 1.0
            a = ferrers_p(nu, -(mu + n), x_lt).value
            b = fn(nu, -(mu + n), x_gt).value
            return sgn * (n + mu) * poch * (a * b) * gegenbauer_c(n, mu, cg)
    else:  # PmPmmx / QmPmmx: reflected argument, no (-1)^n factor
        fn = ferrers_p if kind == "PmPmmx" else ferrers_q
        ref = fn(nu, -mu, -x_th).value / sin_pow

        def term(n):
            if kind == "QmPmmx":
                poch = _poch(nu, mu, n)
                if poch == 0.0:
                    return 0.0
                if _poch_undefined_check(nu, -(mu + n)):
                    raise UndefinedError(
                        "FQ undefined at an interior series order")
            else:
                poch = _poch(nu, mu, n)
            a = ferrers_p(nu, -(mu + n), x_lt).value
            b = fn(nu, -(mu + n), -x_gt).value
            return (n + mu) * poch * (a * b) * gegenbauer_c(n, mu, cg)

    return _run_series(term, n_max, pre, ref, ratio, ok)


def _poch(nu, mu, n: int) -> complex:
    """(nu + mu + 1)_n (mu - nu)_n accumulated as an exact product."""
    acc = 1.0 + 0.0j
    for k in range(n):
        acc *= (nu + mu + 1.0 + k) * (mu - nu + k)
    return acc


def _ferrers_addition_mu0(kind, nu, cfg, n_max, ratio) -> SeriesReport:
    """mu -> 0 Chebyshev limits of the six Ferrers addition theorems."""
    th_lt, th_gt, cg = cfg.lt, cfg.gt, cfg.cos_gamma
    x_lt, x_gt = math.cos(th_lt), math.cos(th_gt)
    x_th = math.cos(cfg.theta_spherical())

    def poch0(n):
        acc = 1.0 + 0.0j
        for k in range(n):
            acc *= (nu + 1.0 + k) * (-nu + k)
        return acc

    if kind in ("PmPp", "PmPm"):
        ref = ferrers_p(nu, 0.0, x_th).value
    elif kind in ("PmQp", "PmQm"):
        ref = ferrers_q(nu, 0.0, x_th).value
    elif kind == "PmPmmx":
        ref = ferrers_p(nu, 0.0, -x_th).value
    else:
        ref = ferrers_q(nu, 0.0, -x_th).value

    if kind in ("PmPp", "PmQp"):
        fn = ferrers_p if kind == "PmPp" else ferrers_q

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (epsilon_n(n) * sgn
                    * ferrers_p(nu, -float(n), x_lt).value
                    * fn(nu, float(n), x_gt).value * chebyshev_t(n, cg))
    elif kind in ("PmPm", "PmQm"):
        fn = ferrers_p if kind == "PmPm" else ferrers_q

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (epsilon_n(n) * sgn * poch0(n)
                    * ferrers_p(nu, -float(n), x_lt).value
                    * fn(nu, -float(n), x_gt).value * chebyshev_t(n, cg))
    else:
        fn = ferrers_p if kind == "PmPmmx" else ferrers_q

        def term(n):
            return (epsilon_n(n) * poch0(n)
                    * ferrers_p(nu, -float(n), x_lt).value
                    * fn(nu, -float(n), -x_gt).value * chebyshev_t(n, cg))

    return _run_series(term, n_max, 1.0, ref, ratio, True)


# ----------------------------------------------------------------------
# Degree-equals-order and other special-case series
# ----------------------------------------------------------------------

_SPECIAL_CASES = ("NU_EQ_MU_HALFINT", "NU_EQ_MU_INT", "LOGCOT", "Q_K_MK",
                  "Q_MH_MMH", "COSH_SINH_LEGENDRE")


def addition_special(case: str, params: dict, cfg: TwoPointConfig,
                     n_max: int = 80) -> SeriesReport:
    """Specialized addition-theorem corollaries with closed-form sides.

    case and its parameters:
      'NU_EQ_MU_HALFINT' {mu}: FQ_mu^{-mu} series over FP FQ pairs
          (valid except mu half-odd-integer),
      'NU_EQ_MU_INT'     {mu}: FQ_mu^{-mu} series over FP FP pairs
          (valid except mu integer),
      'LOGCOT'           {}:   expansion of log cot(Theta/2),
      'Q_K_MK'           {k}:  FQ_k^{-k} series, k a positive integer,
      'Q_MH_MMH'         {m}:  FQ_{m+1/2}^{-m-1/2} series, m >= 0,
      'COSH_SINH_LEGENDRE' {nu, form}: the hyperbolic closed forms
          cosh((nu+1/2) rho)/sinh rho (form='cosh') and
          exp(-(nu+1/2) rho)/sinh rho (form='exp').
    """
    if case not in _SPECIAL_CASES:
        raise WrongCaseError(f"case must be one of {_SPECIAL_CASES}")

    if case == "COSH_SINH_LEGENDRE":
        nu = complex(params["nu"])
        form = params.get("form", "cosh")
        if not (cfg.r1 > 0 and cfg.r2 > 0 and cfg.distinct):
            raise DomainViolationError("requires 0 < r != r'")
        rho = cfg.rho_hyperbolic()
        r_lt, r_gt, cg = cfg.lt, cfg.gt, cfg.cos_gamma
        z_lt, z_gt = math.cosh(r_lt), math.cosh(r_gt)
        root = math.sqrt(math.sinh(r_lt) * math.sinh(r_gt))
        ratio = math.tanh(0.5 * r_lt) / math.tanh(0.5 * r_gt)
        if form == "cosh":
            ref = cmath.cosh((nu + 0.5) * rho) / math.sinh(rho)
            pre = 0.5 * math.pi / root

            def term(n):
                sgn = -1.0 if n % 2 else 1.0
                return (sgn * (2 * n + 1)
                        * legendre_p(nu, -(n + 0.5), z_lt).value
                        * legendre_p(nu, n + 0.5, z_gt).value
                        * gegenbauer_c(n, 0.5, cg))
        elif form == "exp":
            ref = cmath.exp(-(nu + 0.5) * rho) / math.sinh(rho)
            pre = -1j / root

            def term(n):
                sgn = -1.0 if n % 2 else 1.0
                return (sgn * (2 * n + 1)
                        * legendre_p(nu, -(n + 0.5), z_lt).value
                        * legendre_q(nu, n + 0.5, z_gt).value
                        * gegenbauer_c(n, 0.5, cg))
        else:
            raise WrongCaseError("form must be 'cosh' or 'exp'")
        return _run_series(term, n_max, pre, ref, ratio, True)

    # spherical cases below
    if not (0.0 < cfg.r1 < math.pi and 0.0 < cfg.r2 < math.pi):
        raise DomainError("angles must lie in (0, pi)")
    ok, ratio = convergence_domain(cfg.lt, cfg.gt, True)
    if not ok:
        raise DomainViolationError("outside the convergence domain")
    th_lt, th_gt, cg = cfg.lt, cfg.gt, cfg.cos_gamma
    x_lt, x_gt = math.cos(th_lt), math.cos(th_gt)
    big_theta = cfg.theta_spherical()

    if case == "LOGCOT":
        ref = math.log(1.0 / math.tan(0.5 * big_theta))
        base = math.log(1.0 / math.tan(0.5 * th_gt))
        c2, s2 = math.cos(0.5 * th_gt) ** 2, math.sin(0.5 * th_gt) ** 2
        tfac = math.tan(0.5 * th_lt) / math.sin(th_gt)

        def term(n):
            if n == 0:
                return base
            sgn = -1.0 if n % 2 else 1.0
            return (2.0 ** n / n * tfac ** n * (c2 ** n - sgn * s2 ** n)
                    * chebyshev_t(n, cg))

        return _run_series(term, n_max, 1.0, ref, ratio, ok)

    if case == "Q_K_MK":
        k = int(params["k"])
        if k < 1:
            raise WrongCaseError("k must be a positive integer")
        ref = (ferrers_q(k, -k, math.cos(big_theta)).value
               / math.sin(big_theta) ** k)
        pre = (math.sqrt(math.pi) * (-1.0) ** k
               / (k * 2.0 ** k * _cgamma(k + 0.5)
                  * (math.sin(th_lt) * math.sin(th_gt)) ** k))

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (sgn * (n + k)
                    * ferrers_p(k, -(n + k), x_lt).value
                    * ferrers_q(k, float(n + k), x_gt).value
                    * gegenbauer_c(n, k, cg))

        return _run_series(term, n_max, pre, ref, ratio, ok)

    if case == "Q_MH_MMH":
        m = int(params["m"])
        if m < 0:
            raise WrongCaseError("m must be a nonnegative integer")
        muh = m + 0.5
        ref = (ferrers_q(muh, -muh, math.cos(big_theta)).value
               / math.sin(big_theta) ** muh)
        pre = ((-1.0) ** m * math.pi ** 1.5
               / ((2 * m + 1) * 2.0 ** (m + 1.5) * math.gamma(m + 1.0)
                  * (math.sin(th_lt) * math.sin(th_gt)) ** muh))

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (sgn * (2 * n + 2 * m + 1)
                    * ferrers_p(muh, -(n + muh), x_lt).value
                    * ferrers_p(muh, n + muh, x_gt).value
                    * gegenbauer_c(n, muh, cg))

        return _run_series(term, n_max, pre, ref, ratio, ok)

    mu = complex(params["mu"])
    if mu == 0 or mu.real <= -0.5:
        raise WrongCaseError("requires mu > -1/2, mu != 0")
    half = 2.0 * mu
    if case == "NU_EQ_MU_HALFINT" and abs(half.imag) < 1e-12 \
            and abs(half.real - round(half.real)) < 1e-10 \
            and round(half.real) % 2 == 1:
        raise WrongCaseError("first equality invalid at half-odd mu")
    if case == "NU_EQ_MU_INT" and abs(mu.imag) < 1e-12 \
            and abs(mu.real - round(mu.real)) < 1e-10:
        raise WrongCaseError("second equality invalid at integer mu")
    ref = (ferrers_q(mu, -mu, math.cos(big_theta)).value
           / cmath.exp(mu * cmath.log(math.sin(big_theta))))
    sins = (math.sin(th_lt) * math.sin(th_gt)) ** mu
    if case == "NU_EQ_MU_HALFINT":
        const = (math.pi * cmath.tan(math.pi * mu)
                 / (2.0 ** (mu + 1.0) * _cgamma(mu + 1.0)))
        pre = (math.sqrt(math.pi) / cmath.cos(math.pi * mu)
               / (mu * 2.0 ** mu * _cgamma(mu + 0.5) * sins))

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (sgn * (n + mu)
                    * ferrers_p(mu, -(n + mu), x_lt).value
                    * ferrers_q(mu, n + mu, x_gt).value
                    * gegenbauer_c(n, mu, cg))
    else:
        const = (-math.pi / cmath.tan(math.pi * mu)
                 / (2.0 ** (mu + 1.0) * _cgamma(mu + 1.0)))
        pre = (math.pi ** 1.5 / cmath.sin(math.pi * mu)
               / (mu * 2.0 ** (mu + 1.0) * _cgamma(mu + 0.5) * sins))

        def term(n):
            sgn = -1.0 if n % 2 else 1.0
            return (sgn * (n + mu)
                    * ferrers_p(mu, -(n + mu), x_lt).value
                    * ferrers_p(mu, n + mu, x_gt).value
                    * gegenbauer_c(n, mu, cg))

    inner = _run_series(term, n_max, pre, None, ratio, ok)
    value = const + inner.value
    rel = abs(value - ref) / max(abs(ref), 1e-300)
    return SeriesReport(value, inner.terms, inner.last_term_mag,
                        inner.est_ratio, ok, ref, rel, inner.flags)


# ----------------------------------------------------------------------
# Gegenbauer expansions of the Green's functions (d >= 3)
# ----------------------------------------------------------------------

def _const_a(d: int, R: float) -> float:
    return _cgamma(0.5 * d).real / (2.0 * (d - 2.0)
                                    * math.pi ** (0.5 * d) * R ** (d - 2))


def _const_b(wp: WaveParams) -> complex:
    d, R = wp.manifold.d, wp.manifold.R
    mu, nu = wp.mu, wp.nu
    return (2.0 ** mu * _cgamma(mu) * _cgamma(nu + mu + 1.0)
            * _cgamma(mu - nu)
            / (2.0 ** (0.5 * d + 2.0) * math.pi ** (0.5 * d)
               * R ** (d - 2)))


_EXPANDABLE = (H_PLUS, H_MINUS, S_PLUS, A_PLUS, SF_MINUS, FRAK_MINUS)


def green_expansion(variant: str, wp: WaveParams, cfg: TwoPointConfig,
                    l_max: int = 40) -> SeriesReport:
    """Gegenbauer expansion of a Green's function, d >= 3.

    The reference value is the closed form at the recomputed composite
    separation.  Sphere variants enforce the tan tan < 1 predicate and
    theta != theta'; hyperboloid variants require r != r'.
    """
    if variant not in _EXPANDABLE:
        raise DomainError(f"no Gegenbauer expansion for {variant!r}")
    d = wp.manifold.d
    if d < 3:
        raise DomainError("Gegenbauer expansions require d >= 3; "
                          "use fourier_2d for d = 2")
    mu, nu = wp.mu, wp.nu
    if not cfg.distinct:
        raise DomainViolationError("expansion requires distinct radii")

    if variant in (H_PLUS, H_MINUS):
        if not (cfg.r1 > 0 and cfg.r2 > 0):
            raise DomainError("radial coordinates must be positive")
        rho = cfg.rho_hyperbolic()
        ref = green_value(variant, wp.manifold, wp.beta, rho).value
        r_lt, r_gt, cg = cfg.lt, cfg.gt, cfg.cos_gamma
        z_lt, z_gt = math.cosh(r_lt), math.cosh(r_gt)
        ratio = math.tanh(0.5 * r_lt) / math.tanh(0.5 * r_gt)
        pre = (cmath.exp(-1j * math.pi * mu) * _const_a(d, wp.manifold.R)
               / (math.sinh(r_lt) * math.sinh(r_gt)) ** mu)

        def term(l):
            sgn = -1.0 if l % 2 else 1.0
            return (sgn * (2 * l + d - 2)
                    * legendre_p(nu, -(mu + l), z_lt).value
                    * legendre_q(nu, mu + l, z_gt).value
                    * gegenbauer_c(l, mu, cg))

        return _run_series(term, l_max, pre, ref, ratio, True)

    # hypersphere variants
    ok, ratio = convergence_domain(cfg.lt, cfg.gt, True)
    if not ok:
        raise DomainViolationError("outside the convergence domain")
    th_lt, th_gt, cg = cfg.lt, cfg.gt, cfg.cos_gamma
    x_lt, x_gt = math.cos(th_lt), math.cos(th_gt)
    big_theta = cfg.theta_spherical()
    ref = green_value(variant, wp.manifold, wp.beta, big_theta).value
    sins = (math.sin(th_lt) * math.sin(th_gt)) ** mu

    if variant in (S_PLUS, A_PLUS, SF_MINUS):
        pre = _const_b(wp) / sins

        def term(l):
            poch = _poch(nu, mu, l)
            a = ferrers_p(nu, -(mu + l), x_lt).value
            if variant == A_PLUS:
                # antipodal bracket: the unreflected parent series
                # carries (-1)^l, so odd orders add instead of subtract
                sgn = -1.0 if l % 2 else 1.0
                b = (ferrers_p(nu, -(mu + l), -x_gt).value
                     - sgn * ferrers_p(nu, -(mu + l), x_gt).value)
            else:
                b = ferrers_p(nu, -(mu + l), -x_gt).value
            return ((2 * l + d - 2) * poch * (a * b)
                    * gegenbauer_c(l, mu, cg))

        return _run_series(term, l_max, pre, ref, ratio, ok)

    # FRAK_MINUS
    pre = (_const_a(d, wp.manifold.R)
           * _cgamma(nu + 0.5 * d) / _cgamma(nu - 0.5 * d + 2.0) / sins)

    def term(l):
        sgn = -1.0 if l % 2 else 1.0
        poch = _poch(nu, mu, l)
        a = ferrers_p(nu, -(mu + l), x_lt).value
        b = (ferrers_q(nu, -(mu + l), x_gt).value
             + 0.5j * math.pi * ferrers_p(nu, -(mu + l), x_gt).value)
        return sgn * (2 * l + d - 2) * poch * (a * b) * gegenbauer_c(l, mu, cg)

    return _run_series(term, l_max, pre, ref, ratio, ok)


def fourier_2d(variant: str, wp: WaveParams, cfg: TwoPointConfig,
               l_max: int = 40) -> SeriesReport:
    """Azimuthal Fourier expansion in d = 2; cfg.gamma is phi - phi'."""
    if variant not in _EXPANDABLE:
        raise DomainError(f"no Fourier expansion for {variant!r}")
    if wp.manifold.d != 2:
        raise DomainError("fourier_2d requires d = 2")
    nu = wp.nu
    if not cfg.distinct:
        raise DomainViolationError("expansion requires distinct radii")
    cg = cfg.cos_gamma

    if variant in (H_PLUS, H_MINUS):
        rho = cfg.rho_hyperbolic()
        ref = green_value(variant, wp.manifold, wp.beta, rho).value
        z_lt, z_gt = math.cosh(cfg.lt), math.cosh(cfg.gt)
        ratio = math.tanh(0.5 * cfg.lt) / math.tanh(0.5 * cfg.gt)

        def term(l):
            sgn = -1.0 if l % 2 else 1.0
            return (epsilon_n(l) * sgn
                    * legendre_p(nu, -float(l), z_lt).value
                    * legendre_q(nu, float(l), z_gt).value
                    * chebyshev_t(l, cg))

        return _run_series(term, l_max, 1.0 / (2.0 * math.pi), ref, ratio,
                           True)

    ok, ratio = convergence_domain(cfg.lt, cfg.gt, True)
    if not ok:
        raise DomainViolationError("outside the convergence domain")
    x_lt, x_gt = math.cos(cfg.lt), math.cos(cfg.gt)
    big_theta = cfg.theta_spherical()
    ref = green_value(variant, wp.manifold, wp.beta, big_theta).value

    def poch0(n):
        acc = 1.0 + 0.0j
        for k in range(n):
            acc *= (nu + 1.0 + k) * (-nu + k)
        return acc

    if variant in (S_PLUS, A_PLUS, SF_MINUS):
        pre = -1.0 / (4.0 * cmath.sin(math.pi * nu))

        def term(l):
            a = ferrers_p(nu, -float(l), x_lt).value
            if variant == A_PLUS:
                sgn = -1.0 if l % 2 else 1.0
                b = (ferrers_p(nu, -float(l), -x_gt).value
                     - sgn * ferrers_p(nu, -float(l), x_gt).value)
            else:
                b = ferrers_p(nu, -float(l), -x_gt).value
            return epsilon_n(l) * poch0(l) * (a * b) * chebyshev_t(l, cg)

        return _run_series(term, l_max, pre, ref, ratio, ok)

    # FRAK_MINUS in d = 2
    def term(l):
        sgn = -1.0 if l % 2 else 1.0
        a = ferrers_p(nu, -float(l), x_lt).value
        b = (ferrers_q(nu, float(l), x_gt).value
             + 0.5j * math.pi * ferrers_p(nu, float(l), x_gt).value)
        return epsilon_n(l) * sgn * (a * b) * chebyshev_t(l, cg)

    return _run_series(term, l_max, 1.0 / (2.0 * math.pi), ref, ratio, ok)


def euclidean_expansion(sign: str, d: int, beta: float, r: float,
                        r_prime: float, gamma_angle: float,
                        l_max: int = 40) -> SeriesReport:
    """Gegenbauer-Bessel expansion of the Euclidean Green's function.

    J H^(1) products for the minus sign, I K products for plus; the
    reference is the closed form at the law-of-cosines separation.
    """
    if sign not in (PLUS, MINUS):
        raise DomainError("sign must be 'plus' or 'minus'")
    if d < 2:
        raise DomainError("expansion requires d >= 2")
    if not (r > 0 and r_prime > 0):
        raise DomainError("radii must be positive")
    if r == r_prime:
        raise DomainViolationError("expansion requires r != r'")
    cfg = TwoPointConfig(r, r_prime, gamma_angle)
    dist = cfg.euclidean_distance()
    mu = 0.5 * d - 1.0
    cg = cfg.cos_gamma
    r_lt, r_gt = cfg.lt, cfg.gt
    if sign == PLUS:
        ref = ((2.0 * math.pi) ** (-0.5 * d) * (beta / dist) ** mu
               * _sp.kv(mu, beta * dist))
        small, large = _sp.iv, _sp.kv
        pre = ((2.0 * math.pi) ** (-0.5 * d) * beta ** mu * 2.0 ** mu
               * (_cgamma(mu).real if d > 2 else 1.0)
               / (beta * r * r_prime) ** mu)
    else:
        ref = (0.25j * (beta / (2.0 * math.pi * dist)) ** mu
               * _sp.hankel1(mu, beta * dist))
        small, large = _sp.jv, _sp.hankel1
        pre = (0.25j * (beta / (2.0 * math.pi)) ** mu * 2.0 ** mu
               * (_cgamma(mu).real if d > 2 else 1.0)
               / (beta * r * r_prime) ** mu)
    ratio = r_lt / r_gt

    if d == 2:
        def term(l):
            return (epsilon_n(l) * small(l, beta * r_lt)
                    * large(l, beta * r_gt) * chebyshev_t(l, cg))
    else:
        def term(l):
            return ((l + mu) * small(mu + l, beta * r_lt)
                    * large(mu + l, beta * r_gt) * gegenbauer_c(l, mu, cg))

    return _run_series(term, l_max, pre, complex(ref), ratio, True)
