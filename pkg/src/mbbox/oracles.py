"""Independent brute-force references for the closed-form and contour pipelines.

Everything here goes through direct quadrature or direct series summation:
the one-dimensional Feynman-parameter integrals for both boxes, the Euler
integral behind the 2F1 family, the Beta integral behind the gamma
prefactor, and the raw double series of the two-variable hypergeometric
function.  The only shared code with the evaluators under test is the
gamma prefactor itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from scipy.integrate import quad

from .closed_form import BoxValue, Kinematics
from .errors import DomainError, NonConvergence, NotConverged
from .specfun import ABOVE, BELOW, PV, CutPrescription, ln_gamma

__all__ = [
    "IntegrandKind",
    "IntegrandSpec",
    "feynman_1d_massless",
    "feynman_1d_onemass",
    "euler_f21_oracle",
    "beta_oracle",
    "f2_double_series",
]

QUAD_EPSABS = 1e-13
QUAD_EPSREL = 1e-12
QUAD_LIMIT = 400


class IntegrandKind(Enum):
    MASSLESS_Z = "massless-z"
    ONEMASS_Z = "onemass-z"
    EULER_F21 = "euler-f21"
    BETA_Y = "beta-y"
    F2_DOUBLE_SERIES = "f2-double-series"


@dataclass(frozen=True)
class IntegrandSpec:
    """Description of one oracle integrand and its endpoint singularities."""

    kind: IntegrandKind
    parameters: dict = field(default_factory=dict)
    singular_exponents: tuple = ()  # (endpoint, exponent) pairs

    def __post_init__(self):
        for endpoint, expo in self.singular_exponents:
            if expo <= -1.0:
                raise DomainError(
                    f"non-integrable exponent {expo} at endpoint {endpoint}")


def _quad(f, a, b, tag):
    val, err, info = quad(f, a, b, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL,
                          limit=QUAD_LIMIT, full_output=True)[:3]
    if err > 1e-8 * max(1.0, abs(val)):
        raise NotConverged(f"{tag}: quadrature error estimate {err:.2e}")
    return val, err, info["neval"]


def _sym_diff_quotient(a: float, b: float, p: float) -> float:
    """(a**p - b**p) / (b - a) for positive a, b, stable near a == b."""
    mid = 0.5 * (a + b)
    d = 0.5 * (b - a)
    r = d / mid
    if abs(r) > 1e-4:
        return (a ** p - b ** p) / (b - a)
    # (-(mid-d)^p + (mid+d)^p)/(-2d) expanded in d/mid
    c1 = (p - 1.0) * (p - 2.0) / 6.0
    c2 = (p - 1.0) * (p - 2.0) * (p - 3.0) * (p - 4.0) / 120.0
    return -p * mid ** (p - 1.0) * (1.0 + c1 * r * r + c2 * r ** 4)


def _gamma_prefactor(eps: float) -> float:
    return math.exp(2.0 * ln_gamma(eps).real - ln_gamma(2.0 * eps).real
                    + ln_gamma(1.0 - eps).real)


def _half_integral(eps, neg_s, neg_t, neg_m2, substitute, tag):
    """Integral over z in [0, 1/2] of the z-representation.

    The numerator piece singular at z = 0 behaves like (z q)^**(eps-1) with
    q = neg_s + neg_m2; mapping z = u**(1/eps) makes the integrand bounded.
    With ``substitute`` false the raw integrand is handed to the adaptive
    rule unchanged.
    """
    p = eps - 1.0

    def f(z):
        a = z * neg_s + (1.0 - z) * neg_m2
        b = (1.0 - z) * neg_t
        return _sym_diff_quotient(a, b, p)

    if not substitute:
        return _quad(f, 0.0, 0.5, tag)
    if neg_m2 != 0.0:
        # integrand already bounded at z = 0
        return _quad(f, 0.0, 0.5, tag)

    inv_eps = 1.0 / eps

    def g(u):
        z = u ** inv_eps
        return f(z) * inv_eps * u ** (inv_eps - 1.0) if u > 0.0 else 0.0

    # the z**(eps-1) factor times the Jacobian is exactly bounded; the
    # remaining smooth piece vanishes at u = 0 because 1/eps > 1
    return _quad(g, 0.0, 0.5 ** eps, tag)


def feynman_1d_massless(k: Kinematics, substitute: bool = True) -> BoxValue:
    """Massless box by direct quadrature of the one-dimensional z-integral.

    The integrand is (a**(e-1) - b**(e-1)) / (b - a) with a = z(-s) and
    b = (1-z)(-t); the apparent zero of the denominator inside (0, 1) is a
    removable point and is evaluated through a guarded difference quotient.
    """
    k.require_massless()
    eps = k.eps
    neg_s, neg_t = -k.s, -k.t
    IntegrandSpec(IntegrandKind.MASSLESS_Z, {"s": k.s, "t": k.t, "eps": eps},
                  ((0.0, eps - 1.0), (1.0, eps - 1.0)))
    v1, e1, n1 = _half_integral(eps, neg_s, neg_t, 0.0, substitute, "massless z lower")
    # mirror z -> 1-z maps the upper half onto the lower one with s <-> t
    v2, e2, n2 = _half_integral(eps, neg_t, neg_s, 0.0, substitute, "massless z upper")
    pref = _gamma_prefactor(eps)
    return BoxValue(complex(pref * (v1 + v2)), "feynman", {
        "neval": n1 + n2,
        "abserr": pref * (e1 + e2),
        "substituted": substitute,
    })


def feynman_1d_onemass(k: Kinematics, substitute: bool = True) -> BoxValue:
    """One-mass box by direct quadrature of its one-dimensional z-integral."""
    k.require_onemass()
    eps = k.eps
    neg_s, neg_t, neg_m2 = -k.s, -k.t, -k.msq
    IntegrandSpec(IntegrandKind.ONEMASS_Z,
                  {"s": k.s, "t": k.t, "msq": k.msq, "eps": eps},
                  ((1.0, eps - 1.0),))
    # lower half: both numerator pieces regular (the mass term keeps the
    # first one away from zero); upper half mirrored so the t-channel
    # singularity sits at z = 0 where the substitution absorbs it
    v1, e1, n1 = _half_integral(eps, neg_s, neg_t, neg_m2, False, "onemass z lower")

    p = eps - 1.0

    def f_upper(w):  # w = 1 - z
        a = (1.0 - w) * neg_s + w * neg_m2
        b = w * neg_t
        return _sym_diff_quotient(a, b, p)

    if substitute:
        inv_eps = 1.0 / eps

        def g(u):
            w = u ** inv_eps
            return f_upper(w) * inv_eps * u ** (inv_eps - 1.0) if u > 0.0 else 0.0

        v2, e2, n2 = _quad(g, 0.0, 0.5 ** eps, "onemass z upper")
    else:
        v2, e2, n2 = _quad(f_upper, 0.0, 0.5, "onemass z upper")
    pref = _gamma_prefactor(eps)
    return BoxValue(complex(pref * (v1 + v2)), "feynman", {
        "neval": n1 + n2,
        "abserr": pref * (e1 + e2),
        "substituted": substitute,
    })


def _euler_segment(eps, w, lo, hi, tag):
    # integral of z^(eps-1)/(1 - w z) over [lo, hi] with the z->u^(1/eps)
    # map absorbing the z = 0 endpoint
    inv_eps = 1.0 / eps

    def g(u):
        z = u ** inv_eps
        return inv_eps / (1.0 - w * z) if u > 0.0 else inv_eps

    return _quad(g, lo ** eps, hi ** eps, tag)


def euler_f21_oracle(eps: float, w_arg: float, cut: CutPrescription = PV,
                     excision: float = 1e-3) -> complex:
    """Euler-integral reference for (1/eps) 2F1(1, eps; eps+1; w).

    For w <= 1 this is a plain quadrature of z^(eps-1)/(1 - w z).  For
    w > 1 the integrand has a pole at z = 1/w; the principal value is
    defined by symmetric excision with one Richardson step in the excision
    radius, and the one-sided prescriptions add the half-residue term
    +- i pi w^(-eps).
    """
    if not (0.0 < eps < 1.0):
        raise DomainError(f"eps={eps} outside (0, 1)")
    if w_arg == 1.0:
        raise DomainError("integrand pole sits at the endpoint z=1")
    if w_arg < 1.0:
        val, _, _ = _euler_segment(eps, w_arg, 0.0, 1.0, "euler")
        return complex(val)

    z0 = 1.0 / w_arg

    def excised(r):
        v1, _, _ = _euler_segment(eps, w_arg, 0.0, z0 - r, "euler below pole")
        v2, _, _ = _quad(lambda z: z ** (eps - 1.0) / (1.0 - w_arg * z),
                         z0 + r, 1.0, "euler above pole")
        return v1 + v2

    # excised integral = PV - 2 g'(z0) r + O(r^3): eliminate the linear term
    r = excision
    pv = (10.0 * excised(r / 10.0) - excised(r)) / 9.0
    if cut is ABOVE:
        return complex(pv, math.pi * w_arg ** (-eps))
    if cut is BELOW:
        return complex(pv, -math.pi * w_arg ** (-eps))
    return complex(pv)


def beta_oracle(eps: float) -> float:
    """Quadrature of the symmetric Beta integrand (y(1-y))**(eps-1)."""
    if not (0.0 < eps <= 1.0):
        raise DomainError(f"eps={eps} outside (0, 1]")
    IntegrandSpec(IntegrandKind.BETA_Y, {"eps": eps},
                  ((0.0, eps - 1.0), (1.0, eps - 1.0)))
    inv_eps = 1.0 / eps

    def g(u):
        y = u ** inv_eps
        return inv_eps * (1.0 - y) ** (eps - 1.0) if u > 0.0 else inv_eps

    val, _, _ = _quad(g, 0.0, 0.5 ** eps, "beta")
    return 2.0 * val


def f2_double_series(alpha: float, beta: float, beta_p: float,
                     gamma1: float, gamma2: float, x: float, y: float,
                     increment_tol: float = 1e-15,
                     max_index: int = 4000) -> complex:
    """Raw double series of the two-variable hypergeometric function F2.

    Convergence requires |x| + |y| < 1.  Rows are summed with term
    recurrences; summation stops once a full row contributes below the
    increment tolerance and the geometric tail bound is negligible.
    """
    if abs(x) + abs(y) >= 1.0:
        raise NonConvergence(f"|x|+|y|={abs(x)+abs(y):.4f} outside the convergence domain")
    IntegrandSpec(IntegrandKind.F2_DOUBLE_SERIES,
                  {"alpha": alpha, "beta": beta, "beta_p": beta_p,
                   "gamma1": gamma1, "gamma2": gamma2})
    total = 0.0
    row_head = 1.0  # term at (k, n=0)
    ratio = abs(x) + abs(y)
    for k in range(max_index):
        term = row_head
        row_sum = 0.0
        small = 0
        for n in range(max_index):
            row_sum += term
            step = (alpha + k + n) * (beta_p + n) / ((gamma2 + n) * (n + 1.0)) * y
            term *= step
            # rows peak near n ~ k |y|/(1-|y|); only stop once the inner
            # ratio has dropped below one so the remaining tail contracts
            small = small + 1 if abs(term) < increment_tol * max(1.0, abs(total + row_sum)) else 0
            if small >= 2 and abs(step) < 0.95 and n > 2:
                break
        else:
            raise NonConvergence("inner index cap reached")
        total += row_sum
        # geometric tail estimate for the remaining rows
        tail = abs(row_sum) * ratio / (1.0 - ratio)
        if abs(row_sum) < increment_tol * max(1.0, abs(total)) and tail < 1e-13 * max(1.0, abs(total)) and k > 2:
            return complex(total)
        row_head *= (alpha + k) * (beta + k) / ((gamma1 + k) * (k + 1.0)) * x
    raise NonConvergence("outer index cap reached")
