"""Complex special functions used by the box-integral pipelines.

Everything here is a pure function of its arguments: log-gamma / gamma /
digamma, the dilogarithm, the two Gauss hypergeometric families
F(1, b; 1+b; z) and F(1, 1; c; z) with their analytic continuations, a
generic power-series kernel, and the reduction of the Appell F2 function
with repeated parameters.

Branch conventions, fixed globally:

* principal logarithm; powers and logs are cut along the negative real
  axis, with ``(-x)**p = |x|**p * exp(+i*pi*p)`` for ``x > 0`` (the value
  continued from above the cut);
* the dilogarithm and the hypergeometric evaluators are cut along
  ``[1, inf)`` on the real axis; a :class:`CutPrescription` selects the
  boundary value there, defaulting to the principal value (the average of
  the two one-sided limits, which is real for real arguments).
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

import numpy as np

from .errors import DomainError, NonConvergence, PoleError

__all__ = [
    "CutPrescription",
    "PV",
    "ABOVE",
    "BELOW",
    "ln_gamma",
    "ln_gamma_grid",
    "gamma",
    "digamma",
    "li2",
    "f21_1e",
    "f21_2e",
    "f21_11",
    "f21_general_series",
    "f21_11_split",
    "appell_f2_reduced",
    "cut_log",
    "cut_power",
]

SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 100_000

EULER_GAMMA = 0.5772156649015328606
PI = math.pi
LN_SQRT_2PI = 0.9189385332046727418


class CutPrescription(Enum):
    """Which boundary value to take on a branch cut."""

    PRINCIPAL_VALUE = "pv"
    ABOVE_CUT = "above"
    BELOW_CUT = "below"


PV = CutPrescription.PRINCIPAL_VALUE
ABOVE = CutPrescription.ABOVE_CUT
BELOW = CutPrescription.BELOW_CUT


def _require_finite(value, what="value"):
    v = complex(value)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise OverflowError(f"non-finite {what}: {v!r}")
    return v


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


# ---------------------------------------------------------------------------
# gamma family
# ---------------------------------------------------------------------------

# Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set).
# Relative accuracy ~1e-14 on Re z >= 0.5; reflection extends it to the
# rest of the plane.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def _lanczos_ln_gamma(z):
    # valid for Re z >= 0.5 (scalar complex or ndarray)
    if isinstance(z, np.ndarray):
        log = np.log
    else:
        log = cmath.log
    w = z - 1.0
    s = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        s = s + _LANCZOS_COEF[k] / (w + k)
    t = w + _LANCZOS_G + 0.5
    return LN_SQRT_2PI + (w + 0.5) * log(t) - t + log(s)


def _log_sin_pi(z: complex) -> complex:
    # log(sin(pi z)) stable for large |Im z|
    if abs(z.imag) < 8.0:
        return cmath.log(cmath.sin(PI * z))
    if z.imag > 0:
        # sin(pi z) = exp(-i pi z) (1 - exp(2 i pi z)) * i / 2
        return -1j * PI * z + cmath.log(1.0 - cmath.exp(2j * PI * z)) + 1j * PI / 2 - math.log(2.0)
    return 1j * PI * z + cmath.log(1.0 - cmath.exp(-2j * PI * z)) - 1j * PI / 2 - math.log(2.0)


def ln_gamma(z) -> complex:
    """Log-gamma, continuous on the cut plane, with exp(ln_gamma(z)) = Gamma(z).

    Real on the positive real axis.  Raises :class:`PoleError` at the
    non-positive integers.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma pole at z={z.real}")
    if z.real >= 0.5:
        out = _lanczos_ln_gamma(z)
    else:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        out = math.log(PI) - _log_sin_pi(z) - _lanczos_ln_gamma(1.0 - z)
    if z.imag == 0.0 and z.real > 0.0:
        out = complex(out.real, 0.0)
    return _require_finite(out, "ln_gamma")


def ln_gamma_grid(z: np.ndarray) -> np.ndarray:
    """Vectorised log-gamma for contour grids with Re z > 0.

    No pole checks: callers guarantee the contour stays away from poles.
    """
    return _lanczos_ln_gamma(np.asarray(z, dtype=complex))


def gamma(z) -> complex:
    """Gamma function via exp(ln_gamma); exactly real on the real axis."""
    z = complex(z)
    if z.imag == 0.0:
        if _is_nonpositive_integer(z):
            raise PoleError(f"gamma pole at z={z.real}")
        x = z.real
        if x >= 0.5:
            out = math.exp(_lanczos_ln_gamma(complex(x)).real)
        else:
            # value-space reflection keeps the sign exact
            out = PI / (math.sin(PI * x)
                        * math.exp(_lanczos_ln_gamma(complex(1.0 - x)).real))
        return _require_finite(complex(out, 0.0), "gamma")
    return _require_finite(cmath.exp(ln_gamma(z)), "gamma")


# Bernoulli numbers B_2 .. B_14 for the digamma asymptotic tail.
_BERNOULLI_2N = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def digamma(z) -> complex:
    """psi(z) = d/dz ln Gamma(z), by recurrence shift plus Stirling tail."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma pole at z={z.real}")
    acc = 0.0 + 0.0j
    if z.real < 0.5:
        # psi(z) = psi(1-z) - pi cot(pi z)
        acc -= PI / cmath.tan(PI * z)
        z = 1.0 - z
    while z.real < 16.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    p = inv2
    for k, b in enumerate(_BERNOULLI_2N, start=1):
        tail += b / (2 * k) * p
        p *= inv2
    out = acc + cmath.log(z) - 0.5 / z - tail
    if out.imag == 0.0:
        out = complex(out.real, 0.0)
    return _require_finite(out, "digamma")


# ---------------------------------------------------------------------------
# cut-aware elementary pieces
# ---------------------------------------------------------------------------

def cut_log(x, cut: CutPrescription = PV) -> complex:
    """log(x) where a negative real x is resolved by the cut prescription.

    Above the cut gives ``log|x| + i pi`` (the principal value in the sense
    of the global branch convention), below gives ``-i pi``, and the
    principal-value mode keeps only ``log|x|``.
    """
    x = complex(x)
    if x == 0:
        raise DomainError("log of zero")
    if x.imag == 0.0 and x.real < 0.0:
        mag = math.log(-x.real)
        if cut is ABOVE:
            return complex(mag, PI)
        if cut is BELOW:
            return complex(mag, -PI)
        return complex(mag, 0.0)
    return cmath.log(x)


def cut_power(x, p: float, cut: CutPrescription = PV) -> complex:
    """x**p with negative real x resolved by the cut prescription.

    The above-cut mode reproduces the global convention
    ``(-1)**p = exp(+i pi p)``; the principal-value mode is the average of
    the two boundary values, ``|x|**p cos(pi p)``.
    """
    x = complex(x)
    if x == 0:
        if p > 0:
            return 0.0 + 0.0j
        raise DomainError("zero base with non-positive exponent")
    if x.imag == 0.0 and x.real < 0.0:
        mag = (-x.real) ** p
        if cut is ABOVE:
            return mag * cmath.exp(1j * PI * p)
        if cut is BELOW:
            return mag * cmath.exp(-1j * PI * p)
        return complex(mag * math.cos(PI * p), 0.0)
    return x ** p


# ---------------------------------------------------------------------------
# dilogarithm
# ---------------------------------------------------------------------------

def _li2_series(z: complex) -> complex:
    # direct sum, |z| <= 0.75; stop on two consecutive negligible increments
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j
    small = 0
    for n in range(1, SERIES_MAX_TERMS):
        term = term * z
        inc = term / (n * n)
        total += inc
        small = small + 1 if abs(inc) <= SERIES_RTOL * max(abs(total), 1e-300) else 0
        if small >= 2 and n > 3:
            return total
    raise NonConvergence("dilogarithm series did not converge")


def _li2_offcut(z: complex) -> complex:
    # any z not on the real interval [1, inf)
    az = abs(z)
    if az <= 0.75:
        return _li2_series(z)
    if az >= 1.4:
        # Li2(z) + Li2(1/z) = -pi^2/6 - ln(-z)^2/2
        return -PI * PI / 6.0 - 0.5 * cmath.log(-z) ** 2 - _li2_series(1.0 / z)
    if abs(1.0 - z) <= 0.75:
        # Li2(z) + Li2(1-z) = pi^2/6 - ln(z) ln(1-z)
        return PI * PI / 6.0 - cmath.log(z) * cmath.log(1.0 - z) - _li2_series(1.0 - z)
    # Landen: Li2(z) = -Li2(z/(z-1)) - ln(1-z)^2/2
    w = z / (z - 1.0)
    if abs(w) > 0.75:
        raise DomainError(f"dilogarithm reduction failed for z={z!r}")
    return -_li2_series(w) - 0.5 * cmath.log(1.0 - z) ** 2


def li2(z, cut: CutPrescription = PV) -> complex:
    """Dilogarithm Li2(z), principal cut on [1, inf).

    The ``cut`` prescription only matters for real z > 1; everywhere else
    the principal branch is returned.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real > 1.0:
        x = z.real
        # Li2(x +- i0) = pi^2/3 - ln(x)^2/2 - Li2(1/x) +- i pi ln(x)
        re = PI * PI / 3.0 - 0.5 * math.log(x) ** 2 - _li2_offcut(1.0 / x).real
        if cut is ABOVE:
            return complex(re, PI * math.log(x))
        if cut is BELOW:
            return complex(re, -PI * math.log(x))
        return complex(re, 0.0)
    if z == 1.0:
        return complex(PI * PI / 6.0, 0.0)
    out = _li2_offcut(z)
    if z.imag == 0.0:
        out = complex(out.real, 0.0)
    return _require_finite(out, "li2")


# ---------------------------------------------------------------------------
# Gauss hypergeometric families
# ---------------------------------------------------------------------------

def f21_general_series(a: float, b: float, c: float, z) -> complex:
    """Plain Gauss series for 2F1(a, b; c; z), |z| < 1 required."""
    z = complex(z)
    if _is_nonpositive_integer(complex(c)):
        raise PoleError(f"lower parameter c={c} is a non-positive integer")
    if abs(z) >= 1.0:
        raise NonConvergence(f"series argument |z|={abs(z):.3f} >= 1")
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    prev_inc = math.inf
    for n in range(SERIES_MAX_TERMS):
        term = term * (a + n) * (b + n) / ((c + n) * (1.0 + n)) * z
        total += term
        inc = abs(term)
        if inc <= SERIES_RTOL * max(abs(total), 1e-300) and prev_inc <= SERIES_RTOL * max(abs(total), 1e-300):
            return _require_finite(total, "2F1 series")
        prev_inc = inc
    raise NonConvergence(f"2F1 series hit the {SERIES_MAX_TERMS}-term cap at |z|={abs(z):.6f}")


def _resolve_side(z: complex, cut: CutPrescription) -> CutPrescription:
    # off the real axis the side is dictated by the sign of Im z
    if z.imag > 0.0:
        return ABOVE
    if z.imag < 0.0:
        return BELOW
    return cut


def _f21_1b_direct(b: float, z: complex) -> complex:
    # F(1, b; 1+b; z) = b * sum_n z^n / (n + b)
    total = 1.0 + 0.0j
    zp = 1.0 + 0.0j
    small = 0
    for n in range(1, SERIES_MAX_TERMS):
        zp = zp * z
        inc = b * zp / (n + b)
        total += inc
        small = small + 1 if abs(inc) <= SERIES_RTOL * max(abs(total), 1e-300) else 0
        if small >= 2 and n > 3:
            return total
    raise NonConvergence("F(1,b;1+b;z) series did not converge")


def _f21_1b_logcase(b: float, z: complex, cut: CutPrescription) -> complex:
    # expansion around z=1 for the c = a+b (logarithmic) case:
    # F(1,b;1+b;z) = b sum_n (b)_n/n! [psi(n+1) - psi(b+n) - ln(1-z)] (1-z)^n
    w = 1.0 - z
    if w == 0:
        raise PoleError("F(1,b;1+b;z) diverges at z=1")
    if z.imag == 0.0 and z.real > 1.0:
        # 1-z is a negative real: the function's cut
        lw = cut_log(w.real, _flip(cut))
    else:
        lw = cmath.log(w)
    # sum the psi part and the plain binomial part separately
    psi_n1 = -EULER_GAMMA           # psi(1)
    psi_bn = digamma(b).real        # psi(b)
    s_psi = 0.0 + 0.0j
    s_bin = 0.0 + 0.0j
    poch = 1.0
    wp = 1.0 + 0.0j
    for n in range(SERIES_MAX_TERMS):
        coeff = poch * wp
        s_psi += coeff * (psi_n1 - psi_bn)
        s_bin += coeff
        if n > 4 and abs(coeff) <= SERIES_RTOL * max(abs(s_bin), abs(s_psi), 1e-300):
            break
        poch *= (b + n) / (1.0 + n)
        wp = wp * w
        psi_n1 += 1.0 / (n + 1.0)
        psi_bn += 1.0 / (b + n)
    else:
        raise NonConvergence("logarithmic 2F1 expansion did not converge")
    return b * (s_psi - lw * s_bin)


def _flip(cut: CutPrescription) -> CutPrescription:
    # the map z -> 1-z (and z -> -z) reverses the approach side
    if cut is ABOVE:
        return BELOW
    if cut is BELOW:
        return ABOVE
    return PV


def _f21_1b(b: float, z: complex, cut: CutPrescription) -> complex:
    """F(1, b; 1+b; z) anywhere in the cut plane."""
    if z == 0:
        return 1.0 + 0.0j
    cut = _resolve_side(z, cut)
    az = abs(z)
    if az <= 0.7:
        return _f21_1b_direct(b, z)
    if abs(1.0 - z) <= 0.7:
        return _f21_1b_logcase(b, z, cut)
    if az >= 1.4:
        # inversion: F = b/(b-1) (-z)^{-1} F(1,1-b;2-b;1/z) + G(1+b)G(1-b) (-z)^{-b}
        head = b / (b - 1.0) * _f21_1b(1.0 - b, 1.0 / z, _flip(cut)) / (-z)
        coef = gamma(1.0 + b) * gamma(1.0 - b)
        if z.imag == 0.0 and z.real > 0.0:
            tail = coef * cut_power(-z.real, -b, _flip(cut))
        else:
            tail = coef * (-z) ** (-b)
        return head + tail
    # annulus fallback, Pfaff: F(1,b;1+b;z) = (1-z)^{-b} F(b,b;1+b;z/(z-1))
    w = z / (z - 1.0)
    return (1.0 - z) ** (-b) * f21_general_series(b, b, 1.0 + b, w)


def _f21_one_one(c: float, z: complex, cut: CutPrescription) -> complex:
    """F(1, 1; c; z) anywhere in the cut plane (c not a non-positive integer)."""
    if _is_nonpositive_integer(complex(c)):
        raise PoleError(f"lower parameter c={c} is a non-positive integer")
    if z == 0:
        return 1.0 + 0.0j
    cut = _resolve_side(z, cut)
    e = 2.0 - c  # the family is used with c = 2 - e
    if abs(z) <= 0.7:
        return f21_general_series(1.0, 1.0, c, z)
    if e == 0.0:
        return -cmath.log(1.0 - z) / z
    if z.imag == 0.0 and z.real < 0.0:
        # Pfaff keeps everything real: argument in (0, 1)
        w = z / (z - 1.0)
        return _f21_1b(1.0 - e, w, PV) / (1.0 - z)
    # connection through 1-z; z -> 1 - 1/z preserves the approach side,
    # and the only cut-carrying factor is (1-z)^{-e}
    head = -((1.0 - e) / e) * _f21_1b(e, 1.0 - 1.0 / z, cut) / z
    coef = gamma(c) * gamma(e)
    if z.imag == 0.0 and z.real > 1.0:
        tail = coef * cut_power(1.0 - z.real, -e, _flip(cut)) * z.real ** (e - 1.0)
    else:
        tail = coef * (1.0 - z) ** (-e) * z ** (e - 1.0)
    return head + tail


def _check_eps(eps: float):
    if not (0.0 < eps < 1.0):
        raise DomainError(f"regulator eps={eps} outside (0, 1)")


def f21_1e(z, eps: float, cut: CutPrescription = PV) -> complex:
    """2F1(1, eps; eps+1; z) with the cut on [1, inf) resolved by ``cut``."""
    _check_eps(eps)
    return _require_finite(_f21_1b(eps, complex(z), cut), "f21_1e")


def f21_2e(z, eps: float, cut: CutPrescription = PV) -> complex:
    """2F1(1, 1+eps; 2+eps; z) with the cut on [1, inf) resolved by ``cut``."""
    _check_eps(eps)
    return _require_finite(_f21_1b(1.0 + eps, complex(z), cut), "f21_2e")


def f21_11(z, eps: float, cut: CutPrescription = PV) -> complex:
    """2F1(1, 1; 2-eps; z) with the cut on [1, inf) resolved by ``cut``."""
    _check_eps(eps)
    return _require_finite(_f21_one_one(2.0 - eps, complex(z), cut), "f21_11")


def f21_11_split(t_over_s, eps: float, cut: CutPrescription = PV) -> tuple[complex, complex]:
    """Two-piece continuation of 2F1(1, 1; 2-eps; -s/t), given t/s.

    Returns ``(hypergeometric_piece, algebraic_piece)`` whose sum equals
    ``f21_11(-1/t_over_s, eps)`` for every prescription.  The first piece
    carries 2F1(1, eps; eps+1; 1 + t/s); the second is the algebraic
    leftover of the continuation.  For Euclidean ratios (t/s > 0) both
    pieces are individually complex away from the principal-value mode.
    """
    _check_eps(eps)
    r = complex(t_over_s)
    if r == 0:
        raise DomainError("t/s must be nonzero")
    z = -1.0 / r  # argument of the resummed left-closure function
    cut = _resolve_side(z, cut)
    # z -> 1 - 1/z = 1 + t/s preserves the approach side
    head = ((1.0 - eps) / eps) * r * _f21_1b(eps, 1.0 + r, cut)
    coef = gamma(2.0 - eps) * gamma(eps)
    one_minus_z = 1.0 - z
    if z.imag == 0.0 and z.real < 0.0:
        zpow = cut_power(z.real, eps - 1.0, cut)
    else:
        zpow = z ** (eps - 1.0)
    if one_minus_z.imag == 0.0 and one_minus_z.real > 0.0:
        wpow = one_minus_z.real ** (-eps)
    else:
        wpow = one_minus_z ** (-eps)
    tail = coef * wpow * zpow
    return _require_finite(head, "continuation head"), _require_finite(tail, "continuation tail")


def appell_f2_reduced(beta: float, beta_p: float, alpha: float, x, y,
                      cut: CutPrescription = PV) -> complex:
    """F2(alpha, beta, beta'; alpha, alpha; x, y) via its one-variable reduction.

    Valid whenever both lower parameters equal the first upper parameter:
    the double series collapses to
    ``(1-x)^{-beta} (1-y)^{-beta'} 2F1(beta, beta'; alpha; xy/((1-x)(1-y)))``.
    """
    x = complex(x)
    y = complex(y)
    if x == 1.0 or y == 1.0:
        raise DomainError("reduction singular at x=1 or y=1")
    w = x * y / ((1.0 - x) * (1.0 - y))
    if (beta, beta_p) == (1.0, 1.0):
        f = _f21_one_one(alpha, w, cut)
    else:
        f = f21_general_series(beta, beta_p, alpha, w)
    out = (1.0 - x) ** (-beta) * (1.0 - y) ** (-beta_p) * f
    return _require_finite(out, "appell_f2_reduced")
