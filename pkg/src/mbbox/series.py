"""Truncated Laurent-series algebra in one formal regulator.

A :class:`RegulatorSeries` stores coefficients for a contiguous window of
powers ``min_power .. min_power + len(coeffs) - 1``.  Powers below the
window are known to vanish; powers above it are *unknown* unless the
series is marked ``exact`` (a genuine Laurent polynomial).  Arithmetic
tracks the largest power that is still fully determined, so products of
truncated series never claim more accuracy than they have.

Two regulators appear in the box-integral pipelines: the dimensional
regulator (label ``EPSILON``, default window ``-2 .. +2``) and the
auxiliary pole-splitting regulator (label ``DELTA``, default window
``-1 .. +1``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import DivisionByZeroSeries, DomainError, PoleError
from .specfun import (
    PV,
    CutPrescription,
    cut_log,
    digamma,
    li2,
    ln_gamma,
    _flip,
)

__all__ = [
    "Regulator",
    "RegulatorSeries",
    "DEFAULT_WINDOW",
    "gamma_series",
    "power_series",
    "f21_1e_expansion",
    "f21_2e_expansion",
]


class Regulator(Enum):
    EPSILON = "eps"
    DELTA = "delta"


DEFAULT_WINDOW = {
    Regulator.EPSILON: (-2, 2),
    Regulator.DELTA: (-1, 1),
}


def _trim(min_power: int, coeffs: tuple, exact: bool):
    cs = list(coeffs)
    while len(cs) > 1 and cs[0] == 0:
        cs.pop(0)
        min_power += 1
    if exact:
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
    if all(c == 0 for c in cs):
        cs = [0j]
    return min_power, tuple(complex(c) for c in cs)


@dataclass(frozen=True)
class RegulatorSeries:
    """Laurent series truncated to a contiguous coefficient window."""

    min_power: int
    coeffs: tuple
    label: Regulator = Regulator.EPSILON
    exact: bool = False

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("empty coefficient window")
        m, cs = _trim(self.min_power, self.coeffs, self.exact)
        object.__setattr__(self, "min_power", m)
        object.__setattr__(self, "coeffs", cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value, label=Regulator.EPSILON) -> "RegulatorSeries":
        return cls(0, (complex(value),), label, exact=True)

    @classmethod
    def variable(cls, label=Regulator.EPSILON) -> "RegulatorSeries":
        return cls(1, (1.0 + 0j,), label, exact=True)

    @classmethod
    def zero(cls, label=Regulator.EPSILON) -> "RegulatorSeries":
        return cls(0, (0j,), label, exact=True)

    # -- inspection --------------------------------------------------------

    @property
    def max_power(self) -> int:
        return self.min_power + len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coeff(self, power: int) -> complex:
        """Coefficient of the given power; raises if it is not determined."""
        if power < self.min_power:
            return 0j
        if power > self.max_power:
            if self.exact:
                return 0j
            raise DomainError(f"coefficient of power {power} not determined "
                              f"(window {self.min_power}..{self.max_power})")
        return self.coeffs[power - self.min_power]

    def eval_at(self, x) -> complex:
        """Evaluate the truncated polynomial at a numeric regulator value."""
        x = complex(x)
        return sum(c * x ** (self.min_power + i) for i, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = ", ".join(f"{p}: {c:.6g}" for p, c in
                          zip(range(self.min_power, self.max_power + 1), self.coeffs))
        tag = "exact" if self.exact else "trunc"
        return f"RegulatorSeries[{self.label.value}, {tag}]({terms})"

    # -- helpers -----------------------------------------------------------

    def _check_label(self, other: "RegulatorSeries"):
        if self.label is not other.label:
            raise DomainError(f"mixed regulators {self.label} and {other.label}")

    def _coerce(self, other):
        if isinstance(other, RegulatorSeries):
            self._check_label(other)
            return other
        if isinstance(other, (int, float, complex)):
            return RegulatorSeries.constant(other, self.label)
        return NotImplemented

    def _get(self, power: int) -> complex:
        if self.min_power <= power <= self.max_power:
            return self.coeffs[power - self.min_power]
        return 0j

    def truncated(self, max_power: int) -> "RegulatorSeries":
        """Drop knowledge above ``max_power`` (marks the result inexact)."""
        if max_power < self.min_power:
            return RegulatorSeries(max_power, (0j,), self.label, exact=False)
        top = min(max_power, self.max_power) if not self.exact else max_power
        cs = tuple(self._get(p) for p in range(self.min_power, top + 1))
        return RegulatorSeries(self.min_power, cs, self.label, exact=False)

    def shifted(self, k: int) -> "RegulatorSeries":
        """Multiply by the regulator to the power ``k``."""
        return RegulatorSeries(self.min_power + k, self.coeffs, self.label, self.exact)

    def scaled_arg(self, q) -> "RegulatorSeries":
        """Substitute ``xi -> q*xi`` (q nonzero)."""
        if q == 0:
            raise DomainError("argument scale must be nonzero")
        q = complex(q)
        cs = tuple(c * q ** (self.min_power + i) for i, c in enumerate(self.coeffs))
        return RegulatorSeries(self.min_power, cs, self.label, self.exact)

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return RegulatorSeries(self.min_power, tuple(-c for c in self.coeffs),
                               self.label, self.exact)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = min(self.min_power, other.min_power)
        if self.exact and other.exact:
            top = max(self.max_power, other.max_power)
        elif self.exact:
            top = other.max_power
        elif other.exact:
            top = self.max_power
        else:
            top = min(self.max_power, other.max_power)
        if top < m:
            top = m
        cs = tuple(self._get(p) + other._get(p) for p in range(m, top + 1))
        return RegulatorSeries(m, cs, self.label, self.exact and other.exact)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RegulatorSeries.zero(self.label)
        m = self.min_power + other.min_power
        if self.exact and other.exact:
            top = self.max_power + other.max_power
        else:
            tops = []
            if not self.exact:
                tops.append(self.max_power + other.min_power)
            if not other.exact:
                tops.append(other.max_power + self.min_power)
            top = min(tops)
        cs = []
        for p in range(m, top + 1):
            acc = 0j
            for i in range(self.min_power, self.max_power + 1):
                j = p - i
                if other.min_power <= j <= other.max_power:
                    acc += self._get(i) * other._get(j)
            cs.append(acc)
        return RegulatorSeries(m, tuple(cs), self.label, self.exact and other.exact)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZeroSeries("division by the zero series")
        mb = other.min_power
        lead = other.coeffs[0]
        mq = self.min_power - mb
        if self.exact and other.exact:
            lo, hi = DEFAULT_WINDOW[self.label]
            top = max(hi, mq)
        else:
            tops = []
            if not self.exact:
                tops.append(self.max_power - mb)
            if not other.exact:
                tops.append(self.min_power - 2 * mb + other.max_power)
            top = min(tops)
        if top < mq:
            raise DomainError("division leaves no determined coefficients")
        q: list[complex] = []
        for k in range(top - mq + 1):
            acc = self._get(self.min_power + k)
            for j in range(k):
                acc -= q[j] * other._get(mb + k - j)
            q.append(acc / lead)
        return RegulatorSeries(mq, tuple(q), self.label,
                               exact=False)

    def __rtruediv__(self, other):
        return RegulatorSeries.constant(other, self.label) / self

    # -- transcendental maps -----------------------------------------------

    def exp(self) -> "RegulatorSeries":
        """exp of the series; the pole part must vanish."""
        if self.min_power < 0 and any(c != 0 for c in self.coeffs[:max(0, -self.min_power)]):
            raise DomainError("exp of a series with a pole part")
        if self.exact:
            lo, hi = DEFAULT_WINDOW[self.label]
            top = max(hi, 1)
        else:
            top = self.max_power
        c0 = self._get(0)
        # u has min_power >= 1
        u = [self._get(p) for p in range(1, top + 1)]
        out = [0j] * (top + 1)
        out[0] = 1.0 + 0j
        term = [0j] * (top + 1)
        term[0] = 1.0 + 0j
        for k in range(1, top + 1):
            new = [0j] * (top + 1)
            for i in range(top + 1):
                if term[i] == 0:
                    continue
                for j, uj in enumerate(u, start=1):
                    if i + j <= top:
                        new[i + j] += term[i] * uj
            term = [c / k for c in new]
            for i in range(top + 1):
                out[i] += term[i]
            if all(c == 0 for c in term):
                break
        scale = cmath.exp(c0)
        return RegulatorSeries(0, tuple(scale * c for c in out), self.label, exact=False)

    def log(self) -> "RegulatorSeries":
        """log of the series; requires a nonzero constant term and no pole part."""
        if self.min_power < 0 and any(c != 0 for c in self.coeffs[:max(0, -self.min_power)]):
            raise DomainError("log of a series with a pole part")
        c0 = self._get(0)
        if c0 == 0:
            raise DomainError("log of a series with vanishing constant term")
        if self.exact:
            lo, hi = DEFAULT_WINDOW[self.label]
            top = max(hi, 1)
        else:
            top = self.max_power
        u = [self._get(p) / c0 for p in range(1, top + 1)]
        out = [0j] * (top + 1)
        out[0] = cmath.log(c0)
        term = [0j] * (top + 1)
        term[0] = 1.0 + 0j
        for k in range(1, top + 1):
            new = [0j] * (top + 1)
            for i in range(top + 1):
                if term[i] == 0:
                    continue
                for j, uj in enumerate(u, start=1):
                    if i + j <= top:
                        new[i + j] += term[i] * uj
            term = new
            sgn = -1.0 if k % 2 == 0 else 1.0
            for i in range(1, top + 1):
                out[i] += sgn * term[i] / k
            if all(c == 0 for c in term):
                break
        return RegulatorSeries(0, tuple(out), self.label, exact=False)


# ---------------------------------------------------------------------------
# polygamma by finite differences of digamma
# ---------------------------------------------------------------------------

def _psi_derivative(a: float, k: int) -> float:
    """k-th derivative of digamma at a real non-pole point, k in 1..4.

    Central stencils with one Richardson step; the step is tuned per order
    to balance truncation against cancellation.  Good to ~1e-10 for k <= 2
    and ~1e-8 for k in {3, 4}, which is ample for order-2 coefficients.
    """
    psi = lambda x: digamma(x).real

    # exact recurrence psi^(k)(a) = psi^(k)(a+1) + (-1)^(k+1) k!/a^(k+1)
    # moves the stencil away from the poles before differencing
    acc = 0.0
    kfact = math.factorial(k)
    sign = 1.0 if k % 2 == 1 else -1.0
    while a < 3.0:
        acc += sign * kfact / a ** (k + 1)
        a += 1.0

    def stencil(h):
        if k == 1:
            return (psi(a + h) - psi(a - h)) / (2 * h)
        if k == 2:
            return (psi(a + h) - 2 * psi(a) + psi(a - h)) / (h * h)
        if k == 3:
            return (psi(a + 2 * h) - 2 * psi(a + h) + 2 * psi(a - h) - psi(a - 2 * h)) / (2 * h ** 3)
        if k == 4:
            return (psi(a + 2 * h) - 4 * psi(a + h) + 6 * psi(a) - 4 * psi(a - h)
                    + psi(a - 2 * h)) / h ** 4
        raise DomainError(f"psi derivative order {k} not supported")

    h0 = {1: 1e-4, 2: 2e-3, 3: 6e-3, 4: 2e-2}[k]
    # all stencils above have a leading h^2 error term
    d1 = stencil(h0)
    d2 = stencil(h0 / 2.0)
    return acc + (4.0 * d2 - d1) / 3.0


# ---------------------------------------------------------------------------
# series-valued special functions
# ---------------------------------------------------------------------------

def gamma_series(a: float, order: int, label: Regulator = Regulator.EPSILON) -> RegulatorSeries:
    """Expansion of Gamma(a + xi) through xi**order.

    At a non-positive integer ``a`` the result is the Laurent series with
    its simple pole (min_power -1); elsewhere it is the Taylor series with
    coefficients built from digamma and its finite-difference derivatives.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    if a <= 0 and float(a).is_integer():
        n = int(-a)
        # Gamma(a + xi) = Gamma(1 + xi) / prod_{j=a}^{0} (xi + j)
        den = RegulatorSeries.constant(1.0, label)
        xi = RegulatorSeries.variable(label)
        for j in range(-n, 1):
            den = den * (xi + j)
        num = gamma_series(1.0, order + 1, label)
        return num / den
    if order > 4:
        raise DomainError("gamma_series supports order <= 4")
    lg = [complex(ln_gamma(a)), digamma(a)]
    fact = 1.0
    for k in range(2, order + 1):
        fact *= k
        lg.append(complex(_psi_derivative(a, k - 1)) / fact)
    return RegulatorSeries(0, tuple(lg[: order + 1]), label, exact=False).exp()


def power_series(base, order: int, label: Regulator = Regulator.EPSILON,
                 cut: CutPrescription = PV) -> RegulatorSeries:
    """Expansion of base**xi = exp(xi log base) through xi**order.

    A negative real base is resolved by the cut prescription.
    """
    base = complex(base)
    if base == 0:
        raise DomainError("zero base has no regulator-power expansion")
    lb = cut_log(base, cut)
    cs = [1.0 + 0j]
    term = 1.0 + 0j
    for k in range(1, order + 1):
        term = term * lb / k
        cs.append(term)
    return RegulatorSeries(0, tuple(cs), label, exact=False)


def _log_one_minus(z: complex, cut: CutPrescription) -> complex:
    # log(1-z); for real z > 1 the side is the mirror of the side of z
    w = 1.0 - z
    if w.imag == 0.0 and w.real < 0.0:
        return cut_log(w.real, _flip(cut))
    if w == 0:
        raise PoleError("log(1-z) singular at z=1")
    return cmath.log(w)


def f21_1e_expansion(z, order: int, cut: CutPrescription = PV,
                     label: Regulator = Regulator.EPSILON) -> RegulatorSeries:
    """Regulator expansion of 2F1(1, e; e+1; z): 1 - e log(1-z) - e^2 Li2(z) + ...

    Supported through second order (the dilogarithm level).
    """
    z = complex(z)
    if z == 1.0:
        raise PoleError("expansion singular at z=1")
    if order > 2:
        raise DomainError("f21_1e_expansion supports order <= 2")
    cs = [1.0 + 0j]
    if order >= 1:
        cs.append(-_log_one_minus(z, cut) if z != 0 else 0j)
    if order >= 2:
        cs.append(-li2(z, cut))
    return RegulatorSeries(0, tuple(cs), label, exact=False)


def f21_2e_expansion(z, order: int, cut: CutPrescription = PV,
                     label: Regulator = Regulator.EPSILON) -> RegulatorSeries:
    """Regulator expansion of z/(1+e) * 2F1(1, 1+e; 2+e; z) = -log(1-z) - e Li2(z) + ...

    Supported through first order.
    """
    z = complex(z)
    if z == 1.0:
        raise PoleError("expansion singular at z=1")
    if order > 1:
        raise DomainError("f21_2e_expansion supports order <= 1")
    cs = [-_log_one_minus(z, cut) if z != 0 else 0j]
    if order >= 1:
        cs.append(-li2(z, cut))
    return RegulatorSeries(0, tuple(cs), label, exact=False)
