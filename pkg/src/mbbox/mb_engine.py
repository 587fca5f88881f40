"""Mellin-Barnes pipelines for the box integrals.

Two independent routes live here:

* direct numerical quadrature of the contour representations (one contour
  variable for the massless box, an iterated pair for the one-mass box),
  on vertical lines chosen to separate the left and right pole families;
* reconstruction from the resummed residue families, with the auxiliary
  regulator that splits the massless double poles handled as a truncated
  Laurent series (never as a floating number), and the spurious
  continuation leftovers tracked explicitly so their cancellation can be
  verified.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from .closed_form import BoxValue, Kinematics
from .errors import InfeasibleContour, NotConverged, PoleError
from .series import Regulator, gamma_series, power_series
from .specfun import (
    PV,
    CutPrescription,
    cut_power,
    f21_1e,
    f21_11,
    f21_11_split,
    gamma,
    ln_gamma,
    ln_gamma_grid,
    _flip,
)

__all__ = [
    "QuadratureRule",
    "ContourSpec",
    "PoleFamily",
    "PoleDirection",
    "EvalBreakdown",
    "massless_pole_families",
    "select_contour_massless",
    "select_contour_onemass",
    "mb_massless_integrand",
    "mb_massless_eval",
    "mb_onemass_integrand",
    "mb_onemass_eval",
    "residue_massless",
    "residue_onemass",
    "right_closure_term",
    "residue_sum_right_closure",
    "circle_residue",
]

DELTA = Regulator.DELTA


class QuadratureRule(Enum):
    GAUSS_LEGENDRE_COMPOSITE = "gauss-legendre"
    TANH_SINH = "tanh-sinh"


class PoleDirection(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class PoleFamily:
    """A family of integrand poles at location_base -+ n, n = 0, 1, 2, ..."""

    origin: str                 # which gamma factor produces it
    base_const: float           # location at eps = 0 ...
    base_eps_coeff: float       # ... plus this times eps
    direction: PoleDirection
    multiplicity: int

    def base(self, eps: float) -> float:
        return self.base_const + self.base_eps_coeff * eps


@dataclass(frozen=True)
class ContourSpec:
    """A truncated vertical integration line."""

    abscissa: float
    height: float
    nodes: int
    rule: QuadratureRule = QuadratureRule.GAUSS_LEGENDRE_COMPOSITE

    def __post_init__(self):
        if self.height <= 0.0:
            raise InfeasibleContour(f"height must be positive, got {self.height}")
        if self.nodes < 32:
            raise InfeasibleContour(f"need at least 32 nodes, got {self.nodes}")

    def doubled(self) -> "ContourSpec":
        return ContourSpec(self.abscissa, self.height, 2 * self.nodes, self.rule)


@dataclass(frozen=True)
class EvalBreakdown:
    """Residue-route value split into its named pieces.

    ``pieces`` carries the resummed contributions plus ``spurious_sum`` and
    ``total``; ``spurious_terms`` lists the individual continuation
    leftovers that are summed into ``spurious_sum``; the auxiliary-regulator
    pole coefficient must cancel between the pieces that carry it.
    """

    pieces: dict
    delta_pole_coefficient: complex
    spurious_terms: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# contour selection
# ---------------------------------------------------------------------------

def massless_pole_families(eps: float) -> tuple[PoleFamily, ...]:
    return (
        PoleFamily("gamma(w+1)^2", -1.0, 0.0, PoleDirection.LEFT, 2),
        PoleFamily("gamma(2-eps+w)", -2.0, 1.0, PoleDirection.LEFT, 1),
        PoleFamily("gamma(-w)", 0.0, 0.0, PoleDirection.RIGHT, 1),
        PoleFamily("gamma(eps-1-w)^2", -1.0, 1.0, PoleDirection.RIGHT, 2),
    )


def abscissa_is_feasible(c: float, eps: float,
                         families: tuple[PoleFamily, ...] | None = None) -> bool:
    """True when the vertical line at c separates left from right families."""
    families = families or massless_pole_families(eps)
    left = max(f.base(eps) for f in families if f.direction is PoleDirection.LEFT)
    right = min(f.base(eps) for f in families if f.direction is PoleDirection.RIGHT)
    return left < c < right


def select_contour_massless(eps: float, k: Kinematics | None = None) -> ContourSpec:
    """Vertical line splitting the pole families of the massless integrand.

    The abscissa sits midway between the innermost left pole (-1) and the
    innermost right pole (eps - 1).  The truncation height grows slowly
    with the kinematic ratio; the integrand decays like exp(-3 pi |Im w|),
    so the defaults are far inside the negligible-tail regime.
    """
    if not (0.0 < eps < 1.0):
        raise InfeasibleContour(f"eps={eps} outside (0, 1)")
    c = -1.0 + eps / 2.0
    if not abscissa_is_feasible(c, eps):
        raise InfeasibleContour(f"abscissa {c} does not separate the pole families")
    height = 40.0
    if k is not None:
        ratio = max(abs(k.s / k.t), abs(k.t / k.s))
        height += 10.0 * math.log(1.0 + ratio)
    return ContourSpec(abscissa=c, height=height, nodes=int(2 * height * 64))


def select_contour_onemass(eps: float) -> tuple[ContourSpec, ContourSpec]:
    """Feasible pair of vertical lines for the iterated two-variable representation.

    All seven gamma-factor arguments must keep a positive real part on the
    contours: with b0 = -1 + eps/2 the inner abscissa is the midpoint of
    the interval allowed for a0, clipped below zero.
    """
    if not (0.0 < eps < 1.0):
        raise InfeasibleContour(f"eps={eps} outside (0, 1)")
    b0 = -1.0 + eps / 2.0
    lo = max(eps - 2.0, -1.0) - b0
    hi = min(eps - 1.0 - b0, 0.0)
    if not lo < hi:
        raise InfeasibleContour(f"empty abscissa interval for eps={eps}")
    a0 = 0.5 * (lo + hi)
    args = (-a0, -b0, 2.0 - eps + a0 + b0, eps - 1.0 - a0 - b0,
            1.0 + b0, eps - 1.0 - b0, 1.0 + a0 + b0)
    if min(args) <= 0.0:
        raise InfeasibleContour(f"gamma argument non-positive on contour: {args}")
    height = 10.0
    nodes = 448
    return (ContourSpec(a0, height, nodes), ContourSpec(b0, height, nodes))


# ---------------------------------------------------------------------------
# contour quadrature
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _panel_rule(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def _line_nodes(spec: ContourSpec, grade: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature nodes and weights for Im(w) on [-height, height].

    With ``grade`` set, panel widths start at that value around the real
    axis and double up to one: the contour may pass within O(eps) of a
    pole, and the induced peak near Im(w) = 0 needs the finer panels.
    """
    T = spec.height
    if spec.rule is QuadratureRule.TANH_SINH:
        half = max(spec.nodes // 2, 16)
        tmax = math.asinh(2.0 * 38.0 / math.pi)
        h = tmax / half
        t = h * np.arange(-half, half + 1)
        u = 0.5 * math.pi * np.sinh(t)
        y = T * np.tanh(u)
        w = T * h * 0.5 * math.pi * np.cosh(t) / np.cosh(u) ** 2
        return y, w
    if grade is None:
        edges = np.linspace(-T, T, max(int(math.ceil(2.0 * T)), 1) + 1)
    else:
        eup = [0.0]
        width = grade
        while eup[-1] < T:
            eup.append(min(eup[-1] + width, T))
            width = min(2.0 * width, 1.0)
        eup = np.asarray(eup)
        edges = np.concatenate([-eup[::-1], eup[1:]])
    npanels = len(edges) - 1
    order = max(4, int(round(spec.nodes / npanels)))
    x, w = _panel_rule(order)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    y = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wts = (half[:, None] * w[None, :]).ravel()
    return y, wts


def mb_massless_integrand(w, k: Kinematics):
    """Contour integrand of the massless box, including the 1/Gamma(2 eps) factor.

    Accepts a complex scalar or an ndarray of contour points.  Scalars are
    checked against the pole families; grids are assumed to sit on a
    feasible contour.
    """
    k.require_massless()
    e = k.eps
    ln_ms, ln_mt = math.log(-k.s), math.log(-k.t)
    lg2e = ln_gamma(2.0 * e).real
    if isinstance(w, np.ndarray):
        lg = ln_gamma_grid
        out = np.exp(w * ln_mt - (2.0 - e + w) * ln_ms
                     + 2.0 * lg(w + 1.0) + lg(2.0 - e + w) + lg(-w)
                     + 2.0 * lg(e - 1.0 - w) - lg2e)
        return out
    w = complex(w)
    for arg in (w + 1.0, 2.0 - e + w, -w, e - 1.0 - w):
        if arg.imag == 0.0 and arg.real <= 0.0 and arg.real == math.floor(arg.real):
            raise PoleError(f"integrand pole at w={w}")
    return cmath.exp(w * ln_mt - (2.0 - e + w) * ln_ms
                     + 2.0 * ln_gamma(w + 1.0) + ln_gamma(2.0 - e + w)
                     + ln_gamma(-w) + 2.0 * ln_gamma(e - 1.0 - w) - lg2e)


def _mb_massless_sum(k: Kinematics, spec: ContourSpec) -> complex:
    # the contour may run within O(eps) of a pole; grade the panels by the
    # distance to the nearest pole family so the induced peak is resolved
    gap = min(spec.abscissa + 1.0, (k.eps - 1.0) - spec.abscissa)
    y, wts = _line_nodes(spec, grade=max(gap, 1e-3))
    vals = mb_massless_integrand(spec.abscissa + 1j * y, k)
    return complex(np.dot(wts, vals)) / (2.0 * math.pi)


def mb_massless_eval(k: Kinematics, spec: ContourSpec | None = None,
                     tol: float = 1e-9) -> BoxValue:
    """Massless box by contour quadrature along a truncated vertical line.

    The reported diagnostics include the truncation-tail estimate and the
    change under node doubling; the evaluation fails with
    :class:`NotConverged` when the doubling delta exceeds ``tol`` relative
    to the value.
    """
    k.require_massless()
    if spec is None:
        spec = select_contour_massless(k.eps, k)
    if not abscissa_is_feasible(spec.abscissa, k.eps):
        raise InfeasibleContour(f"abscissa {spec.abscissa} infeasible for eps={k.eps}")
    coarse = _mb_massless_sum(k, spec)
    fine = _mb_massless_sum(k, spec.doubled())
    delta = abs(fine - coarse)
    top = abs(mb_massless_integrand(spec.abscissa + 1j * spec.height, k))
    bot = abs(mb_massless_integrand(spec.abscissa - 1j * spec.height, k))
    # the integrand decays at least like exp(-3 pi |Im w|) modulo the
    # kinematic oscillation, so one decay length bounds the tail
    decay = 3.0 * math.pi - abs(math.log(abs(k.s / k.t)))
    tail = (top + bot) / (2.0 * math.pi * max(decay, 1.0))
    scale = max(abs(fine), 1e-300)
    if delta > tol * scale:
        raise NotConverged(f"node-doubling delta {delta:.3e} above {tol:.1e} * |value|")
    return BoxValue(fine, "mb", {
        "nodes": spec.nodes,
        "height": spec.height,
        "abscissa": spec.abscissa,
        "tail_estimate": tail,
        "node_doubling_delta": delta,
        "error_estimate": delta + tail + 1e-15 * scale,
    })


def mb_onemass_integrand(alpha, beta, k: Kinematics):
    """Integrand of the iterated two-variable representation (scalar form)."""
    k.require_onemass()
    e = k.eps
    ln_ms, ln_mt, ln_mm = math.log(-k.s), math.log(-k.t), math.log(-k.msq)
    a, b = complex(alpha), complex(beta)
    return cmath.exp(
        a * ln_mm + b * ln_ms + (e - 2.0 - a - b) * ln_mt
        + ln_gamma(-a) + ln_gamma(-b) + ln_gamma(2.0 - e + a + b)
        + ln_gamma(e - 1.0 - a - b) + ln_gamma(1.0 + b)
        + ln_gamma(e - 1.0 - b) + ln_gamma(1.0 + a + b)
        - ln_gamma(2.0 * e).real)


def _mb_onemass_sum(k: Kinematics, ca: ContourSpec, cb: ContourSpec) -> complex:
    e = k.eps
    ln_ms, ln_mt, ln_mm = math.log(-k.s), math.log(-k.t), math.log(-k.msq)
    xa, wa = _line_nodes(ca, grade=e / 8.0)
    xb, wb = _line_nodes(cb, grade=e / 8.0)
    alpha = ca.abscissa + 1j * xa            # inner variable
    beta = cb.abscissa + 1j * xb             # outer variable
    # 1D pieces in beta and alpha
    lg_b = (ln_gamma_grid(-beta) + ln_gamma_grid(1.0 + beta)
            + ln_gamma_grid(e - 1.0 - beta) + beta * ln_ms)
    lg_a = ln_gamma_grid(-alpha) + alpha * ln_mm
    ab = alpha[None, :] + beta[:, None]      # (n_beta, n_alpha)
    lg_2d = (ln_gamma_grid(2.0 - e + ab) + ln_gamma_grid(e - 1.0 - ab)
             + ln_gamma_grid(1.0 + ab) - ab * ln_mt)
    f = np.exp(lg_b[:, None] + lg_a[None, :] + lg_2d
               + (e - 2.0) * ln_mt - ln_gamma(2.0 * e).real)
    total = np.einsum("i,ij,j->", wb, f, wa)
    return complex(total) / (4.0 * math.pi ** 2)


def mb_onemass_eval(k: Kinematics, ca: ContourSpec | None = None,
                    cb: ContourSpec | None = None, tol: float = 1e-5) -> BoxValue:
    """One-mass box by iterated contour quadrature (inner alpha, outer beta)."""
    k.require_onemass()
    if ca is None or cb is None:
        ca0, cb0 = select_contour_onemass(k.eps)
        ca = ca or ca0
        cb = cb or cb0
    coarse = _mb_onemass_sum(k, ca, cb)
    fine = _mb_onemass_sum(k, ca.doubled(), cb.doubled())
    delta = abs(fine - coarse)
    corner = abs(mb_onemass_integrand(ca.abscissa + 1j * ca.height,
                                      cb.abscissa + 1j * cb.height, k))
    edge_a = abs(mb_onemass_integrand(ca.abscissa + 1j * ca.height, cb.abscissa, k))
    edge_b = abs(mb_onemass_integrand(ca.abscissa, cb.abscissa + 1j * cb.height, k))
    tail = (corner + edge_a + edge_b) / (4.0 * math.pi ** 2)
    scale = max(abs(fine), 1e-300)
    if delta > tol * scale:
        raise NotConverged(f"node-doubling delta {delta:.3e} above {tol:.1e} * |value|")
    return BoxValue(fine, "mb", {
        "nodes": (ca.nodes, cb.nodes),
        "height": (ca.height, cb.height),
        "abscissa": (ca.abscissa, cb.abscissa),
        "tail_estimate": tail,
        "node_doubling_delta": delta,
        "error_estimate": delta + tail + 1e-15 * scale,
    })


# ---------------------------------------------------------------------------
# residue resummation, massless
# ---------------------------------------------------------------------------

def _gamma_product(*terms) -> complex:
    """Product of gamma factors: terms are (power, argument) pairs.

    Assembled in value space so real arguments give an exactly real
    result; the powers involved here are small integers, far from any
    overflow at the regulator values in (0, 1).
    """
    acc = 1.0 + 0.0j
    for power, arg in terms:
        acc *= gamma(arg) ** power
    return acc


def residue_massless(k: Kinematics, cut: CutPrescription = PV) -> EvalBreakdown:
    """Massless box reconstructed from the left-closure pole families.

    The simple-pole family resums into F(1, 1; 2-eps; -s/t); its
    continuation splits into half of the exact result plus an algebraic
    leftover.  The double poles are split by the auxiliary regulator into
    two simple families whose resummed values are assembled as truncated
    Laurent series; their pole parts must cancel, and the finite leftovers
    must cancel against the continuation leftover.
    """
    k.require_massless()
    e = k.eps
    s, t = k.s, k.t
    st = s * t

    # simple-pole family: C1 * F(1,1;2-e;-s/t), split by the continuation
    c1 = _gamma_product((2.0, e), (2.0, 1.0 - e), (-1.0, 2.0 * e), (-1.0, 2.0 - e)) \
        * (-t) ** (e - 2.0)
    hyp_piece, alg_piece = f21_11_split(t / s, e, cut)
    i1 = c1 * (hyp_piece + alg_piece)
    spur_1 = c1 * alg_piece

    # shared real factors of the double-pole sector
    kernel = (-s) ** e / st * (1.0 + s / t) ** (-e)
    g2e = _gamma_product((2.0, e), (-1.0, 2.0 * e))

    # shifted simple poles: the whole finite part is a continuation artifact
    s_a = (gamma_series(0.0, 2, DELTA).scaled_arg(-1)      # Gamma(-d)
           * gamma_series(1.0, 2, DELTA)                   # Gamma(1+d)
           * gamma_series(e, 2, DELTA)                     # Gamma(e+d)
           * gamma_series(1.0 - e, 2, DELTA).scaled_arg(-1)  # Gamma(1-e-d)
           * power_series(s / t, 2, DELTA))                # (s/t)^d
    i2a_series = s_a * (g2e / math.exp(ln_gamma(e).real) * kernel)

    # unshifted simple poles: exact half plus the pole/log leftover
    exact_coef = -(gamma_series(1.0, 2, DELTA)                    # Gamma(1+d)
                   * gamma_series(e, 2, DELTA).scaled_arg(-1)     # Gamma(e-d)
                   ) * (_gamma_product((1.0, e), (1.0, -e), (-1.0, 2.0 * e)) / st)
    f_exact = f21_1e(1.0 + s / t, e, cut) * (-s) ** e
    spur_coef = (gamma_series(0.0, 2, DELTA)                      # Gamma(d)
                 * gamma_series(1.0, 2, DELTA).scaled_arg(-1)     # Gamma(1-d)
                 * power_series(-s / t, 2, DELTA, cut))           # (-s/t)^d
    s_spur_b = spur_coef * (g2e * math.exp(ln_gamma(1.0 - e).real) * kernel)
    i2b_series = exact_coef * f_exact + s_spur_b

    i2a = i2a_series.coeff(0)
    i2b = i2b_series.coeff(0)
    spur_2a = i2a
    spur_2b = s_spur_b.coeff(0)
    delta_pole = i2a_series.coeff(-1) + i2b_series.coeff(-1)
    spurious_sum = spur_1 + spur_2a + spur_2b
    total = i1 + i2a + i2b
    return EvalBreakdown(
        pieces={
            "I1": i1,
            "I2a": i2a,
            "I2b": i2b,
            "spurious_sum": spurious_sum,
            "total": total,
        },
        delta_pole_coefficient=delta_pole,
        spurious_terms={
            "I1_algebraic": spur_1,
            "I2a_finite": spur_2a,
            "I2b_pole_log": spur_2b,
        },
    )


# ---------------------------------------------------------------------------
# residue resummation, one-mass
# ---------------------------------------------------------------------------

def _power_pair(z: float, a: float, b: float, cut: CutPrescription) -> complex:
    """z**a * (1-z)**b with the coherent two-sided branch convention.

    The side of (1-z) is the mirror of the side of z, matching the
    continuation formulas used by the hypergeometric evaluators.
    """
    zp = cut_power(z, a, cut) if z < 0.0 else complex(z) ** a
    w = 1.0 - z
    wp = cut_power(w, b, _flip(cut)) if w < 0.0 else complex(w) ** b
    return zp * wp


def residue_onemass(k: Kinematics, cut: CutPrescription = PV) -> EvalBreakdown:
    """One-mass box reconstructed from the two-variable pole families.

    The three right-closure families resum into single-variable
    hypergeometric functions; two of them leave algebraic continuation
    leftovers that must cancel in the sum.  No auxiliary regulator is
    needed: every pole family here is simple.
    """
    k.require_onemass()
    e = k.eps
    s, t, m2 = k.s, k.t, k.msq
    st = s * t
    q = s + t - m2

    # first family: the beta-contour integral resummed; its two closure
    # sub-families are evaluated separately, the algebraic parts cancel
    x1 = s / (m2 - t)
    pref_1 = (-t) ** e / (t * (m2 - t)) * _gamma_product((1.0, e), (1.0, 1.0 - e),
                                                        (-1.0, 2.0 * e))
    tilde_a = -math.exp(ln_gamma(e).real) / (1.0 - e) * f21_11(x1, e, cut)
    tilde_b = _gamma_product((2.0, e), (1.0, 1.0 - e)) * _power_pair(x1, e - 1.0, -e, cut)
    im1 = pref_1 * (tilde_a + tilde_b)

    # second family: reduced two-variable function, then continued
    z2a = st / ((m2 - s) * (m2 - t))
    coef_2a = -(-m2) ** e / ((m2 - t) * (m2 - s)) \
        * _gamma_product((1.0, e), (1.0, 1.0 - e), (1.0, e - 1.0), (-1.0, 2.0 * e))
    im2a = coef_2a * f21_11(z2a, e, cut)
    spur_2a = coef_2a * _gamma_product((1.0, 2.0 - e), (1.0, e)) \
        * _power_pair(z2a, e - 1.0, -e, cut)

    # third family
    z2b = t / (m2 - s)
    coef_2b = -(-s) ** e / (s * (m2 - s)) \
        * _gamma_product((2.0, e), (1.0, 1.0 - e), (-1.0, 2.0 * e)) / (1.0 - e)
    im2b = coef_2b * f21_11(z2b, e, cut)
    spur_2b = coef_2b * _gamma_product((1.0, 2.0 - e), (1.0, e)) \
        * _power_pair(z2b, e - 1.0, -e, cut)

    spurious_sum = spur_2a + spur_2b
    total = im1 + im2a + im2b
    return EvalBreakdown(
        pieces={
            "Im1": im1,
            "Im2a": im2a,
            "Im2b": im2b,
            "spurious_sum": spurious_sum,
            "total": total,
        },
        delta_pole_coefficient=0j,
        spurious_terms={
            "Im2a_algebraic": spur_2a,
            "Im2b_algebraic": spur_2b,
        },
    )


# ---------------------------------------------------------------------------
# term-by-term closure (debug oracle)
# ---------------------------------------------------------------------------

def circle_residue(f, w0: complex, radius: float, nodes: int = 64) -> complex:
    """Residue of f at w0 by trapezoidal quadrature on a small circle."""
    theta = 2.0 * math.pi * np.arange(nodes) / nodes
    ring = np.exp(1j * theta)
    pts = w0 + radius * ring
    vals = np.array([f(p) for p in pts])
    return complex(np.mean(vals * ring)) * radius


def right_closure_term(k: Kinematics, n: int) -> complex:
    """n-th contribution of the single-pole right family, in closed form.

    Closing the contour to the right picks up minus the residues; this
    returns the contribution (minus the residue) at w = n.
    """
    e = k.eps
    sign = 1.0 if n % 2 == 0 else -1.0
    rest = cmath.exp(
        n * math.log(-k.t) - (2.0 - e + n) * math.log(-k.s)
        + 2.0 * ln_gamma(n + 1.0) + ln_gamma(2.0 - e + n)
        + 2.0 * ln_gamma(e - 1.0 - n) - ln_gamma(2.0 * e).real)
    return sign / math.factorial(n) * rest


def residue_sum_right_closure(k: Kinematics, n_terms: int = 40,
                              tail_rtol: float = 1e-10) -> complex:
    """Massless box by brute-force right closure: term-by-term residues.

    Valid for |t| < |s| where the raw residue series converges.  Simple
    poles contribute their closed-form terms; the double poles are
    extracted numerically by contour-shrink (circle quadrature).  A
    geometric tail bound certifies truncation.
    """
    k.require_massless()
    e = k.eps
    ratio = abs(k.t / k.s)
    if ratio >= 1.0:
        raise NotConverged("right closure requires |t| < |s|")
    f = lambda w: mb_massless_integrand(w, k)
    radius = 0.35 * min(e, 1.0 - e)
    total = 0j
    last = 0.0
    for n in range(n_terms):
        term_simple = right_closure_term(k, n)
        term_double = -circle_residue(f, e - 1.0 + n, radius)
        total += term_simple + term_double
        last = abs(term_simple) + abs(term_double)
        if last < tail_rtol * abs(total) * (1.0 - ratio) and n > 4:
            return total
    tail_bound = last * ratio / (1.0 - ratio)
    if tail_bound > tail_rtol * abs(total):
        raise NotConverged(f"right-closure tail bound {tail_bound:.2e} too large")
    return total
