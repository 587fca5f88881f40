"""Shared helpers for the test suite: extrapolation-based coefficient extraction."""

import numpy as np


def neville_to_zero(xs, ys):
    """Polynomial extrapolation of (xs, ys) samples to x = 0."""
    xs = np.asarray(xs, dtype=float)
    table = list(np.asarray(ys, dtype=complex))
    n = len(table)
    for level in range(1, n):
        nxt = []
        for i in range(n - level):
            x0, x1 = xs[i], xs[i + level]
            nxt.append((x0 * table[i + 1] - x1 * table[i]) / (x0 - x1))
        table = nxt
    return table[0]


def extract_laurent_by_sampling(fn, eps0=0.02, levels=6):
    """Leading Laurent coefficients of fn by sampled Richardson extraction.

    ``fn`` maps the regulator to the function value; the function is
    assumed to behave like c2/eps^2 + c1/eps + c0 + O(eps).  Samples sit on
    the geometric ladder eps0 / 2**j; the anchors eps0, eps0/2, eps0/4 are
    refined with further halvings so the sequential extraction of the pole
    coefficients does not contaminate the finite part.
    """
    eps = eps0 / 2.0 ** np.arange(levels)
    g = np.array([complex(fn(e)) * e * e for e in eps])
    c_m2 = neville_to_zero(eps, g)
    r1 = (g - c_m2) / eps
    c_m1 = neville_to_zero(eps, r1)
    r0 = (g - c_m2 - c_m1 * eps) / eps ** 2
    c_0 = neville_to_zero(eps, r0)
    return c_m2, c_m1, c_0
