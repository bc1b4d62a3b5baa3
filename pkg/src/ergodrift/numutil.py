"""Small numerical helpers shared across modules."""

import numpy as np


def make_x_grid(x_min=-8.0, x_max=8.0, n_points=4096):
    """Uniform state-space grid."""
    if not (x_max > x_min and n_points >= 2):
        raise ValueError("need x_max > x_min and at least two points")
    return np.linspace(float(x_min), float(x_max), int(n_points))


def make_lambda_grid(lambda_max, d_lambda, symmetric=False):
    """Uniform frequency grid from 0 (or -lambda_max) up to >= lambda_max.

    The positive half always starts at 0 and has spacing exactly
    ``d_lambda``; the last point is the first multiple of ``d_lambda``
    at or above ``lambda_max``.
    """
    if lambda_max <= 0 or d_lambda <= 0:
        raise ValueError("lambda_max and d_lambda must be positive")
    n = int(np.ceil(lambda_max / d_lambda - 1e-9))
    pos = d_lambda * np.arange(n + 1)
    if not symmetric:
        return pos
    return np.concatenate([-pos[:0:-1], pos])


def trapezoid(y, x):
    """Trapezoid rule; thin wrapper so the quadrature choice is one symbol."""
    return float(np.trapezoid(y, x))


def adaptive_simpson(fun, a, b, tol=1e-12, max_depth=48):
    """Classic recursive adaptive Simpson quadrature of a scalar function."""
    fa, fb = fun(a), fun(b)
    m = 0.5 * (a + b)
    fm = fun(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(fun, a, b, fa, fm, fb, whole, tol, max_depth)


def _simpson_rec(fun, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = fun(lm), fun(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
        return left + right + (left + right - whole) / 15.0
    return _simpson_rec(fun, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + _simpson_rec(
        fun, m, b, fm, frm, fb, right, tol / 2.0, depth - 1
    )


def derivative_on_grid(values, dx):
    """First derivative of uniformly tabulated values.

    Interior points use the five-point (fourth-order) central stencil;
    the first and last interior points fall back to the three-point
    stencil, and the end points use one-sided differences.  The
    fourth-order stencil keeps truncation error well below the 1e-6
    residual gates used on 4096-point tables, where the plain central
    difference would not.
    """
    g = np.asarray(values, dtype=float)
    if g.size < 5:
        return np.gradient(g, dx)
    d = np.empty_like(g)
    d[2:-2] = (g[:-4] - 8.0 * g[1:-3] + 8.0 * g[3:-1] - g[4:]) / (12.0 * dx)
    d[1] = (g[2] - g[0]) / (2.0 * dx)
    d[-2] = (g[-1] - g[-3]) / (2.0 * dx)
    d[0] = (g[1] - g[0]) / dx
    d[-1] = (g[-1] - g[-2]) / dx
    return d
