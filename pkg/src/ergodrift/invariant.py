"""Quadrature-grade invariant density, its Fourier transform, and closed-form constants.

Everything here is ground truth: estimators elsewhere in the package are
scored against these tables.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import simpson

from .errors import ErgodriftError, GridTooNarrow, NonErgodicModel
from .models import DiffusionModel
from .numutil import adaptive_simpson, derivative_on_grid, make_lambda_grid, make_x_grid
from .selection import SpectralWeight

DENSITY_POINTS = 4096
DENSITY_SPAN = 8.0
_EXPONENT_TOL = 1e-13
_BOUNDARY_MASS = 1e-12
_RESIDUAL_GATE = 1e-6
_DIVERGENCE_WINDOW = 64.0
_DIVERGENCE_REL = 1e-3


@dataclass(frozen=True)
class DensityTable:
    """Tabulated invariant density on a uniform grid.

    Satisfies, by construction, unit trapezoid mass and the stationarity
    identity (sigma^2 f)' = 2 S f up to quadrature error.
    """

    x_grid: np.ndarray
    f_values: np.ndarray
    norm_const: float
    model_label: str

    def __post_init__(self):
        self.x_grid.setflags(write=False)
        self.f_values.setflags(write=False)

    def integral(self) -> float:
        return float(np.trapezoid(self.f_values, self.x_grid))


@dataclass(frozen=True)
class CfTable:
    """Fourier transform values on a uniform symmetric frequency grid."""

    lambda_grid: np.ndarray
    values: np.ndarray
    source_label: str

    def __post_init__(self):
        self.lambda_grid.setflags(write=False)
        self.values.setflags(write=False)


def _drift_over_sigma_sq(model):
    def fun(u):
        return float(model.drift(u)) / float(model.sigma_sq(u))

    return fun


def _exponent_on_grid(model, x):
    """2 * integral_0^x S/sigma^2, accumulated cell by cell (adaptive Simpson)."""
    fun = _drift_over_sigma_sq(model)
    expo = np.empty(x.size)
    k0 = int(np.argmin(np.abs(x)))
    anchor = 2.0 * adaptive_simpson(fun, 0.0, float(x[k0]), tol=_EXPONENT_TOL)
    expo[k0] = anchor
    acc = anchor
    for i in range(k0, x.size - 1):
        acc += 2.0 * adaptive_simpson(fun, float(x[i]), float(x[i + 1]), tol=_EXPONENT_TOL)
        expo[i + 1] = acc
    acc = anchor
    for i in range(k0, 0, -1):
        acc -= 2.0 * adaptive_simpson(fun, float(x[i - 1]), float(x[i]), tol=_EXPONENT_TOL)
        expo[i - 1] = acc
    return expo


@lru_cache(maxsize=64)
def _normalization_converges(model: DiffusionModel) -> bool:
    """Window-doubling divergence probe of the normalizing integral.

    Declared divergent when widening the window from [-64, 64] to
    [-128, 128] moves the integral by more than 1e-3 relative.
    """
    step = 0.0625
    x = np.arange(-2 * _DIVERGENCE_WINDOW, 2 * _DIVERGENCE_WINDOW + step / 2, step)
    expo = _exponent_on_grid(model, x)
    raw = np.exp(expo - expo.max()) / np.asarray(model.sigma_sq(x), dtype=float)
    inner = np.abs(x) <= _DIVERGENCE_WINDOW
    z_inner = np.trapezoid(raw[inner], x[inner])
    z_outer = np.trapezoid(raw, x)
    return abs(z_outer - z_inner) <= _DIVERGENCE_REL * z_inner


def invariant_density(model: DiffusionModel, x_grid=None) -> DensityTable:
    """Invariant density table, solved in closed form from the stationarity identity.

    f(x) is proportional to exp(2 * integral_0^x S/sigma^2) / sigma^2(x),
    normalized so that the trapezoid mass on the grid is exactly one.

    Raises
    ------
    NonErgodicModel
        If the tail-sign probe fails or the normalizing integral does
        not converge numerically.
    GridTooNarrow
        If the grid boundary carries more than 1e-12 of the peak density.
    """
    if x_grid is None:
        return _density_cached(model)
    return _build_density(model, np.asarray(x_grid, dtype=float))


@lru_cache(maxsize=32)
def _density_cached(model: DiffusionModel) -> DensityTable:
    return _build_density(model, make_x_grid(-DENSITY_SPAN, DENSITY_SPAN, DENSITY_POINTS))


def _build_density(model, x):
    model.require_ergodic()
    if not _normalization_converges(model):
        raise NonErgodicModel(
            f"normalizing integral for '{model.label}' keeps growing as the window doubles"
        )
    expo = _exponent_on_grid(model, x)
    shift = expo.max()
    raw = np.exp(expo - shift) / np.asarray(model.sigma_sq(x), dtype=float)
    if max(raw[0], raw[-1]) >= _BOUNDARY_MASS * raw.max():
        raise GridTooNarrow(
            f"density of '{model.label}' at the grid boundary exceeds 1e-12 of the peak; "
            "widen the x grid"
        )
    z = np.trapezoid(raw, x)
    f = raw / z
    table = DensityTable(
        x_grid=x.copy(), f_values=f, norm_const=float(math.exp(-shift) / z), model_label=model.label
    )
    gate = _RESIDUAL_GATE * f.max()
    resid = ode_residual(table, model)
    if resid > gate:
        raise ErgodriftError(
            f"stationarity identity residual {resid:.3e} exceeds gate {gate:.3e} "
            f"for '{model.label}'; the x grid is probably too coarse"
        )
    if abs(table.integral() - 1.0) > 1e-8:
        raise ErgodriftError("density table failed to normalize")
    return table


def ode_residual(table: DensityTable, model: DiffusionModel) -> float:
    """Max interior residual of (sigma^2 f)'(x) - 2 S(x) f(x) on the table grid."""
    x = table.x_grid
    dx = x[1] - x[0]
    g = np.asarray(model.sigma_sq(x), dtype=float) * table.f_values
    d = derivative_on_grid(g, dx)
    resid = np.abs(d - 2.0 * np.asarray(model.drift(x), dtype=float) * table.f_values)
    return float(resid[1:-1].max())


def fourier_table(x_grid, values, lambda_grid=None, label="") -> CfTable:
    """Fourier transform of tabulated values, by trapezoid quadrature.

    Only the nonnegative frequencies are integrated; negative ones are
    filled by Hermitian symmetry (the input is real), so the symmetry
    holds exactly on the output grid.
    """
    x = np.asarray(x_grid, dtype=float)
    v = np.asarray(values, dtype=float)
    if lambda_grid is None:
        lambda_grid = make_lambda_grid(10.0, 0.01, symmetric=True)
    lam = np.asarray(lambda_grid, dtype=float)
    if not np.allclose(lam, -lam[::-1], atol=1e-12):
        raise ValueError("lambda grid must be symmetric about 0")
    npos = (lam.size + 1) // 2
    pos = lam[npos - 1 :]
    out_pos = np.empty(pos.size, dtype=complex)
    block = max(1, int(2**22 // max(x.size, 1)))
    for start in range(0, pos.size, block):
        chunk = pos[start : start + block]
        phase = np.exp(1j * np.outer(chunk, x))
        out_pos[start : start + chunk.size] = np.trapezoid(phase * v, x, axis=1)
    vals = np.concatenate([np.conj(out_pos[:0:-1]), out_pos])
    total = np.trapezoid(v, x)
    if abs(vals[npos - 1] - total) > 1e-10 * max(1.0, abs(total)):
        raise ErgodriftError("transform at frequency 0 disagrees with the total mass")
    return CfTable(lambda_grid=lam.copy(), values=vals, source_label=label)


def density_fourier(table: DensityTable, lambda_grid=None) -> CfTable:
    """Fourier transform of an invariant density table."""
    return fourier_table(table.x_grid, table.f_values, lambda_grid, label=table.model_label)


def sigma_sq_mass(model: DiffusionModel, table: DensityTable = None) -> float:
    """integral of sigma^2(x) f(x) dx, composite Simpson on the density table."""
    if table is None:
        table = invariant_density(model)
    s2 = np.asarray(model.sigma_sq(table.x_grid), dtype=float)
    return float(simpson(s2 * table.f_values, x=table.x_grid))


def pinsker_constant(k: int, R: float) -> float:
    """Exact asymptotic minimax constant for smoothness k and ball radius R.

    P(k, R) = (2k+1) * (k / (pi (k+1)(2k+1)))^(2k/(2k+1)) * R^(1/(2k+1)).
    """
    if k < 1 or int(k) != k:
        raise ValueError("k must be a positive integer")
    if R <= 0:
        raise ValueError("R must be positive")
    k = int(k)
    expo = 2.0 * k / (2.0 * k + 1.0)
    return (2 * k + 1) * (k / (math.pi * (k + 1) * (2 * k + 1))) ** expo * R ** (1.0 / (2 * k + 1))


def pinsker_constant_general(k: int, R: float, model: DiffusionModel) -> float:
    """Minimax constant for a nonconstant diffusion coefficient.

    Multiplies the base constant by (integral sigma^2 f)^(2k/(2k+1)); for
    sigma^2 == 1 this reduces to ``pinsker_constant``.
    """
    mass = sigma_sq_mass(model)
    return pinsker_constant(k, R) * mass ** (2.0 * k / (2.0 * k + 1.0))


def optimal_weight(k: int, R: float, T: float) -> SpectralWeight:
    """Risk-optimal spectral weight for known smoothness and radius.

    Bandwidth (4k / (pi R T (k+1)(2k+1)))^(1/(2k+1)); shape exponent
    k + 1/log log(1+T), which tends to k as T grows.
    """
    if k < 1 or int(k) != k:
        raise ValueError("k must be a positive integer")
    if R <= 0:
        raise ValueError("R must be positive")
    if T <= math.e:
        raise ValueError("need T > e so that log log(1+T) is positive")
    k = int(k)
    alpha = (4.0 * k / (math.pi * R * T * (k + 1) * (2 * k + 1))) ** (1.0 / (2 * k + 1))
    beta = k + 1.0 / math.log(math.log1p(T))
    return SpectralWeight(alpha=alpha, beta=beta)
