"""Scalar diffusion models dX = S(X) dt + sigma(X) dW and the built-in registry."""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import NonErgodicModel


@dataclass(frozen=True)
class DiffusionModel:
    """A scalar diffusion, described by its drift and squared diffusion coefficient.

    Parameters
    ----------
    drift : callable
        S(x), vectorized over numpy arrays; units of state/time.
    sigma_sq : callable
        sigma^2(x), strictly positive; units of state^2/time.
    label : str
        Short name used in file headers and caches.
    smoothness_k : int, optional
        Oracle smoothness order for nonadaptive runs.
    x_tail : float
        Abscissa of the tail-sign admissibility probe (checked at
        +-x_tail and +-2 x_tail).
    sim_kernel : int, optional
        Identifier of a compiled simulation update rule; None selects
        the generic (slower) path.
    """

    drift: Callable
    sigma_sq: Callable
    label: str
    smoothness_k: Optional[int] = None
    x_tail: float = 10.0
    sim_kernel: Optional[int] = field(default=None, repr=False)

    def __post_init__(self):
        probe = np.array([-2 * self.x_tail, -self.x_tail, 0.0, self.x_tail, 2 * self.x_tail])
        if not np.all(np.asarray(self.sigma_sq(probe), dtype=float) > 0.0):
            raise ValueError(f"sigma_sq must be strictly positive ({self.label})")

    def ergodicity_probe(self) -> bool:
        """Heuristic admissibility gate: S(x) sgn(x) / sigma^2(x) < 0 in the tails.

        A numerical probe at |x| in {x_tail, 2 x_tail}, not a proof.
        """
        xs = np.array([-2 * self.x_tail, -self.x_tail, self.x_tail, 2 * self.x_tail])
        ratio = np.asarray(self.drift(xs), dtype=float) * np.sign(xs)
        ratio = ratio / np.asarray(self.sigma_sq(xs), dtype=float)
        return bool(np.all(ratio < 0.0))

    def require_ergodic(self):
        if not self.ergodicity_probe():
            raise NonErgodicModel(
                f"model '{self.label}' fails the tail-sign probe at |x| in "
                f"{{{self.x_tail}, {2 * self.x_tail}}}"
            )


def _neg_x(x):
    return -np.asarray(x, dtype=float)


def _neg_x_cubed(x):
    x = np.asarray(x, dtype=float)
    return -x - x**3


def _unit(x):
    return np.ones_like(np.asarray(x, dtype=float))


def _lorentz(x):
    x = np.asarray(x, dtype=float)
    return 1.0 / (1.0 + x * x)


_REGISTRY = {
    "ou": lambda: DiffusionModel(_neg_x, _unit, "ou", smoothness_k=1, sim_kernel=0),
    "quartic": lambda: DiffusionModel(_neg_x_cubed, _unit, "quartic", smoothness_k=1, sim_kernel=1),
    "ou-varsigma": lambda: DiffusionModel(
        _neg_x, _lorentz, "ou-varsigma", smoothness_k=1, sim_kernel=2
    ),
}

MODEL_NAMES = tuple(sorted(_REGISTRY))


def get_model(name: str) -> DiffusionModel:
    """Look up a built-in model by name ("ou", "quartic", "ou-varsigma")."""
    try:
        factory = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown model '{name}'; available: {', '.join(MODEL_NAMES)}") from None
    return factory()
