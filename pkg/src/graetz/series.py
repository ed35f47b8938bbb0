"""Eigenfunction expansion of the Graetz temperature field.

With a unit inlet profile and a cold wall the solution is

    T(r, z) = sum_n C_n R_n(r) exp(-lam_n**2 z),

where the coefficients come from orthogonality under the weight
``w(r) = r (1 - r**2)``:

    C_n = int_0^1 w R_n dr / int_0^1 w R_n**2 dr.

Integrating the radial equation once gives ``int_0^1 w R_n dr = -R_n'(1) / lam_n**2``,
which turns the bulk temperature and the wall heat flux into closed-form
sums over the wall slopes.
"""

from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from .config import SolverConfig
from .eigen import EigenMode, Spectrum, compute_spectrum, eigenfunction_eval, radial_matrix
from .errors import DegenerateError, DomainError
from .field import FieldSample

MAX_QUADRATURE_ORDER = 512


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre rule on [0, 1]; any weight function goes in the integrand."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def integrate(self, values) -> float:
        return float(np.dot(self.weights, values))


def gauss_rule(order: int) -> QuadratureRule:
    """Gauss-Legendre nodes and weights mapped from [-1, 1] to [0, 1]."""
    if not 2 <= order <= MAX_QUADRATURE_ORDER:
        raise DomainError(f"order must lie in [2, {MAX_QUADRATURE_ORDER}], got {order!r}")
    x, w = np.polynomial.legendre.leggauss(order)
    return QuadratureRule(0.5 * (x + 1.0), 0.5 * w, order)


def _weight(r):
    return r * (1.0 - r * r)


def mode_coefficient(mode: EigenMode, rule: QuadratureRule) -> float:
    """Projection of the unit inlet profile onto ``R_n``."""
    R = eigenfunction_eval(mode, rule.nodes)
    wR = rule.weights * _weight(rule.nodes) * R
    norm = float(np.dot(wR, R))
    if norm < 1e-14:
        raise DegenerateError(f"mode {mode.index} has weighted norm {norm:.3e}")
    return float(np.sum(wR)) / norm


@dataclass(frozen=True)
class SeriesSolution:
    """Truncated expansion with every coefficient filled in.

    Immutable; evaluation methods are pure and can run from many threads.
    """

    spectrum: Spectrum
    truncation: int
    quadrature_order: int
    config: SolverConfig = SolverConfig()

    @cached_property
    def lambdas(self) -> np.ndarray:
        return self.spectrum.lambdas

    @cached_property
    def coefficients(self) -> np.ndarray:
        return np.array([m.coefficient for m in self.spectrum.modes])

    @cached_property
    def wall_slopes(self) -> np.ndarray:
        return np.array([m.wall_slope for m in self.spectrum.modes])

    def decay(self, z) -> np.ndarray:
        """``exp(-lam_n**2 z)``, shape ``(N,)`` or ``(N, len(z))``."""
        z = np.asarray(z, dtype=float)
        return np.exp(-np.multiply.outer(self.lambdas**2, z))

    def radial(self, r) -> np.ndarray:
        """``R_n(r_j)``, shape ``(N, len(r))``."""
        return radial_matrix(self.lambdas, np.atleast_1d(r),
                             self.config.kummer_tol, self.config.kummer_max_terms)

    def field(self, r, z) -> np.ndarray:
        """Temperature on the tensor grid ``r x z``, shape ``(len(r), len(z))``."""
        r, z = _check_rz(r, z)
        modal = self.coefficients[:, None] * self.decay(np.atleast_1d(z))
        return self.radial(r).T @ modal


def _check_rz(r, z):
    r = np.asarray(r, dtype=float)
    z = np.asarray(z, dtype=float)
    if np.any((r < 0) | (r > 1)) or np.any(np.isnan(r)):
        raise DomainError("r must lie in [0, 1]")
    if np.any(z < 0) or np.any(np.isnan(z)):
        raise DomainError("z must be non-negative")
    return r, z


def build_solution(count: int | None = None, config: SolverConfig = SolverConfig()) -> SeriesSolution:
    """Compute the spectrum and expansion coefficients for ``count`` modes.

    ``count`` defaults to ``config.mode_count``. The quadrature order is raised
    to ``3 * count`` when the configured order is too coarse to resolve the
    oscillations of the highest mode.
    """
    count = config.mode_count if count is None else count
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count!r}")
    order = min(MAX_QUADRATURE_ORDER, max(config.quadrature_order, 3 * count))
    rule = gauss_rule(order)
    spectrum = compute_spectrum(count, config)
    modes = tuple(replace(m, coefficient=mode_coefficient(m, rule)) for m in spectrum.modes)
    spectrum = replace(spectrum, modes=modes)
    return SeriesSolution(spectrum, count, order, config)


def temperature_at(sol: SeriesSolution, r: float, z: float) -> FieldSample:
    """Truncated series at a single point.

    At ``z = 0`` the series converges only in the weighted mean (Gibbs
    oscillation at the inlet/wall corner); pointwise values there are rough.
    """
    T = sol.field(np.array([r]), np.array([z]))[0, 0]
    return FieldSample(float(r), float(z), float(T))


def temperature_field(sol: SeriesSolution, r, z) -> np.ndarray:
    return sol.field(r, z)


def bulk_temperature(sol: SeriesSolution, z):
    """Mixing-cup temperature ``4 int_0^1 r (1 - r^2) T dr`` from the wall-slope series."""
    _check_rz(0.0, z)
    proj = -sol.wall_slopes / sol.lambdas**2
    out = 4.0 * (sol.coefficients * proj) @ sol.decay(z)
    return float(out) if np.ndim(z) == 0 else out


def bulk_temperature_quadrature(sol: SeriesSolution, z, order: int | None = None):
    """Mixing-cup temperature by direct quadrature of the field."""
    rule = gauss_rule(order or sol.quadrature_order)
    T = sol.field(rule.nodes, np.atleast_1d(z))
    out = 4.0 * (rule.weights * _weight(rule.nodes)) @ T
    return float(out[0]) if np.ndim(z) == 0 else out


def wall_gradient(sol: SeriesSolution, z):
    """``dT/dr`` at the wall."""
    _check_rz(0.0, z)
    out = (sol.coefficients * sol.wall_slopes) @ sol.decay(z)
    return float(out) if np.ndim(z) == 0 else out


def local_nusselt(sol: SeriesSolution, z):
    """Local Nusselt number ``-2 T_r(1, z) / T_b(z)`` for the zero-temperature wall.

    Tends to ``lam_0**2 / 2`` far downstream.
    """
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr <= 0):
        raise DomainError("z must be positive; the Nusselt number is singular at the inlet")
    tb = np.asarray(bulk_temperature(sol, z_arr))
    if np.any(tb < 1e-300):
        raise DegenerateError(f"bulk temperature underflows at z={z!r}")
    out = -2.0 * np.asarray(wall_gradient(sol, z_arr)) / tb
    return float(out) if np.ndim(z) == 0 else out


def inlet_error(sol: SeriesSolution, order: int = MAX_QUADRATURE_ORDER) -> float:
    """Weighted L2 misfit ``int_0^1 r (1 - r^2) (T(r, 0) - 1)^2 dr`` of the truncated inlet."""
    rule = gauss_rule(order)
    T0 = sol.field(rule.nodes, np.array([0.0]))[:, 0]
    return rule.integrate(_weight(rule.nodes) * (T0 - 1.0) ** 2)
