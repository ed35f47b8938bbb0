"""Brute-force validators for the spectral solver.

Two routes that never touch the hypergeometric kernel or the eigen module:

* an RK4 shooting integrator for the radial eigenproblem
  ``-(1/r)(r R')' = lam**2 (1 - r**2) R`` with ``R'(0) = 0``, ``R(0) = 1``;
* a Crank-Nicolson marcher for ``T_z = (1/(1 - r**2)) (1/r)(r T_r)_r`` with
  ``T(r, 0) = 1`` and ``T(1, z) = 0``.

The spectral solution enters only through :func:`compare_fields`, which is
duck-typed on a ``field(r, z)`` method so this module imports nothing from
the spectral side.
"""

from dataclasses import dataclass
from typing import Iterator

import numpy as np
from numba import njit
from scipy.linalg import solve_banded

from .config import OracleConfig
from .errors import BracketExhaustionError, ConvergenceError, DomainError, GridMismatchError
from .field import FieldSample

SCAN_STEP = 0.5
BISECT_TOL = 1e-10


@njit(cache=True)
def _shoot(lam, step, store):
    n = int(round((1.0 - step) / step))
    h = (1.0 - step) / n
    l2 = lam * lam
    r = step
    # two-term Frobenius start on the regular branch
    R = 1.0 - 0.25 * l2 * r * r
    P = -0.5 * l2 * r
    traj = np.empty((n + 1 if store else 1, 3))
    traj[0, 0] = r
    traj[0, 1] = R
    traj[0, 2] = P
    for k in range(n):
        rm = r + 0.5 * h
        rn = step + (k + 1) * h
        k1R = P
        k1P = -P / r - l2 * (1.0 - r * r) * R
        R2 = R + 0.5 * h * k1R
        P2 = P + 0.5 * h * k1P
        k2R = P2
        k2P = -P2 / rm - l2 * (1.0 - rm * rm) * R2
        R3 = R + 0.5 * h * k2R
        P3 = P + 0.5 * h * k2P
        k3R = P3
        k3P = -P3 / rm - l2 * (1.0 - rm * rm) * R3
        R4 = R + h * k3R
        P4 = P + h * k3P
        k4R = P4
        k4P = -P4 / rn - l2 * (1.0 - rn * rn) * R4
        R += h * (k1R + 2.0 * k2R + 2.0 * k3R + k4R) / 6.0
        P += h * (k1P + 2.0 * k2P + 2.0 * k3P + k4P) / 6.0
        r = rn
        if store:
            traj[k + 1, 0] = r
            traj[k + 1, 1] = R
            traj[k + 1, 2] = P
    return R, traj


def shoot_radial(lam: float, step: float = 1e-4) -> tuple[float, np.ndarray]:
    """Integrate the radial eigen-ODE from the axis to the wall.

    Args:
        lam: Square root of the eigenvalue parameter, ``lam > 0``.
        step: Radial RK4 step, at most ``1e-3``.

    Returns:
        ``(R(1), trajectory)`` where ``trajectory`` has rows ``(r, R, R')``
        starting at ``r = step`` and ending at ``r = 1``.
    """
    if not lam > 0:
        raise DomainError(f"lam must be positive, got {lam!r}")
    if not 0 < step <= 1e-3:
        raise DomainError(f"step must lie in (0, 1e-3], got {step!r}")
    R1, traj = _shoot(float(lam), float(step), True)
    return float(R1), traj


def _wall_value(lam: float, step: float) -> float:
    if lam == 0.0:
        return 1.0
    return float(_shoot(lam, step, False)[0])


def shoot_eigenvalues(count: int, config: OracleConfig = OracleConfig()) -> list[float]:
    """First ``count`` eigenvalues by sign-change scan and bisection of ``R(1; lam)``."""
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count!r}")
    step = config.rk4_step
    grid = np.arange(0.0, 4 * count + 4 + SCAN_STEP / 2, SCAN_STEP)
    values = [_wall_value(float(lam), step) for lam in grid]
    roots = []
    for a, b, fa, fb in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if len(roots) == count:
            break
        if fa == 0.0:
            roots.append(float(a))
            continue
        if np.sign(fa) == np.sign(fb):
            continue
        a, b = float(a), float(b)
        for _ in range(200):
            if b - a <= BISECT_TOL:
                break
            mid = 0.5 * (a + b)
            fm = _wall_value(mid, step)
            if fm == 0.0:
                a = b = mid
                break
            if np.sign(fm) == np.sign(fa):
                a, fa = mid, fm
            else:
                b = mid
        else:
            raise ConvergenceError(f"bisection stalled in [{a}, {b}]")
        roots.append(0.5 * (a + b))
    if len(roots) < count:
        raise BracketExhaustionError(f"found {len(roots)} sign changes, wanted {count}")
    return roots


@dataclass(frozen=True)
class FDGrid:
    """Space-marching solution on a uniform ``r`` by ``z`` grid.

    ``T[i, k]`` is the temperature at ``r[i]``, ``z[k]``.
    """

    r: np.ndarray
    z: np.ndarray
    T: np.ndarray

    def samples(self) -> Iterator[FieldSample]:
        for k, zk in enumerate(self.z):
            for i, ri in enumerate(self.r):
                yield FieldSample(float(ri), float(zk), float(self.T[i, k]))

    def bulk_temperature(self) -> np.ndarray:
        """Mixing-cup temperature ``4 * int r (1 - r^2) T dr`` at every axial node."""
        w = self.r * (1.0 - self.r**2)
        return 4.0 * np.trapezoid(w[:, None] * self.T, self.r, axis=0)


def _radial_operator(nr: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # unknowns are nodes 0..nr-2; the wall node is pinned to zero
    dr = 1.0 / (nr - 1)
    r = np.arange(nr - 1) * dr
    lower = np.zeros(nr - 1)
    diag = np.zeros(nr - 1)
    upper = np.zeros(nr - 1)
    diag[0] = -4.0 / dr**2
    upper[0] = 4.0 / dr**2
    ri = r[1:]
    scale = 1.0 / ((1.0 - ri**2) * ri * dr**2)
    lower[1:] = (ri - 0.5 * dr) * scale
    upper[1:] = (ri + 0.5 * dr) * scale
    diag[1:] = -2.0 * ri * scale
    return lower, diag, upper


def fd_march(config: OracleConfig = OracleConfig(), startup_steps: int = 2) -> FDGrid:
    """March the PDE from the inlet with Crank-Nicolson.

    The inlet/wall corner is a discontinuity that Crank-Nicolson does not damp,
    so the first ``startup_steps`` steps are each taken as two backward-Euler
    half steps (Rannacher start-up). The half-step matrix equals the
    Crank-Nicolson left-hand side, so every step solves the same tridiagonal
    system.
    """
    nr, nz = config.fd_nr, config.fd_nz
    r = np.linspace(0.0, 1.0, nr)
    z = np.linspace(0.0, config.fd_zmax, nz)
    dz = z[1] - z[0]
    lower, diag, upper = _radial_operator(nr)

    ab = np.zeros((3, nr - 1))
    ab[0, 1:] = -0.5 * dz * upper[:-1]
    ab[1] = 1.0 - 0.5 * dz * diag
    ab[2, :-1] = -0.5 * dz * lower[1:]

    def apply_rhs(u):
        out = u + 0.5 * dz * diag * u
        out[:-1] += 0.5 * dz * upper[:-1] * u[1:]
        out[1:] += 0.5 * dz * lower[1:] * u[:-1]
        return out

    T = np.zeros((nr, nz))
    u = np.ones(nr - 1)
    T[:-1, 0] = u
    for k in range(1, nz):
        if k <= startup_steps:
            u = solve_banded((1, 1), ab, u, check_finite=False)
            u = solve_banded((1, 1), ab, u, check_finite=False)
        else:
            u = solve_banded((1, 1), ab, apply_rhs(u), check_finite=False)
        T[:-1, k] = u
    return FDGrid(r, z, T)


def compare_fields(spectral, fd: FDGrid, z_min: float = 0.01) -> float:
    """Max ``|T_spectral - T_fd|`` over grid nodes with ``z >= z_min``.

    ``spectral`` needs a ``field(r, z)`` method returning an array of shape
    ``(len(r), len(z))``.
    """
    if z_min < 0.01:
        raise DomainError(f"z_min must be >= 0.01 to skip the inlet layer, got {z_min!r}")
    keep = fd.z >= z_min
    if not keep.any():
        raise GridMismatchError(f"grid ends at z={fd.z[-1]!r}, below z_min={z_min!r}")
    ts = spectral.field(fd.r, fd.z[keep])
    return float(np.max(np.abs(ts - fd.T[:, keep])))
