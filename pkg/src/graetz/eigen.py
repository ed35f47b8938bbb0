"""Eigenvalues and eigenfunctions of the Graetz radial problem.

The radial factor solves

    -(1/r) (r R')' = lam**2 (1 - r**2) R,   R'(0) = 0,   R(1) = 0,

whose regular solution, normalized to ``R(0) = 1``, is

    R(r; lam) = exp(-lam r**2 / 2) * M(1/2 - lam/4, 1, lam r**2).

The eigenvalues ``lam_n`` are the zeros of the wall value ``g(lam) = R(1; lam)``.
Carrying the ``exp(-lam/2)`` factor keeps ``g`` of order one for every mode.
"""

from dataclasses import dataclass

import numpy as np

from .config import SolverConfig
from .errors import BracketExhaustionError, ConvergenceError, DomainError
from .specfun import DEFAULT_MAX_TERMS, DEFAULT_TOL, kummer_m, kummer_m_dx

RESIDUAL_TOL = 1e-10
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class EigenMode:
    """One Sturm-Liouville mode.

    Attributes:
        index: Mode number n, equal to the number of interior zeros of R_n.
        lam: Square root of the eigenvalue; ``lam**2`` multiplies the weight.
        wall_slope: ``R_n'(1)``.
        coefficient: Expansion coefficient of the unit inlet profile, ``None``
            until the series module fills it in.
    """

    index: int
    lam: float
    wall_slope: float
    coefficient: float | None = None


@dataclass(frozen=True)
class Spectrum:
    modes: tuple[EigenMode, ...]
    solver_tol: float
    bracket_step: float

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([m.lam for m in self.modes])

    def __len__(self):
        return len(self.modes)


def eigencondition(lam, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS):
    """Wall value ``R(1; lam) = exp(-lam/2) M(1/2 - lam/4, 1, lam)``; broadcasts over ``lam``."""
    lam_arr = np.asarray(lam, dtype=float)
    if np.any(lam_arr < 0):
        raise DomainError(f"lam must be non-negative, got {lam!r}")
    m = kummer_m(0.5 - 0.25 * lam_arr, 1.0, lam_arr, tol, max_terms).value
    g = np.exp(-0.5 * lam_arr) * m
    return float(g) if np.ndim(lam) == 0 else g


def bracket_scan(lambda_max: float, step: float = 0.5, tol: float = DEFAULT_TOL,
                 max_terms: int = DEFAULT_MAX_TERMS) -> list[tuple[float, float]]:
    """Sign-change brackets of the eigencondition on a uniform grid from 0."""
    if not step > 0:
        raise DomainError(f"step must be positive, got {step!r}")
    if not lambda_max > step:
        raise DomainError(f"lambda_max must exceed step, got {lambda_max!r}")
    grid = step * np.arange(int(np.floor(lambda_max / step + 1e-9)) + 1)
    g = eigencondition(grid, tol, max_terms)
    sign = np.sign(g)
    hits = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    # exact zeros on grid nodes: keep the bracket to the right of the node
    hits = np.union1d(hits, np.nonzero(sign[:-1] == 0)[0])
    return [(float(grid[i]), float(grid[i + 1])) for i in hits]


def _bisect(lo, hi, tol, ktol, kmax):
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    glo = eigencondition(lo, ktol, kmax)
    ghi = eigencondition(hi, ktol, kmax)
    if np.any(np.sign(glo) * np.sign(ghi) > 0):
        raise DomainError("bracket does not enclose a sign change")
    for _ in range(MAX_BISECTIONS):
        open_ = hi - lo > tol
        if not open_.any():
            break
        mid = 0.5 * (lo + hi)
        gm = eigencondition(mid, ktol, kmax)
        left = np.sign(gm) == np.sign(glo)
        exact = gm == 0.0
        lo = np.where(open_ & (left | exact), mid, lo)
        glo = np.where(open_ & left, gm, glo)
        hi = np.where(open_ & (~left | exact), mid, hi)
    else:
        raise ConvergenceError(f"bisection did not reach width {tol} in {MAX_BISECTIONS} steps")
    roots = 0.5 * (lo + hi)
    residual = np.abs(eigencondition(roots, ktol, kmax))
    bad = residual > RESIDUAL_TOL
    if bad.any():
        raise ConvergenceError(
            f"root residual {residual[bad].max():.3e} exceeds {RESIDUAL_TOL:g} "
            f"at lam={roots[bad][0]!r}; tighten the root tolerance")
    return roots


def refine_root(bracket: tuple[float, float], tol: float = 1e-12,
                kummer_tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> float:
    """Bisect a sign-change bracket down to width ``tol``.

    Raises:
        ConvergenceError: If 200 bisections do not reach ``tol`` or the final
            residual ``|g(lam)|`` exceeds ``1e-10``.
    """
    a, b = bracket
    return float(_bisect([a], [b], tol, kummer_tol, max_terms)[0])


def eigenfunction_eval(mode: EigenMode, r, tol: float = DEFAULT_TOL,
                       max_terms: int = DEFAULT_MAX_TERMS):
    """``R_n(r)`` normalized so that ``R_n(0) = 1``."""
    x = _argument(mode.lam, r)
    m = kummer_m(0.5 - 0.25 * mode.lam, 1.0, x, tol, max_terms).value
    out = np.exp(-0.5 * x) * m
    return float(out) if np.ndim(r) == 0 else out


def eigenfunction_deriv(mode: EigenMode, r, tol: float = DEFAULT_TOL,
                        max_terms: int = DEFAULT_MAX_TERMS):
    """``dR_n/dr`` from the product rule on ``exp(-x/2) M(a, 1, x)`` with ``x = lam r^2``."""
    x = _argument(mode.lam, r)
    a = 0.5 - 0.25 * mode.lam
    m = kummer_m(a, 1.0, x, tol, max_terms).value
    dm = kummer_m_dx(a, 1.0, x, tol, max_terms)
    out = 2.0 * mode.lam * np.asarray(r, dtype=float) * np.exp(-0.5 * x) * (dm - 0.5 * m)
    return float(out) if np.ndim(r) == 0 else out


def _argument(lam, r):
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r > 1)) or np.any(np.isnan(r)):
        raise DomainError("r must lie in [0, 1]")
    return lam * r * r


def radial_matrix(lams, r, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS):
    """``R_n(r_j)`` for every eigenvalue and radius, shape ``(len(lams), len(r))``."""
    lams = np.asarray(lams, dtype=float)[:, None]
    x = _argument(lams, np.atleast_1d(r)[None, :])
    m = kummer_m(0.5 - 0.25 * lams, 1.0, x, tol, max_terms).value
    return np.exp(-0.5 * x) * m


def compute_spectrum(count: int, config: SolverConfig = SolverConfig()) -> Spectrum:
    """First ``count`` modes with eigenvalues, wall slopes and ``R_n(0) = 1``.

    The scan runs to ``4 * count + 4``; eigenvalue gaps tend to 4 from below,
    so that range always holds ``count`` roots.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count!r}")
    ktol, kmax = config.kummer_tol, config.kummer_max_terms
    brackets = bracket_scan(4 * count + 4, config.bracket_step, ktol, kmax)
    if len(brackets) < count:
        raise BracketExhaustionError(
            f"found {len(brackets)} sign changes, wanted {count}; reduce bracket_step")
    lo, hi = zip(*brackets[:count])
    roots = _bisect(lo, hi, config.root_tol, ktol, kmax)
    modes = []
    for n, lam in enumerate(roots):
        mode = EigenMode(n, float(lam), 0.0)
        slope = eigenfunction_deriv(mode, 1.0, ktol, kmax)
        modes.append(EigenMode(n, float(lam), slope))
    return Spectrum(tuple(modes), config.root_tol, config.bracket_step)
