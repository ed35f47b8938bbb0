"""Numerical settings shared by the spectral solver and the CLI."""

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and cutoffs for the spectral solver.

    ``bracket_step`` must stay below 1 so the uniform scan cannot step over a
    root (consecutive eigenvalues are never closer than about 3.97).
    """

    mode_count: int = 20
    root_tol: float = 1e-12
    quadrature_order: int = 64
    bracket_step: float = 0.5
    kummer_tol: float = 1e-15
    kummer_max_terms: int = 500

    def __post_init__(self):
        for name in ("mode_count", "root_tol", "quadrature_order",
                     "bracket_step", "kummer_tol", "kummer_max_terms"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)!r}")
        if self.bracket_step > 1:
            raise DomainError(f"bracket_step must be <= 1, got {self.bracket_step!r}")


@dataclass(frozen=True)
class OracleConfig:
    """Resolution of the brute-force validators.

    Attributes:
        rk4_step: Radial step of the shooting integrator.
        fd_nr: Radial nodes of the finite-difference grid, wall and axis included.
        fd_nz: Axial nodes of the finite-difference grid, inlet included.
        fd_zmax: Axial extent of the finite-difference grid.
    """

    rk4_step: float = 1e-4
    fd_nr: int = 401
    fd_nz: int = 4001
    fd_zmax: float = 0.5

    def __post_init__(self):
        if not 0 < self.rk4_step <= 1e-3:
            raise DomainError(f"rk4_step must lie in (0, 1e-3], got {self.rk4_step!r}")
        if self.fd_nr < 51:
            raise DomainError(f"fd_nr must be >= 51, got {self.fd_nr!r}")
        if self.fd_nz < 101:
            raise DomainError(f"fd_nz must be >= 101, got {self.fd_nz!r}")
        if not self.fd_zmax > 0:
            raise DomainError(f"fd_zmax must be positive, got {self.fd_zmax!r}")
