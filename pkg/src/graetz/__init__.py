"""Graetz problem (thermal entry of laminar pipe flow) by eigenfunction expansion."""

from .config import OracleConfig, SolverConfig
from .eigen import (EigenMode, Spectrum, bracket_scan, compute_spectrum, eigencondition,
                    eigenfunction_deriv, eigenfunction_eval, refine_root)
from .errors import (BracketExhaustionError, ConvergenceError, DegenerateError, DomainError,
                     GraetzError, GridMismatchError)
from .field import FieldSample
from .series import (QuadratureRule, SeriesSolution, build_solution, bulk_temperature,
                     gauss_rule, local_nusselt, mode_coefficient, temperature_at)
from .specfun import KummerEval, kummer_m, kummer_m_dx, pochhammer

__version__ = "0.1.0"
