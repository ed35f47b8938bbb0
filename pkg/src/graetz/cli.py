"""Command-line front end.

    graetz eigen    --count 10
    graetz profile  --z 0.1 --nr 11
    graetz nusselt  --zmin 0.01 --zmax 1 --points 20
    graetz validate --fd-nr 401 --fd-nz 4001

Global flags (``--modes``, ``--root-tol``, ``--quad-order``, ``--format``,
``--output``) are accepted before or after the subcommand.

Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from .config import OracleConfig, SolverConfig
from .eigen import compute_spectrum
from .errors import DomainError, GraetzError
from .oracle import compare_fields, fd_march, shoot_eigenvalues
from .series import build_solution, bulk_temperature, local_nusselt

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2

EIGEN_COLUMNS = ("n", "lambda", "lambda_sq", "C_n", "dR_dr_at_1")
EIGEN_CHECK_COUNT = 5
EIGEN_TOL = 1e-8
FIELD_TOL = 1e-3
FIELD_ZMIN = 0.01


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS lets the same flag appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--modes", type=int, help="series truncation (default 20)")
    p.add_argument("--root-tol", type=float, help="bisection width (default 1e-12)")
    p.add_argument("--quad-order", type=int, help="Gauss-Legendre order (default 64)")
    p.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    p.add_argument("--output", help="output path (default stdout)")
    return p


GLOBAL_DEFAULTS = {"modes": 20, "root_tol": 1e-12, "quad_order": 64,
                   "format": "csv", "output": None}


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = _Parser(prog="graetz", parents=[common],
                     description="Graetz problem by eigenfunction expansion.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eigen", parents=[common], help="eigenvalue table")
    p.add_argument("--count", type=int, default=None, help="number of modes (default --modes)")

    p = sub.add_parser("profile", parents=[common], help="radial temperature profile")
    p.add_argument("--z", type=float, required=True, help="axial station")
    p.add_argument("--nr", type=int, default=101, help="radial points (default 101)")

    p = sub.add_parser("nusselt", parents=[common], help="bulk temperature and Nusselt curve")
    p.add_argument("--zmin", type=float, required=True)
    p.add_argument("--zmax", type=float, required=True)
    p.add_argument("--points", type=int, default=20)

    p = sub.add_parser("validate", parents=[common], help="cross-check against brute-force oracles")
    p.add_argument("--fd-nr", type=int, default=OracleConfig.fd_nr)
    p.add_argument("--fd-nz", type=int, default=OracleConfig.fd_nz)
    p.add_argument("--fd-zmax", type=float, default=OracleConfig.fd_zmax)
    p.add_argument("--rk4-step", type=float, default=OracleConfig.rk4_step)
    return parser


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    # repr is the shortest string that round-trips, locale independent
    return repr(float(value))


def render(rows: list[dict], columns, fmt: str) -> str:
    if fmt == "json":
        clean = [{k: (int(v) if isinstance(v, (int, np.integer)) else
                      v if isinstance(v, str) else float(v)) for k, v in row.items()}
                 for row in rows]
        return json.dumps(clean, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else _fmt(v) for v in (row[c] for c in columns)])
    return buf.getvalue()


def _solver_config(args) -> SolverConfig:
    try:
        return SolverConfig(mode_count=args.modes, root_tol=args.root_tol,
                            quadrature_order=args.quad_order)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def cmd_eigen(count: int, config: SolverConfig) -> list[dict]:
    if count < 1:
        raise UsageError(f"--count must be >= 1, got {count}")
    sol = build_solution(count, config)
    return [{"n": m.index, "lambda": m.lam, "lambda_sq": m.lam**2,
             "C_n": m.coefficient, "dR_dr_at_1": m.wall_slope}
            for m in sol.spectrum.modes]


def cmd_profile(z: float, nr: int, config: SolverConfig) -> list[dict]:
    if not z >= 0:
        raise UsageError(f"--z must be >= 0, got {z}")
    if nr < 2:
        raise UsageError(f"--nr must be >= 2, got {nr}")
    sol = build_solution(config.mode_count, config)
    r = np.arange(nr) / (nr - 1)
    T = sol.field(r, np.array([z]))[:, 0]
    return [{"r": ri, "T": ti} for ri, ti in zip(r, T)]


def cmd_nusselt(z_min: float, z_max: float, points: int, config: SolverConfig) -> list[dict]:
    if not 0 < z_min < z_max:
        raise UsageError(f"need 0 < zmin < zmax, got zmin={z_min}, zmax={z_max}")
    if points < 2:
        raise UsageError(f"--points must be >= 2, got {points}")
    sol = build_solution(config.mode_count, config)
    z = np.geomspace(z_min, z_max, points)
    return [{"z": zi, "T_bulk": tb, "Nu": nu}
            for zi, tb, nu in zip(z, bulk_temperature(sol, z), local_nusselt(sol, z))]


def cmd_validate(config: SolverConfig, oracle_config: OracleConfig) -> list[dict]:
    """Spectral eigenvalues against shooting, spectral field against Crank-Nicolson."""
    checks = []
    try:
        spec = compute_spectrum(EIGEN_CHECK_COUNT, config)
        shot = np.array(shoot_eigenvalues(EIGEN_CHECK_COUNT, oracle_config))
        err = float(np.max(np.abs(spec.lambdas - shot)))
    except GraetzError as exc:
        print(f"graetz: eigenvalue check: {exc}", file=sys.stderr)
        err = float("inf")
    checks.append({"check": "eigenvalues_vs_shooting", "measured": err,
                   "tolerance": EIGEN_TOL, "status": "PASS" if err <= EIGEN_TOL else "FAIL"})
    try:
        sol = build_solution(config.mode_count, config)
        err = compare_fields(sol, fd_march(oracle_config), FIELD_ZMIN)
    except GraetzError as exc:
        print(f"graetz: field check: {exc}", file=sys.stderr)
        err = float("inf")
    checks.append({"check": "field_vs_crank_nicolson", "measured": err,
                   "tolerance": FIELD_TOL, "status": "PASS" if err <= FIELD_TOL else "FAIL"})
    return checks


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        config = _solver_config(args)
        if args.command == "eigen":
            count = config.mode_count if args.count is None else args.count
            rows, cols = cmd_eigen(count, config), EIGEN_COLUMNS
        elif args.command == "profile":
            rows, cols = cmd_profile(args.z, args.nr, config), ("r", "T")
        elif args.command == "nusselt":
            rows = cmd_nusselt(args.zmin, args.zmax, args.points, config)
            cols = ("z", "T_bulk", "Nu")
        else:
            try:
                oracle_config = OracleConfig(args.rk4_step, args.fd_nr, args.fd_nz, args.fd_zmax)
            except DomainError as exc:
                raise UsageError(str(exc)) from exc
            rows = cmd_validate(config, oracle_config)
            cols = ("check", "measured", "tolerance", "status")
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"graetz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraetzError as exc:
        print(f"graetz: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    text = render(rows, cols, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.command == "validate":
        failed = [row["check"] for row in rows if row["status"] != "PASS"]
        if failed:
            print(f"graetz: validation failed: {', '.join(failed)}", file=sys.stderr)
            return EXIT_NUMERIC
    return EXIT_OK


def main():
    sys.exit(run())
