import ast
from pathlib import Path

import numpy as np
import pytest

from graetz import SolverConfig, compute_spectrum
from graetz.config import OracleConfig
from graetz.errors import DomainError, GridMismatchError
from graetz.field import FieldSample
from graetz.oracle import FDGrid, compare_fields, fd_march, shoot_eigenvalues, shoot_radial

from conftest import ORACLE_LAMBDAS


@pytest.fixture(scope="module")
def fd_default():
    return fd_march(OracleConfig())


def test_shoot_below_first_eigenvalue():
    R1, _ = shoot_radial(0.5, 1e-4)
    assert R1 > 0


def test_shoot_at_first_eigenvalue():
    R1, traj = shoot_radial(ORACLE_LAMBDAS[0], 1e-4)
    assert abs(R1) < 1e-6
    assert traj[0, 0] == 1e-4 and traj[-1, 0] == pytest.approx(1.0, abs=1e-14)
    R1_half, _ = shoot_radial(ORACLE_LAMBDAS[0], 5e-5)
    assert abs(R1 - R1_half) < 1e-9


def test_shoot_rejects_bad_input():
    with pytest.raises(DomainError):
        shoot_radial(0.0)
    with pytest.raises(DomainError):
        shoot_radial(2.0, 1e-2)


def test_shoot_eigenvalues_three():
    lams = shoot_eigenvalues(3)
    np.testing.assert_allclose(lams, [2.70436, 6.67903, 10.67338], atol=1e-4)
    assert lams == sorted(lams)


def test_shoot_eigenvalues_step_halving():
    coarse = shoot_eigenvalues(5, OracleConfig(rk4_step=1e-4))
    fine = shoot_eigenvalues(5, OracleConfig(rk4_step=5e-5))
    assert np.max(np.abs(np.subtract(coarse, fine))) <= 1e-9


def test_shoot_matches_spectral_first_root():
    lam = shoot_eigenvalues(1)[0]
    assert abs(lam - compute_spectrum(1).lambdas[0]) < 1e-8


def test_shoot_eigenvalues_rejects_zero_count():
    with pytest.raises(DomainError):
        shoot_eigenvalues(0)


@pytest.mark.parametrize("kwargs", [
    {"rk4_step": 2e-3}, {"fd_nr": 50}, {"fd_nz": 100}, {"fd_zmax": 0.0},
])
def test_oracle_config_invariants(kwargs):
    with pytest.raises(DomainError):
        OracleConfig(**kwargs)


def test_fd_inlet_row(fd_default):
    assert np.all(fd_default.T[:-1, 0] == 1.0)
    assert np.all(fd_default.T[-1, :] == 0.0)
    assert fd_default.T.shape == (401, 4001)


def test_fd_bulk_non_increasing(fd_default):
    tb = fd_default.bulk_temperature()
    assert np.all(np.diff(tb) <= 0)


def test_fd_centerline_vs_spectral(fd_default, sol20):
    k = np.argmin(np.abs(fd_default.z - 0.1))
    assert fd_default.z[k] == pytest.approx(0.1)
    spectral = sol20.field(np.array([0.0]), np.array([fd_default.z[k]]))[0, 0]
    assert abs(fd_default.T[0, k] - spectral) <= 1e-3


def test_fd_samples():
    grid = fd_march(OracleConfig(fd_nr=51, fd_nz=101))
    samples = list(grid.samples())
    assert len(samples) == 51 * 101
    assert samples[0] == FieldSample(0.0, 0.0, 1.0)


def test_compare_default(fd_default, sol20):
    assert compare_fields(sol20, fd_default, 0.01) <= 1e-3


def test_compare_identity(sol20):
    r = np.linspace(0, 1, 51)
    z = np.linspace(0, 0.5, 101)
    grid = FDGrid(r, z, sol20.field(r, z))
    assert compare_fields(sol20, grid, 0.01) == 0.0


def test_compare_coarse_worse(fd_default, sol20):
    coarse = compare_fields(sol20, fd_march(OracleConfig(fd_nr=51, fd_nz=101)), 0.01)
    fine = compare_fields(sol20, fd_default, 0.01)
    assert np.isfinite(coarse) and np.isfinite(fine)
    assert coarse >= fine


def test_fd_second_order(sol20):
    e1 = compare_fields(sol20, fd_march(OracleConfig(fd_nr=101, fd_nz=1001)), 0.01)
    e2 = compare_fields(sol20, fd_march(OracleConfig(fd_nr=201, fd_nz=2001)), 0.01)
    assert e1 / e2 >= 3


def test_compare_errors(sol20):
    grid = fd_march(OracleConfig(fd_nr=51, fd_nz=101, fd_zmax=0.005))
    with pytest.raises(GridMismatchError):
        compare_fields(sol20, grid, 0.01)
    with pytest.raises(DomainError):
        compare_fields(sol20, grid, 0.001)


def test_oracle_is_independent_of_spectral_path():
    src = Path(__import__("graetz.oracle").oracle.__file__).read_text()
    imported = set()
    for node in ast.walk(ast.parse(src)):
        if isinstance(node, ast.ImportFrom) and node.level:
            imported.add(node.module)
    assert imported <= {"config", "errors", "field"}
