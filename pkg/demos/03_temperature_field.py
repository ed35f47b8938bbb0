"""
Temperature field, bulk temperature and Nusselt number
======================================================

Fluid enters at T = 1 and meets a wall held at T = 0. The temperature is a
sum of decaying modes T = sum C_n R_n(r) exp(-lam_n^2 z).
"""

import numpy as np

from graetz import build_solution, bulk_temperature, local_nusselt
from graetz.series import inlet_error

sol = build_solution(20)
print("first coefficients:", np.round(sol.coefficients[:5], 6))

# %%
# Radial profiles flatten and decay downstream.
r = np.linspace(0, 1, 6)
z = np.array([0.01, 0.05, 0.1, 0.2, 0.5])
T = sol.field(r, z)
print("r     " + "".join(f"z={v:<9}" for v in z))
for ri, row in zip(r, T):
    print(f"{ri:4.2f}  " + "".join(f"{v:<11.6f}" for v in row))

# %%
# Mixing-cup temperature and local Nusselt number. Far downstream only the
# first mode survives and Nu settles at lam_0^2 / 2 = 3.6568.
zs = np.geomspace(0.001, 2, 12)
for zi, tb, nu in zip(zs, bulk_temperature(sol, zs), local_nusselt(sol, zs)):
    print(f"z={zi:8.4f}  T_b={tb:.6f}  Nu={nu:.5f}")
print("lam_0^2 / 2 =", sol.lambdas[0] ** 2 / 2)

# %%
# At the inlet the series converges only in the weighted mean, because the
# inlet value 1 jumps to the wall value 0 at the corner.
for n in (5, 20, 50):
    print(f"N={n:3d}  weighted inlet error = {inlet_error(build_solution(n)):.3e}")
