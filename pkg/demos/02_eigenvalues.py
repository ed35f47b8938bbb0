"""
Graetz eigenvalues
==================

The wall condition R(1) = 0 turns into a transcendental equation in lam.
A uniform sign-change scan brackets each root, and bisection refines it.
"""

import numpy as np

from graetz import bracket_scan, compute_spectrum, eigencondition, eigenfunction_eval
from graetz.oracle import shoot_eigenvalues

# %%
# The scaled wall value g(lam) = exp(-lam/2) M(1/2 - lam/4, 1, lam) stays of
# order one, so a plain scan sees every sign change.
grid = np.linspace(0, 20, 9)
for lam, g in zip(grid, eigencondition(grid)):
    print(f"g({lam:5.2f}) = {g:+.6f}")
print("brackets below 12:", bracket_scan(12.0, 0.5))

# %%
# First ten modes. The gaps approach 4.
spec = compute_spectrum(10)
for mode in spec.modes:
    print(f"n={mode.index:2d}  lam={mode.lam:.12f}  lam^2={mode.lam**2:12.6f}  R'(1)={mode.wall_slope:+.9f}")
print("gaps:", np.round(np.diff(spec.lambdas), 5))

# %%
# Mode n crosses zero n times inside the pipe.
r = np.linspace(0, 1, 2048)[1:-1]
print("interior zeros:", [int(np.count_nonzero(np.diff(np.sign(eigenfunction_eval(m, r)))))
                          for m in spec.modes])

# %%
# An RK4 shooting integration of the radial equation, which never touches
# the hypergeometric series, lands on the same numbers.
shot = np.array(shoot_eigenvalues(5))
print("max |spectral - shooting| =", np.max(np.abs(spec.lambdas[:5] - shot)))
