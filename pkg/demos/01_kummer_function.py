"""
Kummer's function and why it needs care
=======================================

The radial Graetz eigenfunctions are built from M(a, 1, x) with a negative
first parameter and a large positive argument. The plain power series then
adds terms that are far larger than the result.
"""

import math

import numpy as np

from graetz import kummer_m, kummer_m_dx, pochhammer

# %%
# The series is a sum of rising factorials, so check that building block first.
print("0.5^(3) =", pochhammer(0.5, 3))
print("1^(5)   =", pochhammer(1.0, 5))

# %%
# M(1, 1, x) is exp(x). Negative arguments go through the Kummer
# transformation M(a, b, x) = exp(x) M(b - a, b, -x), so they stay accurate.
for x in (-20.0, -1.5, 0.0, 3.0, 20.0):
    res = kummer_m(1.0, 1.0, x)
    print(f"x={x:6.1f}  M={res.value:.16e}  exp(x)={math.exp(x):.16e}  terms={res.terms_used}")

# %%
# The derivative uses dM/dx = (a/b) M(a+1, b+1, x).
print("dM/dx(1,1,0.7) =", kummer_m_dx(1.0, 1.0, 0.7), " exp(0.7) =", math.exp(0.7))

# %%
# Cancellation: for lam ~ 200 the largest series term is about 1e53 while the
# sum is about 1e41. A plain double sum keeps only about four correct digits
# there, so the kernel re-sums such cases in double-double arithmetic.
lam = 198.6
a = 0.5 - lam / 4
t, biggest = 1.0, 1.0
for n in range(400):
    t *= (a + n) * lam / ((1 + n) * (n + 1))
    biggest = max(biggest, abs(t))
res = kummer_m(a, 1.0, lam)
print(f"largest term {biggest:.3e}, M = {res.value:.15e} ({res.terms_used} terms)")
print("exp(-lam/2) M =", math.exp(-lam / 2) * res.value)

# %%
# Everything broadcasts over arrays.
x = np.linspace(0, 10, 6)
print(kummer_m(-1.5, 1.0, x).value)
