"""
Rate-1 orthogonal designs
=========================

A rate-1 real orthogonal design of order n is a list of n signed permutation
matrices whose span is closed under U^T U = |v|^2 I.  Only n = 1, 2, 4, 8 work.
"""

import numpy as np

from sepball.designs import evaluate, make_design, verify_design

# The order-4 design.  The last matrix is the identity.
d = make_design(4)
for k, u in enumerate(d.matrices, start=1):
    print(f"U_{k} =\n{u}\n")

# Every structural check holds.
for check in verify_design(d):
    print(f"{check.name:20s} {check.passed}")

# Any vector gives a scaled orthogonal matrix.
v = np.array([0.3, -1.2, 0.5, 2.0])
u = evaluate(d, v)
print(np.allclose(u.T @ u, (v @ v) * np.eye(4)))

# Order 8 comes from octonion left multiplication.
d8 = make_design(8)
print(sum(np.count_nonzero(m) for m in d8.matrices), "nonzero entries in total")

# Order 3 has no such design.
try:
    make_design(3)
except ValueError as exc:
    print("order 3:", exc)
