"""
Injective norm by alternating maximization
==========================================

The multilinear form of the order-3 tensor M reaches 1 on unit vectors and
no further.  Alternating maximization over one argument at a time finds the
maximum from random starts.
"""

import numpy as np

from sepball.tensors import dual_face_point, frobenius_norm_sq, injective_norm, m3_tensor, t4_tensor

m3 = m3_tensor()
res = injective_norm(m3, restarts=16, seed=0)
print("M:", res.value, "converged:", res.converged)
print([np.round(v, 6) for v in res.maximizers])

# A two-parameter family of maximizers plus a free angle.
rng = np.random.default_rng(1)
for xi1, xi2, phi in rng.uniform(-3, 3, size=(5, 3)):
    print(m3(*dual_face_point(xi1, xi2, phi)))

# Scaling by the squared norm moves the tensor to the boundary point,
# whose injective norm is the reciprocal of that squared norm.
t4 = t4_tensor()
eta = frobenius_norm_sq(t4)
res = injective_norm(t4 / eta, restarts=32, seed=1)
print(eta, res.value, res.value * eta)

# Restarts are independent, so threads do not change the answer.
a = injective_norm(t4, restarts=8, seed=2).value
b = injective_norm(t4, restarts=8, seed=2, threads=4).value
print(a == b)
