"""
A separable state on the boundary of the ball
=============================================

The design tensor, restricted to the three non-identity letters, is lifted
into qubit space through the Pauli basis.  At four qubits the result is a
16 x 16 integer matrix over 168.
"""

import math

from sepball.bounds import upper_bound
from sepball.quantum import build_state, frobenius_distance, maximally_mixed, min_eigenvalue
from sepball.tensors import closed_form_norm_sq, restricted_tensor

t = restricted_tensor(4, "tilde")
print("nonzero components:", t.nonzero_count(), "of", 3 ** 4)

rho = build_state(4)
red = rho.reduced()
print("denominator:", red.denominator)
print(red.re)

# Exact trace, a positive spectrum, and the distance to I/16.
print("trace:", rho.trace())
print("min eigenvalue: %.3e" % min_eigenvalue(rho))
d = frobenius_distance(rho, maximally_mixed(4))
print(d, math.sqrt(1 / 336), upper_bound(4))

# The same distance law for other qubit counts.
for m in range(1, 7):
    d = frobenius_distance(build_state(m), maximally_mixed(m))
    print(m, closed_form_norm_sq(m), d, d * math.sqrt(closed_form_norm_sq(m)) * 2 ** (m / 2))
