"""
Witness and product decomposition
=================================

Two certificates sit on either side of the boundary state.  A product
decomposition shows that it is separable.  A witness that is nonnegative on
products but vanishes on the state shows that it is not interior.
"""

from sepball.cone import separable_decomposition
from sepball.quantum import (
    build_state,
    min_eigenvalue,
    min_product_expectation,
    reconstruct_from_decomposition,
    trace_product,
    witness_operator,
)

m = 3
rho = build_state(m)
w = witness_operator(m)

print("tr(W rho) =", trace_product(w, rho))
print("min over sampled products:", min_product_expectation(w, m, 5000, seed=0))
print("min eigenvalue of W:", min_eigenvalue(w))

# Equal weights, one term per support component and even sign pattern.
dec = separable_decomposition(m)
print(len(dec), "terms, weights sum to", dec.total_weight())
for term in dec.terms[:4]:
    print(term.weight, term.factors)

# Each term is a Kronecker product of pure qubit states.  Summing them gives
# back the state with no rounding.
print(reconstruct_from_decomposition(dec) == rho)
