"""
Radius bounds
=============

Lower and upper bounds on the radius of the largest separable ball around
the maximally mixed state, and their ratio.
"""

from sepball.bounds import RATIO_LIMIT, ball_radius, ball_radius_lower, bounds_report

print(f"{'m':>3} {'lower':>12} {'upper':>12} {'ratio':>9}")
for m in range(1, 13):
    r = bounds_report(m)
    print(f"{m:>3} {r.r_lower:12.6e} {r.r_upper:12.6e} {r.ratio:9.6f}")
print("limit", RATIO_LIMIT)

# Inscribed radii of tensor powers of Euclidean balls.
for n, m in [(4, 3), (8, 2), (3, 3), (3, 4)]:
    print(n, m, ball_radius(n, m))

# For n = 3 and m >= 5 only a lower bound is available.
print(ball_radius_lower(3, 5))
