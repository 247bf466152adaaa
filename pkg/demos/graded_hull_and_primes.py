"""Graded hulls in a multigraded polynomial ring, and what they reveal
about prime ideals.

Fix a degree vector per variable.  The hull of an ideal is the largest
graded ideal inside it: keep exactly the polynomials all of whose
homogeneous components already belong.  For a prime ideal the hull is
again prime, and its height drop is bounded by the rank of the grading.
"""

from monograde.groebner import (
    IdealPresentation,
    default_variables,
    format_polynomial,
    grevlex,
    parse_polynomial,
)
from monograde.multigraded import GradedRingSpec, analyze_prime, graded_hull

names = default_variables(2)
order = grevlex(2)
spec = GradedRingSpec(((1, 0), (0, 1)))  # each variable keeps its own degree


def ideal_of(*texts):
    return IdealPresentation(tuple(parse_polynomial(t, names) for t in texts), order)


def show(polys):
    return [format_polynomial(g, names, order) for g in polys]


# mixing a graded generator with a nongraded one
ideal = ideal_of("x1 + x2", "x2^2")
hull = graded_hull(ideal, spec)
print("ideal     ", show(ideal.generators))
print("hull      ", show(hull.generators))

# a single nongraded line has no graded multiples at all
print("hull of (x1 + x2):", show(graded_hull(ideal_of("x1 + x2"), spec).generators))

# the kernel of evaluation at (-1, 0) is prime but not graded; its hull
# is the graded prime underneath, one dimension up
prime = ideal_of("x1 + 1", "x2")
report = analyze_prime(prime, spec)
print("prime     ", show(prime.generators))
print("core      ", show(report.p_star.generators))
print("graded    ", report.graded)
print("heights   ", report.dim_p, "->", report.dim_p_star, "drop", report.tau)
print("degree rank", report.sigma)

# under the total-degree grading the same point keeps a bigger core:
# the degree-1 form through the point survives
total = GradedRingSpec(((1,), (1,)))
point = ideal_of("x1 - 1", "x2 - 2")
report = analyze_prime(point, total)
print("total-degree core of a point:", show(report.p_star.generators))
