"""Divisorial ideals on a normal monoid ring: canonical module, class
group, and the Gorenstein question.

Every facet of the cone carries a height; a height vector cuts out a
divisorial ideal of lattice points.  The all-ones vector cuts out the
interior points, which form the canonical module, and the monoid ring
is Gorenstein exactly when that module is principal.
"""

from monograde.divisorial import (
    canonical_module,
    class_group,
    divisorial_ideal,
    is_gorenstein,
    members,
    minimal_generators,
    same_class,
)
from monograde.monoid import monoid_from_cone_rays

for name, rays in [
    ("quadrant", [(1, 0), (0, 1)]),
    ("degree-2 cone", [(1, 0), (1, 2)]),
    ("degree-3 cone", [(1, 0), (1, 3)]),
]:
    m = monoid_from_cone_rays(rays)
    can = canonical_module(m)
    cls = class_group(m)
    gor, cert = is_gorenstein(m)
    print(name)
    print("  facet forms        ", m.facet_forms)
    print("  canonical generators", can.generators)
    print("  class group factors ", cls.invariant_factors)
    print("  gorenstein          ", gor, "certificate", cert)

# a divisorial ideal from an arbitrary height vector, listed in a box
m = monoid_from_cone_rays([(1, 0), (1, 3)])
ideal = divisorial_ideal(m, (2, 1))
print("heights (2, 1) members in a 3-box:", members(ideal, 3))
print("heights (2, 1) minimal generators:", minimal_generators(ideal))

# two height vectors land in the same class when an ambient shift maps
# one ideal onto the other; the witness is that shift
a = divisorial_ideal(m, (0, 0))
b = divisorial_ideal(m, (3, 0))
print("shift from (0,0) to (3,0) heights:", same_class(a, b))
print("shift from (0,0) to (1,0) heights:", same_class(a, divisorial_ideal(m, (1, 0))))
