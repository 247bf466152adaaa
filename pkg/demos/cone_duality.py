"""Walk through the two descriptions of a rational cone.

A cone can be handed over by extreme rays or by facet inequalities;
each determines the other, and the round trip is exact on integers.
"""

from monograde.cone import facets_of_rays, membership, rays_of_facets

# degree-3 rational normal cone: the wedge between (1,0) and (1,3)
cone = facets_of_rays([(1, 0), (1, 3)])
print("rays           ", cone.rays)
print("facet forms    ", cone.facet_forms)
print("dim / pointed  ", cone.dim, cone.is_pointed)

# the dual direction recovers the same pair of descriptions
back = rays_of_facets(cone.facet_forms, 2)
print("round trip rays", back.rays)
print("round trip forms match:", back.facet_forms == cone.facet_forms)

# membership is a handful of integer dot products
for point in [(1, 1), (2, 5), (1, 4), (-1, 0)]:
    print("contains", point, "->", cone.contains(point))

# interior points satisfy every facet form strictly
print("strictly inside (1, 1):", membership(cone, (1, 1), mode="interior"))
print("strictly inside (1, 0):", membership(cone, (1, 0), mode="interior"))

# redundant generators are absorbed; only extreme rays survive
fat = facets_of_rays([(2, 0), (1, 1), (0, 3), (0, 1), (4, 0)])
print("extreme rays of the fat description:", fat.rays)
