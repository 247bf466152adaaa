"""Normal affine monoids: normalization checks and Hilbert bases.

A finite generating set spans a cone and a lattice; the monoid is
normal when it already contains every lattice point of the cone.  The
numerical semigroup generated by 2 and 3 is the classic failure.
"""

from monograde.monoid import monoid_from_cone_rays, normalize_presentation

m23 = normalize_presentation([(2,), (3,)])
print("<2,3> is normal:", m23.is_normal)
print("missing lattice point:", m23.normality_witness)

# the saturation fills the gap and is generated by 1 alone
sat = monoid_from_cone_rays([(2,), (3,)])
print("saturation Hilbert basis:", sat.hilbert_basis())

# two presentations of the degree-2 Veronese monoid agree
ver = normalize_presentation([(2, 0), (1, 1), (0, 2)])
print("Veronese-2 normal:", ver.is_normal)
print("Veronese-2 Hilbert basis:", ver.hilbert_basis())

# a presentation can be normal inside a strict sublattice: the even
# checkerboard misses (1, 0) in the ambient lattice but has no gaps
# inside the lattice it generates
check = normalize_presentation([(1, 1), (1, -1)])
print("checkerboard normal:", check.is_normal)
print("checkerboard contains (1, 0):", check.contains((1, 0)))
print("checkerboard lattice basis:\n", check.lattice_basis)

# the degree-3 cone needs interior generators beyond its two rays
rnc3 = monoid_from_cone_rays([(1, 0), (1, 3)])
print("degree-3 cone Hilbert basis:", rnc3.hilbert_basis())

# units appear once the cone stops being pointed
half = monoid_from_cone_rays([(1, 0), (-1, 0), (0, 1)])
print("halfplane unit basis:", half.unit_basis())
