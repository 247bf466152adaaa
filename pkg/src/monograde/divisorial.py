"""Divisorial ideals of a normal affine monoid ring.

A divisorial ideal is described by one integer height per facet of the
monoid's cone: it is the set of lattice points of L on which the i-th
facet form is at least ``heights[i]``.  Heights are indexed by the
canonical order of ``monoid.facet_forms``.  The module enumerates
members in a box, computes minimal module generators by exact bounded
enumeration, builds the canonical module (all heights equal to one, the
interior points), the divisor class group as an abelian quotient, shift
witnesses between ideal classes, and the Gorenstein decision with a
certificate.

Every operation requires the monoid presentation to be normal, since
the height description only sees the saturation C cap L.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

import numpy as np

from .exact_linalg import (
    AbelianQuotient,
    Vec,
    as_tuple,
    cokernel,
    int_matrix,
    rank,
    solve_integer,
    solve_rational,
)
from .monoid import AffineMonoid, _dot, _guard_box


@dataclass(frozen=True)
class DivisorialIdeal:
    """Height description of a divisorial ideal over a normal monoid."""

    monoid: AffineMonoid
    heights: Vec

    def __post_init__(self):
        object.__setattr__(self, "heights", as_tuple(self.heights))
        if len(self.heights) != len(self.monoid.facet_forms):
            raise ValueError("need one height per facet form")

    def contains(self, ambient) -> bool:
        local = self.monoid.to_local(ambient)
        if local is None:
            return False
        vals = self.monoid._facet_values_local(local)
        return all(v >= h for v, h in zip(vals, self.heights))


def divisorial_ideal(m: AffineMonoid, heights) -> DivisorialIdeal:
    m.require_normal()
    return DivisorialIdeal(m, as_tuple(heights))


def members(ideal: DivisorialIdeal, box: int) -> tuple[Vec, ...]:
    """All members with ambient coordinates in [-box, box], sorted."""
    if box < 0:
        raise ValueError("box bound must be nonnegative")
    m = ideal.monoid
    r = m.ambient_rank
    _guard_box((2 * box + 1) ** r)
    out = []
    for pt in itertools.product(range(-box, box + 1), repeat=r):
        if ideal.contains(pt):
            out.append(pt)
    return tuple(sorted(out))


def _region_vertices(forms, heights, dim) -> list[tuple[Fraction, ...]]:
    """Rational vertices of {y : forms(y) >= heights} (plus possibly some
    non-vertex tight points, which only widen the bounding box)."""
    s = len(forms)
    verts = []
    for subset in itertools.combinations(range(s), dim):
        sub = int_matrix([forms[i] for i in subset], width=dim)
        if rank(sub) < dim:
            continue
        rhs = [heights[i] for i in subset]
        sol = solve_rational(sub, rhs)
        if sol is None:
            continue
        ok = True
        for i in range(s):
            val = sum(Fraction(int(f)) * x for f, x in zip(forms[i], sol))
            if val < heights[i]:
                ok = False
                break
        if ok:
            verts.append(sol)
    return verts


def minimal_generators(ideal: DivisorialIdeal) -> tuple[Vec, ...]:
    """Minimal generators of the ideal as a module over the monoid.

    Every member y splits as q + c with q in the convex hull of the
    region's vertices and c in the recession cone; if c uses an extreme
    ray with coefficient at least 1, subtracting that ray stays in the
    region, so minimal members live in the vertex bounding box plus the
    ray zonotope.  Minimality itself is exact: y is minimal iff no
    Hilbert basis element can be subtracted without leaving the region.
    """
    m = ideal.monoid
    m.require_normal()
    view = m._pointed_view
    k = view.dim
    if k == 0:
        return (m.to_ambient((0,) * m.rank),)
    forms = view.forms
    h = ideal.heights
    verts = _region_vertices(forms, h, k)
    if not verts:
        raise RuntimeError("height region unexpectedly has no vertices")
    lo, hi = [], []
    for i in range(k):
        vmin = min(v[i] for v in verts) + sum(min(0, r[i]) for r in view.rays)
        vmax = max(v[i] for v in verts) + sum(max(0, r[i]) for r in view.rays)
        lo.append(floor(vmin))
        hi.append(ceil(vmax))
    volume = 1
    for a, b in zip(lo, hi):
        volume *= b - a + 1
    _guard_box(volume)
    hb_vals = [tuple(_dot(f, b) for f in forms) for b in m._pointed_hilbert]
    minimal = []
    for pt in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        vals = tuple(_dot(f, pt) for f in forms)
        if any(v < hh for v, hh in zip(vals, h)):
            continue
        reducible = False
        for bvals in hb_vals:
            if all(v - w >= hh for v, w, hh in zip(vals, bvals, h)):
                reducible = True
                break
        if not reducible:
            minimal.append(pt)
    return tuple(sorted(m.to_ambient(m._lift_local(pt)) for pt in minimal))


@dataclass(frozen=True)
class CanonicalModule:
    """The interior-point divisorial ideal and its minimal generators."""

    ideal: DivisorialIdeal
    generators: tuple[Vec, ...]


def canonical_module(m: AffineMonoid) -> CanonicalModule:
    """Module of interior lattice points: every facet height equals one.

    On lattice points, being at least one on every facet form is the
    same as being strictly inside the cone.
    """
    m.require_normal()
    ideal = DivisorialIdeal(m, (1,) * len(m.facet_forms))
    return CanonicalModule(ideal, minimal_generators(ideal))


@dataclass(frozen=True)
class DivisorClassGroup:
    """Height vectors modulo the facet values of L, as an abelian quotient."""

    quotient: AbelianQuotient

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.quotient.invariant_factors

    def class_of(self, heights) -> Vec:
        return self.quotient.project(as_tuple(heights))

    def is_principal(self, heights) -> bool:
        return all(c == 0 for c in self.class_of(heights))


def class_group(m: AffineMonoid) -> DivisorClassGroup:
    m.require_normal()
    return DivisorClassGroup(cokernel(m.facet_matrix, width=m.rank))


def same_class(a: DivisorialIdeal, b: DivisorialIdeal) -> Vec | None:
    """Shift witness g in L with b.heights = a.heights + facet values of g.

    Translation by g then maps a onto b, so the two ideals are
    isomorphic as modules exactly when a witness exists; returns None
    when the classes differ.
    """
    if a.monoid is not b.monoid and (
        a.monoid.facet_forms != b.monoid.facet_forms
        or not np.array_equal(a.monoid.lattice_basis, b.monoid.lattice_basis)
    ):
        raise ValueError("ideals live over different monoids")
    delta = tuple(x - y for x, y in zip(b.heights, a.heights))
    g = solve_integer(a.monoid.facet_matrix, delta)
    if g is None:
        return None
    return a.monoid.to_ambient(g)


def is_gorenstein(m: AffineMonoid) -> tuple[bool, Vec | None]:
    """Whether the canonical module is principal, with a certificate.

    Three equivalent tests are run and must agree: the canonical module
    has a single minimal generator, its height class vanishes in the
    divisor class group, and the all-ones height vector has an exact
    integer preimage under the facet forms.  The certificate is the
    generator, whose facet values are all exactly one.
    """
    m.require_normal()
    s = len(m.facet_forms)
    ones = (1,) * s
    can = canonical_module(m)
    principal = len(can.generators) == 1
    class_zero = class_group(m).is_principal(ones)
    g = solve_integer(m.facet_matrix, ones)
    if not (principal == class_zero == (g is not None)):
        raise RuntimeError("Gorenstein criteria disagree; this is a bug")
    if not principal:
        return False, None
    cert = can.generators[0]
    if m.facet_values(cert) != ones:
        raise RuntimeError("canonical generator does not sit at height one; this is a bug")
    return True, cert
