"""Affine monoids presented inside Z^r.

A presentation is normalized to M = C cap L where L is the group
generated by the input (or the saturated span for cone-defined monoids)
and C is the cone spanned by it; all further computations run in a
basis of L, where C is full-dimensional.  The module computes Hilbert
bases by bounded enumeration inside the generator zonotope, decides
whether a generating set actually generates C cap L (with an explicit
witness when it does not), extracts unit subgroups, and measures the
rank of degree subgroups for gradings.

Vectors returned to callers are always in the ambient Z^r coordinates,
which keeps results independent of the internal basis choice for L.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .cone import Cone, facets_of_rays
from .exact_linalg import (
    Vec,
    as_tuple,
    as_tuples,
    int_matrix,
    kernel_basis,
    lattice_member,
    lattices_equal,
    primitive,
    row_lattice_basis,
    snf,
    solve_integer,
    unimodular_inverse,
)

_MAX_ENUMERATION = 2_000_000


class EnumerationLimitError(RuntimeError):
    """A bounded enumeration grew beyond the supported desk scale."""


class NonNormalError(ValueError):
    """A generating set does not generate its saturation C cap L.

    ``witness`` is an element of C cap L that the generators miss;
    normalize first, or work with the cone-defined monoid, to study the
    saturation itself.
    """

    def __init__(self, message: str, witness: Vec):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class _PointedView:
    """The monoid modulo its unit group, in quotient coordinates."""

    rays: tuple[Vec, ...]
    forms: tuple[Vec, ...]
    dim: int
    lift: np.ndarray | None  # (d, dim) section; None when already pointed


def _guard_box(volume: int) -> None:
    if volume > _MAX_ENUMERATION:
        raise EnumerationLimitError(
            "enumeration box has %d points, beyond the supported desk scale" % volume
        )


def _dot(a, b) -> int:
    return sum(int(x) * int(y) for x, y in zip(a, b))


class AffineMonoid:
    """M = C cap L, with the presentation that produced it.

    Use :func:`normalize_presentation` for a monoid given by generators
    (which may fail to be normal) or :func:`monoid_from_cone_rays` for
    the monoid of all lattice points of a cone (normal by definition).
    """

    def __init__(self, ambient_rank, generators, lattice_basis, local_generators,
                 assume_normal):
        self.ambient_rank = int(ambient_rank)
        self.generators = tuple(as_tuple(g) for g in generators)
        self.lattice_basis = lattice_basis  # (d, r) rows, canonical Hermite basis
        self.local_generators = tuple(as_tuple(g) for g in local_generators)
        self._assume_normal = bool(assume_normal)

    # -- coordinates -------------------------------------------------

    @property
    def rank(self) -> int:
        return self.lattice_basis.shape[0]

    def to_ambient(self, local) -> Vec:
        v = np.array([int(x) for x in local], dtype=object) @ self.lattice_basis
        return as_tuple(v)

    def to_local(self, ambient) -> Vec | None:
        """Coordinates in the basis of L, or None when the point is not in L."""
        ambient = as_tuple(ambient)
        if len(ambient) != self.ambient_rank:
            raise ValueError("point does not match the ambient rank")
        return solve_integer(self.lattice_basis.T, ambient)

    # -- cone structure ----------------------------------------------

    @cached_property
    def cone(self) -> Cone:
        return facets_of_rays(self.local_generators, self.rank)

    @property
    def facet_forms(self) -> tuple[Vec, ...]:
        return self.cone.facet_forms

    @cached_property
    def facet_matrix(self) -> np.ndarray:
        return int_matrix(self.cone.facet_forms, width=self.rank)

    def facet_values(self, ambient) -> Vec:
        """Values of the facet forms at a point of L."""
        local = self.to_local(ambient)
        if local is None:
            raise ValueError("point is not in the monoid's group L")
        return self._facet_values_local(local)

    def _facet_values_local(self, local) -> Vec:
        return tuple(_dot(f, local) for f in self.cone.facet_forms)

    @cached_property
    def _unit_rows_local(self) -> np.ndarray:
        return kernel_basis(self.facet_matrix, width=self.rank)

    @property
    def unit_rank(self) -> int:
        return self._unit_rows_local.shape[0]

    @property
    def is_pointed(self) -> bool:
        return self.unit_rank == 0

    def unit_basis(self) -> tuple[Vec, ...]:
        """Canonical ambient basis of the unit group {x in M : -x in M}."""
        if self.unit_rank == 0:
            return ()
        ambient_rows = self._unit_rows_local @ self.lattice_basis
        return as_tuples(row_lattice_basis(ambient_rows))

    # -- membership ---------------------------------------------------

    def contains(self, ambient, interior: bool = False) -> bool:
        """Membership in C cap L (the normalization of the presentation)."""
        local = self.to_local(ambient)
        if local is None:
            return False
        bound = 1 if interior else 0
        return all(v >= bound for v in self._facet_values_local(local))

    def presentation_member(self, ambient) -> bool:
        """Exact membership in the monoid generated by the presentation.

        Decided facet by facet: generators with some positive facet value
        admit only finitely many multiplicities, and the residual must lie
        in the group generated by the unit generators (which is all the
        unit generators can reach).  A monoid declared normal at
        construction is the full saturation, so membership coincides with
        ``contains``.
        """
        if self._assume_normal:
            return self.contains(ambient)
        local = self.to_local(ambient)
        if local is None:
            return False
        target = self._facet_values_local(local)
        if any(v < 0 for v in target):
            return False
        unit_gens = []
        pointed = []
        for g in self.local_generators:
            vals = self._facet_values_local(g)
            if any(vals):
                pointed.append((np.array(g, dtype=object), vals))
            else:
                unit_gens.append(g)
        if unit_gens:
            unit_lattice = row_lattice_basis(int_matrix(unit_gens, width=self.rank))
        else:
            unit_lattice = np.zeros((0, self.rank), dtype=object)

        def in_unit_group(vec) -> bool:
            if all(x == 0 for x in vec):
                return True
            return lattice_member(unit_lattice, as_tuple(vec))

        x = np.array(local, dtype=object)

        def search(idx, remaining, residual) -> bool:
            if all(v == 0 for v in remaining):
                return in_unit_group(residual)
            if idx == len(pointed):
                return False
            g, vals = pointed[idx]
            cap = min(remaining[i] // vals[i] for i in range(len(vals)) if vals[i] > 0)
            for n in range(cap + 1):
                nxt = tuple(r - n * v for r, v in zip(remaining, vals))
                if any(v < 0 for v in nxt):
                    break
                if search(idx + 1, nxt, residual - n * g):
                    return True
            return False

        return search(0, target, x)

    # -- normality ----------------------------------------------------

    @cached_property
    def _normality(self) -> tuple[bool, Vec | None]:
        if self._assume_normal:
            return True, None
        unit_gens = [g for g in self.local_generators
                     if not any(self._facet_values_local(g))]
        n_rows = self._unit_rows_local
        if n_rows.shape[0]:
            gen_rows = int_matrix(unit_gens, width=self.rank)
            if not lattices_equal(gen_rows, n_rows, width=self.rank):
                for row in n_rows:
                    if not lattice_member(gen_rows, as_tuple(row)):
                        return False, self.to_ambient(row)
        for h in self._hilbert_local():
            amb = self.to_ambient(h)
            if not self.presentation_member(amb):
                return False, amb
        return True, None

    @property
    def is_normal(self) -> bool:
        return self._normality[0]

    @property
    def normality_witness(self) -> Vec | None:
        return self._normality[1]

    def require_normal(self) -> None:
        ok, witness = self._normality
        if not ok:
            raise NonNormalError(
                "presentation does not generate its saturation; "
                "witness %s lies in C cap L but not in the monoid" % (witness,),
                witness,
            )

    # -- Hilbert basis ------------------------------------------------

    @cached_property
    def _pointed_view(self) -> _PointedView:
        d = self.rank
        lam = self.facet_matrix
        u_rows = self._unit_rows_local
        u = u_rows.shape[0]
        if u == 0:
            return _PointedView(self.cone.rays, self.cone.facet_forms, d, None)
        cols = u_rows.T
        s, p, _ = snf(cols)
        pinv = unimodular_inverse(p)
        lift = pinv[:, u:]
        forms = as_tuples((lam @ pinv)[:, u:]) if lam.shape[0] else ()
        rays = sorted(set(
            primitive((p @ np.array(r, dtype=object))[u:]) for r in self.cone.rays
        ))
        return _PointedView(tuple(rays), forms, d - u, lift)

    def _lift_local(self, point) -> Vec:
        view = self._pointed_view
        if view.lift is None:
            return as_tuple(point)
        return as_tuple(view.lift @ np.array(point, dtype=object))

    @cached_property
    def _pointed_hilbert(self) -> tuple[Vec, ...]:
        view = self._pointed_view
        return _pointed_hilbert_basis(view.rays, view.forms, view.dim)

    def _hilbert_local(self) -> tuple[Vec, ...]:
        return tuple(self._lift_local(p) for p in self._pointed_hilbert)

    def hilbert_basis(self) -> tuple[Vec, ...]:
        """Irreducible nonunits of M, modulo units, in ambient coordinates.

        With units present, each class gets the deterministic section
        representative induced by the unit quotient.  The presentation
        must be normal, otherwise :class:`NonNormalError` explains the gap.
        """
        self.require_normal()
        return tuple(sorted(self.to_ambient(h) for h in self._hilbert_local()))


def _pointed_hilbert_basis(rays, forms, dim) -> tuple[Vec, ...]:
    """Hilbert basis of a pointed full-dimensional cone in Z^dim.

    Every irreducible lattice point is a subsum of the generator
    zonotope (subtracting any extreme ray with coefficient >= 1 stays in
    the cone), so scanning the zonotope bounding box is exhaustive.
    Points are filtered by increasing total facet value; that functional
    is strictly positive on nonzero cone points, which makes the
    subtraction filter exact.
    """
    if dim == 0 or not rays:
        return ()
    lo = [sum(min(0, r[i]) for r in rays) for i in range(dim)]
    hi = [sum(max(0, r[i]) for r in rays) for i in range(dim)]
    volume = 1
    for a, b in zip(lo, hi):
        volume *= b - a + 1
    _guard_box(volume)
    candidates = []
    for pt in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if not any(pt):
            continue
        vals = tuple(_dot(f, pt) for f in forms)
        if all(v >= 0 for v in vals):
            candidates.append((sum(vals), pt, vals))
    candidates.sort(key=lambda t: (t[0], t[1]))
    basis: list[Vec] = []
    basis_vals: list[Vec] = []
    for _, pt, vals in candidates:
        reducible = False
        for bvals in basis_vals:
            if all(v >= w for v, w in zip(vals, bvals)):
                reducible = True
                break
        if not reducible:
            basis.append(pt)
            basis_vals.append(vals)
    return tuple(sorted(basis))


def normalize_presentation(generators) -> AffineMonoid:
    """Monoid generated by the given ambient vectors.

    L is the group they generate; the generators are rewritten in the
    canonical (Hermite) basis of L, where the cone they span is
    full-dimensional.  The result represents C cap L; whether the input
    actually generates all of it is reported by ``is_normal``.
    """
    gens = [as_tuple(g) for g in generators]
    if not gens:
        raise ValueError("generator list is empty")
    r = len(gens[0])
    if any(len(g) != r for g in gens):
        raise ValueError("generators have inconsistent lengths")
    if all(not any(g) for g in gens):
        raise ValueError("generators span the zero lattice")
    basis = row_lattice_basis(int_matrix(gens, width=r))
    local = []
    for g in gens:
        coords = solve_integer(basis.T, g)
        local.append(coords)
    local = [g for g in local if any(g)]
    return AffineMonoid(r, gens, basis, local, assume_normal=False)


def monoid_from_cone_rays(rays) -> AffineMonoid:
    """Monoid of all lattice points of the cone spanned by ``rays``.

    L is the saturated lattice span(rays) cap Z^r, so the result is
    normal by definition whatever the rays generate.
    """
    rs = [as_tuple(v) for v in rays]
    if not rs:
        raise ValueError("ray list is empty")
    r = len(rs[0])
    if any(len(v) != r for v in rs):
        raise ValueError("rays have inconsistent lengths")
    rs = [v for v in rs if any(v)]
    if not rs:
        raise ValueError("rays span the zero lattice")
    ray_mat = int_matrix(rs, width=r)
    orth = kernel_basis(ray_mat, width=r)
    basis = kernel_basis(orth, width=r)
    local = [solve_integer(basis.T, v) for v in rs]
    return AffineMonoid(r, rs, basis, local, assume_normal=True)


def is_normal(generators) -> tuple[bool, Vec | None]:
    """Whether the generators generate C cap L; if not, a witness point.

    The witness lies in C cap L but outside the generated monoid: either
    a missing unit-lattice basis vector or a missing Hilbert basis
    element of the saturation.
    """
    m = normalize_presentation(generators)
    return m.is_normal, m.normality_witness


def hilbert_basis(m: AffineMonoid) -> tuple[Vec, ...]:
    return m.hilbert_basis()


def unit_group(m: AffineMonoid) -> tuple[Vec, ...]:
    return m.unit_basis()


@dataclass(frozen=True)
class GradingAnalysis:
    """Rank data for the subgroup of Z^r generated by a set of degrees.

    ``laurent_rank`` is only set when the caller asserts that every
    nonzero homogeneous element is a unit; the graded ring is then a
    Laurent polynomial ring over a field on that many variables.
    """

    sigma: int
    degree_basis: tuple[Vec, ...]
    laurent_rank: int | None


def degree_group_analysis(degrees, all_units: bool = False, rank_hint: int | None = None) -> GradingAnalysis:
    """Rank and canonical basis of the subgroup generated by ``degrees``."""
    ds = [as_tuple(d) for d in degrees]
    if ds:
        width = len(ds[0])
        if any(len(d) != width for d in ds):
            raise ValueError("degrees have inconsistent lengths")
    elif rank_hint is not None:
        width = rank_hint
    else:
        width = 0
    basis = row_lattice_basis(int_matrix(ds, width=width)) if ds else np.zeros((0, width), dtype=object)
    sigma = basis.shape[0]
    return GradingAnalysis(sigma, as_tuples(basis), sigma if all_units else None)
