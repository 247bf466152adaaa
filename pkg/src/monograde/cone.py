"""Rational polyhedral cones with exact ray and facet duality.

Both conversion directions run the double description method over exact
integers.  Cones may be non-pointed (the lineality space is reported
separately) and lower-dimensional.  For a full-dimensional cone the
facet forms are the unique primitive supports of the facets; otherwise
they describe the cone modulo the orthogonal complement of its span and
are made deterministic by the lattice normalizations used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact_linalg import (
    Vec,
    as_tuple,
    as_tuples,
    int_matrix,
    kernel_basis,
    primitive,
    rank,
    snf,
    solve_rational,
    unimodular_inverse,
)


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone in Z^ambient_rank.

    ``rays`` are the primitive extreme rays modulo lineality, sorted;
    ``facet_forms`` are primitive supporting functionals, one per facet,
    sorted; ``lineality`` is a canonical basis of the largest linear
    subspace contained in the cone.
    """

    rays: tuple[Vec, ...]
    facet_forms: tuple[Vec, ...]
    lineality: tuple[Vec, ...]
    ambient_rank: int
    dim: int

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_rank

    def contains(self, x, interior: bool = False) -> bool:
        return membership(self, x, "interior" if interior else "closure")


def _dot(a, b) -> int:
    return sum(int(x) * int(y) for x, y in zip(a, b))


def _scale_to_primitive_int(sol: tuple[Fraction, ...]) -> Vec:
    denom = 1
    for f in sol:
        denom = denom * f.denominator // _gcd(denom, f.denominator)
    return primitive(tuple(int(f * denom) for f in sol))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _adjacent(processed: np.ndarray, r1: Vec, r2: Vec, d: int) -> bool:
    # algebraic adjacency test: the constraints tight at both rays must
    # cut a face of dimension exactly 2
    tight = [i for i in range(processed.shape[0])
             if _dot(processed[i], r1) == 0 and _dot(processed[i], r2) == 0]
    if d == 2:
        return True
    if not tight:
        return False
    return rank(processed[tight]) == d - 2


def _pointed_extreme_rays(a: np.ndarray) -> list[Vec]:
    """Extreme rays of {x : A x >= 0} for A of full column rank (pointed cone).

    Incremental double description: start from a simplicial subcone cut
    out by d independent constraints, then insert the rest one by one,
    keeping only adjacent positive/negative ray pairs.
    """
    m, d = a.shape
    if d == 0:
        return []
    base: list[int] = []
    for i in range(m):
        if rank(a[base + [i]]) > len(base):
            base.append(i)
        if len(base) == d:
            break
    if len(base) < d:
        raise ValueError("constraint matrix does not have full column rank")
    b = a[base]
    rays: list[Vec] = []
    for j in range(d):
        rhs = [Fraction(1 if i == j else 0) for i in range(d)]
        sol = solve_rational(b, rhs)
        rays.append(_scale_to_primitive_int(sol))
    rays.sort()
    processed = list(base)
    for i in range(m):
        if i in processed:
            continue
        row = a[i]
        vals = [_dot(row, r) for r in rays]
        pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
        zer = [r for r, v in zip(rays, vals) if v == 0]
        neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
        if neg:
            pmat = a[processed]
            fresh: list[Vec] = []
            for rp, vp in pos:
                for rn, vn in neg:
                    if _adjacent(pmat, rp, rn, d):
                        w = tuple(vp * y - vn * x for x, y in zip(rp, rn))
                        fresh.append(primitive(w))
            rays = sorted(set([r for r, _ in pos] + zer + fresh))
        processed.append(i)
    return rays


def _quotient_transform(lin_rows: np.ndarray, d: int) -> tuple[np.ndarray, np.ndarray, int]:
    """Unimodular P sending the given saturated sublattice onto the first
    u coordinates; returns (P, P^-1, u)."""
    u = lin_rows.shape[0]
    if u == 0:
        return None, None, 0
    cols = lin_rows.T if lin_rows.size else np.zeros((d, 0), dtype=object)
    s, p, _ = snf(cols)
    for i in range(u):
        if s[i, i] != 1:
            raise ValueError("sublattice is not saturated")
    return p, unimodular_inverse(p), u


def _dd(a: np.ndarray) -> tuple[list[Vec], np.ndarray]:
    """Extreme rays (modulo lineality) and lineality basis of {x : A x >= 0}."""
    m, d = a.shape
    lin = kernel_basis(a, width=d)
    u = lin.shape[0]
    if u == 0:
        return _pointed_extreme_rays(a), lin
    if u == d:
        return [], lin
    p, pinv, _ = _quotient_transform(lin, d)
    aq = (a @ pinv)[:, u:]
    lift = pinv[:, u:]
    rays_q = _pointed_extreme_rays(aq)
    rays = sorted(primitive(lift @ np.array(y, dtype=object)) for y in rays_q)
    return rays, lin


def _clean_vectors(vectors, width: int | None) -> tuple[list[Vec], int]:
    vs = [as_tuple(v) for v in vectors]
    if vs:
        w = len(vs[0])
        if any(len(v) != w for v in vs):
            raise ValueError("vectors have inconsistent lengths")
        if width is not None and w != width:
            raise ValueError("vectors do not match the stated ambient rank")
        width = w
    elif width is None:
        raise ValueError("ambient rank is required when no vectors are given")
    out: list[Vec] = []
    for v in vs:
        if any(x != 0 for x in v):
            out.append(primitive(v))
    return sorted(set(out)), width


def _face_dim(tight_forms: list[Vec], span_cuts: np.ndarray, d: int) -> int:
    stack = list(tight_forms) + [as_tuple(r) for r in span_cuts]
    if not stack:
        return d
    return d - rank(int_matrix(stack, width=d))


def facets_of_rays(rays, ambient_rank: int | None = None) -> Cone:
    """Cone spanned by the given vectors, converted to facet description.

    The dual cone of the input is computed by double description; its
    extreme rays are the facet forms.  Input vectors that are not
    extreme (or are duplicates or zero) are filtered from ``rays``.
    """
    gens, d = _clean_vectors(rays, ambient_rank)
    r_mat = int_matrix(gens, width=d)
    forms, dual_lin = _dd(r_mat)
    span_cuts = dual_lin  # functionals vanishing on span(C)
    cut_stack = [list(f) for f in forms] + [list(r) for r in span_cuts]
    lin = kernel_basis(int_matrix(cut_stack, width=d), width=d)
    dim = rank(r_mat) if gens else 0
    lin_dim = lin.shape[0]
    extreme: list[Vec] = []
    for v in gens:
        tight = [f for f in forms if _dot(f, v) == 0]
        if _face_dim(tight, span_cuts, d) == lin_dim + 1:
            extreme.append(v)
    return Cone(
        rays=tuple(sorted(set(extreme))),
        facet_forms=tuple(forms),
        lineality=as_tuples(lin),
        ambient_rank=d,
        dim=dim,
    )


def rays_of_facets(forms, ambient_rank: int) -> Cone:
    """Cone {x : f(x) >= 0 for all given forms}, converted to rays.

    Redundant input forms (those not supporting a facet) are dropped
    from ``facet_forms``.
    """
    fs, d = _clean_vectors(forms, ambient_rank)
    a = int_matrix(fs, width=d)
    rays, lin = _dd(a)
    dim_stack = [list(r) for r in rays] + [list(r) for r in lin]
    dim = rank(int_matrix(dim_stack, width=d)) if dim_stack else 0
    kept: list[Vec] = []
    for f in fs:
        tight = [r for r in rays if _dot(f, r) == 0]
        face_stack = [list(r) for r in tight] + [list(r) for r in lin]
        face_dim = rank(int_matrix(face_stack, width=d)) if face_stack else 0
        if face_dim == dim - 1:
            kept.append(f)
    return Cone(
        rays=tuple(rays),
        facet_forms=tuple(sorted(set(kept))),
        lineality=as_tuples(lin),
        ambient_rank=d,
        dim=dim,
    )


def membership(cone: Cone, x, mode: str = "closure") -> bool:
    """Decide whether x lies in the cone (or its relative interior).

    ``closure`` requires every facet form to be nonnegative, ``interior``
    requires every form to be at least 1, which on lattice points is
    equivalent to strict positivity.  The facet forms describe the cone
    only inside its linear span, so points off the span are rejected
    first.
    """
    x = as_tuple(x)
    if len(x) != cone.ambient_rank:
        raise ValueError("point does not match the ambient rank")
    if mode not in ("closure", "interior"):
        raise ValueError("mode must be 'closure' or 'interior'")
    if cone.dim < cone.ambient_rank:
        span = [list(r) for r in cone.rays] + [list(r) for r in cone.lineality]
        if not span:
            return not any(x)
        if rank(int_matrix(span + [list(x)])) != rank(int_matrix(span)):
            return False
    bound = 0 if mode == "closure" else 1
    return all(_dot(f, x) >= bound for f in cone.facet_forms)
