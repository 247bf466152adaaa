"""Independent brute-force oracles for the test suite.

Everything here recomputes results by a different route than the
library: Fourier-Motzkin elimination instead of double description,
determinantal divisors instead of Smith elimination, coset enumeration
instead of projections, exhaustive box scans instead of bounded clever
ones, and rational row reduction for dimension counts.  Nothing in this
module imports the package beyond plain data types.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from math import gcd


# -- small exact helpers ----------------------------------------------


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def make_primitive(v):
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector")
    return tuple(int(x) // g for x in v)


def dot(a, b):
    return sum(int(x) * int(y) for x, y in zip(a, b))


def frac_rref(rows):
    """Row reduce a list of Fraction lists; returns (rank, pivots, rows)."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return 0, [], []
    ncols = len(rows[0])
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots, rows


def frac_solve_unique(matrix, rhs):
    """Solve an n x n rational system with a unique solution, else None."""
    n = len(matrix)
    aug = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    rank, pivots, rows = frac_rref(aug)
    if any(p == n for p in pivots):
        return None  # inconsistent
    if rank < n:
        return None  # not unique
    sol = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        sol[p] = rows[i][n]
    return tuple(sol)


def det_int(mat):
    """Integer determinant by Laplace expansion (tiny matrices only)."""
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    total = 0
    rest = mat[1:]
    for j in range(n):
        if mat[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rest]
        sign = 1 if j % 2 == 0 else -1
        total += sign * mat[0][j] * det_int(minor)
    return total


# -- Fourier-Motzkin --------------------------------------------------


def _fm_eliminate(rows, j):
    keep, pos, neg = [], [], []
    for r in rows:
        if r[j] == 0:
            keep.append(r)
        elif r[j] > 0:
            pos.append(r)
        else:
            neg.append(r)
    for p in pos:
        for q in neg:
            comb = tuple(-q[j] * a + p[j] * b for a, b in zip(p, q))
            if any(comb):
                keep.append(make_primitive(comb))
    out = []
    seen = set()
    for r in keep:
        if any(r):
            r = make_primitive(r)
        else:
            r = tuple(r)
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


def fm_facets(rays):
    """H-description of cone(rays) by eliminating the multipliers.

    Returns a redundant but complete set of primitive inequality forms:
    x lies in the cone iff every form is nonnegative at x.
    """
    rays = [tuple(map(int, r)) for r in rays]
    d = len(rays[0])
    m = len(rays)
    rows = []
    for j in range(m):
        rows.append(tuple(0 for _ in range(d)) + tuple(1 if k == j else 0 for k in range(m)))
    for i in range(d):
        col = tuple(-rays[j][i] for j in range(m))
        e = tuple(1 if k == i else 0 for k in range(d))
        rows.append(e + col)
        rows.append(tuple(-x for x in e) + tuple(-x for x in col))
    for j in range(d + m - 1, d - 1, -1):
        rows = _fm_eliminate(rows, j)
    forms = []
    seen = set()
    for r in rows:
        a = r[:d]
        if any(a) and a not in seen:
            seen.add(a)
            forms.append(a)
    return forms


def true_facets(rays):
    """Irredundant facet forms of a full-dimensional cone.

    Fourier-Motzkin output is filtered by the geometric facet test: a
    valid form supports a facet iff the rays tight on it span a
    hyperplane.  Scaling-canonical because the forms stay primitive.
    """
    rays = [tuple(map(int, r)) for r in rays]
    d = len(rays[0])
    out = []
    for f in fm_facets(rays):
        tight = [r for r in rays if dot(f, r) == 0]
        r, _, _ = frac_rref([[Fraction(x) for x in t] for t in tight]) if tight else (0, None, None)
        if r == d - 1:
            out.append(f)
    return sorted(out)


def fm_member(rays, x):
    """Exact membership of x in cone(rays) by affine feasibility."""
    rays = [tuple(map(int, r)) for r in rays]
    x = tuple(map(int, x))
    d = len(rays[0])
    m = len(rays)
    rows = []
    for j in range(m):
        rows.append(tuple(1 if k == j else 0 for k in range(m)) + (0,))
    for i in range(d):
        col = tuple(rays[j][i] for j in range(m))
        rows.append(col + (-x[i],))
        rows.append(tuple(-c for c in col) + (x[i],))
    for j in range(m - 1, -1, -1):
        rows = _fm_eliminate(rows, j)
    return all(r[-1] >= 0 for r in rows if not any(r[:-1]))


# -- cone and monoid brute force ---------------------------------------


def zonotope_box(rays):
    d = len(rays[0])
    lo = [sum(min(0, r[i]) for r in rays) for i in range(d)]
    hi = [sum(max(0, r[i]) for r in rays) for i in range(d)]
    return lo, hi


def brute_irreducibles(rays, floor_bound=5):
    """Irreducible nonzero lattice points of cone(rays), exhaustively.

    The scan box covers both the requested bound and the generator
    zonotope, so every irreducible point is inside and reducibility can
    always be verified against an in-box summand.  Membership comes from
    Fourier-Motzkin facets, not from the library.
    """
    rays = [tuple(map(int, r)) for r in rays]
    d = len(rays[0])
    forms = true_facets(rays)
    zlo, zhi = zonotope_box(rays)
    lo = [min(-floor_bound, zlo[i]) for i in range(d)]
    hi = [max(floor_bound, zhi[i]) for i in range(d)]
    members = []
    for pt in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if all(dot(f, pt) >= 0 for f in forms):
            members.append(pt)
    nonzero = [p for p in members if any(p)]
    irred = []
    for x in nonzero:
        reducible = False
        for z in nonzero:
            if z == x:
                continue
            y = tuple(a - b for a, b in zip(x, z))
            if any(y) and all(dot(f, y) >= 0 for f in forms):
                reducible = True
                break
        if not reducible:
            irred.append(x)
    return sorted(irred)


def brute_minimal_interior(rays):
    """Minimal interior lattice points of cone(rays) over the monoid
    of all lattice points, by exhaustive scan.

    Interior means every Fourier-Motzkin form is at least 1.  The box
    combines the rational vertices of the interior region with the ray
    zonotope; minimality subtracts the exhaustive irreducibles.
    """
    rays = [tuple(map(int, r)) for r in rays]
    d = len(rays[0])
    forms = true_facets(rays)
    ones = [1] * len(forms)
    verts = []
    for subset in itertools.combinations(range(len(forms)), d):
        mat = [forms[i] for i in subset]
        sol = frac_solve_unique(mat, [1] * d)
        if sol is None:
            continue
        if all(sum(Fraction(f[k]) * sol[k] for k in range(d)) >= 1 for f in forms):
            verts.append(sol)
    assert verts, "interior region of a full-dimensional cone has a vertex"
    zlo, zhi = zonotope_box(rays)
    lo, hi = [], []
    for i in range(d):
        vmin = min(v[i] for v in verts) + zlo[i]
        vmax = max(v[i] for v in verts) + zhi[i]
        lo.append(math.floor(vmin))
        hi.append(math.ceil(vmax))
    irred = brute_irreducibles(rays, 0)
    minimal = []
    for pt in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if not all(dot(f, pt) >= 1 for f in forms):
            continue
        reducible = False
        for b in irred:
            y = tuple(p - q for p, q in zip(pt, b))
            if all(dot(f, y) >= 1 for f in forms):
                reducible = True
                break
        if not reducible:
            minimal.append(pt)
    return sorted(minimal)


# -- abelian group oracles ---------------------------------------------


def minor_gcd_factors(matrix):
    """Invariant factors by determinantal divisors: the k-th factor is
    the gcd of k x k minors divided by the gcd of (k-1) x (k-1) minors."""
    mat = [list(map(int, row)) for row in matrix]
    m = len(mat)
    n = len(mat[0]) if m else 0
    factors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                sub = [[mat[i][j] for j in cols] for i in rows]
                g = gcd(g, abs(det_int(sub)))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return tuple(factors)


def coset_count(columns_matrix, box):
    """Number of cosets of the column span inside a box of Z^s.

    Only meaningful when the quotient is finite and small; the box must
    be large enough to hit every class, which holds as soon as it spans
    a fundamental domain.
    """
    mat = [list(map(int, row)) for row in columns_matrix]
    s = len(mat)
    n = len(mat[0]) if s else 0

    def in_span(delta):
        sol = frac_solve_unique([row[:] for row in mat], delta) if s == n else None
        if sol is None:
            # fall back to a bounded integer search
            for coeffs in itertools.product(range(-3 * box, 3 * box + 1), repeat=n):
                if all(
                    sum(mat[i][j] * coeffs[j] for j in range(n)) == delta[i]
                    for i in range(s)
                ):
                    return True
            return False
        return all(f.denominator == 1 for f in sol)

    reps = []
    for pt in itertools.product(range(-box, box + 1), repeat=s):
        if not any(in_span([a - b for a, b in zip(pt, rep)]) for rep in reps):
            reps.append(pt)
    return len(reps)


# -- random corpora ----------------------------------------------------


def positive_functional(rays, search_bound=4):
    """A small integer functional strictly positive on every ray, or None.

    Finding one certifies that cone(rays) is pointed.
    """
    d = len(rays[0])
    for w in itertools.product(range(-search_bound, search_bound + 1), repeat=d):
        if any(w) and all(dot(w, r) > 0 for r in rays):
            return w
    return None


def random_pointed_cones(count, max_rank, entry_bound, seed):
    """Deterministic stream of (rank, rays) with cone(rays) pointed and
    full-dimensional.

    Full dimension is certified by rational rank, pointedness by a
    strictly positive functional found by exhaustive search; candidates
    without such a small certificate are skipped.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(2, max_rank)
        m = rng.randint(d, d + 2)
        rays = []
        for _ in range(m):
            v = tuple(rng.randint(-entry_bound, entry_bound) for _ in range(d))
            if any(v):
                rays.append(make_primitive(v))
        rays = sorted(set(rays))
        if len(rays) < d:
            continue
        rank, _, _ = frac_rref([[Fraction(x) for x in r] for r in rays])
        if rank < d:
            continue  # not full-dimensional
        if positive_functional(rays, 3) is None:
            continue  # no cheap pointedness certificate
        out.append((d, rays))
    return out
