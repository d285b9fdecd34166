"""Exact rational polyhedral geometry in low dimension.

Vertex lists (VRep) and inequality systems (HRep) are converted into a
vertex-facet incidence matrix by brute-force enumeration of supporting
hyperplanes, after projecting the points onto their affine hull.  All
arithmetic is over `fractions.Fraction`; no operation ever rounds, so
rescaling the input by any nonzero rational leaves every combinatorial
output unchanged.

The brute force is deliberate: every instance this package targets has at
most a few dozen vertices in dimension at most five, and enumerating the
hyperplanes spanned by d-subsets of points is exact and easy to audit.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import DegenerateInput, Empty, Unbounded
from .linalg import nullspace, primitive_integer_vector, rank, rref, solve_unique


def _as_point(coords):
    return tuple(Fraction(c) for c in coords)


@dataclass(frozen=True)
class Hyperplane:
    """Integer hyperplane normal.x = offset in canonical form.

    The pair (normal, offset) is scaled to coprime integers with the first
    nonzero normal entry positive, which makes equal hyperplanes compare
    and hash equal.
    """

    normal: tuple
    offset: int

    @classmethod
    def through(cls, normal_fracs, offset_frac):
        scaled = primitive_integer_vector(list(normal_fracs) + [offset_frac])
        # primitive_integer_vector sign-normalises on the first nonzero entry
        # of the joint vector; redo the sign on the normal part alone.
        normal, offset = scaled[:-1], scaled[-1]
        lead = next((v for v in normal if v != 0), 0)
        if lead < 0:
            normal = tuple(-v for v in normal)
            offset = -offset
        return cls(normal, offset)

    def eval(self, point):
        return sum(n * x for n, x in zip(self.normal, point)) - self.offset


@dataclass(frozen=True)
class VRep:
    """A polytope given as the convex hull of explicit rational points."""

    ambient_dim: int
    points: tuple
    name: str = ""

    def __post_init__(self):
        pts = tuple(_as_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("VRep needs at least one point")
        for p in pts:
            if len(p) != self.ambient_dim:
                raise ValueError("point length differs from ambient_dim")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points in VRep")

    def scaled(self, factor):
        """Same point set with every coordinate multiplied by `factor`."""
        f = Fraction(factor)
        if f == 0:
            raise ValueError("scale factor must be nonzero")
        return VRep(self.ambient_dim,
                    tuple(tuple(f * c for c in p) for p in self.points),
                    self.name)


@dataclass(frozen=True)
class HRep:
    """A polytope given by integer inequalities normal.x <= bound.

    Equalities share the same (normal, bound) shape.  Boundedness and
    nonemptiness are checked by `vertex_enumerate`, not at construction.
    """

    ambient_dim: int
    inequalities: tuple
    equalities: tuple = ()
    name: str = ""

    def __post_init__(self):
        def norm(rows):
            out = []
            for normal, bound in rows:
                normal = tuple(int(c) for c in normal)
                if len(normal) != self.ambient_dim:
                    raise ValueError("constraint length differs from ambient_dim")
                out.append((normal, int(bound)))
            return tuple(out)

        object.__setattr__(self, "inequalities", norm(self.inequalities))
        object.__setattr__(self, "equalities", norm(self.equalities))


@dataclass(frozen=True)
class IncidenceMatrix:
    """Vertex sets of the facets of a polytope, over vertex ids 0..n-1.

    `kept` maps the dense vertex ids back to indices into the originating
    point list; `dropped` lists input points that were not vertices of the
    hull (they appear in no facet).
    """

    n_vertices: int
    facets: tuple
    dim: int
    kept: tuple = field(default=(), compare=False)
    dropped: tuple = field(default=(), compare=False)

    def __post_init__(self):
        facets = tuple(frozenset(f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        if not self.kept:
            object.__setattr__(self, "kept", tuple(range(self.n_vertices)))
        for f in facets:
            for v in f:
                if not 0 <= v < self.n_vertices:
                    raise ValueError("facet vertex index out of range")
        for f in facets:
            for g in facets:
                if f != g and f <= g:
                    raise ValueError("facet vertex sets must form an antichain")
        if self.dim > 0:
            for v in range(self.n_vertices):
                if sum(1 for f in facets if v in f) < self.dim:
                    raise ValueError("every vertex must lie on >= dim facets")


def affine_hull(points):
    """Dimension, spanning directions and origin of the affine hull.

    The basis rows are the reduced row echelon form of the difference set,
    so they are deterministic and every input point equals
    origin + (rational combination of basis rows).
    """
    pts = [_as_point(p) for p in points]
    if not pts:
        raise ValueError("affine_hull of no points")
    origin = pts[0]
    diffs = [[c - o for c, o in zip(p, origin)] for p in pts[1:]]
    reduced, _ = rref(diffs)
    basis = [tuple(row) for row in reduced]
    return len(basis), basis, origin


def _hull_coordinates(points, basis, origin):
    """Coordinates of each point in the affine-hull basis (exact)."""
    _, pivots = rref(basis)
    coords = []
    for p in points:
        d = [c - o for c, o in zip(p, origin)]
        c = [d[j] for j in pivots]
        # the basis is in reduced echelon form, so reading the pivot
        # columns recovers the unique coefficient vector; verify exactly
        rebuilt = [sum(ci * row[k] for ci, row in zip(c, basis))
                   for k in range(len(origin))]
        if rebuilt != d:
            raise DegenerateInput("point outside the affine hull of the input")
        coords.append(tuple(c))
    return coords


def facet_enumerate(v: VRep) -> IncidenceMatrix:
    """Facets of conv(points) as vertex-index sets.

    Enumerates every hyperplane spanned by a d-subset of the projected
    points and keeps the supporting ones.  Input points that are not
    vertices of the hull are dropped (see `IncidenceMatrix.dropped`);
    facet sets and `n_vertices` refer to the surviving vertices only.
    """
    dim, basis, origin = affine_hull(v.points)
    if dim == 0:
        raise DegenerateInput("all points coincide")
    pts = _hull_coordinates(v.points, basis, origin)
    n = len(pts)

    facets = {}  # Hyperplane -> frozenset of incident point indices
    for subset in combinations(range(n), dim):
        sub = [pts[i] for i in subset]
        diffs = [[c - o for c, o in zip(p, sub[0])] for p in sub[1:]]
        normals = nullspace(diffs, dim)
        if len(normals) != 1:
            continue  # subset does not span a hyperplane
        normal = normals[0]
        offset = sum(a * b for a, b in zip(normal, sub[0]))
        plane = Hyperplane.through(normal, offset)
        if plane in facets:
            continue
        values = [plane.eval(p) for p in pts]
        if all(x <= 0 for x in values) or all(x >= 0 for x in values):
            facets[plane] = frozenset(i for i, x in enumerate(values) if x == 0)

    # A point is a vertex exactly when its incident facet normals span.
    normals_at = {i: [] for i in range(n)}
    for plane, inc in facets.items():
        for i in inc:
            normals_at[i].append(plane.normal)
    vertex_ids = [i for i in range(n)
                  if normals_at[i] and rank(normals_at[i]) == dim]
    dropped = tuple(i for i in range(n) if i not in set(vertex_ids))
    reindex = {old: new for new, old in enumerate(vertex_ids)}

    facet_sets = sorted(
        (frozenset(reindex[i] for i in inc if i in reindex)
         for inc in facets.values()),
        key=sorted)
    return IncidenceMatrix(
        n_vertices=len(vertex_ids),
        facets=tuple(facet_sets),
        dim=dim,
        kept=tuple(vertex_ids),
        dropped=dropped)


def facet_hyperplanes(v: VRep):
    """Supporting hyperplanes of a full-dimensional VRep, oriented so that
    normal.x <= offset holds on the polytope.  Sorted for determinism."""
    dim, _, _ = affine_hull(v.points)
    if dim != v.ambient_dim:
        raise DegenerateInput("facet_hyperplanes needs full-dimensional input")
    n = len(v.points)
    seen = set()
    oriented = set()
    for subset in combinations(range(n), dim):
        sub = [v.points[i] for i in subset]
        diffs = [[c - o for c, o in zip(p, sub[0])] for p in sub[1:]]
        normals = nullspace(diffs, dim)
        if len(normals) != 1:
            continue
        normal = normals[0]
        offset = sum(a * b for a, b in zip(normal, sub[0]))
        plane = Hyperplane.through(normal, offset)
        if plane in seen:
            continue
        seen.add(plane)
        values = [plane.eval(p) for p in v.points]
        if all(x <= 0 for x in values):
            oriented.add(plane)
        elif all(x >= 0 for x in values):
            oriented.add(Hyperplane(tuple(-c for c in plane.normal),
                                    -plane.offset))
    return sorted(oriented, key=lambda p: (p.normal, p.offset))


def _basic_feasible_points(inequalities, equalities, dim, first_only=False):
    """Feasible basic solutions of an integer constraint system.

    Every vertex of the feasible region lies on some rank-`dim` subsystem
    of active constraints, so enumerating subsets of the inequalities
    stacked on top of all equalities finds them all.
    """
    eq_rows = [list(map(Fraction, nrm)) for nrm, _ in equalities]
    eq_rhs = [Fraction(b) for _, b in equalities]
    r_eq = rank(eq_rows) if eq_rows else 0
    need = dim - r_eq
    if need < 0:
        return []
    found = set()
    for subset in combinations(range(len(inequalities)), need):
        rows = eq_rows + [list(map(Fraction, inequalities[i][0])) for i in subset]
        rhs = eq_rhs + [Fraction(inequalities[i][1]) for i in subset]
        if not rows:
            continue
        x = solve_unique(rows, rhs)
        if x is None:
            continue
        if any(sum(a * c for a, c in zip(nrm, x)) > b
               for nrm, b in inequalities):
            continue
        if any(sum(a * c for a, c in zip(nrm, x)) != b
               for nrm, b in equalities):
            continue
        found.add(x)
        if first_only:
            return [x]
    return sorted(found)


def _coordinate_box(dim, bound):
    box = []
    for k in range(dim):
        e = [0] * dim
        e[k] = 1
        box.append((tuple(e), bound))
        e = [0] * dim
        e[k] = -1
        box.append((tuple(e), bound))
    return box


def vertex_enumerate(h: HRep) -> VRep:
    """Vertices of a bounded nonempty inequality system.

    Raises `Empty` or `Unbounded` when the region is not a polytope.  The
    emptiness probe intersects the system with a box that provably
    contains some basic solution whenever the region is nonempty.
    """
    dim = h.ambient_dim
    max_entry = 1
    for nrm, b in list(h.inequalities) + list(h.equalities):
        max_entry = max(max_entry, abs(b), *(abs(c) for c in nrm))
    big = factorial(dim + 1) * (max_entry + 1) ** (dim + 1) + 1

    padded = list(h.inequalities) + _coordinate_box(dim, big)
    if not _basic_feasible_points(padded, h.equalities, dim, first_only=True):
        raise Empty("the inequality system has no feasible point")

    # Recession direction search: any nonzero ray of the homogeneous
    # system shows unboundedness.  Pinning one coordinate to +-1 inside
    # the unit box keeps each probe bounded.
    hom_ineq = [(nrm, 0) for nrm, _ in h.inequalities]
    hom_eq = [(nrm, 0) for nrm, _ in h.equalities]
    unit_box = _coordinate_box(dim, 1)
    for k in range(dim):
        for sign in (1, -1):
            pin = [0] * dim
            pin[k] = 1
            probe_eq = hom_eq + [(tuple(pin), sign)]
            if _basic_feasible_points(hom_ineq + unit_box, probe_eq, dim,
                                      first_only=True):
                raise Unbounded("the inequality system has a recession ray")

    points = _basic_feasible_points(h.inequalities, h.equalities, dim)
    return VRep(dim, tuple(points), h.name)
