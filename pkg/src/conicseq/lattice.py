"""Face posets of polytopes and the subcomplexes obtained by deletions.

A `FacePoset` is built once from a vertex-facet incidence matrix by
closing the facet vertex sets under intersection; containment of faces
coincides with containment of vertex sets throughout.  A `SubComplex` is
a lightweight "alive set" of face ids against a fixed parent poset, so
the deletion-heavy search never rebuilds a lattice.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import (InconsistentIncidence, NotAConeVertex, NotComparable,
                     SizeLimitExceeded, VertexNotPresent)
from .geometry import IncidenceMatrix, VRep, facet_enumerate


@dataclass(frozen=True)
class Face:
    """One face: its id in the parent poset, dimension, and vertex set.

    The empty face has dim -1 and an empty vertex set; vertices have
    dim 0 and singleton vertex sets.
    """

    id: int
    dim: int
    vertex_set: frozenset


@dataclass(frozen=True)
class FVector:
    """Face counts (f_0, ..., f_n) by dimension, empty face excluded."""

    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    @property
    def dim(self):
        return len(self.counts) - 1

    def euler(self):
        return sum((-1) ** k * c for k, c in enumerate(self.counts))

    def __getitem__(self, k):
        return self.counts[k]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)


class FacePoset:
    """The faces of a polytope (or of a vertex figure), ordered by inclusion.

    Immutable after construction; safe to share.  Face ids are assigned in
    (dim, sorted vertex tuple) order, so identical inputs always yield
    identical ids.
    """

    def __init__(self, vertex_sets_with_dims, top_vertex_set):
        faces = []
        for i, (vset, dim) in enumerate(
                sorted(vertex_sets_with_dims.items(),
                       key=lambda item: (item[1], sorted(item[0])))):
            faces.append(Face(i, dim, vset))
        self.faces = tuple(faces)
        self.by_vertex_set = {f.vertex_set: f.id for f in self.faces}
        self.top = self.by_vertex_set[top_vertex_set]
        self.empty_id = self.by_vertex_set[frozenset()]
        by_vertex = {}
        for f in self.faces:
            for v in sorted(f.vertex_set):
                by_vertex.setdefault(v, []).append(f.id)
        self.faces_of_vertex = {v: tuple(ids) for v, ids in by_vertex.items()}
        self.n_vertices = sum(1 for f in self.faces if f.dim == 0)
        self._figure_cache = {}
        self._classify_cache = {}
        self._covers_cache = None

    @property
    def dim(self):
        return self.faces[self.top].dim

    def __len__(self):
        return len(self.faces)

    def leq(self, a, b):
        """Containment of faces, which equals containment of vertex sets."""
        return self.faces[a].vertex_set <= self.faces[b].vertex_set

    def vertex_ids(self):
        return sorted(self.faces_of_vertex)

    def face_of_vertex(self, v):
        try:
            return self.by_vertex_set[frozenset([v])]
        except KeyError:
            raise VertexNotPresent(f"no vertex {v} in this poset") from None

    def f_vector(self):
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            if f.dim >= 0:
                counts[f.dim] += 1
        return FVector(tuple(counts))

    def full_subcomplex(self):
        return SubComplex(self, frozenset(f.id for f in self.faces))

    def covers(self):
        """Hasse cover pairs (lower id, upper id).

        Polytope face lattices are graded, so covers are exactly the
        containments with dimension gap one.
        """
        if self._covers_cache is not None:
            return self._covers_cache
        by_dim = {}
        for f in self.faces:
            by_dim.setdefault(f.dim, []).append(f)
        pairs = []
        for d in range(-1, self.dim):
            for f in by_dim.get(d, []):
                for g in by_dim.get(d + 1, []):
                    if f.vertex_set < g.vertex_set:
                        pairs.append((f.id, g.id))
        self._covers_cache = pairs
        return pairs


def build_face_lattice(inc: IncidenceMatrix) -> FacePoset:
    """Close the facet vertex sets under intersection and grade by chains.

    The resulting poset contains the empty face, every intersection of
    facets, and the full polytope; a face's dimension is its longest-chain
    rank minus one.  Raises `InconsistentIncidence` when the closure is
    not the face lattice of a polytope of the stated dimension (some
    vertex not cut out by its facets, or wrong top rank).
    """
    full = frozenset(range(inc.n_vertices))
    family = {full}
    worklist = [full]
    facet_sets = [frozenset(f) for f in inc.facets]
    while worklist:
        current = worklist.pop()
        for fs in facet_sets:
            meet = current & fs
            if meet not in family:
                family.add(meet)
                worklist.append(meet)
    family.add(frozenset())

    for v in range(inc.n_vertices):
        containing = [fs for fs in facet_sets if v in fs]
        if not containing:
            if inc.dim != 0:
                raise InconsistentIncidence(f"vertex {v} lies on no facet")
            continue
        meet = frozenset.intersection(*containing)
        if meet != frozenset([v]):
            raise InconsistentIncidence(
                f"facets through vertex {v} intersect in {sorted(meet)}")

    # longest-chain rank, computed upward by cardinality
    by_size = sorted(family, key=lambda s: (len(s), sorted(s)))
    rank = {}
    for s in by_size:
        below = [rank[t] for t in family if t < s]
        rank[s] = 1 + max(below) if below else 0
    dims = {s: r - 1 for s, r in rank.items()}
    if dims[full] != inc.dim:
        raise InconsistentIncidence(
            f"chain rank of the top face is {dims[full]}, expected {inc.dim}")
    return FacePoset(dims, full)


def polytope_lattice(v: VRep) -> FacePoset:
    """Face lattice of the convex hull of a VRep.

    Convenience pipeline around `facet_enumerate` + `build_face_lattice`;
    a single point yields the two-element lattice directly.
    """
    if len(v.points) == 1:
        return build_face_lattice(IncidenceMatrix(1, (), 0))
    return build_face_lattice(facet_enumerate(v))


@dataclass(frozen=True)
class SubComplex:
    """Alive face ids against a fixed parent lattice.

    Values are immutable; deletions return new instances.  The alive set
    is always the parent minus a union of deleted upper intervals, hence
    downward closed and intersection closed, and always contains the
    empty face.
    """

    parent: FacePoset
    alive: frozenset

    def alive_faces(self):
        return [self.parent.faces[i] for i in sorted(self.alive)]

    def alive_vertices(self):
        return sorted(v for v in self.parent.faces_of_vertex
                      if self.parent.face_of_vertex(v) in self.alive)

    def is_alive_vertex(self, v):
        face = self.parent.by_vertex_set.get(frozenset([v]))
        return face is not None and face in self.alive

    def fingerprint(self):
        """Hashable canonical form: the sorted alive vertex sets."""
        return hash(tuple(sorted(
            tuple(sorted(self.parent.faces[i].vertex_set))
            for i in self.alive)))

    def max_dim(self):
        return max(self.parent.faces[i].dim for i in self.alive)


def upper_set(c: SubComplex, v) -> set:
    """Ids of the alive faces whose vertex set contains the vertex `v`."""
    if not c.is_alive_vertex(v):
        raise VertexNotPresent(f"vertex {v} is not alive")
    return {i for i in c.parent.faces_of_vertex[v] if i in c.alive}


def unique_maximal(c: SubComplex, v):
    """The unique maximal element of `upper_set(c, v)`, or None.

    A unique maximal face exists exactly when the union of the vertex
    sets in the upper set is itself an alive face of that upper set.
    """
    up = upper_set(c, v)
    union = frozenset().union(*(c.parent.faces[i].vertex_set for i in up))
    top = c.parent.by_vertex_set.get(union)
    return top if top is not None and top in up else None


def interval(c: SubComplex, v, e) -> set:
    """The closed interval of alive faces between vertex `v` and face `e`."""
    if e not in c.alive:
        raise VertexNotPresent(f"face {e} is not alive")
    top = c.parent.faces[e].vertex_set
    if v not in top:
        raise NotComparable(f"vertex {v} is not contained in face {e}")
    return {i for i in upper_set(c, v) if c.parent.leq(i, e)}


def delete_interval(c: SubComplex, v, e) -> SubComplex:
    """Remove the interval [v, e] when `v` is a cone vertex with face `e`."""
    if unique_maximal(c, v) != e:
        raise NotAConeVertex(
            f"face {e} is not the unique maximal face at vertex {v}")
    return SubComplex(c.parent, c.alive - frozenset(interval(c, v, e)))


def f_vector(c) -> FVector:
    """Face counts by dimension of a poset or of a subcomplex's alive part."""
    if isinstance(c, FacePoset):
        return c.f_vector()
    counts = [0] * (c.max_dim() + 1)
    for i in c.alive:
        d = c.parent.faces[i].dim
        if d >= 0:
            counts[d] += 1
    return FVector(tuple(counts))


# -- poset isomorphism -------------------------------------------------------

def _hasse_arrays(p: FacePoset):
    n = len(p)
    children = [set() for _ in range(n)]
    parents = [set() for _ in range(n)]
    for lo, hi in p.covers():
        parents[lo].add(hi)
        children[hi].add(lo)
    return children, parents


def _joint_refine(n, ch_a, pa_a, ch_b, pa_b, init_a, init_b):
    """Colour refinement run jointly on both Hasse diagrams."""
    col_a, col_b = list(init_a), list(init_b)
    while True:
        sig_a = [(col_a[i], tuple(sorted(col_a[j] for j in ch_a[i])),
                  tuple(sorted(col_a[j] for j in pa_a[i]))) for i in range(n)]
        sig_b = [(col_b[i], tuple(sorted(col_b[j] for j in ch_b[i])),
                  tuple(sorted(col_b[j] for j in pa_b[i]))) for i in range(n)]
        palette = {s: k for k, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        new_a = [palette[s] for s in sig_a]
        new_b = [palette[s] for s in sig_b]
        if new_a == col_a and new_b == col_b:
            return col_a, col_b
        col_a, col_b = new_a, new_b


def poset_isomorphic(a: FacePoset, b: FacePoset, max_elements: int = 200) -> bool:
    """Decide order isomorphism by colour refinement plus backtracking.

    Covers determine the order, so a bijection matching covers in both
    directions is an order isomorphism.  Raises `SizeLimitExceeded` above
    `max_elements` elements.
    """
    if len(a) > max_elements or len(b) > max_elements:
        raise SizeLimitExceeded(
            f"posets with more than {max_elements} elements")
    if len(a) != len(b):
        return False
    if sorted(f.dim for f in a.faces) != sorted(f.dim for f in b.faces):
        return False

    ch_a, pa_a = _hasse_arrays(a)
    ch_b, pa_b = _hasse_arrays(b)
    init_a = [(a.faces[i].dim, len(ch_a[i]), len(pa_a[i])) for i in range(len(a))]
    init_b = [(b.faces[i].dim, len(ch_b[i]), len(pa_b[i])) for i in range(len(b))]
    palette = {sig: k for k, sig in enumerate(sorted(set(init_a) | set(init_b)))}
    col_a, col_b = _joint_refine(len(a), ch_a, pa_a, ch_b, pa_b,
                                 [palette[s] for s in init_a],
                                 [palette[s] for s in init_b])
    if sorted(col_a) != sorted(col_b):
        return False

    candidates = {i: [j for j in range(len(b)) if col_b[j] == col_a[i]]
                  for i in range(len(a))}

    # Assign elements adjacent to already-assigned ones first, so the
    # cover checks prune immediately; otherwise symmetric lattices make
    # the backtracking wander.
    neighbours = [ch_a[i] | pa_a[i] for i in range(len(a))]
    order = []
    placed = set()
    assigned_degree = [0] * len(a)
    for _ in range(len(a)):
        best = min((i for i in range(len(a)) if i not in placed),
                   key=lambda i: (-assigned_degree[i], len(candidates[i]), i))
        order.append(best)
        placed.add(best)
        for k in neighbours[best]:
            assigned_degree[k] += 1

    mapping = [None] * len(a)
    inverse = [None] * len(b)

    def compatible(i, j):
        for k in ch_a[i]:
            if mapping[k] is not None and mapping[k] not in ch_b[j]:
                return False
        for k in pa_a[i]:
            if mapping[k] is not None and mapping[k] not in pa_b[j]:
                return False
        for k in ch_b[j]:
            if inverse[k] is not None and inverse[k] not in ch_a[i]:
                return False
        for k in pa_b[j]:
            if inverse[k] is not None and inverse[k] not in pa_a[i]:
                return False
        return True

    def backtrack(pos):
        if pos == len(order):
            return True
        i = order[pos]
        for j in candidates[i]:
            if inverse[j] is None and compatible(i, j):
                mapping[i], inverse[j] = j, i
                if backtrack(pos + 1):
                    return True
                mapping[i], inverse[j] = None, None
        return False

    return backtrack(0)


# -- reference lattices ------------------------------------------------------

@lru_cache(maxsize=None)
def simplex_lattice(d: int) -> FacePoset:
    """Face lattice of the d-simplex, built combinatorially."""
    n = d + 1
    if d == 0:
        return build_face_lattice(IncidenceMatrix(1, (), 0))
    facets = tuple(frozenset(range(n)) - {i} for i in range(n))
    return build_face_lattice(IncidenceMatrix(n, facets, d))


@lru_cache(maxsize=None)
def cube_lattice(d: int) -> FacePoset:
    """Face lattice of the d-cube with vertices {0,1}^d, built combinatorially."""
    if d == 0:
        return build_face_lattice(IncidenceMatrix(1, (), 0))
    verts = list(range(2 ** d))
    facets = []
    for axis in range(d):
        for bit in (0, 1):
            facets.append(frozenset(v for v in verts
                                    if (v >> axis) & 1 == bit))
    return build_face_lattice(IncidenceMatrix(2 ** d, tuple(facets), d))
