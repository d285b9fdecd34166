"""Cone-vertex detection, sequence search, enumeration and verification.

A deletion step picks a vertex whose alive upper set has a unique maximal
face E of dimension at least one, removes the closed interval between
them, and records the combinatorial type of the cone base: the vertex
figure of the vertex inside E.  A complete run ends at a single vertex;
the recorded steps form a replayable certificate.

The search explores vertices in ascending id order and returns the
lexicographically first successful deletion order, memoising subcomplexes
proven dead under the active constraint.  The exhaustive enumerator walks
the same tree without memoisation and yields every certificate.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import NotAConeVertex, SizeLimitExceeded
from .lattice import (FacePoset, FVector, SubComplex, delete_interval,
                      f_vector, poset_isomorphic, cube_lattice, unique_maximal,
                      upper_set)


@dataclass(frozen=True)
class BaseClass:
    """Combinatorial type of a cone base: simplex, cube, other simple, or general."""

    kind: str  # "simplex" | "cube" | "simple" | "general"
    dim: int

    def __str__(self):
        return f"{self.kind}({self.dim})"

    @property
    def is_simple(self):
        return self.kind in ("simplex", "cube", "simple")


def simplex_base(d):
    return BaseClass("simplex", d)


def cube_base(d):
    return BaseClass("cube", d)


class SearchConstraint(Enum):
    """Which cone bases a sequence is allowed to use."""

    ANY = "any"
    ALL_SIMPLEX = "simplex"
    ALL_CUBE = "cube"
    ALL_SIMPLE = "simple"

    def accepts(self, base: BaseClass) -> bool:
        if self is SearchConstraint.ANY:
            return True
        if self is SearchConstraint.ALL_SIMPLEX:
            return base.kind == "simplex"
        if self is SearchConstraint.ALL_CUBE:
            # points and segments are both simplices and cubes; the
            # classifier tags them simplex, so admit them here.
            return base.kind == "cube" or (base.kind == "simplex"
                                           and base.dim <= 1)
        return base.is_simple


@dataclass(frozen=True)
class ConicStep:
    """One deletion: cone vertex, its maximal face, and the classified base."""

    vertex: int
    max_face: int
    base_class: BaseClass
    base_f_vector: FVector


@dataclass(frozen=True)
class ConicCertificate:
    """A full deletion order, replayable from the intact face lattice.

    Steps are listed in deletion order (first deletion first); the number
    of steps is one less than the number of vertices of the polytope.
    """

    polytope_name: str
    steps: tuple
    terminal_vertex: int

    def base_multiset(self):
        """Sorted (kind, dim) pairs of all step bases."""
        return tuple(sorted((s.base_class.kind, s.base_class.dim)
                            for s in self.steps))


class Verdict(Enum):
    FOUND = "found"
    NOT_CONIC = "not-conic"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchResult:
    verdict: Verdict
    certificate: ConicCertificate = None

    @property
    def found(self):
        return self.verdict is Verdict.FOUND


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failed_step: int = None  # 0-based step index, None when ok
    message: str = "certificate verified"

    def __bool__(self):
        return self.ok


def cone_vertices(c: SubComplex):
    """All (vertex, face) pairs where the face is the unique maximal
    element of the vertex's alive upper set, sorted by vertex id."""
    out = []
    for v in c.alive_vertices():
        top = unique_maximal(c, v)
        if top is not None:
            out.append((v, top))
    return out


def vertex_figure_poset(c: SubComplex, v, e) -> FacePoset:
    """Face poset of the cone base at a cone-vertex pair.

    The nonempty faces of the base correspond to the faces strictly
    between the vertex and `e` (inclusive of `e`), with dimension lowered
    by one; the base's vertices are the edges of `e` at `v`.  Downward
    closure of alive complexes makes the result depend only on the parent
    lattice, so it is cached per (vertex, face) pair.
    """
    if unique_maximal(c, v) != e:
        raise NotAConeVertex(
            f"face {e} is not the unique maximal face at vertex {v}")
    return _vertex_figure(c.parent, v, e)


def _vertex_figure(parent: FacePoset, v, e) -> FacePoset:
    cached = parent._figure_cache.get((v, e))
    if cached is not None:
        return cached
    top_set = parent.faces[e].vertex_set
    members = [parent.faces[i] for i in parent.faces_of_vertex[v]
               if parent.faces[i].dim >= 1
               and parent.faces[i].vertex_set <= top_set]
    atoms = sorted((f for f in members if f.dim == 1),
                   key=lambda f: sorted(f.vertex_set))
    atom_index = {f.id: k for k, f in enumerate(atoms)}
    sets_with_dims = {frozenset(): -1}
    for f in members:
        vset = frozenset(atom_index[a.id] for a in atoms
                         if a.vertex_set <= f.vertex_set)
        sets_with_dims[vset] = f.dim - 1
    top_vset = frozenset(range(len(atoms)))
    figure = FacePoset(sets_with_dims, top_vset)
    parent._figure_cache[(v, e)] = figure
    return figure


def _cube_f_vector(d):
    from math import comb
    return tuple(comb(d, k) * 2 ** (d - k) for k in range(d)) + (1,)


def classify_base(b: FacePoset) -> BaseClass:
    """Tag a polytope lattice as simplex, cube, other simple, or general.

    A d-polytope is a simplex exactly when it has d+1 vertices.  Cubes are
    recognised by an f-vector prefilter followed by poset isomorphism
    against the reference cube lattice.  Simplicity asks every vertex to
    lie on exactly d facets.  Tags are mutually exclusive with precedence
    simplex > cube > simple > general, so points and segments come out as
    simplices.
    """
    d = b.dim
    f = b.f_vector()
    if f[0] == d + 1:
        return BaseClass("simplex", d)
    if d >= 2 and tuple(f) == _cube_f_vector(d):
        if poset_isomorphic(b, cube_lattice(d)):
            return BaseClass("cube", d)
    coatoms = [face for face in b.faces if face.dim == d - 1]
    simple = all(
        sum(1 for g in coatoms if v in g.vertex_set) == d
        for v in b.faces_of_vertex)
    if simple:
        return BaseClass("simple", d)
    return BaseClass("general", d)


def _classified_figure(parent: FacePoset, v, e):
    cached = parent._classify_cache.get((v, e))
    if cached is None:
        figure = _vertex_figure(parent, v, e)
        cached = (classify_base(figure), figure.f_vector())
        parent._classify_cache[(v, e)] = cached
    return cached


def _step_candidates(c: SubComplex, constraint: SearchConstraint):
    """Admissible deletions from a state, in ascending vertex order."""
    out = []
    for v, e in cone_vertices(c):
        if c.parent.faces[e].dim < 1:
            continue  # a bare vertex has no cone base to delete through
        base, base_f = _classified_figure(c.parent, v, e)
        if constraint.accepts(base):
            out.append((v, e, base, base_f))
    return out


def _alive_vertex_count(c: SubComplex):
    return sum(1 for i in c.alive if c.parent.faces[i].dim == 0)


def search_conic(p: FacePoset, constraint: SearchConstraint,
                 budget: int = None) -> SearchResult:
    """Depth-first search for a conic sequence under a base constraint.

    Returns FOUND with the lexicographically first certificate (by vertex
    choice at each state), NOT_CONIC after exhausting all orders, or
    INCONCLUSIVE when a finite `budget` of visited states runs out.
    Dead states are memoised per constraint.
    """
    name = ""
    start = p.full_subcomplex()
    if p.n_vertices == 1:
        return SearchResult(Verdict.FOUND,
                            ConicCertificate(name, (), p.vertex_ids()[0]))

    dead = set()
    visited = 0
    budget_hit = False

    def dfs(c, trail):
        nonlocal visited, budget_hit
        visited += 1
        if budget is not None and visited > budget:
            budget_hit = True
            return None
        key = c.alive
        if key in dead:
            return None
        if _alive_vertex_count(c) == 1:
            terminal = c.alive_vertices()[0]
            return ConicCertificate(name, tuple(trail), terminal)
        for v, e, base, base_f in _step_candidates(c, constraint):
            step = ConicStep(v, e, base, base_f)
            result = dfs(delete_interval(c, v, e), trail + [step])
            if result is not None:
                return result
            if budget_hit:
                return None
        dead.add(key)
        return None

    cert = dfs(start, [])
    if cert is not None:
        return SearchResult(Verdict.FOUND, cert)
    if budget_hit:
        return SearchResult(Verdict.INCONCLUSIVE)
    return SearchResult(Verdict.NOT_CONIC)


def enumerate_all_sequences(p: FacePoset, constraint: SearchConstraint,
                            limit: int, max_faces: int = 100):
    """Every conic sequence under the constraint, up to `limit` many.

    Walks the full choice tree in lexicographic vertex order without
    memoisation, so an empty result (with the limit not reached) proves
    there is no sequence.  Guarded by a face-count bound.
    """
    if len(p) > max_faces:
        raise SizeLimitExceeded(
            f"enumeration guarded at {max_faces} faces, poset has {len(p)}")
    name = ""
    results = []
    if p.n_vertices == 1:
        return [ConicCertificate(name, (), p.vertex_ids()[0])][:limit]

    def walk(c, trail):
        if len(results) >= limit:
            return
        if _alive_vertex_count(c) == 1:
            results.append(ConicCertificate(name, tuple(trail),
                                            c.alive_vertices()[0]))
            return
        for v, e, base, base_f in _step_candidates(c, constraint):
            walk(delete_interval(c, v, e),
                 trail + [ConicStep(v, e, base, base_f)])
            if len(results) >= limit:
                return

    walk(p.full_subcomplex(), [])
    return results


def verify_certificate(p: FacePoset, cert: ConicCertificate,
                       constraint: SearchConstraint) -> VerificationResult:
    """Replay a certificate from the intact lattice, checking every step.

    Each step must name the unique maximal face at its vertex, carry the
    base classification the replay recomputes, satisfy the constraint,
    and keep the base dimension within the dimension of what remains.
    The replay must end at exactly the claimed terminal vertex.
    """

    def fail(idx, msg):
        return VerificationResult(False, idx, f"step {idx}: {msg}")

    c = p.full_subcomplex()
    for idx, step in enumerate(cert.steps):
        if not c.is_alive_vertex(step.vertex):
            return fail(idx, f"vertex {step.vertex} is not alive")
        top = unique_maximal(c, step.vertex)
        if top is None:
            return fail(idx, f"vertex {step.vertex} has no unique maximal face")
        if top != step.max_face:
            return fail(idx, f"unique maximal face at vertex {step.vertex} "
                             f"is {top}, certificate names {step.max_face}")
        if p.faces[top].dim < 1:
            return fail(idx, "maximal face is the vertex itself")
        base, base_f = _classified_figure(p, step.vertex, top)
        if base != step.base_class:
            return fail(idx, f"base classifies as {base}, certificate "
                             f"says {step.base_class}")
        if tuple(base_f) != tuple(step.base_f_vector):
            return fail(idx, "base f-vector mismatch")
        if not constraint.accepts(base):
            return fail(idx, f"base {base} violates constraint "
                             f"{constraint.value}")
        c = delete_interval(c, step.vertex, top)
        if base.dim > c.max_dim():
            return fail(idx, "base dimension exceeds the remaining complex")

    if _alive_vertex_count(c) != 1:
        return VerificationResult(
            False, len(cert.steps),
            f"replay leaves {_alive_vertex_count(c)} vertices, expected 1")
    terminal = c.alive_vertices()[0]
    if terminal != cert.terminal_vertex:
        return VerificationResult(
            False, len(cert.steps),
            f"terminal vertex is {terminal}, certificate says "
            f"{cert.terminal_vertex}")
    if c.alive != frozenset({p.empty_id, p.face_of_vertex(terminal)}):
        return VerificationResult(
            False, len(cert.steps),
            "replay did not end at the bare terminal vertex")
    return VerificationResult(True)
