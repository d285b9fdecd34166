"""JSON documents, certificate serialisation, and the analysis report.

Polytopes travel as exactly one of three representations (vertex list,
inequality system, or vertex-facet incidence); rationals are strings like
"7/3" so no reader can silently go through floating point.  Certificates
identify faces by their vertex sets, never by internal face ids, which
keeps them stable across lattice rebuilds.  Emission sorts every map, so
identical inputs produce byte-identical documents.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import jsonschema

from .engine import (BaseClass, ConicCertificate, ConicStep, SearchConstraint,
                     search_conic)
from .errors import ParseError, SchemaError
from .geometry import (HRep, IncidenceMatrix, VRep, facet_enumerate,
                       vertex_enumerate)
from .invariants import (CohomologyReport, IntPolynomial, cohomology_report,
                         delta_conic_necessary, generating_function,
                         h_square_from_certificate, h_vector,
                         poincare_polynomial)
from .lattice import FacePoset, FVector, build_face_lattice, polytope_lattice

FORMAT_VERSION = 1

_GZ3_POINCARE_NOTE = (
    "Poincare polynomial expands to 1 + 2t^2 + 3t^4 + t^6; a published "
    "table prints t^3 where t^6 is meant.")


def _schema(name):
    text = resources.files("conicseq.schemas").joinpath(name).read_text()
    return json.loads(text)


def _validate(data, schema_name):
    schema = _schema(schema_name)
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.path))
    if errors:
        err = jsonschema.exceptions.best_match(errors)
        raise SchemaError(err.json_path, err.message)


def _load_json(data):
    if isinstance(data, (bytes, str)):
        try:
            return json.loads(data)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"invalid JSON: {exc}") from exc
    return data


def parse_rational(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed rational {text!r}: {exc}") from exc
    return value


def format_rational(value):
    return str(Fraction(value))


@dataclass(frozen=True)
class PolytopeDocument:
    """One polytope in exactly one representation."""

    name: str
    vrep: VRep = None
    hrep: HRep = None
    incidence: IncidenceMatrix = None

    @property
    def kind(self):
        if self.vrep is not None:
            return "vrep"
        if self.hrep is not None:
            return "hrep"
        return "incidence"


def parse_polytope(data) -> PolytopeDocument:
    """Parse and schema-check a polytope document."""
    raw = _load_json(data)
    _validate(raw, "polytope.schema.json")
    name = raw["name"]
    if "vrep" in raw:
        block = raw["vrep"]
        dim = block["ambient_dim"]
        points = []
        for i, row in enumerate(block["vertices"]):
            if len(row) != dim:
                raise SchemaError(f"$.vrep.vertices[{i}]",
                                  f"expected {dim} coordinates, got {len(row)}")
            points.append(tuple(parse_rational(c) for c in row))
        if len(set(points)) != len(points):
            raise SchemaError("$.vrep.vertices", "duplicate points")
        return PolytopeDocument(name, vrep=VRep(dim, tuple(points), name))
    if "hrep" in raw:
        block = raw["hrep"]
        dim = block["ambient_dim"]

        def rows(key):
            out = []
            for i, c in enumerate(block.get(key, [])):
                if len(c["normal"]) != dim:
                    raise SchemaError(f"$.hrep.{key}[{i}].normal",
                                      f"expected {dim} entries")
                out.append((tuple(c["normal"]), c["bound"]))
            return tuple(out)

        return PolytopeDocument(
            name, hrep=HRep(dim, rows("inequalities"), rows("equalities"),
                            name))
    block = raw["incidence"]
    try:
        inc = IncidenceMatrix(block["n_vertices"],
                              tuple(frozenset(f) for f in block["facets"]),
                              block["dim"])
    except ValueError as exc:
        raise SchemaError("$.incidence", str(exc)) from exc
    return PolytopeDocument(name, incidence=inc)


def emit_polytope(doc: PolytopeDocument) -> dict:
    out = {"format_version": FORMAT_VERSION, "name": doc.name}
    if doc.vrep is not None:
        out["vrep"] = {
            "ambient_dim": doc.vrep.ambient_dim,
            "vertices": [[format_rational(c) for c in p]
                         for p in doc.vrep.points],
        }
    elif doc.hrep is not None:
        out["hrep"] = {
            "ambient_dim": doc.hrep.ambient_dim,
            "inequalities": [{"normal": list(nrm), "bound": b}
                             for nrm, b in doc.hrep.inequalities],
            "equalities": [{"normal": list(nrm), "bound": b}
                           for nrm, b in doc.hrep.equalities],
        }
    else:
        out["incidence"] = {
            "n_vertices": doc.incidence.n_vertices,
            "dim": doc.incidence.dim,
            "facets": sorted(sorted(f) for f in doc.incidence.facets),
        }
    return out


@dataclass(frozen=True)
class BuiltPolytope:
    """A document together with its face lattice and vertex bookkeeping.

    `kept[dense_id]` is the index into the document's own vertex list (or
    into the sorted enumerated vertex list for inequality input); points
    of the input that are not vertices of the hull appear in `warnings`.
    """

    doc: PolytopeDocument
    poset: FacePoset
    kept: tuple
    warnings: tuple

    def to_document_vertex(self, dense_id):
        return self.kept[dense_id]

    def from_document_vertex(self, doc_id):
        try:
            return self.kept.index(doc_id)
        except ValueError:
            raise SchemaError("$.steps",
                              f"vertex {doc_id} is not a hull vertex") from None


def build_polytope(doc: PolytopeDocument) -> BuiltPolytope:
    """Turn any representation into a face lattice, recording warnings."""
    warnings = []
    if doc.kind == "vrep":
        vrep = doc.vrep
    elif doc.kind == "hrep":
        vrep = vertex_enumerate(doc.hrep)
    else:
        poset = build_face_lattice(doc.incidence)
        return BuiltPolytope(doc, poset,
                             tuple(range(doc.incidence.n_vertices)), ())
    if len(vrep.points) == 1:
        poset = polytope_lattice(vrep)
        return BuiltPolytope(doc, poset, (0,), ())
    inc = facet_enumerate(vrep)
    if inc.dropped:
        warnings.append(
            "dropped non-vertex input points at indices "
            + ", ".join(str(i) for i in inc.dropped))
    poset = build_face_lattice(inc)
    return BuiltPolytope(doc, poset, inc.kept, tuple(warnings))


# -- certificates -------------------------------------------------------------

def emit_certificate(built: BuiltPolytope, cert: ConicCertificate,
                     constraint: SearchConstraint) -> dict:
    poset = built.poset
    steps = []
    for step in cert.steps:
        face = poset.faces[step.max_face]
        steps.append({
            "vertex": built.to_document_vertex(step.vertex),
            "max_face_vertices": sorted(built.to_document_vertex(v)
                                        for v in face.vertex_set),
            "base_class": step.base_class.kind,
            "base_dim": step.base_class.dim,
            "base_f_vector": list(step.base_f_vector),
        })
    return {
        "format_version": FORMAT_VERSION,
        "polytope_name": built.doc.name,
        "constraint": constraint.value,
        "steps": steps,
        "terminal_vertex": built.to_document_vertex(cert.terminal_vertex),
    }


def parse_certificate(data, built: BuiltPolytope):
    """Parse a certificate document against a built polytope.

    Returns (certificate, constraint).  Faces are resolved through their
    vertex sets; a vertex set that names no face is a schema error.
    """
    raw = _load_json(data)
    _validate(raw, "certificate.schema.json")
    poset = built.poset
    steps = []
    for i, s in enumerate(raw["steps"]):
        dense = frozenset(built.from_document_vertex(v)
                          for v in s["max_face_vertices"])
        face_id = poset.by_vertex_set.get(dense)
        if face_id is None:
            raise SchemaError(
                f"$.steps[{i}].max_face_vertices",
                f"no face has vertex set {sorted(s['max_face_vertices'])}")
        steps.append(ConicStep(
            vertex=built.from_document_vertex(s["vertex"]),
            max_face=face_id,
            base_class=BaseClass(s["base_class"], s["base_dim"]),
            base_f_vector=FVector(tuple(s["base_f_vector"])),
        ))
    cert = ConicCertificate(raw["polytope_name"], tuple(steps),
                            built.from_document_vertex(raw["terminal_vertex"]))
    return cert, SearchConstraint(raw["constraint"])


# -- analysis -----------------------------------------------------------------

@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline can certify about one polytope."""

    name: str
    f_vector: FVector
    h_vector: tuple
    delta_necessary: bool
    verdicts: dict          # constraint value -> Verdict
    certificates: dict      # constraint value -> ConicCertificate or None
    h_square: tuple         # or None
    poincare: tuple         # or None
    cohomology: CohomologyReport
    warnings: tuple

    def to_json_dict(self):
        coh = []
        for degree, entry in enumerate(self.cohomology.entries):
            row = {"degree": degree, "status": entry.kind}
            if entry.value is not None:
                row["value"] = entry.value
            if entry.citation is not None:
                row["citation"] = entry.citation
            coh.append(row)
        return {
            "format_version": FORMAT_VERSION,
            "name": self.name,
            "f_vector": list(self.f_vector),
            "generating_function": list(self.f_vector),
            "h_vector": list(self.h_vector),
            "delta_necessary": self.delta_necessary,
            "verdicts": {k: v.value for k, v in sorted(self.verdicts.items())},
            "h_square": list(self.h_square) if self.h_square else None,
            "poincare": list(self.poincare) if self.poincare else None,
            "cohomology": coh,
            "warnings": list(self.warnings),
        }

    def to_text(self):
        lines = [f"polytope: {self.name}"]
        lines.append("f-vector: (" + ", ".join(map(str, self.f_vector)) + ")")
        phi = generating_function(self.f_vector)
        lines.append(f"face polynomial: {phi.pretty('x')}")
        lines.append("h-vector: (" + ", ".join(map(str, self.h_vector)) + ")")
        lines.append("h positivity (necessary for simplex bases): "
                     + ("yes" if self.delta_necessary else "no"))
        for key in ("any", "simplex", "cube", "simple"):
            lines.append(f"sequence with {key} bases: "
                         f"{self.verdicts[key].value}")
        if self.h_square:
            lines.append("h-square: ("
                         + ", ".join(map(str, self.h_square)) + ")")
        if self.poincare:
            lines.append("Poincare polynomial: "
                         + IntPolynomial(self.poincare).pretty("t"))
        lines.append("cohomology:")
        for degree, entry in enumerate(self.cohomology.entries):
            if entry.kind == "betti":
                detail = f"rank {entry.value} ({entry.citation})"
            elif entry.kind == "zero":
                detail = f"0 ({entry.citation})"
            else:
                detail = "undetermined"
            lines.append(f"  H^{degree}: {detail}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"


def analyze(built: BuiltPolytope, budget: int = None) -> AnalysisReport:
    """Run the full pipeline: invariants, all four searches, reports."""
    f = built.poset.f_vector()
    h = h_vector(f)
    verdicts = {}
    certs = {}
    for constraint in SearchConstraint:
        result = search_conic(built.poset, constraint, budget=budget)
        verdicts[constraint.value] = result.verdict
        certs[constraint.value] = result.certificate

    h_square = None
    if certs["cube"] is not None:
        h_square = tuple(h_square_from_certificate(certs["cube"]))
    poincare = None
    if certs["simplex"] is not None:
        poincare = tuple(poincare_polynomial(f, certs["simplex"]).coeffs)

    best_cert = (certs["simplex"] or certs["simple"] or certs["cube"]
                 or certs["any"])
    cohomology = cohomology_report(f, best_cert)

    warnings = list(built.warnings)
    if built.doc.name == "GZ3" and poincare is not None:
        warnings.append(_GZ3_POINCARE_NOTE)

    return AnalysisReport(
        name=built.doc.name,
        f_vector=f,
        h_vector=tuple(h),
        delta_necessary=delta_conic_necessary(f),
        verdicts=verdicts,
        certificates=certs,
        h_square=h_square,
        poincare=poincare,
        cohomology=cohomology,
        warnings=tuple(warnings),
    )


def emit_report(report: AnalysisReport, fmt: str = "json") -> str:
    if fmt == "text":
        return report.to_text()
    data = report.to_json_dict()
    _validate(data, "report.schema.json")
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def dumps_document(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
