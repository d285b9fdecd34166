"""Conic sequences of convex polytopes.

Decide whether a polytope can be taken apart by repeatedly deleting a
vertex together with the faces between it and its unique maximal face,
emit replayable certificates of the deletion order, and compute the
combinatorial invariants those certificates unlock: face-count
polynomials, h- and cube-count vectors, and Poincare polynomials and
vanishing statements for the rational cohomology of the associated
projective toric variety.
"""

from .builders import (Permutation, bipyramid, bruhat_interval_polytope,
                       bruhat_leq, cross_polytope, cube, gelfand_zetlin_3,
                       polygon, prism, product, pyramid, segment, simplex)
from .engine import (BaseClass, ConicCertificate, ConicStep, SearchConstraint,
                     SearchResult, Verdict, VerificationResult, classify_base,
                     cone_vertices, enumerate_all_sequences, search_conic,
                     verify_certificate, vertex_figure_poset)
from .errors import ConicseqError
from .geometry import (HRep, Hyperplane, IncidenceMatrix, VRep, affine_hull,
                       facet_enumerate, vertex_enumerate)
from .invariants import (CohomologyReport, DegreeStatus, HSquareVector,
                         HVector, IntPolynomial, check_prop24,
                         cohomology_report, cube_summand,
                         delta_conic_necessary, f_from_h, generating_function,
                         h_from_certificate, h_square_from_certificate,
                         h_vector, poincare_polynomial, simplex_summand,
                         step_sum)
from .io import (AnalysisReport, BuiltPolytope, PolytopeDocument, analyze,
                 build_polytope, emit_certificate, emit_polytope, emit_report,
                 parse_certificate, parse_polytope)
from .lattice import (Face, FacePoset, FVector, SubComplex,
                      build_face_lattice, cube_lattice, delete_interval,
                      f_vector, interval, polytope_lattice, poset_isomorphic,
                      simplex_lattice, unique_maximal, upper_set)

__version__ = "0.1.0"
