"""Polynomial identities, h-vectors, Poincare polynomials, reports."""

import pytest

from conicseq import (FVector, IntPolynomial, SearchConstraint, VRep,
                      check_prop24, cohomology_report, cube_summand,
                      delta_conic_necessary, enumerate_all_sequences,
                      f_from_h, generating_function, h_from_certificate,
                      h_square_from_certificate, h_vector,
                      poincare_polynomial, polytope_lattice, search_conic,
                      simplex_summand, step_sum)
from conicseq.errors import (InconsistentWitness, NotCubeConic, NotDeltaConic)

ANY = SearchConstraint.ANY
SIMPLEX = SearchConstraint.ALL_SIMPLEX
CUBE = SearchConstraint.ALL_CUBE

X = IntPolynomial((0, 1))


class TestIntPolynomial:
    def test_trailing_zeros_are_trimmed(self):
        assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPolynomial((0, 0)).coeffs == ()

    def test_arithmetic(self):
        p = IntPolynomial((1, 1))
        assert (p * p).coeffs == (1, 2, 1)
        assert (p + 1).coeffs == (2, 1)
        assert (p ** 3).coeffs == (1, 3, 3, 1)
        assert p(10) == 11

    def test_pretty(self):
        assert IntPolynomial((16, 28, 14, 1)).pretty() == \
            "16 + 28x + 14x^2 + x^3"


class TestGeneratingFunction:
    def test_square(self):
        assert generating_function(FVector((4, 4, 1))).coeffs == (4, 4, 1)

    def test_bruhat_interval(self, corpus):
        phi = generating_function(corpus["bruhat-1324-4231"].f_vector())
        assert phi.coeffs == (16, 28, 14, 1)

    @pytest.mark.parametrize("d", range(1, 6))
    def test_simplex_identity(self, corpus, d):
        if d == 1:
            poset = polytope_lattice(VRep(1, ((0,),)))
        else:
            poset = corpus[f"simplex-{d - 1}"]
        phi = generating_function(poset.f_vector())
        assert 1 + X * phi == simplex_summand(d)

    @pytest.mark.parametrize("d", range(1, 6))
    def test_cube_identity(self, corpus, d):
        if d == 1:
            poset = polytope_lattice(VRep(1, ((0,),)))
        elif d == 2:
            poset = polytope_lattice(VRep(1, ((0,), (1,))))
        else:
            poset = corpus[f"cube-{d - 1}"]
        phi = generating_function(poset.f_vector())
        assert 1 + X * phi == cube_summand(d)


class TestStepSumIdentity:
    def test_square_by_hand(self, square):
        cert = search_conic(square, SIMPLEX).certificate
        # bases are a segment and two points:
        # 1 + (1 + x(2 + x)) + (1 + x) + (1 + x) = 4 + 4x + x^2
        assert step_sum(cert).coeffs == (4, 4, 1)
        assert check_prop24(cert, square.f_vector())

    def test_bipyramid(self, corpus):
        bp = corpus["bipyramid-3"]
        cert = search_conic(bp, ANY).certificate
        assert step_sum(cert).coeffs == (5, 9, 6, 1)
        assert check_prop24(cert, bp.f_vector())

    def test_bruhat_interval_displayed_sum(self, corpus):
        q = corpus["bruhat-1324-4231"]
        cert = search_conic(q, CUBE).certificate
        displayed = (1 + 4 * IntPolynomial((1, 1))
                     + 10 * IntPolynomial((1, 2, 1))
                     + IntPolynomial((1, 4, 4, 1)))
        assert step_sum(cert) == displayed
        assert displayed == generating_function(q.f_vector())

    def test_holds_for_every_enumerated_sequence(self, small_corpus):
        for name, poset in small_corpus.items():
            f = poset.f_vector()
            for cert in enumerate_all_sequences(poset, ANY, limit=60):
                assert check_prop24(cert, f), name


class TestHVector:
    def test_cube(self):
        assert tuple(h_vector(FVector((8, 12, 6, 1)))) == (1, 3, 3, 1)

    def test_octahedron_goes_negative(self):
        assert tuple(h_vector(FVector((6, 12, 8, 1)))) == (1, -1, 5, 1)

    def test_square(self):
        assert tuple(h_vector(FVector((4, 4, 1)))) == (1, 2, 1)

    def test_round_trip(self, corpus):
        for name, poset in corpus.items():
            f = poset.f_vector()
            assert tuple(f_from_h(h_vector(f))) == tuple(f), name


class TestDeltaConicNecessary:
    def test_octahedron_is_obstructed(self):
        assert not delta_conic_necessary(FVector((6, 12, 8, 1)))

    def test_cube_passes(self):
        assert delta_conic_necessary(FVector((8, 12, 6, 1)))

    def test_necessary_but_not_sufficient(self, corpus):
        q = corpus["bruhat-1324-4231"]
        assert tuple(h_vector(q.f_vector())) == (1, 3, 11, 1)
        assert delta_conic_necessary(q.f_vector())
        assert search_conic(q, SIMPLEX).verdict.value == "not-conic"


class TestHFromCertificate:
    def test_square(self, square):
        cert = search_conic(square, SIMPLEX).certificate
        assert tuple(h_from_certificate(cert)) == (1, 2, 1)

    def test_3_simplex(self, corpus):
        cert = search_conic(corpus["simplex-3"], SIMPLEX).certificate
        assert tuple(h_from_certificate(cert)) == (1, 1, 1, 1)

    def test_cube(self, corpus):
        cert = search_conic(corpus["cube-3"], SIMPLEX).certificate
        assert tuple(h_from_certificate(cert)) == (1, 3, 3, 1)

    def test_rejects_non_simplex_bases(self, corpus):
        cert = search_conic(corpus["bipyramid-3"], ANY).certificate
        with pytest.raises(NotDeltaConic):
            h_from_certificate(cert)

    def test_equals_h_vector_on_simple_corpus(self, corpus):
        simple = ([f"polygon-{n}" for n in range(3, 9)]
                  + [f"prism-{n}" for n in range(3, 9)]
                  + [f"simplex-{d}" for d in range(1, 5)]
                  + [f"cube-{d}" for d in range(2, 5)]
                  + ["permutohedron-4"])
        for name in simple:
            poset = corpus[name]
            result = search_conic(poset, SIMPLEX)
            assert result.verdict.value == "found", name
            assert tuple(h_from_certificate(result.certificate)) \
                == tuple(h_vector(poset.f_vector())), name


class TestHSquare:
    def test_bruhat_interval(self, corpus):
        cert = search_conic(corpus["bruhat-1324-4231"], CUBE).certificate
        assert tuple(h_square_from_certificate(cert)) == (1, 4, 10, 1)

    def test_square(self, square):
        cert = search_conic(square, CUBE).certificate
        assert tuple(h_square_from_certificate(cert)) == (1, 2, 1)

    def test_segment(self):
        seg = polytope_lattice(VRep(1, ((0,), (1,))))
        cert = search_conic(seg, CUBE).certificate
        assert tuple(h_square_from_certificate(cert)) == (1, 1)

    def test_cube_identity_reconstructs_face_polynomial(self, corpus):
        for name in ("bruhat-1324-4231", "polygon-4", "polygon-6"):
            poset = corpus[name]
            cert = search_conic(poset, CUBE).certificate
            hs = h_square_from_certificate(cert)
            total = IntPolynomial((1,))
            for k in range(1, len(hs)):
                total = total + hs[k] * cube_summand(k)
            assert total == generating_function(poset.f_vector()), name

    def test_rejects_triangle_bases(self, corpus):
        cert = search_conic(corpus["simplex-3"], SIMPLEX).certificate
        with pytest.raises(NotCubeConic):
            h_square_from_certificate(cert)


class TestPoincare:
    def test_gz3(self, corpus):
        gz = corpus["gz3"]
        cert = search_conic(gz, SIMPLEX).certificate
        poly = poincare_polynomial(gz.f_vector(), cert)
        assert poly.coeffs == (1, 0, 2, 0, 3, 0, 1)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_simplices(self, corpus, n):
        poset = corpus[f"simplex-{n}"]
        cert = search_conic(poset, SIMPLEX).certificate
        poly = poincare_polynomial(poset.f_vector(), cert)
        expected = [0] * (2 * n + 1)
        expected[0::2] = [1] * (n + 1)
        assert poly.coeffs == tuple(expected)

    def test_cube(self, corpus):
        poset = corpus["cube-3"]
        cert = search_conic(poset, SIMPLEX).certificate
        assert poincare_polynomial(poset.f_vector(), cert).coeffs \
            == (1, 0, 3, 0, 3, 0, 1)

    def test_value_at_one_counts_vertices(self, corpus):
        for name in ("gz3", "cube-3", "simplex-3", "polygon-7"):
            poset = corpus[name]
            cert = search_conic(poset, SIMPLEX).certificate
            poly = poincare_polynomial(poset.f_vector(), cert)
            assert poly(1) == poset.f_vector()[0], name

    def test_even_coefficients_are_the_h_vector(self, corpus):
        for name in ("gz3", "cube-3", "permutohedron-4", "prism-5"):
            poset = corpus[name]
            cert = search_conic(poset, SIMPLEX).certificate
            poly = poincare_polynomial(poset.f_vector(), cert)
            h = h_vector(poset.f_vector())
            assert tuple(poly.coefficient(2 * j) for j in range(len(h))) \
                == tuple(h), name

    def test_mismatched_witness_is_rejected(self, corpus, square):
        cert = search_conic(square, SIMPLEX).certificate
        with pytest.raises(InconsistentWitness):
            poincare_polynomial(corpus["cube-3"].f_vector(), cert)

    def test_non_simplex_witness_is_rejected(self, corpus):
        bp = corpus["bipyramid-3"]
        cert = search_conic(bp, ANY).certificate
        with pytest.raises(InconsistentWitness):
            poincare_polynomial(bp.f_vector(), cert)


class TestCohomologyReport:
    def test_bipyramid_with_simple_certificate(self, corpus):
        bp = corpus["bipyramid-3"]
        cert = search_conic(bp, SearchConstraint.ALL_SIMPLE).certificate
        report = cohomology_report(bp.f_vector(), cert)
        assert report.complex_dim == 6
        assert report[0].kind == "betti" and report[0].value == 1
        assert report[1].kind == "zero"
        assert report[5].kind == "zero"
        assert report[3].kind == "undetermined"

    def test_gz3_full_betti_list(self, corpus):
        gz = corpus["gz3"]
        cert = search_conic(gz, SIMPLEX).certificate
        report = cohomology_report(gz.f_vector(), cert)
        assert report.betti_numbers() == (1, 0, 2, 0, 3, 0, 1)

    def test_octahedron_without_certificate(self, corpus):
        report = cohomology_report(corpus["octahedron"].f_vector(), None)
        assert report[0].kind == "betti"
        assert report[1].kind == "zero"
        assert all(report[d].kind == "undetermined" for d in range(2, 7))

    def test_simplex_certificates_leave_nothing_undetermined(self, corpus):
        for name in ("cube-3", "simplex-4", "polygon-5"):
            poset = corpus[name]
            cert = search_conic(poset, SIMPLEX).certificate
            report = cohomology_report(poset.f_vector(), cert)
            assert report.betti_numbers() is not None, name
