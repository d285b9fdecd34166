"""Shared polytope corpus, built once per session.

Everything downstream is pure and immutable, so lattices are safe to
share between tests.
"""

import pytest

from conicseq import (Permutation, bipyramid, bruhat_interval_polytope,
                      cross_polytope, cube, gelfand_zetlin_3, polygon,
                      polytope_lattice, prism, simplex, vertex_enumerate)


@pytest.fixture(scope="session")
def corpus():
    """name -> FacePoset for every polytope the tests lean on."""
    out = {}
    for n in range(3, 9):
        out[f"polygon-{n}"] = polytope_lattice(polygon(n))
        out[f"prism-{n}"] = polytope_lattice(prism(polygon(n)))
    for d in range(1, 5):
        out[f"simplex-{d}"] = polytope_lattice(simplex(d))
    for d in range(2, 5):
        out[f"cube-{d}"] = polytope_lattice(cube(d))
    out["octahedron"] = polytope_lattice(cross_polytope(3))
    for n in range(3, 7):
        out[f"bipyramid-{n}"] = polytope_lattice(bipyramid(polygon(n)))
    out["gz3"] = polytope_lattice(vertex_enumerate(gelfand_zetlin_3()))
    out["bruhat-1324-4231"] = polytope_lattice(bruhat_interval_polytope(
        Permutation.parse("1324"), Permutation.parse("4231"), 4))
    out["permutohedron-4"] = polytope_lattice(bruhat_interval_polytope(
        Permutation.parse("1234"), Permutation.parse("4321"), 4))
    return out


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """The corpus members with at most 10 vertices (oracle-sized)."""
    return {name: poset for name, poset in corpus.items()
            if poset.n_vertices <= 10}


@pytest.fixture(scope="session")
def square(corpus):
    return corpus["polygon-4"]
