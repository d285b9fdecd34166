"""Polynomial invariants of face counts and certified cohomology reports.

All coefficients are Python ints, so every identity below is exact:

* the face-count generating polynomial and its simplex/cube forms,
* the h-vector (coefficients of the (x-1)-shifted face polynomial),
* the cube-count vector h_square,
* the step-sum identity tying a certificate's bases to the face counts,
* Poincare polynomials and per-degree cohomology statements for the
  projective toric variety attached to the polytope.
"""

from dataclasses import dataclass
from math import comb

from .engine import ConicCertificate
from .errors import InconsistentWitness, NotCubeConic, NotDeltaConic
from .lattice import FVector


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; index = degree, trailing zeros trimmed."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def x_plus(cls, a):
        """The monic linear polynomial x + a."""
        return cls((a, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(
            (self.coeffs[k] if k < len(self.coeffs) else 0)
            + (other.coeffs[k] if k < len(other.coeffs) else 0)
            for k in range(n)))

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        result = IntPolynomial((1,))
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def coefficient(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def pretty(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                term = var if k == 1 else f"{var}^{k}"
                parts.append(term if c == 1 else f"{c}{term}")
        return " + ".join(parts)


@dataclass(frozen=True)
class HVector:
    """Entries (h_0, ..., h_n); negative entries occur for non-simple input."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class HSquareVector:
    """Cube-count entries (h_0, ..., h_n) of a cube-based certificate."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def generating_function(f: FVector) -> IntPolynomial:
    """Face-count polynomial: coefficient j is the number of j-faces."""
    return IntPolynomial(tuple(f))


def simplex_summand(d: int) -> IntPolynomial:
    """1 + x * (face polynomial of the (d-1)-simplex) = (x+1)^d."""
    return IntPolynomial.x_plus(1) ** d


def cube_summand(d: int) -> IntPolynomial:
    """1 + x * (face polynomial of the (d-1)-cube) = 1 + x(x+2)^(d-1)."""
    return 1 + IntPolynomial((0, 1)) * IntPolynomial.x_plus(2) ** (d - 1)


def step_sum(cert: ConicCertificate) -> IntPolynomial:
    """1 + sum over steps of (1 + x * base face polynomial).

    For a valid certificate this reproduces the polytope's face-count
    polynomial; the leading 1 accounts for the terminal vertex.
    """
    x = IntPolynomial((0, 1))
    total = IntPolynomial((1,))
    for step in cert.steps:
        total = total + 1 + x * generating_function(step.base_f_vector)
    return total


def check_prop24(cert: ConicCertificate, f: FVector) -> bool:
    """Does the certificate's step sum equal the face-count polynomial?"""
    return step_sum(cert) == generating_function(f)


def h_vector(f: FVector) -> HVector:
    """The unique integer solution of sum f_k (x-1)^k = sum h_k x^k."""
    n = f.dim
    shifted = IntPolynomial.zero()
    for k, fk in enumerate(f):
        shifted = shifted + fk * IntPolynomial.x_plus(-1) ** k
    return HVector(tuple(shifted.coefficient(k) for k in range(n + 1)))


def f_from_h(h: HVector) -> FVector:
    """Inverse of `h_vector`: expand sum h_k (x+1)^k."""
    poly = IntPolynomial.zero()
    for k, hk in enumerate(h):
        poly = poly + hk * IntPolynomial.x_plus(1) ** k
    return FVector(tuple(poly.coefficient(k) for k in range(len(h))))


def delta_conic_necessary(f: FVector) -> bool:
    """Positivity of h_1..h_n: necessary (never sufficient) for a
    sequence whose bases are all simplices."""
    h = h_vector(f)
    return all(h[k] >= 1 for k in range(1, len(h)))


def h_from_certificate(cert: ConicCertificate) -> HVector:
    """Count simplex bases by dimension: h_k = #((k-1)-simplex steps), h_0 = 1."""
    top_dim = max((s.base_class.dim for s in cert.steps), default=-1)
    counts = [0] * (top_dim + 2)
    counts[0] = 1
    for step in cert.steps:
        if step.base_class.kind != "simplex":
            raise NotDeltaConic(f"base {step.base_class} is not a simplex")
        counts[step.base_class.dim + 1] += 1
    return HVector(tuple(counts))


def h_square_from_certificate(cert: ConicCertificate) -> HSquareVector:
    """Count cube bases by dimension: entry k counts (k-1)-cube steps.

    Points and segments count as the 0- and 1-cube.  Entry 0 is 1 for the
    terminal vertex, which makes the identity
    face_poly = 1 + sum_k h_k (1 + x(x+2)^(k-1)) come out exactly.
    """
    top_dim = max((s.base_class.dim for s in cert.steps), default=-1)
    counts = [0] * (top_dim + 2)
    counts[0] = 1
    for step in cert.steps:
        cls = step.base_class
        if cls.kind == "cube" or (cls.kind == "simplex" and cls.dim <= 1):
            expected = tuple(comb(cls.dim, k) * 2 ** (cls.dim - k)
                             for k in range(cls.dim)) + (1,)
            if tuple(step.base_f_vector) != expected:
                raise NotCubeConic(
                    f"step base f-vector {tuple(step.base_f_vector)} is not "
                    f"that of the {cls.dim}-cube")
            counts[cls.dim + 1] += 1
        else:
            raise NotCubeConic(f"base {cls} is not a cube")
    return HSquareVector(tuple(counts))


def poincare_polynomial(f: FVector, witness: ConicCertificate) -> IntPolynomial:
    """Expand sum f_k (t^2 - 1)^k; valid when the witness uses only
    simplex bases.

    The even coefficients are the h-vector entries and give the Betti
    numbers of the associated projective toric variety; odd coefficients
    vanish identically.  Raises `InconsistentWitness` when the witness
    and the face counts disagree (equivalently, when a negative
    coefficient appears).
    """
    try:
        h_wit = h_from_certificate(witness)
    except NotDeltaConic as exc:
        raise InconsistentWitness(str(exc)) from exc
    h = h_vector(f)
    if tuple(h_wit) != tuple(h):
        raise InconsistentWitness(
            f"witness base counts {tuple(h_wit)} differ from the h-vector "
            f"{tuple(h)} of the face counts")
    coeffs = []
    for k, hk in enumerate(h):
        if hk < 0:
            raise InconsistentWitness(f"negative coefficient h_{k} = {hk}")
        coeffs.extend([hk, 0])
    return IntPolynomial(tuple(coeffs))


# -- cohomology reports ------------------------------------------------------

CITE_CONNECTED = "connected variety"
CITE_SIMPLY_CONNECTED = "projective toric varieties are simply connected"
CITE_SIMPLE_BASES = ("odd cohomology above half the real dimension vanishes "
                     "when every cone base is simple")
CITE_SIMPLEX_BASES = ("odd cohomology vanishes when every cone base is a "
                      "simplex")
CITE_BETTI_FROM_H = ("even Betti numbers equal the h-vector when every cone "
                     "base is a simplex")


@dataclass(frozen=True)
class DegreeStatus:
    """What is known about one cohomology degree."""

    kind: str  # "betti" | "zero" | "undetermined"
    value: int = None
    citation: str = None

    @classmethod
    def betti(cls, value, citation):
        return cls("betti", value, citation)

    @classmethod
    def zero(cls, citation):
        return cls("zero", None, citation)

    @classmethod
    def undetermined(cls):
        return cls("undetermined")


@dataclass(frozen=True)
class CohomologyReport:
    """Per-degree rational cohomology statements for degrees 0..2n."""

    complex_dim: int  # real dimension 2n of the variety
    entries: tuple

    def __getitem__(self, degree):
        return self.entries[degree]

    def betti_numbers(self):
        """The full Betti list, or None if any degree is undetermined."""
        if any(e.kind == "undetermined" for e in self.entries):
            return None
        return tuple(e.value if e.kind == "betti" else 0
                     for e in self.entries)


def cohomology_report(f: FVector, cert: ConicCertificate = None) -> CohomologyReport:
    """Assemble everything the certificate justifies about cohomology.

    Degree 0 is rank one and degree 1 vanishes unconditionally.  With an
    all-simple certificate, odd degrees above n vanish; with an
    all-simplex certificate, every odd degree vanishes and the even
    degrees carry the h-vector.  Anything else stays undetermined.
    """
    n = f.dim
    entries = [DegreeStatus.undetermined() for _ in range(2 * n + 1)]
    entries[0] = DegreeStatus.betti(1, CITE_CONNECTED)
    if n >= 1:
        entries[1] = DegreeStatus.zero(CITE_SIMPLY_CONNECTED)

    all_simple = cert is not None and all(
        s.base_class.is_simple for s in cert.steps)
    all_simplex = cert is not None and all(
        s.base_class.kind == "simplex" for s in cert.steps)

    if all_simple:
        for degree in range(1, 2 * n + 1, 2):
            if degree > n:
                entries[degree] = DegreeStatus.zero(CITE_SIMPLE_BASES)
    if all_simplex:
        h = h_vector(f)
        for degree in range(3, 2 * n + 1, 2):
            entries[degree] = DegreeStatus.zero(CITE_SIMPLEX_BASES)
        for j in range(1, n + 1):
            entries[2 * j] = DegreeStatus.betti(h[j], CITE_BETTI_FROM_H)
    return CohomologyReport(2 * n, tuple(entries))
