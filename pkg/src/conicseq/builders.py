"""Constructors for the polytope zoo the test corpus draws from.

All outputs are exact-rational VReps (or an HRep for the small
Gelfand-Zetlin body), so every downstream computation stays exact.
Combinatorics is all that matters downstream, which lets the polygon use
parabola points and the (bi)pyramids gain an extra coordinate instead of
hunting for an orthogonal direction in place.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as all_permutations

from .errors import DimensionOutOfRange, NotComparable, SizeMismatch
from .geometry import HRep, VRep


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation."""

    one_line: tuple

    def __post_init__(self):
        ol = tuple(int(v) for v in self.one_line)
        object.__setattr__(self, "one_line", ol)
        if sorted(ol) != list(range(1, len(ol) + 1)):
            raise ValueError(f"{ol} is not a permutation of 1..{len(ol)}")

    @classmethod
    def parse(cls, text):
        """Accept '1324' or '1,3,2,4' (commas required past 9 symbols)."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(p) for p in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    def __len__(self):
        return len(self.one_line)

    def __str__(self):
        return "".join(str(v) for v in self.one_line)


def _check_dim(d, low=1, high=6):
    if not low <= d <= high:
        raise DimensionOutOfRange(f"dimension {d} outside [{low}, {high}]")


def simplex(d: int) -> VRep:
    """The d-simplex conv{e_1, ..., e_(d+1)} in (d+1)-space."""
    _check_dim(d)
    pts = []
    for i in range(d + 1):
        p = [0] * (d + 1)
        p[i] = 1
        pts.append(tuple(p))
    return VRep(d + 1, tuple(pts), name=f"simplex-{d}")


def cube(d: int) -> VRep:
    """The d-cube {0,1}^d."""
    _check_dim(d)
    pts = [tuple((v >> k) & 1 for k in range(d)) for v in range(2 ** d)]
    return VRep(d, tuple(pts), name=f"cube-{d}")


def cross_polytope(d: int) -> VRep:
    """The d-dimensional cross polytope conv{+-e_i}."""
    _check_dim(d)
    pts = []
    for i in range(d):
        for sign in (1, -1):
            p = [0] * d
            p[i] = sign
            pts.append(tuple(p))
    return VRep(d, tuple(pts), name=f"cross-{d}")


def polygon(n: int) -> VRep:
    """A convex n-gon: points on the parabola (i, i^2) are in convex
    position and the hull visits them in index order."""
    if n < 3:
        raise DimensionOutOfRange(f"a polygon needs >= 3 vertices, got {n}")
    return VRep(2, tuple((i, i * i) for i in range(n)), name=f"polygon-{n}")


def _barycenter(v: VRep):
    n = len(v.points)
    return tuple(sum(p[k] for p in v.points) * Fraction(1, n)
                 for k in range(v.ambient_dim))


def pyramid(base: VRep) -> VRep:
    """Cone over the base: apex one unit above the barycenter in a fresh
    coordinate, so orthogonality to the base's hull is exact."""
    b = _barycenter(base)
    pts = [p + (0,) for p in base.points]
    pts.append(b + (1,))
    return VRep(base.ambient_dim + 1, tuple(pts),
                name=f"pyramid({base.name})" if base.name else "pyramid")


def bipyramid(base: VRep) -> VRep:
    """Suspension of the base: apexes at height +-1 over the barycenter."""
    b = _barycenter(base)
    pts = [p + (0,) for p in base.points]
    pts.append(b + (1,))
    pts.append(b + (-1,))
    return VRep(base.ambient_dim + 1, tuple(pts),
                name=f"bipyramid({base.name})" if base.name else "bipyramid")


def product(a: VRep, b: VRep) -> VRep:
    """Cartesian product, concatenating coordinates pairwise."""
    pts = tuple(p + q for p in a.points for q in b.points)
    name = f"{a.name}x{b.name}" if a.name and b.name else "product"
    return VRep(a.ambient_dim + b.ambient_dim, pts, name=name)


def segment() -> VRep:
    return VRep(1, ((0,), (1,)), name="segment")


def prism(base: VRep) -> VRep:
    """segment x base."""
    out = product(segment(), base)
    return VRep(out.ambient_dim, out.points,
                name=f"prism({base.name})" if base.name else "prism")


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Bruhat order on permutations via sorted-prefix dominance.

    u <= w exactly when, for every k, the sorted first k entries of u are
    entrywise at most the sorted first k entries of w.
    """
    if len(u) != len(w):
        raise SizeMismatch(f"permutations of sizes {len(u)} and {len(w)}")
    n = len(u)
    for k in range(1, n):
        pu = sorted(u.one_line[:k])
        pw = sorted(w.one_line[:k])
        if any(a > b for a, b in zip(pu, pw)):
            return False
    return True


def bruhat_interval_polytope(u: Permutation, w: Permutation, n: int) -> VRep:
    """Convex hull of the one-line vectors of all permutations between
    u and w in Bruhat order."""
    if n > 5:
        raise DimensionOutOfRange(
            f"interval polytopes are capped at n = 5, got {n}")
    if len(u) != n or len(w) != n:
        raise SizeMismatch("permutation sizes differ from n")
    if not bruhat_leq(u, w):
        raise NotComparable(f"{u} is not below {w} in Bruhat order")
    pts = []
    for perm in all_permutations(range(1, n + 1)):
        sigma = Permutation(perm)
        if bruhat_leq(u, sigma) and bruhat_leq(sigma, w):
            pts.append(tuple(perm))
    return VRep(n, tuple(sorted(pts)), name=f"bruhat-{u}-{w}")


def gelfand_zetlin_3() -> HRep:
    """The 3-dimensional body 0 <= x1 <= 1 <= x2 <= 2 interleaved with
    x1 <= x3 <= x2, as an integer inequality system."""
    ineqs = (
        ((-1, 0, 0), 0),   # 0 <= x1
        ((1, 0, 0), 1),    # x1 <= 1
        ((0, -1, 0), -1),  # 1 <= x2
        ((0, 1, 0), 2),    # x2 <= 2
        ((1, 0, -1), 0),   # x1 <= x3
        ((0, -1, 1), 0),   # x3 <= x2
    )
    return HRep(3, ineqs, name="GZ3")
