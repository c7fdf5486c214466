"""Exact rational polytope primitives in one and two dimensions.

All coordinates are `fractions.Fraction`; there is no floating point
anywhere.  Polytopes are stored by their vertices in a canonical order so
that equality of polytopes is equality of vertex tuples:

* rank 1: ``(low, high)``
* rank 2: strictly counterclockwise, starting from the lexicographically
  smallest vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction
Vec = tuple[Fraction, ...]


class DegenerateInput(ValueError):
    """Points do not span a full-dimensional polytope."""


class OriginNotInterior(ValueError):
    """Duality requires the origin strictly inside the polytope."""


class ZeroVector(ValueError):
    pass


def vec(*coords) -> Vec:
    return tuple(Fraction(c) for c in coords)


def _cross(a: Vec, b: Vec) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def primitive(v: tuple[int, ...]) -> tuple[int, ...]:
    """v divided by the gcd of its entries (v must be a nonzero integer vector)."""
    if all(c == 0 for c in v):
        raise ZeroVector("primitive() of the zero vector")
    g = 0
    for c in v:
        g = math.gcd(g, abs(c))
    return tuple(c // g for c in v)


def rational_primitive(v: Vec) -> tuple[int, ...]:
    """The primitive integer vector on the ray through a nonzero rational v."""
    den = math.lcm(*(c.denominator for c in v))
    return primitive(tuple(int(c * den) for c in v))


def is_lattice_basis(vs) -> bool:
    """True iff vs consists of exactly r integer vectors with determinant +-1."""
    vs = list(vs)
    if not vs:
        return False
    r = len(vs[0])
    if len(vs) != r or any(len(v) != r for v in vs):
        return False
    if any(Fraction(c).denominator != 1 for v in vs for c in v):
        return False
    ints = [[int(c) for c in v] for v in vs]
    if r == 1:
        d = ints[0][0]
    else:
        d = ints[0][0] * ints[1][1] - ints[0][1] * ints[1][0]
    return d in (1, -1)


@dataclass(frozen=True)
class Facet:
    """Supporting hyperplane {x : <normal, x> = support} with <normal, x> <= support on P.

    The normal is a primitive integer vector; incident_vertices index into
    the polytope's stored vertex list.
    """

    normal: tuple[int, ...]
    support: Fraction
    incident_vertices: tuple[int, ...]


@dataclass(frozen=True)
class RationalPolytope:
    rank: int
    vertices: tuple[Vec, ...]

    def __post_init__(self):
        if self.rank == 1:
            assert len(self.vertices) == 2 and self.vertices[0] < self.vertices[1]
        else:
            assert len(self.vertices) >= 3

    def facets(self) -> tuple[Facet, ...]:
        return facets(self)

    def contains(self, x: Vec, strict: bool = False) -> bool:
        return contains(self, x, strict)


def convex_hull(points, rank: int) -> RationalPolytope:
    """Hull of rational points, stored canonically; non-extreme points are dropped."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if rank == 1:
        if len(pts) < 2:
            raise DegenerateInput("rank-1 hull needs two distinct points")
        return RationalPolytope(1, (pts[0], pts[-1]))

    if len(pts) < 3:
        raise DegenerateInput("rank-2 hull needs three points")

    # Andrew's monotone chain; strict inequalities drop collinear points.
    def chain(seq):
        out: list[Vec] = []
        for p in seq:
            while len(out) >= 2 and _cross(
                (out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                (p[0] - out[-1][0], p[1] - out[-1][1]),
            ) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear")
    # counterclockwise from the lexicographic minimum (pts[0] = hull[0] already
    # lexmin, but the chain above is clockwise-free; rotate defensively)
    k = hull.index(min(hull))
    hull = hull[k:] + hull[:k]
    return RationalPolytope(2, tuple(hull))


def vertices_ccw_store(verts) -> tuple[Vec, ...]:
    """Canonical storage order for a list already forming a convex ccw cycle."""
    verts = [tuple(Fraction(c) for c in v) for v in verts]
    k = verts.index(min(verts))
    return tuple(verts[k:] + verts[:k])


def facets(P: RationalPolytope) -> tuple[Facet, ...]:
    if P.rank == 1:
        lo, hi = P.vertices
        return (
            Facet((-1,), -lo[0], (0,)),
            Facet((1,), hi[0], (1,)),
        )
    out = []
    k = len(P.vertices)
    for i in range(k):
        a = P.vertices[i]
        b = P.vertices[(i + 1) % k]
        d = (b[0] - a[0], b[1] - a[1])
        n = rational_primitive((d[1], -d[0]))  # outward normal for ccw order
        out.append(Facet(n, n[0] * a[0] + n[1] * a[1], (i, (i + 1) % k)))
    return tuple(out)


def contains(P: RationalPolytope, x, strict: bool = False) -> bool:
    x = tuple(Fraction(c) for c in x)
    for f in facets(P):
        v = sum(n * c for n, c in zip(f.normal, x))
        if v > f.support or (strict and v == f.support):
            return False
    return True


def dual(P: RationalPolytope) -> RationalPolytope:
    """{y : <x, y> >= -1 for all x in P}; an involution on polytopes with 0 interior."""
    origin = (Fraction(0),) * P.rank
    if not contains(P, origin, strict=True):
        raise OriginNotInterior("dual() needs 0 strictly inside")
    verts = [tuple(Fraction(-n, 1) / f.support for n in f.normal) for f in facets(P)]
    if P.rank == 1:
        return convex_hull(verts, 1)
    return RationalPolytope(2, vertices_ccw_store(verts))


def lattice_points(P: RationalPolytope) -> list[tuple[int, ...]]:
    """All integer points of P, boundary included, in lexicographic order."""
    if P.rank == 1:
        lo, hi = P.vertices[0][0], P.vertices[1][0]
        return [(x,) for x in range(math.ceil(lo), math.floor(hi) + 1)]
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    out = []
    for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        for y in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
            if contains(P, (Fraction(x), Fraction(y))):
                out.append((x, y))
    return out


class Polynomial:
    """Sparse polynomial over Q in `rank` variables: exponent tuple -> coefficient."""

    __slots__ = ("rank", "coeffs")

    def __init__(self, rank: int, coeffs=None):
        self.rank = rank
        self.coeffs: dict[tuple[int, ...], Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[tuple(e)] = c

    @staticmethod
    def constant(rank: int, c) -> "Polynomial":
        return Polynomial(rank, {(0,) * rank: Fraction(c)})

    @staticmethod
    def affine(rank: int, const, linear) -> "Polynomial":
        """const + sum(linear[i] * x_i)."""
        coeffs = {(0,) * rank: Fraction(const)}
        for i, a in enumerate(linear):
            e = tuple(1 if j == i else 0 for j in range(rank))
            coeffs[e] = Fraction(a)
        return Polynomial(rank, coeffs)

    @staticmethod
    def monomial(rank: int, exponents, c=1) -> "Polynomial":
        return Polynomial(rank, {tuple(exponents): Fraction(c)})

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.rank, out)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            return Polynomial(self.rank, out)
        return Polynomial(self.rank, {e: c * Fraction(other) for e, c in self.coeffs.items()})

    __rmul__ = __mul__

    def substitute(self, exprs: list["Polynomial"]) -> "Polynomial":
        """Plug in one polynomial per variable (used for affine changes of variables)."""
        rank = exprs[0].rank
        result = Polynomial(rank)
        for e, c in self.coeffs.items():
            term = Polynomial.constant(rank, c)
            for var, power in enumerate(e):
                for _ in range(power):
                    term = term * exprs[var]
            result = result + term
        return result

    def eval(self, x) -> Fraction:
        x = [Fraction(c) for c in x]
        total = Fraction(0)
        for e, c in self.coeffs.items():
            t = c
            for xi, p in zip(x, e):
                t *= xi**p
            total += t
        return total

    def degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=0)

    def __repr__(self):
        return f"Polynomial({self.rank}, {self.coeffs!r})"


def _simplex_monomial_integral(a: int, b: int) -> Fraction:
    # int over {u,v >= 0, u+v <= 1} of u^a v^b = a! b! / (a+b+2)!
    return Fraction(math.factorial(a) * math.factorial(b), math.factorial(a + b + 2))


def integrate(P: RationalPolytope, f: Polynomial) -> Fraction:
    """Exact integral of f over P with respect to Lebesgue measure."""
    if P.rank == 1:
        lo, hi = P.vertices[0][0], P.vertices[1][0]
        total = Fraction(0)
        for e, c in f.coeffs.items():
            k = e[0]
            total += c * (hi ** (k + 1) - lo ** (k + 1)) / (k + 1)
        return total

    # Fan triangulation from the first stored vertex, each triangle mapped
    # affinely onto the standard simplex.
    v0 = P.vertices[0]
    total = Fraction(0)
    for i in range(1, len(P.vertices) - 1):
        v1, v2 = P.vertices[i], P.vertices[i + 1]
        e1 = (v1[0] - v0[0], v1[1] - v0[1])
        e2 = (v2[0] - v0[0], v2[1] - v0[1])
        det = e1[0] * e2[1] - e1[1] * e2[0]
        if det == 0:
            continue
        # x = v0 + u e1 + v e2
        xs = Polynomial.affine(2, v0[0], (e1[0], e2[0]))
        ys = Polynomial.affine(2, v0[1], (e1[1], e2[1]))
        g = f.substitute([xs, ys])
        part = Fraction(0)
        for e, c in g.coeffs.items():
            part += c * _simplex_monomial_integral(e[0], e[1])
        total += abs(det) * part
    return total


# ---------------------------------------------------------------------------
# integer matrices and Smith normal form


def mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0])))
        for i in range(len(A))
    )


def mat_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def snf(A):
    """Smith normal form: returns (U, S, V) with U*A*V = S.

    U and V are unimodular; S is diagonal with nonnegative entries and
    d_i | d_{i+1}.
    """
    A = [list(row) for row in A]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [list(r) for r in mat_identity(m)]
    V = [list(r) for r in mat_identity(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):  # row_i += q * row_j
        A[i] = [a + q * b for a, b in zip(A[i], A[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, q):  # col_i += q * col_j
        for row in A:
            row[i] += q * row[j]
        for row in V:
            row[i] += q * row[j]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    def diagonalize():
        t = 0
        while t < min(m, n):
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] != 0 and (
                        pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])
                    ):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            while True:
                done = True
                for i in range(t + 1, m):
                    if A[i][t]:
                        add_row(i, t, -(A[i][t] // A[t][t]))
                        if A[i][t]:  # remainder became the smaller pivot
                            swap_rows(i, t)
                            done = False
                for j in range(t + 1, n):
                    if A[t][j]:
                        add_col(j, t, -(A[t][j] // A[t][t]))
                        if A[t][j]:
                            swap_cols(j, t)
                            done = False
                if done:
                    break
            if A[t][t] < 0:
                negate_row(t)
            t += 1

    diagonalize()
    # enforce d_i | d_{i+1}: fold the offending entry back in and re-reduce;
    # each pass strictly shrinks a diagonal entry, so this terminates
    while True:
        bad = None
        for i in range(min(m, n) - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a if a else b:
                bad = i
                break
        if bad is None:
            break
        add_col(bad, bad + 1, 1)
        diagonalize()

    S = tuple(tuple(row) for row in A)
    return tuple(tuple(r) for r in U), S, tuple(tuple(r) for r in V)


def det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def unimodular_inverse(M):
    """Inverse of a 2x2 or 1x1 integer matrix with determinant +-1."""
    if len(M) == 1:
        return ((M[0][0],),)
    d = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    assert d in (1, -1)
    return (
        (M[1][1] * d, -M[0][1] * d),
        (-M[1][0] * d, M[0][0] * d),
    )


def apply_matrix(M, v):
    return tuple(sum(Fraction(M[i][j]) * v[j] for j in range(len(v))) for i in range(len(M)))


def transform_polytope(M, P: RationalPolytope) -> RationalPolytope:
    """Image of P under an invertible integer matrix, restored to canonical order."""
    imgs = [apply_matrix(M, v) for v in P.vertices]
    if P.rank == 1:
        return convex_hull(imgs, 1)
    d = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if d < 0:
        imgs.reverse()
    return RationalPolytope(2, vertices_ccw_store(imgs))


# ---------------------------------------------------------------------------
# serialization of rationals and vectors ("p/q", "(p/q,r/s)")


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s.strip())


def vec_str(v) -> str:
    return "(" + ",".join(rat_str(c) for c in v) + ")"


def parse_vec(s: str) -> Vec:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad vector literal: {s!r}")
    return tuple(parse_rat(t) for t in s[1:-1].split(","))
