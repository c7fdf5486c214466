"""Exhaustive enumeration of the admissible polytopes of one homogeneous space.

Rank 1 is a finite check over candidate endpoint pairs.  Rank 2 is a
depth-first walk over strictly counterclockwise vertex sequences around the
origin, drawn from the integer points of a search box together with the
color points, pruned facet-by-facet and certified afterwards: no accepted
polytope may touch the box, so enlarging the box provably changes nothing.

Accepted polytopes are reduced modulo the family's admissible symmetry group
to canonical representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as math_gcd

from .core import (
    BOUNDARY,
    INTERIOR,
    CombinatorialData,
    RankMismatch,
    check_reflexive,
    cone_over_face_meets_interior,
    valuation_cone_position,
)
from .geometry import (
    RationalPolytope,
    is_lattice_basis,
    transform_polytope,
    unimodular_inverse,
    vertices_ccw_store,
)
from .registry import FULL_UNIMODULAR, SHEAR, TRIVIAL, SymmetryGroup, symmetry_group


class BoundTooTight(RuntimeError):
    """An accepted polytope touched the search box; results may be incomplete."""


class NotReflexive(ValueError):
    pass


@dataclass(frozen=True)
class EnumConfig:
    box_bound: int = 5
    max_vertices: int = 8

    def __post_init__(self):
        # tiny boxes are admitted for oracle runs; production configs must
        # satisfy box_bound >= 4 and max_vertices >= 6 (asserted by the
        # catalog builder): the largest published polygon is a hexagon and
        # the largest vertex coordinate is 3
        assert self.box_bound >= 2 and self.max_vertices >= 3


@dataclass(frozen=True)
class CanonicalPolytope:
    polytope: RationalPolytope
    stabilizer_size: int

    def vertices(self):
        return self.polytope.vertices


# ---------------------------------------------------------------------------
# canonical forms


def _store_key(P: RationalPolytope):
    return (len(P.vertices), P.vertices)


def _full_unimodular_candidates(P: RationalPolytope):
    """All reduced positions of an integral polygon whose facets carry lattice
    bases: map each ordered edge pair to the standard basis, mirrors included."""
    assert all(c.denominator == 1 for v in P.vertices for c in v)
    k = len(P.vertices)
    mirrored = transform_polytope(((1, 0), (0, -1)), P)
    for Q in (P, mirrored):
        ws = Q.vertices
        for i in range(k):
            a, b = ws[i], ws[(i + 1) % k]
            M = ((int(a[0]), int(b[0])), (int(a[1]), int(b[1])))
            d = M[0][0] * M[1][1] - M[0][1] * M[1][0]
            if d in (1, -1):
                yield transform_polytope(unimodular_inverse(M), Q)


def canonical_form(
    data: CombinatorialData,
    P: RationalPolytope,
    group: SymmetryGroup | None = None,
    cfg: EnumConfig | None = None,
    fid: str | None = None,
    params: dict | None = None,
    check: bool = True,
) -> CanonicalPolytope:
    """The distinguished representative of P's orbit under the family group."""
    if group is None:
        group = symmetry_group(fid, params)
    if check and not check_reflexive(data, P).ok:
        raise NotReflexive("canonical_form expects an accepted polytope")
    cfg = cfg or EnumConfig()

    if group.kind == TRIVIAL:
        return CanonicalPolytope(P, 1)
    if group.kind == FULL_UNIMODULAR:
        cands = list(_full_unimodular_candidates(P))
        best = min(cands, key=_store_key)
        stab = sum(1 for Q in cands if Q == P)
        return CanonicalPolytope(best, max(1, stab))
    if group.kind == SHEAR:
        assert tuple(group.fixed_vector) == (1, 0), "shear families fix (1,0)"
        # The x-axis is fixed pointwise, so plain lexicographic minimization
        # diverges under k -> -inf.  Instead reduce each sign candidate by the
        # unique shear putting the leftmost top vertex into [0, h) where h is
        # the (integral) height; off-axis vertices are integral for every
        # shear family, so this is exact.
        signs = (1, -1) if group.reflection else (1,)
        cands = []
        stab = 0
        hp = max(v[1] for v in P.vertices)
        xp = min(v[0] for v in P.vertices if v[1] == hp)
        for s in signs:
            Q = transform_polytope(((1, 0), (0, s)), P)
            h = max(v[1] for v in Q.vertices)
            assert h.denominator == 1 and h > 0
            xt = min(v[0] for v in Q.vertices if v[1] == h)
            k = -(int(xt) // int(h))
            cands.append(transform_polytope(((1, k), (0, 1)), Q))
            # the only shear that could fix P at this sign realigns the top
            if h == hp:
                diff = xp - xt
                if diff.denominator == 1 and int(diff) % int(h) == 0:
                    k0 = int(diff) // int(h)
                    if transform_polytope(((1, k0), (0, s)), P) == P:
                        stab += 1
        best = min(cands, key=_store_key)
        return CanonicalPolytope(best, max(1, stab))
    # finite list
    best = P
    stab = 0
    for M in group.matrices:
        Q = transform_polytope(M, P)
        if Q == P:
            stab += 1
        if _store_key(Q) < _store_key(best):
            best = Q
    return CanonicalPolytope(best, max(1, stab))


# ---------------------------------------------------------------------------
# rank 1


def enumerate_rank1(data: CombinatorialData, fid=None, params=None, group=None):
    """All admissible segments, canonically deduplicated.

    A non-color endpoint whose ray meets the open valuation cone must by
    itself be a lattice basis, so candidate endpoints are -1, +1 and the
    color points.
    """
    if data.rank != 1:
        raise RankMismatch("enumerate_rank1 needs rank-1 data")
    if group is None:
        group = symmetry_group(fid, params)
    cands = {Fraction(-1), Fraction(1)}
    cands.update(q[0] for q in data.color_points())
    lows = sorted(c for c in cands if c < 0)
    highs = sorted(c for c in cands if c > 0)
    found = {}
    for lo in lows:
        for hi in highs:
            P = RationalPolytope(1, ((lo,), (hi,)))
            if check_reflexive(data, P).ok:
                cp = canonical_form(data, P, group=group, check=False)
                found[cp.polytope.vertices] = cp
    return sorted(found.values(), key=lambda c: _store_key(c.polytope))


# ---------------------------------------------------------------------------
# rank 2


def _candidate_points(data: CombinatorialData, cfg: EnumConfig):
    B = cfg.box_bound
    pts = {
        (Fraction(x), Fraction(y))
        for x in range(-B, B + 1)
        for y in range(-B, B + 1)
        if (x, y) != (0, 0)
        and valuation_cone_position(data, (x, y)) in (INTERIOR, BOUNDARY)
    }
    for q in data.color_points():
        if any(q):
            pts.add(q)
    return sorted(pts)


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _edge_ok(data, colors_pts, v, w) -> bool:
    """Facet-level feasibility of the edge v -> w (C4a/C4b where they apply)."""
    if not cone_over_face_meets_interior(data, (v, w)):
        return True
    # colors on the closed segment [v, w]
    d = (w[0] - v[0], w[1] - v[1])
    on_edge = []
    for c, q in colors_pts:
        r = (q[0] - v[0], q[1] - v[1])
        if _cross(d, r) != 0:
            continue
        t = (r[0] / d[0]) if d[0] else (r[1] / d[1])
        if 0 <= t <= 1:
            on_edge.append((c, q, t))
    rhos = [c.rho for c, _, _ in on_edge]
    if len(set(rhos)) != len(rhos):
        return False
    locs = {q for _, q, _ in on_edge}
    if not locs <= {v, w}:
        return False  # color strictly inside the edge
    rest = [p for p in (v, w) if p not in locs]
    if any(c.denominator != 1 for p in rest for c in p):
        return False
    basis = rhos + [tuple(int(c) for c in p) for p in rest]
    return is_lattice_basis(basis)


def enumerate_rank2(
    data: CombinatorialData,
    cfg: EnumConfig | None = None,
    fid=None,
    params=None,
    group=None,
):
    """Exhaustive counterclockwise vertex walk within the certified box."""
    if data.rank != 2:
        raise RankMismatch("enumerate_rank2 needs rank-2 data")
    cfg = cfg or EnumConfig()
    if group is None:
        group = symmetry_group(fid, params)
    cands = _candidate_points(data, cfg)
    colors_pts = list(zip(data.colors, data.color_points()))
    accepted = []

    # counterclockwise boundary keeps the interior (and the origin) on the
    # left of every directed edge: cross(edge, p - start) > 0 for interior p
    def close_and_check(seq):
        if len(seq) < 3:
            return
        v_last, v0 = seq[-1], seq[0]
        if _cross(v_last, v0) <= 0:
            return
        d_close = (v0[0] - v_last[0], v0[1] - v_last[1])
        d_prev = (v_last[0] - seq[-2][0], v_last[1] - seq[-2][1])
        d_first = (seq[1][0] - v0[0], seq[1][1] - v0[1])
        if _cross(d_prev, d_close) <= 0 or _cross(d_close, d_first) <= 0:
            return
        if _cross(d_close, (-v_last[0], -v_last[1])) <= 0:
            return
        for p in seq[1:-1]:
            if _cross(d_close, (p[0] - v_last[0], p[1] - v_last[1])) <= 0:
                return
        if not _edge_ok(data, colors_pts, v_last, v0):
            return
        P = RationalPolytope(2, vertices_ccw_store(seq))
        if check_reflexive(data, P).ok:
            accepted.append(P)

    def extend(seq, edges):
        close_and_check(seq)
        if len(seq) >= cfg.max_vertices:
            return
        v_prev = seq[-1]
        for w in cands:
            if w <= seq[0]:  # keep seq[0] the lexicographic minimum
                continue
            if w in seq:
                continue
            if _cross(v_prev, w) <= 0:
                continue
            d_new = (w[0] - v_prev[0], w[1] - v_prev[1])
            if len(seq) >= 2:
                d_prev = (v_prev[0] - seq[-2][0], v_prev[1] - seq[-2][1])
                if _cross(d_prev, d_new) <= 0:
                    continue
            # origin strictly inside the new edge halfplane
            if _cross(d_new, (-v_prev[0], -v_prev[1])) <= 0:
                continue
            # earlier vertices strictly inside the new edge halfplane ...
            if any(
                _cross(d_new, (p[0] - v_prev[0], p[1] - v_prev[1])) <= 0
                for p in seq[:-1]
            ):
                continue
            # ... and the new vertex strictly inside all committed halfplanes,
            # which rules out star-shaped walks
            if any(
                _cross(d, (w[0] - s[0], w[1] - s[1])) <= 0 for s, d in edges
            ):
                continue
            if not _edge_ok(data, colors_pts, v_prev, w):
                continue
            seq.append(w)
            edges.append((v_prev, d_new))
            extend(seq, edges)
            edges.pop()
            seq.pop()

    for v0 in cands:
        extend([v0], [])

    found = {}
    for P in accepted:
        cp = canonical_form(data, P, group=group, cfg=cfg, check=False)
        found[cp.polytope.vertices] = cp

    # certification on canonical representatives: an infinite symmetry group
    # (shears, the full unimodular group) always produces equivalent copies
    # stretched against any box, so rawly accepted polytopes may touch it;
    # each class, however, must have its distinguished representative well
    # inside, otherwise the box plausibly truncated the search
    B = cfg.box_bound
    for cp in found.values():
        P = cp.polytope
        if len(P.vertices) > cfg.max_vertices - 1:
            raise BoundTooTight(f"polytope with {len(P.vertices)} vertices at the cap")
        for v in P.vertices:
            if abs(v[0]) > B - 1 or abs(v[1]) > B - 1:
                raise BoundTooTight(f"canonical vertex {v} touches the search box")

    return sorted(found.values(), key=lambda c: _store_key(c.polytope))


def enumerate_polytopes(fid, params=None, cfg=None, data=None, group=None):
    """Dispatch by rank; the entry point used by the catalog builder."""
    from .registry import build

    params = dict(params or {})
    if data is None:
        data = build(fid, params)
    if group is None:
        group = symmetry_group(fid, params)
    if data.rank == 1:
        return enumerate_rank1(data, group=group)
    return enumerate_rank2(data, cfg=cfg, group=group)


def _angular_order(points):
    """Points sorted by angle around the origin, exactly (no floating point)."""

    def half(p):
        return 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1

    import functools

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        c = _cross(p, q)
        if c:
            return -1 if c > 0 else 1
        # same ray: nearer point first (any fixed tie-break works)
        return -1 if (abs(p[0]) + abs(p[1])) < (abs(q[0]) + abs(q[1])) else 1

    return sorted(points, key=functools.cmp_to_key(cmp))


def brute_force_oracle(data: CombinatorialData, cfg: EnumConfig, fid=None, params=None, group=None):
    """Independent check path over raw vertex subsets.

    Generates every subset of the candidate points (up to max_vertices) whose
    convex hull contains the origin strictly and has the subset itself as
    vertex set, then filters by the full reflexivity check alone.  No
    facet-level feasibility pruning, no lexicographic anchoring and no
    position filtering is used, so agreement with enumerate_rank2, which
    leans on all three, is a meaningful cross-check.  Subsets in convex
    position are produced by a backtracking scan of the angular order; for a
    subset of angularly sorted points, being exactly the vertex set of its
    hull with the origin strictly inside is equivalent to all consecutive
    angular steps and all boundary turns being strictly positive.
    """
    if data.rank != 2:
        raise RankMismatch("brute_force_oracle needs rank-2 data")
    if group is None:
        group = symmetry_group(fid, params)
    B = cfg.box_bound
    color_locs = {q for q in data.color_points() if any(q)}

    def eligible(q):
        # a vertex must be a color point or an integral point of the closed
        # valuation cone; stated inline so the oracle does not share the main
        # enumerator's candidate construction
        if q in color_locs:
            return True
        if any(c.denominator != 1 for c in q):
            return False
        return all(
            sum(si * ci for si, ci in zip(s, q)) <= 0 for s in data.sigma
        )

    pool = {
        (Fraction(x), Fraction(y))
        for x in range(-B, B + 1)
        for y in range(-B, B + 1)
        if (x, y) != (0, 0)
    }
    pool.update(color_locs)
    cands = _angular_order(sorted(q for q in pool if eligible(q)))
    # run the scan in scaled integer arithmetic
    scale = 1
    for q in cands:
        for c in q:
            scale = scale * c.denominator // math_gcd(scale, c.denominator)
    ints = [(int(q[0] * scale), int(q[1] * scale)) for q in cands]
    n = len(ints)
    found = {}

    def close(seq):
        if len(seq) < 3:
            return
        k = len(seq)
        for i in range(k):
            a, b, c = seq[i], seq[(i + 1) % k], seq[(i + 2) % k]
            if a[0] * b[1] - a[1] * b[0] <= 0:
                return
            if (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) <= 0:
                return
        verts = [(Fraction(x, scale), Fraction(y, scale)) for x, y in seq]
        P = RationalPolytope(2, vertices_ccw_store(verts))
        if check_reflexive(data, P).ok:
            cp = canonical_form(data, P, group=group, cfg=cfg, check=False)
            found[cp.polytope.vertices] = cp

    def walk(start, seq):
        close(seq)
        if len(seq) >= cfg.max_vertices:
            return
        for j in range(start, n):
            q = ints[j]
            if seq:
                p = seq[-1]
                if p[0] * q[1] - p[1] * q[0] <= 0:
                    continue
                if len(seq) >= 2:
                    r = seq[-2]
                    if (p[0] - r[0]) * (q[1] - p[1]) - (p[1] - r[1]) * (q[0] - p[0]) <= 0:
                        continue
                # the origin must be strictly left of every edge of any
                # closable cycle (a geometric fact, not a reflexivity prune)
                if (q[0] - p[0]) * (-p[1]) - (q[1] - p[1]) * (-p[0]) <= 0:
                    continue
            seq.append(q)
            walk(j + 1, seq)
            seq.pop()

    walk(0, [])
    return sorted(found.values(), key=lambda c: _store_key(c.polytope))
