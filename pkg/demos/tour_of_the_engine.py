#!/usr/bin/env python3
"""A guided tour: one homogeneous space from data to invariants.

We take the group compactification of GL2 (a spherical homogeneous space of
rank two inside a fourfold), look at its combinatorial data, test a few
polytopes by hand, enumerate everything, and read off the geometry.
"""

from fractions import Fraction

from sphfano import (
    build,
    check_reflexive,
    convex_hull,
    degree,
    dh_barycenter,
    enumerate_polytopes,
    fano_index,
    k_verdict,
    moment_polytope,
    picard_rank,
)

H = Fraction(1, 2)

# ---------------------------------------------------------------------------
# 1. The combinatorial data.
data = build("SL2sq.GL2", {})
print("rank", data.rank, "dim", data.dim)
print("spherical roots:", data.sigma)
for c in data.colors:
    print(f"color {c.label}: rho={c.rho} m={c.m} -> point {c.point()}")
print("density factors:", data.f.factors, "prefactor", data.f.prefactor)

# ---------------------------------------------------------------------------
# 2. Test a polytope by hand.  The triangle below is the projective
#    four-space compactification; the color point (1/2,1/2) is one vertex.
P = convex_hull([(H, H), (-1, 0), (1, -1)], 2)
verdict = check_reflexive(data, P)
print("\ntriangle accepted?", verdict.ok)

# A failed attempt: pushing the third vertex out breaks the facet basis
# condition on a facet whose cone meets the valuation cone.
bad = convex_hull([(H, H), (-1, 0), (2, -1)], 2)
print("stretched triangle accepted?", check_reflexive(data, bad).ok)
for cond, detail in check_reflexive(data, bad).violations:
    print("   ", cond, detail)

# ---------------------------------------------------------------------------
# 3. Enumerate every embedding of this space (there are eight).
classes = enumerate_polytopes("SL2sq.GL2", {})
print(f"\n{len(classes)} locally factorial Fano embeddings:")
for cp in classes:
    Q = cp.polytope
    kv = k_verdict(data, Q)
    print(
        "  vertices", [tuple(map(str, v)) for v in Q.vertices],
        "| pic", picard_rank(data, Q),
        "| degree", degree(data, Q),
        "| index", fano_index(data, Q),
        "| KE" if kv.is_stable() else "| not KE",
    )

# ---------------------------------------------------------------------------
# 4. A closer look at the P4 compactification.
dual_poly, kappa = moment_polytope(data, P)
print("\nmoment polytope (dual, translated by", kappa, "):")
print("  vertices", [tuple(map(str, v)) for v in dual_poly.vertices])
print("degree:", degree(data, P), "(projective four-space)")
print("barycenter:", [str(c) for c in dh_barycenter(data, P)])
print("verdict:", k_verdict(data, P).value)
