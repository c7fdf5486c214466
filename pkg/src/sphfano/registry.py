"""Registry of the spherical homogeneous-space families and their data.

Each entry turns one classification case into a parameterized constructor of
`CombinatorialData`, together with the finite list of admissible parameter
values and the lattice-symmetry group under which embeddings of that family
are considered equivalent.

Parameter bounds are hard-coded from the impossibility arguments in the
classification (each carries a short comment); a test exercises the first
out-of-bound value of several families and checks that the enumerator finds
nothing there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Color, CombinatorialData, dh
from .geometry import apply_matrix, unimodular_inverse


class UnknownFamily(KeyError):
    pass


class ParamsOutOfDomain(ValueError):
    pass


# symmetry group kinds
TRIVIAL = "Trivial"
FINITE = "FiniteList"
FULL_UNIMODULAR = "FullUnimodular"
SHEAR = "ShearClass"


@dataclass(frozen=True)
class SymmetryGroup:
    kind: str
    # FiniteList: unimodular matrices (identity included) with color permutations
    matrices: tuple = ()
    color_perms: tuple = ()
    # ShearClass: the primitive vector fixed by every element; reflection allowed
    fixed_vector: tuple = ()
    reflection: bool = True


@dataclass(frozen=True)
class FamilySpec:
    id: str
    dim: int
    rank: int
    param_domain: str
    param_bound: tuple[tuple[tuple[str, int], ...], ...]
    product_note: str | None = None
    symmetry_source: str = "stated"

    def params_list(self) -> list[dict]:
        return [dict(p) for p in self.param_bound]


def _pb(*dicts) -> tuple:
    return tuple(tuple(sorted(d.items())) for d in dicts)


def params_key(params: dict) -> tuple:
    return tuple(sorted(params.items()))


_ID = ((1, 0), (0, 1))
_SWAP = ((0, 1), (1, 0))
_FLIPY = ((1, 0), (0, -1))
_NEG1 = ((-1,),)
_ID1 = ((1,),)


def _basis_str(coeffs: dict[str, int]) -> str:
    parts = []
    for sym, c in coeffs.items():
        if c == 0:
            continue
        if c == 1:
            term = sym
        elif c == -1:
            term = f"-{sym}"
        else:
            term = f"{c}{sym}"
        parts.append(term if not parts or term.startswith("-") else f"+{term}")
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Table of projective homogeneous spaces of dimension <= 4 (static rank-0 data)

RANK0_TABLE = (
    ("SL2", "P1", 1, 1, 2),
    ("SL3", "P2", 2, 1, 9),
    ("SL2^2", "P1xP1", 2, 2, 8),
    ("SL3", "W", 3, 2, 48),
    ("Sp4", "Q3", 3, 1, 54),
    ("Sp4", "P3", 3, 1, 64),
    ("SL2^3", "P1xP1xP1", 3, 3, 48),
    ("SL3xSL2", "P2xP1", 3, 2, 54),
    ("SL4", "P3", 3, 1, 64),
    ("SL3xSL2", "WxP1", 4, 3, 384),
    ("Sp4xSL2", "Q3xP1", 4, 2, 432),
    ("Sp4xSL2", "P3xP1", 4, 2, 512),
    ("SL4", "Q4", 4, 1, 512),
    ("SL2^4", "P1^4", 4, 4, 384),
    ("SL3xSL2^2", "P2xP1xP1", 4, 3, 432),
    ("SL3^2", "P2xP2", 4, 2, 486),
    ("SL4xSL2", "P3xP1", 4, 2, 512),
    ("SL5", "P4", 4, 1, 625),
)


def rank0_entries():
    """The static (group, space, dim, pic, degree) records, as published."""
    return list(RANK0_TABLE)


# ---------------------------------------------------------------------------
# family table


FAMILY_ROWS: list[FamilySpec] = []


def _row(spec: FamilySpec):
    FAMILY_ROWS.append(spec)
    return spec


# dimension 1
_row(FamilySpec("toric", 1, 1, "n = 1", _pb({"n": 1})))

# dimension 2, rank 1
_row(FamilySpec("SL2.T", 2, 1, "no parameters", _pb({})))
_row(FamilySpec("SL2.N", 2, 1, "no parameters", _pb({})))
_row(
    FamilySpec(
        "SL2xGm.horo",
        2,
        1,
        "n = 1, a1 in {0, 1}",  # a1 >= 2 has no locally factorial Fano embedding
        _pb({"n": 1, "a1": 0}, {"n": 1, "a1": 1}),
        product_note="a1=0: product P1 x P1 with the toric factor",
    )
)

# dimension 2, rank 2
_row(FamilySpec("toric", 2, 2, "n = 2", _pb({"n": 2})))

# dimension 3, rank 1
_row(FamilySpec("SL2sq.diagSL2", 3, 1, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.NdiagSL2", 3, 1, "no parameters", _pb({})))
_row(
    FamilySpec(
        "SL2sq.horo1",
        3,
        1,
        "a1 >= |a2|, both in {-1, 0, 1}",  # |ai| >= 2 excluded by the color conditions
        _pb({"a1": 0, "a2": 0}, {"a1": 1, "a2": 0}, {"a1": 1, "a2": 1}, {"a1": 1, "a2": -1}),
        product_note="a2=0: product of P1 with a rank-one horospherical SL2xGm space",
    )
)
_row(
    FamilySpec(
        "SL3.horo.Q",
        3,
        1,
        "a1 in {0, 1, 2}",  # a1/3 interior forces a1 <= 2; vertex forces a1 = 1
        _pb({"a1": 0}, {"a1": 1}, {"a1": 2}),
        product_note="a1=0: product P2 x Gm",
    )
)

# dimension 3, rank 2
_row(
    FamilySpec(
        "SL2xGm.T",
        3,
        2,
        "a1 in {0, 1, 2}",  # no reflexive polytopes for a1 >= 3
        _pb({"a1": 0}, {"a1": 1}, {"a1": 2}),
        product_note="a1=0: product of SL2/T surface with the torus factor",
    )
)
_row(FamilySpec("SL2xGm.N.product", 3, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2xGm.N.diag", 3, 2, "no parameters", _pb({})))
_row(
    FamilySpec(
        "SL2xGm.horo",
        3,
        2,
        "n = 2, a1 in {0, 1}",
        _pb({"n": 2, "a1": 0}, {"n": 2, "a1": 1}),
        product_note="a1=0: products of P1 with the five toric surfaces",
    )
)

# dimension 4, rank 1
_row(FamilySpec("SL3.sym", 4, 1, "no parameters", _pb({})))
_row(FamilySpec("SL3.horosym", 4, 1, "no parameters", _pb({})))
_row(FamilySpec("SL3.Nhorosym", 4, 1, "no parameters", _pb({})))  # zero embeddings
_row(
    FamilySpec(
        "SL3.horo.B",
        4,
        1,
        "a1 >= |a2|, both in {-1, 0, 1}",
        _pb({"a1": 0, "a2": 0}, {"a1": 1, "a2": 0}, {"a1": 1, "a2": 1}, {"a1": 1, "a2": -1}),
        product_note="(0,0): product W x P1",
    )
)
_row(FamilySpec("Sp4.Nsym", 4, 1, "no parameters", _pb({})))
_row(FamilySpec("Sp4.sym", 4, 1, "no parameters", _pb({})))
_row(FamilySpec("SL3xSL2.QxT", 4, 1, "no parameters", _pb({}), product_note="P2 x (SL2/T)"))
_row(FamilySpec("SL3xSL2.QxNT", 4, 1, "no parameters", _pb({}), product_note="P2 x (SL2/N(T))"))
_row(FamilySpec("SL2cube.BdiagSL2", 4, 1, "no parameters", _pb({}), product_note="P1 x Q3"))
_row(FamilySpec("SL2cube.BNdiagSL2", 4, 1, "no parameters", _pb({}), product_note="P1 x P3"))
_row(FamilySpec("SL2cube.BBxT", 4, 1, "no parameters", _pb({}), product_note="P1 x P1 x (SL2/T)"))
_row(
    FamilySpec("SL2cube.BBxNT", 4, 1, "no parameters", _pb({}), product_note="P1 x P1 x (SL2/N(T))")
)
_row(
    FamilySpec(
        "SL2cube.horo",
        4,
        1,
        "a1 >= |a2| >= |a3| in {-1, 0, 1}, signs up to a global flip",
        # (1,-1,-1) is the same subgroup as (1,1,-1) after replacing chi by -chi
        # and permuting the factors, so it is not listed separately.
        _pb(
            {"a1": 0, "a2": 0, "a3": 0},
            {"a1": 1, "a2": 0, "a3": 0},
            {"a1": 1, "a2": 1, "a3": 0},
            {"a1": 1, "a2": -1, "a3": 0},
            {"a1": 1, "a2": 1, "a3": 1},
            {"a1": 1, "a2": 1, "a3": -1},
        ),
        product_note="a3=0: product of P1 with a rank-one horospherical SL2^2xGm space",
    )
)
_row(
    FamilySpec(
        "SL3xSL2.horo",
        4,
        1,
        "a1 in {0, 1, 2}; a3 in {-1, 0, 1}, a3 >= 0 when a1 = 0",
        _pb(
            {"a1": 0, "a3": 0},
            {"a1": 0, "a3": 1},
            {"a1": 1, "a3": 0},
            {"a1": 2, "a3": 0},
            {"a1": 1, "a3": 1},
            {"a1": 1, "a3": -1},
            {"a1": 2, "a3": 1},
            {"a1": 2, "a3": -1},
        ),
        product_note="a1=0 or a3=0: product with P2 or P1 factors",
    )
)
_row(
    FamilySpec(
        "Sp4.horo.short",
        4,
        1,
        "a1 in {0, 1, 2, 3}",  # m = 4 allows a1/4 interior up to a1 = 3
        _pb({"a1": 0}, {"a1": 1}, {"a1": 2}, {"a1": 3}),
        product_note="a1=0: P3 x P1",
    )
)
_row(
    FamilySpec(
        "Sp4.horo.long",
        4,
        1,
        "a2 in {0, 1, 2}",
        _pb({"a2": 0}, {"a2": 1}, {"a2": 2}),
        product_note="a2=0: Q3 x P1",
    )
)
_row(
    FamilySpec(
        "SL4.horo",
        4,
        1,
        "a1 in {0, 1, 2, 3}",
        _pb({"a1": 0}, {"a1": 1}, {"a1": 2}, {"a1": 3}),
        product_note="a1=0: P3 x P1",
    )
)

# dimension 4, rank 2
_row(FamilySpec("SL2sqxGm.diagSL2", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sqxGm.NdiagSL2", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.GL2", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.diagB", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.NdiagB", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.TxT", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.NTxT", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.NTxNT", 4, 2, "no parameters", _pb({})))
_row(FamilySpec("SL2sq.diagNT", 4, 2, "no parameters", _pb({})))
_row(
    FamilySpec(
        "SL2sq.PI-T",
        4,
        2,
        "a1 in {0, 1, 2}, a2 in {0, 1}",  # a1 >= 3 empty; a2 >= 2 excluded by the color point conditions
        _pb(
            {"a1": 0, "a2": 0},
            {"a1": 1, "a2": 0},
            {"a1": 2, "a2": 0},
            {"a1": 0, "a2": 1},
            {"a1": 1, "a2": 1},
            {"a1": 2, "a2": 1},
        ),
        product_note="a2=0: products of P1 with the type-T threefolds (14 of them)",
    )
)
_row(
    FamilySpec(
        "SL2sq.PI-N.product",
        4,
        2,
        "a2 in {0, 1}",
        _pb({"a2": 0}, {"a2": 1}),
        product_note="a2=0: products of P1 with the N-product threefolds",
    )
)
_row(
    FamilySpec(
        "SL2sq.PI-N.diag",
        4,
        2,
        "a2 in {0, 1}",
        _pb({"a2": 0}, {"a2": 1}),
        product_note="a2=0: products of P1 with the N-diagonal threefolds",
        symmetry_source="count-calibrated",
    )
)
_row(
    FamilySpec(
        "SL2sq.horo2",
        4,
        2,
        "(a2,b2) in {(0,0),(0,1),(1,2),(1,3),(2,3)} with a1 = 1 unless a2 = b2 = 0",
        _pb(
            {"a1": 0, "a2": 0, "b2": 0},
            {"a1": 1, "a2": 0, "b2": 0},
            {"a1": 1, "a2": 0, "b2": 1},
            {"a1": 1, "a2": 1, "b2": 2},
            {"a1": 1, "a2": 1, "b2": 3},  # explored and empty
            {"a1": 1, "a2": 2, "b2": 3},
        ),
        product_note="a2=b2=0: products of P1 with rank-two horospherical SL2xGm^2 threefolds",
        symmetry_source="count-calibrated",
    )
)
_row(
    FamilySpec(
        "SL3.horo2",
        4,
        2,
        "a1 in {0, 1, 2}",
        _pb({"a1": 0}, {"a1": 1}, {"a1": 2}),
        product_note="a1=0: products of P2 with the five toric surfaces",
    )
)

# rank 0 static rows
for _k, (_g, _s, _d, _p, _deg) in enumerate(RANK0_TABLE):
    _row(
        FamilySpec(
            "rank0",
            _d,
            0,
            f"row {_k}: {_g} acting on {_s}",
            _pb({"row": _k}),
        )
    )


def families(dim_filter=None, rank_filter=None) -> list[FamilySpec]:
    """Registry rows whose dimension and rank match the filters."""
    dims = set(dim_filter) if dim_filter is not None else {1, 2, 3, 4}
    ranks = set(rank_filter) if rank_filter is not None else {0, 1, 2}
    return [f for f in FAMILY_ROWS if f.dim in dims and f.rank in ranks]


def family_spec(fid: str, params: dict) -> FamilySpec:
    key = params_key(params)
    for f in FAMILY_ROWS:
        if f.id == fid and key in f.param_bound:
            return f
    for f in FAMILY_ROWS:
        if f.id == fid:
            raise ParamsOutOfDomain(f"{fid}: params {params} not in the admissible bound")
    raise UnknownFamily(fid)


# ---------------------------------------------------------------------------
# data constructors


def _colors(*cs) -> tuple[Color, ...]:
    return tuple(Color(label, tuple(rho), m, frozenset(zeta)) for label, rho, m, zeta in cs)


def build(fid: str, params: dict | None = None) -> CombinatorialData:
    """The combinatorial data of one homogeneous space, in its fixed M-basis."""
    params = dict(params or {})
    spec = family_spec(fid, params)
    builder = _BUILDERS.get(fid)
    if builder is None:
        raise UnknownFamily(f"{fid} has no combinatorial data (static rank-0 entry)")
    return builder(spec, params)


def _toric(spec, p):
    n = p["n"]
    return CombinatorialData(
        rank=n,
        dim=n,
        sigma=(),
        colors=(),
        f=dh(1),
        kappa_expr="0",
        m_basis=tuple(f"x{i+1}" for i in range(n)),
        group_name="Gm" if n == 1 else f"Gm^{n}",
        space_type="toric",
    )


def _sl2_t(spec, p):
    return CombinatorialData(
        1,
        2,
        sigma=((1,),),
        colors=_colors(("clubs", (1,), 1, {"a1"}), ("hearts", (1,), 1, {"a1"})),
        f=dh(1, (2, (2,), 1)),
        kappa_expr="alpha1",
        m_basis=("alpha1",),
        group_name="SL2",
        space_type="symmetric",
    )


def _sl2_n(spec, p):
    return CombinatorialData(
        1,
        2,
        sigma=((1,),),
        colors=_colors(("clubs", (2,), 1, {"a1"})),
        f=dh(1, (2, (4,), 1)),
        kappa_expr="alpha1",
        m_basis=("2alpha1",),
        group_name="SL2",
        space_type="symmetric",
    )


def _sl2gm_horo(spec, p):
    n, a1 = p["n"], p["a1"]
    basis = (_basis_str({"w1": a1, "x1": 1}),) + tuple(f"x{i}" for i in range(2, n + 1))
    return CombinatorialData(
        rank=n,
        dim=n + 1,
        sigma=(),
        colors=_colors(("clubs", (a1,) + (0,) * (n - 1), 2, {"a1"})),
        f=dh(1, (2, (a1,) + (0,) * (n - 1), 1)),
        kappa_expr="alpha1",
        m_basis=basis,
        group_name=f"SL2xGm^{n}" if n > 1 else "SL2xGm",
        space_type="horospherical",
    )


def _sl2sq_diag_sl2(spec, p):
    return CombinatorialData(
        1,
        3,
        sigma=((1,),),
        colors=_colors(("clubs", (1,), 2, {"a1", "a2"})),
        f=dh(1, (2, (1,), 2)),
        kappa_expr="alpha1+alpha2",
        m_basis=("w1+w2",),
        group_name="SL2^2",
        space_type="symmetric",
    )


def _sl2sq_ndiag_sl2(spec, p):
    return CombinatorialData(
        1,
        3,
        sigma=((1,),),
        colors=_colors(("clubs", (2,), 2, {"a1", "a2"})),
        f=dh(4, (1, (1,), 2)),
        kappa_expr="alpha1+alpha2",
        m_basis=("alpha1+alpha2",),
        group_name="SL2^2",
        space_type="symmetric",
    )


def _sl2sq_horo1(spec, p):
    a1, a2 = p["a1"], p["a2"]
    return CombinatorialData(
        1,
        3,
        sigma=(),
        colors=_colors(("clubs", (a1,), 2, {"a1"}), ("hearts", (a2,), 2, {"a2"})),
        f=dh(1, (2, (a1,), 1), (2, (a2,), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=(_basis_str({"w1": a1, "w2": a2, "x1": 1}),),
        group_name="SL2^2xGm",
        space_type="horospherical",
    )


def _sl3_horo_q(spec, p):
    a1 = p["a1"]
    return CombinatorialData(
        1,
        3,
        sigma=(),
        colors=_colors(("clubs", (a1,), 3, {"a1"})),
        f=dh(Fraction(1, 2), (3, (a1,), 2)),
        kappa_expr="2alpha1+alpha2",
        m_basis=(_basis_str({"w1": a1, "x1": 1}),),
        group_name="SL3xGm",
        space_type="horospherical",
    )


def _sl2gm_t(spec, p):
    a1 = p["a1"]
    if a1 % 2 == 0:
        half = a1 // 2
        return CombinatorialData(
            2,
            3,
            sigma=((1, 0),),
            colors=_colors(("clubs", (1, half), 1, {"a1"}), ("hearts", (1, -half), 1, {"a1"})),
            f=dh(1, (2, (2, 0), 1)),
            kappa_expr="alpha1",
            m_basis=("alpha1", _basis_str({"w1": a1, "x1": 1}) if a1 else "x1"),
            group_name="SL2xGm",
            space_type="symmetric" if a1 == 0 else "typeT",
        )
    hi, lo = (a1 + 1) // 2, (1 - a1) // 2
    return CombinatorialData(
        2,
        3,
        sigma=((1, 1),),
        colors=_colors(("clubs", (hi, lo), 1, {"a1"}), ("hearts", (lo, hi), 1, {"a1"})),
        f=dh(1, (2, (1, 1), 1)),
        kappa_expr="alpha1",
        m_basis=("w1+x1", "w1-x1"),
        group_name="SL2xGm",
        space_type="typeT",
    )


def _sl2gm_n_product(spec, p):
    return CombinatorialData(
        2,
        3,
        sigma=((1, 0),),
        colors=_colors(("clubs", (2, 0), 1, {"a1"})),
        f=dh(1, (2, (4, 0), 1)),
        kappa_expr="alpha1",
        m_basis=("2alpha1", "x1"),
        group_name="SL2xGm",
        space_type="symmetric",
    )


def _sl2gm_n_diag(spec, p):
    return CombinatorialData(
        2,
        3,
        sigma=((1, 1),),
        colors=_colors(("clubs", (1, 1), 1, {"a1"})),
        f=dh(1, (2, (2, 2), 1)),
        kappa_expr="alpha1",
        m_basis=("alpha1+x1", "alpha1-x1"),
        group_name="SL2xGm",
        space_type="symmetric",
    )


def _sl3_sym(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(("clubs", (1,), 2, {"a1"}), ("hearts", (1,), 2, {"a2"})),
        f=dh(1, (2, (1,), 3)),
        kappa_expr="2alpha1+2alpha2",
        m_basis=("alpha1+alpha2",),
        group_name="SL3",
        space_type="symmetric",
    )


def _sl3_horosym(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(
            ("clubs", (-1,), 2, {"a1"}),
            ("hearts", (1,), 1, {"a2"}),
            ("diamonds", (1,), 1, {"a2"}),
        ),
        f=dh(1, (2, (-1,), 1), (1, (1,), 1), (4, (1,), 1)),
        kappa_expr="2alpha1+2alpha2",
        m_basis=("alpha2",),
        group_name="SL3",
        space_type="horosymmetric",
    )


def _sl3_nhorosym(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(("clubs", (-2,), 2, {"a1"}), ("hearts", (2,), 1, {"a2"})),
        f=dh(4, (1, (-1,), 1), (1, (2,), 1), (2, (1,), 1)),
        kappa_expr="2alpha1+2alpha2",
        m_basis=("2alpha2",),
        group_name="SL3",
        space_type="horosymmetric",
    )


def _sl3_horo_b(spec, p):
    a1, a2 = p["a1"], p["a2"]
    return CombinatorialData(
        1,
        4,
        sigma=(),
        colors=_colors(("clubs", (a1,), 2, {"a1"}), ("hearts", (a2,), 2, {"a2"})),
        f=dh(Fraction(1, 2), (2, (a1,), 1), (2, (a2,), 1), (4, (a1 + a2,), 1)),
        kappa_expr="2alpha1+2alpha2",
        m_basis=(_basis_str({"w1": a1, "w2": a2, "x1": 1}),),
        group_name="SL3xGm",
        space_type="horospherical",
    )


def _sp4_nsym(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(("clubs", (2,), 3, {"a2"})),
        f=dh(Fraction(1, 3), (3, (2,), 3)),
        kappa_expr="3alpha1+3alpha2",
        m_basis=("2alpha1+2alpha2",),
        group_name="Sp4",
        space_type="symmetric",
    )


def _sp4_sym(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(("clubs", (1,), 3, {"a2"})),
        f=dh(Fraction(1, 3), (3, (1,), 3)),
        kappa_expr="3alpha1+3alpha2",
        m_basis=("alpha1+alpha2",),
        group_name="Sp4",
        space_type="symmetric",
    )


def _sl3sl2_qxt(spec, p):
    # P2 x (SL2/T): the P2 factor contributes the two constant root factors
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(
            ("clubs", (1,), 1, {"a3"}),
            ("hearts", (1,), 1, {"a3"}),
            ("diamonds", (0,), 3, {"a1"}),
        ),
        f=dh(1, (3, (0,), 1), (Fraction(3, 2), (0,), 1), (2, (2,), 1)),
        kappa_expr="2alpha1+alpha2+alpha3",
        m_basis=("alpha3",),
        group_name="SL3xSL2",
        space_type="symmetric",
    )


def _sl3sl2_qxnt(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(("clubs", (2,), 1, {"a3"}), ("diamonds", (0,), 3, {"a1"})),
        f=dh(1, (3, (0,), 1), (Fraction(3, 2), (0,), 1), (2, (4,), 1)),
        kappa_expr="2alpha1+alpha2+alpha3",
        m_basis=("2alpha3",),
        group_name="SL3xSL2",
        space_type="symmetric",
    )


def _sl2cube_b_diag(spec, p):
    # P1 x (SL2^2/diag SL2)
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(("clubs", (1,), 2, {"a2", "a3"}), ("diamonds", (0,), 2, {"a1"})),
        f=dh(1, (2, (0,), 1), (2, (1,), 2)),
        kappa_expr="alpha1+alpha2+alpha3",
        m_basis=("w2+w3",),
        group_name="SL2^3",
        space_type="symmetric",
    )


def _sl2cube_b_ndiag(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(("clubs", (2,), 2, {"a2", "a3"}), ("diamonds", (0,), 2, {"a1"})),
        f=dh(4, (2, (0,), 1), (1, (1,), 2)),
        kappa_expr="alpha1+alpha2+alpha3",
        m_basis=("alpha2+alpha3",),
        group_name="SL2^3",
        space_type="symmetric",
    )


def _sl2cube_bbxt(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(
            ("clubs", (1,), 1, {"a3"}),
            ("hearts", (1,), 1, {"a3"}),
            ("diamonds", (0,), 2, {"a1"}),
            ("spades", (0,), 2, {"a2"}),
        ),
        f=dh(1, (2, (0,), 1), (2, (0,), 1), (2, (2,), 1)),
        kappa_expr="alpha1+alpha2+alpha3",
        m_basis=("alpha3",),
        group_name="SL2^3",
        space_type="symmetric",
    )


def _sl2cube_bbxnt(spec, p):
    return CombinatorialData(
        1,
        4,
        sigma=((1,),),
        colors=_colors(
            ("clubs", (2,), 1, {"a3"}),
            ("diamonds", (0,), 2, {"a1"}),
            ("spades", (0,), 2, {"a2"}),
        ),
        f=dh(1, (2, (0,), 1), (2, (0,), 1), (2, (4,), 1)),
        kappa_expr="alpha1+alpha2+alpha3",
        m_basis=("2alpha3",),
        group_name="SL2^3",
        space_type="symmetric",
    )


def _sl2cube_horo(spec, p):
    a1, a2, a3 = p["a1"], p["a2"], p["a3"]
    return CombinatorialData(
        1,
        4,
        sigma=(),
        colors=_colors(
            ("clubs", (a1,), 2, {"a1"}),
            ("hearts", (a2,), 2, {"a2"}),
            ("spades", (a3,), 2, {"a3"}),
        ),
        f=dh(1, (2, (a1,), 1), (2, (a2,), 1), (2, (a3,), 1)),
        kappa_expr="alpha1+alpha2+alpha3",
        m_basis=(_basis_str({"w1": a1, "w2": a2, "w3": a3, "x1": 1}),),
        group_name="SL2^3xGm",
        space_type="horospherical",
    )


def _sl3sl2_horo(spec, p):
    a1, a3 = p["a1"], p["a3"]
    return CombinatorialData(
        1,
        4,
        sigma=(),
        colors=_colors(("clubs", (a1,), 3, {"a1"}), ("hearts", (a3,), 2, {"a3"})),
        f=dh(Fraction(1, 2), (3, (a1,), 2), (2, (a3,), 1)),
        kappa_expr="2alpha1+alpha2+alpha3",
        m_basis=(_basis_str({"w1": a1, "w3": a3, "x1": 1}),),
        group_name="SL3xSL2xGm",
        space_type="horospherical",
    )


def _sp4_horo_short(spec, p):
    a1 = p["a1"]
    return CombinatorialData(
        1,
        4,
        sigma=(),
        colors=_colors(("clubs", (a1,), 4, {"a1"})),
        f=dh(Fraction(1, 6), (4, (a1,), 3)),
        kappa_expr="4alpha1+2alpha2",
        m_basis=(_basis_str({"w1": a1, "x1": 1}),),
        group_name="Sp4xGm",
        space_type="horospherical",
    )


def _sp4_horo_long(spec, p):
    a2 = p["a2"]
    return CombinatorialData(
        1,
        4,
        sigma=(),
        colors=_colors(("clubs", (a2,), 3, {"a2"})),
        f=dh(Fraction(1, 3), (3, (a2,), 3)),
        kappa_expr="3alpha1+3alpha2",
        m_basis=(_basis_str({"w2": a2, "x1": 1}),),
        group_name="Sp4xGm",
        space_type="horospherical",
    )


def _sl4_horo(spec, p):
    a1 = p["a1"]
    return CombinatorialData(
        1,
        4,
        sigma=(),
        colors=_colors(("clubs", (a1,), 4, {"a1"})),
        f=dh(Fraction(1, 6), (4, (a1,), 3)),
        kappa_expr="3alpha1+2alpha2+alpha3",
        m_basis=(_basis_str({"w1": a1, "x1": 1}),),
        group_name="SL4xGm",
        space_type="horospherical",
    )


def _sl2sqgm_diag_sl2(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 0),),
        colors=_colors(("clubs", (1, 0), 2, {"a1", "a2"})),
        f=dh(1, (2, (1, 0), 2)),
        kappa_expr="alpha1+alpha2",
        m_basis=("w1+w2", "x1"),
        group_name="SL2^2xGm",
        space_type="group-compactification",
    )


def _sl2sqgm_ndiag_sl2(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 0),),
        colors=_colors(("clubs", (2, 0), 2, {"a1", "a2"})),
        f=dh(4, (1, (1, 0), 2)),
        kappa_expr="alpha1+alpha2",
        m_basis=("alpha1+alpha2", "x1"),
        group_name="SL2^2xGm",
        space_type="group-compactification",
    )


def _sl2sq_gl2(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 1),),
        colors=_colors(("clubs", (1, 1), 2, {"a1", "a2"})),
        f=dh(1, (2, (1, 1), 2)),
        kappa_expr="alpha1+alpha2",
        m_basis=("w1+w2+x1", "w1+w2-x1"),
        group_name="SL2^2xGm",
        space_type="group-compactification",
    )


def _sl2sq_diag_b(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 1), (1, -1)),
        colors=_colors(
            ("clubs", (0, 1), 1, {"a1"}),
            ("hearts", (1, 0), 1, {"a1", "a2"}),
            ("diamonds", (0, -1), 1, {"a2"}),
        ),
        f=dh(1, (2, (1, 1), 1), (2, (1, -1), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=("w1+w2", "w1-w2"),
        group_name="SL2^2",
        space_type="diag-Borel",
    )


def _sl2sq_ndiag_b(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 0), (0, 1)),
        colors=_colors(
            ("clubs", (1, -1), 1, {"a1"}),
            ("hearts", (1, 1), 1, {"a1", "a2"}),
            ("diamonds", (-1, 1), 1, {"a2"}),
        ),
        f=dh(4, (1, (1, 0), 1), (1, (0, 1), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=("alpha1", "alpha2"),
        group_name="SL2^2",
        space_type="diag-Borel",
    )


def _sl2sq_txt(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 0), (0, 1)),
        colors=_colors(
            ("clubs", (1, 0), 1, {"a1"}),
            ("hearts", (1, 0), 1, {"a1"}),
            ("spades", (0, 1), 1, {"a2"}),
            ("diamonds", (0, 1), 1, {"a2"}),
        ),
        f=dh(4, (1, (1, 0), 1), (1, (0, 1), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=("alpha1", "alpha2"),
        group_name="SL2^2",
        space_type="symmetric",
    )


def _sl2sq_ntxt(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 0), (0, 1)),
        colors=_colors(
            ("clubs", (2, 0), 1, {"a1"}),
            ("spades", (0, 1), 1, {"a2"}),
            ("diamonds", (0, 1), 1, {"a2"}),
        ),
        f=dh(4, (1, (2, 0), 1), (1, (0, 1), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=("2alpha1", "alpha2"),
        group_name="SL2^2",
        space_type="symmetric",
    )


def _sl2sq_ntxnt(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 0), (0, 1)),
        colors=_colors(("clubs", (2, 0), 1, {"a1"}), ("spades", (0, 2), 1, {"a2"})),
        f=dh(4, (1, (2, 0), 1), (1, (0, 2), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=("2alpha1", "2alpha2"),
        group_name="SL2^2",
        space_type="symmetric",
    )


def _sl2sq_diag_nt(spec, p):
    return CombinatorialData(
        2,
        4,
        sigma=((1, 1), (1, -1)),
        colors=_colors(("clubs", (1, 1), 1, {"a1"}), ("spades", (1, -1), 1, {"a2"})),
        f=dh(4, (1, (1, 1), 1), (1, (1, -1), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=("alpha1+alpha2", "alpha1-alpha2"),
        group_name="SL2^2",
        space_type="symmetric",
    )


def _sl2sq_pi_t(spec, p):
    a1, a2 = p["a1"], p["a2"]
    if a1 % 2 == 0:
        half = a1 // 2
        return CombinatorialData(
            2,
            4,
            sigma=((1, 0),),
            colors=_colors(
                ("clubs", (1, half), 1, {"a1"}),
                ("hearts", (1, -half), 1, {"a1"}),
                ("diamonds", (0, a2), 2, {"a2"}),
            ),
            f=dh(2, (1, (1, 0), 1), (2, (0, a2), 1)),
            kappa_expr="alpha1+alpha2",
            m_basis=("alpha1", _basis_str({"w2": a2, "x1": 1})),
            group_name="SL2^2xGm",
            space_type="typeT",
        )
    hi, lo = (a1 + 1) // 2, (1 - a1) // 2
    return CombinatorialData(
        2,
        4,
        sigma=((1, 1),),
        colors=_colors(
            ("clubs", (hi, lo), 1, {"a1"}),
            ("hearts", (lo, hi), 1, {"a1"}),
            ("diamonds", (a2, -a2), 2, {"a2"}),
        ),
        f=dh(1, (2, (1, 1), 1), (2, (a2, -a2), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=(
            _basis_str({"w1": 1, "w2": a2, "x1": 1}),
            _basis_str({"w1": 1, "w2": -a2, "x1": -1}),
        ),
        group_name="SL2^2xGm",
        space_type="typeT",
    )


def _sl2sq_pi_n_product(spec, p):
    a2 = p["a2"]
    return CombinatorialData(
        2,
        4,
        sigma=((1, 0),),
        colors=_colors(("clubs", (2, 0), 1, {"a1"}), ("diamonds", (0, a2), 2, {"a2"})),
        f=dh(2, (1, (2, 0), 1), (2, (0, a2), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=("2alpha1", _basis_str({"w2": a2, "x1": 1})),
        group_name="SL2^2xGm",
        space_type="typeN",
    )


def _sl2sq_pi_n_diag(spec, p):
    a2 = p["a2"]
    return CombinatorialData(
        2,
        4,
        sigma=((1, 1),),
        colors=_colors(("clubs", (1, 1), 1, {"a1"}), ("diamonds", (a2, -a2), 2, {"a2"})),
        f=dh(2, (1, (1, 1), 1), (2, (a2, -a2), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=(
            _basis_str({"alpha1": 1, "w2": a2, "x1": 1}),
            _basis_str({"alpha1": 1, "w2": -a2, "x1": -1}),
        ),
        group_name="SL2^2xGm",
        space_type="typeN",
    )


def _sl2sq_horo2(spec, p):
    a1, a2, b2 = p["a1"], p["a2"], p["b2"]
    return CombinatorialData(
        2,
        4,
        sigma=(),
        colors=_colors(("clubs", (a1, 0), 2, {"a1"}), ("hearts", (a2, b2), 2, {"a2"})),
        f=dh(1, (2, (a1, 0), 1), (2, (a2, b2), 1)),
        kappa_expr="alpha1+alpha2",
        m_basis=(
            _basis_str({"w1": a1, "w2": a2, "x1": 1}),
            _basis_str({"w2": b2, "x2": 1}),
        ),
        group_name="SL2^2xGm^2",
        space_type="horospherical",
    )


def _sl3_horo2(spec, p):
    a1 = p["a1"]
    return CombinatorialData(
        2,
        4,
        sigma=(),
        colors=_colors(("clubs", (a1, 0), 3, {"a1"})),
        f=dh(Fraction(1, 2), (3, (a1, 0), 2)),
        kappa_expr="2alpha1+alpha2",
        m_basis=(_basis_str({"w1": a1, "x1": 1}), "x2"),
        group_name="SL3xGm^2",
        space_type="horospherical",
    )


_BUILDERS = {
    "toric": _toric,
    "SL2.T": _sl2_t,
    "SL2.N": _sl2_n,
    "SL2xGm.horo": _sl2gm_horo,
    "SL2sq.diagSL2": _sl2sq_diag_sl2,
    "SL2sq.NdiagSL2": _sl2sq_ndiag_sl2,
    "SL2sq.horo1": _sl2sq_horo1,
    "SL3.horo.Q": _sl3_horo_q,
    "SL2xGm.T": _sl2gm_t,
    "SL2xGm.N.product": _sl2gm_n_product,
    "SL2xGm.N.diag": _sl2gm_n_diag,
    "SL3.sym": _sl3_sym,
    "SL3.horosym": _sl3_horosym,
    "SL3.Nhorosym": _sl3_nhorosym,
    "SL3.horo.B": _sl3_horo_b,
    "Sp4.Nsym": _sp4_nsym,
    "Sp4.sym": _sp4_sym,
    "SL3xSL2.QxT": _sl3sl2_qxt,
    "SL3xSL2.QxNT": _sl3sl2_qxnt,
    "SL2cube.BdiagSL2": _sl2cube_b_diag,
    "SL2cube.BNdiagSL2": _sl2cube_b_ndiag,
    "SL2cube.BBxT": _sl2cube_bbxt,
    "SL2cube.BBxNT": _sl2cube_bbxnt,
    "SL2cube.horo": _sl2cube_horo,
    "SL3xSL2.horo": _sl3sl2_horo,
    "Sp4.horo.short": _sp4_horo_short,
    "Sp4.horo.long": _sp4_horo_long,
    "SL4.horo": _sl4_horo,
    "SL2sqxGm.diagSL2": _sl2sqgm_diag_sl2,
    "SL2sqxGm.NdiagSL2": _sl2sqgm_ndiag_sl2,
    "SL2sq.GL2": _sl2sq_gl2,
    "SL2sq.diagB": _sl2sq_diag_b,
    "SL2sq.NdiagB": _sl2sq_ndiag_b,
    "SL2sq.TxT": _sl2sq_txt,
    "SL2sq.NTxT": _sl2sq_ntxt,
    "SL2sq.NTxNT": _sl2sq_ntxnt,
    "SL2sq.diagNT": _sl2sq_diag_nt,
    "SL2sq.PI-T": _sl2sq_pi_t,
    "SL2sq.PI-N.product": _sl2sq_pi_n_product,
    "SL2sq.PI-N.diag": _sl2sq_pi_n_diag,
    "SL2sq.horo2": _sl2sq_horo2,
    "SL3.horo2": _sl3_horo2,
}


# ---------------------------------------------------------------------------
# admissible symmetry groups


def data_preserving_permutation(data: CombinatorialData, M) -> tuple | None:
    """A color permutation making M an automorphism of the data, or None.

    Checks exactly: M maps the spherical roots to themselves (via the inverse
    transpose on weights), permutes the color points compatibly with rho and
    m, and leaves the density f invariant.
    """
    Minv = unimodular_inverse(M)
    # action on weights is the transpose of the inverse action on N
    mt = tuple(tuple(Minv[j][i] for j in range(len(Minv))) for i in range(len(Minv)))
    sigma_img = {tuple(int(c) for c in apply_matrix(mt, s)) for s in data.sigma}
    if sigma_img != set(data.sigma):
        return None
    # match colors: image of rho must hit a color with the same m
    n = len(data.colors)
    taken = [False] * n
    perm = [None] * n
    for i, c in enumerate(data.colors):
        img = tuple(int(x) for x in apply_matrix(M, c.rho))
        for j, d in enumerate(data.colors):
            if not taken[j] and d.rho == img and d.m == c.m:
                taken[j] = True
                perm[i] = j
                break
        else:
            return None
    # f invariance: f(M^T x) == f(x)
    from .geometry import Polynomial

    rank = data.rank
    exprs = [
        Polynomial.affine(rank, 0, tuple(M[i][j] for i in range(rank)))
        for j in range(rank)
    ]
    f = data.f.expand(rank)
    if f.substitute(exprs) != f:
        return None
    return tuple(perm)


def _finite(data, *matrices) -> SymmetryGroup:
    mats = [tuple(map(tuple, m)) for m in matrices]
    if mats and mats[0] != (_ID if data.rank == 2 else _ID1):
        mats.insert(0, _ID if data.rank == 2 else _ID1)
    perms = []
    for m in mats:
        perm = data_preserving_permutation(data, m)
        assert perm is not None, f"declared symmetry {m} does not preserve the data"
        perms.append(perm)
    return SymmetryGroup(FINITE, tuple(mats), tuple(perms))


def symmetry_group(fid: str, params: dict | None = None) -> SymmetryGroup:
    """The admissible lattice-symmetry group of one family instance."""
    params = dict(params or {})
    spec = family_spec(fid, params)
    if fid == "rank0":
        return SymmetryGroup(TRIVIAL)
    data = build(fid, params)
    r = data.rank

    if fid == "toric":
        return (
            SymmetryGroup(FULL_UNIMODULAR)
            if r == 2
            else _finite(data, _ID1, _NEG1)
        )

    if r == 1:
        # negation is admissible exactly when it preserves the data
        if data_preserving_permutation(data, _NEG1) is not None:
            return _finite(data, _ID1, _NEG1)
        return SymmetryGroup(TRIVIAL)

    # rank 2
    a = params
    if fid == "SL2xGm.horo":  # n = 2
        if a["a1"] == 0:
            return SymmetryGroup(FULL_UNIMODULAR)
        return SymmetryGroup(SHEAR, fixed_vector=(1, 0), reflection=True)
    if fid == "SL3.horo2":
        if a["a1"] == 0:
            return SymmetryGroup(FULL_UNIMODULAR)
        return SymmetryGroup(SHEAR, fixed_vector=(1, 0), reflection=True)
    if fid == "SL2sq.horo2":
        a1, a2, b2 = a["a1"], a["a2"], a["b2"]
        if (a1, a2, b2) == (0, 0, 0):
            return SymmetryGroup(FULL_UNIMODULAR)
        if (a2, b2) == (0, 0):
            return SymmetryGroup(SHEAR, fixed_vector=(1, 0), reflection=True)
        if (a2, b2) == (0, 1):
            return _finite(data, _ID, _SWAP)
        # exchanging the two SL2 factors realizes these involutions
        if (a2, b2) == (1, 2):
            return _finite(data, _ID, ((1, 0), (2, -1)))
        if (a2, b2) == (1, 3):
            return _finite(data, _ID, ((1, 0), (3, -1)))
        if (a2, b2) == (2, 3):
            return _finite(data, _ID, ((2, -1), (3, -2)))
        return SymmetryGroup(TRIVIAL)
    if fid == "SL2xGm.T":
        return _finite(data, _ID, _FLIPY if a["a1"] % 2 == 0 else _SWAP)
    if fid == "SL2xGm.N.product":
        return _finite(data, _ID, _FLIPY)
    if fid == "SL2xGm.N.diag":
        return _finite(data, _ID, _SWAP)
    if fid in ("SL2sqxGm.diagSL2", "SL2sqxGm.NdiagSL2"):
        return _finite(data, _ID, _FLIPY)
    if fid == "SL2sq.GL2":
        return _finite(data, _ID, _SWAP)
    if fid == "SL2sq.diagB":
        return _finite(data, _ID, _FLIPY)
    if fid == "SL2sq.NdiagB":
        return _finite(data, _ID, _SWAP)
    if fid == "SL2sq.TxT":
        return _finite(data, _ID, _SWAP)
    if fid == "SL2sq.NTxT":
        return SymmetryGroup(TRIVIAL)
    if fid == "SL2sq.NTxNT":
        return _finite(data, _ID, _SWAP)
    if fid == "SL2sq.diagNT":
        return _finite(data, _ID, _FLIPY)
    if fid == "SL2sq.PI-T":
        if a["a2"] == 0:
            return _finite(data, _ID, _FLIPY if a["a1"] % 2 == 0 else _SWAP)
        return SymmetryGroup(TRIVIAL)
    if fid == "SL2sq.PI-N.product":
        if a["a2"] == 0:
            return _finite(data, _ID, _FLIPY)
        return SymmetryGroup(TRIVIAL)
    if fid == "SL2sq.PI-N.diag":
        if a["a2"] == 0:
            return _finite(data, _ID, _SWAP)
        return SymmetryGroup(TRIVIAL)
    return SymmetryGroup(TRIVIAL)


def registry_json() -> list[dict]:
    """The whole registry in the shipped `families.json` shape."""
    out = []
    for spec in FAMILY_ROWS:
        entry = {
            "id": spec.id,
            "dim": spec.dim,
            "rank": spec.rank,
            "param_domain": spec.param_domain,
            "param_bound": [dict(p) for p in spec.param_bound],
            "product_note": spec.product_note,
            "symmetry_source": spec.symmetry_source,
        }
        if spec.id != "rank0":
            syms = []
            for p in spec.params_list():
                g = symmetry_group(spec.id, p)
                syms.append(
                    {
                        "params": p,
                        "kind": g.kind,
                        "matrices": [[list(r) for r in m] for m in g.matrices],
                        "fixed_vector": list(g.fixed_vector),
                        "reflection": g.reflection,
                    }
                )
            entry["symmetry"] = syms
        out.append(entry)
    return out
