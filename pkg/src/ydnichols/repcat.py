"""The catalog of simple D(H)-modules for H = Hc_sigma0 and its checks.

Each entry stores the matrices of the generators ``e_g`` (8), ``t``,
``zeta_x``, ``zeta_y``, ``chi_x``, ``chi_y``.  The remaining dual-basis
elements are derived as ``zeta_{x^k y^l} = zeta_x^k zeta_y^l`` and
``chi_{x^k y^l} = chi_x^k chi_y^l``; on a module only one of the two dual
families is nonzero, and its identity element acts as the identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .double import DoubleAlgebra
from .exactlinalg import ONE, XI, ZERO, Matrix, Scalar, mat_rank
from .hopfcore import G, GroupElt, idx
from .report import Report

GENERATORS = tuple(f"e_{g.label}" for g in G) + ("t", "zeta_x", "zeta_y", "chi_x", "chi_y")

_SIGN_WORD = {1: "plus", -1: "minus"}
_SIGN_CHAR = {1: "+", -1: "-"}


@dataclass
class Representation:
    id: str
    dim: int
    gen_action: dict
    family: str
    params: dict = field(default_factory=dict)
    display: str = ""

    def __post_init__(self):
        missing = [g for g in GENERATORS if g not in self.gen_action]
        if missing:
            raise ValueError(f"{self.id}: missing generator matrices {missing}")
        for name, m in self.gen_action.items():
            if m.shape != (self.dim, self.dim):
                raise ValueError(f"{self.id}: {name} has shape {m.shape}, expected {(self.dim,) * 2}")

    @property
    def mu(self) -> GroupElt:
        return GroupElt.parse(self.params["mu"])

    def dual_action(self, f: int) -> Matrix:
        """Matrix of dual basis element ``f`` (zeta_g for f < 8, chi_g otherwise)."""
        g = G[f % 8]
        k, l = g.i, g.j
        base = "zeta" if f < 8 else "chi"
        a, b = self.gen_action[f"{base}_x"], self.gen_action[f"{base}_y"]
        out = _matpow(a, k) @ _matpow(b, l)
        # zeta_x^0 zeta_y^0 is the identity of its block, not of the whole module
        if k == 0 and l == 0:
            other = "chi" if base == "zeta" else "zeta"
            if not self.gen_action[f"{other}_x"].is_zero():
                out = Matrix.zeros(self.dim, self.dim)
        return out

    def h_action(self, a: int) -> Matrix:
        g, f = G[a % 8], a // 8
        m = self.gen_action[f"e_{g.label}"]
        return m @ self.gen_action["t"] if f else m

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "display": self.display,
            "dim": self.dim,
            "family": self.family,
            "params": self.params,
            "gen_action": {k: self.gen_action[k].to_json() for k in GENERATORS},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Representation":
        return cls(
            id=obj["id"],
            dim=obj["dim"],
            gen_action={k: Matrix.from_json(v) for k, v in obj["gen_action"].items()},
            family=obj["family"],
            params=obj.get("params", {}),
            display=obj.get("display", ""),
        )


def _matpow(m: Matrix, k: int) -> Matrix:
    out = Matrix.identity(m.shape[0])
    for _ in range(k):
        out = out @ m
    return out


def _m(rows) -> Matrix:
    return Matrix(rows)


def _diag(a, b) -> Matrix:
    return Matrix([[a, 0], [0, b]])


def _e_matrices(dim: int, support: tuple) -> dict:
    """``e_g`` acts by the coordinate projection onto the basis vectors with weight g."""
    out = {}
    for g in G:
        out[f"e_{g.label}"] = Matrix.diag([ONE if s == g else ZERO for s in support]) if dim > 1 else Matrix(
            [[1 if support[0] == g else 0]]
        )
    return out


def _rep(id_, display, family, params, support, t, zx, zy, cx, cy) -> Representation:
    dim = len(support)
    acts = _e_matrices(dim, support)
    acts.update({"t": t, "zeta_x": zx, "zeta_y": zy, "chi_x": cx, "chi_y": cy})
    return Representation(id_, dim, acts, family, params, display)


_X, _Y = GroupElt(1, 0), GroupElt(0, 1)


def _s0() -> list[Representation]:
    out = []
    zero = Matrix([[0]])
    for mu, t_plus, y_sign in (
        (GroupElt(0, 0), ONE, 1),
        (_Y, ONE, -1),
        (GroupElt(2, 0), XI, 1),
        (GroupElt(2, 1), XI, -1),
    ):
        for sign in (1, -1):
            for i in range(4):
                out.append(
                    _rep(
                        f"V_{mu.label}_{i}_{_SIGN_WORD[sign]}",
                        f"V^{_SIGN_CHAR[sign]}_{{{mu.label},{i}}}",
                        "S0",
                        {"mu": mu.label, "i": i, "sign": sign},
                        (mu,),
                        Matrix([[t_plus * sign]]),
                        Matrix([[XI**i]]),
                        Matrix([[y_sign]]),
                        zero,
                        zero,
                    )
                )
    return out


def _s1() -> list[Representation]:
    out = []
    zero = Matrix.zeros(2, 2)
    for mu, sup, t in ((_X, 1, _m([[0, 1], [1, 0]])), (_X**3, -1, _m([[0, -1], [1, 0]]))):
        for sub in (1, -1):
            for i in range(4):
                a = XI**i
                zx = _diag(a, a) if sub == 1 else _diag(-a, a)
                zy = _diag(-1, 1) if sub == 1 else _diag(1, -1)
                out.append(
                    _rep(
                        f"W_{mu.label}_{i}_{_SIGN_WORD[sup]}_{_SIGN_WORD[sub]}",
                        f"W^{_SIGN_CHAR[sup]}_{{{mu.label},{i},{_SIGN_CHAR[sub]}}}",
                        "S1",
                        {"mu": mu.label, "i": i, "sign": sup, "sub": sub},
                        (mu, mu * _Y),
                        t,
                        zx,
                        zy,
                        zero,
                        zero,
                    )
                )
    return out


def _s2() -> list[Representation]:
    out = []
    zero = Matrix.zeros(2, 2)
    for mu, sign, y_val in (
        (GroupElt(0, 0), 1, -1),
        (_Y, 1, 1),
        (GroupElt(2, 0), -1, -1),
        (GroupElt(2, 1), -1, 1),
    ):
        t = _m([[0, 1], [1, 0]]) if sign == 1 else _m([[0, -1], [1, 0]])
        for i in range(2):
            a = XI**i
            out.append(
                _rep(
                    f"X_{mu.label}_{i}_{_SIGN_WORD[sign]}",
                    f"X^{_SIGN_CHAR[sign]}_{{{mu.label},{i}}}",
                    "S2",
                    {"mu": mu.label, "i": i, "sign": sign},
                    (mu, mu),
                    t,
                    _diag(a, -a),
                    _diag(y_val, y_val),
                    zero,
                    zero,
                )
            )
    return out


_SWAP = ((0, 1), (1, 0))
_ROT = ((0, -1), (1, 0))
_PLUS_MINUS = ((1, 0), (0, -1))
_MINUS_PLUS = ((-1, 0), (0, 1))

# (t matrix, chi_x, chi_y) for Y_{mu,1..8}
_Y_TABLE = {
    "x": [
        (((0, -XI), (XI, 0)), _SWAP, _PLUS_MINUS),
        (((0, XI), (-XI, 0)), _SWAP, _PLUS_MINUS),
        (((0, -XI), (XI, 0)), _ROT, _MINUS_PLUS),
        (((0, XI), (-XI, 0)), _ROT, _MINUS_PLUS),
        (((0, 1), (1, 0)), _ROT, _PLUS_MINUS),
        (((0, -1), (-1, 0)), _ROT, _PLUS_MINUS),
        (((0, 1), (1, 0)), _SWAP, _MINUS_PLUS),
        (((0, -1), (-1, 0)), _SWAP, _MINUS_PLUS),
    ],
    "x3": [
        (((0, XI), (XI, 0)), _ROT, _PLUS_MINUS),
        (((0, -XI), (-XI, 0)), _ROT, _PLUS_MINUS),
        (((0, XI), (XI, 0)), _SWAP, _MINUS_PLUS),
        (((0, -XI), (-XI, 0)), _SWAP, _MINUS_PLUS),
        (((0, -1), (1, 0)), _SWAP, _PLUS_MINUS),
        (((0, 1), (-1, 0)), _SWAP, _PLUS_MINUS),
        (((0, -1), (1, 0)), _ROT, _MINUS_PLUS),
        (((0, 1), (-1, 0)), _ROT, _MINUS_PLUS),
    ],
}

# (t diagonal, chi_x, chi_y) for Z_{mu,1..8}; entries of t are multiplied by lam(mu).
# As printed, rows 1-4 carry chi_y = diag(1,-1) and rows 5-8 diag(-1,1); that
# data violates t chi_x = chi_xy (sum_g c e_g t).  On weights (mu, mu y) the
# relation forces chi_y = diag(-1,1) when t is scalar and diag(1,-1) otherwise,
# so the two chi_y patterns are exchanged here.
_Z_TABLE_PRINTED = [
    ((1, 1), _SWAP, _PLUS_MINUS),
    ((-1, -1), _SWAP, _PLUS_MINUS),
    ((1, 1), _ROT, _PLUS_MINUS),
    ((-1, -1), _ROT, _PLUS_MINUS),
    ((1, -1), _SWAP, _MINUS_PLUS),
    ((-1, 1), _SWAP, _MINUS_PLUS),
    ((1, -1), _ROT, _MINUS_PLUS),
    ((-1, 1), _ROT, _MINUS_PLUS),
]
_Z_TABLE = [
    (t, cx, _MINUS_PLUS if cy == _PLUS_MINUS else _PLUS_MINUS) for t, cx, cy in _Z_TABLE_PRINTED
]


def _s3() -> list[Representation]:
    out = []
    zero = Matrix.zeros(2, 2)
    for mu in (_X, _X**3):
        for j, (t, cx, cy) in enumerate(_Y_TABLE[mu.label], start=1):
            out.append(
                _rep(
                    f"Y_{mu.label}_{j}",
                    f"Y_{{{mu.label},{j}}}",
                    "S3",
                    {"mu": mu.label, "j": j},
                    (mu, mu * _Y),
                    _m(t),
                    zero,
                    zero,
                    _m(cx),
                    _m(cy),
                )
            )
    return out


def _s4(printed: bool = False) -> list[Representation]:
    out = []
    zero = Matrix.zeros(2, 2)
    table = _Z_TABLE_PRINTED if printed else _Z_TABLE
    for mu, lam in ((GroupElt(0, 0), ONE), (GroupElt(2, 0), XI)):
        for j, (tdiag, cx, cy) in enumerate(table, start=1):
            out.append(
                _rep(
                    f"Z_{mu.label}_{j}",
                    f"Z_{{{mu.label},{j}}}",
                    "S4",
                    {"mu": mu.label, "j": j},
                    (mu, mu * _Y),
                    _diag(lam * tdiag[0], lam * tdiag[1]),
                    zero,
                    zero,
                    _m(cx),
                    _m(cy),
                )
            )
    return out


def catalog() -> list[Representation]:
    """All 88 simple modules, 32 of dimension 1 followed by 56 of dimension 2."""
    return _s0() + _s1() + _s2() + _s3() + _s4()


def s4_as_printed() -> list[Representation]:
    """The 16 Z entries with chi_y exactly as displayed (they are not modules)."""
    return _s4(printed=True)


def catalog_entry(label: str) -> Representation:
    for rep in catalog():
        if rep.id == label or rep.display == label:
            return rep
    raise KeyError(f"unknown module label {label!r}")


def trivial_module() -> Representation:
    zero = Matrix([[0]])
    one = Matrix([[1]])
    return _rep("trivial", "k", "trivial", {"mu": "1"}, (GroupElt(0, 0),), one, one, one, zero, zero)


def direct_sum(a: Representation, b: Representation, id_: str | None = None) -> Representation:
    acts = {}
    for name in GENERATORS:
        ma, mb = a.gen_action[name], b.gen_action[name]
        rows = [[ma[i, j] for j in range(a.dim)] + [ZERO] * b.dim for i in range(a.dim)]
        rows += [[ZERO] * a.dim + [mb[i, j] for j in range(b.dim)] for i in range(b.dim)]
        acts[name] = Matrix(rows)
    return Representation(id_ or f"{a.id}+{b.id}", a.dim + b.dim, acts, "sum", {})


# --------------------------------------------------------------------------
# extension to all of D(H) and verification


def _int_stack(mats: list[Matrix]):
    """Stack matrices as integer arrays over a common denominator."""
    den = int(np.lcm.reduce([int(m.den) for m in mats]))
    re = np.stack([np.asarray(m.re, dtype=object) * (den // int(m.den)) for m in mats])
    im = np.stack([np.asarray(m.im, dtype=object) * (den // int(m.den)) for m in mats])
    return re, im, den


def full_action(rep: Representation, d: DoubleAlgebra) -> list[Matrix]:
    """``rho(phi_f (x) b_a) = rho(phi_f) rho(b_a)`` for every basis element of D(H)."""
    n = d.n
    dual = [rep.dual_action(f) for f in range(n)]
    hact = [rep.h_action(a) for a in range(n)]
    return [dual[f] @ hact[a] for f in range(n) for a in range(n)]


def _structure_tensor(d: DoubleAlgebra):
    cached = getattr(d, "_coo", None)
    if cached is not None:
        return cached
    rows, cols, re, im = [], [], [], []
    N = d.dim
    for (p, q), vec in d.mult.items():
        for r, c in vec.items():
            if not c.is_gaussian_integer():
                raise ValueError("module verification expects Gaussian-integer structure constants")
            rows.append(p * N + q)
            cols.append(r)
            re.append(int(c.re))
            im.append(int(c.im))
    shape = (N * N, N)
    cre = sparse.csr_matrix((re, (rows, cols)), shape=shape, dtype=np.int64)
    cim = sparse.csr_matrix((im, (rows, cols)), shape=shape, dtype=np.int64)
    d._coo = (cre, cim)
    return d._coo


def verify_module(rep: Representation, d: DoubleAlgebra) -> Report:
    """Check ``rho(b) rho(b') = sum_b'' c rho(b'')`` for all basis pairs of D(H)."""
    rpt = Report(f"module {rep.id}")
    e_sum = sum((rep.gen_action[f"e_{g.label}"] for g in G), Matrix.zeros(rep.dim, rep.dim))
    rpt.add("sum_g e_g acts as identity", e_sum == Matrix.identity(rep.dim), rep.id)
    acts = full_action(rep, d)
    re, im, den = _int_stack(acts)
    d_ = rep.dim
    N = d.dim
    # products over all pairs, integer complex arithmetic in object dtype
    re_f = re.astype(np.int64)
    im_f = im.astype(np.int64)
    lre = np.einsum("pij,qjk->pqik", re_f, re_f) - np.einsum("pij,qjk->pqik", im_f, im_f)
    lim = np.einsum("pij,qjk->pqik", re_f, im_f) + np.einsum("pij,qjk->pqik", im_f, re_f)
    cre, cim = _structure_tensor(d)
    flat_re = re_f.reshape(N, d_ * d_)
    flat_im = im_f.reshape(N, d_ * d_)
    rre = (cre @ flat_re - cim @ flat_im) * den
    rim = (cre @ flat_im + cim @ flat_re) * den
    bad_re = lre.reshape(N * N, d_ * d_) != rre
    bad_im = lim.reshape(N * N, d_ * d_) != rim
    bad = np.flatnonzero((bad_re | bad_im).any(axis=1))
    witness = None
    if bad.size:
        p, q = divmod(int(bad[0]), N)
        witness = f"{d.label(p)} * {d.label(q)}"
    rpt.add("rho is an algebra map on all basis pairs", bad.size == 0, witness)
    return rpt


def is_simple(rep: Representation, d: DoubleAlgebra | None = None) -> bool:
    """Burnside: the image of the algebra is all of End(V)."""
    if rep.dim == 1:
        return True
    if d is not None:
        mats = full_action(rep, d)
    else:
        mats = _word_closure(rep)
    rows = [[m[i, j] for i in range(rep.dim) for j in range(rep.dim)] for m in mats]
    return mat_rank(Matrix(rows)) == rep.dim**2


def _word_closure(rep: Representation) -> list[Matrix]:
    """Span of all products of generator matrices, grown until it stabilizes."""
    gens = [rep.gen_action[g] for g in GENERATORS]
    span = [Matrix.identity(rep.dim)]
    frontier = list(span)
    seen = {span[0]}
    for _ in range(rep.dim**2):
        new = []
        for m in frontier:
            for g in gens:
                p = m @ g
                if p not in seen:
                    seen.add(p)
                    new.append(p)
        if not new:
            break
        span += new
        frontier = new
    return span


def character(rep: Representation, d: DoubleAlgebra) -> tuple[Scalar, ...]:
    out = []
    for m in full_action(rep, d):
        tr = ZERO
        for i in range(rep.dim):
            tr = tr + m[i, i]
        out.append(tr)
    return tuple(out)


def completeness_check(cat: list[Representation], d: DoubleAlgebra) -> Report:
    rpt = Report("catalog completeness")
    total = sum(r.dim**2 for r in cat)
    rpt.add(
        "sum of dim^2 equals dim D(H)",
        total == d.dim,
        f"sum = {total}, dim D(H) = {d.dim}",
        "semisimple algebra is the sum of matrix blocks",
    )
    seen: dict = {}
    clash = None
    for r in cat:
        ch = character(r, d)
        if ch in seen:
            clash = f"{seen[ch]} ~ {r.id}"
            break
        seen[ch] = r.id
    rpt.add("characters pairwise distinct", clash is None, clash, "no two entries are isomorphic")
    dims = [r.dim for r in cat]
    rpt.add(
        "88 entries: 32 of dim 1, 56 of dim 2",
        len(cat) == 88 and dims.count(1) == 32 and dims.count(2) == 56,
        f"{len(cat)} entries, {dims.count(1)} of dim 1, {dims.count(2)} of dim 2",
        required=False,
    )
    return rpt


def verify_catalog(d: DoubleAlgebra, cat: list[Representation] | None = None) -> Report:
    """Module axioms, simplicity and completeness for the whole catalog."""
    cat = catalog() if cat is None else cat
    rpt = Report("simple D(H)-modules")
    bad = [r.id for r in cat if not verify_module(r, d).passed]
    rpt.add("every entry is a D(H)-module", not bad, ", ".join(bad[:5]))
    nonsimple = [r.id for r in cat if not is_simple(r, d)]
    rpt.add("every entry is simple", not nonsimple, ", ".join(nonsimple[:5]))
    rpt.extend(completeness_check(cat, d))
    return rpt


__all__ = [
    "GENERATORS",
    "Representation",
    "catalog",
    "catalog_entry",
    "s4_as_printed",
    "trivial_module",
    "direct_sum",
    "full_action",
    "verify_module",
    "is_simple",
    "character",
    "completeness_check",
    "verify_catalog",
    "idx",
]
