"""Yetter-Drinfeld structures, their conversion to left-left form, and braidings.

A D(H)-module V becomes a left-right YD module through the dual basis:
``rho(v) = sum_b (b* . v) (x) b``.  The left-left form uses
``rho_l(v) = S(v_1) (x) v_0`` and the braiding is
``c(v (x) w) = v_{-1} . w (x) v_0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactlinalg import ONE, XI, ZERO, Matrix, mat_rank
from .hopfcore import HopfData, _clean
from .report import Report
from .repcat import Representation


class YDStructureError(ValueError):
    pass


@dataclass
class YDStructure:
    """``coaction[k]`` lists ``(coeff, l, a)``: ``rho(v_k) = sum coeff v_l (x) b_a``.

    For ``side == "left-left"`` the same triples mean ``b_a (x) v_l``.
    """

    dim: int
    action: list
    coaction: list
    side: str = "left-right"
    label: str = ""

    def act(self, a: int, vec: dict) -> dict:
        """``b_a . vec`` for a sparse vector ``{k: coeff}``."""
        m = self.action[a]
        out: dict = {}
        for k, c in vec.items():
            for i in range(self.dim):
                e = m[i, k]
                if e:
                    out[i] = out.get(i, ZERO) + c * e
        return _clean(out)

    def act_elem(self, u: dict, vec: dict) -> dict:
        out: dict = {}
        for a, ca in u.items():
            for i, c in self.act(a, vec).items():
                out[i] = out.get(i, ZERO) + ca * c
        return _clean(out)

    def coact(self, vec: dict) -> dict:
        """``rho(vec)`` as ``{(l, a): coeff}`` (order of tensor factors per ``side``)."""
        out: dict = {}
        for k, c in vec.items():
            for coeff, l, a in self.coaction[k]:
                key = (l, a)
                out[key] = out.get(key, ZERO) + c * coeff
        return _clean(out)

    def to_json(self, h: HopfData | None = None) -> dict:
        def lab(a):
            return h.labels[a] if h is not None else a

        return {
            "label": self.label,
            "side": self.side,
            "dim": self.dim,
            "coaction": [
                [{"coeff": c.to_json(), "v": l, "h": lab(a)} for c, l, a in terms] for terms in self.coaction
            ],
        }


@dataclass
class Braiding:
    dim: int
    c: Matrix
    label: str = ""
    checks: Report | None = field(default=None, repr=False)

    def apply(self, k: int, l: int) -> dict:
        """``c(v_k (x) v_l)`` as ``{(m, n): coeff}``."""
        col = k * self.dim + l
        out = {}
        for r in range(self.dim * self.dim):
            e = self.c[r, col]
            if e:
                out[divmod(r, self.dim)] = e
        return out

    def to_json(self) -> dict:
        return {"label": self.label, "dim": self.dim, "c": self.c.to_json()}


# --------------------------------------------------------------------------


def coaction_from_action(rep: Representation, h: HopfData) -> YDStructure:
    """Left-right YD structure of a D(H)-module via the dual-basis sum."""
    n = h.dim
    d = rep.dim
    dual = [rep.dual_action(f) for f in range(n)]
    coaction = []
    for k in range(d):
        terms = []
        for f in range(n):
            m = dual[f]
            for l in range(d):
                c = m[l, k]
                if c:
                    terms.append((c, l, f))
        coaction.append(terms)
    action = [rep.h_action(a) for a in range(n)]
    yd = YDStructure(d, action, coaction, "left-right", rep.id)
    rpt = verify_comodule(yd, h)
    if not rpt.passed:
        raise YDStructureError(f"{rep.id}: {rpt.failures()[0].name} fails [{rpt.failures()[0].witness}]")
    return yd


def _basis_vec(k: int) -> dict:
    return {k: ONE}


def verify_comodule(yd: YDStructure, h: HopfData) -> Report:
    """Counit and coassociativity of the coaction (either side)."""
    rpt = Report(f"comodule {yd.label} ({yd.side})")
    right = yd.side == "left-right"
    bad = None
    for k in range(yd.dim):
        acc: dict = {}
        for c, l, a in yd.coaction[k]:
            acc[l] = acc.get(l, ZERO) + c * h.counit[a]
        if _clean(acc) != {k: ONE}:
            bad = f"v{k}"
            break
    rpt.add("counit", bad is None, bad)
    bad = None
    for k in range(yd.dim):
        lhs: dict = {}
        rhs: dict = {}
        for c, l, a in yd.coaction[k]:
            # (rho (x) id) rho  vs  (id (x) Delta) rho    [right comodule]
            # (id (x) rho_l) rho_l vs (Delta (x) id) rho_l [left comodule]
            for c2, l2, a2 in yd.coaction[l]:
                key = (l2, a2, a) if right else (a, a2, l2)
                lhs[key] = lhs.get(key, ZERO) + c * c2
            for c3, b1, b2 in h.comult[a]:
                key = (l, b1, b2) if right else (b1, b2, l)
                rhs[key] = rhs.get(key, ZERO) + c * c3
        if _clean(lhs) != _clean(rhs):
            bad = f"v{k}"
            break
    rpt.add("coassociativity", bad is None, bad)
    return rpt


def verify_yd_compatibility(yd: YDStructure, h: HopfData) -> Report:
    """Left-right: rho(h.v) = h_2.v_0 (x) h_3 v_1 S^-1(h_1).
    Left-left: rho_l(h.v) = h_1 v_-1 S(h_3) (x) h_2.v_0."""
    rpt = Report(f"YD compatibility {yd.label} ({yd.side})")
    right = yd.side == "left-right"
    witness = None
    for a in range(h.dim):
        d2 = h.coproduct2(a)
        for k in range(yd.dim):
            lhs: dict = {}
            for (l, b), c in yd.coact(yd.act(a, _basis_vec(k))).items():
                lhs[l, b] = lhs.get((l, b), ZERO) + c
            rhs: dict = {}
            for c1, h1, h2, h3 in d2:
                for c2, l, b in yd.coaction[k]:
                    vec = yd.act(h2, _basis_vec(l))
                    if not vec:
                        continue
                    if right:
                        elem = h.product(h.product({h3: ONE}, {b: ONE}), h.S_inv({h1: ONE}))
                    else:
                        elem = h.product(h.product({h1: ONE}, {b: ONE}), h.S({h3: ONE}))
                    for m, cv in vec.items():
                        for e, ce in elem.items():
                            key = (m, e)
                            rhs[key] = rhs.get(key, ZERO) + c1 * c2 * cv * ce
            if _clean(lhs) != _clean(rhs):
                witness = f"h={h.labels[a]}, v{k}"
                break
        if witness:
            break
    rpt.add("YD compatibility", witness is None, witness)
    return rpt


def _antipode_squared_is_identity(h: HopfData) -> bool:
    n = h.dim
    return h.antipode @ h.antipode == Matrix.identity(n)


def to_left_left(yd: YDStructure, h: HopfData) -> YDStructure:
    """``rho_l(v) = S(v_1) (x) v_0``; the result is checked for the left-left identity."""
    if yd.side != "left-right":
        raise YDStructureError("to_left_left expects a left-right structure")
    if not _antipode_squared_is_identity(h):
        raise YDStructureError("S^2 != id; the conversion is only implemented for involutive antipodes")
    coaction = []
    for k in range(yd.dim):
        acc: dict = {}
        for c, l, a in yd.coaction[k]:
            for b, cs in h.S({a: ONE}).items():
                acc[l, b] = acc.get((l, b), ZERO) + c * cs
        coaction.append([(c, l, b) for (l, b), c in sorted(_clean(acc).items())])
    out = YDStructure(yd.dim, yd.action, coaction, "left-left", yd.label)
    rpt = verify_comodule(out, h)
    rpt.extend(verify_yd_compatibility(out, h))
    if not rpt.passed:
        f = rpt.failures()[0]
        raise YDStructureError(f"{yd.label}: left-left {f.name} fails [{f.witness}]")
    return out


def braiding_matrix(yd_l: YDStructure) -> Matrix:
    d = yd_l.dim
    rows = [[ZERO] * (d * d) for _ in range(d * d)]
    for k in range(d):
        for c, l0, a in yd_l.coaction[k]:
            # c(v_k (x) v_l) gets b_a . v_l (x) v_l0
            m = yd_l.action[a]
            for l in range(d):
                for i in range(d):
                    e = m[i, l]
                    if e:
                        rows[i * d + l0][k * d + l] = rows[i * d + l0][k * d + l] + c * e
    return Matrix(rows)


def braid_equation_holds(c: Matrix, d: int) -> bool:
    one = Matrix.identity(d)
    c12 = c.kron(one)
    c23 = one.kron(c)
    return c12 @ c23 @ c12 == c23 @ c12 @ c23


def braiding(yd_l: YDStructure) -> Braiding:
    if yd_l.side != "left-left":
        raise YDStructureError("braiding expects a left-left structure")
    d = yd_l.dim
    c = braiding_matrix(yd_l)
    rpt = Report(f"braiding {yd_l.label}")
    rpt.add("braid equation", braid_equation_holds(c, d))
    rpt.add("invertible", mat_rank(c) == d * d)
    if not rpt.passed:
        raise YDStructureError(f"{yd_l.label}: braiding fails {rpt.failures()[0].name}")
    return Braiding(d, c, yd_l.label, rpt)


def braiding_of(rep: Representation, h: HopfData) -> Braiding:
    return braiding(to_left_left(coaction_from_action(rep, h), h))


# --------------------------------------------------------------------------
# shape of a braiding


def diagonal_type(c: Braiding) -> list | None:
    """``q`` with ``c(x_i (x) x_j) = q_ij x_j (x) x_i`` in the given basis, else None."""
    d = c.dim
    q = [[ZERO] * d for _ in range(d)]
    for k in range(d):
        for l in range(d):
            img = c.apply(k, l)
            if set(img) != {(l, k)}:
                return None
            q[k][l] = img[l, k]
    return q


def structure_scalars(c: Braiding) -> tuple | None:
    """``(r, p, p', m)`` when c(v v) = r w w, c(v w) = p v w, c(w v) = p' w v, c(w w) = m v v."""
    if c.dim != 2:
        return None
    pattern = {(0, 0): (1, 1), (0, 1): (0, 1), (1, 0): (1, 0), (1, 1): (0, 0)}
    vals = []
    for src, dst in pattern.items():
        img = c.apply(*src)
        if set(img) != {dst}:
            return None
        vals.append(img[dst])
    return tuple(vals)


def _q_matrix(entries) -> list:
    return [list(entries[0]), list(entries[1])]


def table2_family(family: str, mu: str | None = None) -> list:
    """All q-matrices the braiding table allows for an S1/S2/S4 entry."""
    out = []
    if family == "S1":
        for i in range(4):
            a = XI**i
            out.append(_q_matrix(((a, a), (-a, a))))
            out.append(_q_matrix(((a, -a), (a, a))))
    elif family == "S2":
        out.append(_q_matrix(((ONE, ONE), (ONE, ONE))))
        m = -ONE
        out.append(_q_matrix(((m, m), (m, m))))
    elif family == "S4":
        scalars = (ONE, -ONE) if mu in (None, "1") else ()
        scalars += (XI, -XI) if mu in (None, "x2") else ()
        for a in scalars:
            out.append(_q_matrix(((a, -a), (a, a))))
    return out


def table3_family(mu: str) -> list:
    """Allowed ``(r, p, p', m)`` for S3 entries, read column-wise from the braiding table."""
    x = XI
    out = []
    if mu == "x":
        for s in (1, -1):
            out += [
                (s * x, s * x, s * x, -s * x),
                (-s * ONE, s * ONE, s * ONE, s * ONE),
                (s * ONE, s * ONE, s * ONE, -s * ONE),
                (-s * x, s * x, s * x, s * x),
            ]
    else:
        for s in (1, -1):
            out += [
                (-s * ONE, -s * ONE, -s * ONE, s * ONE),
                (-s * x, s * x, s * x, s * x),
                (-s * x, -s * x, -s * x, s * x),
                (-s * ONE, s * ONE, s * ONE, s * ONE),
            ]
    return out


def table_membership(rep: Representation, c: Braiding) -> tuple[bool, str]:
    """Is the computed braiding one of the shapes the braiding tables allow for this family?"""
    fam = rep.family
    if fam == "S0":
        q = diagonal_type(c)
        ok = q is not None and q[0][0] in (ONE, -ONE)
        return ok, f"c = {q[0][0] if q else '?'}"
    if fam in ("S1", "S2", "S4"):
        q = diagonal_type(c)
        if q is None:
            return False, "not diagonal"
        ok = q in table2_family(fam, rep.params.get("mu"))
        return ok, format_q(q)
    if fam == "S3":
        if diagonal_type(c) is not None:
            return False, "diagonal"
        s = structure_scalars(c)
        if s is None:
            return False, "not of (r, p, p, m) shape"
        ok = s[1] == s[2] and s in table3_family(rep.params["mu"])
        return ok, "(r,p,p',m) = (" + ", ".join(map(str, s)) + ")"
    return False, f"unknown family {fam}"


def format_q(q) -> str:
    return "[" + "; ".join(" ".join(str(e) for e in row) for row in q) + "]"


__all__ = [
    "YDStructure",
    "Braiding",
    "YDStructureError",
    "coaction_from_action",
    "verify_comodule",
    "verify_yd_compatibility",
    "to_left_left",
    "braiding",
    "braiding_of",
    "braid_equation_holds",
    "diagonal_type",
    "structure_scalars",
    "table2_family",
    "table3_family",
    "table_membership",
    "format_q",
]
