"""Bicrossed-product Hopf algebras k^G #_{sigma,tau} kF with G = Z4 x Z2, F = Z2.

Elements of H are sparse vectors ``{basis index: Scalar}``.  The basis of
H is ``e_g`` and ``e_g t`` with index ``idx(g, f) = f*8 + j*4 + i`` for
``g = x^i y^j`` and ``f`` in {0, 1} (0 is the identity of F, 1 is ``t``).
Every serialized matrix in this package depends on that ordering.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .exactlinalg import ONE, XI, ZERO, Matrix, Scalar, mat_inverse
from .report import Report

SCHEMA_VERSION = 1


# --------------------------------------------------------------------------
# the groups


@dataclass(frozen=True, order=True)
class GroupElt:
    """``x^i y^j`` in G = <x, y | x^4 = y^2 = 1, xy = yx>."""

    i: int
    j: int

    def __post_init__(self):
        if not (0 <= self.i <= 3 and 0 <= self.j <= 1):
            raise ValueError(f"exponents out of range: x^{self.i} y^{self.j}")

    def __mul__(self, other: "GroupElt") -> "GroupElt":
        return GroupElt((self.i + other.i) % 4, (self.j + other.j) % 2)

    def inv(self) -> "GroupElt":
        return GroupElt((-self.i) % 4, self.j)

    def __pow__(self, k: int) -> "GroupElt":
        return GroupElt((self.i * k) % 4, (self.j * k) % 2)

    @property
    def index(self) -> int:
        return self.j * 4 + self.i

    @property
    def label(self) -> str:
        xs = {0: "", 1: "x", 2: "x2", 3: "x3"}[self.i]
        s = xs + ("y" if self.j else "")
        return s or "1"

    def __str__(self):
        return self.label

    @classmethod
    def parse(cls, label: str) -> "GroupElt":
        for g in G:
            if g.label == label:
                return g
        raise ValueError(f"unknown group element {label!r}")


G: tuple[GroupElt, ...] = tuple(GroupElt(i, j) for j in (0, 1) for i in range(4))
E = GroupElt(0, 0)
X = GroupElt(1, 0)
Y = GroupElt(0, 1)
F = (0, 1)
F_LABELS = ("1", "t")


def idx(g: GroupElt, f: int) -> int:
    return f * 8 + g.index


def basis_element(k: int) -> tuple[GroupElt, int]:
    return G[k % 8], k // 8


def h_label(k: int) -> str:
    g, f = basis_element(k)
    return f"e_{g.label}" + (".t" if f else "")


# --------------------------------------------------------------------------
# matched pair data


@dataclass(frozen=True)
class MatchedPairData:
    """Matched pair (F, G, <|, |>) with normal cocycles (sigma, tau).

    ``group_action[g, f]`` is ``g <| f`` in G, ``quotient_action[g, f]`` is
    ``g |> f`` in F, ``sigma[g, f, f2]`` and ``tau[g, g2, f]`` are scalars.
    """

    name: str
    group_action: dict
    quotient_action: dict
    sigma: dict
    tau: dict

    def to_json(self) -> dict:
        fl = F_LABELS
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "group_action": {
                fl[f]: {g.label: self.group_action[g, f].label for g in G} for f in F
            },
            "quotient_action": {
                fl[f]: {g.label: fl[self.quotient_action[g, f]] for g in G} for f in F
            },
            "sigma": {
                f"{fl[f]},{fl[f2]}": {g.label: self.sigma[g, f, f2].to_json() for g in G}
                for f in F
                for f2 in F
            },
            "tau": {
                fl[f]: {
                    f"{g.label},{g2.label}": self.tau[g, g2, f].to_json() for g in G for g2 in G
                }
                for f in F
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MatchedPairData":
        fl = {"1": 0, "t": 1}
        ga = {
            (GroupElt.parse(g), fl[f]): GroupElt.parse(v)
            for f, table in obj["group_action"].items()
            for g, v in table.items()
        }
        qa = {
            (GroupElt.parse(g), fl[f]): fl[v]
            for f, table in obj["quotient_action"].items()
            for g, v in table.items()
        }
        sigma = {}
        for key, table in obj["sigma"].items():
            f, f2 = (fl[s] for s in key.split(","))
            for g, v in table.items():
                sigma[GroupElt.parse(g), f, f2] = Scalar.from_json(v)
        tau = {}
        for f, table in obj["tau"].items():
            for key, v in table.items():
                g, g2 = (GroupElt.parse(s) for s in key.split(","))
                tau[g, g2, fl[f]] = Scalar.from_json(v)
        data = cls(obj["name"], ga, qa, sigma, tau)
        missing = _missing_keys(data)
        if missing:
            raise ValueError(f"matched pair table incomplete: {missing[:3]} ...")
        return data


def _missing_keys(data: MatchedPairData) -> list:
    out = []
    for g, f in itertools.product(G, F):
        for table in (data.group_action, data.quotient_action):
            if (g, f) not in table:
                out.append((g.label, f))
        for f2 in F:
            if (g, f, f2) not in data.sigma:
                out.append(("sigma", g.label, f, f2))
        for g2 in G:
            if (g, g2, f) not in data.tau:
                out.append(("tau", g.label, g2.label, f))
    return out


def make_matched_pair(name, t_on_x, t_on_y, sigma_tt, tau_t) -> MatchedPairData:
    """Data with trivial |> and t acting on G by the automorphism x -> t_on_x, y -> t_on_y.

    ``sigma_tt(g)`` gives sigma(g; t, t); ``tau_t(g, h)`` gives tau(g, h; t).
    All other cocycle values are the normalized 1.
    """
    ga, qa, sigma, tau = {}, {}, {}, {}
    for g in G:
        ga[g, 0] = g
        ga[g, 1] = (t_on_x**g.i) * (t_on_y**g.j)
        for f in F:
            qa[g, f] = f
            for f2 in F:
                sigma[g, f, f2] = Scalar(sigma_tt(g)) if f == f2 == 1 else ONE
            for h in G:
                tau[g, h, f] = Scalar(tau_t(g, h)) if f == 1 else ONE
    return MatchedPairData(name, ga, qa, sigma, tau)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _tau_jk(g: GroupElt, h: GroupElt) -> int:
    return _sign(g.j * h.i)


def _half_twist(g: GroupElt) -> int:
    return _sign(g.i * (g.i - 1) // 2)


PRESETS = {
    "Ha1": lambda: make_matched_pair("Ha1", X, X**2 * Y, lambda g: 1, _tau_jk),
    "Hay": lambda: make_matched_pair("Hay", X, X**2 * Y, lambda g: _sign(g.j), _tau_jk),
    "Hby": lambda: make_matched_pair("Hby", X**3, Y, lambda g: _sign(g.j), _tau_jk),
    "Hbx2y": lambda: make_matched_pair("Hbx2y", X**3, Y, lambda g: _sign(g.i + g.j), _tau_jk),
    "Hb1": lambda: make_matched_pair("Hb1", X**3, Y, lambda g: 1, _tau_jk),
    "Hc_sigma0": lambda: make_matched_pair("Hc_sigma0", X * Y, Y, _half_twist, _tau_jk),
    "Hc_sigma1": lambda: make_matched_pair(
        "Hc_sigma1", X * Y, Y, lambda g: _half_twist(g) * XI**g.i, _tau_jk
    ),
}


def trivial_matched_pair() -> MatchedPairData:
    """Trivial actions and cocycles: the Hopf algebra k^G (x) kF."""
    return make_matched_pair("trivial", X, Y, lambda g: 1, lambda g, h: 1)


def preset(name: str) -> MatchedPairData:
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; choose from {sorted(PRESETS)}") from None


def load_matched_pair(spec: str) -> MatchedPairData:
    """Preset name or path to a JSON file."""
    if spec in PRESETS:
        return preset(spec)
    path = Path(spec)
    if path.suffix == ".json" and path.exists():
        return MatchedPairData.from_json(json.loads(path.read_text()))
    raise KeyError(f"unknown algebra {spec!r}; choose from {sorted(PRESETS)} or a .json path")


# --------------------------------------------------------------------------
# validation of matched pair data


def _fmul(f: int, f2: int) -> int:
    return (f + f2) % 2


def _root_of_unity(s: Scalar) -> bool:
    return s.norm() == 1 and s.re in (0, 1, -1) and s.im in (0, 1, -1)


def validate_matched_pair(data: MatchedPairData) -> Report:
    """Exhaustive check of the matched-pair and cocycle identities.

    Every identity is tested on all (g, g', g'') in G^3 and (t, t', t'') in
    F^3; each failing identity records its first witness tuple.
    """
    rep = Report(f"matched pair {data.name}")
    missing = _missing_keys(data)
    rep.add("tables complete", not missing, str(missing[:3]))
    if missing:
        return rep
    act, qact, sigma, tau = data.group_action, data.quotient_action, data.sigma, data.tau

    def first(pred, domain):
        for args in domain:
            if not pred(*args):
                return args
        return None

    def fmt(args):
        return ", ".join(a.label if isinstance(a, GroupElt) else F_LABELS[a] for a in args)

    def record(name, pred, domain, claim):
        w = first(pred, domain)
        rep.add(name, w is None, None if w is None else fmt(w), claim)

    G1F2 = list(itertools.product(G, F, F))
    G2F1 = list(itertools.product(G, G, F))
    G3F1 = list(itertools.product(G, G, G, F))
    G1F3 = list(itertools.product(G, F, F, F))

    record(
        "<| is a right action",
        lambda g, f, f2: act[g, 0] == g and act[act[g, f], f2] == act[g, _fmul(f, f2)],
        G1F2,
        "g <| 1 = g, (g <| t) <| t' = g <| tt'",
    )
    record(
        "|> is a left action",
        lambda g, h, f: qact[E, f] == f and qact[g * h, f] == qact[g, qact[h, f]],
        G2F1,
        "1 |> t = t, gh |> t = g |> (h |> t)",
    )
    record(
        "action compatibility on F",
        lambda g, f, f2: qact[g, _fmul(f, f2)] == _fmul(qact[g, f], qact[act[g, f], f2]),
        G1F2,
        "g |> tt' = (g |> t)((g <| t) |> t')",
    )
    record(
        "action compatibility on G",
        lambda g, h, f: act[g * h, f] == act[g, qact[h, f]] * act[h, f],
        G2F1,
        "gg' <| t = (g <| (g' |> t))(g' <| t)",
    )
    record(
        "sigma normalized",
        lambda g, f, f2: sigma[E, f, f2] == 1 and sigma[g, 0, f2] == 1 and sigma[g, f, 0] == 1,
        G1F2,
        "sigma(1;t,t') = sigma(g;1,t') = sigma(g;t,1) = 1",
    )
    record(
        "sigma cocycle",
        lambda g, f, f2, f3: sigma[act[g, f], f2, f3] * sigma[g, f, _fmul(f2, f3)]
        == sigma[g, f, f2] * sigma[g, _fmul(f, f2), f3],
        G1F3,
        "sigma(g<|t;t',t'') sigma(g;t,t't'') = sigma(g;t,t') sigma(g;tt',t'')",
    )
    record(
        "tau normalized",
        lambda g, h, f: tau[E, h, f] == 1 and tau[g, E, f] == 1 and tau[g, h, 0] == 1,
        G2F1,
        "tau(1,g';t) = tau(g,1;t) = tau(g,g';1) = 1",
    )
    record(
        "tau cocycle",
        lambda g, h, k, f: tau[g * h, k, f] * tau[g, h, qact[k, f]]
        == tau[h, k, f] * tau[g, h * k, f],
        G3F1,
        "tau(gg',g'';t) tau(g,g';g''|>t) = tau(g',g'';t) tau(g,g'g'';t)",
    )
    record(
        "sigma/tau compatibility",
        lambda g, h, f, f2: sigma[g * h, f, f2] * tau[g, h, _fmul(f, f2)]
        == sigma[g, qact[h, f], qact[act[h, f], f2]]
        * sigma[h, f, f2]
        * tau[g, h, f]
        * tau[act[g, qact[h, f]], act[h, f], f2],
        list(itertools.product(G, G, F, F)),
        "sigma(gg';t,t') tau(g,g';tt') = sigma(g;g'|>t,(g'<|t)|>t') sigma(g';t,t') "
        "tau(g,g';t) tau(g<|(g'|>t), g'<|t; t')",
    )
    values = list(sigma.values()) + list(tau.values())
    bad = next((v for v in values if not _root_of_unity(v)), None)
    rep.add("values are 4th roots of unity", bad is None, str(bad), "cocycle values in {+-1, +-i}")
    return rep


class InvalidMatchedPair(ValueError):
    def __init__(self, report: Report):
        self.report = report
        names = ", ".join(c.name for c in report.failures())
        super().__init__(f"matched pair {report.title!r} rejected: {names}")


# --------------------------------------------------------------------------
# finite-dimensional Hopf algebras by structure constants


def _axpy(acc: dict, coeff: Scalar, vec: dict) -> None:
    for k, v in vec.items():
        s = acc.get(k)
        acc[k] = coeff * v if s is None else s + coeff * v


def _clean(vec: dict) -> dict:
    return {k: v for k, v in vec.items() if v}


@dataclass
class HopfData:
    """Structure constants of a finite-dimensional Hopf algebra.

    ``mult[a, b]`` is the sparse vector ``b_a * b_b`` (missing key = 0),
    ``comult[a]`` lists ``(coeff, b, c)`` with ``Delta(b_a) = sum coeff b_b (x) b_c``,
    and column ``a`` of ``antipode`` holds the coordinates of ``S(b_a)``.
    """

    name: str
    labels: tuple[str, ...]
    mult: dict
    comult: dict
    unit: dict
    counit: tuple
    antipode: Matrix
    source: MatchedPairData | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    # elementwise operations -------------------------------------------
    def product(self, u: dict, v: dict) -> dict:
        acc: dict = {}
        mult = self.mult
        for a, ca in u.items():
            for b, cb in v.items():
                r = mult.get((a, b))
                if r:
                    _axpy(acc, ca * cb, r)
        return _clean(acc)

    def coproduct(self, u: dict) -> dict:
        acc: dict = {}
        for a, ca in u.items():
            for c, b1, b2 in self.comult[a]:
                key = (b1, b2)
                acc[key] = acc.get(key, ZERO) + ca * c
        return _clean(acc)

    def coproduct2(self, a: int) -> list[tuple[Scalar, int, int, int]]:
        """``(Delta (x) id) Delta(b_a)`` as ``(coeff, b1, b2, b3)`` terms."""
        acc: dict = {}
        for c, b12, b3 in self.comult[a]:
            for c2, b1, b2 in self.comult[b12]:
                key = (b1, b2, b3)
                acc[key] = acc.get(key, ZERO) + c * c2
        return [(v, *k) for k, v in acc.items() if v]

    def epsilon(self, u: dict) -> Scalar:
        out = ZERO
        for a, ca in u.items():
            out = out + ca * self.counit[a]
        return out

    @cached_property
    def _antipode_cols(self) -> list[dict]:
        return _columns(self.antipode)

    @cached_property
    def antipode_inverse(self) -> Matrix:
        return mat_inverse(self.antipode)

    @cached_property
    def _antipode_inv_cols(self) -> list[dict]:
        return _columns(self.antipode_inverse)

    def S(self, u: dict) -> dict:
        acc: dict = {}
        for a, ca in u.items():
            _axpy(acc, ca, self._antipode_cols[a])
        return _clean(acc)

    def S_inv(self, u: dict) -> dict:
        acc: dict = {}
        for a, ca in u.items():
            _axpy(acc, ca, self._antipode_inv_cols[a])
        return _clean(acc)

    def basis(self, a: int) -> dict:
        return {a: ONE}

    def one(self) -> dict:
        return dict(self.unit)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "labels": list(self.labels),
            "mult": [
                {"a": a, "b": b, "value": {str(k): v.to_json() for k, v in vec.items()}}
                for (a, b), vec in sorted(self.mult.items())
            ],
            "comult": {
                str(a): [[c.to_json(), b1, b2] for c, b1, b2 in terms]
                for a, terms in sorted(self.comult.items())
            },
            "unit": {str(k): v.to_json() for k, v in sorted(self.unit.items())},
            "counit": [c.to_json() for c in self.counit],
            "antipode": self.antipode.to_json(),
        }


def _columns(m: Matrix) -> list[dict]:
    cols: list[dict] = [{} for _ in range(m.cols)]
    for i, j, v in m.nonzero_entries():
        cols[j][i] = v
    return cols


def build_bicrossed_product(data: MatchedPairData) -> HopfData:
    """Structure constants of k^G #_{sigma,tau} kF in the ``idx`` basis."""
    rep = validate_matched_pair(data)
    if not rep.passed:
        raise InvalidMatchedPair(rep)
    act, qact, sigma, tau = data.group_action, data.quotient_action, data.sigma, data.tau
    mult = {}
    comult = {}
    antipode = [[ZERO] * 16 for _ in range(16)]
    for g, f in itertools.product(G, F):
        a = idx(g, f)
        for h, f2 in itertools.product(G, F):
            if act[g, f] == h:
                mult[a, idx(h, f2)] = {idx(g, _fmul(f, f2)): sigma[g, f, f2]}
        comult[a] = [
            (tau[g1, g1.inv() * g, f], idx(g1, qact[g1.inv() * g, f]), idx(g1.inv() * g, f))
            for g1 in G
        ]
        u = qact[g, f]  # F = Z2, so u^-1 = u
        coeff = (sigma[g.inv(), u, u] * tau[g.inv(), g, f]).inverse()
        antipode[idx(act[g, f].inv(), u)][a] = coeff
    counit = tuple(ONE if (k % 8 == 0) else ZERO for k in range(16))
    unit = {idx(g, 0): ONE for g in G}
    labels = tuple(h_label(k) for k in range(16))
    return HopfData(data.name, labels, mult, comult, unit, counit, Matrix(antipode), data)


# --------------------------------------------------------------------------
# axioms and duality


def verify_hopf_axioms(h: HopfData) -> Report:
    """Check every Hopf algebra axiom on the basis; also report whether S^2 = id."""
    rep = Report(f"Hopf axioms {h.name}")
    n = h.dim
    B = [h.basis(a) for a in range(n)]
    lab = h.labels
    one = h.one()

    def first(pred, domain):
        return next((args for args in domain if not pred(*args)), None)

    def fmt(w):
        return None if w is None else ", ".join(lab[a] for a in w)

    def record(name, pred, domain, claim=""):
        w = first(pred, domain)
        rep.add(name, w is None, fmt(w), claim)

    prod = h.product
    record(
        "associativity",
        lambda a, b, c: prod(prod(B[a], B[b]), B[c]) == prod(B[a], prod(B[b], B[c])),
        itertools.product(range(n), repeat=3),
        "(ab)c = a(bc)",
    )
    record("unit", lambda a: prod(one, B[a]) == B[a] == prod(B[a], one), ((a,) for a in range(n)), "1a = a = a1")

    def coassoc(a):
        left: dict = {}
        right: dict = {}
        for c, b1, b2 in h.comult[a]:
            for c2, b11, b12 in h.comult[b1]:
                k = (b11, b12, b2)
                left[k] = left.get(k, ZERO) + c * c2
            for c2, b21, b22 in h.comult[b2]:
                k = (b1, b21, b22)
                right[k] = right.get(k, ZERO) + c * c2
        return _clean(left) == _clean(right)

    record("coassociativity", coassoc, ((a,) for a in range(n)), "(D x id)D = (id x D)D")

    def counit_law(a):
        left: dict = {}
        right: dict = {}
        for c, b1, b2 in h.comult[a]:
            _axpy(left, c * h.counit[b1], B[b2])
            _axpy(right, c * h.counit[b2], B[b1])
        return _clean(left) == B[a] == _clean(right)

    record("counit", counit_law, ((a,) for a in range(n)), "(eps x id)D = id = (id x eps)D")

    def tensor_product(x: dict, y: dict) -> dict:
        acc: dict = {}
        for (a1, a2), ca in x.items():
            for (b1, b2), cb in y.items():
                p1 = h.mult.get((a1, b1))
                p2 = h.mult.get((a2, b2))
                if not p1 or not p2:
                    continue
                for k1, v1 in p1.items():
                    for k2, v2 in p2.items():
                        key = (k1, k2)
                        acc[key] = acc.get(key, ZERO) + ca * cb * v1 * v2
        return _clean(acc)

    coprods = [h.coproduct(B[a]) for a in range(n)]
    record(
        "coproduct multiplicative",
        lambda a, b: h.coproduct(prod(B[a], B[b])) == tensor_product(coprods[a], coprods[b]),
        itertools.product(range(n), repeat=2),
        "D(ab) = D(a)D(b)",
    )
    one_one = {(a, b): ca * cb for a, ca in one.items() for b, cb in one.items()}
    rep.add("coproduct unital", h.coproduct(one) == _clean(one_one), None, "D(1) = 1 x 1")
    record(
        "counit multiplicative",
        lambda a, b: h.epsilon(prod(B[a], B[b])) == h.counit[a] * h.counit[b],
        itertools.product(range(n), repeat=2),
        "eps(ab) = eps(a)eps(b)",
    )
    rep.add("counit unital", h.epsilon(one) == ONE, None, "eps(1) = 1")

    def antipode_law(a):
        left: dict = {}
        right: dict = {}
        for c, b1, b2 in h.comult[a]:
            _axpy(left, c, prod(h.S(B[b1]), B[b2]))
            _axpy(right, c, prod(B[b1], h.S(B[b2])))
        target = _clean({k: h.counit[a] * v for k, v in one.items()})
        return _clean(left) == target == _clean(right)

    record("antipode", antipode_law, ((a,) for a in range(n)), "m(S x id)D = u eps = m(id x S)D")
    sq = h.antipode @ h.antipode
    rep.add("S^2 = id", sq == Matrix.identity(n), None, "antipode is an involution", required=False)
    return rep


def dual_hopf(h: HopfData, labels=None, name=None) -> HopfData:
    """The dual Hopf algebra on the dual basis (structure constants transposed)."""
    n = h.dim
    if labels is None:
        if h.source is not None and h.labels == tuple(h_label(k) for k in range(16)):
            labels = tuple(dual_label(k) for k in range(16))
        else:
            labels = tuple(f"{l}*" for l in h.labels)
    mult: dict = {}
    for c in range(n):
        for coeff, a, b in h.comult[c]:
            vec = mult.setdefault((a, b), {})
            vec[c] = vec.get(c, ZERO) + coeff
    mult = {k: _clean(v) for k, v in mult.items() if _clean(v)}
    comult: dict = {c: [] for c in range(n)}
    for (a, b), vec in sorted(h.mult.items()):
        for c, coeff in vec.items():
            comult[c].append((coeff, a, b))
    unit = _clean({a: h.counit[a] for a in range(n)})
    counit = tuple(h.unit.get(a, ZERO) for a in range(n))
    return HopfData(name or f"{h.name}*", tuple(labels), mult, comult, unit, counit, h.antipode.T, h.source)


def dual_label(k: int) -> str:
    g, f = basis_element(k)
    return ("chi_" if f else "zeta_") + g.label
