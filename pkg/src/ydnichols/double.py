"""The Drinfeld double D(H) = H*cop (x) H by structure constants.

Basis element ``p = f*n + a`` is ``phi_f (x) b_a`` with ``phi_f`` from the
dual basis of H* and ``b_a`` from the basis of H (``n = dim H``).  The
product is

    (phi (x) h)(phi' (x) h') = sum phi * psi (x) h_2 h',
    psi(k) = phi'(S^-1(h_3) k h_1),   Delta_2(h) = (Delta (x) id) Delta(h),

i.e. the cross relation ``h phi' = sum psi (x) h_2`` followed by the
products in H* and in H.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .exactlinalg import ONE, ZERO, Scalar
from .hopfcore import (
    E,
    F_LABELS,
    G,
    GroupElt,
    HopfData,
    MatchedPairData,
    _axpy,
    _clean,
    dual_hopf,
    idx,
    verify_hopf_axioms,
)
from .report import Report


class DoubleConstructionError(ValueError):
    pass


@dataclass
class DoubleAlgebra:
    h: HopfData
    hd: HopfData
    mult: dict
    cross: dict
    generators: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.h.dim

    @property
    def dim(self) -> int:
        return self.n * self.n

    def index(self, f: int, a: int) -> int:
        return f * self.n + a

    def split(self, p: int) -> tuple[int, int]:
        return divmod(p, self.n)

    def label(self, p: int) -> str:
        f, a = self.split(p)
        return f"{self.hd.labels[f]}#{self.h.labels[a]}"

    def product(self, u: dict, v: dict) -> dict:
        acc: dict = {}
        mult = self.mult
        for p, cp in u.items():
            for q, cq in v.items():
                r = mult.get((p, q))
                if r:
                    _axpy(acc, cp * cq, r)
        return _clean(acc)

    def embed_h(self, u: dict) -> dict:
        acc: dict = {}
        for f, cf in self.hd.unit.items():
            for a, ca in u.items():
                acc[self.index(f, a)] = cf * ca
        return _clean(acc)

    def embed_dual(self, u: dict) -> dict:
        acc: dict = {}
        for f, cf in u.items():
            for a, ca in self.h.unit.items():
                acc[self.index(f, a)] = cf * ca
        return _clean(acc)

    def one(self) -> dict:
        return self.embed_h(self.h.one())

    def basis(self, p: int) -> dict:
        return {p: ONE}

    def generator(self, name: str) -> dict:
        return self.generators[name]

    def to_json(self) -> dict:
        return {
            "name": f"D({self.h.name})",
            "dim": self.dim,
            "generators": {
                name: {self.label(p): c.to_json() for p, c in sorted(vec.items())}
                for name, vec in self.generators.items()
            },
        }


def _generator_table(d: DoubleAlgebra) -> dict:
    """Images of e_g, t, zeta_g, chi_g when H comes from a bicrossed product."""
    if d.h.source is None or d.n != 16:
        return {}
    gens = {}
    for g in G:
        gens[f"e_{g.label}"] = d.embed_h({idx(g, 0): ONE})
    gens["t"] = d.embed_h({idx(g, 1): ONE for g in G})
    for g in G:
        gens[f"zeta_{g.label}"] = d.embed_dual({idx(g, 0): ONE})
        gens[f"chi_{g.label}"] = d.embed_dual({idx(g, 1): ONE})
    return gens


def drinfeld_double(h: HopfData, verify: bool = True, samples: int = 2000, seed: int = 0) -> DoubleAlgebra:
    """Build D(H); with ``verify`` a sampled associativity check guards the result."""
    try:
        h.antipode_inverse
    except ZeroDivisionError:
        raise DoubleConstructionError(f"antipode of {h.name} is not invertible") from None
    hd = dual_hopf(h)
    n = h.dim
    B = [h.basis(a) for a in range(n)]

    # cross[a, f] = b_a . phi_f as a sparse D-vector
    cross: dict = {}
    for a in range(n):
        acc: dict = {}
        for c, h1, h2, h3 in h.coproduct2(a):
            left = h.S_inv(B[h3])
            for k in range(n):
                vec = h.product(h.product(left, B[k]), B[h1])
                for f, val in vec.items():
                    row = acc.setdefault(f, {})
                    p = k * n + h2
                    row[p] = row.get(p, ZERO) + c * val
        for f in range(n):
            cross[a, f] = _clean(acc.get(f, {}))

    mult: dict = {}
    for f, a, f2, a2 in itertools.product(range(n), repeat=4):
        out: dict = {}
        for p, c in cross[a, f2].items():
            k, b = divmod(p, n)
            left = hd.mult.get((f, k))
            right = h.mult.get((b, a2))
            if not left or not right:
                continue
            for f3, c1 in left.items():
                for a3, c2 in right.items():
                    key = f3 * n + a3
                    out[key] = out.get(key, ZERO) + c * c1 * c2
        out = _clean(out)
        if out:
            mult[f * n + a, f2 * n + a2] = out
    d = DoubleAlgebra(h, hd, mult, cross)
    d.generators = _generator_table(d)
    if verify:
        rep = verify_double_associativity(d, samples=samples, seed=seed, generator_triples=False)
        if not rep.passed:
            raise DoubleConstructionError(str(rep))
    return d


def verify_double_associativity(
    d: DoubleAlgebra,
    samples: int = 10_000,
    seed: int = 0,
    generator_triples: bool = True,
    exhaustive: bool = False,
) -> Report:
    """Associativity, unit, factorization and the two embeddings of D(H)."""
    rep = Report(f"D({d.h.name}) algebra structure")
    N = d.dim
    prod = d.product
    B = [d.basis(p) for p in range(N)]

    def assoc(u, v, w):
        return prod(prod(u, v), w) == prod(u, prod(v, w))

    rng = random.Random(seed)
    if exhaustive:
        triples = itertools.product(range(N), repeat=3)
    else:
        triples = ((rng.randrange(N), rng.randrange(N), rng.randrange(N)) for _ in range(samples))
    w = next((t for t in triples if not assoc(B[t[0]], B[t[1]], B[t[2]])), None)
    rep.add(
        "associativity (all basis triples)" if exhaustive else f"associativity ({samples} random basis triples)",
        w is None,
        None if w is None else ", ".join(d.label(p) for p in w),
    )
    if generator_triples and d.generators:
        names = list(d.generators)
        gens = d.generators
        # (ab)c = a(bc) for all generator triples
        pairs = {(a, b): prod(gens[a], gens[b]) for a in names for b in names}
        w = None
        for a, b, c in itertools.product(names, repeat=3):
            if prod(pairs[a, b], gens[c]) != prod(gens[a], pairs[b, c]):
                w = (a, b, c)
                break
        rep.add("associativity (generator triples)", w is None, None if w is None else ", ".join(w))
    one = d.one()
    w = next((p for p in range(N) if not (prod(one, B[p]) == B[p] == prod(B[p], one))), None)
    rep.add("unit eps (x) 1", w is None, None if w is None else d.label(w))
    n = d.n
    w = None
    for f, a in itertools.product(range(n), repeat=2):
        lhs = prod(d.embed_dual({f: ONE}), d.embed_h({a: ONE}))
        if lhs != B[d.index(f, a)]:
            w = (f, a)
            break
    rep.add("factorization (phi (x) 1)(1 (x) h) = phi (x) h", w is None, None if w is None else str(w))
    w = None
    for a, b in itertools.product(range(n), repeat=2):
        if prod(d.embed_h({a: ONE}), d.embed_h({b: ONE})) != d.embed_h(d.h.mult.get((a, b), {})):
            w = (d.h.labels[a], d.h.labels[b])
            break
    rep.add("H -> D(H) is an algebra map", w is None, None if w is None else ", ".join(w))
    w = None
    for f, k in itertools.product(range(n), repeat=2):
        if prod(d.embed_dual({f: ONE}), d.embed_dual({k: ONE})) != d.embed_dual(d.hd.mult.get((f, k), {})):
            w = (d.hd.labels[f], d.hd.labels[k])
            break
    rep.add("H* -> D(H) is an algebra map", w is None, None if w is None else ", ".join(w))
    rep.add("dim D(H) = dim(H)^2", d.dim == n * n and len(d.generators) in (0, 25))
    return rep


# --------------------------------------------------------------------------
# the presentation by generators and relations


def verify_double_presentation(d: DoubleAlgebra, data: MatchedPairData | None = None) -> Report:
    """Instantiate every defining relation of D(H) over all g, h in G.

    The right-hand sides read their structure constants from ``data``, which
    defaults to the matched pair D(H) was built from; passing altered data
    checks the relations it would predict against the true product.
    """
    data = d.h.source if data is None else data
    if data is None or d.n != 16:
        raise ValueError("presentation check needs a double built from matched-pair data")
    rep = Report(f"D({d.h.name}) presentation")
    act, sigma, tau = data.group_action, data.sigma, data.tau
    gen = d.generators
    prod = d.product

    def e(g):
        return gen[f"e_{g.label}"]

    def zeta(g):
        return gen[f"zeta_{g.label}"]

    def chi(g):
        return gen[f"chi_{g.label}"]

    t = gen["t"]

    def scaled(c: Scalar, u: dict) -> dict:
        return _clean({k: c * v for k, v in u.items()})

    def add(*us) -> dict:
        acc: dict = {}
        for u in us:
            _axpy(acc, ONE, u)
        return _clean(acc)

    def tg(g):  # g <| t
        return act[g, 1]

    def family(name, claim, cases):
        w = None
        for label, lhs, rhs in cases:
            if lhs != rhs:
                w = label
                break
        rep.add(name, w is None, w, claim)

    pairs = list(itertools.product(G, G))
    family(
        "zeta_g zeta_h = zeta_gh",
        "dual group-like products",
        ((f"g={g},h={h}", prod(zeta(g), zeta(h)), zeta(g * h)) for g, h in pairs),
    )
    family(
        "chi_g chi_h = tau(g,h;t) chi_gh",
        "dual twisted products",
        ((f"g={g},h={h}", prod(chi(g), chi(h)), scaled(tau[g, h, 1], chi(g * h))) for g, h in pairs),
    )
    family(
        "zeta_g chi_h = 0 = chi_h zeta_g",
        "orthogonality of the two dual blocks",
        ((f"g={g},h={h}", add(prod(zeta(g), chi(h)), prod(chi(h), zeta(g))), {}) for g, h in pairs),
    )
    family("1 = zeta_1 + chi_1", "unit of H*", [("1", d.one(), add(zeta(E), chi(E)))])
    family("1 = sum_g e_g", "unit of H", [("1", d.one(), add(*(e(g) for g in G)))])
    family(
        "e_g e_h = delta_{g,h} e_g",
        "orthogonal idempotents",
        ((f"g={g},h={h}", prod(e(g), e(h)), e(g) if g == h else {}) for g, h in pairs),
    )
    family(
        "t e_g = e_{g<|t} t",
        "t permutes the idempotents",
        ((f"g={g}", prod(t, e(g)), prod(e(tg(g)), t)) for g in G),
    )
    family(
        "t^2 = sum_g sigma(g;t,t) e_g",
        "square of t",
        [("t", prod(t, t), add(*(scaled(sigma[g, 1, 1], e(g)) for g in G)))],
    )
    family(
        "e_g chi_h = chi_h e_{g h (h^-1<|t)}",
        "idempotents past chi",
        (
            (f"g={g},h={h}", prod(e(g), chi(h)), prod(chi(h), e(g * h * tg(h.inv()))))
            for g, h in pairs
        ),
    )
    family(
        "e_g zeta_h = zeta_h e_g",
        "idempotents commute with zeta",
        ((f"g={g},h={h}", prod(e(g), zeta(h)), prod(zeta(h), e(g))) for g, h in pairs),
    )

    def et(g):
        return prod(e(g), t)

    def t_zeta_rhs(h):
        ht, hinv_t = tg(h), tg(h.inv())
        inner = add(
            *(
                scaled(tau[ht, g, 1] * tau[ht * g, hinv_t, 1] * tau[ht, hinv_t, 1], et(g))
                for g in G
            )
        )
        return prod(zeta(ht), inner)

    def t_chi_rhs(h):
        ht, hinv_t = tg(h), tg(h.inv())
        inner = add(
            *(scaled(tau[h, g, 1] * tau[h * g, hinv_t, 1] * tau[ht, hinv_t, 1], et(g)) for g in G)
        )
        return prod(chi(ht), inner)

    family(
        "t zeta_h = zeta_{h<|t} (sum_g c(h,g) e_g t)",
        "t past zeta with tau twist",
        ((f"h={h}", prod(t, zeta(h)), t_zeta_rhs(h)) for h in G),
    )
    family(
        "t chi_h = chi_{h<|t} (sum_g c(h,g) e_g t)",
        "t past chi with tau twist",
        ((f"h={h}", prod(t, chi(h)), t_chi_rhs(h)) for h in G),
    )
    return rep


def double_verify(h: HopfData, samples: int = 10_000, exhaustive: bool = False) -> tuple[DoubleAlgebra, Report]:
    """Hopf axioms of H, structure checks of D(H) and its presentation, in one report."""
    rep = Report(f"double verify {h.name}")
    rep.extend(verify_hopf_axioms(h), "H: ")
    d = drinfeld_double(h, verify=False)
    rep.extend(verify_double_associativity(d, samples=samples, exhaustive=exhaustive), "D: ")
    if h.source is not None:
        rep.extend(verify_double_presentation(d), "relations: ")
    return d, rep


__all__ = [
    "DoubleAlgebra",
    "DoubleConstructionError",
    "drinfeld_double",
    "verify_double_associativity",
    "verify_double_presentation",
    "double_verify",
    "F_LABELS",
    "GroupElt",
]
