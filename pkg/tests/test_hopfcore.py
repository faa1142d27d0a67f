from __future__ import annotations

import dataclasses
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ydnichols.exactlinalg import ONE, XI, ZERO, Matrix
from ydnichols.hopfcore import (
    PRESETS,
    E,
    G,
    GroupElt,
    InvalidMatchedPair,
    MatchedPairData,
    _axpy,
    _clean,
    build_bicrossed_product,
    dual_hopf,
    h_label,
    idx,
    load_matched_pair,
    preset,
    trivial_matched_pair,
    validate_matched_pair,
    verify_hopf_axioms,
)

X, Y = GroupElt(1, 0), GroupElt(0, 1)
group = st.builds(GroupElt, st.integers(0, 3), st.integers(0, 1))


@given(group, group, group)
def test_group_law(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * E == a == E * a
    assert a * a.inv() == E


def test_group_relations():
    assert X**4 == E and Y**2 == E
    assert X * Y == Y * X
    assert GroupElt.parse("x3y") == X**3 * Y
    assert [g.label for g in G] == ["1", "x", "x2", "x3", "y", "xy", "x2y", "x3y"]


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_are_matched_pairs(name):
    rep = validate_matched_pair(preset(name))
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_are_hopf_algebras(name):
    h = build_bicrossed_product(preset(name))
    rep = verify_hopf_axioms(h)
    assert rep.passed, rep.failures()
    assert rep.get("S^2 = id").passed


def test_actions_of_the_sigma0_algebra():
    data = preset("Hc_sigma0")
    assert data.group_action[X, 1] == X * Y
    assert data.group_action[Y, 1] == Y
    assert all(data.quotient_action[g, 1] == 1 for g in G)
    # sigma(g; t, t) for g = x^i y^j is (-1)^{i(i-1)/2}
    assert [data.sigma[X**i, 1, 1] for i in range(4)] == [ONE, ONE, -ONE, -ONE]
    assert data.tau[Y, X, 1] == -ONE and data.tau[X, Y, 1] == ONE


def test_sigma1_differs_from_sigma0_by_xi_powers():
    s0, s1 = preset("Hc_sigma0"), preset("Hc_sigma1")
    for g in G:
        assert s1.sigma[g, 1, 1] == s0.sigma[g, 1, 1] * XI**g.i


def test_trivial_matched_pair_is_commutative():
    h = build_bicrossed_product(trivial_matched_pair())
    assert verify_hopf_axioms(h).passed
    for a in range(16):
        for b in range(16):
            assert h.product(h.basis(a), h.basis(b)) == h.product(h.basis(b), h.basis(a))


def test_basis_multiplication(h):
    t = {idx(g, 1): ONE for g in G}
    assert h.product(t, h.basis(idx(X, 0))) == h.product(h.basis(idx(X * Y, 0)), t)
    # t^2 = sum_g sigma(g;t,t) e_g
    sq = h.product(t, t)
    assert sq == {idx(g, 0): h.source.sigma[g, 1, 1] for g in G}


def test_group_likes_and_counit(h):
    for g in G:
        assert h.counit[idx(g, 0)] == (ONE if g == E else ZERO)
    assert h.one() == {idx(g, 0): ONE for g in G}


def test_antipode_is_invertible_and_involutive(h):
    assert h.antipode @ h.antipode_inverse == Matrix.identity(16)
    assert h.antipode @ h.antipode == Matrix.identity(16)


def test_dual_is_hopf(h):
    hd = dual_hopf(h)
    assert verify_hopf_axioms(hd).passed
    assert hd.labels[0] == "zeta_1" and hd.labels[9] == "chi_x"


def test_json_round_trip():
    for name in PRESETS:
        data = preset(name)
        again = MatchedPairData.from_json(json.loads(json.dumps(data.to_json())))
        assert again == data


def test_load_from_file(tmp_path):
    path = tmp_path / "hb1.json"
    path.write_text(json.dumps(preset("Hb1").to_json()))
    assert load_matched_pair(str(path)) == preset("Hb1")
    with pytest.raises(KeyError):
        load_matched_pair("nope")


def test_incomplete_json_rejected():
    obj = preset("Hb1").to_json()
    del obj["tau"]["t"]["x,y"]
    with pytest.raises(ValueError):
        MatchedPairData.from_json(obj)


# ---- mutations


def test_corrupted_sigma_fails_with_witness():
    data = preset("Hc_sigma0")
    sigma = dict(data.sigma)
    sigma[X, 1, 1] = -sigma[X, 1, 1]
    rep = validate_matched_pair(dataclasses.replace(data, sigma=sigma))
    assert not rep.passed
    check = rep.get("sigma cocycle")
    assert not check.passed and check.witness == "x, t, t, t"
    with pytest.raises(InvalidMatchedPair):
        build_bicrossed_product(dataclasses.replace(data, sigma=sigma))


def test_corrupted_action_fails():
    data = preset("Hc_sigma0")
    act = dict(data.group_action)
    act[X, 1] = X
    act[Y, 1] = X
    rep = validate_matched_pair(dataclasses.replace(data, group_action=act))
    assert not rep.get("action compatibility on G").passed


def _left_antipode_law_fails(h, a) -> bool:
    left: dict = {}
    for c, b1, b2 in h.comult[a]:
        _axpy(left, c, h.product(h.S(h.basis(b1)), h.basis(b2)))
    target = _clean({k: h.counit[a] * v for k, v in h.one().items()})
    return _clean(left) != target


def test_identity_antipode_fails_with_witness(h):
    bad = dataclasses.replace(h, antipode=Matrix.identity(16))
    rep = verify_hopf_axioms(bad)
    check = rep.get("antipode")
    assert not check.passed
    assert check.witness == "e_1"
    failing = {h_label(a) for a in range(16) if _left_antipode_law_fails(bad, a)}
    assert failing == {"e_1", "e_x2", "e_1.t", "e_x2y.t"}
