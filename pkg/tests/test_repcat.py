from __future__ import annotations

import json

import pytest

from ydnichols.exactlinalg import ONE, XI, Matrix
from ydnichols.repcat import (
    GENERATORS,
    Representation,
    catalog_entry,
    character,
    completeness_check,
    direct_sum,
    full_action,
    is_simple,
    s4_as_printed,
    trivial_module,
    verify_catalog,
    verify_module,
)


def test_catalog_shape(cat):
    assert len(cat) == 88
    assert [r.dim for r in cat].count(1) == 32
    assert [r.dim for r in cat].count(2) == 56
    families = [r.family for r in cat]
    assert [families.count(f) for f in ("S0", "S1", "S2", "S3", "S4")] == [32, 16, 8, 16, 16]
    assert len({r.id for r in cat}) == 88
    assert sum(r.dim**2 for r in cat) == 256


def test_labels_and_display():
    w = catalog_entry("W_x_1_plus_plus")
    assert w.display == "W^+_{x,1,+}"
    assert catalog_entry("W^+_{x,1,+}") is not None
    assert catalog_entry("Z_x2_5").params == {"mu": "x2", "j": 5}
    with pytest.raises(KeyError):
        catalog_entry("W_x_9_plus_plus")


def test_s0_generators():
    v = catalog_entry("V_x2_3_minus")
    assert v.gen_action["t"] == Matrix([[-XI]])
    assert v.gen_action["zeta_x"] == Matrix([[XI**3]])
    assert v.gen_action["e_x2"] == Matrix([[1]])


def test_every_entry_is_a_module(cat, d):
    bad = [r.id for r in cat if not verify_module(r, d).passed]
    assert bad == []


def test_every_entry_is_simple(cat, d):
    assert all(is_simple(r, d) for r in cat)


def test_burnside_from_generators_only(cat):
    # the word closure of the 13 generator matrices gives the same verdict
    assert all(is_simple(r) for r in cat if r.dim == 2)


def test_completeness(cat, d):
    rep = completeness_check(cat, d)
    assert rep.passed, rep.failures()


def test_verify_catalog(d):
    rep = verify_catalog(d)
    assert rep.passed, rep.failures()


def test_trivial_module_is_v_plus_1_0(d):
    k = trivial_module()
    assert verify_module(k, d).passed
    assert character(k, d) == character(catalog_entry("V_1_0_plus"), d)


def test_direct_sum_is_a_module_but_not_simple(d):
    s = direct_sum(catalog_entry("V_1_0_plus"), catalog_entry("V_y_2_minus"))
    assert verify_module(s, d).passed
    assert not is_simple(s, d)


def test_duplicate_entry_breaks_distinct_characters(cat, d):
    rep = completeness_check(cat + [catalog_entry("Y_x_1")], d)
    assert not rep.get("characters pairwise distinct").passed
    assert not rep.get("sum of dim^2 equals dim D(H)").passed


def _flipped_t_entry() -> Representation:
    y = catalog_entry("Y_x_1")
    acts = dict(y.gen_action)
    t = acts["t"]
    acts["t"] = Matrix([[t[0, 0], -t[0, 1]], [t[1, 0], t[1, 1]]])
    return Representation("Y_x_1_flipped", 2, acts, "S3", y.params)


def test_flipped_t_entry_is_rejected(d):
    rep = verify_module(_flipped_t_entry(), d)
    assert not rep.passed
    assert rep.failures()[0].witness is not None


def test_printed_z_data_is_not_a_module(d):
    printed = s4_as_printed()
    assert len(printed) == 16
    fails = [verify_module(r, d) for r in printed]
    assert not any(f.passed for f in fails)
    assert fails[0].failures()[0].witness == "chi_1#e_1.t * chi_x#e_y"


def test_full_action_is_multiplicative(d):
    rep = catalog_entry("W_x3_2_minus_plus")
    acts = full_action(rep, d)
    for p, q in [(3, 77), (200, 19), (129, 255)]:
        prod = d.product({p: ONE}, {q: ONE})
        lhs = acts[p] @ acts[q]
        rhs = Matrix.zeros(2, 2)
        for r, c in prod.items():
            rhs = rhs + acts[r].scale(c)
        assert lhs == rhs


def test_json_round_trip(cat):
    for r in cat[::7]:
        again = Representation.from_json(json.loads(json.dumps(r.to_json())))
        assert again.gen_action == r.gen_action and again.id == r.id


def test_missing_generator_rejected():
    acts = dict(catalog_entry("V_1_0_plus").gen_action)
    del acts["chi_y"]
    with pytest.raises(ValueError):
        Representation("broken", 1, acts, "S0")
    assert "chi_y" in GENERATORS
