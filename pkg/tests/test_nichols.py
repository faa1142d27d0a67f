from __future__ import annotations

import random

import pytest

from ydnichols.exactlinalg import ONE, XI, Matrix, Scalar, ShapeError, mat_inverse, mat_rank
from ydnichols.hopfcore import build_bicrossed_product, preset
from ydnichols.nichols import (
    CUTOFF,
    TERMINATED,
    ResourceLimitError,
    alternating_word,
    c_slot,
    clear_cache,
    eigen_witness,
    graded_dims,
    omega_1,
    omega_1_explicit,
    quantum_symmetrizer,
    quantum_symmetrizer_explicit,
    relation_in_kernel,
    tensor_element,
    total_dim,
    word_index,
)
from ydnichols.repcat import catalog_entry
from ydnichols.ydbraid import Braiding, braid_equation_holds, braiding_of

H = build_bicrossed_product(preset("Hc_sigma0"))
THREE = ("W_x_1_plus_plus", "Y_x_1", "Z_1_2")


def b_of(label: str) -> Braiding:
    return braiding_of(catalog_entry(label), H)


def conjugate(b: Braiding, g: Matrix) -> Braiding:
    gg = g.kron(g)
    return Braiding(b.dim, gg @ b.c @ mat_inverse(gg), f"{b.label}^g")


def random_invertible(rng: random.Random) -> Matrix:
    while True:
        g = Matrix([[Scalar(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)])
        if mat_rank(g) == 2:
            return g


@pytest.mark.parametrize("label", THREE)
@pytest.mark.parametrize("k", range(0, 5))
def test_recursion_equals_explicit_sum(label, k):
    b = b_of(label)
    assert omega_1(b, k) == omega_1_explicit(b, k)


@pytest.mark.parametrize("label", THREE)
def test_symmetrizer_recursion_equals_explicit_product(label):
    b = b_of(label)
    for n in range(1, 6):
        assert quantum_symmetrizer(b, n) == quantum_symmetrizer_explicit(b, n)


def test_omega_2_is_id_plus_c(cat):
    for r in cat:
        b = braiding_of(r, H)
        d = b.dim
        assert quantum_symmetrizer(b, 2) == Matrix.identity(d * d) + b.c


@pytest.mark.parametrize("seed", range(5))
def test_rank_invariance_under_base_change(seed):
    g = random_invertible(random.Random(seed))
    for label in THREE:
        b = b_of(label)
        conj = conjugate(b, g)
        assert braid_equation_holds(conj.c, 2)
        assert graded_dims(conj, 6).ranks == graded_dims(b, 6).ranks


def test_c_slot_shapes():
    b = b_of("W_x_1_plus_plus")
    assert c_slot(b, 1, 2) == b.c
    assert c_slot(b, 2, 4).shape == (16, 16)


@pytest.mark.parametrize(
    "label, profile, total",
    [
        ("W_x_1_plus_plus", [1, 2, 3, 4, 3, 2, 1], 16),
        ("W_x_0_plus_minus", [1, 2, 2, 2, 1], 8),
        ("Z_1_2", [1, 2, 2, 2, 1], 8),
        ("Z_x2_1", [1, 2, 3, 4, 3, 2, 1], 16),
        ("Y_x_6", [1, 2, 2, 2, 1], 8),
        ("Y_x_3", [1, 2, 3, 4, 3, 2, 1], 16),
        ("X_x2_1_minus", [1, 2, 1], 4),
        ("V_y_0_plus", [1, 1], 2),
    ],
)
def test_frozen_profiles(label, profile, total):
    g = graded_dims(b_of(label), 8)
    assert g.status == TERMINATED
    assert g.profile == profile
    assert total_dim(g) == total == sum(profile)


def test_quantum_plane_profile_is_palindromic():
    p = graded_dims(b_of("W_x3_3_minus_plus"), 8).profile
    assert p == p[::-1]


def test_cutoff_is_never_a_number():
    g = graded_dims(b_of("V_1_0_plus"), 5)
    assert g.status == CUTOFF
    assert g.total is None and total_dim(g) == CUTOFF
    assert [r for _, r in g.ranks] == [1, 1, 1, 1, 1]


def test_csv_and_json():
    g = graded_dims(b_of("X_x2_1_minus"), 8)
    assert g.csv_rows() == [(1, 2, 3), (2, 1, 4), (3, 0, 4)]
    doc = g.to_json()
    assert doc["total"] == 4 and doc["status"] == TERMINATED


def test_resource_ceiling(monkeypatch):
    clear_cache()
    monkeypatch.setenv("NICHOLS_MAX_MATRIX", "16")
    b = b_of("Y_x_1")
    assert quantum_symmetrizer(b, 4).shape == (16, 16)
    with pytest.raises(ResourceLimitError):
        quantum_symmetrizer(b, 5)
    clear_cache()


def test_word_basis():
    assert word_index("vv", 2) == 0
    assert word_index("wv", 2) == 2
    assert word_index("vwvw", 2) == 5
    assert alternating_word(5) == "vwvwv"
    n, vec = tensor_element({"vw": 1, "wv": -XI}, 2)
    assert n == 2 and vec[1] == ONE and vec[2] == -XI
    with pytest.raises(ShapeError):
        tensor_element({"v": 1, "vw": 1}, 2)
    with pytest.raises(ShapeError):
        word_index("x", 2)


def test_relations():
    w = b_of("W_x_1_plus_plus")  # q12 = i
    assert relation_in_kernel(w, {"vw": 1, "wv": -XI})
    assert relation_in_kernel(w, {"vvvv": 1})
    assert not relation_in_kernel(w, {"vv": 1})
    y = b_of("Y_x_6")  # p = -1, rm = -1
    assert relation_in_kernel(y, {"vw": 1}, n=2)
    assert relation_in_kernel(y, {"vvvv": 1, "wwww": 1})
    with pytest.raises(ShapeError):
        relation_in_kernel(y, {"vw": 1}, n=3)


def test_eigen_witness():
    y = b_of("Y_x_5")  # p = 1
    ks = [eigen_witness(y, n) for n in range(1, 7)]
    assert ks == [Scalar(k) for k in (1, 2, 6, 24, 120, 720)]
    assert eigen_witness(b_of("Y_x_6"), 2) is None
    assert eigen_witness(b_of("V_1_0_plus"), 2) is None


@pytest.mark.parametrize("q, order", [(ONE, None), (-ONE, 2), (XI, 4), (-XI, 4)])
def test_one_dimensional_profiles(q, order):
    g = graded_dims(Braiding(1, Matrix([[q]])), 6)
    if order is None:
        assert g.status == CUTOFF
    else:
        assert total_dim(g) == order
