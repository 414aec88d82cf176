"""Lorentz elements: vector/four-vector actions, matrix realizations,
polar factorization."""

import numpy as np
import pytest

from nced import algebra as alg
from nced import lorentz as lo
from nced.errors import NotUnitError
from conftest import rand_rotation, rand_unit_element


def rand_cvec(rng):
    return rng.normal(size=3) + 1j * rng.normal(size=3)


# ---------------------------------------------------------------------------
# construction


def test_make_element_identity():
    L = lo.make_element(1.0, (0, 0, 0))
    assert np.array_equal(L, lo.identity())


def test_make_element_rotation_generator():
    a = 0.3
    L = lo.make_element(np.cos(a), (0, 0, np.sin(a)))
    assert abs(alg.norm(L) - 1.0) <= 1e-15


def test_make_element_rejects_non_unit():
    with pytest.raises(NotUnitError):
        lo.make_element(1.0, (1.0, 0, 0))


def test_make_element_renormalizes_small_defect():
    rng = np.random.default_rng(0)
    L = rand_unit_element(rng) * (1.0 + 3e-10)
    fixed = lo.make_element(L[0], L[1:])
    assert abs(alg.norm(fixed) - 1.0) <= 1e-12


# ---------------------------------------------------------------------------
# vector action and SO(3,C) matrices


def test_act_vector_identity():
    rng = np.random.default_rng(1)
    v = rand_cvec(rng)
    assert np.max(np.abs(lo.act_vector(lo.identity(), v) - v)) == 0.0


def test_act_vector_real_rotation_matches_entry_map():
    # for a real element the action matrix is the displayed entry map itself
    a = 0.4
    L = lo.rotation((0, 0, 1), a)
    v = np.array([1.0, 0.0, 0.0], complex)
    got = lo.act_vector(L, v)
    want = lo.so3c_entries(L) @ v
    assert np.max(np.abs(got - want)) <= 1e-14
    # and the (1,1) entry is cos(2a)
    assert abs(lo.so3c_matrix(L)[0, 0] - np.cos(2 * a)) <= 1e-14


def test_entry_map_fixes_own_vector_part():
    rng = np.random.default_rng(2)
    for _ in range(200):
        q = rand_unit_element(rng)
        o = lo.so3c_entries(q)
        defect = np.abs(o @ q[1:] - q[1:])
        assert np.max(defect) <= 1e-12 * max(1.0, lo.abs2(q))


def test_act_vector_fixes_conjugated_vector_part():
    # the action of L fixes the componentwise conjugate of L's vector part
    rng = np.random.default_rng(3)
    for _ in range(100):
        L = rand_unit_element(rng)
        lam = rng.normal() + 1j * rng.normal()
        v = lam * np.conj(L[1:])
        assert np.max(np.abs(lo.act_vector(L, v) - v)) <= 1e-12 * max(
            1.0, lo.abs2(L) * np.max(np.abs(v))
        )


def test_so3c_matrix_matches_act_vector():
    rng = np.random.default_rng(4)
    L = rand_unit_element(rng)
    o = lo.so3c_matrix(L)
    for _ in range(100):
        v = rand_cvec(rng)
        assert np.max(np.abs(o @ v - lo.act_vector(L, v))) <= 1e-12 * max(
            1.0, lo.abs2(L) * np.max(np.abs(v))
        )


def test_so3c_orthogonal_unit_det():
    rng = np.random.default_rng(5)
    for _ in range(100):
        o = lo.so3c_matrix(rand_unit_element(rng))
        scale = max(1.0, float(np.max(np.abs(o)) ** 2))
        assert np.max(np.abs(o.T @ o - np.eye(3))) <= 1e-12 * scale
        assert abs(np.linalg.det(o) - 1.0) <= 1e-12 * scale ** 1.5


def test_so3c_even_in_element():
    rng = np.random.default_rng(6)
    L = rand_unit_element(rng)
    assert np.array_equal(lo.so3c_matrix(L), lo.so3c_matrix(-L))


def test_so3c_homomorphism_under_compose():
    rng = np.random.default_rng(7)
    for _ in range(50):
        L1, L2 = rand_unit_element(rng), rand_unit_element(rng)
        lhs = lo.so3c_matrix(lo.compose(L1, L2))
        rhs = lo.so3c_matrix(L1) @ lo.so3c_matrix(L2)
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(rhs)))


def test_act_vector_preserves_bilinear_square():
    rng = np.random.default_rng(8)
    for _ in range(100):
        L = rand_unit_element(rng)
        v = rand_cvec(rng)
        w = lo.act_vector(L, v)
        assert abs(w @ w - v @ v) <= 1e-12 * max(1.0, abs(v @ v)) * max(1.0, lo.abs2(L) ** 2)


# ---------------------------------------------------------------------------
# four-vector action and 4x4 matrices


def test_act_four_vector_identity():
    a0, a = lo.act_four_vector(lo.identity(), 1.5, (0.1, -0.2, 0.3))
    assert a0 == 1.5
    assert np.allclose(a, [0.1, -0.2, 0.3], atol=0)


def test_rotation_fixes_time():
    rng = np.random.default_rng(9)
    for _ in range(20):
        L = rand_rotation(rng)
        a0, _ = lo.act_four_vector(L, 0.7, rng.normal(size=3))
        assert abs(a0 - 0.7) <= 1e-13


def test_four_vector_columns_match_matrix():
    rng = np.random.default_rng(10)
    L = rand_unit_element(rng)
    m = lo.lorentz_matrix4(L)
    for mu, (a0, a) in enumerate(
        [(1.0, (0, 0, 0)), (0.0, (1, 0, 0)), (0.0, (0, 1, 0)), (0.0, (0, 0, 1))]
    ):
        b0, b = lo.act_four_vector(L, a0, a)
        assert abs(m[0, mu] - b0) == 0.0
        assert np.array_equal(m[1:, mu], b)


def test_lorentz_matrix4_identity():
    assert np.array_equal(lo.lorentz_matrix4(lo.identity()), np.eye(4))


def test_boost_matrix_top_entry():
    b = 0.45
    m = lo.lorentz_matrix4(lo.boost((0, 0, 1), b))
    assert abs(m[0, 0] - np.cosh(2 * b)) <= 1e-13
    assert np.max(np.abs(m - m.T)) == 0.0  # boosts are symmetric


def test_matrix4_metric_det_orthochronous():
    rng = np.random.default_rng(11)
    for _ in range(100):
        L = rand_unit_element(rng)
        m = lo.lorentz_matrix4(L)
        scale = max(1.0, float(np.max(np.abs(m)) ** 2))
        assert np.max(np.abs(m.T @ lo.ETA @ m - lo.ETA)) <= 1e-12 * scale
        assert abs(np.linalg.det(m) - 1.0) <= 1e-11 * scale ** 2
        assert m[0, 0] >= 1.0 - 1e-12


# ---------------------------------------------------------------------------
# compose / factorize


def test_compose_with_identity_and_inverse():
    rng = np.random.default_rng(12)
    L = rand_unit_element(rng)
    assert np.max(np.abs(lo.compose(L, lo.identity()) - L)) <= 1e-15
    back = lo.compose(L, lo.inverse(L))
    sign = 1.0 if abs(back[0] - 1.0) < abs(back[0] + 1.0) else -1.0
    assert np.max(np.abs(back - sign * lo.identity())) <= 1e-13


def test_factorize_pure_rotation():
    L = lo.rotation((0.6, 0.8, 0.0), 0.7)
    rot, bst = lo.factorize(L)
    assert np.max(np.abs(rot - L)) <= 1e-14
    assert np.max(np.abs(bst - lo.identity())) <= 1e-14


def test_factorize_pure_boost():
    L = lo.boost((0.0, 1.0, 0.0), 0.6)
    rot, bst = lo.factorize(L)
    assert np.max(np.abs(bst - L)) <= 1e-14
    assert np.max(np.abs(rot - lo.identity())) <= 1e-14


def test_factorize_recomposition_and_structure():
    rng = np.random.default_rng(13)
    for _ in range(100):
        L = rand_unit_element(rng)
        rot, bst = lo.factorize(L)
        assert np.max(np.abs(alg.mul(rot, bst) - L)) <= 1e-12 * max(1.0, lo.abs2(L))
        # rotation: real components, orthogonal spatial matrix, trivial time row
        assert np.max(np.abs(rot.imag)) == 0.0
        m = lo.lorentz_matrix4(rot)
        assert np.max(np.abs(m[0] - [1, 0, 0, 0])) <= 1e-12
        assert np.max(np.abs(m[1:, 1:].T @ m[1:, 1:] - np.eye(3))) <= 1e-12
        # boost: real scalar, imaginary vector, symmetric matrix
        assert bst[0].imag == 0.0
        assert np.max(np.abs(bst[1:].real)) == 0.0
        mb = lo.lorentz_matrix4(bst)
        assert np.max(np.abs(mb - mb.T)) <= 1e-11 * max(1.0, np.max(np.abs(mb)))


def test_factorize_unit_factors():
    rng = np.random.default_rng(14)
    L = rand_unit_element(rng)
    rot, bst = lo.factorize(L)
    assert abs(alg.norm(rot) - 1.0) <= 1e-12
    assert abs(alg.norm(bst) - 1.0) <= 1e-12


def test_element_from_rotation_matrix_roundtrip():
    rng = np.random.default_rng(15)
    for _ in range(50):
        q = rand_rotation(rng)
        r = lo.so3c_entries(q).real
        q2 = lo.element_from_rotation_matrix(r)
        sign = 1.0 if np.abs(q2 - q).max() < np.abs(q2 + q).max() else -1.0
        assert np.max(np.abs(sign * q2 - q)) <= 1e-12
