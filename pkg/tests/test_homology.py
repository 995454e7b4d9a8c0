import random

import pytest

from mcgcocycles import (
    FreeGroup,
    abelianize,
    adjugate,
    compose,
    det,
    dual,
    identity_matrix,
    induced_matrix,
    inner,
    intersection,
    invert_unimodular,
    is_symplectic,
    jablow,
    mat_mul,
    mat_vec,
    random_element,
    random_word,
    symplectic_form,
    transpose,
    twist_catalog,
)


def test_abelianize_examples():
    F = FreeGroup(2)
    assert abelianize(F.word("A1 B1 a1 b1")) == (0, 0, 0, 0)
    assert abelianize(F.word("A1 A1 b2")) == (2, 0, 0, -1)
    assert abelianize(F.zeta()) == (0, 0, 0, 0)


def test_abelianize_x_b_inverse():
    for g in (2, 3, 5):
        F = FreeGroup(g)
        xb = F.identity()
        for ell in range(g, 0, -1):
            xb = xb * F.b(ell)
        assert abelianize(xb.inverse()) == (0,) * g + (-1,) * g


def test_abelianize_is_a_homomorphism_randomized():
    rng = random.Random(314)
    for _ in range(1000):
        F = FreeGroup(rng.randint(2, 5))
        x = random_word(F, rng.randint(0, 50), rng)
        y = random_word(F, rng.randint(0, 50), rng)
        assert abelianize(x * y) == tuple(
            a + b for a, b in zip(abelianize(x), abelianize(y))
        )
        assert abelianize(x.inverse()) == tuple(-a for a in abelianize(x))


def test_intersection_basis_values():
    F = FreeGroup(3)
    th = lambda w: abelianize(w)
    for i in range(1, 4):
        for j in range(1, 4):
            assert intersection(th(F.a(i)), th(F.b(j))) == (1 if i == j else 0)
            assert intersection(th(F.a(i)), th(F.a(j))) == 0
            assert intersection(th(F.b(i)), th(F.b(j))) == 0


def test_intersection_matches_form_matrix():
    rng = random.Random(88)
    for g in (2, 3, 4):
        J = symplectic_form(g)
        for _ in range(50):
            x = tuple(rng.randint(-9, 9) for _ in range(2 * g))
            y = tuple(rng.randint(-9, 9) for _ in range(2 * g))
            assert intersection(x, y) == sum(
                x[i] * mat_vec(J, y)[i] for i in range(2 * g)
            )
            assert intersection(x, y) == -intersection(y, x)


def test_intersection_shape_check():
    with pytest.raises(ValueError):
        intersection((1, 0), (1, 0, 0, 0))


def test_dual_pairing_property():
    # dual(lam) . v == lam(v) for the functional with those generator values
    rng = random.Random(5)
    for g in (2, 3, 5):
        for _ in range(50):
            lam = tuple(rng.randint(-9, 9) for _ in range(2 * g))
            v = tuple(rng.randint(-9, 9) for _ in range(2 * g))
            assert intersection(dual(lam), v) == sum(
                lam[i] * v[i] for i in range(2 * g)
            )


def test_dual_example():
    # values 4 + 2(g-k) on A_k and -2 on B_k at g = 3
    lam = (8, 6, 4, -2, -2, -2)
    assert dual(lam) == (-2, -2, -2, -8, -6, -4)


def test_induced_matrix_columns():
    F = FreeGroup(2)
    phi = inner(F.a(1))
    assert induced_matrix(phi) == identity_matrix(4)
    t = twist_catalog(F)[0]  # A1 -> A1 B1
    m = induced_matrix(t)
    # column 0 is the class of A1 B1
    assert tuple(m[i][0] for i in range(4)) == (1, 0, 1, 0)


def test_induced_matrix_functorial_randomized():
    rng = random.Random(21)
    for g in (2, 3):
        F = FreeGroup(g)
        for k in range(20):
            p1 = random_element(F, 3, seed=rng.randrange(1 << 30))
            p2 = random_element(F, 3, seed=rng.randrange(1 << 30))
            assert induced_matrix(compose(p1, p2)) == mat_mul(
                induced_matrix(p1), induced_matrix(p2)
            )


def test_symplectic_checks():
    for g in (2, 3, 4):
        F = FreeGroup(g)
        assert is_symplectic(identity_matrix(2 * g))
        assert is_symplectic(induced_matrix(jablow(F)))
        for t in twist_catalog(F):
            assert is_symplectic(induced_matrix(t))
    not_sp = tuple(
        tuple(2 if i == j else 0 for j in range(4)) for i in range(4)
    )
    assert not is_symplectic(not_sp)


def test_det_and_adjugate():
    m = ((2, 3), (1, 4))
    assert det(m) == 5
    assert adjugate(m) == ((4, -3), (-1, 2))
    assert det(identity_matrix(6)) == 1
    singular = ((1, 2), (2, 4))
    assert det(singular) == 0


def test_invert_unimodular_rejects_other_determinants():
    with pytest.raises(ValueError):
        invert_unimodular(((2, 0), (0, 1)))
    with pytest.raises(ValueError):
        invert_unimodular(((1, 2), (2, 4)))


def test_invert_unimodular_randomized_and_symplectic_closed_form():
    # cross-check the adjugate inverse against -J M^T J on symplectic input
    rng = random.Random(1001)
    for g in (2, 3, 4):
        F = FreeGroup(g)
        J = symplectic_form(g)
        minus_J = tuple(tuple(-x for x in row) for row in J)
        eye = identity_matrix(2 * g)
        for k in range(15):
            m = induced_matrix(random_element(F, 4, seed=rng.randrange(1 << 30)))
            inv = invert_unimodular(m)
            assert mat_mul(m, inv) == eye
            assert mat_mul(inv, m) == eye
            assert is_symplectic(m)
            closed_form = mat_mul(mat_mul(minus_J, transpose(m)), J)
            assert inv == closed_form


def test_invert_unimodular_det_minus_one():
    # swap two basis vectors: determinant -1
    m = ((0, 1), (1, 0))
    assert invert_unimodular(m) == m
    neg = tuple(
        tuple(-1 if i == j else 0 for j in range(6)) for i in range(6)
    )
    assert invert_unimodular(neg) == neg
