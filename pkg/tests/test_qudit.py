from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from booleket.exactnum import I_UNIT, INV_SQRT2, ONE, ZERO, AmplitudeQ2
from booleket.matrix import Matrix
from booleket.polyring import X, Polynomial, lagrange_component
from booleket.qudit import (
    Ket,
    Projector,
    basis_ket,
    bra_of,
    completeness_sum,
    inner_product,
    outer_product,
    projector,
    superpose,
    symbolic_ket,
    symbolic_projector,
    tensor_product,
    unit_ket,
)

from conftest import amplitudes

F = Fraction
DIMS = range(1, 17)


def direct_unit(d, x):
    """Oracle: the unit vector written down without any polynomial."""
    v = [0] * d
    v[x] = 1
    return v


def brute_identity_sum(d):
    """Oracle: add d diagonal 0/1 matrices cell by cell."""
    total = [[0] * d for _ in range(d)]
    for x in range(d):
        for i in range(d):
            total[i][i] += 1 if i == x else 0
    return total


# -- kets -------------------------------------------------------------------

def test_basis_ket_examples():
    assert basis_ket(2, 0) == Ket([1, 0])
    assert basis_ket(3, 1) == Ket([0, 1, 0])
    assert basis_ket(4, 2) == Ket([0, 0, 1, 0])


@pytest.mark.parametrize("d, x", [(2, 2), (3, -1), (1, 1)])
def test_basis_ket_range(d, x):
    with pytest.raises(ValueError):
        basis_ket(d, x)


def test_basis_ket_rejects_bad_dimension():
    with pytest.raises(ValueError):
        basis_ket(0, 0)


@pytest.mark.parametrize("d", DIMS)
def test_basis_ket_equals_direct_construction(d):
    for x in range(d):
        k = basis_ket(d, x)
        assert list(k) == direct_unit(d, x)
        assert k == unit_ket(d, x)
        assert k.is_basis()


def test_symbolic_ket_examples():
    assert symbolic_ket(2).entries == (1 - X, X)
    assert symbolic_ket(3).entries == (
        (1 - X) * (2 - X) * F(1, 2),
        X * (2 - X),
        X * (X - 1) * F(1, 2),
    )
    assert symbolic_ket(1).entries == (Polynomial([1]),)


@pytest.mark.parametrize("d", DIMS)
def test_symbolic_ket_evaluates_to_basis(d):
    sk = symbolic_ket(d)
    assert sk.entries == tuple(lagrange_component(d, k) for k in range(d))
    for m in range(d):
        assert sk.evaluate(m) == unit_ket(d, m)


def test_bra_examples():
    assert bra_of(Ket([1, 0])).entries == (ONE, ZERO)
    assert bra_of(Ket([0, I_UNIT])).entries == (ZERO, -I_UNIT)
    assert bra_of(Ket([0, 0, 0])).entries == (ZERO, ZERO, ZERO)


@given(st.lists(amplitudes, min_size=1, max_size=4))
def test_bra_ket_is_norm_sq(entries):
    k = Ket(entries)
    total = ZERO
    for a in entries:
        total = total + a.norm_sq()
    assert bra_of(k) @ k == total == inner_product(k, k)


# -- projectors -------------------------------------------------------------

def test_outer_product_examples():
    k = basis_ket(3, 1)
    assert outer_product(k, k) == Matrix.diag([0, 1, 0])
    k0 = basis_ket(2, 0)
    assert outer_product(k0, k0) == Matrix.diag([1, 0])
    assert outer_product(basis_ket(2, 0), basis_ket(2, 1)) == Matrix([[0, 1], [0, 0]])


def test_outer_product_conjugates_right_factor():
    m = outer_product(Ket([1]), Ket([I_UNIT]))
    assert m[0, 0] == -I_UNIT


def test_outer_product_dimension_mismatch():
    with pytest.raises(ValueError):
        outer_product(basis_ket(2, 0), basis_ket(3, 0))


def test_projector_examples():
    assert projector(2, 1) == Matrix.diag([0, 1])
    assert projector(3, 2) == Matrix.diag([0, 0, 1])
    assert projector(4, 0) == Matrix.diag([1, 0, 0, 0])


def test_projector_rejects_non_projection():
    with pytest.raises(ValueError):
        Projector([[1, 1], [0, 0]])
    with pytest.raises(ValueError):
        Projector([[2, 0], [0, 0]])


def test_projector_accepts_nondiagonal_projection():
    # |+><+| with |+> = (1, 1)/sqrt2
    h = INV_SQRT2 * INV_SQRT2
    p = Projector([[h, h], [h, h]])
    assert p.trace() == 1


@pytest.mark.parametrize("d", DIMS)
def test_projector_properties(d):
    ps = [projector(d, x) for x in range(d)]
    for x, p in enumerate(ps):
        assert p @ p == p
        assert p.trace() == ONE
        assert p.is_hermitian()
        assert p == outer_product(basis_ket(d, x), basis_ket(d, x))
    for x in range(d):
        for y in range(d):
            if x != y:
                assert (ps[x] @ ps[y]).is_zero()


def test_symbolic_projector_examples():
    assert symbolic_projector(2).diagonal == (1 - X, X)
    assert symbolic_projector(3).diagonal == (
        (1 - X) * (2 - X) * F(1, 2), X * (2 - X), X * (X - 1) * F(1, 2))
    assert symbolic_projector(4).trace() == Polynomial([1])


@pytest.mark.parametrize("d", DIMS)
def test_symbolic_projector_structure(d):
    sp = symbolic_projector(d)
    assert sp.trace() == 1
    assert sp.squared_mod_boole() == sp.diagonal
    full = sp.matrix()
    for i in range(d):
        for j in range(d):
            assert full[i][j] == (sp.diagonal[i] if i == j else Polynomial())
    for m in range(d):
        assert sp.evaluate(m) == projector(d, m)


# -- completeness -----------------------------------------------------------

def test_completeness_examples():
    assert completeness_sum(4) == Matrix.identity(4)
    assert completeness_sum(1) == Matrix.identity(1)
    assert completeness_sum(7) == Matrix(brute_identity_sum(7))


@pytest.mark.parametrize("d", DIMS)
def test_completeness_is_identity(d):
    assert completeness_sum(d) == Matrix(brute_identity_sum(d))


# -- inner and tensor products ----------------------------------------------

def test_inner_product_examples():
    assert inner_product(basis_ket(3, 0), basis_ket(3, 1)) == ZERO
    assert inner_product(basis_ket(3, 2), basis_ket(3, 2)) == ONE
    bell = Ket([INV_SQRT2, 0, 0, INV_SQRT2])
    assert inner_product(bell, bell) == ONE


def test_inner_product_is_conjugate_linear_on_left():
    assert inner_product(Ket([I_UNIT]), Ket([1])) == -I_UNIT
    with pytest.raises(ValueError):
        inner_product(Ket([1]), Ket([1, 0]))


@pytest.mark.parametrize("d", range(1, 9))
def test_basis_orthonormal(d):
    for x in range(d):
        for y in range(d):
            assert inner_product(basis_ket(d, x), basis_ket(d, y)) == (1 if x == y else 0)


def test_tensor_examples():
    assert tensor_product(basis_ket(2, 0), basis_ket(2, 0)) == Ket([1, 0, 0, 0])
    assert tensor_product(basis_ket(2, 1), basis_ket(2, 1)) == Ket([0, 0, 0, 1])
    assert tensor_product(basis_ket(2, 0), basis_ket(3, 1)) == Ket([0, 1, 0, 0, 0, 0])


@pytest.mark.parametrize("x, y", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_two_qubit_product_matches_bilinear_form(x, y):
    # (1-x)(1-y), y-xy, x-xy, xy
    want = [(1 - x) * (1 - y), y - x * y, x - x * y, x * y]
    assert list(tensor_product(basis_ket(2, x), basis_ket(2, y))) == want


kets = st.lists(amplitudes, min_size=1, max_size=3).map(Ket)


@given(kets, kets, kets)
def test_tensor_associative(a, b, c):
    assert tensor_product(tensor_product(a, b), c) == tensor_product(a, tensor_product(b, c))


# -- superposition ----------------------------------------------------------

def test_superpose_examples():
    assert superpose(2, [F(3, 5), F(4, 5)]).is_normalized()
    assert not superpose(2, [1, 1]).is_normalized()
    assert superpose(2, [INV_SQRT2, INV_SQRT2]).is_normalized()


def test_superpose_length_mismatch():
    with pytest.raises(ValueError):
        superpose(3, [1, 0])


def test_superpose_never_normalizes_in_place():
    s = superpose(3, [1, 1, 1])
    assert s.norm_sq() == 3
    assert s.amplitudes == (ONE, ONE, ONE)


def test_superposition_ket_expands_in_basis():
    a = [AmplitudeQ2(F(3, 5)), AmplitudeQ2(ai=F(4, 5)), ZERO]
    s = superpose(3, a)
    assert s.ket() == Ket(a)
    assert inner_product(s.ket(), s.ket()) == s.norm_sq() == ONE
