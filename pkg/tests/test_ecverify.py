import pytest
from hypothesis import given, strategies as st

from quatforms import ecverify as ec
from quatforms.arith import kronecker
from quatforms.errors import PreconditionError

from oracles import count_points_brute

F83 = ec.Fp2(83, -1)  # 83 = 3 (mod 4), so -1 is a non-residue


def test_example_curves_are_supersingular():
    E1 = ec.CurveModel(77, 12, 83)
    E2 = ec.CurveModel(39, 23, 101)
    assert ec.j_invariant(E1) == 28
    assert ec.j_invariant(E2) == 57
    assert ec.is_supersingular(E1) and ec.is_supersingular(E2)


def test_third_example_codomain_is_ordinary():
    # the printed 3-isogeny codomain y^2 = x^3 + 18x + 16 has 94 points over F_83
    E = ec.CurveModel(18, 16, 83)
    assert ec.j_invariant(E) == 24
    assert ec.count_points(E) == 94
    assert not ec.is_supersingular(E)


def test_hilbert_roots():
    assert ec.hilbert_root(-7, 83) == 28
    assert ec.hilbert_root(-11, 101) == 57
    assert ec.hilbert_root(-4, 83) == 1728 % 83
    with pytest.raises(PreconditionError):
        ec.hilbert_root(-23, 83)


@pytest.mark.parametrize("D", sorted(ec.HILBERT_CONSTANT_TERMS))
def test_class_number_one_roots_are_supersingular_when_inert(D):
    for p in (83, 101, 131, 167):
        if kronecker(D, p) != -1:
            continue
        E = ec.curve_with_j(ec.hilbert_root(D, p), p)
        assert ec.is_supersingular(E)


@given(st.sampled_from([5, 7, 11, 13, 83, 101]), st.integers(0, 200), st.integers(0, 200))
def test_count_points_matches_brute(p, a, b):
    if (4 * a ** 3 + 27 * b ** 2) % p == 0:
        return
    assert ec.count_points(ec.CurveModel(a, b, p)) == count_points_brute(a, b, p)


@given(st.sampled_from([83, 101, 103]), st.integers(0, 102))
def test_curve_with_j(p, j):
    assert ec.j_invariant(ec.curve_with_j(j, p)) == j % p


def test_singular_curve_rejected():
    with pytest.raises(PreconditionError):
        ec.CurveModel(0, 0, 83)
    with pytest.raises(PreconditionError):
        ec.CurveModel(1, 1, 3)


def test_fp2_arithmetic():
    a = F83.gen
    assert a * a == -1
    x = F83(52, 15)
    assert x * x.inverse() == 1
    assert (x ** 83) == x.frobenius()
    assert x.norm() == (x * x.frobenius()).c0
    assert str(x) == "15*a + 52"
    with pytest.raises(PreconditionError):
        ec.Fp2(83, 4)


def test_nonoriented_codomains_are_conjugate():
    E3 = ec.CurveModel(F83(52, 15), F83(24, 69), 83)
    E4 = ec.CurveModel(F83(52, 68), F83(24, 14), 83)
    assert E3.frobenius_conjugate() == E4
    j3, j4 = ec.j_invariant(E3), ec.j_invariant(E4)
    assert j3.frobenius() == j4
    assert j3 ** (83 * 83) == j3
    assert not E3.over_fp
    with pytest.raises(PreconditionError):
        ec.count_points(E3)
