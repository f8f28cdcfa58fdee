import math

import pytest
from hypothesis import given, strategies as st

from quatforms import terforms as tq
from quatforms import lattice as lat
from quatforms.binforms import BinaryForm, inverse, reduced
from quatforms.errors import PreconditionError
from quatforms.terforms import TernaryForm

from forms import EX1_F, EX1_RHO, EX2_F, EX2_RHO, EX3_F, EX4_F, EX4_F_ALT
from oracles import det_perm, semireduced_ternary, ternary_equivalent_brute

ELEMENTARY = [
    [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 1, -1], [0, 0, 1]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[1, 0, 0], [0, 1, 0], [1, 0, 1]],
    [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
]

unimodular3 = st.lists(st.sampled_from(range(len(ELEMENTARY))), max_size=8).map(
    lambda word: _product([ELEMENTARY[i] for i in word])
)


def _product(mats):
    U = lat.identity(3)
    for M in mats:
        U = lat.mat_mul(M, U)
    return U


@st.composite
def definite_forms(draw, max_coeff=12):
    while True:
        d = [draw(st.integers(1, max_coeff)) for _ in range(3)]
        e = [draw(st.integers(-max_coeff // 2, max_coeff // 2)) for _ in range(3)]
        f = TernaryForm(*d, *e)
        if f.is_positive_definite:
            return f


def test_disc_examples():
    assert tq.disc(EX1_F) == 83
    assert tq.disc(EX2_F) == 101
    assert tq.disc(EX3_F) == 83
    assert tq.disc(TernaryForm(2, 2, 2, 0, 0, 0)) == 4
    with pytest.raises(PreconditionError):
        tq.disc(TernaryForm(1, 1, 1, 0, 0, 0))


def test_from_coefficients_rejects_odd_cross_terms():
    with pytest.raises(PreconditionError):
        TernaryForm.from_coefficients(1, 1, 1, 1, 0, 0)


def test_coefficients_round_trip():
    assert TernaryForm.from_coefficients(*EX2_F.coefficients()) == EX2_F
    assert EX1_F(1, 1, 1) == 2 + 4 + 24 - 2 - 2


@given(definite_forms())
def test_det_matches_permutation_expansion(f):
    assert f.det == det_perm(f.gram)


def test_identity_form_reciprocal():
    I = TernaryForm(1, 1, 1, 0, 0, 0)
    assert tq.reciprocal(I) == (I, 1)
    assert tq.invariants(I).omega == 1


def test_invariants_examples():
    for F in (EX1_F, EX2_F, EX3_F, EX4_F):
        inv = tq.invariants(F)
        assert (inv.omega, inv.sigma, inv.tau) == (1, 2, 1)
        assert inv.delta == 2 * tq.disc(F)


@given(definite_forms())
def test_reciprocal_involution(f):
    if f.tau != 1:
        return
    g, omega = tq.reciprocal(f)
    assert g.tau == 1
    assert tq.reciprocal(g)[0] == f
    inv = tq.invariants(f)
    assert inv.delta * omega * omega == f.det


@given(definite_forms(), unimodular3)
def test_invariants_are_class_invariants(f, U):
    if f.tau != 1:
        return
    assert tq.invariants(f.transform(U)) == tq.invariants(f)


@given(definite_forms(), unimodular3)
def test_canonical_is_class_invariant(f, U):
    g = f.transform(U)
    cf, Uf = tq.canonicalize(f)
    assert f.transform(Uf) == cf
    assert tq.canonical(g) == cf
    assert tq.canonical(cf) == cf


def test_equivalent_example_witness():
    U = tq.equivalent(EX4_F, EX4_F_ALT)
    assert U is not None
    assert EX4_F.transform(U) == EX4_F_ALT
    assert abs(lat.det(U)) == 1
    assert tq.equivalent(EX1_F, EX3_F) is None
    assert not ternary_equivalent_brute(EX1_F, EX3_F)


def test_canonical_agrees_with_brute_on_small_census():
    forms = semireduced_ternary(24)
    for f in forms:
        assert ternary_equivalent_brute(f, tq.canonical(f))
    classes = sorted({tq.canonical(f) for f in forms})
    for i, f in enumerate(classes):
        for g in classes[i + 1:]:
            if f.det == g.det:
                assert not ternary_equivalent_brute(f, g)


def test_represents_properly():
    assert tq.represents_properly(EX1_F, 2) == (1, 0, 0)
    assert tq.represents_properly(EX2_F, 6) is not None
    v = tq.represents_properly(EX4_F, 6)
    assert EX4_F(*v) == 6 and math.gcd(*v) == 1
    # on 2(x^2 + y^2 + z^2) the value 8 needs x^2 + y^2 + z^2 = 4, only (2, 0, 0) and permutations
    assert tq.represents_properly(TernaryForm(2, 2, 2, 0, 0, 0), 8) is None
    assert tq.represents_properly(TernaryForm(1, 1, 1, 0, 0, 0), 7) is None


def test_orientation_search():
    hits = dict(tq.orientation_search(EX1_F, 13))
    assert sorted(hits) == [1, 2, 7, 11, 13]
    for c, v in hits.items():
        assert EX1_F(*v) == 2 * c


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)))
def test_complete_basis(v):
    if math.gcd(*v) != 1:
        return
    U = tq.complete_basis(v)
    assert lat.det(U) == 1
    assert list(U[2]) == list(v)


def test_represented_binary_at_matches_orientation():
    # the binary form attached to the vector representing 2 has discriminant -16p
    g = tq.represented_binary_at(EX1_F, (1, 0, 0))
    assert g.disc == -16 * 83
    assert reduced(g) in (reduced(EX1_RHO), inverse(EX1_RHO))


@pytest.mark.parametrize(
    "rho,C,omega,F",
    [(EX1_RHO, 2, 166, EX1_F), (EX2_RHO, 6, 202, EX2_F), (BinaryForm(59, 64, 68), 18, 166, EX4_F)],
)
def test_represent_binary_examples(rho, C, omega, F):
    reps = tq.represent_binary(rho, C, omega)
    assert len(reps) == 1
    rep = reps[0]
    assert tq.reciprocal(rep.f) == (rep.F, omega)
    assert tq.equivalent(rep.F, F) is not None
    w = rep.witness
    assert rep.F == TernaryForm(w.A, w.B, w.C, w.R, w.S, w.T)


def test_represent_binary_rejects_bad_disc():
    with pytest.raises(PreconditionError):
        tq.represent_binary(EX1_RHO, 2, 101)
