import itertools

import pytest
from hypothesis import given, strategies as st

from quatforms import binforms as bq
from quatforms.arith import kronecker, primes_up_to
from quatforms.binforms import BinaryForm
from quatforms.errors import PreconditionError

from forms import EX1_RHO, EX2_RHO, EX3_RHO, EX3_VARRHO, EX4_RHO
from oracles import binary_class_brute

SMALL_PRIMES = primes_up_to(400)[2:]


@st.composite
def forms_of_disc(draw, d=None):
    """Primitive positive definite forms, by default of discriminant -16cp."""
    if d is None:
        p = draw(st.sampled_from(SMALL_PRIMES))
        c = draw(st.sampled_from([1, 2, 3, 5, 7]))
        d = -16 * c * p
    a = draw(st.integers(1, 80))
    bs = [b for b in range(-a + 1, a + 1) if (b * b - d) % (4 * a) == 0]
    if not bs:
        return bq.principal_form(d)
    b = draw(st.sampled_from(bs))
    f = BinaryForm(a, b, (b * b - d) // (4 * a))
    return f if f.is_primitive else bq.principal_form(d)


@st.composite
def same_disc_pairs(draw):
    p = draw(st.sampled_from(SMALL_PRIMES))
    c = draw(st.sampled_from([1, 3, 5]))
    d = -16 * c * p
    return draw(forms_of_disc(d)), draw(forms_of_disc(d))


def _word_to_matrix(word):
    U = ((1, 0), (0, 1))
    for k in word:
        # T^k followed by S
        M = ((k, -1), (1, 0))
        U = bq._mul2(U, M)
    return U


unimodular = st.lists(st.integers(-4, 4), max_size=6).map(_word_to_matrix)


def test_disc_examples():
    assert EX1_RHO.disc == -16 * 83
    assert EX2_RHO.disc == -16 * 3 * 101
    assert bq.disc(EX4_RHO) == -16 * 83 * 9


def test_reduce_examples():
    assert bq.reduced(BinaryForm(59, 64, 68)) == BinaryForm(59, -54, 63)
    assert bq.reduced(BinaryForm(7, 4, 48)) == BinaryForm(7, 4, 48)
    assert bq.reduced(BinaryForm(48, -4, 7)) == BinaryForm(7, 4, 48)
    # boundary cases (a, -a, c) and (a, -b, a) flip to positive b
    assert bq.reduced(BinaryForm(3, -3, 5)) == BinaryForm(3, 3, 5)
    assert bq.reduced(BinaryForm(4, -2, 4)) == BinaryForm(4, 2, 4)


def test_reduce_rejects_indefinite():
    with pytest.raises(PreconditionError):
        bq.reduce(BinaryForm(1, 3, 1))


@given(forms_of_disc(), unimodular)
def test_reduce_is_class_invariant(f, U):
    assert U[0][0] * U[1][1] - U[0][1] * U[1][0] == 1
    g = f.transform(U)
    r, W = bq.reduce(g)
    assert bq.is_reduced(r)
    assert g.transform(W) == r
    assert r == bq.reduced(f)


@pytest.mark.parametrize("f", [BinaryForm(7, 4, 48), BinaryForm(59, 64, 68), BinaryForm(16, -12, 23), BinaryForm(13, 10, 29)])
def test_reduce_matches_brute(f):
    assert tuple(bq.reduced(f)) == binary_class_brute(*f)


def test_compose_example():
    assert bq.compose(EX1_RHO, bq.power(EX3_VARRHO, 2)) == EX3_RHO


@given(same_disc_pairs())
def test_compose_group_laws(pair):
    f, g = pair
    e = bq.principal_form(f.disc)
    assert bq.compose(f, e) == bq.reduced(f)
    assert bq.compose(f, bq.inverse(f)) == e
    assert bq.compose(f, g) == bq.compose(g, f)
    assert bq.compose(f, g).disc == f.disc


@given(same_disc_pairs())
def test_compose_associative(pair):
    f, g = pair
    h = bq.power(f, 3)
    assert bq.compose(bq.compose(f, g), h) == bq.compose(f, bq.compose(g, h))


@given(forms_of_disc(), st.integers(0, 12))
def test_power_matches_repeated_composition(f, k):
    acc = bq.principal_form(f.disc)
    for _ in range(k):
        acc = bq.compose(acc, f)
    assert bq.power(f, k) == acc


def test_compose_rejects_mismatch():
    with pytest.raises(PreconditionError):
        bq.compose(EX1_RHO, EX2_RHO)


def test_represents():
    assert bq.represents(EX1_RHO, 7) == (1, 0)
    assert bq.represents(EX1_RHO, 8) is None
    x, y = bq.represents(EX1_RHO, 59)
    assert EX1_RHO(x, y) == 59
    assert bq.represents(BinaryForm(1, 0, 1), 9, proper_only=True) is None
    assert bq.represents(BinaryForm(1, 0, 1), 25, proper_only=True) is not None


@given(forms_of_disc(), st.integers(-5, 5), st.integers(-5, 5))
def test_representations_are_exhaustive(f, x, y):
    n = f(x, y)
    if n:
        assert (x, y) in set(bq.representations(f, n))


def test_genus_examples():
    assert bq.genus_characters(EX1_RHO, 83).as_tuple() == (1, -1)
    assert bq.genus_characters(EX2_RHO, 101, 3).as_tuple() == (-1, -1, -1)


@given(forms_of_disc())
def test_genus_independent_of_value(f):
    c = -f.disc // 16
    p = max(q for q in SMALL_PRIMES if c % q == 0) if c > 1 else None
    if p is None:
        return
    c //= p
    values = [f(x, y) for x, y in itertools.product(range(-6, 7), repeat=2)]
    values = [n for n in values if n > 0 and all(n % q for q in (2, c, p) if q > 1)]
    genera = {bq.genus_characters(f, p, c, value=n) for n in values[:20]}
    assert len(genera) <= 1
    if genera:
        assert genera == {bq.genus_characters(bq.inverse(f), p, c)}


def test_derive_and_symbol_example():
    derived = bq.admissible_derived_forms(EX1_RHO, 3)
    assert len(derived) == 1
    h, g = derived[0]
    assert g.disc == 9 * EX1_RHO.disc
    assert bq.reduced(g) == bq.reduced(EX4_RHO)
    assert bq.derived_symbol(g, 3) == 1


def test_derive_scales_disc():
    for h in range(4):
        assert bq.derive(EX1_RHO, 3, h).disc == 9 * EX1_RHO.disc
    with pytest.raises(PreconditionError):
        bq.derive(EX1_RHO, 3, 4)


@given(forms_of_disc(), st.sampled_from([3, 5, 7, 11]))
def test_admissible_derived_count(f, ell):
    if (f.disc // 16) % ell == 0 or f.disc % ell == 0:
        return
    assert len(bq.admissible_derived_forms(f, ell)) == (ell - kronecker(f.disc, ell)) // 2


def test_form_from_embedding_examples():
    assert bq.form_from_embedding(83, 1, 7, -7) == EX1_RHO
    assert bq.form_from_embedding(101, 3, 11, -11) == EX2_RHO
    assert bq.form_from_embedding(83, 1, 3, -3) == EX3_VARRHO
    # -4D with D = 3 mod 4: the admissible root is chosen
    assert bq.form_from_embedding(83, 1, 11, -44) == BinaryForm(44, 28, 12)
    assert bq.form_from_embedding(83, 1, 1, -4).disc == -16 * 83


def test_form_from_embedding_rejects():
    with pytest.raises(PreconditionError):
        bq.form_from_embedding(83, 1, 5, -5)  # D = 1 mod 4
    with pytest.raises(PreconditionError):
        bq.form_from_embedding(83, 1, 89, -89)  # D >= p
    with pytest.raises(PreconditionError):
        bq.form_from_embedding(83, 1, 7, -14)


def test_admissible_embedding_form_shapes():
    assert bq.embedding_form_admissible(EX1_RHO, 1)
    assert bq.embedding_form_admissible(BinaryForm(44, 28, 12), 1)
    assert not bq.embedding_form_admissible(bq.principal_form(-16 * 83), 1)
