import pytest

from quatforms import endo, quat
from quatforms import binforms as bq
from quatforms.binforms import BinaryForm
from quatforms.errors import PreconditionError
from quatforms.terforms import canonical, invariants, represents_properly

from forms import EX1_F, EX1_RHO, EX2_F, EX2_RHO, EX3_F, EX3_RHO, EX3_VARRHO, EX4_F, EX4_F_ALT, EX4_RHO


def _sqrt_minus(n, q):
    return next(x for x in range(q) if (x * x + n) % q == 0)


def test_example1_pipeline():
    res = endo.maxorder_over_fp(83, 7, -7)
    assert res.rho == EX1_RHO
    assert res.F == canonical(EX1_F)
    assert quat.order_disc(res.order) == 83 ** 2
    assert res.F(*res.witness) == 2


def test_example2_pipeline():
    res = endo.maxorder_oriented(101, 3, 11, -11)
    assert res.rho == EX2_RHO
    assert res.F == canonical(EX2_F)
    assert res.F(*res.witness) == 6
    assert res.context["c"] == 3


def test_example3_oriented_action():
    res = endo.oriented_isogeny_action(83, 1, EX1_RHO, EX3_VARRHO)
    assert res.rho == EX3_RHO
    assert res.F == canonical(EX3_F)
    assert res.F != canonical(EX1_F)


def test_example4_nonoriented():
    results = endo.nonoriented_isogeny(83, 1, EX1_RHO, 3)
    assert len(results) == 1
    res = results[0]
    assert bq.reduced(res.rho) == bq.reduced(EX4_RHO)
    assert res.F == canonical(EX4_F) == canonical(EX4_F_ALT)
    # an l-isogeny codomain need not keep the 2-orientation
    assert res.witness is None or res.F(*res.witness) == 2


def test_results_have_expected_invariants():
    for res in (endo.maxorder_over_fp(83, 7, -7), endo.maxorder_oriented(101, 3, 11, -11)):
        inv = invariants(res.F)
        assert (inv.sigma, inv.tau) == (2, 1)
        assert res.constructed.F.det == 2 * res.context["p"]


def test_gaussian_class_at_83():
    res = endo.maxorder_over_fp(83, 1, -4)
    y = quat.find_element(res.order, 0, 1)
    assert y is not None and y * y == -res.order.alg.one


def test_precondition_failures():
    with pytest.raises(PreconditionError):
        endo.maxorder_over_fp(83, 19, -19)  # (-19/83) = 1: 83 splits
    with pytest.raises(PreconditionError):
        endo.eichler_to_maximal(83, 1, EX2_RHO)
    with pytest.raises(PreconditionError):
        endo.maxorder_oriented(83, 83, 7, -7)
    with pytest.raises(PreconditionError):
        endo.nonoriented_isogeny(83, 1, EX1_RHO, 83)


def test_inverse_rho_gives_same_class():
    a = endo.eichler_to_maximal(83, 1, EX1_RHO)
    b = endo.eichler_to_maximal(83, 1, BinaryForm(7, -4, 48))
    assert a.F == b.F


def test_normalize_derived():
    for h, g in bq.admissible_derived_forms(EX1_RHO, 3):
        n = endo.normalize_derived(g, 1, 3)
        assert bq.reduced(n) == bq.reduced(g)
        t = n.b // 2
        assert n.b % 2 == 0 and t % 3 and n.c % 3 and n.a % 3


def test_same_eigenvector_class():
    assert endo.same_eigenvector_class(3, 3, 83, 1, 1)
    assert not endo.same_eigenvector_class(3, 11, 83, 1, 1)


def test_kernel_ideal_crosscheck_example4():
    rep = endo.kernel_ideal_crosscheck(83, 1, 3, 1, 3, 0, EX1_RHO)
    assert rep.ok
    assert rep.ideal_norm == 3
    assert rep.right_order_disc == 83 ** 2
    assert all(rep.suborder_in_right_order.values())


def test_crosscheck_matches_pipeline_when_order_is_example1():
    # the Eichler order with q = 59 is a model of the Example 1 maximal order
    q = 59
    r = _sqrt_minus(83, q)
    assert canonical(quat.ternary_from_order(quat.eichler_order(83, 1, q, r))) == canonical(EX1_F)
    rep = endo.kernel_ideal_crosscheck(83, 1, q, r, 3, _sqrt_minus(q, 3), EX1_RHO)
    assert rep.pipeline_match
    assert rep.right_order_form == canonical(EX4_F)


def test_crosscheck_rejects_bad_m():
    with pytest.raises(PreconditionError):
        endo.kernel_ideal_crosscheck(83, 1, 3, 1, 5, 0)
