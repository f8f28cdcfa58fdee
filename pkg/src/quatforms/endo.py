"""Maximal orders of supersingular endomorphism rings from binary and ternary forms.

Every pipeline ends the same way: a binary form rho of discriminant
-16 c p (times l^2 after a non-oriented isogeny) is represented by a
ternary form f with invariants (2p, 1); its reciprocal F has discriminant
p and its even Clifford order is the maximal order we are after.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from . import binforms as bq
from .arith import is_prime, kronecker
from .binforms import BinaryForm
from .errors import ContractError, PreconditionError
from .quat import (
    AlgebraPresentation,
    OrderLattice,
    clifford_order,
    eichler_order,
    eichler_order_cl2,
    ideal_norm,
    left_ideal,
    left_order,
    order_disc,
    relation_strings,
    right_order,
    ternary_from_order,
)
from .terforms import (
    BinaryRepresentation,
    TernaryForm,
    canonical,
    disc as ternary_disc,
    invariants,
    represent_binary,
    represents_properly,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EndoResult:
    rho: BinaryForm
    F: TernaryForm  # canonical representative
    algebra: AlgebraPresentation = field(repr=False)
    order: OrderLattice = field(repr=False)
    context: dict = field(compare=False)
    witness: tuple | None  # primitive v with F(v) = 2c; None for non-oriented codomains
    constructed: BinaryRepresentation = field(repr=False, compare=False)

    @property
    def relations(self) -> list[str]:
        return relation_strings(self.algebra)


def _check_pc(p: int, c: int):
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    if not (c == 1 or (is_prime(c) and c != p)):
        raise PreconditionError(f"c = {c} must be 1 or a prime different from p")


def _finish(p: int, c: int, rho: BinaryForm, rep: BinaryRepresentation, context: dict, oriented: bool = True) -> EndoResult:
    F = canonical(rep.F)
    inv = invariants(F)
    if ternary_disc(F) != p or inv.sigma != 2 or inv.tau != 1:
        raise ContractError(f"{F} has invariants {inv}; expected disc {p}, sigma 2, tau 1")
    alg, O = clifford_order(F)
    if order_disc(O) != p * p:
        raise ContractError(f"order discriminant {order_disc(O)} is not p^2")
    w = represents_properly(F, 2 * c)
    if w is None and oriented:
        raise ContractError(f"{F} does not represent 2c = {2 * c} properly")
    return EndoResult(rho, F, alg, O, context, tuple(w) if w else None, rep)


def _representations(rho: BinaryForm, C: int, p: int) -> list[BinaryRepresentation]:
    return represent_binary(rho, C, 2 * p)


def eichler_to_maximal(p: int, c: int, rho: BinaryForm) -> EndoResult:
    """Maximal order whose ternary form represents rho (disc -16cp) with C = 2c."""
    _check_pc(p, c)
    if rho.disc != -16 * c * p:
        raise PreconditionError(f"{rho} has discriminant {rho.disc}, expected -16cp = {-16 * c * p}")
    reps = _representations(rho, 2 * c, p)
    if not reps:
        raise PreconditionError(f"{rho} is not represented by any ternary form with C = {2 * c}: congruences unsolvable")
    if len(reps) > 1:
        # the two sign branches must land in one class
        raise ContractError(f"{rho} produced {len(reps)} inequivalent ternary forms")
    return _finish(p, c, rho, reps[0], {"p": p, "c": c})


def _check_embedding(p: int, c: int, D: int, embedding_disc: int):
    if embedding_disc not in (-D, -4 * D):
        raise PreconditionError("embedding_disc must be -D or -4D")
    if kronecker(embedding_disc, p) != -1:
        raise PreconditionError(
            f"({embedding_disc}/{p}) = {kronecker(embedding_disc, p)}: p is not inert, so no supersingular j lies over this order"
        )


def maxorder_over_fp(p: int, D: int, embedding_disc: int) -> EndoResult:
    """End(E) for E/F_p whose j is a root of the class polynomial of disc -D or -4D."""
    return maxorder_oriented(p, 1, D, embedding_disc)


def maxorder_oriented(p: int, c: int, D: int, embedding_disc: int) -> EndoResult:
    _check_pc(p, c)
    _check_embedding(p, c, D, embedding_disc)
    rho = bq.form_from_embedding(p, c, D, embedding_disc)
    res = eichler_to_maximal(p, c, rho)
    res.context.update(D=D, embedding_disc=embedding_disc)
    return res


def oriented_isogeny_action(p: int, c: int, rho_E: BinaryForm, varrho: BinaryForm) -> EndoResult:
    """Codomain of the oriented isogeny whose kernel ideal class is varrho: rho_E * varrho^2."""
    _check_pc(p, c)
    for f in (rho_E, varrho):
        if f.disc != -16 * c * p:
            raise PreconditionError(f"{f} has discriminant {f.disc}, expected {-16 * c * p}")
    if not varrho.is_primitive:
        raise PreconditionError(f"{varrho} is not primitive")
    rho_new = bq.compose(rho_E, bq.power(varrho, 2))
    res = eichler_to_maximal(p, c, rho_new)
    res.context.update(rho_E=rho_E, varrho=varrho)
    return res


def _lead_coprime(g: BinaryForm, m: int) -> BinaryForm:
    """An SL2-equivalent form whose leading coefficient is prime to m."""
    if g.a % m and math.gcd(g.a, m) == 1:
        return g
    _, (x, y) = bq.coprime_value(g, m)
    _, u, v = bq._xgcd(x, y)
    # [[x, -v], [y, u]] has determinant x u + y v = 1
    return g.transform(((x, -v), (y, u)))


def normalize_derived(g: BinaryForm, c: int, ell: int) -> BinaryForm:
    """Translate so that c | t and l does not divide 2abt, with g = (a, 2t, b)."""
    g = _lead_coprime(g, 2 * c * ell)
    if ell == c:
        return g
    for k in range(2 * c * ell * ell):
        h = g.transform(((1, k), (0, 1)))
        t = h.b // 2
        if t % c == 0 and t % ell and h.c % ell:
            return h
    raise ContractError(f"no translate of {g} has c | t and l not dividing 2abt")


def nonoriented_isogeny(p: int, c: int, rho_E: BinaryForm, ell: int) -> list[EndoResult]:
    """Candidates for End(E'), End(E'') after an l-isogeny that need not be oriented.

    One candidate per admissible derived form when c = 1 or l = c, up to
    two (left undistinguished) otherwise.
    """
    _check_pc(p, c)
    if not is_prime(ell):
        raise PreconditionError(f"l = {ell} is not prime")
    if rho_E.disc != -16 * c * p:
        raise PreconditionError(f"{rho_E} has discriminant {rho_E.disc}, expected {-16 * c * p}")
    if ell != c and (2 * c * p) % ell == 0:
        raise PreconditionError(f"l = {ell} must not divide 2cp unless l = c")
    derived = bq.admissible_derived_forms(rho_E, ell)
    if ell != c:
        expected = bq.expected_admissible_count(rho_E, ell)
        if len(derived) != expected:
            raise ContractError(f"{len(derived)} admissible derived forms, expected {expected}")
    if not derived:
        raise PreconditionError(f"{rho_E} has no derived form with symbol +1 at l = {ell}")
    results = []
    for h, g in derived:
        rho = normalize_derived(g, c, ell)
        reps = _representations(rho, 2 * c * ell * ell, p)
        if not reps:
            raise ContractError(f"derived form {rho} is not represented with C = {2 * c * ell * ell}")
        limit = 1 if (c == 1 or ell == c) else 2
        if len(reps) > limit:
            raise ContractError(f"derived form {rho} gave {len(reps)} classes, at most {limit} expected")
        for idx, rep in enumerate(reps):
            ctx = {"p": p, "c": c, "ell": ell, "h": h, "derived": g, "candidate": idx}
            results.append(_finish(p, c, rho, rep, ctx, oriented=False))
    return results


def same_eigenvector_class(q1: int, q2: int, p: int, c: int, ell: int, primed: bool = False) -> bool:
    """Whether q1 q2 (4 q1 q2 for the primed orders) is represented by x^2 + 4l^2cp y^2 (x^2 + l^2cp y^2)."""
    if primed:
        return bq.represents(BinaryForm(1, 0, ell * ell * c * p), 4 * q1 * q2) is not None
    return bq.represents(BinaryForm(1, 0, 4 * ell * ell * c * p), q1 * q2) is not None


@dataclass(frozen=True)
class CrosscheckReport:
    ideal: OrderLattice
    ideal_norm: int
    left_order_ok: bool
    right_order_disc: int
    suborder_in_order: bool
    suborder_in_right_order: dict  # m' -> bool, for m and m + l
    right_order_form: TernaryForm
    pipeline_forms: list
    pipeline_match: bool | None
    ideal_norm_ok: bool
    disc_ok: bool

    @property
    def ok(self) -> bool:
        return self.left_order_ok and self.suborder_in_order and self.ideal_norm_ok and self.disc_ok


def kernel_ideal(O: OrderLattice, ell: int, m: int) -> OrderLattice:
    one, i, _, _ = O.alg.gens
    return left_ideal(O, [ell * one, i - m * one])


def kernel_ideal_crosscheck(p: int, c: int, q: int, r: int, ell: int, m: int, rho: BinaryForm | None = None) -> CrosscheckReport:
    """Check the kernel ideal O(l, beta - m) of an Eichler order against the form-level pipeline.

    If rho (the binary form of O) is given and c = 1, the right order's
    ternary form is compared with the classes from nonoriented_isogeny.
    """
    if (m * m + q) % ell:
        raise PreconditionError(f"m = {m} does not satisfy m^2 = -q (mod l)")
    O = eichler_order(p, c, q, r)
    I = kernel_ideal(O, ell, m)
    n = ideal_norm(I)
    lo_ok = left_order(I) == O
    OR = right_order(I)
    d = order_disc(OR)
    sub = eichler_order_cl2(p, c, q, r, ell)
    containment = {}
    for mm in (m, m + ell):
        containment[mm] = sub.issubset(right_order(kernel_ideal(O, ell, mm)))
    form = canonical(ternary_from_order(OR))
    pipeline_forms: list = []
    match = None
    if rho is not None and c == 1:
        pipeline_forms = [res.F for res in nonoriented_isogeny(p, c, rho, ell)]
        match = form in pipeline_forms
    rep = CrosscheckReport(
        ideal=I,
        ideal_norm=n,
        left_order_ok=lo_ok,
        right_order_disc=d,
        suborder_in_order=sub.issubset(O),
        suborder_in_right_order=containment,
        right_order_form=form,
        pipeline_forms=pipeline_forms,
        pipeline_match=match,
        ideal_norm_ok=(n == ell),
        disc_ok=(d == (c * p) ** 2),
    )
    if not rep.ok:
        raise ContractError(f"kernel ideal checks failed: {rep}")
    return rep
