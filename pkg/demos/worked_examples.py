"""Walk through the four worked examples: curve, binary form, ternary form, order.

Run with ``python demos/worked_examples.py``.
"""

from quatforms import binforms as bq, ecverify as ec, endo, quat, terforms as tq
from quatforms.binforms import BinaryForm
from quatforms.terforms import TernaryForm


def show(title, res, printed):
    print(f"== {title}")
    print(f"   rho            {res.rho}  (reduced {bq.reduced(res.rho)})")
    print(f"   F (canonical)  {res.F}")
    print(f"   printed form   {printed}  equivalent: {tq.equivalent(res.F, printed) is not None}")
    print(f"   order disc     {quat.order_disc(res.order)}")
    table = quat.relation_strings(quat.clifford_presentation(printed))
    print("   relations on the printed form: " + ", ".join(table))
    print()


def main():
    E = ec.CurveModel(77, 12, 83)
    print(f"y^2 = x^3 + 77x + 12 over F_83: j = {ec.j_invariant(E)}, #E = {ec.count_points(E)}")
    show("D = 7 over F_83", endo.maxorder_over_fp(83, 7, -7), TernaryForm.from_coefficients(2, 4, 24, -2, 0, -2))

    E = ec.CurveModel(39, 23, 101)
    print(f"y^2 = x^3 + 39x + 23 over F_101: j = {ec.j_invariant(E)}, #E = {ec.count_points(E)}")
    show("Z[sqrt(-3p)]-oriented, p = 101, D = 11", endo.maxorder_oriented(101, 3, 11, -11),
         TernaryForm.from_coefficients(6, 2, 20, 2, 6, 2))

    rho, varrho = BinaryForm(7, 4, 48), BinaryForm(3, 2, 111)
    print(f"(7,4,48) * (3,2,111)^2 = {bq.compose(rho, bq.power(varrho, 2))}")
    show("oriented 3-isogeny", endo.oriented_isogeny_action(83, 1, rho, varrho),
         TernaryForm.from_coefficients(2, 8, 12, -6, -2, 0))

    for res in endo.nonoriented_isogeny(83, 1, rho, 3):
        print(f"derived form with symbol +1: h = {res.context['h']}, {res.context['derived']}")
        show("non-oriented 3-isogeny", res, TernaryForm.from_coefficients(4, 6, 8, 4, -2, -2))


if __name__ == "__main__":
    main()
