"""Classes of maximal orders for a prime p and which of them the F_p pipeline reaches.

Lists every improperly primitive ternary form of Gram determinant 2p up to
equivalence, marks those that properly represent 2, and matches them with
the outputs of ``maxorder_over_fp`` over all admissible D.

    python demos/supersingular_census.py 83
"""

import itertools
import sys

from quatforms import ecverify as ec, endo, quat, terforms as tq
from quatforms.arith import primes_up_to
from quatforms.errors import PreconditionError
from quatforms.terforms import TernaryForm


def maximal_order_form_classes(p):
    # semi-reduced even-diagonal forms of det 2p; every class has a member here
    n = 2 * p
    out = set()
    for d1 in range(2, n + 1, 2):
        if d1 ** 3 > 2 * n:
            break
        for d2 in range(d1, n + 1, 2):
            if d1 * d2 * d2 > 2 * n:
                break
            for d3 in range(d2, 2 * n // (d1 * d2) + 1, 2):
                r1, r2 = range(-(d1 // 2), d1 // 2 + 1), range(-(d2 // 2), d2 // 2 + 1)
                for e12, e13, e23 in itertools.product(r1, r1, r2):
                    f = TernaryForm(d1, d2, d3, e23, e13, e12)
                    if f.det == n and f.is_positive_definite and f.tau == 1:
                        out.add(tq.canonical(f))
    return sorted(out)


def main(p):
    reached = {}
    for D in [1] + primes_up_to(p - 1):
        for disc in (-D, -4 * D):
            try:
                res = endo.maxorder_over_fp(p, D, disc)
            except PreconditionError:
                continue
            hilbert = ec.HILBERT_CONSTANT_TERMS.get(disc)
            j = ec.hilbert_root(disc, p) if hilbert is not None else None
            reached.setdefault(res.F, []).append((disc, j))
    print(f"p = {p}")
    for F in maximal_order_form_classes(p):
        two = tq.represents_properly(F, 2) is not None
        has_i = quat.find_element(quat.clifford_order(F)[1], 0, 1) is not None
        discs = ", ".join(f"{d}" + (f" (j = {j})" if j is not None else "") for d, j in reached.get(F, []))
        print(f"  {str(F):40s} reps 2: {str(two):5s} sqrt(-1): {str(has_i):5s} from: {discs or '-'}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 83)
