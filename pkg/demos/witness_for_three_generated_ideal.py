"""A two-generated reduction of the three-generated ideal in F_2[x,y].

I = (g1, g2, g3) with
    g1 = x^2*y + x*y^2
    g2 = x*y^5 + x*y^4 + x*y^3 + x^3
    g3 = y^8 + x*y^3 + x^3 + x*y^2
and J = (g1 + g3, g2 + g3).  The script prints the power identity found by
the engine, then re-checks it with plain linear algebra on truncated
polynomial spaces (no standard bases involved).
"""

import itertools

from redlab.groebner import RingSpec
from redlab.localred import check_reduction, multiplicity

R = RingSpec(2, ("x", "y"), equidimensional=True)
g1, g2, g3 = (R(t) for t in ("x^2*y+x*y^2", "x*y^5+x*y^4+x*y^3+x^3", "y^8+x*y^3+x^3+x*y^2"))
I = R.ideal(g1, g2, g3)
J = R.ideal(g1 + g3, g2 + g3)

print("J =", J)
print("check_reduction(J, I):", check_reduction(J, I))
print("e(I) =", multiplicity(I).e, " e(J) =", multiplicity(J).e)


def truncated_colength(polys, N):
    """dim F_2[x,y]/(polys + m^N), by Gaussian elimination on bit rows."""
    mons = [(a, d - a) for d in range(N) for a in range(d + 1)]
    col = {m: k for k, m in enumerate(mons)}
    pivots = {}
    for f in polys:
        for a, b in mons:
            row = 0
            for (i, j), c in f.terms.items():
                if i + a + j + b < N and c % 2:
                    row ^= 1 << col[(i + a, j + b)]
            while row:
                top = row.bit_length() - 1
                if top not in pivots:
                    pivots[top] = row
                    break
                row ^= pivots[top]
    return len(mons) - len(pivots)


gens = [g1, g2, g3]
I2 = [a * b for a, b in itertools.combinations_with_replacement(gens, 2)]
I3 = [a * b for a in gens for b in I2]
JI2 = [a * b for a in J.gens for b in I2]
N = 28
c27, c28 = truncated_colength(I3, N - 1), truncated_colength(I3, N)
c28J = truncated_colength(JI2, N)
print(f"dim P/(I^3 + m^27) = {c27}, dim P/(I^3 + m^28) = {c28}, dim P/(J I^2 + m^28) = {c28J}")
print("so m^27 lies in I^3 near the origin and I^3 = J I^2 there:", c27 == c28 == c28J)
