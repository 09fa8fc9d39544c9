"""Which linear forms generate a reduction of the maximal ideal?

Over F_2 there are only three lines through the origin in the plane, so a
curve made of three lines leaves no room for a principal reduction.  On the
cone z^2 = xy the same three lines sit differently and x + y + z works.
"""

from redlab.groebner import RingSpec
from redlab.redsearch import candidate_ideal, find_r_generated_reduction

CURVES = {
    "three lines in the plane": RingSpec(2, ("x", "y"), ("x^2*y+x*y^2",), equidimensional=True),
    "three lines on the cone": RingSpec(2, ("x", "y", "z"), ("z^2+x*y", "x^2*y+x*y^2"), equidimensional=True),
    "four lines on the cone": RingSpec(2, ("x", "y", "z"), ("z^2+x*y", "x^3*y+x*y^3+x^2*y*z+x*y^2*z"),
                                       equidimensional=True),
}

for name, R in CURVES.items():
    m = R.maximal
    rep = find_r_generated_reduction(m, 1, exhaustive=True, jobs=1)
    print(name)
    for cand, verdict in rep.results:
        print(f"   {str(candidate_ideal(m, cand).gens[0]):<12} {verdict}")
