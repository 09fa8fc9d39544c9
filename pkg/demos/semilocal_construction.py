"""CRT elements in F_2[y] localized at 7 primes, and what they force.

Every span of at most two F_2-combinations of x_1, x_2, x_3 lands in one of
the seven maximal ideals, while x_1, x_2, x_3 together generate the unit
ideal.
"""

from redlab.onedim import build_model, construct_elements, verify_counterexample
from redlab.polyfield import PolyRing, monic_irreducibles

uni = PolyRing(2, ("y",))
primes = [f for _, f in zip(range(7), monic_irreducibles(uni))]
model = build_model(2, primes)
x = construct_elements(model, 2)
for j, f in enumerate(x.x, start=1):
    print(f"x_{j} = {f}")
rep = verify_counterexample(model, x, 2)
for cand, m in rep.covers:
    print(f"  span {cand.to_json()}  inside ({m})")
