"""
p-adic bases can be much smaller than classical ones
====================================================

Take two generic ternary forms of even degree d = 2e whose only odd
coefficients sit on x1^d and x2^e*x3^e.  Their 2-adic leading monomials are
coprime, so the single S-pair is skipped and the 2-adic reduced basis has
two elements for every d.  Any classical reduced basis needs at least
(d+3)/2 elements, a gap that grows with the degree.
"""

import math

from valgb import cardinality_report
from valgb.cardinality import default_orders

# e = 3 (degree-6 forms) is reachable but its classical bases take minutes;
# the gap is already visible at quadrics and quartics
print("e,d,seed,padic_size,order,standard_size,bound")
for e in (1, 2):
    for seed in range(3):
        rep = cardinality_report(e, default_orders(e), seed=seed)
        bound = math.ceil(rep.lower_bound)
        for label, size in rep.standard_sizes.items():
            print(f"{rep.e},{rep.degree},{rep.seed},{rep.padic_size},{label},{size},{bound}")
