"""
Coefficient valuations can grow without bound
=============================================

Over Q(t), the ideal generated by x+z and x^2+(1+t^a)xz+xy with weights
(1, a, 2a) has every input coefficient of valuation zero, yet its reduced
basis contains t^a: no bound on output valuations can depend only on the
input valuations.  (Over the p-adics, absolute values of the inputs do give
a bound; see the bounds module.)
"""

from valgb import GREVLEX, Qt, WeightedOrder, buchberger, reduce_basis
from valgb.parsing import parse_polynomial
from valgb.polynomials import poly_to_str

qt = Qt()
names = ["x", "y", "z"]

for a in (3, 5, 10):
    f = parse_polynomial("x+z", qt, names)
    g = parse_polynomial(f"x^2+(1+t^{a})*x*z+x*y", qt, names)
    order = WeightedOrder((1, a, 2 * a), GREVLEX)
    basis = reduce_basis(buchberger([f, g], order))
    printed = ", ".join(poly_to_str(p, names) for p in basis.elements)
    worst = max(qt.val(c) for p in basis.elements for c in p.terms.values())
    print(f"a = {a:2d}: reduced basis {{{printed}}}, max coefficient valuation {worst}")
