"""
Valued fields and initial forms
===============================

A valuation val: K* -> Z grades every coefficient; together with a weight
vector w it grades every term of a polynomial by val(c) + w.u.  The initial
form keeps the terms of minimal grade, with coefficients pushed into the
residue field.  Different weights select different faces of the same
polynomial.
"""

from valgb import Qp, Qt, RatFunc, initial_form, trop_weight
from valgb.parsing import parse_polynomial
from valgb.polynomials import poly_to_str

# Q with the 3-adic valuation: val(18) = 2 because 18 = 2 * 3^2
field = Qp(3)
f = parse_polynomial("3x^2+x*y+18y^2", field, ["x", "y"])
print("f =", poly_to_str(f, ["x", "y"]), "over", field.label)

for w in [(0, 0), (1, 4), (2, 0)]:
    form = initial_form(f, w)
    print(f"  w={w}: weight {trop_weight(f, w)}, initial form {poly_to_str(form, ['x', 'y'])}"
          f" over {form.field.label}")

# the same machinery over Q(t) with the t-adic valuation
qt = Qt()
g = parse_polynomial("t^2*x + (1+t)*y", qt, ["x", "y"])
print("\ng =", poly_to_str(g, ["x", "y"]), "over", qt.label)
print("  val of t^5/(1+t):", qt.val(RatFunc((0, 0, 0, 0, 0, 1), (1, 1))))
for w in [(0, 0), (3, 0)]:
    print(f"  w={w}: initial form {poly_to_str(initial_form(g, w), ['x', 'y'])}")
