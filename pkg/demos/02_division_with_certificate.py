"""
Division with a certificate
===========================

Naive reduction over a valued field can loop forever: dividing x by
{x-2y, y-2z, z-2x} with the 2-adic valuation walks x -> 2y -> 4z -> 8x -> ...
The tangent-cone style division records intermediate states as extra
divisors and terminates, returning quotients h_i and a strong normal form r
with f = sum h_i g_i + r exactly.
"""

from valgb import Qp, TermOrder, WeightedOrder, normal_form
from valgb.parsing import parse_polynomial
from valgb.polynomials import poly_to_str

field = Qp(2)
names = ["x", "y", "z"]


def show(result, divisors):
    for i, h in enumerate(result.quotients, 1):
        print(f"  h{i} = {poly_to_str(h, names)}")
    print(f"  r  = {poly_to_str(result.remainder, names)}   ({result.step_count} steps)")


# the looping example: the division closes the cycle in four steps
gens = [parse_polynomial(s, field, names) for s in ("x-2y", "y-2z", "z-2x")]
x = parse_polynomial("x", field, names)
print("divide x by {x-2y, y-2z, z-2x}, w = 0:")
show(normal_form(x, gens, WeightedOrder((0, 0, 0))), gens)

# a worked division under a nontrivial weight, with the step trace
f = parse_polynomial("x^2+y^2+z^2", field, names)
g = parse_polynomial("y+16z", field, names)
order = WeightedOrder((3, 2, 1), TermOrder("lex", (2, 1, 0)))  # x < y < z
print("\ndivide x^2+y^2+z^2 by {y+16z}, w = (3,2,1):")
result = normal_form(f, [g], order, trace=True)
for step in result.trace:
    print("  " + step.line(names))
show(result, [g])
