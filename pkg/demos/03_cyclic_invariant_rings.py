"""Invariant rings of cyclic diagonal actions of prime order.

A generator of Z_p acts by x -> w^a x, y -> w^b y for a primitive p-th
root of unity w.  When both weights are nonzero the invariant ring needs
at least three generators (so it is singular), the ramification of the
quotient map is concentrated at the origin, and the local fundamental
group has order exactly p.  When one weight vanishes the ring is a
polynomial ring and the group is trivial.
"""

from valsweep.quotient import (DiagonalAction, invariant_generators,
                               pi1_order, ramification_minors)

action = DiagonalAction(order=5, a=1, b=2)
full, minimal = invariant_generators(action)
print("order 5, weights (1, 2)")
print("  full generator list:", full)
print("  minimal generators:", minimal)
wit = ramification_minors(action)
print("  witness minors: %d * y^%d and %d * x^%d"
      % (wit.coefficient, wit.y_witness[1], wit.coefficient, wit.x_witness[0]))
print("  pi_1 order:", pi1_order(action))

action = DiagonalAction(order=5, a=0, b=1)
_, minimal = invariant_generators(action)
print("\norder 5, weights (0, 1)")
print("  minimal generators:", minimal)
print("  pi_1 order:", pi1_order(action))
