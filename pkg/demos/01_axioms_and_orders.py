"""Walkthrough: loading tables, axiom profiles, induced orders, duality.

Run:  python demos/01_axioms_and_orders.py
"""
import nearsemiring as nsr
from nearsemiring import fixtures

# A near semiring is a pair of operation tables plus two constants.  EX24 is
# a tiny three-element example whose sum and product both induce orders,
# but *different* ones.
ex24 = fixtures.fixture("EX24")
print("EX24 sum table:")
print(ex24.add)
print("EX24 product table:")
print(ex24.mul)

# The integrality axiom x+1 = 1 fails here, and the report pins the exact
# witness.
report = nsr.check_axioms(ex24, "integral")
print()
print(report.render())

# The sum order is the chain 0 < 1 < a; the product order is 0 < a < 1.
for which in ("sum", "mul"):
    order = nsr.induced_order(ex24, which)
    print(f"{which} order covers: "
          + ", ".join(f"{ex24.label(x)}<{ex24.label(y)}" for x, y in order.covers()))

# EX28 carries an involution.  It is a perfectly good involutive near
# semiring, yet not integral: the top of its sum order is not the unit.
ex28 = fixtures.fixture("EX28")
print()
print(nsr.check_axioms(ex28, "involutive").render())
print(nsr.check_axioms(ex28, "integral").render())
print("α(0) =", ex28.label(int(ex28.inv[ex28.zero])), "(so integrality must fail)")

# The involution gives a dual algebra on the same carrier, with the roles of
# the constants swapped; dualising twice gives back the original tables.
dual = nsr.dual_algebra(ex28)
print()
print("dual constants:", dual.zero, dual.one)
print("dual(dual(EX28)) == EX28:", nsr.dual_algebra(dual).same_tables(ex28))

# Every arithmetical fact in the core suite is checked exhaustively.
print()
print(nsr.core_property_suite(ex28).render())
