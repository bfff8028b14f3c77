"""Walkthrough: the selector term, central elements, direct decomposition.

The selector q(x,y,z) = (x·y) + (α(x)·z) behaves as if-then-else on the
constants.  Elements for which it behaves as a *decomposition operator*
are the central ones; they form a Boolean algebra whose atoms cut the
algebra into directly indecomposable intervals.

Run:  python demos/04_center_and_decomposition.py
"""
import nearsemiring as nsr
from nearsemiring import fixtures

product = fixtures.fixture("MV3xBOOL2")

# Three independent detectors must agree element by element: the
# two-identity characterization, the selector conditions, and the
# factor-congruence test.
report = nsr.central_elements(product, "all")
print(report.render(product))

# The center is a Boolean algebra under the restricted operations.
center = nsr.center_algebra(product)
print(center.boolean_check.render())
print("atoms:", [product.label(e) for e in center.atoms])

# Each central element cuts off an interval [0, e] with complement e·α(x);
# the interval is again an integral involutive near semiring, and agrees
# with the quotient by the congruence joining e to 1.
e = center.atoms[1]
interval = nsr.interval_algebra(product, e)
theta = nsr.principal_congruence(product, e, product.one)
quotient = nsr.quotient_algebra(product, theta)
print()
print(f"[0, {product.label(e)}] carrier:", [product.label(x) for x in interval.carrier])
print("interval ≅ quotient:", nsr.are_isomorphic(interval.algebra, quotient) is not None)

# The full decomposition reads the factors off the atoms in one step and
# verifies the product map b -> (e1·b, ..., ek·b) is an isomorphism.
result = nsr.decompose(product)
print()
print(result.render(product))
for factor in result.factors:
    other = fixtures.fixture("MV3") if factor.algebra.n == 3 else fixtures.fixture("BOOL2")
    print(f"  factor of size {factor.algebra.n} isomorphic to {other.name}:",
          nsr.are_isomorphic(factor.algebra, other) is not None)

# MO2 has a trivial center, so it is directly indecomposable even though it
# has plenty of congruences-free structure.
mo2 = fixtures.fixture("MO2")
print()
print(nsr.central_elements(mo2).render(mo2))
print(nsr.decompose(mo2).render(mo2))
