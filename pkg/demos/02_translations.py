"""Walkthrough: translating between near semirings and companion structures.

The exchange identity α(x·α(y))·α(y) = α(y·α(x))·α(x) carves out the
near semirings that correspond to basic algebras; adding x = x·(x+y) carves
out the ones that correspond to orthomodular lattices.  Both translations
are exact round trips on the same carrier.

Run:  python demos/02_translations.py
"""
import nearsemiring as nsr
from nearsemiring import fixtures

# The three-element chain: + is max, the product is the truncated sum
# product, and the involution is the order flip.
mv3 = fixtures.fixture("MV3")
print(nsr.check_lukasiewicz(mv3).render())     # semiring tag: product associative

basic = nsr.basic_from_lns(mv3)
print()
print("recovered ⊕ table (truncated sum):")
print(basic.oplus)
print(nsr.check_basic_algebra(basic).render())

back = nsr.lns_from_basic(basic)
print()
print("round trip is the identity:", back.same_tables(mv3))
print(nsr.roundtrip_check(mv3, "basic").render())

# MO2: the smallest orthomodular lattice that is not Boolean.  Its product
# is the projection x·y = (x ∨ y') ∧ y, which is *not* commutative.
lattice = fixtures.mo2_ortholattice()
mo2 = nsr.ons_from_oml(lattice)
a, b = 1, 3
print()
print(f"a·b = {mo2.label(int(mo2.mul[a, b]))},  b·a = {mo2.label(int(mo2.mul[b, a]))}")
print(nsr.check_orthomodular_ns(mo2).render())
print(nsr.roundtrip_check(mo2, "oml").render())

# On a Boolean lattice the projection collapses to the meet.
import numpy as np
b4lat = fixtures.bool4_ortholattice()
print()
print("projection == meet on BOOL4:",
      np.array_equal(nsr.ons_from_oml(b4lat).mul, b4lat.meet))

# The translated basic algebra of MO2 is not an MV-algebra: ⊕ fails
# associativity exactly because MO2 is not Boolean.
mo2_basic = nsr.basic_from_lns(mo2)
print("MO2 basic algebra has associative ⊕:",
      nsr.check_basic_algebra(mo2_basic).tag("mv"))
