"""Walkthrough: congruence lattices and the three witness-term families.

Run:  python demos/03_congruences_and_terms.py
"""
import nearsemiring as nsr
from nearsemiring import fixtures

# Congruences are partitions compatible with every operation.  BOOL4 is a
# product, so its lattice has exactly the two projection kernels between
# the identity and the full relation.
b4 = fixtures.fixture("BOOL4")
for theta in nsr.all_congruences(b4):
    print(theta.render(b4))

# Principal congruences by fixpoint closure: collapsing the atom (1,0) onto
# zero yields the kernel of the second projection.
theta = nsr.principal_congruence(b4, 2, 0)
print("θ((1,0), 0) blocks:", theta.blocks)

# The three-element chain is simple: identifying anything collapses it.
mv3 = fixtures.fixture("MV3")
print("θ(0, h) on MV3 is the full relation:",
      nsr.principal_congruence(mv3, 0, 1).is_full())

# Term conditions, verified exhaustively on every triple: the two
# regularity terms pin equality, the Mal'cev term forces congruences to
# permute, and the majority term forces the congruence lattice to be
# distributive.
for name in ("MV3", "MO2"):
    print()
    print(nsr.witness_term_checks(fixtures.fixture(name)).render())
    print(nsr.congruence_lattice_properties(fixtures.fixture(name)).render())

# Quotients: BOOL4 modulo a projection kernel is the two-element algebra.
q = nsr.quotient_algebra(b4, theta)
print()
print("BOOL4/θ is BOOL2 up to isomorphism:",
      nsr.are_isomorphic(q, fixtures.fixture("BOOL2")) is not None)
