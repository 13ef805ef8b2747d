"""Lattice quotients, dual cones, and Hilbert bases for 2x2 exponent data.

A 2x2 integer matrix A records the exponents of two monomials in two
variables.  Three independent computations describe the ring generated
by those monomials inside the power-series ring below it:

  * the Smith normal form of A gives the quotient lattice Z^2 / A Z^2,
  * the Hilbert basis of the dual cone of the rows gives a minimal
    monomial generating set (the embedding dimension),
  * the determinant test says the ring is regular iff the rows span the
    lattice up to sign, i.e. |det| of the primitive rows is 1.
"""

from valsweep.toric import (below_ring_regularity, dual_cone_2d,
                            hilbert_basis_2d, smith_normal_form)

A = ((7, 9), (2, 1))
print("matrix A:", A)

form = smith_normal_form(A)
print("Smith diagonal:", form.diagonal())
print("quotient invariants (Z^2 / A Z^2):", form.quotient_invariants())

rays = dual_cone_2d(A)
print("\ndual cone rays:", rays)
basis = hilbert_basis_2d(rays)
print("Hilbert basis:", basis.generators)

verdict = below_ring_regularity(A)
print("\nregular:", verdict.regular)
print("embedding dimension:", verdict.embedding_dim)
print("determinant:", verdict.det)

print("\nA unimodular example for contrast:")
verdict = below_ring_regularity(((1, 1), (0, 1)))
print("regular:", verdict.regular, " embedding dim:", verdict.embedding_dim)
