# Exterior algebra basics: sparse rational forms, wedge products,
# contraction, and the canonical text rendering.
#
# Run with:  python demos/01_exterior_algebra.py

from fractions import Fraction

from sympcoh import Bivector, Form, contract, interior, monomial_basis, wedge

# Forms live over the dual of an m-dimensional space; the degree-k
# monomials are strictly increasing index tuples in lexicographic order.
print("degree-2 monomials over dim 4:", monomial_basis(4, 2))

# Build forms from monomials.  Unsorted indices are normalized and pick
# up the permutation sign, so e^{62} is -e^{26}.
e1 = Form.monomial(6, (1,))
e2 = Form.monomial(6, (2,))
print("e1 ^ e2        =", wedge(e1, e2))
print("e2 ^ e1        =", wedge(e2, e1))
print("e^{62}         =", Form.monomial(6, (6, 2)))

# A merge permutation of negative parity:
e13 = Form.monomial(4, (1, 3))
e24 = Form.monomial(4, (2, 4))
print("e13 ^ e24      =", wedge(e13, e24))

# All coefficients are exact rationals.
alpha = Form(6, 2, {(1, 6): 1, (3, 5): 1, (2, 4): 1})
beta = alpha * Fraction(1, 3) - Form.monomial(6, (1, 6), Fraction(1, 3))
print("scaled sum     =", beta)

# Wedge powers: alpha is a symplectic candidate, and its top power is
# the volume it induces.
cubed = wedge(wedge(alpha, alpha), alpha)
print("alpha^3        =", cubed)

# Interior products: iota with a basis vector drops the degree by one,
# contraction with a bivector by two.
gamma = Form.monomial(6, (1, 3, 6))
print("iota_1 e136    =", interior(1, gamma))
pi = Bivector(6, {(1, 6): 1, (3, 5): 1, (2, 4): 1})
print("iota_Pi e136   =", contract(pi, gamma))
