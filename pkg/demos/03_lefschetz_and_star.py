# The sl(2;R) action on the invariant complex, primitive forms, the
# explicit Lefschetz decomposition, and the symplectic star operator.
#
# Run with:  python demos/03_lefschetz_and_star.py

from fractions import Fraction

from sympcoh import (
    Form,
    build_lie_algebra,
    lefschetz_coefficient,
    parse_form,
    parse_structure_equations,
    validate_symplectic,
)

g = build_lie_algebra(parse_structure_equations("0,0,0,12,14-23,15+34"))
omega = parse_form("16+35+24", 6, degree=2)

# Validation checks d(omega) = 0 and omega^n != 0, materializes the
# operator blocks, and pins the contraction sign by asserting
# Lambda(omega) = n together with [Lambda, L] = H in every degree.
s = validate_symplectic(g, omega)
print("n =", s.n, " omega^n =", s.omega_top)

unit = Form.unit(6)
print("L(1)           =", s.L(unit))
print("Lambda(omega)  =", s.lam(s.omega))
print("H(e1)          =", s.h(Form.monomial(6, (1,))))

# Primitive forms: ker Lambda, equivalently ker L^{n-k+1} on degree k.
for k in range(4):
    print(f"dim P^{k} =", s.primitive_subspace(k).dim)

# The closed-form projector coefficients are exact rationals:
print("projector coefficient (r=1, l=0, n=3, k=3):", lefschetz_coefficient(1, 0, 3, 3))

# Decompose a 3-form into primitive pieces; the reassembly
# sum_r (1/r!) L^r B^{(k-2r)} returns the input on the nose, and an
# independent linear solve over the direct sum cross-checks uniqueness.
a = Form.monomial(6, (1, 3, 6))
parts = s.lefschetz_decompose(a)
print("e136 primitive part:", parts.component(0))
print("e136 lifted part:   ", parts.component(1), "(under 1/1! L)")
assert parts.reassemble(s) == a

# The star operator satisfies alpha ^ star(beta) = pairing(alpha, beta)
# times the Liouville volume omega^n / n!, is an involution, and
# conjugates L to Lambda.
print("star(1)   =", s.star(unit))
print("star(e1)  =", s.star(Form.monomial(6, (1,))))
e245 = Form.monomial(6, (2, 4, 5))
assert s.star(s.star(e245)) == e245
assert s.star(s.L(s.star(e245))) == s.lam(e245)
print("star involution and conjugation identities hold exactly")

# d^Lambda two ways: the commutator [d, Lambda] (normative) and the
# star route (-1)^k star d star; they agree identically.
assert s.d_lambda(e245) == s.d_lambda_star_route(e245)
print("d^Lambda(e245) =", s.d_lambda(e245))
