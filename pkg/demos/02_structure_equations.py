# From compact structure equations to a validated Lie algebra and its
# invariant de Rham (Chevalley-Eilenberg) cohomology.
#
# Run with:  python demos/02_structure_equations.py

from sympcoh import (
    JacobiViolation,
    build_lie_algebra,
    check_properties,
    de_rham_cohomology,
    parse_structure_equations,
    render_structure,
)

# The tuple notation lists d e^k per generator: "0^3,12,14-23,15+34"
# says the first three coframe elements are closed, d e^4 = e^1 ^ e^2,
# d e^5 = e^14 - e^23 and d e^6 = e^15 + e^34.
eqs = parse_structure_equations("0^3,12,14-23,15+34")
print("parsed entries:", render_structure(eqs))

# The constructor extends d to all degrees as an odd derivation and
# rejects anything with d^2 != 0 (the Jacobi identity).
g = build_lie_algebra(eqs)
print("properties:", check_properties(g))

try:
    build_lie_algebra(parse_structure_equations("0,0,0,12,13,14+25"))
except JacobiViolation as exc:
    print("rejected invalid input:", exc)

# Cohomology with harmonic representatives: the canonical basis of the
# orthogonal complement of the exact forms inside the closed forms.
spaces = de_rham_cohomology(g)
print("betti numbers:", [space.dim for space in spaces])
for space in spaces[:4]:
    reps = ", ".join(str(rep) for rep in space.representatives) or "-"
    print(f"  H^{space.degree} (dim {space.dim}): {reps}")

# Classes are coordinates against those representatives; exact forms map
# to zero.
from sympcoh import Form

exact = g.d(Form.monomial(6, (4, 6)))
print("class of an exact 3-form:", spaces[3].class_of(exact))
