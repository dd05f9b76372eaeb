"""
Structure-equation tuples
=========================

A finite-dimensional Lie algebra can be written down very compactly by
listing, for each dual basis element e^k, the expansion of its exterior
derivative d(e^k).  The tuple "(0,-12,13,0)" says

    d(e^1) = 0,  d(e^2) = -e^1 ^ e^2,  d(e^3) = e^1 ^ e^3,  d(e^4) = 0,

and because d(alpha)(X, Y) = -alpha([X, Y]) on one-forms, each entry
pins down the brackets with the opposite sign.
"""

from fractions import Fraction

from lcslie.notation import format_structure_equations, parse_structure_equations

g = parse_structure_equations("(0,-12,13,0)")
print("dimension:", g.dim)

# The -12 entry means d(e^2) has coefficient -1 on e^{12}, so the
# bracket [e1, e2] carries coefficient +1 on e2.
print("[e1, e2] =", g.basis_bracket(1, 2))
print("[e1, e3] =", g.basis_bracket(1, 3))

# Formatting inverts parsing exactly.
print("round trip:", format_structure_equations(g))

# Parameters are bound to exact rationals at parse time.  This family
# interpolates between algebras as λ moves.
family = parse_structure_equations("(0,-12,-λ13,0)", {"λ": Fraction(-1, 3)})
print("with λ = -1/3, [e1, e3] =", family.basis_bracket(1, 3))

# Coefficients may be full expressions over the parameters.
mixed = parse_structure_equations("(λ14,(1-λ)24,-12+34,0)", {"λ": Fraction(3)})
print("coefficient expressions:", format_structure_equations(mixed))

# Every parse verifies the Jacobi identity and refuses bracket tables
# that fail it, reporting a witness triple.
try:
    parse_structure_equations("(0,-12,-12+34,0)")
except ValueError as exc:
    print("rejected:", exc)
