"""
Qubit kets from the Boole equation
==================================

The classical bit satisfies x^2 = x, so x is 0 or 1.  Writing the ket as a
column of polynomials in x and substituting those two values recovers the
computational basis.
"""

from booleket import X, boole_poly, basis_ket, reduce_mod_boole, symbolic_ket, symbolic_projector

# The Boole polynomial for two symbol values
print("Boole polynomial:", boole_poly(2).poly)

# The symbolic ket |x> = (1-x, x)
ket = symbolic_ket(2)
print("|x> =", [str(p) for p in ket.entries])

# Substituting the classical values gives |0> and |1>
for m in (0, 1):
    print(f"|{m}> =", ket.evaluate(m))

# The projector P(x) = diag(1-x, x) squares to itself once x^2 is
# replaced by x, i.e. modulo the Boole polynomial
P = symbolic_projector(2)
print("P(x) diagonal:", [str(p) for p in P.diagonal])
print("P(x)^2 mod (x^2 - x):", [str(p) for p in P.squared_mod_boole()])
print("trace:", P.trace())

# The two identities behind it
print("x^2 mod:", reduce_mod_boole(X * X, 2))
print("(1-x)^2 mod:", reduce_mod_boole((1 - X) * (1 - X), 2))

# The numeric kets come from evaluating the polynomials, not by fiat
print(basis_ket(2, 1))
