"""
Qutrits and d-level qudits
==========================

For d symbol values the Boole polynomial is x(x-1)...(x-d+1).  Row k of the
ket is the Lagrange polynomial that is 1 at k and 0 at the other roots.
"""

from booleket import (
    completeness_sum,
    lagrange_component,
    projector,
    reduce_mod_boole,
    symbolic_ket,
    symbolic_projector,
)
from booleket.render import render_symbolic_ket

# The qutrit ket, in factored and expanded form
print(render_symbolic_ket(symbolic_ket(3), "latex"))
print(render_symbolic_ket(symbolic_ket(3), "text"))

# The three qutrit projectors
for m in range(3):
    print(f"P({m}) diagonal:", [str(v) for v in projector(3, m).diagonal()])

# For d = 4 the trace of P(x) is the constant polynomial 1, before any
# reduction, and the projectors sum to the identity
print(render_symbolic_ket(symbolic_ket(4), "latex"))
print("Tr P(x) =", symbolic_projector(4).trace())
print("sum_x P(x) is identity:", completeness_sum(4).is_identity())

# Idempotency and orthogonality hold modulo the Boole polynomial for any d
d = 9
ls = [lagrange_component(d, k) for k in range(d)]
print("idempotent:", all(reduce_mod_boole(p * p, d) == p for p in ls))
print("orthogonal:", all(reduce_mod_boole(ls[j] * ls[k], d).is_zero()
                         for j in range(d) for k in range(j + 1, d)))
